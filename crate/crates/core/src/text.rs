//! Shared helpers for the whitespace-separated text formats.

/// A whitespace-delimited token with its ordinal and byte offset in the input.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub index: usize,
    pub offset: usize,
    pub text: &'a str,
}

pub(crate) fn tokens(input: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in input.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { index: out.len(), offset: s, text: &input[s..i] });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { index: out.len(), offset: s, text: &input[s..] });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_track_bytes() {
        let t = tokens("  A^2\tB  x");
        let got: Vec<_> = t.iter().map(|t| (t.index, t.offset, t.text)).collect();
        assert_eq!(got, vec![(0, 2, "A^2"), (1, 6, "B"), (2, 9, "x")]);
        assert!(tokens("   ").is_empty());
    }
}
