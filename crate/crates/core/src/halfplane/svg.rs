//! SVG rendering of the strip of domains `Bₙ` and their images under short
//! words in the free generators.
//!
//! Path data is written in half-plane coordinates; a single `matrix(...)`
//! transform on the enclosing group maps them to the viewport with the
//! imaginary axis pointing up.

use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;

use super::{mobius_apply, mobius_boundary, domain_b, ExtReal, HPoint};
use crate::error::Result;
use crate::sl2::Mat2Z;
use crate::word::{Alphabet, FreeGen, FreeWord};

#[derive(Debug, Clone, Copy)]
pub struct SvgOptions {
    /// Pixels per unit of the half-plane.
    pub scale: f64,
    /// Height at which cusps at `∞` are clipped.
    pub top: f64,
    pub margin: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { scale: 100.0, top: 2.5, margin: 20.0 }
    }
}

/// Reduced nonempty words of length `1..=depth`, in shortlex order.
fn short_words(depth: usize) -> Vec<FreeWord> {
    let letters: Vec<(FreeGen, i64)> =
        FreeGen::LETTERS.iter().flat_map(|&g| [(g, 1), (g, -1)]).collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<(FreeGen, i64)>> = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &layer {
            for &(g, e) in &letters {
                if w.last() == Some(&(g, -e)) {
                    continue;
                }
                let mut v = w.clone();
                v.push((g, e));
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| FreeWord::from_pairs(v.iter().copied())));
        layer = next;
    }
    out
}

struct Tile {
    id: String,
    word: Option<String>,
    left: HPoint,
    right: HPoint,
    cusp: ExtReal,
}

fn fmt_num(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

/// Appends path commands for the geodesic segment from `p` to `q`, both in
/// the closure of the half-plane but finite.
fn geodesic_to(d: &mut String, p: (f64, f64), q: (f64, f64)) {
    let (x1, y1) = p;
    let (x2, y2) = q;
    if (x1 - x2).abs() < 1e-12 * (1.0 + x1.abs()) {
        let _ = write!(d, " L {} {}", fmt_num(x2), fmt_num(y2));
        return;
    }
    let centre = (x1 * x1 + y1 * y1 - x2 * x2 - y2 * y2) / (2.0 * (x1 - x2));
    let r = ((x1 - centre).powi(2) + y1 * y1).sqrt();
    // left-to-right over the top is clockwise with the imaginary axis up
    let sweep = if x1 < x2 { 0 } else { 1 };
    let _ = write!(d, " A {} {} 0 0 {} {} {}", fmt_num(r), fmt_num(r), sweep, fmt_num(x2), fmt_num(y2));
}

fn tile_path(t: &Tile, top: f64) -> String {
    let (l, r) = ((t.left.re(), t.left.im()), (t.right.re(), t.right.im()));
    let mut d = format!("M {} {}", fmt_num(l.0), fmt_num(l.1));
    geodesic_to(&mut d, l, r);
    match t.cusp {
        ExtReal::Infinity => {
            let _ = write!(d, " L {} {} L {} {}", fmt_num(r.0), fmt_num(top), fmt_num(l.0), fmt_num(top));
        }
        ExtReal::Finite(x) => {
            geodesic_to(&mut d, r, (x, 0.0));
            geodesic_to(&mut d, (x, 0.0), l);
        }
    }
    d.push_str(" Z");
    d
}

fn tiles(range: &RangeInclusive<i64>, depth: usize) -> Vec<Tile> {
    let words = short_words(depth);
    let mut out = Vec::new();
    for n in range.clone() {
        let b = domain_b(n);
        out.push(Tile {
            id: format!("B{n}"),
            word: None,
            left: b.left_vertex,
            right: b.right_vertex,
            cusp: ExtReal::Infinity,
        });
        for (k, w) in words.iter().enumerate() {
            let g: Mat2Z = w.eval();
            out.push(Tile {
                id: format!("B{n}_w{k}"),
                word: Some(w.to_string()),
                left: mobius_apply(&g, b.left_vertex),
                right: mobius_apply(&g, b.right_vertex),
                cusp: mobius_boundary(&g, ExtReal::Infinity),
            });
        }
    }
    out
}

/// Writes an SVG drawing of `Bₙ` for `n` in `range`, together with the images
/// of each tile under every reduced word in `g1, g2` of length at most `depth`.
///
/// Each tile is one `<path class="tile">` whose `id` is `B{n}` (or
/// `B{n}_w{k}` for an image, with the word in `data-word`). Finite cusps of
/// image tiles are marked with small circles.
pub fn emit_tiling_svg<W: Write>(
    range: RangeInclusive<i64>,
    depth: usize,
    opts: &SvgOptions,
    out: &mut W,
) -> Result<()> {
    let tiles = tiles(&range, depth);
    let (lo, hi) = if range.is_empty() {
        (-1.0, 1.0)
    } else {
        (*range.start() as f64 - 1.0, *range.end() as f64 + 1.0)
    };
    let s = opts.scale;
    let width = (hi - lo) * s + 2.0 * opts.margin;
    let height = opts.top * s + 2.0 * opts.margin;
    let (tx, ty) = (opts.margin - lo * s, opts.margin + opts.top * s);

    let mut doc = String::new();
    let _ = writeln!(doc, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        doc,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt_num(width), fmt_num(height), fmt_num(width), fmt_num(height)
    );
    let _ = writeln!(
        doc,
        r#"<g transform="matrix({} 0 0 {} {} {})" fill="none" stroke="black" stroke-width="1" vector-effect="non-scaling-stroke">"#,
        fmt_num(s), fmt_num(-s), fmt_num(tx), fmt_num(ty)
    );
    let _ = writeln!(
        doc,
        r#"<line class="axis" x1="{}" y1="0" x2="{}" y2="0" stroke="gray" vector-effect="non-scaling-stroke"/>"#,
        fmt_num(lo), fmt_num(hi)
    );
    for t in &tiles {
        let word_attr = t.word.as_ref().map(|w| format!(r#" data-word="{w}""#)).unwrap_or_default();
        let fill = if t.word.is_some() { "none" } else { "#dde8f6" };
        let _ = writeln!(
            doc,
            r#"<path class="tile" id="{}"{} fill="{}" vector-effect="non-scaling-stroke" d="{}"/>"#,
            t.id, word_attr, fill, tile_path(t, opts.top)
        );
    }
    for t in &tiles {
        if let (Some(_), ExtReal::Finite(x)) = (&t.word, t.cusp) {
            let _ = writeln!(
                doc,
                r#"<circle class="cusp" cx="{}" cy="0" r="{}" fill="red" stroke="none"/>"#,
                fmt_num(x), fmt_num(2.0 / s)
            );
        }
    }
    doc.push_str("</g>\n</svg>\n");
    out.write_all(doc.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(range: RangeInclusive<i64>, depth: usize) -> String {
        let mut buf = Vec::new();
        emit_tiling_svg(range, depth, &SvgOptions::default(), &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    fn tile_count(svg: &str) -> usize {
        svg.matches(r#"class="tile""#).count()
    }

    #[test]
    fn tile_counts() {
        assert_eq!(tile_count(&render(0..=5, 0)), 6);
        #[allow(clippy::reversed_empty_ranges)]
        let empty = render(1..=0, 0);
        assert_eq!(tile_count(&empty), 0);
        assert!(empty.trim_end().ends_with("</svg>"));
        assert_eq!(tile_count(&render(0..=5, 1)), 6 + 6 * 4);
        assert_eq!(tile_count(&render(0..=5, 2)), 6 * (1 + 4 + 12));
    }

    #[test]
    fn ids_and_structure() {
        let svg = render(0..=5, 0);
        for n in 0..6 {
            assert!(svg.contains(&format!(r#"id="B{n}""#)));
        }
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains("transform=\"matrix(100 0 0 -100"));
        assert_eq!(svg.matches("<svg").count(), 1);
        assert_eq!(svg.matches("</svg>").count(), 1);
    }

    #[test]
    fn arcs_are_unit_circle_for_base_tiles() {
        let svg = render(0..=0, 0);
        assert!(svg.contains("A 1 1 0 0 0 0.5 0.866025"));
    }

    #[test]
    fn short_word_counts() {
        assert_eq!(short_words(0).len(), 0);
        assert_eq!(short_words(1).len(), 4);
        assert_eq!(short_words(3).len(), 4 + 12 + 36);
    }
}
