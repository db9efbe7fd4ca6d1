//! Syntactic words over a two-letter alphabet, kept in run-length normal form.
//!
//! One generic [`Word`] type serves three alphabets: the parabolic generators
//! `A, B` of SL(2,ℤ), the braid generators `a, b` of B₃, and the free
//! generators `g1, g2` of the derived subgroup. Adjacent syllables always have
//! distinct generators and nonzero exponents, which for the free alphabet is
//! exactly the freely reduced form.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::sl2::{big_to_json, json_to_big, Mat2Z};
use crate::text::tokens;

/// A generating alphabet together with its evaluation in SL(2,ℤ).
pub trait Alphabet: Copy + Eq + Hash + fmt::Debug + 'static {
    const LETTERS: &'static [Self];

    fn symbol(self) -> &'static str;

    fn matrix(self) -> Mat2Z;

    fn power(self, k: &BigInt) -> Mat2Z {
        self.matrix().pow(k)
    }

    fn from_symbol(s: &str) -> Option<Self> {
        Self::LETTERS.iter().copied().find(|g| g.symbol() == s)
    }
}

/// Parabolic generators of SL(2,ℤ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
}

impl Alphabet for Gen {
    const LETTERS: &'static [Self] = &[Gen::A, Gen::B];

    fn symbol(self) -> &'static str {
        match self {
            Gen::A => "A",
            Gen::B => "B",
        }
    }

    fn matrix(self) -> Mat2Z {
        match self {
            Gen::A => Mat2Z::gen_a(),
            Gen::B => Mat2Z::gen_b(),
        }
    }

    fn power(self, k: &BigInt) -> Mat2Z {
        match self {
            Gen::A => Mat2Z::a_pow(k),
            Gen::B => Mat2Z::b_pow(k),
        }
    }
}

/// Artin generators of the braid group on three strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strand {
    A,
    B,
}

impl Alphabet for Strand {
    const LETTERS: &'static [Self] = &[Strand::A, Strand::B];

    fn symbol(self) -> &'static str {
        match self {
            Strand::A => "a",
            Strand::B => "b",
        }
    }

    fn matrix(self) -> Mat2Z {
        self.image().matrix()
    }

    fn power(self, k: &BigInt) -> Mat2Z {
        self.image().power(k)
    }
}

impl Strand {
    /// The generator's image under `a ↦ A, b ↦ B`.
    pub fn image(self) -> Gen {
        match self {
            Strand::A => Gen::A,
            Strand::B => Gen::B,
        }
    }
}

/// Free generators of the derived subgroup: `g1 = f₋₂ = BA⁻¹`, `g2 = f₋₁ = A⁻¹B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeGen {
    G1,
    G2,
}

impl Alphabet for FreeGen {
    const LETTERS: &'static [Self] = &[FreeGen::G1, FreeGen::G2];

    fn symbol(self) -> &'static str {
        match self {
            FreeGen::G1 => "g1",
            FreeGen::G2 => "g2",
        }
    }

    fn matrix(self) -> Mat2Z {
        let m = match self {
            FreeGen::G1 => Mat2Z::new(1, 1, 1, 2),
            FreeGen::G2 => Mat2Z::new(2, 1, 1, 1),
        };
        m.expect("determinant 1")
    }
}

/// A generator raised to a nonzero power.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable<G> {
    pub gen: G,
    pub exp: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word<G> {
    syllables: Vec<Syllable<G>>,
}

pub type GenWord = Word<Gen>;
pub type BraidWord = Word<Strand>;
pub type FreeWord = Word<FreeGen>;

impl<G: Alphabet> Default for Word<G> {
    fn default() -> Self {
        Word { syllables: Vec::new() }
    }
}

impl<G: Alphabet> Word<G> {
    /// The empty word.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn letter(gen: G) -> Self {
        Self::power(gen, 1)
    }

    pub fn power(gen: G, exp: impl Into<BigInt>) -> Self {
        let mut w = Self::new();
        w.push(gen, exp);
        w
    }

    /// Builds a word from `(generator, exponent)` pairs, normalizing as it goes.
    pub fn from_pairs<E: Into<BigInt>>(pairs: impl IntoIterator<Item = (G, E)>) -> Self {
        let mut w = Self::new();
        for (g, e) in pairs {
            w.push(g, e);
        }
        w
    }

    /// Appends `gen^exp` on the right, merging with the last syllable when the
    /// generators agree and dropping it if the exponents cancel.
    pub fn push(&mut self, gen: G, exp: impl Into<BigInt>) {
        let exp = exp.into();
        if exp.is_zero() {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.gen == gen => {
                last.exp += exp;
                if last.exp.is_zero() {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable { gen, exp }),
        }
    }

    pub fn append(&mut self, other: &Word<G>) {
        for s in &other.syllables {
            self.push(s.gen, s.exp.clone());
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word<G>) -> Word<G> {
        let mut w = self.clone();
        w.append(other);
        w
    }

    pub fn inverse(&self) -> Word<G> {
        Word::from_pairs(self.syllables.iter().rev().map(|s| (s.gen, -&s.exp)))
    }

    /// `self^k` for a possibly negative `k`.
    pub fn pow(&self, k: i64) -> Word<G> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::new();
        for _ in 0..k.unsigned_abs() {
            w.append(&base);
        }
        w
    }

    pub fn syllables(&self) -> &[Syllable<G>] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn len(&self) -> BigInt {
        self.syllables.iter().map(|s| s.exp.abs()).sum()
    }

    /// Sum of all exponents (the image in the abelianization ℤ).
    pub fn exp_sum(&self) -> BigInt {
        self.syllables.iter().map(|s| &s.exp).sum()
    }

    /// Left-to-right product of generator powers.
    pub fn eval(&self) -> Mat2Z {
        self.syllables
            .iter()
            .fold(Mat2Z::identity(), |acc, s| &acc * &s.gen.power(&s.exp))
    }

    /// Renames generators letter by letter.
    pub fn map<H: Alphabet>(&self, f: impl Fn(G) -> H) -> Word<H> {
        Word::from_pairs(self.syllables.iter().map(|s| (f(s.gen), s.exp.clone())))
    }

    /// Expands into single letters `(generator, ±1)`.
    pub fn letters(&self) -> Vec<(G, i8)> {
        let mut out = Vec::new();
        for s in &self.syllables {
            let sign = if s.exp.is_positive() { 1 } else { -1 };
            let mut n = s.exp.abs();
            while !n.is_zero() {
                out.push((s.gen, sign));
                n -= 1;
            }
        }
        out
    }

    /// JSON form `{"word": [["A", -3], ["B", 1]]}`.
    pub fn to_json(&self) -> Value {
        let items: Vec<Value> = self
            .syllables
            .iter()
            .map(|s| json!([s.gen.symbol(), big_to_json(&s.exp)]))
            .collect();
        json!({ "word": items })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let items = v
            .get("word")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("expected an object {\"word\": [[gen, exp], ...]}".into()))?;
        let mut w = Word::new();
        for item in items {
            let pair = item
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Json(format!("expected [gen, exp], got {item}")))?;
            let name = pair[0]
                .as_str()
                .ok_or_else(|| Error::Json(format!("generator must be a string, got {}", pair[0])))?;
            let gen = G::from_symbol(name)
                .ok_or_else(|| Error::Json(format!("unknown generator {name:?}")))?;
            let exp = json_to_big(&pair[1])?;
            if exp.is_zero() {
                return Err(Error::Json("exponents must be nonzero".into()));
            }
            w.push(gen, exp);
        }
        Ok(w)
    }
}

impl<G: Alphabet> fmt::Display for Word<G> {
    /// `A^-3 B A^2`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.gen.symbol())?;
            if !s.exp.is_one() {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

/// Parses whitespace-separated tokens `name` or `name^exp`; a bare `1` is the
/// identity and contributes nothing.
impl<G: Alphabet> FromStr for Word<G> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = Word::new();
        for t in tokens(s) {
            if t.text == "1" {
                continue;
            }
            let (name, exp) = match t.text.split_once('^') {
                Some((name, e)) => {
                    let exp = BigInt::from_str(e).map_err(|_| {
                        Error::parse(t.text, t.index, t.offset, "exponent must be a signed decimal integer")
                    })?;
                    if exp.is_zero() {
                        return Err(Error::parse(t.text, t.index, t.offset, "exponent must be nonzero"));
                    }
                    (name, exp)
                }
                None => (t.text, BigInt::one()),
            };
            let gen = G::from_symbol(name).ok_or_else(|| {
                let names: Vec<_> = G::LETTERS.iter().map(|g| g.symbol()).collect();
                Error::parse(t.text, t.index, t.offset, format!("unknown generator, expected one of {names:?}"))
            })?;
            w.push(gen, exp);
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_keeps_run_length_form() {
        let w = GenWord::from_pairs([(Gen::A, 2), (Gen::A, -1), (Gen::B, 1), (Gen::B, -1), (Gen::A, 3)]);
        assert_eq!(w.to_string(), "A^4");
        let w = GenWord::from_pairs([(Gen::A, 1), (Gen::A, -1)]);
        assert!(w.is_empty());
    }

    #[test]
    fn eval_examples() {
        assert!(GenWord::new().eval().is_identity());
        let aba: GenWord = "A B A".parse().unwrap();
        assert_eq!(aba.eval(), Mat2Z::gen_x());
        let ab6: GenWord = "A B A B A B A B A B A B".parse().unwrap();
        assert!(ab6.eval().is_identity());
    }

    #[test]
    fn inverse_and_eval() {
        let w: GenWord = "A^-3 B A^2 B^5".parse().unwrap();
        assert!(w.concat(&w.inverse()).is_empty());
        assert!((&w.eval() * &w.inverse().eval()).is_identity());
        assert_eq!(w.pow(3).eval(), w.eval().pow(&BigInt::from(3)));
        assert_eq!(w.pow(-2).eval(), w.eval().pow(&BigInt::from(-2)));
    }

    #[test]
    fn text_round_trip_and_errors() {
        let w: GenWord = "A^-3 B A^2".parse().unwrap();
        assert_eq!(w.to_string(), "A^-3 B A^2");
        assert_eq!(w.to_string().parse::<GenWord>().unwrap(), w);
        assert_eq!("1".parse::<GenWord>().unwrap(), GenWord::new());
        assert_eq!(GenWord::new().to_string(), "1");

        match "A B^x".parse::<GenWord>() {
            Err(Error::Parse { token, index, offset, .. }) => assert_eq!((token.as_str(), index, offset), ("B^x", 1, 2)),
            other => panic!("unexpected {other:?}"),
        }
        assert!("A C".parse::<GenWord>().unwrap_err().is_parse());
        assert!("A^0".parse::<GenWord>().unwrap_err().is_parse());
        assert!("a".parse::<GenWord>().is_err());
        assert!("a b^-1 a^2".parse::<BraidWord>().is_ok());
        assert_eq!("g2 g1^-1".parse::<FreeWord>().unwrap().len(), BigInt::from(2));
    }

    #[test]
    fn json_round_trip() {
        let w: GenWord = "A^-3 B".parse().unwrap();
        let v = w.to_json();
        assert_eq!(v, serde_json::from_str::<Value>(r#"{"word": [["A", -3], ["B", 1]]}"#).unwrap());
        assert_eq!(GenWord::from_json(&v).unwrap(), w);
        let b: BraidWord = "a b^-1".parse().unwrap();
        assert_eq!(b.to_json()["word"][0][0], "a");
        assert!(GenWord::from_json(&json!({"word": [["C", 1]]})).is_err());
        assert!(GenWord::from_json(&json!({"word": [["A", 0]]})).is_err());
    }

    #[test]
    fn free_generators_are_the_paired_matrices() {
        assert_eq!(FreeGen::G1.matrix(), Mat2Z::new(1, 1, 1, 2).unwrap());
        // g1 = B A^-1, g2 = A^-1 B
        assert_eq!(FreeGen::G1.matrix(), "B A^-1".parse::<GenWord>().unwrap().eval());
        assert_eq!(FreeGen::G2.matrix(), "A^-1 B".parse::<GenWord>().unwrap().eval());
    }

    #[test]
    fn letters_expand() {
        let w: FreeWord = "g1^2 g2^-1".parse().unwrap();
        assert_eq!(w.letters(), vec![(FreeGen::G1, 1), (FreeGen::G1, 1), (FreeGen::G2, -1)]);
    }
}
