//! Exact 2×2 integer matrices of determinant one.
//!
//! Entries are arbitrary precision, so products of arbitrarily long words never
//! overflow. The parabolic generators follow the convention
//! `A = [[1,-1],[0,1]]`, `B = [[1,0],[1,1]]`, and `X = ABA = BAB = [[0,-1],[1,0]]`.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::text::tokens;

/// An element of SL(2,ℤ), stored row-major as `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2Z {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2Z {
    /// Builds a matrix, rejecting anything whose determinant is not 1.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::Determinant { det });
        }
        Ok(Mat2Z { a, b, c, d })
    }

    // Callers guarantee det = 1.
    fn raw(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        debug_assert!((&a * &d - &b * &c).is_one());
        Mat2Z { a, b, c, d }
    }

    fn small(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::raw(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::small(1, 0, 0, 1)
    }

    pub fn minus_identity() -> Self {
        Self::small(-1, 0, 0, -1)
    }

    /// `A = [[1,-1],[0,1]]`, acting on the half-plane as `z ↦ z − 1`.
    pub fn gen_a() -> Self {
        Self::small(1, -1, 0, 1)
    }

    /// `B = [[1,0],[1,1]]`.
    pub fn gen_b() -> Self {
        Self::small(1, 0, 1, 1)
    }

    /// `X = [[0,-1],[1,0]]`, of order 4 with `X² = −I`.
    pub fn gen_x() -> Self {
        Self::small(0, -1, 1, 0)
    }

    /// `A^k = [[1,-k],[0,1]]` in closed form.
    pub fn a_pow(k: &BigInt) -> Self {
        Self::raw(BigInt::one(), -k, BigInt::zero(), BigInt::one())
    }

    /// `B^k = [[1,0],[k,1]]` in closed form.
    pub fn b_pow(k: &BigInt) -> Self {
        Self::raw(BigInt::one(), BigInt::zero(), k.clone(), BigInt::one())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Exact inverse `[[d,-b],[-c,a]]`.
    pub fn inv(&self) -> Self {
        Self::raw(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    /// True for `±I`.
    pub fn is_central(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Parabolic: `|trace| = 2` and not `±I`.
    pub fn is_parabolic(&self) -> bool {
        self.trace().abs() == BigInt::from(2) && !self.is_central()
    }

    /// Integer power by repeated squaring; negative exponents use the inverse.
    pub fn pow(&self, k: &BigInt) -> Self {
        let mut base = if k.is_negative() { self.inv() } else { self.clone() };
        let mut e = k.abs();
        let mut acc = Mat2Z::identity();
        let two = BigInt::from(2);
        while !e.is_zero() {
            if (&e % &two).is_one() {
                acc = &acc * &base;
            }
            e >>= 1;
            if !e.is_zero() {
                base = &base * &base;
            }
        }
        acc
    }

    /// Commutator `u·v·u⁻¹·v⁻¹`.
    pub fn commutator(u: &Mat2Z, v: &Mat2Z) -> Mat2Z {
        &(&(u * v) * &u.inv()) * &v.inv()
    }

    /// Sum of absolute values of the entries.
    pub fn l1_size(&self) -> BigInt {
        self.entries().iter().map(|x| x.abs()).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({ "m": self.entries().iter().map(|x| big_to_json(x)).collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .get("m")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("expected an object {\"m\": [a, b, c, d]}".into()))?;
        if arr.len() != 4 {
            return Err(Error::Json(format!("\"m\" must have 4 entries, got {}", arr.len())));
        }
        let mut e = Vec::with_capacity(4);
        for x in arr {
            e.push(json_to_big(x)?);
        }
        let [a, b, c, d]: [BigInt; 4] = e.try_into().expect("length checked");
        Mat2Z::new(a, b, c, d)
    }
}

pub(crate) fn big_to_json(x: &BigInt) -> Value {
    // arbitrary_precision keeps the digits verbatim
    Value::Number(serde_json::Number::from_str(&x.to_string()).expect("integer literal"))
}

pub(crate) fn json_to_big(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| Error::Json(format!("expected an integer, got {n}"))),
        other => Err(Error::Json(format!("expected an integer, got {other}"))),
    }
}

impl Mul<&Mat2Z> for &Mat2Z {
    type Output = Mat2Z;

    fn mul(self, n: &Mat2Z) -> Mat2Z {
        let m = self;
        Mat2Z::raw(
            &m.a * &n.a + &m.b * &n.c,
            &m.a * &n.b + &m.b * &n.d,
            &m.c * &n.a + &m.d * &n.c,
            &m.c * &n.b + &m.d * &n.d,
        )
    }
}

impl Mul for Mat2Z {
    type Output = Mat2Z;

    fn mul(self, n: Mat2Z) -> Mat2Z {
        &self * &n
    }
}

impl Neg for &Mat2Z {
    type Output = Mat2Z;

    fn neg(self) -> Mat2Z {
        Mat2Z::raw(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Neg for Mat2Z {
    type Output = Mat2Z;

    fn neg(self) -> Mat2Z {
        -&self
    }
}

impl fmt::Display for Mat2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Parses the row-major text form `a b c d`.
impl FromStr for Mat2Z {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks = tokens(s);
        let mut entries = Vec::with_capacity(4);
        for t in &toks {
            if t.index >= 4 {
                return Err(Error::parse(t.text, t.index, t.offset, "a matrix has exactly 4 entries"));
            }
            let x = BigInt::from_str(t.text)
                .map_err(|_| Error::parse(t.text, t.index, t.offset, "expected a decimal integer"))?;
            entries.push(x);
        }
        if entries.len() != 4 {
            return Err(Error::parse(
                "",
                entries.len(),
                s.len(),
                format!("a matrix has exactly 4 entries, got {}", entries.len()),
            ));
        }
        let [a, b, c, d]: [BigInt; 4] = entries.try_into().expect("length checked");
        Mat2Z::new(a, b, c, d)
    }
}

/// An element of PSL(2,ℤ): a matrix up to global sign.
///
/// The stored representative has its first nonzero entry (in the order
/// `a, b, c, d`) positive, so derived equality and hashing are projective.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjMat {
    rep: Mat2Z,
}

impl ProjMat {
    pub fn new(m: Mat2Z) -> Self {
        let first = m.entries().into_iter().find(|x| !x.is_zero()).cloned();
        let rep = match first {
            Some(x) if x.is_negative() => -m,
            _ => m,
        };
        ProjMat { rep }
    }

    pub fn rep(&self) -> &Mat2Z {
        &self.rep
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }
}

impl From<Mat2Z> for ProjMat {
    fn from(m: Mat2Z) -> Self {
        ProjMat::new(m)
    }
}

impl Mul for &ProjMat {
    type Output = ProjMat;

    fn mul(self, other: &ProjMat) -> ProjMat {
        ProjMat::new(&self.rep * &other.rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2Z {
        Mat2Z::new(a, b, c, d).unwrap()
    }

    #[test]
    fn construction_checks_determinant() {
        assert!(matches!(Mat2Z::new(1, 1, 1, 1), Err(Error::Determinant { .. })));
        assert!(matches!(Mat2Z::new(-1, 0, 0, 1), Err(Error::Determinant { .. })));
        assert!(Mat2Z::new(2, 1, 1, 1).is_ok());
    }

    #[test]
    fn generator_products() {
        let (a, b, x) = (Mat2Z::gen_a(), Mat2Z::gen_b(), Mat2Z::gen_x());
        let i = Mat2Z::identity();
        assert_eq!(&i * &i, i);
        assert_eq!(&(&a * &b) * &a, x);
        assert_eq!(&(&b * &a) * &b, x);
        assert_eq!(&x * &x, Mat2Z::minus_identity());
    }

    #[test]
    fn inverses() {
        assert_eq!(Mat2Z::identity().inv(), Mat2Z::identity());
        assert_eq!(Mat2Z::gen_a().inv(), m(1, 1, 0, 1));
        assert_eq!(Mat2Z::gen_x().inv(), m(0, 1, -1, 0));
        let g = m(5, 3, 3, 2);
        assert!((&g * &g.inv()).is_identity());
    }

    #[test]
    fn closed_form_powers_match_repeated_squaring() {
        for k in -13i64..=13 {
            let k = BigInt::from(k);
            assert_eq!(Mat2Z::a_pow(&k), Mat2Z::gen_a().pow(&k));
            assert_eq!(Mat2Z::b_pow(&k), Mat2Z::gen_b().pow(&k));
        }
        assert!(Mat2Z::gen_x().pow(&BigInt::from(4)).is_identity());
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let big = Mat2Z::gen_b().pow(&BigInt::from(3)) * Mat2Z::gen_a().pow(&BigInt::from(-5));
        let p = big.pow(&BigInt::from(200));
        assert!(p.a().bits() > 300);
        assert!((&p * &p.inv()).is_identity());
    }

    #[test]
    fn text_form() {
        let x: Mat2Z = "0 -1 1 0".parse().unwrap();
        assert_eq!(x, Mat2Z::gen_x());
        assert_eq!(x.to_string(), "0 -1 1 0");
        match "1 2 x 4".parse::<Mat2Z>() {
            Err(Error::Parse { token, index, offset, .. }) => {
                assert_eq!((token.as_str(), index, offset), ("x", 2, 4));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!("1 0 0".parse::<Mat2Z>().unwrap_err().is_parse());
        assert!("1 0 0 1 5".parse::<Mat2Z>().unwrap_err().is_parse());
        assert!(!"2 0 0 2".parse::<Mat2Z>().unwrap_err().is_parse());
    }

    #[test]
    fn json_form() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let g = Mat2Z::b_pow(&big);
        let v = g.to_json();
        assert_eq!(Mat2Z::from_json(&v).unwrap(), g);
        let v: Value = serde_json::from_str(r#"{"m": [0, -1, 1, 0]}"#).unwrap();
        assert_eq!(Mat2Z::from_json(&v).unwrap(), Mat2Z::gen_x());
        assert!(Mat2Z::from_json(&json!({"m": [1, 2]})).unwrap_err().is_parse());
    }

    #[test]
    fn projective_equality() {
        let x = Mat2Z::gen_x();
        assert_eq!(ProjMat::new(x.clone()), ProjMat::new(-&x));
        assert!(ProjMat::new(Mat2Z::minus_identity()).is_identity());
        assert_eq!(ProjMat::new(-&x).rep(), &m(0, 1, -1, 0));
        assert_ne!(ProjMat::new(Mat2Z::gen_a()), ProjMat::new(Mat2Z::gen_b()));
    }
}
