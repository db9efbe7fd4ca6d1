//! Words for matrices, and the abelianization of SL(2,ℤ) and PSL(2,ℤ).
//!
//! SL(2,ℤ) is presented as `⟨A, B | ABA = BAB, (ABABAB)²⟩`. Both relators have
//! exponent sum divisible by 12, so the exponent sum of any word mod 12 is a
//! well-defined homomorphism onto ℤ/12. Modulo `−I = (ABABAB)`, whose exponent
//! sum is 6, the same map lands in ℤ/6.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sl2::{Mat2Z, ProjMat};
use crate::text::tokens;
use crate::word::{Gen, GenWord};

/// Word whose evaluation is `−I`.
pub fn minus_identity_word() -> GenWord {
    GenWord::from_pairs([(Gen::A, 1), (Gen::B, 1), (Gen::A, 1), (Gen::B, 1), (Gen::A, 1), (Gen::B, 1)])
}

/// Writes `m` as a word in `A, B` that evaluates to `m` exactly.
///
/// Euclidean descent on the first column: left-multiply by a power of `A`
/// (which rewrites `a ← a − q·c`) or of `B` (`c ← c + q·a`) until `c = 0`.
/// What is left is `±A^j`; a trailing `ABABAB` absorbs the sign.
/// The output is correct but not canonical.
pub fn word_of_matrix(m: &Mat2Z) -> GenWord {
    let mut cur = m.clone();
    // Left factors in the order they were applied.
    let mut applied: Vec<(Gen, BigInt)> = Vec::new();

    while !cur.c().is_zero() {
        let (gen, exp) = if cur.a().is_zero() {
            // det = 1 forces c = ±1 here; A^{-c} makes a = c² = 1
            (Gen::A, -cur.c())
        } else if cur.c().abs() >= cur.a().abs() {
            (Gen::B, -(cur.c() / cur.a()))
        } else {
            (Gen::A, cur.a() / cur.c())
        };
        cur = &gen_power(gen, &exp) * &cur;
        applied.push((gen, exp));
    }

    // cur = [[a, b], [0, a]] with a = ±1, which is a·A^{-a·b}
    let j = -(cur.a() * cur.b());
    let mut w = GenWord::from_pairs(applied.into_iter().map(|(g, e)| (g, -e)));
    w.push(Gen::A, j);
    if cur.a().is_negative() {
        w.append(&minus_identity_word());
    }
    debug_assert_eq!(&w.eval(), m);
    w
}

fn gen_power(g: Gen, k: &BigInt) -> Mat2Z {
    match g {
        Gen::A => Mat2Z::a_pow(k),
        Gen::B => Mat2Z::b_pow(k),
    }
}

/// Which abelianization a class lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AbGroup {
    /// ℤ/12, the abelianization of SL(2,ℤ).
    Sl,
    /// ℤ/6, the abelianization of PSL(2,ℤ).
    Psl,
}

impl AbGroup {
    pub fn modulus(self) -> u8 {
        match self {
            AbGroup::Sl => 12,
            AbGroup::Psl => 6,
        }
    }
}

/// A residue class in the abelianization, `0 ≤ value < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AbClass {
    value: u8,
    group: AbGroup,
}

impl AbClass {
    pub fn new(value: impl Into<BigInt>, group: AbGroup) -> Self {
        let m = BigInt::from(group.modulus());
        let v = value.into().mod_floor(&m);
        AbClass { value: v.to_u8().expect("residue below 12"), group }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn group(self) -> AbGroup {
        self.group
    }

    pub fn modulus(self) -> u8 {
        self.group.modulus()
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Image of an SL class in the PSL abelianization.
    pub fn project(self) -> AbClass {
        AbClass::new(self.value, AbGroup::Psl)
    }
}

impl std::ops::Add for AbClass {
    type Output = AbClass;

    fn add(self, rhs: AbClass) -> AbClass {
        assert_eq!(self.group, rhs.group, "adding classes of different groups");
        AbClass::new(u32::from(self.value) + u32::from(rhs.value), self.group)
    }
}

impl fmt::Display for AbClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus())
    }
}

/// Parses `v (mod 12)` or `v (mod 6)`.
impl FromStr for AbClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks = tokens(s);
        let err = |i: usize, reason: &str| {
            let t = toks.get(i);
            Error::parse(t.map_or("", |t| t.text), i, t.map_or(s.len(), |t| t.offset), reason)
        };
        if toks.len() != 3 {
            return Err(err(toks.len().min(3), "expected `<value> (mod <12|6>)`"));
        }
        let value: u8 = toks[0].text.parse().map_err(|_| err(0, "expected a residue"))?;
        if toks[1].text != "(mod" {
            return Err(err(1, "expected `(mod`"));
        }
        let group = match toks[2].text {
            "12)" => AbGroup::Sl,
            "6)" => AbGroup::Psl,
            _ => return Err(err(2, "modulus must be 12 or 6")),
        };
        if value >= group.modulus() {
            return Err(err(0, "residue out of range"));
        }
        Ok(AbClass { value, group })
    }
}

/// Class of `m` in ℤ/12: exponent sum of any word for `m`, mod 12.
pub fn abelianize(m: &Mat2Z) -> AbClass {
    AbClass::new(word_of_matrix(m).exp_sum(), AbGroup::Sl)
}

/// Class of a projective element in ℤ/6.
pub fn abelianize_proj(p: &ProjMat) -> AbClass {
    abelianize(p.rep()).project()
}

/// Checks the defining relators: `ABA = BAB = X` and `(ABABAB)² = I`, plus
/// `X² = −I ≠ I`, `X⁴ = I`, and `ABABAB` trivial in PSL(2,ℤ).
pub fn relators_hold() -> bool {
    let eval = |s: &str| s.parse::<GenWord>().expect("static word").eval();
    let x = Mat2Z::gen_x();
    let x2 = &x * &x;
    eval("A B A") == eval("B A B")
        && eval("A B A") == x
        && x2 == Mat2Z::minus_identity()
        && !x2.is_identity()
        && (&x2 * &x2).is_identity()
        && minus_identity_word().pow(2).eval().is_identity()
        && ProjMat::new(minus_identity_word().eval()).is_identity()
}

/// `A^k` for a machine integer `k`.
pub fn a_power(k: i64) -> Mat2Z {
    Mat2Z::a_pow(&BigInt::from(k))
}
