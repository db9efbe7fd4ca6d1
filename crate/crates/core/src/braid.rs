//! The braid group B₃ = ⟨a, b | aba = bab⟩ and its map to SL(2,ℤ).
//!
//! `σ: a ↦ A, b ↦ B` descends to an isomorphism `B₃/⟨x⁴⟩ → SL(2,ℤ)` with
//! `x = aba`. The kernel `⟨x⁴⟩` is central and infinite cyclic, and `x⁴` has
//! exponent sum 12, so two braids are equal exactly when they have the same
//! σ-image and the same exponent sum. No braid normal form is needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::presentation::word_of_matrix;
use crate::sl2::Mat2Z;
use crate::word::{BraidWord, Gen, Strand};

/// `x = aba`.
pub fn x_word() -> BraidWord {
    BraidWord::from_pairs([(Strand::A, 1), (Strand::B, 1), (Strand::A, 1)])
}

/// `x² = ababab`, generator of the center.
pub fn center_word() -> BraidWord {
    x_word().concat(&BraidWord::from_pairs([(Strand::B, 1), (Strand::A, 1), (Strand::B, 1)]))
}

pub fn sigma(w: &BraidWord) -> Mat2Z {
    w.eval()
}

pub fn exp_sum(w: &BraidWord) -> BigInt {
    w.exp_sum()
}

/// Decides `u = v` in B₃.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> bool {
    exp_sum(u) == exp_sum(v) && sigma(u) == sigma(v)
}

/// Returns `k` when `w = (ababab)^k` in B₃.
pub fn is_central_power(w: &BraidWord) -> Option<i64> {
    let total = exp_sum(w);
    let (k, r) = total.div_rem(&BigInt::from(6));
    if !r.is_zero() {
        return None;
    }
    let k = k.to_i64()?;
    // (ababab)^k has σ-image (−I)^k
    let expected = if k % 2 == 0 { Mat2Z::identity() } else { Mat2Z::minus_identity() };
    (sigma(w) == expected).then_some(k)
}

/// A braid with σ-image exactly `m`.
///
/// Transliterates a word for `m` (`A → a`, `B → b`); if that braid's image is
/// `−m` instead, multiplying by the central `x²` fixes the sign.
pub fn preimage(m: &Mat2Z) -> BraidWord {
    let mut w = word_of_matrix(m).map(|g| match g {
        Gen::A => Strand::A,
        Gen::B => Strand::B,
    });
    if sigma(&w) != *m {
        w.append(&center_word());
    }
    w
}
