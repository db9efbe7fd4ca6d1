//! The side-pairing family `fₙ` and the free derived subgroup `⟨f₋₂, f₋₁⟩`.
//!
//! `fₙ = A^{−(n+3)}·X·A^n` satisfies `fₙ₊₁·fₙ₋₁ = fₙ`, so every `fₙ` is a word in
//! `g1 = f₋₂` and `g2 = f₋₁`. The derived subgroup is the kernel of the
//! abelianization onto ℤ/12 and is free on `g1, g2`.
//!
//! Factorization rewrites a word for the matrix through the Schreier
//! transversal `{A^k : 0 ≤ k < 12}`. Its Schreier generators are
//! `A^k·B·A^{−(k+1)} = f_{−(k+2)}` for `k < 11`, `A^11·B = f₋₁₃·A^12`, and
//! `A^12 = (f₀·f₋₃)^{−2}`, all of which already have words in `g1, g2`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::presentation::{a_power, word_of_matrix, AbClass, AbGroup};
use crate::sl2::Mat2Z;
use crate::word::{FreeGen, FreeWord, Gen};

/// `fₙ = A^{−(n+3)}·X·A^n`.
pub fn f_matrix(n: i64) -> Mat2Z {
    &(&a_power(-(n + 3)) * &Mat2Z::gen_x()) * &a_power(n)
}

/// A word in `g1, g2` evaluating to `fₙ`, from the recurrence
/// `fₙ₊₁ = fₙ·fₙ₋₁⁻¹` (upward) and `fₙ₋₁ = fₙ₊₁⁻¹·fₙ` (downward).
///
/// Word length grows quickly with `|n|`; the recurrence is iterated from the
/// base cases so each intermediate word is built once.
pub fn f_in_free_gens(n: i64) -> FreeWord {
    let mut lo = FreeWord::letter(FreeGen::G1); // f_{k-1}
    let mut hi = FreeWord::letter(FreeGen::G2); // f_k
    let mut k = -1i64;
    if n >= -1 {
        while k < n {
            let next = hi.concat(&lo.inverse());
            lo = std::mem::replace(&mut hi, next);
            k += 1;
        }
        hi
    } else {
        // walk the pair (f_{k-1}, f_k) down until k - 1 = n
        while k - 1 > n {
            let prev = hi.inverse().concat(&lo);
            hi = std::mem::replace(&mut lo, prev);
            k -= 1;
        }
        lo
    }
}

/// Membership in the derived subgroup: the abelianized class is zero.
pub fn derived_member(m: &Mat2Z) -> bool {
    crate::presentation::abelianize(m).is_zero()
}

struct SchreierGens {
    /// `s[k] = A^k·B·A^{−((k+1) mod 12)}` as free words.
    s: Vec<FreeWord>,
    /// `A^12`.
    t: FreeWord,
}

fn schreier_gens() -> &'static SchreierGens {
    static GENS: OnceLock<SchreierGens> = OnceLock::new();
    GENS.get_or_init(|| {
        let t = f_in_free_gens(0).concat(&f_in_free_gens(-3)).pow(-2);
        let mut s: Vec<FreeWord> = (0..11).map(|k| f_in_free_gens(-(k + 2))).collect();
        s.push(f_in_free_gens(-13).concat(&t));
        SchreierGens { s, t }
    })
}

/// The unique reduced word in `g1, g2` evaluating to `m`.
///
/// Fails with [`Error::NotInDerivedSubgroup`] unless `m` abelianizes to 0.
///
/// # Panics
///
/// If a run of `A` letters in the intermediate word crosses more than
/// `i64::MAX` multiples of 12; the output word would be astronomically long.
pub fn factor_derived(m: &Mat2Z) -> Result<FreeWord> {
    let word = word_of_matrix(m);
    let class = AbClass::new(word.exp_sum(), AbGroup::Sl);
    if !class.is_zero() {
        return Err(Error::NotInDerivedSubgroup { class: class.value() });
    }

    let gens = schreier_gens();
    let twelve = BigInt::from(12);
    let mut coset = 0usize;
    let mut out = FreeWord::new();
    for syl in word.syllables() {
        match syl.gen {
            Gen::A => {
                let (q, r) = (BigInt::from(coset) + &syl.exp).div_mod_floor(&twelve);
                let q = q.to_i64().expect("A-run too long to rewrite");
                out.append(&gens.t.pow(q));
                coset = r.to_usize().expect("residue below 12");
            }
            Gen::B => {
                let steps = syl.exp.abs().to_u64().expect("B-run too long to rewrite");
                for _ in 0..steps {
                    if syl.exp.is_positive() {
                        out.append(&gens.s[coset]);
                        coset = (coset + 1) % 12;
                    } else {
                        coset = (coset + 11) % 12;
                        out.append(&gens.s[coset].inverse());
                    }
                }
            }
        }
    }
    debug_assert_eq!(coset, 0);
    debug_assert_eq!(&out.eval(), m);
    Ok(out)
}

/// `fₙ₋₁·[fₙ₋₂, fₙ₋₁]·fₙ₋₁⁻¹` with the commutator convention
/// `[u, v] = u⁻¹·v⁻¹·u·v`, i.e. the product `fₙ₋₁·fₙ₋₂⁻¹·fₙ₋₁⁻¹·fₙ₋₂`.
/// Equal to `A^{−6}·X²` for every `n`.
pub fn conjugated_commutator(n: i64) -> Mat2Z {
    let (u, v) = (f_matrix(n - 2), f_matrix(n - 1));
    let bracket = &(&(&u.inv() * &v.inv()) * &u) * &v;
    &(&v * &bracket) * &v.inv()
}

/// `A^{−6}·X²`, which acts on the half-plane as `z ↦ z + 6`.
pub fn hexagon_translation() -> Mat2Z {
    let x = Mat2Z::gen_x();
    &a_power(-6) * &(&x * &x)
}
