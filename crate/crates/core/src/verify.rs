//! Seeded randomized checks of the presentation and of the B₃ word problem.
//!
//! Every check is driven by a `ChaCha8Rng` seeded from the caller, so a run is
//! reproducible bit for bit.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::braid::{braid_equal, center_word, preimage, sigma};
use crate::presentation::abelianize;
use crate::sl2::Mat2Z;
use crate::word::{Alphabet, BraidWord, Gen, GenWord, Strand, Word};

pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_MAX_LEN: usize = 20;
/// Letters in the random products fed to the surjectivity check.
pub const MATRIX_WORD_LEN: usize = 30;

/// A uniformly random word of `0..=max_len` letters, each a generator or its
/// inverse.
pub fn random_word<G: Alphabet>(rng: &mut impl Rng, max_len: usize) -> Word<G> {
    let len = rng.gen_range(0..=max_len);
    let mut w = Word::new();
    for _ in 0..len {
        let g = *G::LETTERS.choose(rng).expect("nonempty alphabet");
        w.push(g, if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    w
}

/// The braid relator `aba·(bab)⁻¹`.
pub fn braid_relator() -> BraidWord {
    "a b a b^-1 a^-1 b^-1".parse().expect("static word")
}

/// Inserts a conjugate `c·r^{±1}·c⁻¹` of the braid relator at a random letter
/// position of `u`. The result is equal to `u` in B₃ by construction.
pub fn insert_relator(rng: &mut impl Rng, u: &BraidWord) -> BraidWord {
    let conj: BraidWord = random_word(rng, 4);
    let r = if rng.gen_bool(0.5) { braid_relator() } else { braid_relator().inverse() };
    let inserted = conj.concat(&r).concat(&conj.inverse());
    let letters = u.letters();
    let at = rng.gen_range(0..=letters.len());
    let mut out = BraidWord::from_pairs(letters[..at].iter().map(|&(g, e)| (g, e)));
    out.append(&inserted);
    for &(g, e) in &letters[at..] {
        out.push(g, e);
    }
    out
}

/// Pass counts of one randomized run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub seed: u64,
    pub samples: usize,
    pub relators_exact: bool,
    /// `braid_equal(u, u′)` after a random relator insertion.
    pub relator_insertion: usize,
    /// `σ(preimage(m)) = m` for random products.
    pub surjectivity: usize,
    /// `ab(mn) = ab(m) + ab(n)`.
    pub abelian_hom: usize,
    /// `σ(uv) = σ(u)σ(v)`.
    pub sigma_hom: usize,
    /// `w·x² = x²·w`.
    pub centrality: usize,
}

impl PresentationReport {
    pub fn all_passed(&self) -> bool {
        let n = self.samples;
        self.relators_exact
            && self.relator_insertion == n
            && self.surjectivity == n
            && self.abelian_hom == n
            && self.sigma_hom == n
            && self.centrality == n
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "samples": self.samples,
            "relators_exact": self.relators_exact,
            "relator_insertion": self.relator_insertion,
            "surjectivity": self.surjectivity,
            "abelian_hom": self.abelian_hom,
            "sigma_hom": self.sigma_hom,
            "centrality": self.centrality,
            "ok": self.all_passed(),
        })
    }
}

/// Random product of at most `len` letters `A^{±1}, B^{±1}`.
pub fn random_matrix(rng: &mut impl Rng, len: usize) -> Mat2Z {
    random_word::<Gen>(rng, len).eval()
}

pub fn relator_insertion_trial(rng: &mut impl Rng, max_len: usize) -> bool {
    let u: BraidWord = random_word(rng, max_len);
    let v = insert_relator(rng, &u);
    braid_equal(&u, &v)
}

pub fn surjectivity_trial(rng: &mut impl Rng) -> bool {
    let m = random_matrix(rng, MATRIX_WORD_LEN);
    sigma(&preimage(&m)) == m
}

pub fn abelian_trial(rng: &mut impl Rng, max_len: usize) -> bool {
    let m = random_matrix(rng, max_len);
    let n = random_matrix(rng, max_len);
    abelianize(&(&m * &n)) == abelianize(&m) + abelianize(&n)
}

/// Runs every randomized check `samples` times from `seed`.
pub fn verify_presentation(samples: usize, seed: u64, max_len: usize) -> PresentationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x2 = center_word();
    let mut report = PresentationReport {
        seed,
        samples,
        relators_exact: crate::presentation::relators_hold(),
        relator_insertion: 0,
        surjectivity: 0,
        abelian_hom: 0,
        sigma_hom: 0,
        centrality: 0,
    };
    for _ in 0..samples {
        report.relator_insertion += usize::from(relator_insertion_trial(&mut rng, max_len));
        report.surjectivity += usize::from(surjectivity_trial(&mut rng));
        report.abelian_hom += usize::from(abelian_trial(&mut rng, max_len));

        let u: BraidWord = random_word(&mut rng, max_len);
        let v: BraidWord = random_word(&mut rng, max_len);
        report.sigma_hom += usize::from(sigma(&u.concat(&v)) == &sigma(&u) * &sigma(&v));
        report.centrality += usize::from(braid_equal(&u.concat(&x2), &x2.concat(&u)));
    }
    report
}

/// Transliterates `A, B` into `a, b`.
pub fn to_braid(w: &GenWord) -> BraidWord {
    w.map(|g| match g {
        Gen::A => Strand::A,
        Gen::B => Strand::B,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = verify_presentation(50, 3, 12);
        let b = verify_presentation(50, 3, 12);
        assert_eq!(a, b);
        assert!(a.all_passed(), "{a:?}");
    }

    #[test]
    fn inserted_relators_change_the_word_but_not_the_braid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut changed = 0;
        for _ in 0..100 {
            let u: BraidWord = random_word(&mut rng, 10);
            let v = insert_relator(&mut rng, &u);
            changed += usize::from(u != v);
            assert!(braid_equal(&u, &v));
        }
        assert!(changed > 90);
    }

    #[test]
    fn inserting_a_non_relator_is_detected() {
        // x⁴ has trivial image but is not trivial in B₃
        let u: BraidWord = "a b^-1 a".parse().unwrap();
        let x4 = crate::braid::x_word().pow(4);
        assert!(!braid_equal(&u, &u.concat(&x4)));
    }

    #[test]
    fn random_words_respect_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..200 {
            let w: GenWord = random_word(&mut rng, 7);
            assert!(w.len() <= 7.into());
        }
        let w = to_braid(&"A B^-2".parse().unwrap());
        assert_eq!(w.to_string(), "a b^-2");
    }
}
