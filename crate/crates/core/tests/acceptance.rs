//! Acceptance criteria, one test per criterion.
//!
//! Each test prints a single `[PASS]`/`[FAIL]` line with its measurements and
//! then asserts. Tests share a lock so the wall-clock budgets are measured
//! without interference from each other. Run with
//! `cargo test -p modular-braid --test acceptance -- --nocapture`.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use modular_braid::braid::{braid_equal, preimage, sigma};
use modular_braid::derived::{conjugated_commutator, f_matrix, factor_derived, hexagon_translation};
use modular_braid::halfplane::{
    cusp_report, in_standard_domain, mobius_apply, reduce_point, verify_pairing, HPoint,
};
use modular_braid::presentation::{a_power, abelianize, abelianize_proj, minus_identity_word};
use modular_braid::verify::{insert_relator, random_matrix, random_word, MATRIX_WORD_LEN};
use modular_braid::weierstrass::{
    check_axis_images, check_half_turns, check_half_values, stated_half_turns, symmetry_errors,
    wp, wp_complex, TorusPoint, HALF_TURN_SAMPLES,
};
use modular_braid::word::FreeGen;
use modular_braid::{BraidWord, FreeWord, GenWord, Mat2Z, ProjMat};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

static SERIAL: Mutex<()> = Mutex::new(());

const SEED: u64 = 0;

fn report(id: u32, name: &str, ok: bool, elapsed: Duration, budget: Duration, detail: &str) {
    let within = elapsed < budget;
    let status = if ok && within { "PASS" } else { "FAIL" };
    println!(
        "[{status}] criterion {id:>2} {name}: {detail}; {:.3} ms (budget {} ms)",
        elapsed.as_secs_f64() * 1e3,
        budget.as_millis()
    );
    assert!(ok, "criterion {id} ({name}) failed: {detail}");
    assert!(within, "criterion {id} ({name}) exceeded {budget:?}: took {elapsed:?}");
}

fn lock() -> std::sync::MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

fn word(s: &str) -> GenWord {
    s.parse().unwrap()
}

#[test]
fn criterion_01_relation_suite() {
    let _g = lock();
    let (aba, bab, ab6) = (word("A B A"), word("B A B"), minus_identity_word().pow(2));
    let start = Instant::now();
    let x = Mat2Z::gen_x();
    let x2 = &x * &x;
    let ok = aba.eval() == bab.eval()
        && bab.eval() == x
        && x2 == Mat2Z::minus_identity()
        && (&x2 * &x2).is_identity()
        && ab6.eval().is_identity();
    let elapsed = start.elapsed();
    report(1, "relations ABA = BAB = X, X^2 = -I, X^4 = I, (ABABAB)^2 = I", ok, elapsed, Duration::from_millis(1), "exact");
}

#[test]
fn criterion_02_presentation_consistency() {
    let _g = lock();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let start = Instant::now();
    let mut passed = 0;
    for _ in 0..1000 {
        let u: BraidWord = random_word(&mut rng, 20);
        let v = insert_relator(&mut rng, &u);
        passed += usize::from(braid_equal(&u, &v));
    }
    let elapsed = start.elapsed();
    report(2, "relator insertion preserves braid equality", passed == 1000, elapsed, Duration::from_secs(1), &format!("{passed}/1000"));
}

#[test]
fn criterion_03_word_problem_isomorphism() {
    let _g = lock();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let start = Instant::now();
    let mut passed = 0;
    for _ in 0..1000 {
        let m = random_matrix(&mut rng, MATRIX_WORD_LEN);
        let w = preimage(&m);
        passed += usize::from(sigma(&w) == m);
    }
    let elapsed = start.elapsed();
    report(3, "surjectivity: sigma(preimage(m)) = m", passed == 1000, elapsed, Duration::from_secs(2), &format!("{passed}/1000 exact"));
}

#[test]
fn criterion_04_abelianization() {
    let _g = lock();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let start = Instant::now();
    let mut hom = 0;
    for _ in 0..1000 {
        let m = random_matrix(&mut rng, 20);
        let n = random_matrix(&mut rng, 20);
        hom += usize::from(abelianize(&(&m * &n)) == abelianize(&m) + abelianize(&n));
    }
    let minus = abelianize(&Mat2Z::minus_identity()).value();
    let sl: std::collections::HashSet<u8> = (0..12).map(|k| abelianize(&a_power(k)).value()).collect();
    let psl: std::collections::HashSet<u8> =
        (0..6).map(|k| abelianize_proj(&ProjMat::new(a_power(k))).value()).collect();
    let elapsed = start.elapsed();
    let ok = hom == 1000 && minus == 6 && sl.len() == 12 && psl.len() == 6;
    let detail = format!("hom {hom}/1000, ab(-I) = {minus}, {} SL classes, {} PSL classes", sl.len(), psl.len());
    report(4, "abelianization onto Z/12 and Z/6", ok, elapsed, Duration::from_secs(1), &detail);
}

#[test]
fn criterion_05_f_identities() {
    let _g = lock();
    let start = Instant::now();
    let t = hexagon_translation();
    let mut failures = Vec::new();
    for n in -20..=20 {
        let ok = &f_matrix(n + 1) * &f_matrix(n - 1) == f_matrix(n)
            && &f_matrix(n) * &f_matrix(n - 3) == t
            && conjugated_commutator(n) == t;
        if !ok {
            failures.push(n);
        }
    }
    let elapsed = start.elapsed();
    report(5, "f(n+1) f(n-1) = f(n), A^-6 X^2 = f(n) f(n-3) = f(n-1)[f(n-2), f(n-1)]f(n-1)^-1", failures.is_empty(), elapsed, Duration::from_millis(10), &format!("n in [-20, 20], failures {failures:?}"));
}

/// Depth-first enumeration of every reduced word of length ≤ `max_len`,
/// carrying the matrix product alongside.
fn enumerate_free_words(max_len: usize, visit: &mut impl FnMut(&[(FreeGen, i8)], &Mat2Z)) {
    let gens: Vec<(FreeGen, i8, Mat2Z)> = [FreeGen::G1, FreeGen::G2]
        .iter()
        .flat_map(|&g| {
            let m = match g {
                FreeGen::G1 => Mat2Z::new(1, 1, 1, 2).unwrap(),
                FreeGen::G2 => Mat2Z::new(2, 1, 1, 1).unwrap(),
            };
            [(g, 1, m.clone()), (g, -1, m.inv())]
        })
        .collect();
    fn go(
        gens: &[(FreeGen, i8, Mat2Z)],
        prefix: &mut Vec<(FreeGen, i8)>,
        m: &Mat2Z,
        left: usize,
        visit: &mut impl FnMut(&[(FreeGen, i8)], &Mat2Z),
    ) {
        visit(prefix, m);
        if left == 0 {
            return;
        }
        for (g, e, gm) in gens {
            if prefix.last() == Some(&(*g, -*e)) {
                continue;
            }
            prefix.push((*g, *e));
            go(gens, prefix, &(m * gm), left - 1, visit);
            prefix.pop();
        }
    }
    go(&gens, &mut Vec::new(), &Mat2Z::identity(), max_len, visit);
}

#[test]
fn criterion_06_free_factorization() {
    let _g = lock();
    let start = Instant::now();
    let (mut total, mut round_trip, mut trivial) = (0usize, 0usize, 0usize);
    enumerate_free_words(10, &mut |letters, m| {
        total += 1;
        let w = FreeWord::from_pairs(letters.iter().map(|&(g, e)| (g, i64::from(e))));
        if factor_derived(m).map(|f| f == w).unwrap_or(false) {
            round_trip += 1;
        }
        if !letters.is_empty() && m.is_central() {
            trivial += 1;
        }
    });
    let elapsed = start.elapsed();
    let ok = total == 118_097 && round_trip == total && trivial == 0;
    let detail = format!("{round_trip}/{total} words round-trip, {trivial} nonempty words equal to +-I");
    report(6, "free factorization of all reduced words of length <= 10", ok, elapsed, Duration::from_secs(30), &detail);
}

#[test]
fn criterion_07_hexagon_pairing() {
    let _g = lock();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let points: Vec<HPoint> =
        (0..100).map(|_| HPoint::new(rng.gen_range(-10.0..10.0), rng.gen_range(0.01..10.0)).unwrap()).collect();
    let start = Instant::now();
    let pairing_failures: Vec<i64> = (-10..=10).filter(|&n| !verify_pairing(n, 1e-9)).collect();
    let t = hexagon_translation();
    let max_err = points.iter().map(|&z| mobius_apply(&t, z).dist(z.shift(6.0))).fold(0.0, f64::max);
    let elapsed = start.elapsed();
    let ok = pairing_failures.is_empty() && max_err < 1e-9;
    let detail = format!("pairing failures {pairing_failures:?}, max |A^-6X^2 z - (z+6)| = {max_err:.2e}");
    report(7, "hexagon side pairings and z -> z + 6", ok, elapsed, Duration::from_millis(100), &detail);
}

#[test]
fn criterion_08_cusp() {
    let _g = lock();
    let start = Instant::now();
    let r = cusp_report();
    let elapsed = start.elapsed();
    let b = BigInt::from;
    let ok = r.trace_g1 == b(3)
        && r.trace_g2 == b(3)
        && r.trace_g1g2 == b(6)
        && r.markoff_sum == b(54)
        && r.markoff_product == b(54)
        && r.commutator_trace == b(-2)
        && r.fricke_trace == r.commutator_trace
        && !r.commutator.is_central();
    let detail = format!(
        "traces ({}, {}, {}), Markoff {} = {}, tr[f-1^-1, f-2] = {} (Fricke {})",
        r.trace_g1, r.trace_g2, r.trace_g1g2, r.markoff_sum, r.markoff_product, r.commutator_trace, r.fricke_trace
    );
    report(8, "cusp commutator is parabolic", ok, elapsed, Duration::from_millis(1), &detail);
}

#[test]
fn criterion_09_reduction() {
    let _g = lock();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let points: Vec<HPoint> = (0..1000)
        .map(|_| {
            let im = 10f64.powf(rng.gen_range(-3.0..3.0));
            HPoint::new(rng.gen_range(-100.0..100.0), im).unwrap()
        })
        .collect();
    let start = Instant::now();
    let (mut landed, mut max_err) = (0, 0.0f64);
    for &z in &points {
        let (r, w) = reduce_point(z, 1e-9).expect("reduction converges");
        landed += usize::from(in_standard_domain(r, 1e-9));
        let m = w.eval();
        max_err = max_err.max(mobius_apply(&m, z).dist(r)).max(mobius_apply(&m.inv(), r).dist(z));
    }
    let elapsed = start.elapsed();
    let ok = landed == 1000 && max_err < 1e-6;
    report(9, "reduction to the standard domain", ok, elapsed, Duration::from_secs(1), &format!("{landed}/1000 in domain, max round-trip error {max_err:.2e}"));
}

#[test]
fn criterion_10_appendix_numerics() {
    let _g = lock();
    const R: u32 = 60;
    const TOL: f64 = 1e-3;
    let start = Instant::now();

    let e_p = wp(TorusPoint::half_p(), R).finite().unwrap().norm();
    let (half, _) = check_half_values(R, TOL);
    let sum = (half.e_m + half.e_n).norm();
    let sym = symmetry_errors(|z| wp_complex(z, R), 100, SEED);
    let axes = check_axis_images(HALF_TURN_SAMPLES, R, TOL);
    let turns = check_half_turns(&stated_half_turns(), TOL);

    let elapsed = start.elapsed();

    let checks = [
        ("|wp((1+i)/2)| < 1e-3", e_p < TOL, format!("{e_p:.3e}")),
        ("|wp(1/2) + wp(i/2)| < 1e-3, wp(1/2) > 0", sum < TOL && half.e_m.re > 0.0, format!("{sum:.3e}, wp(1/2) = {:.6}", half.e_m.re)),
        ("parity/periodicity < 1e-4 over 100 samples", sym.max() < 1e-4 && sym.compared == 100, format!("{:.3e}", sym.max())),
        ("axis images within 1e-3 of the stated half-axes", axes.max_axis_error() < TOL, {
            let parts: Vec<String> = axes.images.iter().map(|i| {
                format!("{}->{} err {:.2e} (observed {})", i.axis.name(), i.stated.name(), i.stated_error,
                    i.observed.map_or("none", |h| h.name()))
            }).collect();
            parts.join(", ")
        }),
        ("half-turn axis permutation for A", turns.ok_for("A"), String::new()),
        ("half-turn axis permutation for B", turns.ok_for("B"), {
            let bad: Vec<String> = turns.results.iter().filter(|r| !r.ok).map(|r| {
                format!("{} {}->{} lands on {}", r.claim.label, r.claim.source.name(), r.claim.target.name(),
                    r.observed.map_or("none", |h| h.name()))
            }).collect();
            bad.join(", ")
        }),
    ];
    for (name, ok, detail) in &checks {
        println!("    [{}] {name} {detail}", if *ok { "ok" } else { "FAILED" });
    }
    let ok = checks.iter().all(|c| c.1);
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    report(10, "Weierstrass appendix numerics at R = 60", ok, elapsed, Duration::from_secs(30), &format!("failed sub-checks: {failed:?}"));
}
