//! Weierstrass ℘ for the Gaussian lattice `ℤ + iℤ`, evaluated as a truncated
//! lattice sum, and numerical checks of how it identifies the torus modulo
//! `±1` with the Riemann sphere.
//!
//! ```text
//! ℘(z) = 1/z² + Σ_{γ ≠ 0} 1/(z − γ)² − 1/γ²
//! ```
//!
//! The sum runs over square shells `max(|Re γ|, |Im γ|) = r` for
//! `r = 1..=R`, each shell accumulated separately and then added in order.
//! The point is first moved to its representative in `[−½, ½)²`, so the
//! truncation window is centred on it; this makes the truncated function
//! exactly periodic and even, with an error of order `1/R²`.

use std::fmt;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::sl2::Mat2Z;

/// Inputs this close to a lattice point evaluate to `∞`.
pub const POLE_CUTOFF: f64 = 1e-6;

/// A point of `ℂ / (ℤ + iℤ)` with coordinates in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    re: f64,
    im: f64,
}

fn unit_mod(x: f64) -> f64 {
    let r = x - x.floor();
    if r >= 1.0 { 0.0 } else { r }
}

fn centred_mod(x: f64) -> f64 {
    let r = unit_mod(x);
    if r >= 0.5 { r - 1.0 } else { r }
}

impl TorusPoint {
    pub fn new(re: f64, im: f64) -> Self {
        TorusPoint { re: unit_mod(re), im: unit_mod(im) }
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }

    pub fn re(self) -> f64 {
        self.re
    }

    pub fn im(self) -> f64 {
        self.im
    }

    /// The representative in `[−½, ½)²`.
    pub fn centred(self) -> Complex64 {
        Complex64::new(centred_mod(self.re), centred_mod(self.im))
    }

    /// Image under the linear map of an integer matrix acting on the column
    /// vector `(re, im)`.
    pub fn transform(self, m: &Mat2Z) -> TorusPoint {
        let [a, b, c, d] = m.entries().map(|x| x.to_f64().expect("BigInt always converts to f64"));
        TorusPoint::new(a * self.re + b * self.im, c * self.re + d * self.im)
    }

    /// Euclidean distance to the nearest lattice point.
    pub fn lattice_distance(self) -> f64 {
        self.centred().norm()
    }

    /// The marked points `m = ½`, `n = ½i`, `p = ½(1 + i)`.
    pub fn half_m() -> Self {
        TorusPoint::new(0.5, 0.0)
    }
    pub fn half_n() -> Self {
        TorusPoint::new(0.0, 0.5)
    }
    pub fn half_p() -> Self {
        TorusPoint::new(0.5, 0.5)
    }
}

/// A point of `ℂ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

impl SpherePoint {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            SpherePoint::Finite(w) => Some(w),
            SpherePoint::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    pub fn to_json(self) -> Value {
        match self {
            SpherePoint::Finite(w) => json!({ "re": w.re, "im": w.im }),
            SpherePoint::Infinity => json!("inf"),
        }
    }
}

impl fmt::Display for SpherePoint {
    /// `re im`, or `inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Finite(w) => write!(f, "{} {}", w.re, w.im),
            SpherePoint::Infinity => f.write_str("inf"),
        }
    }
}

/// The raw truncated lattice sum at `z`, without any reduction.
pub fn lattice_sum(z: Complex64, radius: u32) -> Complex64 {
    let mut total = z.powi(-2);
    let r_max = radius as i64;
    for r in 1..=r_max {
        let mut shell = Complex64::new(0.0, 0.0);
        let mut add = |m: i64, n: i64| {
            let g = Complex64::new(m as f64, n as f64);
            shell += (z - g).powi(-2) - g.powi(-2);
        };
        for m in -r..=r {
            add(m, r);
            add(m, -r);
        }
        for n in (-r + 1)..r {
            add(r, n);
            add(-r, n);
        }
        total += shell;
    }
    total
}

/// `℘(z)` truncated at Chebyshev radius `radius`.
pub fn wp(z: TorusPoint, radius: u32) -> SpherePoint {
    let c = z.centred();
    if c.norm() < POLE_CUTOFF {
        SpherePoint::Infinity
    } else {
        SpherePoint::Finite(lattice_sum(c, radius))
    }
}

/// `℘` at an arbitrary complex number.
pub fn wp_complex(z: Complex64, radius: u32) -> SpherePoint {
    wp(TorusPoint::from_complex(z), radius)
}

/// Largest parity and periodicity defects of `f` over seeded random samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryErrors {
    pub parity: f64,
    pub period_re: f64,
    pub period_im: f64,
    /// Samples actually compared (the rest were too close to a pole).
    pub compared: usize,
}

impl SymmetryErrors {
    pub fn max(&self) -> f64 {
        self.parity.max(self.period_re).max(self.period_im)
    }
}

/// Minimum distance from the lattice for a sample to be compared.
const SAMPLE_CLEARANCE: f64 = 0.05;

/// Measures `|f(z) − f(−z)|`, `|f(z) − f(z+1)|`, `|f(z) − f(z+i)|` at `samples`
/// uniform points of the unit square, skipping points near the lattice.
pub fn symmetry_errors(f: impl Fn(Complex64) -> SpherePoint, samples: usize, seed: u64) -> SymmetryErrors {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut errs = SymmetryErrors { parity: 0.0, period_re: 0.0, period_im: 0.0, compared: 0 };
    let diff = |p: SpherePoint, q: SpherePoint| match (p, q) {
        (SpherePoint::Finite(a), SpherePoint::Finite(b)) => Some((a - b).norm()),
        (SpherePoint::Infinity, SpherePoint::Infinity) => Some(0.0),
        _ => None,
    };
    let mut taken = 0;
    while taken < samples {
        let z = Complex64::new(rng.gen::<f64>(), rng.gen::<f64>());
        if TorusPoint::from_complex(z).lattice_distance() < SAMPLE_CLEARANCE {
            continue;
        }
        taken += 1;
        let w = f(z);
        let (Some(p), Some(x), Some(y)) = (
            diff(w, f(-z)),
            diff(w, f(z + 1.0)),
            diff(w, f(z + Complex64::i())),
        ) else {
            // mixed finite/infinite values count as unbounded defects
            errs.parity = f64::INFINITY;
            continue;
        };
        errs.parity = errs.parity.max(p);
        errs.period_re = errs.period_re.max(x);
        errs.period_im = errs.period_im.max(y);
        errs.compared += 1;
    }
    errs
}

/// True when `℘` is even and doubly periodic to within `tol` at `samples`
/// random points.
pub fn check_parity_periodicity(samples: usize, radius: u32, tol: f64) -> bool {
    symmetry_errors(|z| wp_complex(z, radius), samples, 0).max() < tol
}

/// `℘` at the three half-periods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfValues {
    pub e_m: Complex64,
    pub e_n: Complex64,
    pub e_p: Complex64,
}

impl HalfValues {
    pub fn compute(radius: u32) -> Self {
        let at = |t: TorusPoint| wp(t, radius).finite().expect("half-periods are not poles");
        HalfValues {
            e_m: at(TorusPoint::half_m()),
            e_n: at(TorusPoint::half_n()),
            e_p: at(TorusPoint::half_p()),
        }
    }

    /// `e_m` real and positive, `e_n = −e_m`, `e_p = 0`, all within `tol`.
    pub fn holds(&self, tol: f64) -> bool {
        self.e_m.im.abs() < tol
            && self.e_m.re > 0.0
            && (self.e_m + self.e_n).norm() < tol
            && self.e_p.norm() < tol
    }

    /// Should vanish: the three values are the roots of a depressed cubic.
    pub fn root_sum(&self) -> Complex64 {
        self.e_m + self.e_n + self.e_p
    }
}

pub fn check_half_values(radius: u32, tol: f64) -> (HalfValues, bool) {
    let h = HalfValues::compute(radius);
    (h, h.holds(tol))
}

/// One-parameter subgroups of the torus through the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// `ℝ/ℤ`.
    T,
    /// `ℝi/ℤi`.
    U,
    /// `ℝ(1+i)/ℤ(1+i)`.
    DiagPlus,
    /// `ℝ(1−i)/ℤ(1−i)`.
    DiagMinus,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::T, Axis::U, Axis::DiagPlus, Axis::DiagMinus];

    fn direction(self) -> (f64, f64) {
        match self {
            Axis::T => (1.0, 0.0),
            Axis::U => (0.0, 1.0),
            Axis::DiagPlus => (1.0, 1.0),
            Axis::DiagMinus => (1.0, -1.0),
        }
    }

    /// The point `s · direction`.
    pub fn point(self, s: f64) -> TorusPoint {
        let (x, y) = self.direction();
        TorusPoint::new(s * x, s * y)
    }

    /// The half-axis this subgroup is asserted to map onto.
    pub fn stated_image(self) -> HalfAxis {
        match self {
            Axis::T => HalfAxis::HPlus,
            Axis::U => HalfAxis::HMinus,
            Axis::DiagPlus => HalfAxis::VPlus,
            Axis::DiagMinus => HalfAxis::VMinus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::T => "t",
            Axis::U => "u",
            Axis::DiagPlus => "delta_plus",
            Axis::DiagMinus => "delta_minus",
        }
    }

    /// Sample parameters in `(0, ½]`; the rest of the loop is the mirror image.
    fn samples(samples: usize) -> impl Iterator<Item = f64> {
        (1..=samples).map(move |k| 0.5 * k as f64 / samples as f64)
    }
}

/// The four closed half-lines of the real and imaginary axes that the
/// coordinate and diagonal subgroups are sent to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfAxis {
    /// `[℘(m), +∞)`.
    HPlus,
    /// `(−∞, ℘(n)]`.
    HMinus,
    /// `[0, +∞)·i`.
    VPlus,
    /// `(−∞, 0]·i`.
    VMinus,
}

impl HalfAxis {
    pub const ALL: [HalfAxis; 4] = [HalfAxis::HPlus, HalfAxis::HMinus, HalfAxis::VPlus, HalfAxis::VMinus];

    pub fn name(self) -> &'static str {
        match self {
            HalfAxis::HPlus => "H+",
            HalfAxis::HMinus => "H-",
            HalfAxis::VPlus => "V+",
            HalfAxis::VMinus => "V-",
        }
    }

    /// Euclidean distance from `w` to the half-line; `∞` lies on all of them.
    pub fn distance(self, w: SpherePoint, half: &HalfValues) -> f64 {
        let Some(w) = w.finite() else { return 0.0 };
        match self {
            HalfAxis::HPlus => {
                let e = half.e_m.re;
                if w.re >= e { w.im.abs() } else { (w - e).norm() }
            }
            HalfAxis::HMinus => {
                let e = half.e_n.re;
                if w.re <= e { w.im.abs() } else { (w - e).norm() }
            }
            HalfAxis::VPlus => {
                if w.im >= 0.0 { w.re.abs() } else { w.norm() }
            }
            HalfAxis::VMinus => {
                if w.im <= 0.0 { w.re.abs() } else { w.norm() }
            }
        }
    }
}

/// Largest distance from the image of a set of torus points to `target`.
fn max_distance(points: impl Iterator<Item = TorusPoint>, target: HalfAxis, radius: u32, half: &HalfValues) -> f64 {
    points.map(|p| target.distance(wp(p, radius), half)).fold(0.0, f64::max)
}

/// The half-axis a sampled curve lies on, if any within `tol`.
fn classify(points: &[TorusPoint], radius: u32, half: &HalfValues, tol: f64) -> (Option<HalfAxis>, f64) {
    let values: Vec<SpherePoint> = points.iter().map(|&p| wp(p, radius)).collect();
    let best = HalfAxis::ALL
        .iter()
        .map(|&h| (h, values.iter().map(|&w| h.distance(w, half)).fold(0.0, f64::max)))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("four candidates");
    ((best.1 < tol).then_some(best.0), best.1)
}

/// Where one subgroup's image lands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisImage {
    pub axis: Axis,
    pub stated: HalfAxis,
    /// Max distance from sampled images to the stated half-axis.
    pub stated_error: f64,
    /// The half-axis the images actually lie on, when one fits within `tol`.
    pub observed: Option<HalfAxis>,
    pub observed_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxisReport {
    pub images: Vec<AxisImage>,
}

impl AxisReport {
    /// Max over all axes of the distance to the stated half-axis.
    pub fn max_axis_error(&self) -> f64 {
        self.images.iter().map(|i| i.stated_error).fold(0.0, f64::max)
    }

    /// Max over all axes of the distance to the best-fitting half-axis.
    pub fn max_observed_error(&self) -> f64 {
        self.images.iter().map(|i| i.observed_error).fold(0.0, f64::max)
    }

    pub fn image_of(&self, axis: Axis) -> &AxisImage {
        self.images.iter().find(|i| i.axis == axis).expect("all four axes present")
    }
}

/// Samples each of the four subgroups and measures how far its ℘-image is
/// from the stated half-axis, also recording which half-axis it does lie on.
pub fn check_axis_images(samples: usize, radius: u32, tol: f64) -> AxisReport {
    let half = HalfValues::compute(radius);
    let images = Axis::ALL
        .iter()
        .map(|&axis| {
            let pts: Vec<TorusPoint> = Axis::samples(samples).map(|s| axis.point(s)).collect();
            let stated = axis.stated_image();
            let stated_error = max_distance(pts.iter().copied(), stated, radius, &half);
            let (observed, observed_error) = classify(&pts, radius, &half, tol);
            AxisImage { axis, stated, stated_error, observed, observed_error }
        })
        .collect();
    AxisReport { images }
}

/// An assertion that the affine torus map of `matrix` sends the subgroup
/// `source` onto `target`, checked through ℘-images.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfTurnClaim {
    pub label: &'static str,
    pub matrix: Mat2Z,
    pub source: Axis,
    pub target: Axis,
}

/// The axis permutations asserted for `A` and `B`: `A` fixes `t` and sends
/// `u → Δ₋`, `Δ₊ → u`; `B` fixes `u` and sends `t → Δ₊`, `Δ₋ → u`.
pub fn stated_half_turns() -> Vec<HalfTurnClaim> {
    let (a, b) = (Mat2Z::gen_a(), Mat2Z::gen_b());
    let claim = |label, matrix: &Mat2Z, source, target| HalfTurnClaim { label, matrix: matrix.clone(), source, target };
    vec![
        claim("A", &a, Axis::T, Axis::T),
        claim("A", &a, Axis::U, Axis::DiagMinus),
        claim("A", &a, Axis::DiagPlus, Axis::U),
        claim("B", &b, Axis::U, Axis::U),
        claim("B", &b, Axis::T, Axis::DiagPlus),
        claim("B", &b, Axis::DiagMinus, Axis::U),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimResult {
    pub claim: HalfTurnClaim,
    /// Half-axis the target subgroup's ℘-image lies on.
    pub target_image: Option<HalfAxis>,
    /// Half-axis the pushed-forward source lies on.
    pub observed: Option<HalfAxis>,
    /// Max distance from pushed-forward samples to the target's half-axis.
    pub error: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HalfTurnReport {
    pub results: Vec<ClaimResult>,
}

impl HalfTurnReport {
    /// All claims carrying this label hold.
    pub fn ok_for(&self, label: &str) -> bool {
        self.results.iter().filter(|r| r.claim.label == label).all(|r| r.ok)
    }

    pub fn all_ok(&self) -> bool {
        self.results.iter().all(|r| r.ok)
    }
}

/// Default sampling for the half-turn checks.
pub const HALF_TURN_SAMPLES: usize = 40;
pub const HALF_TURN_RADIUS: u32 = 60;

/// Pushes sampled points of each claim's source subgroup through the torus
/// map and then ℘, and checks that they land on the half-axis carrying the
/// ℘-image of the target subgroup.
///
/// This is a set-level check: it says nothing about the orientation of the
/// induced map on the sphere.
pub fn check_half_turns(claims: &[HalfTurnClaim], tol: f64) -> HalfTurnReport {
    let radius = HALF_TURN_RADIUS;
    let half = HalfValues::compute(radius);
    let results = claims
        .iter()
        .map(|c| {
            let target_pts: Vec<TorusPoint> = Axis::samples(HALF_TURN_SAMPLES).map(|s| c.target.point(s)).collect();
            let (target_image, _) = classify(&target_pts, radius, &half, tol);
            let pushed: Vec<TorusPoint> = Axis::samples(HALF_TURN_SAMPLES)
                .map(|s| c.source.point(s).transform(&c.matrix))
                .collect();
            let (observed, _) = classify(&pushed, radius, &half, tol);
            let error = match target_image {
                Some(h) => max_distance(pushed.iter().copied(), h, radius, &half),
                None => f64::INFINITY,
            };
            ClaimResult { claim: c.clone(), target_image, observed, error, ok: error < tol }
        })
        .collect();
    HalfTurnReport { results }
}

/// The combined appendix report, serialized for the CLI.
#[derive(Debug, Clone, PartialEq)]
pub struct WpReport {
    pub radius: u32,
    pub tol: f64,
    pub half: HalfValues,
    pub half_values_ok: bool,
    pub symmetry: SymmetryErrors,
    pub axes: AxisReport,
    pub half_turns: HalfTurnReport,
}

impl WpReport {
    pub fn run(radius: u32, tol: f64) -> Self {
        let (half, half_values_ok) = check_half_values(radius, tol);
        WpReport {
            radius,
            tol,
            half,
            half_values_ok,
            symmetry: symmetry_errors(|z| wp_complex(z, radius), 100, 0),
            axes: check_axis_images(HALF_TURN_SAMPLES, radius, tol),
            half_turns: check_half_turns(&stated_half_turns(), tol),
        }
    }

    pub fn to_json(&self) -> Value {
        let c = |w: Complex64| json!({ "re": w.re, "im": w.im });
        let opt = |h: Option<HalfAxis>| h.map_or(Value::Null, |h| json!(h.name()));
        json!({
            "radius": self.radius,
            "tol": self.tol,
            "e_m": c(self.half.e_m),
            "e_n": c(self.half.e_n),
            "e_p": c(self.half.e_p),
            "half_values_ok": self.half_values_ok,
            "symmetry_error": self.symmetry.max(),
            "max_axis_error": self.axes.max_axis_error(),
            "axes": self.axes.images.iter().map(|i| json!({
                "axis": i.axis.name(),
                "stated": i.stated.name(),
                "stated_error": i.stated_error,
                "observed": opt(i.observed),
            })).collect::<Vec<_>>(),
            "half_turn_ok": { "A": self.half_turns.ok_for("A"), "B": self.half_turns.ok_for("B") },
            "half_turns": self.half_turns.results.iter().map(|r| json!({
                "matrix": r.claim.label,
                "source": r.claim.source.name(),
                "target": r.claim.target.name(),
                "target_image": opt(r.target_image),
                "observed": opt(r.observed),
                "ok": r.ok,
            })).collect::<Vec<_>>(),
        })
    }
}
