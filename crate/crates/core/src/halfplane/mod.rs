//! Möbius action of SL(2,ℤ) on the upper half-plane and reduction to the
//! standard fundamental domain `{|Re z| ≤ ½, |z| ≥ 1}`.

mod domain;
mod svg;

pub use domain::{
    cusp_commutator, cusp_report, domain_b, fricke_commutator_trace, hexagon, side_pairing,
    verify_pairing, CuspReport, DomainSpec, Geodesic,
};
pub use svg::{emit_tiling_svg, SvgOptions};

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::sl2::Mat2Z;
use crate::word::{Gen, GenWord};

/// Absolute tolerance used for boundary and endpoint comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

const REDUCTION_BUDGET: usize = 10_000;

/// A point of the upper half-plane; `im > 0` always.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPoint {
    re: f64,
    im: f64,
}

impl HPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !im.is_finite() || !re.is_finite() || im <= 0.0 {
            return Err(Error::NotInUpperHalfPlane { im });
        }
        Ok(HPoint { re, im })
    }

    /// `i`.
    pub fn i() -> Self {
        HPoint { re: 0.0, im: 1.0 }
    }

    pub fn re(self) -> f64 {
        self.re
    }

    pub fn im(self) -> f64 {
        self.im
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn dist(self, other: HPoint) -> f64 {
        (self.to_complex() - other.to_complex()).norm()
    }

    /// Horizontal translate `z + t`.
    pub fn shift(self, t: f64) -> HPoint {
        HPoint { re: self.re + t, im: self.im }
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.re, self.im)
    }
}

/// A point of the boundary `ℝ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinity,
}

impl ExtReal {
    pub fn approx_eq(self, other: ExtReal, tol: f64) -> bool {
        match (self, other) {
            (ExtReal::Infinity, ExtReal::Infinity) => true,
            (ExtReal::Finite(x), ExtReal::Finite(y)) => (x - y).abs() < tol,
            // a huge finite value is not identified with ∞
            _ => false,
        }
    }
}

fn entries_f64(m: &Mat2Z) -> [f64; 4] {
    m.entries().map(|x: &BigInt| x.to_f64().expect("BigInt always converts to f64"))
}

/// `(a·z + b) / (c·z + d)`.
///
/// The imaginary part is computed as `Im z / |c·z + d|²`, which is positive
/// whenever `Im z` is; `m` and `−m` give identical results.
pub fn mobius_apply(m: &Mat2Z, z: HPoint) -> HPoint {
    let [a, b, c, d] = entries_f64(m);
    let (x, y) = (z.re, z.im);
    let (dr, di) = (c * x + d, c * y);
    let den = dr * dr + di * di;
    let re = ((a * x + b) * dr + a * c * y * y) / den;
    let im = y / den;
    debug_assert!(im > 0.0);
    HPoint { re, im }
}

/// Action on the boundary, `t ↦ (a·t + b)/(c·t + d)` with `∞ ↦ a/c`.
pub fn mobius_boundary(m: &Mat2Z, t: ExtReal) -> ExtReal {
    let [a, b, c, d] = entries_f64(m);
    match t {
        ExtReal::Infinity if c == 0.0 => ExtReal::Infinity,
        ExtReal::Infinity => ExtReal::Finite(a / c),
        ExtReal::Finite(t) => {
            let den = c * t + d;
            if den == 0.0 {
                ExtReal::Infinity
            } else {
                ExtReal::Finite((a * t + b) / den)
            }
        }
    }
}

/// Membership in the closed standard domain, widened by `tol`.
pub fn in_standard_domain(z: HPoint, tol: f64) -> bool {
    z.re.abs() <= 0.5 + tol && z.to_complex().norm() >= 1.0 - tol
}

/// Moves `z` into the standard domain by unit translations and `z ↦ −1/z`.
///
/// Returns `(z′, w)` with `w` acting as `z ↦ z′`. Points on the boundary are
/// accepted as they are.
pub fn reduce_point(z: HPoint, tol: f64) -> Result<(HPoint, GenWord)> {
    let mut cur = z;
    // generator powers in the order they were applied
    let mut steps: Vec<(Gen, i64)> = Vec::new();
    for _ in 0..REDUCTION_BUDGET {
        if cur.re.abs() > 0.5 + tol {
            let k = cur.re.round();
            // A^k acts as z ↦ z − k
            steps.push((Gen::A, k as i64));
            cur = cur.shift(-k);
        } else if cur.to_complex().norm() < 1.0 - tol {
            steps.extend([(Gen::A, 1), (Gen::B, 1), (Gen::A, 1)].iter().rev().copied());
            let w = -cur.to_complex().inv();
            cur = HPoint { re: w.re, im: w.im };
        } else {
            let word = GenWord::from_pairs(steps.iter().rev().copied());
            // recompute from the exact matrix so the round trip is tight
            let exact = mobius_apply(&word.eval(), z);
            if in_standard_domain(exact, tol) {
                return Ok((exact, word));
            }
            cur = exact;
        }
    }
    Err(Error::ReductionBudget { iterations: REDUCTION_BUDGET })
}
