//! The translated domains `Bₙ`, the six-tile hexagon, and its side pairings.

use num_bigint::BigInt;

use super::{mobius_apply, mobius_boundary, ExtReal, HPoint};
use crate::derived::f_matrix;
use crate::sl2::Mat2Z;

/// A hyperbolic geodesic given by its two ideal endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    pub ends: (ExtReal, ExtReal),
}

impl Geodesic {
    fn new(p: ExtReal, q: ExtReal) -> Self {
        Geodesic { ends: (p, q) }
    }

    /// Same unordered pair of endpoints.
    pub fn approx_eq(&self, other: &Geodesic, tol: f64) -> bool {
        let (p, q) = self.ends;
        let (r, s) = other.ends;
        (p.approx_eq(r, tol) && q.approx_eq(s, tol)) || (p.approx_eq(s, tol) && q.approx_eq(r, tol))
    }

    pub fn image(&self, m: &Mat2Z) -> Geodesic {
        Geodesic::new(mobius_boundary(m, self.ends.0), mobius_boundary(m, self.ends.1))
    }
}

/// `Bₙ`: the standard domain translated by `+n`.
///
/// Two vertical sides on `Re z = n ± ½` running up to the cusp at `∞`, and an
/// arc of the unit circle centred at `n` between the finite vertices
/// `n + e^{2πi/3}` and `n + e^{πi/3}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainSpec {
    pub n: i64,
    pub left: Geodesic,
    pub right: Geodesic,
    pub arc: Geodesic,
    pub left_vertex: HPoint,
    pub right_vertex: HPoint,
}

impl DomainSpec {
    /// Horizontal extent `[n − ½, n + ½]`.
    pub fn re_span(&self) -> (f64, f64) {
        let n = self.n as f64;
        (n - 0.5, n + 0.5)
    }

    pub fn contains(&self, z: HPoint, tol: f64) -> bool {
        super::in_standard_domain(z.shift(-(self.n as f64)), tol)
    }
}

pub fn domain_b(n: i64) -> DomainSpec {
    let c = n as f64;
    let h = 3f64.sqrt() / 2.0;
    DomainSpec {
        n,
        left: Geodesic::new(ExtReal::Finite(c - 0.5), ExtReal::Infinity),
        right: Geodesic::new(ExtReal::Finite(c + 0.5), ExtReal::Infinity),
        arc: Geodesic::new(ExtReal::Finite(c - 1.0), ExtReal::Finite(c + 1.0)),
        left_vertex: HPoint::new(c - 0.5, h).expect("positive height"),
        right_vertex: HPoint::new(c + 0.5, h).expect("positive height"),
    }
}

/// The tiles `B₀ … B₅`, a fundamental strip for `z ↦ z + 6`.
pub fn hexagon() -> Vec<DomainSpec> {
    (0..6).map(domain_b).collect()
}

/// The matrix gluing the arc side of `Bₙ` to the arc side of `Bₙ₊₃`.
pub fn side_pairing(n: i64) -> Mat2Z {
    f_matrix(n)
}

/// Checks that `fₙ` carries the arc side of `Bₙ` onto the arc side of `Bₙ₊₃`:
/// the two finite vertices map onto the two target vertices as a set, and
/// the ideal endpoints of the supporting geodesic map likewise.
pub fn verify_pairing(n: i64, tol: f64) -> bool {
    let f = side_pairing(n);
    let (src, dst) = (domain_b(n), domain_b(n + 3));
    let p = mobius_apply(&f, src.left_vertex);
    let q = mobius_apply(&f, src.right_vertex);
    let (r, s) = (dst.left_vertex, dst.right_vertex);
    let vertices = (p.dist(r) < tol && q.dist(s) < tol) || (p.dist(s) < tol && q.dist(r) < tol);
    vertices && src.arc.image(&f).approx_eq(&dst.arc, tol)
}

/// `[f₋₁⁻¹, f₋₂]`, the parabolic element fixing the cusp of the modular torus.
pub fn cusp_commutator() -> Mat2Z {
    Mat2Z::commutator(&f_matrix(-1).inv(), &f_matrix(-2))
}

/// Right-hand side of the Fricke identity
/// `tr[u,v] = tr²u + tr²v + tr²(uv) − tr u·tr v·tr(uv) − 2`.
pub fn fricke_commutator_trace(u: &Mat2Z, v: &Mat2Z) -> BigInt {
    let (x, y, z) = (u.trace(), v.trace(), (u * v).trace());
    &x * &x + &y * &y + &z * &z - &x * &y * &z - 2
}

/// Trace data for the pair `(f₋₂, f₋₁)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspReport {
    pub trace_g1: BigInt,
    pub trace_g2: BigInt,
    pub trace_g1g2: BigInt,
    /// `tr²g1 + tr²g2 + tr²(g1g2)`.
    pub markoff_sum: BigInt,
    /// `tr g1 · tr g2 · tr(g1g2)`.
    pub markoff_product: BigInt,
    pub commutator: Mat2Z,
    pub commutator_trace: BigInt,
    pub fricke_trace: BigInt,
}

impl CuspReport {
    pub fn is_parabolic_cusp(&self) -> bool {
        self.commutator.is_parabolic()
    }
}

pub fn cusp_report() -> CuspReport {
    let (u, v) = (f_matrix(-2), f_matrix(-1));
    let (x, y, z) = (u.trace(), v.trace(), (&u * &v).trace());
    let commutator = cusp_commutator();
    CuspReport {
        markoff_sum: &x * &x + &y * &y + &z * &z,
        markoff_product: &x * &y * &z,
        trace_g1: x,
        trace_g2: y,
        trace_g1g2: z,
        commutator_trace: commutator.trace(),
        commutator,
        fricke_trace: fricke_commutator_trace(&u, &v),
    }
}
