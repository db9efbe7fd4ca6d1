//! Exact computation with the braid-group presentation of SL(2,ℤ).
//!
//! - [`sl2`]: exact SL(2,ℤ) and PSL(2,ℤ) arithmetic.
//! - [`word`]: run-length words over `{A, B}`, `{a, b}` and `{g1, g2}`.
//! - [`presentation`]: words for matrices, relators, abelianization.
//! - [`derived`]: the `fₙ` family and factorization in the free derived subgroup.
//! - [`braid`]: B₃ and its word problem through `σ: a ↦ A, b ↦ B`.
//! - [`halfplane`]: Möbius action, fundamental domains, hexagon side pairings, SVG.
//! - [`weierstrass`]: ℘ for the Gaussian lattice and the quotient-map checks.
//! - [`verify`]: seeded randomized checks of the presentation.

pub mod braid;
pub mod derived;
pub mod error;
pub mod halfplane;
pub mod presentation;
pub mod sl2;
mod text;
pub mod verify;
pub mod weierstrass;
pub mod word;

pub use error::{Error, Result};
pub use sl2::{Mat2Z, ProjMat};
pub use word::{BraidWord, FreeWord, GenWord};
