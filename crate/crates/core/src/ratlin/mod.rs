//! Exact linear algebra over ℤ and ℚ: matrices, lattices, exterior powers,
//! polynomials and factorization.

pub mod arith;
pub mod exterior;
pub mod factor;
pub mod height;
pub mod lattice;
pub mod matrix;
pub mod modp;
pub mod poly;

pub use exterior::{wedge, wedge_int, ExteriorVector};
pub use factor::{factor_over_q, is_irreducible};
pub use height::finite_height;
pub use lattice::{
    dual_lattice, hnf, integral_points_of_span, lattice_index, saturate, smith, DualLattice,
    IntegerLattice, RationalLattice,
};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use poly::{IntPolynomial, ModPoly, RatPoly};
