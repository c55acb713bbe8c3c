//! Exact arithmetic: GF(p) scalars, univariate polynomials and their
//! factorization, dense linear algebra.

pub mod factor;
pub mod field;
pub mod matrix;
pub mod poly;

pub use factor::{factor, is_irreducible};
pub use field::{Gf, Scalar};
pub use matrix::Matrix;
pub use poly::Poly;
