//! Exact computations on hyperelliptic curves `y^2 = f(x)` over GF(p):
//! places and valuations, Riemann–Roch spaces, Clifford indices, and the
//! (semi-)stability of the syzygy bundle `E_L` of a globally generated line
//! bundle `L`, with linear-algebra witnesses for every verdict.

pub mod algebra;
pub mod curve;
pub mod destab;
pub mod divisor;
pub mod error;
pub mod rational;
pub mod syzygy;
pub mod text;

pub use algebra::{Gf, Matrix, Poly, Scalar};
pub use curve::{CurveFunction, HyperellipticCurve, Place};
pub use destab::{prop31_predict, Prop31Prediction, Prop31Report};
pub use divisor::{CliffordSearch, Divisor, RRBasis};
pub use error::{Error, Result};
pub use rational::Rational;
pub use syzygy::{
    slope_restricted_tangent, verdict_from_invariants, MultMapReport, NoetherReport,
    StabilityStatus, StabilityVerdict, SyzygyInvariants, WitnessSearch,
};
