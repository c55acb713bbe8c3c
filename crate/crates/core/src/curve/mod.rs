//! The curve model, its places and the function field.

mod function;
mod model;
pub(crate) mod place;

pub use function::CurveFunction;
pub use model::HyperellipticCurve;
pub use place::Place;
