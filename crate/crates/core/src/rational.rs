//! Exact slopes.

use num_rational::Ratio;
use serde::Serializer;

pub type Rational = Ratio<i64>;

/// Serializes as `"num/den"`, or `"n"` when the denominator is 1.
pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}
