use std::fmt;

use super::model::HyperellipticCurve;
use crate::algebra::{Gf, Poly};
use crate::error::{Error, Result};

/// An element `(a(x) + b(x)*y) / d(x)` of the function field, kept with
/// `gcd(a, b, d) = 1` and `d` monic so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveFunction {
    a: Poly,
    b: Poly,
    d: Poly,
}

impl CurveFunction {
    pub fn new(a: Poly, b: Poly, d: Poly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self::canonical(a, b, d))
    }

    fn canonical(a: Poly, b: Poly, d: Poly) -> Self {
        let k = d.field();
        if a.is_zero() && b.is_zero() {
            return CurveFunction {
                a,
                b,
                d: Poly::one(k),
            };
        }
        let g = a.gcd(&b).gcd(&d);
        let (a, b, d) = if g.is_one() {
            (a, b, d)
        } else {
            (
                a.div_exact(&g).expect("gcd divides"),
                b.div_exact(&g).expect("gcd divides"),
                d.div_exact(&g).expect("gcd divides"),
            )
        };
        let s = k.inv(d.lc());
        CurveFunction {
            a: a.scale(s),
            b: b.scale(s),
            d: d.scale(s),
        }
    }

    pub fn from_poly(a: Poly) -> Self {
        let k = a.field();
        Self::canonical(a, Poly::zero(k), Poly::one(k))
    }

    pub fn constant(k: Gf, c: u64) -> Self {
        Self::from_poly(Poly::constant(k, c))
    }

    pub fn x(k: Gf) -> Self {
        Self::from_poly(Poly::x(k))
    }

    pub fn y(k: Gf) -> Self {
        Self::canonical(Poly::zero(k), Poly::one(k), Poly::one(k))
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    pub fn d(&self) -> &Poly {
        &self.d
    }

    pub fn field(&self) -> Gf {
        self.d.field()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::canonical(
            &(&self.a * &o.d) + &(&o.a * &self.d),
            &(&self.b * &o.d) + &(&o.b * &self.d),
            &self.d * &o.d,
        )
    }

    pub fn neg(&self) -> Self {
        Self::canonical(-&self.a, -&self.b, self.d.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::canonical(self.a.scale(c), self.b.scale(c), self.d.clone())
    }

    pub fn mul(&self, o: &Self, curve: &HyperellipticCurve) -> Self {
        let bb = &self.b * &o.b;
        Self::canonical(
            &(&self.a * &o.a) + &(&bb * curve.f()),
            &(&self.a * &o.b) + &(&self.b * &o.a),
            &self.d * &o.d,
        )
    }

    /// Norm of the numerator, `a^2 - b^2 f`; zero only for the zero function.
    pub fn numerator_norm(&self, curve: &HyperellipticCurve) -> Poly {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * curve.f())
    }

    pub fn inv(&self, curve: &HyperellipticCurve) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of the zero function".into()));
        }
        let n = self.numerator_norm(curve);
        Ok(Self::canonical(&self.a * &self.d, -&(&self.b * &self.d), n))
    }

    pub fn div(&self, o: &Self, curve: &HyperellipticCurve) -> Result<Self> {
        Ok(self.mul(&o.inv(curve)?, curve))
    }
}

impl fmt::Display for CurveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => format!("{}", self.a),
            (true, false) if self.b.is_one() => "y".to_string(),
            (true, false) => format!("({})*y", self.b),
            (false, false) if self.b.is_one() => format!("{}+y", self.a),
            (false, false) => format!("{}+({})*y", self.a, self.b),
        };
        if self.d.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", self.d)
        }
    }
}
