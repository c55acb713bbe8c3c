use std::fmt;

use crate::algebra::{Gf, Poly};
use crate::error::{Error, Result};

/// The odd-degree model `y^2 = f(x)` over GF(p), with `f` monic and squarefree
/// of degree `2g + 1`. Such a model has a single place at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticCurve {
    k: Gf,
    f: Poly,
    genus: usize,
}

impl HyperellipticCurve {
    pub fn new(f: Poly) -> Result<Self> {
        let k = f.field();
        let deg = f
            .degree()
            .ok_or_else(|| Error::Domain("f must be nonzero".into()))?;
        if deg < 5 || deg % 2 == 0 {
            return Err(Error::Domain(format!(
                "f must have odd degree 2g+1 >= 5, got degree {deg}"
            )));
        }
        if !f.is_monic() {
            return Err(Error::Domain(format!("f = {f} must be monic")));
        }
        let g = f.gcd(&f.derivative());
        if !g.is_one() {
            return Err(Error::Domain(format!(
                "f = {f} is not squarefree (gcd(f, f') = {g})"
            )));
        }
        Ok(HyperellipticCurve {
            k,
            f,
            genus: (deg - 1) / 2,
        })
    }

    pub fn from_coeffs(p: u64, coeffs: &[i64]) -> Result<Self> {
        let k = Gf::new(p)?;
        HyperellipticCurve::new(Poly::from_i64(k, coeffs))
    }

    #[inline]
    pub fn field(&self) -> Gf {
        self.k
    }

    pub fn p(&self) -> u64 {
        self.k.modulus()
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `v_inf(y) = -(2g+1)`.
    pub(crate) fn y_pole_order(&self) -> i64 {
        2 * self.genus as i64 + 1
    }

    /// Affine points over GF(p) plus the point at infinity, by direct search.
    pub fn count_rational_points(&self) -> u64 {
        let k = self.k;
        let p = k.modulus();
        let mut squares = vec![0u64; p as usize];
        for y in 0..p {
            squares[k.mul(y, y) as usize] += 1;
        }
        1 + (0..p)
            .map(|x| squares[self.f.eval(x) as usize])
            .sum::<u64>()
    }
}

/// Curve record `p=<prime>,f=<poly>`.
impl fmt::Display for HyperellipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={},f={}", self.p(), self.f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_from_degree() {
        assert_eq!(
            HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 1])
                .unwrap()
                .genus(),
            2
        );
        assert_eq!(
            HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 0, 0, 1])
                .unwrap()
                .genus(),
            3
        );
    }

    #[test]
    fn rejects_bad_models() {
        // even degree
        assert!(HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 0, 1]).is_err());
        // (x-1)^2 (x^3+1) is not squarefree
        let k = Gf::new(11).unwrap();
        let sq = Poly::from_i64(k, &[-1, 1]).pow(2);
        assert!(HyperellipticCurve::new(&sq * &Poly::from_i64(k, &[1, 0, 0, 1])).is_err());
        // not monic
        assert!(HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 2]).is_err());
        // genus 1
        assert!(HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 1]).is_err());
        // characteristic 2
        assert!(HyperellipticCurve::from_coeffs(2, &[1, 0, 0, 0, 0, 1]).is_err());
    }
}
