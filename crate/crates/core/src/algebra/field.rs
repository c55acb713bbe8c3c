//! Prime field GF(p) for odd machine-word primes.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest accepted modulus. Products are formed in `u128`, so the bound only
/// keeps trial-division primality checks cheap.
pub const MAX_PRIME: u64 = 1 << 32;

/// The field GF(p). Elements are plain `u64` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf {
    p: u64,
}

impl Gf {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..MAX_PRIME).contains(&p) {
            return Err(Error::Domain(format!(
                "characteristic must be an odd prime in [3, 2^32), got {p}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        Ok(Gf { p })
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: u64) -> u64 {
        v % self.p
    }

    #[inline]
    pub fn from_i64(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p - 2)
    }

    /// Legendre symbol as 0, 1 or -1.
    pub fn legendre(self, a: u64) -> i8 {
        if a == 0 {
            return 0;
        }
        if self.pow(a, (self.p - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    pub fn elem(self, v: u64) -> Scalar {
        Scalar {
            value: self.reduce(v),
            field: self,
        }
    }

    /// Prints a residue in the symmetric range when that is shorter, e.g. `-1`.
    pub fn signed(self, v: u64) -> i64 {
        if v > self.p / 2 {
            v as i64 - self.p as i64
        } else {
            v as i64
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A single element of GF(p) carrying its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u64,
    field: Gf,
}

impl Scalar {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn field(self) -> Gf {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Scalar> {
        (self.value != 0).then(|| Scalar {
            value: self.field.inv(self.value),
            field: self.field,
        })
    }

    pub fn pow(self, e: u64) -> Scalar {
        Scalar {
            value: self.field.pow(self.value, e),
            field: self.field,
        }
    }

    fn check(self, other: Scalar) {
        assert_eq!(self.field, other.field, "mixed fields");
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        self.check(o);
        Scalar {
            value: self.field.add(self.value, o.value),
            field: self.field,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        self.check(o);
        Scalar {
            value: self.field.sub(self.value, o.value),
            field: self.field,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.check(o);
        Scalar {
            value: self.field.mul(self.value, o.value),
            field: self.field,
        }
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, o: Scalar) -> Scalar {
        self.mul(o.inv().expect("division by zero"))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_bad_moduli() {
        assert!(Gf::new(2).is_err());
        assert!(Gf::new(9).is_err());
        assert!(Gf::new(1).is_err());
        assert!(Gf::new(11).is_ok());
    }

    #[test]
    fn legendre_mod_11() {
        let k = Gf::new(11).unwrap();
        let squares: Vec<u64> = (1..11).filter(|&a| k.legendre(a) == 1).collect();
        assert_eq!(squares, vec![1, 3, 4, 5, 9]);
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u64..13, b in 0u64..13, c in 0u64..13) {
            let k = Gf::new(13).unwrap();
            let (a, b, c) = (k.elem(a), k.elem(b), k.elem(c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!((a + b) - b, a);
            prop_assert_eq!(a + (-a), k.elem(0));
            if let Some(ai) = a.inv() {
                prop_assert_eq!(a * ai, k.elem(1));
                prop_assert_eq!((b / a) * a, b);
            }
        }
    }
}
