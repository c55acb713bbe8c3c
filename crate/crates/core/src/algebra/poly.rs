//! Dense univariate polynomials over GF(p).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Gf;

/// Polynomial with coefficients low degree first. The coefficient vector never
/// ends in a zero, so the zero polynomial has an empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    k: Gf,
    c: Vec<u64>,
}

impl Poly {
    pub fn new(k: Gf, coeffs: Vec<u64>) -> Poly {
        let mut p = Poly {
            k,
            c: coeffs.into_iter().map(|v| k.reduce(v)).collect(),
        };
        p.trim();
        p
    }

    pub fn from_i64(k: Gf, coeffs: &[i64]) -> Poly {
        Poly::new(k, coeffs.iter().map(|&v| k.from_i64(v)).collect())
    }

    pub fn zero(k: Gf) -> Poly {
        Poly { k, c: Vec::new() }
    }

    pub fn one(k: Gf) -> Poly {
        Poly::constant(k, 1)
    }

    pub fn constant(k: Gf, v: u64) -> Poly {
        Poly::new(k, vec![v])
    }

    pub fn x(k: Gf) -> Poly {
        Poly::monomial(k, 1, 1)
    }

    pub fn monomial(k: Gf, coeff: u64, deg: usize) -> Poly {
        let mut c = vec![0; deg + 1];
        c[deg] = coeff;
        Poly::new(k, c)
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    #[inline]
    pub fn field(&self) -> Gf {
        self.k
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg_i64(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.k.inv(self.lc()))
    }

    pub fn scale(&self, s: u64) -> Poly {
        let k = self.k;
        Poly::new(k, self.c.iter().map(|&a| k.mul(a, s)).collect())
    }

    pub fn eval(&self, x: u64) -> u64 {
        let k = self.k;
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| k.add(k.mul(acc, x), a))
    }

    pub fn derivative(&self) -> Poly {
        let k = self.k;
        Poly::new(
            k,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| k.mul(a, k.reduce(i as u64)))
                .collect(),
        )
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; n];
        c.extend_from_slice(&self.c);
        Poly { k: self.k, c }
    }

    /// Truncates to the terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Poly {
        Poly::new(self.k, self.c.iter().take(n).copied().collect())
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let k = self.k;
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (Poly::zero(k), self.clone());
        }
        let inv = k.inv(d.lc());
        let mut r = self.c.clone();
        let mut q = vec![0; r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = k.mul(r[i + dd], inv);
            if t == 0 {
                continue;
            }
            q[i] = t;
            for (j, &dj) in d.c.iter().enumerate() {
                r[i + j] = k.sub(r[i + j], k.mul(t, dj));
            }
        }
        r.truncate(dd);
        (Poly::new(k, q), Poly::new(k, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let k = self.k;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(k), Poly::zero(k));
        let (mut t0, mut t1) = (Poly::zero(k), Poly::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = k.inv(r0.lc());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// Inverse modulo `m`, if `gcd(self, m) = 1`.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.rem(m).xgcd(m);
        g.is_one().then(|| s.rem(m))
    }

    pub fn mul_mod(&self, other: &Poly, m: &Poly) -> Poly {
        (self * other).rem(m)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.k);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.k).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    /// `self^((p^n - 1) / 2) mod m`, written as `(prod_i self^(p^i))^((p-1)/2)`
    /// so the exponent never leaves machine range.
    pub fn pow_half_order(&self, n: usize, m: &Poly) -> Poly {
        let p = self.k.modulus();
        let mut frob = self.rem(m);
        let mut norm = frob.clone();
        for _ in 1..n {
            frob = frob.pow_mod(p, m);
            norm = norm.mul_mod(&frob, m);
        }
        norm.pow_mod((p - 1) / 2, m)
    }

    /// Multiplicity of `u` as a factor of `self`. `self` must be nonzero and
    /// `u` nonconstant.
    pub fn order_at(&self, u: &Poly) -> usize {
        assert!(!self.is_zero(), "order of zero polynomial");
        assert!(u.deg_i64() >= 1, "order at a constant");
        let mut n = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(u) {
            cur = q;
            n += 1;
        }
        n
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.k
            .cmp(&other.k)
            .then(self.c.len().cmp(&other.c.len()))
            .then_with(|| self.c.iter().rev().cmp(other.c.iter().rev()))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let k = self.k;
        let n = self.c.len().max(o.c.len());
        Poly::new(
            k,
            (0..n).map(|i| k.add(self.coeff(i), o.coeff(i))).collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let k = self.k;
        let n = self.c.len().max(o.c.len());
        Poly::new(
            k,
            (0..n).map(|i| k.sub(self.coeff(i), o.coeff(i))).collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let k = self.k;
        Poly::new(k, self.c.iter().map(|&a| k.neg(a)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.k);
        }
        let k = self.k;
        let p = k.modulus() as u128;
        let mut acc = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        Poly::new(k, acc.into_iter().map(|v| v as u64).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Sparse rendering such as `x^5+3*x+10`; coefficients are residues in `[0, p)`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &a) in self.c.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}
