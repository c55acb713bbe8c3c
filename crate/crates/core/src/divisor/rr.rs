//! Riemann–Roch spaces on odd hyperelliptic models.
//!
//! Every `h` in `L(D)` becomes a polynomial `a(x) + b(x)*y` after
//! multiplication by `d = prod u^m_u`, where `m_u` is large enough to absorb
//! the finite poles allowed by `D`. The pole bound at infinity caps `deg a` and
//! `deg b`; the remaining conditions `v_P(a + b*y) >= v_P(d) - D(P)` are linear
//! in the coefficients of `a` and `b`, and the kernel of that constraint system
//! is `L(D)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::Divisor;
use crate::algebra::{Matrix, Poly};
use crate::curve::place::hensel_sqrt;
use crate::curve::{CurveFunction, HyperellipticCurve, Place};
use crate::error::{Error, Result};

/// An explicit basis of `L(D)`.
#[derive(Clone, Debug)]
pub struct RRBasis {
    divisor: Divisor,
    frame: Frame,
    numerators: Vec<Vec<u64>>,
    basis: Vec<CurveFunction>,
}

/// Shape of the numerator space: elements are `(a + b*y)/denominator` with
/// `deg a <= deg_a` and `deg b <= deg_b` (a negative bound means absent).
#[derive(Clone, Debug)]
struct Frame {
    denominator: Poly,
    deg_a: i64,
    deg_b: i64,
}

impl Frame {
    fn len_a(&self) -> usize {
        (self.deg_a + 1).max(0) as usize
    }

    fn len_b(&self) -> usize {
        (self.deg_b + 1).max(0) as usize
    }

    fn width(&self) -> usize {
        self.len_a() + self.len_b()
    }

    fn split(&self, v: &[u64]) -> (Poly, Poly) {
        let k = self.denominator.field();
        let na = self.len_a();
        (
            Poly::new(k, v[..na].to_vec()),
            Poly::new(k, v[na..].to_vec()),
        )
    }
}

impl RRBasis {
    pub fn divisor(&self) -> &Divisor {
        &self.divisor
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CurveFunction] {
        &self.basis
    }

    pub fn denominator(&self) -> &Poly {
        &self.frame.denominator
    }

    /// Coordinates of `func` in this basis, or `None` if `func` is not in `L(D)`.
    pub fn coordinates(&self, func: &CurveFunction) -> Option<Vec<u64>> {
        let k = self.frame.denominator.field();
        if func.is_zero() {
            return Some(vec![0; self.dim()]);
        }
        let den = &self.frame.denominator;
        let a = (func.a() * den).div_exact(func.d())?;
        let b = (func.b() * den).div_exact(func.d())?;
        let fits = |q: &Poly, bound: i64| q.is_zero() || q.deg_i64() <= bound;
        if !fits(&a, self.frame.deg_a) || !fits(&b, self.frame.deg_b) {
            return None;
        }
        let mut target: Vec<u64> = (0..self.frame.len_a()).map(|i| a.coeff(i)).collect();
        target.extend((0..self.frame.len_b()).map(|j| b.coeff(j)));
        Matrix::from_columns(k, self.frame.width(), &self.numerators).solve(&target)
    }
}

/// Linear conditions on the numerator coefficients: each column lists the
/// image of one monomial, and the constraint is that the images sum to zero.
struct Constraints {
    rows: Vec<Vec<u64>>,
    width: usize,
}

impl Constraints {
    fn new(width: usize) -> Self {
        Constraints {
            rows: Vec::new(),
            width,
        }
    }

    /// Requires `sum c_i * cols[i] = 0 mod m` where `cols[i]` is placed at
    /// `offset + i`; each is a polynomial of degree `< deg m`.
    fn push_block(&mut self, offset: usize, cols: &[Poly], m: &Poly) {
        let n = m.degree().unwrap_or(0);
        let start = self.rows.len();
        self.rows.extend((0..n).map(|_| vec![0; self.width]));
        for (i, c) in cols.iter().enumerate() {
            for (r, &v) in c.coeffs().iter().enumerate() {
                self.rows[start + r][offset + i] = v;
            }
        }
    }
}

/// `x^i mod m` for `i < count`.
fn monomials_mod(m: &Poly, count: usize) -> Vec<Poly> {
    let k = m.field();
    let x = Poly::x(k);
    let mut out = Vec::with_capacity(count);
    let mut cur = Poly::one(k).rem(m);
    for _ in 0..count {
        out.push(cur.clone());
        cur = cur.mul_mod(&x, m);
    }
    out
}

impl HyperellipticCurve {
    /// `K = (2g - 2) * inf`, the divisor of `dx / y`.
    pub fn canonical_divisor(&self) -> Divisor {
        Divisor::infinity(2 * self.genus() as i64 - 2)
    }

    /// The hyperelliptic class `H = 2 * inf`.
    pub fn hyperelliptic_divisor(&self) -> Divisor {
        Divisor::infinity(2)
    }

    fn rr_kernel(&self, d: &Divisor) -> Option<(Frame, Vec<Vec<u64>>)> {
        let k = self.field();
        let mut by_base: BTreeMap<Poly, Vec<(&Place, i64)>> = BTreeMap::new();
        for (pl, &n) in d.iter() {
            if let Some(u) = pl.base() {
                by_base.entry(u.clone()).or_default().push((pl, n));
            }
        }
        let mut mult: BTreeMap<Poly, i64> = BTreeMap::new();
        let mut denominator = Poly::one(k);
        for (u, places) in &by_base {
            let m = places
                .iter()
                .filter(|(_, n)| *n > 0)
                .map(|(pl, n)| (n + pl.ramification() - 1) / pl.ramification())
                .max()
                .unwrap_or(0);
            mult.insert(u.clone(), m);
            denominator = &denominator * &u.pow(m as u64);
        }
        let bound = d.coeff(&Place::Infinite) + 2 * denominator.deg_i64();
        if bound < 0 {
            return None;
        }
        let frame = Frame {
            denominator,
            deg_a: bound.div_euclid(2),
            deg_b: (bound - self.y_pole_order()).div_euclid(2),
        };
        let (na, nb) = (frame.len_a(), frame.len_b());
        let mut cons = Constraints::new(frame.width());
        for (u, &m) in &mult {
            for pl in self.places_over(u) {
                let t = pl.ramification() * m - d.coeff(&pl);
                if t <= 0 {
                    continue;
                }
                let t = t as usize;
                match &pl {
                    Place::Split { v, .. } => {
                        let modulus = u.pow(t as u64);
                        let yl = hensel_sqrt(self.f(), u, v, t);
                        let xs = monomials_mod(&modulus, na.max(nb));
                        cons.push_block(0, &xs[..na], &modulus);
                        let ys: Vec<Poly> =
                            xs[..nb].iter().map(|x| x.mul_mod(&yl, &modulus)).collect();
                        // a- and b-columns must land in the same rows
                        let start = cons.rows.len() - modulus.degree().unwrap();
                        for (j, c) in ys.iter().enumerate() {
                            for (r, &val) in c.coeffs().iter().enumerate() {
                                cons.rows[start + r][na + j] = val;
                            }
                        }
                    }
                    Place::Inert { .. } => {
                        let modulus = u.pow(t as u64);
                        let xs = monomials_mod(&modulus, na.max(nb));
                        cons.push_block(0, &xs[..na], &modulus);
                        cons.push_block(na, &xs[..nb], &modulus);
                    }
                    Place::Ramified { .. } => {
                        let ta = t.div_ceil(2);
                        let tb = t / 2;
                        if ta > 0 {
                            let ma = u.pow(ta as u64);
                            cons.push_block(0, &monomials_mod(&ma, na), &ma);
                        }
                        if tb > 0 {
                            let mb = u.pow(tb as u64);
                            cons.push_block(na, &monomials_mod(&mb, nb), &mb);
                        }
                    }
                    Place::Infinite => unreachable!("finite base"),
                }
            }
        }
        let kernel = Matrix::from_rows(k, frame.width(), cons.rows).kernel();
        Some((frame, kernel))
    }

    /// A basis of `L(D) = { h : div(h) + D >= 0 } ∪ {0}`.
    pub fn rr_space(&self, d: &Divisor) -> RRBasis {
        let k = self.field();
        match self.rr_kernel(d) {
            None => RRBasis {
                divisor: d.clone(),
                frame: Frame {
                    denominator: Poly::one(k),
                    deg_a: -1,
                    deg_b: -1,
                },
                numerators: Vec::new(),
                basis: Vec::new(),
            },
            Some((frame, numerators)) => {
                let basis = numerators
                    .iter()
                    .map(|v| {
                        let (a, b) = frame.split(v);
                        CurveFunction::new(a, b, frame.denominator.clone())
                            .expect("nonzero denominator")
                    })
                    .collect();
                RRBasis {
                    divisor: d.clone(),
                    frame,
                    numerators,
                    basis,
                }
            }
        }
    }

    /// `l(D) = dim L(D)`.
    pub fn h0(&self, d: &Divisor) -> usize {
        self.rr_kernel(d).map_or(0, |(_, ker)| ker.len())
    }

    /// `h1(D) = l(K - D)` by Serre duality.
    pub fn h1(&self, d: &Divisor) -> usize {
        self.h0(&self.canonical_divisor().sub(d))
    }

    /// Pointwise minimum of `div(h) + D` over a basis of `L(D)`.
    pub fn base_locus(&self, d: &Divisor) -> Result<Divisor> {
        let rr = self.rr_space(d);
        let Some(first) = rr.basis().first() else {
            return Err(Error::EmptyLinearSystem(d.to_string()));
        };
        let first_eff = self.divisor_of(first)?.add(d);
        let mut locus = Divisor::zero();
        for (pl, &n0) in first_eff.iter() {
            let mut m = n0;
            for h in &rr.basis()[1..] {
                if m == 0 {
                    break;
                }
                m = m.min(self.valuation(h, pl)? + d.coeff(pl));
            }
            if m < 0 {
                return Err(Error::Internal(format!(
                    "basis element of L({d}) has a pole beyond D at {pl}"
                )));
            }
            locus.add_place(pl.clone(), m);
        }
        Ok(locus)
    }

    pub fn is_globally_generated(&self, d: &Divisor) -> Result<bool> {
        Ok(self.base_locus(d)?.is_zero())
    }

    /// Linear equivalence: equal degree and `D1 - D2` effective up to a principal divisor.
    pub fn class_equal(&self, d1: &Divisor, d2: &Divisor) -> bool {
        d1.degree() == d2.degree() && self.h0(&d1.sub(d2)) >= 1
    }

    /// `c(D) = deg D - 2 (h0(D) - 1)`.
    pub fn clifford_of_divisor(&self, d: &Divisor) -> i64 {
        d.degree() - 2 * (self.h0(d) as i64 - 1)
    }

    /// Minimum Clifford index over effective divisors of degree `<= bound`
    /// supported on degree-1 places. See [`HyperellipticCurve::clifford_search`].
    pub fn clifford_of_curve(&self, bound: usize) -> Result<i64> {
        Ok(self.clifford_search(bound, 1)?.min)
    }

    /// Exhaustive search over effective divisors of total degree in
    /// `[1, bound]` supported on places of degree `<= place_degree`, keeping
    /// those with `h0 >= 2` and `h1 >= 2`. Exponential in `bound`.
    ///
    /// In genus 2 no divisor has `h0 >= 2` and `h1 >= 2`; the search then
    /// admits `h1 >= 1`, which makes `K` the contributing class.
    pub fn clifford_search(&self, bound: usize, place_degree: usize) -> Result<CliffordSearch> {
        if bound < 2 {
            return Err(Error::BoundTooSmall {
                bound,
                min_h1: self.min_h1_for_clifford(),
            });
        }
        let places = self.enumerate_places(place_degree.max(1))?;
        let candidates = effective_divisors(&places, bound);
        let min_h1 = self.min_h1_for_clifford();
        let mut qualifying: Vec<(Divisor, i64)> = candidates
            .par_iter()
            .filter_map(|d| {
                let h0 = self.h0(d);
                if h0 < 2 || self.h1(d) < min_h1 {
                    return None;
                }
                Some((d.clone(), d.degree() - 2 * (h0 as i64 - 1)))
            })
            .collect();
        qualifying.sort();
        let min = qualifying
            .iter()
            .map(|(_, c)| *c)
            .min()
            .ok_or(Error::BoundTooSmall { bound, min_h1 })?;
        let attained_at = qualifying
            .iter()
            .filter(|(_, c)| *c == min)
            .map(|(d, _)| d.clone())
            .collect();
        Ok(CliffordSearch {
            min,
            attained_at,
            searched: candidates.len(),
            qualifying,
        })
    }

    fn min_h1_for_clifford(&self) -> usize {
        if self.genus() == 2 {
            1
        } else {
            2
        }
    }
}

/// Outcome of [`HyperellipticCurve::clifford_search`].
#[derive(Clone, Debug, Serialize)]
pub struct CliffordSearch {
    pub min: i64,
    pub attained_at: Vec<Divisor>,
    pub searched: usize,
    #[serde(skip)]
    pub qualifying: Vec<(Divisor, i64)>,
}

/// All effective divisors of degree `1..=bound` built from `places`, in a
/// fixed order (by degree, then lexicographic in the place list).
pub(crate) fn effective_divisors(places: &[Place], bound: usize) -> Vec<Divisor> {
    fn rec(
        places: &[Place],
        start: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for i in start..places.len() {
            let d = places[i].degree();
            if d <= left {
                cur.push(i);
                rec(places, i, left - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut idx = Vec::new();
    rec(places, 0, bound, &mut Vec::new(), &mut idx);
    let mut out: Vec<Divisor> = idx
        .into_iter()
        .map(|ix| Divisor::from_terms(ix.into_iter().map(|i| (places[i].clone(), 1))))
        .collect();
    out.sort_by_key(|d| d.degree());
    out
}
