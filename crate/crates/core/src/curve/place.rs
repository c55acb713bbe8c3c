//! Places of an odd hyperelliptic model and valuations at them.
//!
//! Over a monic irreducible `u(x)` the curve has one of three behaviours:
//! `u | f` gives a single ramified place of degree `deg u`; `f` a nonzero
//! square mod `u` gives two split places `(u, ±v)` of degree `deg u`; otherwise
//! there is one inert place of degree `2 deg u`. The model has exactly one
//! place at infinity, of degree 1, where `v(x) = -2` and `v(y) = -(2g+1)`.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::function::CurveFunction;
use super::model::HyperellipticCurve;
use crate::algebra::factor::random_poly;
use crate::algebra::{factor, is_irreducible, Poly};
use crate::divisor::Divisor;
use crate::error::{Error, Result};

/// A closed point. Fields are canonical (`u` monic, `deg v < deg u`), so
/// structural equality is equality of places.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinite,
    Ramified { u: Poly },
    Split { u: Poly, v: Poly },
    Inert { u: Poly },
}

impl Place {
    pub fn degree(&self) -> usize {
        match self {
            Place::Infinite => 1,
            Place::Ramified { u } | Place::Split { u, .. } => u.degree().unwrap_or(0),
            Place::Inert { u } => 2 * u.degree().unwrap_or(0),
        }
    }

    /// The x-coordinate polynomial, `None` at infinity.
    pub fn base(&self) -> Option<&Poly> {
        match self {
            Place::Infinite => None,
            Place::Ramified { u } | Place::Split { u, .. } | Place::Inert { u } => Some(u),
        }
    }

    /// Image under the hyperelliptic involution `y -> -y`.
    pub fn conjugate(&self) -> Place {
        match self {
            Place::Split { u, v } => Place::Split {
                u: u.clone(),
                v: (-v).rem(u),
            },
            other => other.clone(),
        }
    }

    /// Ramification index over the x-line.
    pub fn ramification(&self) -> i64 {
        match self {
            Place::Infinite | Place::Ramified { .. } => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => write!(f, "inf"),
            Place::Ramified { u } => write!(f, "ram({u})"),
            Place::Split { u, v } => write!(f, "split({u},{v})"),
            Place::Inert { u } => write!(f, "inert({u})"),
        }
    }
}

const SQRT_SEED: u64 = 0x7371_7274;

/// Square root of `c` in `GF(p)[x]/(u)` for irreducible `u`, if one exists.
pub(crate) fn sqrt_mod(c: &Poly, u: &Poly) -> Option<Poly> {
    let k = u.field();
    let n = u.degree().expect("nonzero modulus");
    let c = c.rem(u);
    if c.is_zero() {
        return Some(c);
    }
    if !c.pow_half_order(n, u).is_one() {
        return None;
    }
    // Work in R = F_q[T]/(T^2 - c) ~ F_q x F_q. For random r, (r + T)^((q-1)/2)
    // is (chi(r+s), chi(r-s)); when the two characters differ it equals beta*T
    // with beta = 1/s.
    let mul = |(a1, b1): &(Poly, Poly), (a2, b2): &(Poly, Poly)| {
        let a = &(a1 * a2) + &(&(b1 * b2) * &c);
        let b = &(a1 * b2) + &(b1 * a2);
        (a.rem(u), b.rem(u))
    };
    let pow = |base: &(Poly, Poly), mut e: u64| {
        let mut acc = (Poly::one(k), Poly::zero(k));
        let mut b = base.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = mul(&b, &b);
            }
        }
        acc
    };
    let p = k.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(SQRT_SEED);
    loop {
        let r = random_poly(k, n, &mut rng);
        let mut frob = (r, Poly::one(k));
        let mut norm = frob.clone();
        for _ in 1..n {
            frob = pow(&frob, p);
            norm = mul(&norm, &frob);
        }
        let (alpha, beta) = pow(&norm, (p - 1) / 2);
        if alpha.is_zero() && !beta.is_zero() {
            let s = beta.inv_mod(u).expect("unit");
            debug_assert_eq!(s.mul_mod(&s, u), c);
            return Some(s);
        }
    }
}

/// `Y` with `Y^2 = f mod u^prec` and `Y = v mod u`, by Newton iteration.
pub(crate) fn hensel_sqrt(f: &Poly, u: &Poly, v: &Poly, prec: usize) -> Poly {
    let mut y = v.rem(u);
    let mut cur = 1;
    while cur < prec {
        cur = (2 * cur).min(prec);
        let m = u.pow(cur as u64);
        let two_y = y.scale(2);
        let inv = two_y.inv_mod(&m).expect("y is a unit at a split place");
        let err = (&(&y * &y) - f).rem(&m);
        y = (&y - &err.mul_mod(&inv, &m)).rem(&m);
    }
    y
}

impl HyperellipticCurve {
    /// The place(s) lying over a monic irreducible `u`.
    pub fn places_over(&self, u: &Poly) -> Vec<Place> {
        if u.divides(self.f()) {
            return vec![Place::Ramified { u: u.clone() }];
        }
        match sqrt_mod(self.f(), u) {
            Some(v) => {
                let w = (-&v).rem(u);
                let mut out = vec![
                    Place::Split { u: u.clone(), v },
                    Place::Split { u: u.clone(), v: w },
                ];
                out.sort();
                out
            }
            None => vec![Place::Inert { u: u.clone() }],
        }
    }

    fn check_base(&self, u: &Poly) -> Result<()> {
        if u.field() != self.field() {
            return Err(Error::Domain("place over a different field".into()));
        }
        if !u.is_monic() || !is_irreducible(u) {
            return Err(Error::Domain(format!("{u} is not monic irreducible")));
        }
        Ok(())
    }

    /// Validated split place `(u, v)`; `v` is reduced mod `u`.
    pub fn split_place(&self, u: Poly, v: Poly) -> Result<Place> {
        self.check_base(&u)?;
        if u.divides(self.f()) {
            return Err(Error::Domain(format!(
                "{u} divides f; the place is ramified"
            )));
        }
        let v = v.rem(&u);
        if !(&v.mul_mod(&v, &u) - &self.f().rem(&u)).is_zero() {
            return Err(Error::Domain(format!(
                "v^2 != f mod u for u = {u}, v = {v}"
            )));
        }
        Ok(Place::Split { u, v })
    }

    pub fn ramified_place(&self, u: Poly) -> Result<Place> {
        self.check_base(&u)?;
        if !u.divides(self.f()) {
            return Err(Error::Domain(format!("{u} does not divide f")));
        }
        Ok(Place::Ramified { u })
    }

    pub fn inert_place(&self, u: Poly) -> Result<Place> {
        self.check_base(&u)?;
        match self.places_over(&u).as_slice() {
            [Place::Inert { .. }] => Ok(Place::Inert { u }),
            _ => Err(Error::Domain(format!("the place over {u} is not inert"))),
        }
    }

    /// The degree-1 place over `x = x0`, choosing `y = y0` when it splits.
    pub fn rational_place(&self, x0: i64, y0: i64) -> Result<Place> {
        let k = self.field();
        let u = Poly::from_i64(k, &[-x0, 1]);
        if u.divides(self.f()) {
            self.ramified_place(u)
        } else {
            self.split_place(u, Poly::from_i64(k, &[y0]))
        }
    }

    /// All places of degree `<= max_degree`, each once, in a fixed order:
    /// infinity first, then by base polynomial.
    pub fn enumerate_places(&self, max_degree: usize) -> Result<Vec<Place>> {
        if max_degree == 0 {
            return Err(Error::Domain("max_degree must be >= 1".into()));
        }
        let k = self.field();
        let p = k.modulus();
        let mut out = vec![Place::Infinite];
        for n in 1..=max_degree {
            let count = (p as u128).pow(n as u32);
            if count > 1_000_000 {
                return Err(Error::Domain(format!(
                    "enumerating degree-{n} places over GF({p}) is too large"
                )));
            }
            for idx in 0..count as u64 {
                let mut c = Vec::with_capacity(n + 1);
                let mut t = idx;
                for _ in 0..n {
                    c.push(t % p);
                    t /= p;
                }
                c.push(1);
                let u = Poly::new(k, c);
                if !is_irreducible(&u) {
                    continue;
                }
                out.extend(
                    self.places_over(&u)
                        .into_iter()
                        .filter(|pl| pl.degree() <= max_degree),
                );
            }
        }
        Ok(out)
    }

    /// Valuation of `a + b*y` with `a`, `b` polynomials, not both zero.
    fn numerator_valuation(&self, a: &Poly, b: &Poly, place: &Place) -> i64 {
        let ord = |q: &Poly, u: &Poly| (!q.is_zero()).then(|| q.order_at(u) as i64);
        match place {
            Place::Infinite => {
                let va = (!a.is_zero()).then(|| -2 * a.deg_i64());
                let vb = (!b.is_zero()).then(|| -2 * b.deg_i64() - self.y_pole_order());
                min_opt(va, vb)
            }
            Place::Ramified { u } => {
                let va = ord(a, u).map(|o| 2 * o);
                let vb = ord(b, u).map(|o| 2 * o + 1);
                min_opt(va, vb)
            }
            Place::Inert { u } => min_opt(ord(a, u), ord(b, u)),
            Place::Split { u, v } => {
                if b.is_zero() {
                    return ord(a, u).unwrap();
                }
                if a.is_zero() {
                    return ord(b, u).unwrap();
                }
                // v_P + v_P' = ord_u(a^2 - b^2 f), so v_P <= ord_u of the norm.
                let norm = &(a * a) - &(&(b * b) * self.f());
                let prec = norm.order_at(u) + 1;
                let m = u.pow(prec as u64);
                let yl = hensel_sqrt(self.f(), u, v, prec);
                let r = (a + &b.mul_mod(&yl, &m)).rem(&m);
                r.order_at(u) as i64
            }
        }
    }

    pub fn valuation(&self, func: &CurveFunction, place: &Place) -> Result<i64> {
        if func.is_zero() {
            return Err(Error::Domain("valuation of the zero function".into()));
        }
        let num = self.numerator_valuation(func.a(), func.b(), place);
        let den = match place.base() {
            None => -2 * func.d().deg_i64(),
            Some(u) => place.ramification() * func.d().order_at(u) as i64,
        };
        Ok(num - den)
    }

    /// The principal divisor of a nonzero function.
    pub fn divisor_of(&self, func: &CurveFunction) -> Result<Divisor> {
        if func.is_zero() {
            return Err(Error::Domain("divisor of the zero function".into()));
        }
        let mut bases: Vec<Poly> = factor(&func.numerator_norm(self))?
            .into_iter()
            .chain(factor(func.d())?)
            .map(|(u, _)| u)
            .collect();
        bases.sort();
        bases.dedup();
        let mut div = Divisor::zero();
        div.add_place(Place::Infinite, self.valuation(func, &Place::Infinite)?);
        for u in &bases {
            for pl in self.places_over(u) {
                let v = self.valuation(func, &pl)?;
                div.add_place(pl, v);
            }
        }
        if div.degree() != 0 {
            return Err(Error::Internal(format!(
                "principal divisor of {func} has degree {}",
                div.degree()
            )));
        }
        Ok(div)
    }
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> i64 {
    match (a, b) {
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => unreachable!("zero numerator"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Gf;
    use proptest::prelude::*;

    fn g2() -> HyperellipticCurve {
        HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 1]).unwrap()
    }

    fn lin(k: Gf, r: i64) -> Poly {
        Poly::from_i64(k, &[-r, 1])
    }

    #[test]
    fn valuations_at_infinity() {
        let c = g2();
        let k = c.field();
        assert_eq!(
            c.valuation(&CurveFunction::x(k), &Place::Infinite).unwrap(),
            -2
        );
        assert_eq!(
            c.valuation(&CurveFunction::y(k), &Place::Infinite).unwrap(),
            -5
        );
        let f = CurveFunction::from_poly(c.f().clone());
        assert_eq!(c.valuation(&f, &Place::Infinite).unwrap(), -10);
    }

    #[test]
    fn ramified_doubles_coordinate_valuation() {
        let c = g2();
        let k = c.field();
        let w = c.ramified_place(lin(k, 2)).unwrap();
        let g = CurveFunction::from_poly(lin(k, 2));
        assert_eq!(c.valuation(&g, &w).unwrap(), 2);
        assert_eq!(c.valuation(&CurveFunction::y(k), &w).unwrap(), 1);
        assert_eq!(c.valuation(&CurveFunction::constant(k, 7), &w).unwrap(), 0);
        assert!(c.valuation(&CurveFunction::constant(k, 0), &w).is_err());
    }

    #[test]
    fn divisor_of_x_and_y() {
        let c = g2();
        let k = c.field();
        let dx = c.divisor_of(&CurveFunction::x(k)).unwrap();
        let mut want = Divisor::zero();
        want.add_place(c.rational_place(0, 1).unwrap(), 1);
        want.add_place(c.rational_place(0, -1).unwrap(), 1);
        want.add_place(Place::Infinite, -2);
        assert_eq!(dx, want);

        let dy = c.divisor_of(&CurveFunction::y(k)).unwrap();
        let mut want = Divisor::zero();
        for r in [2, 6, 7, 8, 10] {
            want.add_place(c.ramified_place(lin(k, r)).unwrap(), 1);
        }
        want.add_place(Place::Infinite, -5);
        assert_eq!(dy, want);

        assert!(c
            .divisor_of(&CurveFunction::constant(k, 1))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn degree_one_places_match_point_count() {
        let c = g2();
        let places = c.enumerate_places(1).unwrap();
        assert_eq!(places.len() as u64, c.count_rational_points());
        // quadratic-residue scan for the split pairs
        let k = c.field();
        let split = (0..11).filter(|&x| k.legendre(c.f().eval(x)) == 1).count();
        let ram = places
            .iter()
            .filter(|p| matches!(p, Place::Ramified { .. }))
            .count();
        assert_eq!(ram, 5);
        assert_eq!(places.len(), 1 + 5 + 2 * split);
        assert!(c.enumerate_places(0).is_err());
    }

    #[test]
    fn place_counts_over_gf11_degree_two() {
        // N_2 = #C(GF(121)) = sum over places of degree dividing 2 of their degree.
        let c = g2();
        let places = c.enumerate_places(2).unwrap();
        let k = c.field();
        // Brute-force count over GF(121) = GF(11)[t]/(t^2+1).
        let m = Poly::from_i64(k, &[1, 0, 1]);
        let mut n2 = 1u64;
        for a0 in 0..11 {
            for a1 in 0..11 {
                let xv = Poly::new(k, vec![a0, a1]);
                let fx = {
                    let mut acc = Poly::zero(k);
                    for &cf in c.f().coeffs().iter().rev() {
                        acc = (&acc.mul_mod(&xv, &m) + &Poly::constant(k, cf)).rem(&m);
                    }
                    acc
                };
                n2 += if fx.is_zero() {
                    1
                } else if sqrt_mod(&fx, &m).is_some() {
                    2
                } else {
                    0
                };
            }
        }
        let total: u64 = places.iter().map(|p| p.degree() as u64).sum();
        assert_eq!(total, n2);
    }

    #[test]
    fn validated_constructors() {
        let c = g2();
        let k = c.field();
        assert!(c.split_place(Poly::x(k), Poly::constant(k, 1)).is_ok());
        assert!(c.split_place(Poly::x(k), Poly::constant(k, 2)).is_err());
        assert!(c.split_place(lin(k, 2), Poly::zero(k)).is_err());
        assert!(c.ramified_place(Poly::x(k)).is_err());
        assert!(c.inert_place(Poly::x(k)).is_err());
    }

    #[test]
    fn hensel_lift_solves_congruence() {
        let c = g2();
        let k = c.field();
        let u = Poly::from_i64(k, &[0, 1]);
        let y = hensel_sqrt(c.f(), &u, &Poly::constant(k, 1), 6);
        let m = u.pow(6);
        assert!((&y.mul_mod(&y, &m) - &c.f().rem(&m)).is_zero());
    }

    fn arb_function() -> impl Strategy<Value = CurveFunction> {
        let coeffs = || prop::collection::vec(0u64..11, 0..4);
        (coeffs(), coeffs(), prop::collection::vec(0u64..11, 1..3)).prop_filter_map(
            "nonzero",
            |(a, b, d)| {
                let k = Gf::new(11).unwrap();
                let mut d = d;
                d.push(1);
                let f =
                    CurveFunction::new(Poly::new(k, a), Poly::new(k, b), Poly::new(k, d)).ok()?;
                (!f.is_zero()).then_some(f)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn product_formula_and_additivity(f in arb_function(), g in arb_function()) {
            let c = g2();
            let df = c.divisor_of(&f).unwrap();
            let dg = c.divisor_of(&g).unwrap();
            prop_assert_eq!(df.degree(), 0);
            let fg = f.mul(&g, &c);
            prop_assert_eq!(c.divisor_of(&fg).unwrap(), df.add(&dg));
            for (pl, &n) in df.iter() {
                prop_assert_eq!(c.valuation(&f, pl).unwrap(), n);
                prop_assert_eq!(
                    c.valuation(&fg, pl).unwrap(),
                    n + c.valuation(&g, pl).unwrap()
                );
            }
            let s = f.add(&g);
            if !s.is_zero() {
                for pl in df.support().chain(dg.support()) {
                    let vs = c.valuation(&s, pl).unwrap();
                    let m = c.valuation(&f, pl).unwrap().min(c.valuation(&g, pl).unwrap());
                    prop_assert!(vs >= m);
                }
            }
        }
    }
}
