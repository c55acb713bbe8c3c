//! Non-special, globally generated line bundles `L` of degree `2g - c - 1`
//! with `E_L` not semistable.
//!
//! With `D` a pencil computing the Clifford index `c`, put `N = K - D` and
//! `L = N + E` for a general effective `E` of degree 3. Then `E_N` is a
//! quotient of `E_L` and
//! `slope(E_N) = 2 + c/(g-c-2) < slope(E_L) = 2 + (c+1)/(g-c-1)` whenever
//! `2c < g - 2`. On a hyperelliptic curve `D = H` and `c = 0`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curve::{HyperellipticCurve, Place};
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::syzygy::StabilityStatus;

pub const DEFAULT_MAX_ATTEMPTS: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop31Prediction {
    pub g: usize,
    pub c: i64,
    pub deg_l: i64,
    #[serde(serialize_with = "rational::serialize")]
    pub slope_en: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub slope_el: Rational,
    /// `slope(E_N) < slope(E_L)`, i.e. `2c < g - 2`.
    pub strict: bool,
    pub notes: Vec<String>,
}

pub fn prop31_predict(g: usize, c: i64) -> Result<Prop31Prediction> {
    if g < 2 || c < 0 {
        return Err(Error::Domain(format!(
            "need g >= 2 and c >= 0, got g = {g}, c = {c}"
        )));
    }
    let gi = g as i64;
    let denom = gi - c - 2;
    if denom < 1 {
        return Err(Error::DegenerateDenominator(denom));
    }
    let slope_en = rational::int(2) + rational::ratio(c, denom);
    let slope_el = rational::int(2) + rational::ratio(c + 1, gi - c - 1);
    let strict = 2 * c < gi - 2;
    let mut notes = Vec::new();
    if 2 * c == gi - 2 {
        notes.push(
            "c = (g-2)/2: slope(E_N) = slope(E_L), so E_L is not stable; on a general curve \
             of even genus it is still semistable (Schneider)"
                .to_string(),
        );
    } else if !strict {
        notes.push("2c > g - 2: E_N does not destabilize E_L".to_string());
    }
    Ok(Prop31Prediction {
        g,
        c,
        deg_l: 2 * gi - c - 1,
        slope_en,
        slope_el,
        strict,
        notes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop31Report {
    pub seed: u64,
    pub attempts: usize,
    pub n_class: Divisor,
    pub h0_n: usize,
    pub e_divisor: Divisor,
    pub l_class: Divisor,
    pub h0_l: usize,
    pub h1_l: usize,
    pub gg_l: bool,
    #[serde(serialize_with = "rational::serialize")]
    pub slope_en: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub slope_el: Rational,
    pub verdict: StabilityStatus,
    #[serde(serialize_with = "rational::serialize")]
    pub witness_slope: Rational,
    pub witness_kernel_dim: usize,
}

fn draw_effective(places: &[Place], deg: usize, rng: &mut ChaCha8Rng) -> Divisor {
    let mut d = Divisor::zero();
    let mut left = deg;
    while left > 0 {
        let fitting: Vec<&Place> = places.iter().filter(|p| p.degree() <= left).collect();
        let p = *fitting.choose(rng).expect("degree-1 places exist");
        left -= p.degree();
        d.add_place(p.clone(), 1);
    }
    d
}

impl HyperellipticCurve {
    /// Builds `L = (K - H) + E` with `E` drawn at random until `h1(L) = 0` and
    /// `L` is globally generated, then checks every numerical claim.
    pub fn prop31_construct(&self, seed: u64, max_attempts: usize) -> Result<Prop31Report> {
        let g = self.genus();
        if g < 3 {
            return Err(Error::Precondition(format!(
                "c(C) < (g-2)/2 needs g >= 3 on a hyperelliptic curve, got g = {g}"
            )));
        }
        let pred = prop31_predict(g, 0)?;
        let n = self.canonical_divisor().sub(&self.hyperelliptic_divisor());
        let inv_n = self.syzygy_invariants(&n)?;
        if n.degree() != 2 * g as i64 - 4 || inv_n.h0_l != g - 1 {
            return Err(Error::Internal(format!(
                "N = K - H has degree {} and h0 {}",
                n.degree(),
                inv_n.h0_l
            )));
        }

        let places = self.enumerate_places(2)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut special, mut base_points) = (0, 0);
        for attempt in 1..=max_attempts {
            let e = draw_effective(&places, 3, &mut rng);
            let l = n.add(&e);
            let h1 = self.h1(&l);
            if h1 != 0 {
                special += 1;
                continue;
            }
            if !self.is_globally_generated(&l)? {
                base_points += 1;
                continue;
            }
            let inv_l = self.syzygy_invariants(&l)?;
            let verdict = self.verdict_on_curve(&l)?;
            let w = verdict
                .witness()
                .ok_or_else(|| Error::Internal("non-stable verdict without witness".into()))?;
            let report = Prop31Report {
                seed,
                attempts: attempt,
                n_class: n.clone(),
                h0_n: inv_n.h0_l,
                e_divisor: e,
                h0_l: inv_l.h0_l,
                l_class: l,
                h1_l: h1,
                gg_l: true,
                slope_en: inv_n.slope_e,
                slope_el: inv_l.slope_e,
                verdict: verdict.status,
                witness_slope: w.slope_quotient,
                witness_kernel_dim: w.kernel_dim,
            };
            report.check(&pred, g)?;
            return Ok(report);
        }
        Err(Error::NoGeneralDivisor {
            attempts: max_attempts,
            special,
            base_points,
        })
    }
}

impl Prop31Report {
    fn check(&self, pred: &Prop31Prediction, g: usize) -> Result<()> {
        let gi = g as i64;
        let ok = self.l_class.degree() == pred.deg_l
            && self.l_class.degree() == 2 * gi - 1
            && self.h0_l as i64 == self.l_class.degree() - gi + 1
            && self.slope_en == pred.slope_en
            && self.slope_el == pred.slope_el
            && self.slope_en < self.slope_el
            && self.verdict == StabilityStatus::NotSemistable
            && self.witness_slope == self.slope_en
            && self.witness_kernel_dim >= 1;
        if ok {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "construction report disagrees with prediction: {self:?} vs {pred:?}"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predictions() {
        let p = prop31_predict(3, 0).unwrap();
        assert_eq!(
            (p.deg_l, p.slope_en, p.slope_el, p.strict),
            (5, rational::int(2), rational::ratio(5, 2), true)
        );
        let p = prop31_predict(6, 2).unwrap();
        assert_eq!(
            (p.deg_l, p.slope_en, p.slope_el, p.strict),
            (9, rational::int(3), rational::int(3), false)
        );
        assert_eq!(p.notes.len(), 1);
        assert!(matches!(
            prop31_predict(4, 2),
            Err(Error::DegenerateDenominator(0))
        ));
    }

    #[test]
    fn genus_two_is_rejected() {
        let c = HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 1]).unwrap();
        assert!(matches!(
            c.prop31_construct(1, 10),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn genus_three_construction() {
        let c = HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        let r = c.prop31_construct(7, DEFAULT_MAX_ATTEMPTS).unwrap();
        assert_eq!(r.n_class, Divisor::infinity(2));
        assert_eq!(r.h0_n, 2);
        assert_eq!(r.l_class.degree(), 5);
        assert_eq!(
            (r.slope_en, r.slope_el),
            (rational::int(2), rational::ratio(5, 2))
        );
        assert_eq!(c.prop31_construct(7, DEFAULT_MAX_ATTEMPTS).unwrap(), r);
    }
}
