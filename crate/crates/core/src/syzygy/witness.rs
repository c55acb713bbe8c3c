//! Search for line-bundle quotients of `E_L` among low-degree base-point-free
//! classes. Only rank-one quotients are examined; an empty destabilizing list
//! does not exclude a destabilizing quotient of higher rank.

use rayon::prelude::*;
use serde::Serialize;

use super::MultMapReport;
use crate::curve::HyperellipticCurve;
use crate::divisor::rr::effective_divisors;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum QuotientRelation {
    /// `slope(B) < slope(E_L)`.
    Destabilizing,
    SlopeEqual,
    Larger,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineQuotient {
    pub quotient: Divisor,
    #[serde(serialize_with = "rational::serialize")]
    pub slope: Rational,
    pub kernel_dim: usize,
    pub relation: QuotientRelation,
    pub mult_map: MultMapReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSearch {
    pub line_bundle: Divisor,
    #[serde(serialize_with = "rational::serialize")]
    pub slope_e: Rational,
    pub max_witness_degree: usize,
    pub classes_checked: usize,
    /// Quotients `E_L ->> B` found, sorted by slope and then by divisor.
    pub found: Vec<LineQuotient>,
    pub higher_rank_quotients_checked: bool,
}

impl WitnessSearch {
    pub fn destabilizing(&self) -> impl Iterator<Item = &LineQuotient> {
        self.found
            .iter()
            .filter(|q| q.relation == QuotientRelation::Destabilizing)
    }

    pub fn slope_equal(&self) -> impl Iterator<Item = &LineQuotient> {
        self.found
            .iter()
            .filter(|q| q.relation == QuotientRelation::SlopeEqual)
    }
}

impl HyperellipticCurve {
    /// Distinct classes `B` with `1 <= deg B <= max_degree`, `h0(B) >= 2` and
    /// `B` base-point-free, represented by effective divisors on degree-1
    /// places. Lower degrees come first; within a degree the first
    /// representative in enumeration order is kept.
    pub fn witness_candidates(&self, max_degree: usize) -> Result<Vec<Divisor>> {
        if max_degree == 0 {
            return Err(Error::Domain("max_witness_degree must be >= 1".into()));
        }
        let places = self.enumerate_places(1)?;
        let divisors = effective_divisors(&places, max_degree);
        let flags: Vec<bool> = divisors
            .par_iter()
            .map(|b| -> Result<bool> { Ok(self.h0(b) >= 2 && self.is_globally_generated(b)?) })
            .collect::<Result<_>>()?;
        let mut classes: Vec<Divisor> = Vec::new();
        for (b, ok) in divisors.into_iter().zip(flags) {
            if ok && !classes.iter().any(|c| self.class_equal(c, &b)) {
                classes.push(b);
            }
        }
        Ok(classes)
    }

    pub fn line_quotient_witness_search(
        &self,
        l: &Divisor,
        max_witness_degree: usize,
    ) -> Result<WitnessSearch> {
        let candidates = self.witness_candidates(max_witness_degree)?;
        self.witness_search_among(l, &candidates, max_witness_degree)
    }

    /// Witness search against a precomputed candidate list.
    pub fn witness_search_among(
        &self,
        l: &Divisor,
        candidates: &[Divisor],
        max_witness_degree: usize,
    ) -> Result<WitnessSearch> {
        let inv = self.syzygy_invariants(l)?;
        let mut search = WitnessSearch {
            line_bundle: l.clone(),
            slope_e: inv.slope_e,
            max_witness_degree,
            classes_checked: 0,
            found: Vec::new(),
            higher_rank_quotients_checked: false,
        };
        if inv.h0_l < 3 {
            return Ok(search);
        }
        search.classes_checked = candidates.len();
        let found: Vec<Option<LineQuotient>> = candidates
            .par_iter()
            .map(|b| -> Result<Option<LineQuotient>> {
                let m = self.mult_map(l, b)?;
                if m.kernel_dim == 0 {
                    return Ok(None);
                }
                let slope = rational::int(b.degree());
                let relation = match slope.cmp(&inv.slope_e) {
                    std::cmp::Ordering::Less => QuotientRelation::Destabilizing,
                    std::cmp::Ordering::Equal => QuotientRelation::SlopeEqual,
                    std::cmp::Ordering::Greater => QuotientRelation::Larger,
                };
                Ok(Some(LineQuotient {
                    quotient: b.clone(),
                    slope,
                    kernel_dim: m.kernel_dim,
                    relation,
                    mult_map: m,
                }))
            })
            .collect::<Result<_>>()?;
        search.found = found.into_iter().flatten().collect();
        search.found.sort_by(|a, b| {
            a.slope
                .cmp(&b.slope)
                .then_with(|| a.quotient.cmp(&b.quotient))
        });
        Ok(search)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Place;

    #[test]
    fn genus_three_finds_h() {
        let c = HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        let l = Divisor::from_terms([
            (c.rational_place(0, 1).unwrap(), 1),
            (c.rational_place(5, 2).unwrap(), 1),
            (Place::Infinite, 3),
        ]);
        let s = c.line_quotient_witness_search(&l, 2).unwrap();
        let h: Vec<_> = s.destabilizing().collect();
        assert_eq!(h.len(), 1);
        assert!(c.class_equal(&h[0].quotient, &Divisor::infinity(2)));
        assert_eq!(h[0].slope, rational::int(2));
        assert!(h[0].kernel_dim >= 1);
    }

    #[test]
    fn stable_and_rank_one_cases() {
        let c = HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 1]).unwrap();
        let s = c
            .line_quotient_witness_search(&Divisor::infinity(5), 3)
            .unwrap();
        assert_eq!(s.destabilizing().count(), 0);
        assert_eq!(s.slope_equal().count(), 0);
        let s = c
            .line_quotient_witness_search(&Divisor::infinity(2), 3)
            .unwrap();
        assert!(s.found.is_empty());
    }
}
