//! The syzygy bundle `E_L = M_L^*` of a globally generated line bundle `L`.
//!
//! `M_L` is the kernel of evaluation `H0(L) ⊗ O -> L`, so `E_L` has rank
//! `h0(L) - 1` and degree `deg L`. Maps `E_L ->> B` onto a line bundle `B`
//! correspond to nonzero elements of
//! `H0(M_L ⊗ B) = ker(H0(L) ⊗ H0(B) -> H0(L ⊗ B))`, which is computed here as
//! the kernel of an explicit multiplication matrix.

mod verdict;
mod witness;

use serde::Serialize;

use crate::algebra::Matrix;
use crate::curve::HyperellipticCurve;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use verdict::{
    verdict_from_invariants, Justification, StabilityStatus, StabilityVerdict, Witness,
    ANCHOR_HYP_SEMISTABLE, ANCHOR_HYP_STABLE, ANCHOR_KERNEL, ANCHOR_RANK_ONE,
    ANCHOR_SEMISTABLE_RANGE, ANCHOR_SILENT, ANCHOR_STABLE_EXCEPT_2G,
};
pub use witness::{LineQuotient, QuotientRelation, WitnessSearch};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyInvariants {
    pub genus: usize,
    pub deg_l: i64,
    pub h0_l: usize,
    pub h1_l: usize,
    pub rank_e: usize,
    pub deg_e: i64,
    #[serde(serialize_with = "rational::serialize")]
    pub slope_e: Rational,
    pub clifford_l: i64,
}

impl SyzygyInvariants {
    /// Re-derives the identities relating the fields.
    pub fn check(&self) -> Result<()> {
        let r = self.rank_e as i64;
        let fail = |what: &str| Err(Error::Internal(format!("{what} fails for {self:?}")));
        if r < 1 || self.rank_e + 1 != self.h0_l || self.deg_e != self.deg_l {
            return fail("rank/degree bookkeeping");
        }
        if self.slope_e != rational::ratio(self.deg_e, r) {
            return fail("slope = deg / rank");
        }
        if self.deg_e != r + self.genus as i64 - self.h1_l as i64 {
            return fail("deg E_L = rk E_L + g - h1(L)");
        }
        if self.slope_e != rational::int(2) + rational::ratio(self.clifford_l, r) {
            return fail("slope = 2 + c(L)/rk");
        }
        Ok(())
    }
}

/// Dimensions of the multiplication map `H0(L1) ⊗ H0(L2) -> H0(L1 ⊗ L2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultMapReport {
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: usize,
    pub kernel_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoetherReport {
    pub rank: usize,
    pub dim_target: usize,
    pub surjective: bool,
}

impl HyperellipticCurve {
    pub fn syzygy_invariants(&self, l: &Divisor) -> Result<SyzygyInvariants> {
        let h0 = self.h0(l);
        if h0 == 0 {
            return Err(Error::ProjectiveImageUndefined(0));
        }
        if !self.is_globally_generated(l)? {
            return Err(Error::NotGloballyGenerated(l.to_string()));
        }
        if h0 < 2 {
            return Err(Error::ProjectiveImageUndefined(h0));
        }
        let rank = h0 as i64 - 1;
        let deg = l.degree();
        let inv = SyzygyInvariants {
            genus: self.genus(),
            deg_l: deg,
            h0_l: h0,
            h1_l: self.h1(l),
            rank_e: h0 - 1,
            deg_e: deg,
            slope_e: rational::ratio(deg, rank),
            clifford_l: deg - 2 * rank,
        };
        inv.check()?;
        Ok(inv)
    }

    /// Builds the matrix of `H0(D1) ⊗ H0(D2) -> H0(D1 + D2)` in explicit bases
    /// and reports its rank. When `D1` is globally generated, `kernel_dim` is
    /// `h0(M_{D1} ⊗ O(D2))`.
    pub fn mult_map(&self, d1: &Divisor, d2: &Divisor) -> Result<MultMapReport> {
        let (m, dim_target) = self.mult_matrix(d1, d2)?;
        let rank = m.rank();
        let dim_source = m.cols();
        let report = MultMapReport {
            dim_source,
            dim_target,
            rank,
            kernel_dim: dim_source - rank,
        };
        if report.rank > dim_target {
            return Err(Error::Internal(format!(
                "rank exceeds target in {report:?}"
            )));
        }
        Ok(report)
    }

    fn mult_matrix(&self, d1: &Divisor, d2: &Divisor) -> Result<(Matrix, usize)> {
        let b1 = self.rr_space(d1);
        let b2 = self.rr_space(d2);
        if b1.dim() == 0 || b2.dim() == 0 {
            return Err(Error::Precondition(format!(
                "multiplication map needs h0 >= 1 on both sides (h0({d1}) = {}, h0({d2}) = {})",
                b1.dim(),
                b2.dim()
            )));
        }
        let target = self.rr_space(&d1.add(d2));
        let mut cols = Vec::with_capacity(b1.dim() * b2.dim());
        for f in b1.basis() {
            for g in b2.basis() {
                let prod = f.mul(g, self);
                let coords = target.coordinates(&prod).ok_or_else(|| {
                    Error::Internal(format!(
                        "product {prod} not found in L({})",
                        target.divisor()
                    ))
                })?;
                cols.push(coords);
            }
        }
        Ok((
            Matrix::from_columns(self.field(), target.dim(), &cols),
            target.dim(),
        ))
    }

    /// Multiplication `H0(K) ⊗ H0(K) -> H0(2K)`; surjective exactly when
    /// `g = 2` on a hyperelliptic curve.
    pub fn noether_rank(&self) -> Result<NoetherReport> {
        let k = self.canonical_divisor();
        let m = self.mult_map(&k, &k)?;
        Ok(NoetherReport {
            rank: m.rank,
            dim_target: m.dim_target,
            surjective: m.rank == m.dim_target,
        })
    }
}

/// Slope of `φ_L^* T`, which has rank `r` and degree `(r + 1) deg L`. Its
/// stability agrees with that of `E_L`.
pub fn slope_restricted_tangent(inv: &SyzygyInvariants) -> Result<Rational> {
    if inv.rank_e < 1 {
        return Err(Error::Precondition("rank E_L must be >= 1".into()));
    }
    let r = inv.rank_e as i64;
    Ok(rational::ratio((r + 1) * inv.deg_l, r))
}
