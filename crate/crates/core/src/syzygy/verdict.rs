use std::collections::BTreeMap;

use serde::Serialize;

use super::{MultMapReport, SyzygyInvariants};
use crate::curve::HyperellipticCurve;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub const ANCHOR_SEMISTABLE_RANGE: &str = "semistable when deg L >= 2g - c(C)";
pub const ANCHOR_STABLE_EXCEPT_2G: &str =
    "stable unless deg L = 2g and (C hyperelliptic or L = K(p+q))";
pub const ANCHOR_HYP_STABLE: &str = "hyperelliptic: stable iff deg L >= 2g+1";
pub const ANCHOR_HYP_SEMISTABLE: &str = "hyperelliptic: semistable iff deg L >= 2g or L = kH";
pub const ANCHOR_KERNEL: &str = "E_L ->> B iff H0(M_L ⊗ B) != 0";
pub const ANCHOR_RANK_ONE: &str = "h0(L) = 2: E_L is a line bundle";
pub const ANCHOR_SILENT: &str = "deg L < 2g - c(C): no general verdict";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum StabilityStatus {
    Stable,
    StrictlySemistable,
    NotSemistable,
    Unknown,
}

impl StabilityStatus {
    pub fn is_semistable(self) -> Option<bool> {
        match self {
            StabilityStatus::Stable | StabilityStatus::StrictlySemistable => Some(true),
            StabilityStatus::NotSemistable => Some(false),
            StabilityStatus::Unknown => None,
        }
    }
}

/// A line-bundle quotient `E_L ->> B` certified by a nonzero kernel of the
/// multiplication map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub line_bundle: Divisor,
    pub quotient: Divisor,
    #[serde(serialize_with = "rational::serialize")]
    pub slope_quotient: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub slope_e: Rational,
    pub kernel_dim: usize,
    pub mult_map: MultMapReport,
}

impl Witness {
    /// Recomputes the multiplication map and both slopes from the stored divisors.
    pub fn replay(&self, curve: &HyperellipticCurve) -> Result<bool> {
        let m = curve.mult_map(&self.line_bundle, &self.quotient)?;
        let inv = curve.syzygy_invariants(&self.line_bundle)?;
        Ok(m == self.mult_map
            && m.kernel_dim == self.kernel_dim
            && inv.slope_e == self.slope_e
            && rational::int(self.quotient.degree()) == self.slope_quotient)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Justification {
    TheoremBranch {
        name: String,
        inputs: BTreeMap<String, i64>,
    },
    Witness(Witness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub status: StabilityStatus,
    pub justification: Justification,
    /// `E_L` has rank one (`h0(L) = 2`).
    pub rank_one: bool,
    pub anchors: Vec<String>,
    pub notes: Vec<String>,
}

impl StabilityVerdict {
    pub fn witness(&self) -> Option<&Witness> {
        match &self.justification {
            Justification::Witness(w) => Some(w),
            Justification::TheoremBranch { .. } => None,
        }
    }
}

fn branch(name: &str, inputs: &[(&str, i64)]) -> Justification {
    Justification::TheoremBranch {
        name: name.to_string(),
        inputs: inputs.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
    }
}

/// Verdict from numerical data alone, valid on any smooth curve of genus `g`
/// with Clifford index `c_curve`: semistable once `deg L >= 2g - c_curve`, and
/// stable there except at `deg L = 2g` on a hyperelliptic curve or for
/// `L = K(p+q)`. Below that range the answer is `Unknown`.
pub fn verdict_from_invariants(
    g: usize,
    c_curve: i64,
    deg_l: i64,
    h1_l: usize,
    is_hyperelliptic: bool,
    is_k_plus_2pts: bool,
) -> Result<StabilityVerdict> {
    let gi = g as i64;
    let bad = |msg: String| Err(Error::Domain(format!("inconsistent invariants: {msg}")));
    if g < 2 {
        return bad(format!("genus {g} < 2"));
    }
    if c_curve < 0 || c_curve > (gi - 1) / 2 {
        return bad(format!("c(C) = {c_curve} outside [0, (g-1)/2]"));
    }
    if deg_l < 1 {
        return bad(format!("deg L = {deg_l} < 1"));
    }
    if h1_l > g {
        return bad(format!("h1(L) = {h1_l} > g = {g}"));
    }
    if deg_l > 2 * gi - 2 && h1_l != 0 {
        return bad(format!(
            "deg L = {deg_l} > 2g-2 forces h1(L) = 0, got {h1_l}"
        ));
    }
    if is_hyperelliptic && c_curve != 0 {
        return bad(format!("hyperelliptic curves have c(C) = 0, got {c_curve}"));
    }
    if is_k_plus_2pts && deg_l != 2 * gi {
        return bad(format!("L = K(p+q) has degree 2g, got {deg_l}"));
    }
    let inputs = [
        ("g", gi),
        ("c_curve", c_curve),
        ("deg_l", deg_l),
        ("h1_l", h1_l as i64),
        ("is_hyperelliptic", is_hyperelliptic as i64),
        ("is_k_plus_2pts", is_k_plus_2pts as i64),
    ];
    if deg_l < 2 * gi - c_curve {
        return Ok(StabilityVerdict {
            status: StabilityStatus::Unknown,
            justification: branch(ANCHOR_SILENT, &inputs),
            rank_one: false,
            anchors: vec![ANCHOR_SILENT.into()],
            notes: vec![
                "on a general curve of genus >= 3, E_L is semistable for every globally \
                 generated L (Schneider); not applicable to a specific curve"
                    .into(),
            ],
        });
    }
    let exceptional = deg_l == 2 * gi && (is_hyperelliptic || is_k_plus_2pts);
    let status = if exceptional {
        StabilityStatus::StrictlySemistable
    } else {
        StabilityStatus::Stable
    };
    Ok(StabilityVerdict {
        status,
        justification: branch(ANCHOR_STABLE_EXCEPT_2G, &inputs),
        rank_one: false,
        anchors: vec![
            ANCHOR_SEMISTABLE_RANGE.into(),
            ANCHOR_STABLE_EXCEPT_2G.into(),
        ],
        notes: Vec::new(),
    })
}

impl HyperellipticCurve {
    /// The `B = H` quotient witness for `L`.
    pub(crate) fn h_witness(&self, l: &Divisor, inv: &SyzygyInvariants) -> Result<Witness> {
        let h = self.hyperelliptic_divisor();
        let m = self.mult_map(l, &h)?;
        Ok(Witness {
            line_bundle: l.clone(),
            slope_quotient: rational::int(h.degree()),
            quotient: h,
            slope_e: inv.slope_e,
            kernel_dim: m.kernel_dim,
            mult_map: m,
        })
    }

    /// `deg L = 2g` and `L - K` effective up to equivalence.
    pub fn is_k_plus_two_points(&self, l: &Divisor) -> bool {
        l.degree() == 2 * self.genus() as i64 && self.h0(&l.sub(&self.canonical_divisor())) >= 1
    }

    /// Concrete verdict for a globally generated `L` on this hyperelliptic
    /// curve. With `h0(L) >= 3`: stable iff `deg L >= 2g+1`; strictly
    /// semistable at `deg L = 2g` and for `L = kH`; otherwise not semistable,
    /// with `H` as destabilizing quotient. Every non-stable verdict carries the
    /// `H` witness.
    pub fn verdict_on_curve(&self, l: &Divisor) -> Result<StabilityVerdict> {
        let inv = self.syzygy_invariants(l)?;
        let g = self.genus() as i64;
        let deg = inv.deg_l;
        let kp2 = self.is_k_plus_two_points(l);
        let inputs = [
            ("g", g),
            ("deg_l", deg),
            ("h0_l", inv.h0_l as i64),
            ("h1_l", inv.h1_l as i64),
            ("clifford_l", inv.clifford_l),
            ("is_k_plus_2pts", kp2 as i64),
        ];
        if inv.h0_l == 2 {
            return Ok(StabilityVerdict {
                status: StabilityStatus::Stable,
                justification: branch(ANCHOR_RANK_ONE, &inputs),
                rank_one: true,
                anchors: vec![ANCHOR_RANK_ONE.into()],
                notes: vec![
                    "h0(L) = 2 lies outside the h0(L) >= 3 hypothesis of the hyperelliptic \
                     classification; a line bundle has no proper quotients"
                        .into(),
                ],
            });
        }
        if deg > 2 * g {
            return Ok(StabilityVerdict {
                status: StabilityStatus::Stable,
                justification: branch(ANCHOR_HYP_STABLE, &inputs),
                rank_one: false,
                anchors: vec![ANCHOR_HYP_STABLE.into(), ANCHOR_STABLE_EXCEPT_2G.into()],
                notes: Vec::new(),
            });
        }
        let w = self.h_witness(l, &inv)?;
        if w.kernel_dim == 0 {
            return Err(Error::Internal(format!(
                "H0(M_L ⊗ H) = 0 for L = {l} with h0(L) = {}",
                inv.h0_l
            )));
        }
        let (status, mut anchors, notes) = if deg == 2 * g {
            if w.slope_quotient != w.slope_e {
                return Err(Error::Internal(format!(
                    "deg L = 2g but slope(E_L) = {} != 2",
                    w.slope_e
                )));
            }
            (
                StabilityStatus::StrictlySemistable,
                vec![
                    ANCHOR_HYP_STABLE.to_string(),
                    ANCHOR_HYP_SEMISTABLE.to_string(),
                ],
                Vec::new(),
            )
        } else if inv.clifford_l > 0 {
            if w.slope_quotient >= w.slope_e {
                return Err(Error::Internal(format!(
                    "c(L) > 0 but slope(H) = 2 >= slope(E_L) = {}",
                    w.slope_e
                )));
            }
            (
                StabilityStatus::NotSemistable,
                vec![ANCHOR_HYP_SEMISTABLE.to_string()],
                Vec::new(),
            )
        } else if inv.clifford_l == 0 {
            let kh = self.hyperelliptic_divisor().scale(deg / 2);
            if deg % 2 != 0 || !self.class_equal(l, &kh) {
                return Err(Error::Internal(format!(
                    "c(L) = 0 but L = {l} is not a multiple of H"
                )));
            }
            (
                StabilityStatus::StrictlySemistable,
                vec![ANCHOR_HYP_SEMISTABLE.to_string()],
                vec![format!("L = {}H", deg / 2)],
            )
        } else {
            return Err(Error::Internal(format!(
                "globally generated L = {l} of degree <= 2g-1 with c(L) < 0"
            )));
        };
        anchors.push(ANCHOR_KERNEL.into());
        Ok(StabilityVerdict {
            status,
            justification: Justification::Witness(w),
            rank_one: false,
            anchors,
            notes,
        })
    }
}
