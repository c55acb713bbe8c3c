use hypersyz::syzygy::{ANCHOR_KERNEL, ANCHOR_RANK_ONE};
use hypersyz::text::{parse_curve, parse_divisor};
use hypersyz::{
    prop31_predict, slope_restricted_tangent, verdict_from_invariants, Divisor, Error,
    HyperellipticCurve, Result,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Command, OneDivisor, TwoDivisors};

const ANCHOR_RR: &str = "h0(D) - h1(D) = deg D - g + 1";
const ANCHOR_SERRE: &str = "h1(D) = h0(K - D), K = (2g-2)inf";
const ANCHOR_CLIFFORD: &str = "c(D) = deg D - 2(h0(D) - 1)";
const ANCHOR_CLIFFORD_CURVE: &str =
    "c(C) = min c(D) over h0(D) >= 2, h1(D) >= 2; c(C) = 0 iff C is hyperelliptic";
const ANCHOR_BASE: &str = "Bs|D| = min over a basis of div(s) + D";
const ANCHOR_CLASS: &str = "D1 ~ D2 iff deg D1 = deg D2 and h0(D1 - D2) >= 1";
const ANCHOR_SYZYGY: &str = "0 -> M_L -> H0(L) ⊗ O_C -> L -> 0, E_L = M_L^*";
const ANCHOR_SLOPE: &str = "slope(E_L) = 2 + c(L)/rk(E_L)";
const ANCHOR_NOETHER: &str = "H0(K) ⊗ H0(K) -> H0(2K) is onto iff C is not hyperelliptic or g = 2";
const ANCHOR_CONSTRUCTION: &str =
    "L = (K - D) + E, deg L = 2g - c - 1: E_(K-D) is a quotient of E_L of slope 2 + c/(g-c-2)";

pub struct Outcome {
    pub result: Value,
    pub anchors: Vec<String>,
}

fn value<T: Serialize>(t: &T) -> Result<Value> {
    serde_json::to_value(t).map_err(|e| Error::Internal(format!("serialization: {e}")))
}

fn outcome(result: Value, anchors: &[&str]) -> Result<Outcome> {
    Ok(Outcome {
        result,
        anchors: anchors.iter().map(|a| a.to_string()).collect(),
    })
}

fn curve_and(d: &OneDivisor) -> Result<(HyperellipticCurve, Divisor)> {
    let c = parse_curve(&d.curve.curve)?;
    let l = parse_divisor(&c, &d.divisor)?;
    Ok((c, l))
}

fn curve_and_two(d: &TwoDivisors) -> Result<(HyperellipticCurve, Divisor, Divisor)> {
    let c = parse_curve(&d.curve.curve)?;
    let d1 = parse_divisor(&c, &d.divisor)?;
    let d2 = parse_divisor(&c, &d.divisor2)?;
    Ok((c, d1, d2))
}

pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Rr(d) => {
            let (c, d) = curve_and(d)?;
            let space = c.rr_space(&d);
            let basis: Vec<String> = space.basis().iter().map(|f| f.to_string()).collect();
            outcome(
                json!({
                    "curve": c.to_string(),
                    "divisor": d,
                    "degree": d.degree(),
                    "dim": space.dim(),
                    "denominator": space.denominator().to_string(),
                    "basis": basis,
                }),
                &[ANCHOR_RR],
            )
        }
        Command::H0h1(d) => {
            let (c, d) = curve_and(d)?;
            outcome(
                json!({
                    "curve": c.to_string(),
                    "divisor": d,
                    "genus": c.genus(),
                    "degree": d.degree(),
                    "h0": c.h0(&d),
                    "h1": c.h1(&d),
                }),
                &[ANCHOR_RR, ANCHOR_SERRE],
            )
        }
        Command::Clifford(d) => {
            let (c, d) = curve_and(d)?;
            let (h0, h1) = (c.h0(&d), c.h1(&d));
            outcome(
                json!({
                    "divisor": d,
                    "degree": d.degree(),
                    "h0": h0,
                    "h1": h1,
                    "clifford": c.clifford_of_divisor(&d),
                    "contributes": h0 >= 2 && h1 >= 2,
                }),
                &[ANCHOR_CLIFFORD, ANCHOR_SERRE],
            )
        }
        Command::CliffordCurve {
            curve,
            bound,
            place_degree,
        } => {
            let c = parse_curve(&curve.curve)?;
            let bound = bound.unwrap_or((c.genus() - 1).max(2));
            let search = c.clifford_search(bound, *place_degree)?;
            outcome(
                json!({
                    "curve": c.to_string(),
                    "genus": c.genus(),
                    "bound": bound,
                    "place_degree": place_degree,
                    "search": value(&search)?,
                }),
                &[ANCHOR_CLIFFORD_CURVE],
            )
        }
        Command::BaseLocus(d) => {
            let (c, d) = curve_and(d)?;
            let b = c.base_locus(&d)?;
            outcome(
                json!({
                    "divisor": d,
                    "h0": c.h0(&d),
                    "base_locus": b,
                    "globally_generated": b.is_zero(),
                }),
                &[ANCHOR_BASE],
            )
        }
        Command::ClassEq(d) => {
            let (c, d1, d2) = curve_and_two(d)?;
            outcome(
                json!({
                    "divisor": d1,
                    "divisor2": d2,
                    "equal": c.class_equal(&d1, &d2),
                }),
                &[ANCHOR_CLASS],
            )
        }
        Command::Invariants(d) => {
            let (c, l) = curve_and(d)?;
            let inv = c.syzygy_invariants(&l)?;
            let tangent = slope_restricted_tangent(&inv)?;
            outcome(
                json!({
                    "line_bundle": l,
                    "invariants": value(&inv)?,
                    "slope_restricted_tangent": tangent.to_string(),
                }),
                &[ANCHOR_SYZYGY, ANCHOR_SLOPE],
            )
        }
        Command::Multmap(d) => {
            let (c, d1, d2) = curve_and_two(d)?;
            let m = c.mult_map(&d1, &d2)?;
            outcome(
                json!({ "divisor": d1, "divisor2": d2, "report": value(&m)? }),
                &[ANCHOR_KERNEL],
            )
        }
        Command::Noether(curve) => {
            let c = parse_curve(&curve.curve)?;
            let r = c.noether_rank()?;
            outcome(
                json!({ "curve": c.to_string(), "genus": c.genus(), "report": value(&r)? }),
                &[ANCHOR_NOETHER],
            )
        }
        Command::Verdict(d) => {
            let (c, l) = curve_and(d)?;
            let v = c.verdict_on_curve(&l)?;
            let anchors: Vec<&str> = v.anchors.iter().map(String::as_str).collect();
            outcome(value(&v)?, &anchors)
        }
        Command::VerdictAbstract {
            g,
            c,
            deg,
            h1,
            hyperelliptic,
            k_plus_2pts,
        } => {
            let v = verdict_from_invariants(*g, *c, *deg, *h1, *hyperelliptic, *k_plus_2pts)?;
            let anchors: Vec<&str> = v.anchors.iter().map(String::as_str).collect();
            outcome(value(&v)?, &anchors)
        }
        Command::WitnessSearch { divisor, bound } => {
            let (c, l) = curve_and(divisor)?;
            let s = c.line_quotient_witness_search(&l, *bound)?;
            let anchors = if c.h0(&l) == 2 {
                vec![ANCHOR_KERNEL, ANCHOR_RANK_ONE]
            } else {
                vec![ANCHOR_KERNEL]
            };
            outcome(value(&s)?, &anchors)
        }
        Command::Prop31 {
            curve,
            seed,
            max_attempts,
        } => {
            let c = parse_curve(&curve.curve)?;
            let r = c.prop31_construct(*seed, *max_attempts)?;
            outcome(value(&r)?, &[ANCHOR_CONSTRUCTION, ANCHOR_KERNEL])
        }
        Command::Prop31Predict { g, c } => {
            let p = prop31_predict(*g, *c)?;
            outcome(value(&p)?, &[ANCHOR_CONSTRUCTION, ANCHOR_SLOPE])
        }
    }
}
