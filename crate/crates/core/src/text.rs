//! Textual formats shared with the command line.
//!
//! * polynomial: `[c0,c1,...]` (low degree first) or sparse `x^7+3*x-1`
//! * curve: `p=<prime>,f=<poly>`
//! * place: `inf`, `split(u,v)`, `ram(u)`, `inert(u)`, or the record forms
//!   `{u:<poly>,v:<poly>}`, `{ram:<poly>}`, `{inert:<poly>}`
//! * divisor: `[place,n]+[place,n]+...`, or `0` for the empty divisor

use crate::algebra::{Gf, Poly};
use crate::curve::{HyperellipticCurve, Place};
use crate::divisor::Divisor;
use crate::error::{Error, Result};

fn perr<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Splits on `sep` at bracket depth zero.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_int(s: &str) -> Result<i64> {
    s.parse::<i64>()
        .or_else(|_| perr(format!("expected an integer, got {s:?}")))
}

pub fn parse_poly(k: Gf, s: &str) -> Result<Poly> {
    let s = strip_ws(s);
    if s.is_empty() {
        return perr("empty polynomial");
    }
    if let Some(inner) = s.strip_prefix('[') {
        let Some(inner) = inner.strip_suffix(']') else {
            return perr(format!("unterminated coefficient list {s:?}"));
        };
        if inner.is_empty() {
            return Ok(Poly::zero(k));
        }
        let coeffs = inner
            .split(',')
            .map(parse_int)
            .collect::<Result<Vec<_>>>()?;
        return Ok(Poly::from_i64(k, &coeffs));
    }
    // Sparse form: split into signed terms.
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<i64> = Vec::new();
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, t.strip_prefix('+').unwrap_or(&t)),
        };
        if body.is_empty() {
            return perr(format!("dangling sign in {s:?}"));
        }
        let (coef, deg) = match body.find('x') {
            None => (parse_int(body)?, 0usize),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                let c = if c.is_empty() { 1 } else { parse_int(c)? };
                let rest = &body[pos + 1..];
                let d = if rest.is_empty() {
                    1
                } else if let Some(e) = rest.strip_prefix('^') {
                    let e = parse_int(e)?;
                    if !(0..=10_000).contains(&e) {
                        return perr(format!("bad exponent in {body:?}"));
                    }
                    e as usize
                } else {
                    return perr(format!("unexpected {rest:?} after x"));
                };
                (c, d)
            }
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] = coeffs[deg]
            .checked_add(sign * coef)
            .ok_or_else(|| Error::Parse("coefficient overflow".into()))?;
    }
    Ok(Poly::from_i64(k, &coeffs))
}

/// Parses and validates a curve record `p=<prime>,f=<poly>`.
pub fn parse_curve(s: &str) -> Result<HyperellipticCurve> {
    let s = strip_ws(s);
    let Some(rest) = s.strip_prefix("p=") else {
        return perr(format!("curve record must start with p=, got {s:?}"));
    };
    let Some(idx) = rest.find(",f=") else {
        return perr(format!("curve record missing ,f=: {s:?}"));
    };
    let p = rest[..idx]
        .parse::<u64>()
        .or_else(|_| perr(format!("bad prime {:?}", &rest[..idx])))?;
    let k = Gf::new(p)?;
    let f = parse_poly(k, &rest[idx + 3..])?;
    HyperellipticCurve::new(f)
}

pub fn parse_place(curve: &HyperellipticCurve, s: &str) -> Result<Place> {
    let s = strip_ws(s);
    let k = curve.field();
    if s == "inf" {
        return Ok(Place::Infinite);
    }
    let call = |name: &str| -> Option<&str> {
        s.strip_prefix(name)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
    };
    if let Some(args) = call("split") {
        let parts = split_top(args, ',');
        if parts.len() != 2 {
            return perr(format!("split place needs two polynomials: {s:?}"));
        }
        return curve.split_place(parse_poly(k, parts[0])?, parse_poly(k, parts[1])?);
    }
    if let Some(arg) = call("ram") {
        return curve.ramified_place(parse_poly(k, arg)?);
    }
    if let Some(arg) = call("inert") {
        return curve.inert_place(parse_poly(k, arg)?);
    }
    if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        let mut u = None;
        let mut v = None;
        let mut kind = None;
        for field in split_top(inner, ',') {
            let Some((key, val)) = field.split_once(':') else {
                return perr(format!("expected key:value in {s:?}"));
            };
            let poly = parse_poly(k, val)?;
            match key {
                "u" => u = Some(poly),
                "v" => v = Some(poly),
                "ram" | "inert" => kind = Some((key.to_string(), poly)),
                _ => return perr(format!("unknown place key {key:?}")),
            }
        }
        return match (u, v, kind) {
            (Some(u), Some(v), None) => curve.split_place(u, v),
            (None, None, Some((key, u))) if key == "ram" => curve.ramified_place(u),
            (None, None, Some((_, u))) => curve.inert_place(u),
            _ => perr(format!("malformed place record {s:?}")),
        };
    }
    perr(format!("unrecognized place {s:?}"))
}

pub fn parse_divisor(curve: &HyperellipticCurve, s: &str) -> Result<Divisor> {
    let s = strip_ws(s);
    if s == "0" {
        return Ok(Divisor::zero());
    }
    if s.is_empty() {
        return perr("empty divisor");
    }
    let mut d = Divisor::zero();
    for term in split_top(&s, '+') {
        let Some(inner) = term.strip_prefix('[').and_then(|r| r.strip_suffix(']')) else {
            return perr(format!(
                "divisor term must look like [place,n], got {term:?}"
            ));
        };
        let parts = split_top(inner, ',');
        let [place, n] = parts.as_slice() else {
            return perr(format!(
                "divisor term must look like [place,n], got {term:?}"
            ));
        };
        d.add_place(parse_place(curve, place)?, parse_int(n)?);
    }
    Ok(d)
}
