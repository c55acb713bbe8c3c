//! Factorization over GF(p): squarefree decomposition, distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Gf;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Fixed seed for the equal-degree splitting. Output is sorted, so the seed
/// only affects running time.
const SPLIT_SEED: u64 = 0x6879_7065_7273_797a;

/// Factors a nonzero polynomial into monic irreducibles with multiplicities.
/// The leading coefficient is dropped; constants give an empty list.
pub fn factor(poly: &Poly) -> Result<Vec<(Poly, usize)>> {
    if poly.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut out = Vec::new();
    for (sqf, mult) in squarefree(&poly.monic()) {
        for (d, block) in distinct_degree(&sqf) {
            for irr in equal_degree(&block, d, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Irreducibility over GF(p); constants and zero are not irreducible.
pub fn is_irreducible(u: &Poly) -> bool {
    match u.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let sf = u.gcd(&u.derivative()).is_one();
            sf && distinct_degree(&u.monic())
                .first()
                .is_some_and(|(d, _)| Some(*d) == u.degree())
        }
    }
}

/// Splits a monic polynomial into squarefree parts `(part, multiplicity)`.
fn squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let k = f.field();
    let p = k.modulus() as usize;
    let mut out = Vec::new();
    if f.deg_i64() < 1 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i));
        }
        c = c.div_exact(&y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if !c.is_one() {
        // c is a p-th power; x^(pj) -> x^j since Frobenius is trivial on GF(p).
        let root = Poly::new(k, c.coeffs().iter().step_by(p).copied().collect());
        for (g, m) in squarefree(&root) {
            out.push((g, m * p));
        }
    }
    out
}

/// For squarefree monic `f`, returns `(d, product of all degree-d factors)`.
fn distinct_degree(f: &Poly) -> Vec<(usize, Poly)> {
    let k = f.field();
    let p = k.modulus();
    let x = Poly::x(k);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.deg_i64() >= 2 * (d as i64 + 1) {
        d += 1;
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&(&h - &x));
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest);
            out.push((d, g));
        }
    }
    if rest.deg_i64() >= 1 {
        out.push((rest.degree().unwrap(), rest));
    }
    out
}

fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let k = f.field();
    loop {
        let a = random_poly(k, n, rng);
        if a.deg_i64() < 1 {
            continue;
        }
        let g = f.gcd(&a);
        let split = if !g.is_one() {
            g
        } else {
            let b = a.pow_half_order(d, f);
            f.gcd(&(&b - &Poly::one(k)))
        };
        if !split.is_one() && split.degree() != Some(n) {
            let other = f.div_exact(&split).expect("gcd divides");
            let mut out = equal_degree(&split, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

pub(crate) fn random_poly(k: Gf, len: usize, rng: &mut ChaCha8Rng) -> Poly {
    let p = k.modulus();
    Poly::new(k, (0..len).map(|_| rng.gen_range(0..p)).collect())
}
