#![allow(dead_code)]

use hypersyz::{Divisor, HyperellipticCurve, Place};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn g2_p11() -> HyperellipticCurve {
    HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 1]).unwrap()
}

pub fn g3_p11() -> HyperellipticCurve {
    HyperellipticCurve::from_coeffs(11, &[1, 0, 0, 0, 0, 0, 0, 1]).unwrap()
}

pub fn g4_p13() -> HyperellipticCurve {
    HyperellipticCurve::from_coeffs(13, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap()
}

pub fn g2_p13() -> HyperellipticCurve {
    HyperellipticCurve::from_coeffs(13, &[3, 2, 0, 0, 0, 1]).unwrap()
}

pub fn g3_p13() -> HyperellipticCurve {
    HyperellipticCurve::from_coeffs(13, &[1, 0, 0, 0, 0, 0, 0, 1]).unwrap()
}

pub fn g4_p11() -> HyperellipticCurve {
    HyperellipticCurve::from_coeffs(11, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap()
}

pub fn all_curves() -> Vec<HyperellipticCurve> {
    vec![g2_p11(), g2_p13(), g3_p11(), g3_p13(), g4_p11(), g4_p13()]
}

/// Random divisor of exactly `target` degree: a few random places with signed
/// multiplicities, topped up at infinity.
pub fn random_divisor(places: &[Place], target: i64, rng: &mut ChaCha8Rng) -> Divisor {
    let mut d = Divisor::zero();
    for _ in 0..rng.gen_range(0..4) {
        let p = places.choose(rng).unwrap().clone();
        d.add_place(p, rng.gen_range(-2..=3));
    }
    let gap = target - d.degree();
    d.add_place(Place::Infinite, gap);
    d
}

/// Random effective divisor of degree exactly `deg` on the given places.
pub fn random_effective(places: &[Place], deg: usize, rng: &mut ChaCha8Rng) -> Divisor {
    loop {
        let mut d = Divisor::zero();
        let mut left = deg;
        while left > 0 {
            let p = places.choose(rng).unwrap();
            if p.degree() <= left {
                left -= p.degree();
                d.add_place(p.clone(), 1);
            }
        }
        if d.degree() == deg as i64 {
            return d;
        }
    }
}
