mod common;

use common::*;
use hypersyz::destab::DEFAULT_MAX_ATTEMPTS;
use hypersyz::rational::{int, ratio};
use hypersyz::{
    slope_restricted_tangent, verdict_from_invariants, Divisor, Error, HyperellipticCurve,
    StabilityStatus,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random globally generated `L` with `h0(L) >= 2` on rational places.
fn generated_bundles(c: &HyperellipticCurve, seed: u64, n: usize) -> Vec<Divisor> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let places = c.enumerate_places(1).unwrap();
    let g = c.genus();
    let mut out = Vec::new();
    while out.len() < n {
        let l = random_effective(&places, rng.gen_range(2..=2 * g + 3), &mut rng);
        if c.h0(&l) >= 2 && c.is_globally_generated(&l).unwrap() {
            out.push(l);
        }
    }
    out
}

#[test]
fn invariants_satisfy_slope_identities() {
    for (i, c) in all_curves().iter().enumerate() {
        let g = c.genus() as i64;
        for l in generated_bundles(c, i as u64, 12) {
            let inv = c.syzygy_invariants(&l).unwrap();
            let r = inv.rank_e as i64;
            assert_eq!(inv.deg_e, r + g - inv.h1_l as i64, "{c} L={l}");
            assert_eq!(inv.slope_e, int(2) + ratio(inv.clifford_l, r));
            assert_eq!(inv.clifford_l, c.clifford_of_divisor(&l));
            assert_eq!(
                slope_restricted_tangent(&inv).unwrap(),
                ratio((r + 1) * inv.deg_l, r)
            );
        }
    }
}

#[test]
fn invariants_reject_bad_input() {
    let c = g3_p11();
    let p = c.rational_place(0, 1).unwrap();
    let one = Divisor::from_place(p, 1);
    assert!(matches!(
        c.syzygy_invariants(&Divisor::infinity(-1)),
        Err(Error::ProjectiveImageUndefined(0))
    ));
    assert!(matches!(
        c.syzygy_invariants(&one),
        Err(Error::NotGloballyGenerated(_))
    ));
    assert!(matches!(
        c.syzygy_invariants(&Divisor::zero()),
        Err(Error::ProjectiveImageUndefined(1))
    ));
}

#[test]
fn mult_map_dimension_counts() {
    for (i, c) in all_curves().iter().enumerate() {
        let h = c.hyperelliptic_divisor();
        for l in generated_bundles(c, 20 + i as u64, 10) {
            let h0 = c.h0(&l);
            let m = c.mult_map(&l, &h).unwrap();
            assert_eq!(m.dim_source, 2 * h0);
            assert_eq!(m.dim_target, c.h0(&l.add(&h)));
            assert_eq!(m.rank + m.kernel_dim, m.dim_source);
            assert!(m.rank <= m.dim_target);
            assert!(m.kernel_dim >= m.dim_source.saturating_sub(m.dim_target));
            let swapped = c.mult_map(&h, &l).unwrap();
            assert_eq!(swapped.rank, m.rank);
        }
    }
}

#[test]
fn verdict_witnesses_replay() {
    for (i, c) in all_curves().iter().enumerate() {
        for l in generated_bundles(c, 40 + i as u64, 12) {
            let v = c.verdict_on_curve(&l).unwrap();
            match v.status {
                StabilityStatus::Stable => assert!(v.witness().is_none()),
                StabilityStatus::StrictlySemistable | StabilityStatus::NotSemistable => {
                    let w = v.witness().expect("witness");
                    assert!(w.replay(c).unwrap(), "{c} L={l}");
                    assert!(w.kernel_dim >= 1);
                    if v.status == StabilityStatus::NotSemistable {
                        assert!(w.slope_quotient < w.slope_e);
                    } else {
                        assert_eq!(w.slope_quotient, w.slope_e);
                    }
                }
                StabilityStatus::Unknown => panic!("{c} L={l}: concrete verdict undecided"),
            }
            assert_eq!(v.rank_one, c.h0(&l) == 2);
        }
    }
}

#[test]
fn concrete_and_abstract_verdicts_agree_in_range() {
    for (i, c) in all_curves().iter().enumerate() {
        let g = c.genus();
        for l in generated_bundles(c, 60 + i as u64, 20) {
            let deg = l.degree();
            if deg < 2 * g as i64 || c.h0(&l) == 2 {
                continue;
            }
            let concrete = c.verdict_on_curve(&l).unwrap();
            let kp2 = c.is_k_plus_two_points(&l);
            let abstract_ = verdict_from_invariants(g, 0, deg, c.h1(&l), true, kp2).unwrap();
            assert_eq!(concrete.status, abstract_.status, "{c} L={l}");
        }
    }
}

#[test]
fn verdict_is_a_class_invariant() {
    let c = g3_p11();
    let l = Divisor::from_terms([
        (c.rational_place(0, 1).unwrap(), 1),
        (c.rational_place(5, 2).unwrap(), 1),
        (hypersyz::Place::Infinite, 3),
    ]);
    let x = hypersyz::CurveFunction::x(c.field());
    let shifted = l.add(&c.divisor_of(&x).unwrap());
    let a = c.verdict_on_curve(&l).unwrap();
    let b = c.verdict_on_curve(&shifted).unwrap();
    assert_eq!(a.status, b.status);
    assert_eq!(a.witness().unwrap().slope_e, b.witness().unwrap().slope_e);
}

#[test]
fn noether_map_in_genus_four() {
    let r = g4_p11().noether_rank().unwrap();
    assert_eq!((r.rank, r.dim_target, r.surjective), (7, 9, false));
}

#[test]
fn genus_four_construction_is_deterministic() {
    let c = g4_p13();
    let r = c.prop31_construct(17, DEFAULT_MAX_ATTEMPTS).unwrap();
    assert_eq!(r.l_class.degree(), 7);
    assert_eq!(r.slope_el, ratio(7, 3));
    assert_eq!(r.slope_en, int(2));
    assert_eq!(r.h0_n, 3);
    assert_eq!(c.prop31_construct(17, DEFAULT_MAX_ATTEMPTS).unwrap(), r);
    assert!(matches!(
        c.prop31_construct(17, 0),
        Err(Error::NoGeneralDivisor { attempts: 0, .. })
    ));
}

#[test]
fn witness_search_sorted_and_sound() {
    let c = g2_p13();
    let candidates = c.witness_candidates(3).unwrap();
    assert!(candidates
        .iter()
        .any(|b| c.class_equal(b, &c.hyperelliptic_divisor())));
    for l in generated_bundles(&c, 80, 8) {
        let s = c.witness_search_among(&l, &candidates, 3).unwrap();
        assert!(!s.higher_rank_quotients_checked);
        assert!(s.found.windows(2).all(|w| w[0].slope <= w[1].slope));
        for q in &s.found {
            assert_eq!(c.mult_map(&l, &q.quotient).unwrap(), q.mult_map);
        }
    }
}
