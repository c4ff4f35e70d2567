use crate::{divisors, guard, ring, z2v1v2_random, z2v_exhaustive, z4v_random};
use proptest::prelude::*;
use rkcodes::cyclic::{
    is_quasi_cyclic, is_quasi_skew_cyclic, phi_chain_quasicyclic_check, sigma_d, skew_shift, ShiftSpec,
    SkewShiftSpec,
};
use rkcodes::weights::{
    cwe, hamming_we, macwilliams_hamming, swe, verify_swe_macwilliams, UnitClasses, UnitGroup,
};
use rkcodes::{AutomorphismSpec, LinearCode, PhiSpec, RingSpec, RkVector};

#[test]
fn hamming_transform_is_an_involution() {
    for s in z4v_random().into_iter().chain(z2v1v2_random()) {
        let c = &s.code;
        let q = c.ring().cardinality().unwrap();
        let dual = macwilliams_hamming(&hamming_we(c), c.size() as u128, q).unwrap();
        let back = macwilliams_hamming(&dual, dual.total(), q).unwrap();
        assert_eq!(back, hamming_we(c), "{}", s.label);
    }
}

#[test]
fn enumerators_collapse_consistently() {
    for s in z2v_exhaustive().into_iter().chain(z4v_random()) {
        let c = &s.code;
        let complete = cwe(c, guard()).unwrap();
        assert_eq!(complete.total() as usize, c.size());
        // Dropping the zero symbol count recovers the Hamming enumerator.
        let n = c.len() as u32;
        let mut from_cwe = vec![0u128; c.len() + 1];
        for (comp, &count) in complete.counts() {
            from_cwe[(n - comp[0]) as usize] += count as u128;
        }
        assert_eq!(from_cwe, hamming_we(c).coeffs());
    }
}

#[test]
fn swe_for_intermediate_groups() {
    // {1, 3} and {1, 1 + 2v} inside the units of Z_4[v].
    let r = ring(4, 1);
    let groups = [
        vec![r.one(), r.constant(3)],
        vec![r.one(), r.element(&[1, 2]).unwrap()],
    ];
    for members in groups {
        let g = UnitGroup::new(r, members).unwrap();
        let classes = UnitClasses::new(&g, guard()).unwrap();
        assert!(classes.len() < 16);
        for s in z4v_random().iter().take(15) {
            assert!(verify_swe_macwilliams(&s.code, &g, guard()).unwrap(), "{}", s.label);
            assert_eq!(swe(&s.code, &classes).total() as usize, s.code.size());
        }
    }
}

#[test]
fn quasi_cyclic_definitions_agree() {
    // For linear codes sigma_d(C) = C and T_id^d(C) in C coincide when d = n / d'
    // blocks: both mean closure under the same bijection.
    for s in z2v_exhaustive().into_iter().chain(z4v_random()) {
        let c = &s.code;
        let n = c.len();
        let id = AutomorphismSpec::identity(c.ring().k());
        let cyclic = is_quasi_cyclic(c, 1).unwrap().holds();
        let skew = is_quasi_skew_cyclic(c, &SkewShiftSpec::new(n, 1, id).unwrap()).unwrap().holds();
        assert_eq!(cyclic, skew, "{}", s.label);
        assert!(is_quasi_cyclic(c, n).unwrap().holds());
    }
}

#[test]
fn phi_chain_images_of_cyclic_codes() {
    let r = ring(2, 2);
    let r1 = ring(2, 1);
    let z2 = r.base();
    let top = PhiSpec::new(2, vec![r1.one(), r1.var(1)], vec![r1.one(), r1.one()]).unwrap();
    let bottom = PhiSpec::new(1, vec![z2.one()], vec![z2.one()]).unwrap();
    for s in z2v1v2_random() {
        let c = &s.code;
        for d in divisors(c.len()) {
            let direct = is_quasi_cyclic(c, d).unwrap().holds();
            let chain = phi_chain_quasicyclic_check(c, &[top.clone(), bottom.clone()], d, guard())
                .unwrap()
                .holds();
            assert_eq!(direct, chain, "{} d = {d}", s.label);
        }
    }
}

fn word(r: RingSpec, n: usize) -> impl Strategy<Value = RkVector> {
    let q = r.cardinality().unwrap();
    (0..q.pow(n as u32)).prop_map(move |i| RkVector::from_index(r, n, i, q))
}

proptest! {
    #[test]
    fn sigma_order_divides_block_length(w in word(RingSpec::new(4, 1).unwrap(), 6), d in prop::sample::select(vec![1usize, 2, 3, 6])) {
        let spec = ShiftSpec::new(6, d).unwrap();
        let back = (0..spec.block_len()).fold(w.clone(), |acc, _| sigma_d(spec, &acc).unwrap());
        prop_assert_eq!(back, w);
    }

    #[test]
    fn skew_shift_full_turn(w in word(RingSpec::new(2, 2).unwrap(), 4), flip in 0usize..4, swap in any::<bool>()) {
        let perm = if swap { rkcodes::Permutation::swap(2, 1, 2).unwrap() } else { rkcodes::Permutation::identity(2) };
        let theta = AutomorphismSpec::new(flip, perm).unwrap();
        let turns = 4 * theta.order();
        let spec = SkewShiftSpec::new(4, 4, theta).unwrap();
        let back = (0..turns / 4).fold(w.clone(), |acc, _| skew_shift(&spec, &acc).unwrap());
        prop_assert_eq!(back, w);
    }

    #[test]
    fn span_is_closed_and_minimal(seed in word(RingSpec::new(4, 1).unwrap(), 2)) {
        let r = seed.ring();
        let c = LinearCode::span(r, 2, vec![seed.clone()], guard()).unwrap();
        for a in c.codewords() {
            for b in c.codewords() {
                prop_assert!(c.contains(&(a + b)));
            }
        }
        let multiples: std::collections::BTreeSet<RkVector> =
            r.elements(guard()).unwrap().iter().map(|x| seed.scale(x)).collect();
        prop_assert_eq!(c.size(), multiples.len());
    }
}
