//! Randomized algebraic invariants of the ring, the idempotent coordinates
//! and the automorphisms.

use proptest::prelude::*;
use rkcodes::automorphism::{apply, induced_map};
use rkcodes::gray::{psi, psi_inv, psi_vec, psi_vec_inv, Layout};
use rkcodes::{AutomorphismSpec, Permutation, RingSpec, RkElement, RkVector};

fn ring_strategy() -> impl Strategy<Value = RingSpec> {
    (2u32..=12, 0u32..=3).prop_map(|(m, k)| RingSpec::new(m, k).unwrap())
}

fn element(r: RingSpec) -> impl Strategy<Value = RkElement> {
    proptest::collection::vec(0..r.m(), r.width()).prop_map(move |c| r.element(&c).unwrap())
}

fn ring_and_elements(count: usize) -> impl Strategy<Value = (RingSpec, Vec<RkElement>)> {
    ring_strategy().prop_flat_map(move |r| (Just(r), proptest::collection::vec(element(r), count)))
}

fn automorphism(k: u32) -> impl Strategy<Value = AutomorphismSpec> {
    let perms: Vec<u32> = (1..=k).collect();
    (0usize..(1 << k), Just(perms).prop_shuffle())
        .prop_map(move |(flip, images)| AutomorphismSpec::new(flip, Permutation::from_one_based(&images).unwrap()).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms((r, xs) in ring_and_elements(3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a * &r.one(), a.clone());
        prop_assert!((a + &(-a)).is_zero());
        prop_assert_eq!(&(a - b) + b, a.clone());
    }

    #[test]
    fn psi_is_a_ring_isomorphism((r, xs) in ring_and_elements(2)) {
        let (a, b) = (&xs[0], &xs[1]);
        let m = r.m();
        let (pa, pb) = (psi(a), psi(b));
        let sum: Vec<u32> = pa.coords().iter().zip(pb.coords()).map(|(x, y)| (x + y) % m).collect();
        let prod: Vec<u32> = pa.coords().iter().zip(pb.coords()).map(|(x, y)| x * y % m).collect();
        prop_assert_eq!(psi(&(a + b)).coords().to_vec(), sum);
        prop_assert_eq!(psi(&(a * b)).coords().to_vec(), prod);
        prop_assert_eq!(&psi_inv(&pa), a);
        prop_assert_eq!(a.is_unit(), pa.coords().iter().all(|&x| gcd(x, m) == 1));
    }

    #[test]
    fn psi_vec_layouts_invert((r, xs) in ring_and_elements(4)) {
        let w = RkVector::new(r, xs).unwrap();
        for layout in [Layout::Interleaved, Layout::ComponentMajor] {
            let data = psi_vec(&w, layout);
            prop_assert_eq!(psi_vec_inv(r, w.len(), &data, layout).unwrap(), w.clone());
        }
    }

    #[test]
    fn automorphisms_are_ring_maps(
        (r, xs, theta) in ring_and_elements(2).prop_flat_map(|(r, xs)| (Just(r), Just(xs), automorphism(r.k())))
    ) {
        let (a, b) = (&xs[0], &xs[1]);
        prop_assert_eq!(apply(&theta, &(a + b)), &apply(&theta, a) + &apply(&theta, b));
        prop_assert_eq!(apply(&theta, &(a * b)), &apply(&theta, a) * &apply(&theta, b));
        prop_assert_eq!(apply(&theta, &r.one()), r.one());
        let ord = theta.order();
        let back = (0..ord).fold(a.clone(), |acc, _| apply(&theta, &acc));
        prop_assert_eq!(&back, a);
        let rho = induced_map(&theta, r).unwrap();
        prop_assert_eq!(psi(&apply(&theta, a)).coords().to_vec(), rho.apply(psi(a).coords()));
    }

    #[test]
    fn automorphism_composition(
        (r, xs, s, t) in ring_and_elements(1)
            .prop_flat_map(|(r, xs)| (Just(r), Just(xs), automorphism(r.k()), automorphism(r.k())))
    ) {
        let a = &xs[0];
        let composed = s.compose(&t);
        prop_assert_eq!(apply(&composed, a), apply(&s, &apply(&t, a)));
        let rho = induced_map(&composed, r).unwrap();
        let expected = induced_map(&s, r).unwrap().compose(&induced_map(&t, r).unwrap());
        prop_assert_eq!(rho, expected);
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
