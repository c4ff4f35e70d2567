use crate::{base_codes, guard, ring, z2v_exhaustive};
use rkcodes::code::hermitian_selfdual_construct;
use rkcodes::{ComponentCodes, LinearCode};

fn components_of(c: &LinearCode) -> Vec<LinearCode> {
    c.decompose(guard()).unwrap().components().to_vec()
}

/// Component `V` of `C^H` is the Euclidean dual of component `complement(V)`.
fn check_hermitian_components(c: &LinearCode) {
    let parts = components_of(c);
    let herm = components_of(&c.hermitian_dual(guard()).unwrap());
    let full = parts.len() - 1;
    for (v, h) in herm.iter().enumerate() {
        assert_eq!(h, &parts[full ^ v].euclidean_dual(guard()).unwrap(), "{c}, position {v}");
    }
}

#[test]
fn hermitian_components_over_z2v() {
    for s in z2v_exhaustive() {
        check_hermitian_components(&s.code);
        let h = s.code.hermitian_dual(guard()).unwrap();
        assert_eq!(h.hermitian_dual(guard()).unwrap(), s.code);
    }
}

#[test]
fn hermitian_components_over_all_z4v_codes() {
    let r = ring(4, 1);
    for n in 1..=2 {
        let base = base_codes(4, n);
        assert_eq!(base.len(), if n == 1 { 3 } else { 15 });
        for a in &base {
            for b in &base {
                let c = ComponentCodes::new(r, vec![a.clone(), b.clone()])
                    .unwrap()
                    .compose(guard())
                    .unwrap();
                check_hermitian_components(&c);
                let herm_self_dual = c.is_hermitian_self_dual(guard()).unwrap();
                let b_is_a_dual = *b == a.euclidean_dual(guard()).unwrap();
                assert_eq!(herm_self_dual, b_is_a_dual, "{c}");
                let euclid_self_dual = c.is_self_dual(guard()).unwrap();
                let both = *a == a.euclidean_dual(guard()).unwrap() && *b == b.euclidean_dual(guard()).unwrap();
                assert_eq!(euclid_self_dual, both, "{c}");
            }
        }
    }
}

#[test]
fn hermitian_construction_for_two_generators() {
    let r = ring(3, 2);
    for i in 1..=2 {
        for n in 1..=2 {
            let c = hermitian_selfdual_construct(r, n, i, guard()).unwrap();
            assert!(c.is_hermitian_self_dual(guard()).unwrap());
            assert!(!c.is_self_dual(guard()).unwrap());
        }
    }
}
