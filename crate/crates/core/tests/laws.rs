mod common;

use proptest::prelude::*;
use ringoid_core::constructions::{
    austere_extension, direct_product, endomorphism_ringoid, hemialgebra, hemialgebra_scale,
    StructureConstants,
};
use ringoid_core::ideal::{enumerate_ideals, is_subtractive, IdealSet};
use ringoid_core::newman::newman_check;
use ringoid_core::standard::{
    boolean, boolean_lattice, boolean_lattice_complement, chain, integers_mod, saturating,
};
use ringoid_core::{check_laws, Caps, Cayley, Check, Law, Magma, Side};

fn first3(n: usize, ok: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !ok(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

fn first2(n: usize, ok: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    first3(n, |a, b, _| ok(a, b)).map(|w| w[..2].to_vec())
}

fn table(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(0..n, n), n)
}

fn structure() -> impl Strategy<Value = Cayley> {
    (1usize..=4).prop_flat_map(|n| {
        (table(n), table(n), prop::option::of(0..n), prop::option::of(0..n))
            .prop_map(move |(a, m, z, o)| Cayley::from_tables("random", &a, &m, z, o).unwrap())
    })
}

proptest! {
    #[test]
    fn law_witnesses_are_least(s in structure()) {
        let r = check_laws(&s);
        let n = s.size();
        let expect = |w: Option<Vec<usize>>| w.map_or(Check::Holds, Check::Fails);
        prop_assert_eq!(&r.add_associative, &expect(first3(n, |a, b, c| s.add(s.add(a, b), c) == s.add(a, s.add(b, c)))));
        prop_assert_eq!(&r.mul_associative, &expect(first3(n, |a, b, c| s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)))));
        prop_assert_eq!(&r.left_distributive, &expect(first3(n, |a, b, c| s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c)))));
        prop_assert_eq!(&r.right_distributive, &expect(first3(n, |a, b, c| s.mul(s.add(a, b), c) == s.add(s.mul(a, c), s.mul(b, c)))));
        prop_assert_eq!(&r.add_commutative, &expect(first2(n, |a, b| s.add(a, b) == s.add(b, a))));
        prop_assert_eq!(&r.mul_commutative, &expect(first2(n, |a, b| s.mul(a, b) == s.mul(b, a))));
        let medial = first2(n * n, |p, q| {
            let (a, b, c, d) = (p / n, p % n, q / n, q % n);
            s.add(s.add(a, b), s.add(c, d)) == s.add(s.add(a, c), s.add(b, d))
        });
        prop_assert_eq!(r.add_medial.holds(), medial.is_none());
        if let Some(z) = s.zero() {
            let neutral = (0..n).all(|x| s.add(z, x) == x && s.add(x, z) == x);
            prop_assert_eq!(r.has_zero.holds(), neutral);
        } else {
            prop_assert_eq!(&r.has_zero, &Check::Fails(vec![]));
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn affine_medial_magmas_give_ringoids(a in 0usize..4, b in 0usize..4, c in 0usize..4, klein in any::<bool>()) {
        // x*y = a x + b y + c over Z/4 or Z/2 x Z/2, always medial
        let op = |x: usize, y: usize| {
            if klein {
                let lin = |k: usize, v: usize| if k % 2 == 1 { v } else { 0 };
                lin(a, x) ^ lin(b, y) ^ c
            } else {
                (a * x + b * y + c) % 4
            }
        };
        let m = Magma::from_fn(4, op).unwrap();
        prop_assert!(m.medial().holds());
        let e = endomorphism_ringoid(&m, &Caps::default()).unwrap();
        let r = e.laws();
        prop_assert!(r.left_distributive.holds() && r.right_distributive.holds());
        prop_assert!(r.mul_associative.holds() && r.add_medial.holds());
    }

    #[test]
    fn hemialgebra_scalars_commute(gamma in prop::collection::vec(0usize..2, 8)) {
        let c = StructureConstants::new(boolean(), 2, gamma).unwrap();
        let h = hemialgebra(&c, &Caps::default()).unwrap();
        for alpha in 0..2 {
            for a in h.elements() {
                for b in h.elements() {
                    let lhs = h.mul(hemialgebra_scale(&c, alpha, a), b);
                    prop_assert_eq!(lhs, h.mul(a, hemialgebra_scale(&c, alpha, b)));
                    prop_assert_eq!(lhs, hemialgebra_scale(&c, alpha, h.mul(a, b)));
                }
            }
        }
    }
}

#[test]
fn medial_magmas_up_to_three_give_ringoids() {
    let caps = Caps::default();
    let mut medial = 0;
    for n in 1..=3usize {
        let cells = n * n;
        for code in 0..n.pow(cells as u32) {
            let m = Magma::from_fn(n, |x, y| code / n.pow((x * n + y) as u32) % n).unwrap();
            if !m.medial().holds() {
                continue;
            }
            medial += 1;
            let r = endomorphism_ringoid(&m, &caps).unwrap().laws().clone();
            assert!(
                r.left_distributive.holds()
                    && r.right_distributive.holds()
                    && r.mul_associative.holds()
                    && r.add_medial.holds(),
                "{:?}",
                m.table()
            );
        }
    }
    assert!(medial > 10);
}

#[test]
fn cross_product_is_not_associative() {
    let h = hemialgebra(&StructureConstants::boolean_cross_product(), &Caps::default()).unwrap();
    let (i, j, k) = (1, 2, 4);
    assert_eq!(h.mul(i, j), k);
    assert_eq!(h.mul(h.mul(i, j), j), i);
    assert_eq!(h.mul(i, h.mul(j, j)), 0);
    assert_eq!(h.laws().mul_associative, Check::Fails(vec![1, 1, 2]));
    assert!(h.laws().is_na_hemiring());
    assert!(!h.laws().holds(Law::HasOne));
}

#[test]
fn austere_extensions() {
    let caps = Caps::default();
    for n in 2..=6 {
        let s = austere_extension(&integers_mod(n)).unwrap();
        let z = s.zero().unwrap();
        assert!(s.laws().zerosumfree.holds() && s.laws().entire.holds());
        for i in enumerate_ideals(&s, Side::Left, &caps).unwrap() {
            if i.len() > 1 && i.is_proper() {
                assert!(!is_subtractive(&s, &i).holds(), "Z/{n} {:?}", i.to_vec());
            } else if i.len() == 1 {
                assert_eq!(i.to_vec(), vec![z]);
            }
        }
    }
    let s = austere_extension(&integers_mod(6)).unwrap();
    let m1 = IdealSet::new(&s, Side::TwoSided, ringoid_core::ElemSet::from_iter(7, [0, 2, 4, 6])).unwrap();
    assert_eq!(is_subtractive(&s, &m1), Check::Fails(vec![0, 1]));
    assert!(s.add(2, 3) == 0 && m1.contains(0) && m1.contains(2) && !m1.contains(3));
}

#[test]
fn newman_consequences() {
    for atoms in 1..=3 {
        let s = boolean_lattice(atoms);
        let r = newman_check(&s, &boolean_lattice_complement(atoms)).unwrap();
        assert!(r.axioms_hold());
        assert!(r.derived.unwrap().all_hold());
    }
    // every two-element structure and complementation
    for code in 0..256usize {
        let add = |x: usize, y: usize| code >> (x * 2 + y) & 1;
        let mul = |x: usize, y: usize| code >> (4 + x * 2 + y) & 1;
        for (zero, one) in [(0, 1), (1, 0)] {
            let s = Cayley::from_fn("two", 2, add, mul, Some(zero), Some(one)).unwrap();
            for comp in 0..4usize {
                let c = vec![comp & 1, comp >> 1];
                let r = newman_check(&s, &c).unwrap();
                if r.axioms_hold() {
                    assert!(r.derived.expect("0 != 1").all_hold());
                }
            }
        }
    }
}

#[test]
fn products_conjoin_equational_flags() {
    let caps = Caps::default();
    let small = [boolean(), chain(3), saturating(3), integers_mod(3), integers_mod(4)];
    for a in &small {
        for b in &small {
            let p = direct_product(&[a.clone(), b.clone()], &caps).unwrap();
            for law in Law::EQUATIONAL {
                assert_eq!(
                    p.laws().holds(law),
                    a.laws().holds(law) && b.laws().holds(law),
                    "{} x {} {law}",
                    a.name(),
                    b.name()
                );
            }
        }
    }
}
