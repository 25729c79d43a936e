mod common;

use common::{caps, commutative_semirings, semirings, subsets_up_to};
use ringoid_core::constructions::austere_extension;
use ringoid_core::covering::all_ideals_subtractive;
use ringoid_core::ideal::{enumerate_ideals, generate_ideal, principal, radical};
use ringoid_core::spectrum::{
    compactly_packed_battery, principal_open_refinement, spec_of, vanishing_sets, zariski_axioms,
};
use ringoid_core::standard::{boolean_lattice, chain, integers_mod, saturating};
use ringoid_core::{Cayley, ElemSet, IdealSet, Side};

fn primes_by_definition(s: &Cayley) -> Vec<IdealSet> {
    let principals: Vec<ElemSet> = s.elements().map(|x| principal(s, x).members().clone()).collect();
    enumerate_ideals(s, Side::TwoSided, &caps())
        .unwrap()
        .into_iter()
        .filter(|p| {
            p.is_proper()
                && s.elements().all(|a| {
                    s.elements().all(|b| {
                        p.contains(a)
                            || p.contains(b)
                            || principals[a]
                                .iter()
                                .any(|x| principals[b].iter().any(|y| !p.contains(s.mul(x, y))))
                    })
                })
        })
        .collect()
}

#[test]
fn spectrum_matches_definition() {
    for s in semirings() {
        assert_eq!(spec_of(&s, &caps()).unwrap(), primes_by_definition(&s), "{}", s.name());
    }
}

#[test]
fn battery_conditions_agree() {
    for s in commutative_semirings() {
        let r = compactly_packed_battery(&s, &caps()).unwrap();
        assert!(r.conditions.agree(), "{}: {:?}", s.name(), r.conditions);
        if r.weak_gaussian {
            assert!(r.compactly_packed, "{}", s.name());
        }
        assert!(r.radical_as_prime_intersection.holds());
        assert_eq!(r.counterexample.is_none(), r.compactly_packed);
    }
}

#[test]
fn packing_by_definition() {
    for s in commutative_semirings() {
        let r = compactly_packed_battery(&s, &caps()).unwrap();
        let spec = spec_of(&s, &caps()).unwrap();
        let ideals = enumerate_ideals(&s, Side::TwoSided, &caps()).unwrap();
        let mut packed = true;
        for family in subsets_up_to(&spec, spec.len()) {
            let u = ElemSet::union_all(s.size(), family.iter().map(IdealSet::members));
            for i in ideals.iter().filter(|i| i.members().is_subset(&u)) {
                packed &= family.iter().any(|p| i.is_subset(p));
            }
        }
        assert_eq!(packed, r.compactly_packed, "{}", s.name());
    }
}

#[test]
fn principal_radicals_are_prime_intersections() {
    for s in commutative_semirings() {
        let spec = spec_of(&s, &caps()).unwrap();
        for x in s.elements() {
            let meet = ElemSet::intersection_all(
                s.size(),
                spec.iter().filter(|p| p.contains(x)).map(IdealSet::members),
            );
            assert_eq!(*radical(&s, &principal(&s, x)).unwrap().members(), meet, "{}", s.name());
        }
    }
}

#[test]
fn radical_principal_map_picks_least() {
    for s in commutative_semirings() {
        let r = compactly_packed_battery(&s, &caps()).unwrap();
        for (p, x) in r.primes.iter().zip(&r.radical_principal_map) {
            let generators: Vec<usize> =
                s.elements().filter(|&x| radical(&s, &principal(&s, x)).unwrap() == *p).collect();
            assert_eq!(*x, generators.first().copied());
        }
    }
}

#[test]
fn known_packing_verdicts() {
    for s in [chain(3), boolean_lattice(2)] {
        assert!(compactly_packed_battery(&s, &caps()).unwrap().compactly_packed);
    }
    let a = austere_extension(&integers_mod(6)).unwrap();
    let r = compactly_packed_battery(&a, &caps()).unwrap();
    assert!(!r.compactly_packed && !r.weak_gaussian);
    let c = r.counterexample.unwrap();
    assert!(c.family.iter().all(|p| !c.ideal.is_subset(p)));
    assert_eq!(c.ideal.to_vec(), vec![0, 2, 3, 4, 6]);
    // N_k: computed, not asserted
    for k in 2..=5 {
        let r = compactly_packed_battery(&saturating(k), &caps()).unwrap();
        assert!(r.conditions.agree());
    }
}

#[test]
fn zariski_closed_sets() {
    for s in semirings() {
        assert!(zariski_axioms(&s, &caps()).unwrap().holds(), "{}", s.name());
    }
}

#[test]
fn principal_opens_refine_on_subtractive_semirings() {
    for s in commutative_semirings() {
        if !all_ideals_subtractive(&s, &caps()).unwrap().holds() {
            continue;
        }
        let spec = spec_of(&s, &caps()).unwrap();
        for i in enumerate_ideals(&s, Side::TwoSided, &caps()).unwrap() {
            let d = vanishing_sets(&spec, &i).d;
            for points in subsets_up_to(&d, d.len()) {
                let x = principal_open_refinement(&s, &points, &i, &caps()).unwrap();
                let dx = vanishing_sets(&spec, &generate_ideal(&s, &[x], Side::TwoSided).unwrap()).d;
                assert!(i.contains(x));
                assert!(points.iter().all(|p| dx.contains(p)));
                assert!(dx.iter().all(|p| d.contains(p)));
            }
        }
    }
}
