mod common;

use common::{caps, commutative_semirings};
use ringoid_core::covering::Verdict;
use ringoid_core::ideal::radical;
use ringoid_core::quotient::{kasch_semilocal_report, quotient_report, total_quotient};
use ringoid_core::standard::{boolean, chain, integers_mod};
use ringoid_core::zerodiv::{few_zero_divisors, monoid_zd_check, zero_divisor_report};
use ringoid_core::{Cayley, ElemSet, FiniteSemimodule};

fn modules(s: &Cayley) -> Vec<FiniteSemimodule> {
    let mut out = vec![FiniteSemimodule::regular(s).unwrap(), FiniteSemimodule::zero_module(s).unwrap()];
    if s.size() <= 4 {
        out.push(FiniteSemimodule::power(s, 2, &caps()).unwrap());
    }
    out
}

/// `Z(M)` from the definition, without going through annihilators.
fn oracle_zset(m: &FiniteSemimodule) -> Vec<usize> {
    let s = m.semiring();
    (0..s.size()).filter(|&r| (0..m.msize()).any(|x| x != m.mzero() && m.act(r, x) == m.mzero())).collect()
}

#[test]
fn decomposition_and_very_few_on_corpus() {
    for s in commutative_semirings() {
        for m in modules(&s) {
            let r = zero_divisor_report(&m, &caps()).unwrap();
            assert_eq!(r.zset.to_vec(), oracle_zset(&m), "{}", s.name());
            let union =
                ElemSet::union_all(s.size(), r.radical_decomposition.iter().map(|a| a.ideal.members()));
            assert_eq!(union, r.zset);
            for a in &r.radical_decomposition {
                let ann = m.annihilator(&[a.x]).unwrap();
                assert_eq!(radical(&s, &ann).unwrap(), a.ideal);
            }
            assert!(r.very_few, "{}", s.name());
            assert!(r.ass_covers_zero_divisor_ideals, "{}", s.name());
        }
    }
}

#[test]
fn very_few_implies_few_for_regular_modules() {
    for s in commutative_semirings() {
        let r = zero_divisor_report(&FiniteSemimodule::regular(&s).unwrap(), &caps()).unwrap();
        let few = few_zero_divisors(&s, &caps()).unwrap();
        let ass_subtractive = r.ass.iter().all(|a| ringoid_core::ideal::is_subtractive(&s, &a.ideal).holds());
        if r.very_few && ass_subtractive {
            assert!(few.holds, "{}", s.name());
        }
    }
}

#[test]
fn chain_examples() {
    let t = chain(3);
    let m = FiniteSemimodule::regular(&t).unwrap();
    let r = zero_divisor_report(&m, &caps()).unwrap();
    assert_eq!(r.zset.to_vec(), vec![0, 1]);
    assert_eq!(r.ass[0].ideal.to_vec(), vec![0, 1]);
    assert_eq!(r.radical_decomposition[0].ideal.to_vec(), vec![0, 1]);
    let few = few_zero_divisors(&t, &caps()).unwrap();
    assert!(few.holds);
    assert_eq!(few.primes[0].to_vec(), vec![0, 1]);
}

#[test]
fn quotient_suite_on_corpus() {
    for s in commutative_semirings() {
        let r = quotient_report(&s, &caps()).unwrap();
        assert!(r.canonical_morphism && r.units_invertible.holds(), "{}", s.name());
        assert!(r.annihilator_extension.holds(), "{}", s.name());
        assert!(r.kasch.holds(), "{}: {:?}", s.name(), r.kasch);
        if r.few_zero_divisors {
            assert_eq!(r.maximal_are_extensions, Some(true), "{}", s.name());
            assert!(r.maximal_ideals.len() <= r.decomposition_primes.len());
        }
    }
}

#[test]
fn chain_quotient_is_isomorphic() {
    let t = chain(3);
    let q = total_quotient(&t, &caps()).unwrap();
    assert_eq!(q.units(), &[2]);
    assert_eq!(q.structure().add_table(), t.add_table());
    assert_eq!(q.structure().mul_table(), t.mul_table());
    let k = kasch_semilocal_report(&q, &caps()).unwrap();
    assert!(k.kasch && k.semilocal && k.very_few);
}

#[test]
fn entire_quotients_are_semifields() {
    for s in [boolean(), integers_mod(5), integers_mod(7)] {
        let q = total_quotient(&s, &caps()).unwrap();
        let qs = q.structure();
        let one = qs.one().unwrap();
        for x in qs.elements().filter(|&x| Some(x) != qs.zero()) {
            assert!(qs.elements().any(|y| qs.mul(x, y) == one));
        }
    }
}

#[test]
fn degree_zero_slice_matches_decomposition() {
    for s in commutative_semirings() {
        let m = FiniteSemimodule::regular(&s).unwrap();
        let r = monoid_zd_check(&m, 0, &caps()).unwrap();
        let zd = zero_divisor_report(&m, &caps()).unwrap();
        assert_eq!(r.superset.violations, 0);
        assert_eq!(r.subset.violations, 0, "{}", s.name());
        assert_eq!(r.subset.witnessed, zd.zset.len(), "{}", s.name());
        assert_ne!(r.verdict, Verdict::Fails);
    }
}

#[test]
fn chain_degree_two_slice() {
    let t = chain(3);
    let r = monoid_zd_check(&FiniteSemimodule::regular(&t).unwrap(), 2, &caps()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert_eq!(r.superset.checked, r.superset.passed);
    assert_eq!(r.superset.checked, 8);
    assert_eq!(r.subset.violations, 0);
    assert_eq!(r.subset.witnessed + r.subset.inconclusive, 8);
}
