use proptest::prelude::*;
use ringoid_core::{Caps, Cayley};
use ringoid_workbench::corpus::{corpus, find};
use ringoid_workbench::job::IdealRef;
use ringoid_workbench::suites::{verify_all, SuiteSettings};
use ringoid_workbench::WorkbenchError;

fn settings() -> SuiteSettings {
    SuiteSettings { caps: Caps::default(), seed: None, degree_cap: 2 }
}

fn entire_by_definition(s: &Cayley) -> bool {
    let z = s.zero().unwrap();
    s.elements().all(|a| s.elements().all(|b| s.mul(a, b) != z || a == z || b == z))
}

#[test]
fn required_entries_ship() {
    let entries = corpus(&Caps::default()).unwrap();
    for name in [
        "boolean",
        "chain-3",
        "n3",
        "b-cross-product",
        "austere-z6",
        "f2xy",
        "b-squared",
        "boolean-lattice-4",
        "b-z2",
    ] {
        find(&entries, name).unwrap();
    }
    let names: Vec<&str> = entries.iter().map(|e| e.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(matches!(find(&entries, "nope"), Err(WorkbenchError::UnknownStructure(_))));
}

#[test]
fn claims_and_entire_flags_hold() {
    for e in corpus(&Caps::default()).unwrap() {
        for &law in &e.claims {
            assert!(e.structure.laws().holds(law), "{}: {law}", e.name);
        }
        if e.structure.zero().is_some() {
            assert_eq!(entire_by_definition(&e.structure), e.flags.entire, "{}", e.name);
        }
    }
}

#[test]
fn austere_ideals_are_predefined() {
    let entries = corpus(&Caps::default()).unwrap();
    let e = find(&entries, "austere-z6").unwrap();
    let get = |n: &str| e.named_ideal(n).unwrap().unwrap().to_vec();
    assert_eq!(get("I"), vec![0, 2, 3, 4, 6]);
    assert_eq!(get("M1"), vec![0, 2, 4, 6]);
    assert_eq!(get("M2"), vec![0, 3, 6]);
    assert!(e.named_ideal("M3").is_none());
    assert_eq!(find(&entries, "chain-3").unwrap().flags.packed, Some(true));
}

#[test]
fn empty_scope_is_empty() {
    let v = verify_all(Some(&[]), &settings()).unwrap();
    assert!(v.entries.is_empty());
    assert_eq!(v.tallies().checks_run, 0);
}

#[test]
fn austere_scope_reproduces_the_counterexample() {
    let v = verify_all(Some(&["austere-z6".to_string()]), &settings()).unwrap();
    let golden = v.suite("austere-z6", "golden").unwrap();
    assert_eq!(golden.tallies.failed, 0);
    assert_eq!(golden.tallies.passed, golden.tallies.checks_run);
    assert!(golden.tallies.checks_run >= 9);
    assert_eq!(v.tallies().failed, 0);
}

#[test]
fn unknown_scope_is_an_input_error() {
    let err = verify_all(Some(&["z7".to_string()]), &settings()).unwrap_err();
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn tight_caps_skip_with_notice() {
    let caps = Caps { ideal_enumeration: 4, ..Caps::default() };
    let v = verify_all(Some(&["z6".to_string()]), &SuiteSettings { caps, ..settings() }).unwrap();
    let skipped: Vec<_> = v.suites_named("prime-criteria").filter(|(_, s)| s.skipped.is_some()).collect();
    assert_eq!(skipped.len(), 1);
    assert_eq!(v.tallies().failed, 0);
}

fn names() -> Vec<String> {
    corpus(&Caps::default()).unwrap().iter().map(|e| e.name.to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn reports_are_ordered_and_repeatable(picks in proptest::sample::subsequence(names(), 0..4), reverse: bool) {
        let mut scope = picks.clone();
        if reverse {
            scope.reverse();
        }
        let a = verify_all(Some(&scope), &settings()).unwrap();
        let b = verify_all(Some(&picks), &settings()).unwrap();
        prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let order: Vec<&str> = a.entries.iter().map(|e| e.name).collect();
        let mut sorted = order.clone();
        sorted.sort();
        prop_assert_eq!(order, sorted);
    }

    #[test]
    fn generator_lists_parse(gens in proptest::collection::vec(0usize..50, 0..5)) {
        let text = gens.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        prop_assert_eq!(IdealRef::parse(&text), IdealRef::Generators(gens));
    }
}

#[test]
fn names_parse_as_names() {
    assert_eq!(IdealRef::parse("x+y"), IdealRef::Named("x+y".into()));
    assert_eq!(IdealRef::parse("M1"), IdealRef::Named("M1".into()));
}
