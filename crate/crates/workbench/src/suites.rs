//! Theorem suites run by `verify-all`, one result per corpus entry and suite.

use rayon::prelude::*;
use ringoid_core::covering::{
    all_ideals_subtractive, avoidance_witness_shaped, mccoy_exponent, semiring_avoidance, Covering, SumShape,
    Verdict,
};
use ringoid_core::ideal::{enumerate_ideals, ideal_power, is_prime, is_subtractive, prime_criteria};
use ringoid_core::quotient::quotient_report;
use ringoid_core::spectrum::{compactly_packed_battery, zariski_axioms};
use ringoid_core::zerodiv::{monoid_zd_check, zero_divisor_report};
use ringoid_core::{Caps, Cayley, ElemSet, Error, FiniteSemimodule, IdealSet, Law, Side};
use serde::Serialize;

use crate::corpus::{corpus, find, CorpusEntry};
use crate::error::Result;
use crate::report::Tallies;

const MAX_FAILURES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: &'static str,
    #[serde(flatten)]
    pub tallies: Tallies,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryResult {
    pub name: &'static str,
    pub source: &'static str,
    pub suites: Vec<SuiteResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyAll {
    pub scope: Vec<String>,
    pub caps: Caps,
    pub degree_cap: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub entries: Vec<EntryResult>,
}

impl VerifyAll {
    pub fn tallies(&self) -> Tallies {
        let mut t = Tallies::default();
        for s in self.entries.iter().flat_map(|e| &e.suites) {
            t.absorb(&s.tallies);
        }
        t
    }

    pub fn suite(&self, entry: &str, suite: &str) -> Option<&SuiteResult> {
        self.entries.iter().find(|e| e.name == entry)?.suites.iter().find(|s| s.suite == suite)
    }

    pub fn suites_named<'a>(&'a self, suite: &'a str) -> impl Iterator<Item = (&'a str, &'a SuiteResult)> {
        self.entries
            .iter()
            .flat_map(move |e| e.suites.iter().filter(move |s| s.suite == suite).map(move |s| (e.name, s)))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteSettings {
    pub caps: Caps,
    pub seed: Option<u64>,
    pub degree_cap: usize,
}

struct Suite {
    result: SuiteResult,
}

impl Suite {
    fn new(suite: &'static str) -> Self {
        Self {
            result: SuiteResult { suite, tallies: Tallies::default(), failures: Vec::new(), skipped: None },
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        let t = &mut self.result.tallies;
        t.checks_run += 1;
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
            if self.result.failures.len() < MAX_FAILURES {
                self.result.failures.push(what());
            }
        }
    }

    fn unmet(&mut self) {
        self.result.tallies.checks_run += 1;
        self.result.tallies.hypotheses_unmet += 1;
    }

    fn finish(mut self, outcome: ringoid_core::Result<()>) -> SuiteResult {
        match outcome {
            Ok(()) => {}
            Err(Error::CapExceeded { what, size, cap }) => {
                self.result.skipped = Some(format!("{what} would have {size} elements, cap {cap}"));
            }
            Err(e) => self.check(false, || e.to_string()),
        }
        self.result
    }
}

type SuiteBody<'a> = dyn FnOnce(&mut Suite) -> ringoid_core::Result<()> + 'a;

fn run(name: &'static str, body: impl FnOnce(&mut Suite) -> ringoid_core::Result<()>) -> SuiteResult {
    let mut suite = Suite::new(name);
    let outcome = body(&mut suite);
    suite.finish(outcome)
}

fn subsets_up_to<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go<T: Clone>(items: &[T], start: usize, k: usize, current: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == k {
            return;
        }
        for i in start..items.len() {
            current.push(items[i].clone());
            go(items, i + 1, k, current, out);
            current.pop();
        }
    }
    go(items, 0, k, &mut current, &mut out);
    out
}

fn union(s: &Cayley, sets: &[IdealSet]) -> ElemSet {
    ElemSet::union_all(s.size(), sets.iter().map(IdealSet::members))
}

fn prime(s: &Cayley, p: &IdealSet) -> ringoid_core::Result<bool> {
    Ok(p.is_proper() && is_prime(s, p)?.holds())
}

fn laws_suite(e: &CorpusEntry) -> SuiteResult {
    run("laws", |suite| {
        let laws = e.structure.laws();
        for &law in &e.claims {
            suite.check(laws.holds(law), || format!("claim {law} fails: {:?}", laws.get(law)));
        }
        suite.check(laws.is_ringoid(), || "not a ringoid".into());
        let entire = laws.holds(Law::Entire);
        suite.check(entire == e.flags.entire, || {
            format!("documented entire={} but computed {entire}", e.flags.entire)
        });
        Ok(())
    })
}

fn ideals_suite(s: &Cayley, caps: &Caps) -> SuiteResult {
    run("prime-criteria", |suite| {
        for p in enumerate_ideals(s, Side::TwoSided, caps)?.iter().filter(|p| p.is_proper()) {
            let c = prime_criteria(s, p)?;
            match c.element_sandwich {
                Some(_) => suite.check(c.agree(), || format!("criteria disagree on {}", p.display(s))),
                None => suite.unmet(),
            }
        }
        Ok(())
    })
}

fn ringoid_avoidance_suite(s: &Cayley, settings: &SuiteSettings) -> SuiteResult {
    run("ringoid-avoidance", |suite| {
        let ideals = enumerate_ideals(s, Side::TwoSided, &settings.caps)?;
        let mut primes = Vec::new();
        for p in &ideals {
            if is_subtractive(s, p).holds() && prime(s, p)? {
                primes.push(p.clone());
            }
        }
        let shape = settings.seed.map_or(SumShape::LeftComb, SumShape::Seeded);
        for family in subsets_up_to(&primes, 4) {
            for i in ideals.iter().filter(|i| !family.iter().any(|p| i.is_subset(p))) {
                let r = avoidance_witness_shaped(s, i, &family, shape)?;
                let good = |w: Option<usize>| {
                    w.is_some_and(|v| i.contains(v) && family.iter().all(|p| !p.contains(v)))
                };
                suite.check(
                    r.verdict == Verdict::Holds && good(r.witness) && good(r.constructive_witness),
                    || format!("I={} family of {}: {r:?}", i.display(s), family.len()),
                );
            }
        }
        Ok(())
    })
}

fn semiring_avoidance_suite(s: &Cayley, caps: &Caps) -> SuiteResult {
    run("semiring-avoidance", |suite| {
        let all = enumerate_ideals(s, Side::TwoSided, caps)?;
        let subtractive: Vec<IdealSet> =
            all.iter().filter(|i| is_subtractive(s, i).holds()).cloned().collect();
        for covers in subsets_up_to(&subtractive, 4) {
            let mut primes = 0;
            for c in &covers {
                primes += usize::from(prime(s, c)?);
            }
            if primes + 2 < covers.len() {
                continue;
            }
            let u = union(s, &covers);
            for i in all.iter().filter(|i| i.members().is_subset(&u)) {
                let r = semiring_avoidance(s, i, &covers)?;
                let ok = r.verdict == Verdict::Holds && r.index.is_some_and(|k| i.is_subset(&covers[k]));
                suite.check(ok, || format!("I={}: {r:?}", i.display(s)));
            }
        }
        Ok(())
    })
}

fn mccoy_suite(s: &Cayley, caps: &Caps) -> SuiteResult {
    run("mccoy", |suite| {
        if !all_ideals_subtractive(s, caps)?.holds() {
            suite.unmet();
            return Ok(());
        }
        let all = enumerate_ideals(s, Side::TwoSided, caps)?;
        for covers in subsets_up_to(&all, 4).into_iter().filter(|c| c.len() >= 3) {
            let u = union(s, &covers);
            for i in all.iter().filter(|i| i.members().is_subset(&u)) {
                let c = Covering::new(i.clone(), covers.clone())?;
                if !c.is_efficient() {
                    continue;
                }
                suite.check(c.intersection_lemma().holds(), || {
                    format!("intersection lemma fails for I={}", i.display(s))
                });
                let r = mccoy_exponent(s, &c, caps)?;
                let meet = ElemSet::intersection_all(s.size(), covers.iter().map(IdealSet::members));
                let ok = r
                    .exponent
                    .is_some_and(|k| k <= all.len() && ideal_power(s, i, k).members().is_subset(&meet));
                suite.check(ok, || format!("I={}: {r:?}", i.display(s)));
            }
        }
        Ok(())
    })
}

fn spectrum_suite(e: &CorpusEntry, caps: &Caps) -> SuiteResult {
    let s = &e.structure;
    run("spectrum", |suite| {
        let r = compactly_packed_battery(s, caps)?;
        suite.check(r.conditions.agree(), || format!("packing conditions disagree: {:?}", r.conditions));
        if let Some(packed) = e.flags.packed {
            suite.check(packed == r.compactly_packed, || {
                format!("documented packed={packed} but computed {}", r.compactly_packed)
            });
        }
        if let Some(wg) = e.flags.weak_gaussian {
            suite.check(wg == r.weak_gaussian, || {
                format!("documented weak_gaussian={wg} but computed {}", r.weak_gaussian)
            });
        }
        suite.check(r.radical_as_prime_intersection.holds(), || {
            format!("radical is not the meet of primes: {:?}", r.radical_as_prime_intersection)
        });
        let z = zariski_axioms(s, caps)?;
        suite.check(z.holds(), || format!("Zariski axioms: {z:?}"));
        Ok(())
    })
}

fn oracle_zero_divisors(m: &FiniteSemimodule) -> Vec<usize> {
    let s = m.semiring();
    s.elements().filter(|&r| m.nonzero_elements().any(|x| m.act(r, x) == m.mzero())).collect()
}

fn zero_divisor_suite(modules: &[FiniteSemimodule], caps: &Caps) -> SuiteResult {
    run("zero-divisors", |suite| {
        for (k, m) in modules.iter().enumerate() {
            let r = zero_divisor_report(m, caps)?;
            let s = m.semiring();
            let oracle = oracle_zero_divisors(m);
            suite.check(r.zset.to_vec() == oracle, || format!("module {k}: Z(M) differs from definition"));
            let decomposed =
                ElemSet::union_all(s.size(), r.radical_decomposition.iter().map(|a| a.ideal.members()));
            suite.check(decomposed.to_vec() == oracle, || format!("module {k}: union of radicals differs"));
            suite.check(r.very_few, || format!("module {k}: not very few zero divisors"));
            suite.check(r.ass_covers_zero_divisor_ideals, || {
                format!("module {k}: ideal in Z(M) outside Ass: {:?}", r.ass_cover_witness)
            });
        }
        Ok(())
    })
}

fn quotient_suite(s: &Cayley, caps: &Caps) -> SuiteResult {
    run("quotient", |suite| {
        let r = quotient_report(s, caps)?;
        suite.check(r.canonical_morphism, || "canonical map is not a morphism".into());
        suite.check(r.units_invertible.holds(), || format!("non-invertible unit {:?}", r.units_invertible));
        match r.maximal_are_extensions {
            Some(ok) => suite.check(ok, || "maximal ideals are not the extended primes".into()),
            None => suite.unmet(),
        }
        suite.check(r.annihilator_extension.holds(), || {
            format!("Ann(x) does not extend to Ann(x/1): {:?}", r.annihilator_extension)
        });
        suite.check(r.kasch.kasch, || "Q(S) is not Kasch".into());
        suite.check(r.kasch.semilocal, || "Q(S) is not semi-local".into());
        suite.check(r.kasch.very_few, || "Q(S) lacks very few zero divisors".into());
        Ok(())
    })
}

fn slice_suite(modules: &[(usize, &FiniteSemimodule)], caps: &Caps) -> SuiteResult {
    run("monoid-slices", |suite| {
        for &(d, m) in modules {
            let r = monoid_zd_check(m, d, caps)?;
            match r.verdict {
                Verdict::HypothesesUnmet => suite.unmet(),
                _ => suite.check(
                    r.verdict == Verdict::Holds
                        && r.superset.passed == r.superset.checked
                        && r.superset.violations == 0
                        && r.subset.violations == 0,
                    || format!("d={d}: {r:?}"),
                ),
            }
        }
        Ok(())
    })
}

fn golden_suite(e: &CorpusEntry, caps: &Caps) -> Option<SuiteResult> {
    let s = &e.structure;
    let ideal = |name: &str| -> ringoid_core::Result<IdealSet> {
        match e.named_ideal(name) {
            Some(Ok(i)) => Ok(i),
            Some(Err(err)) => Err(Error::Invalid(err.to_string())),
            None => Err(Error::Invalid(format!("no ideal named {name}"))),
        }
    };
    let body: Box<SuiteBody> = match e.name {
        "b-cross-product" => Box::new(|suite| {
            let (i, j) = (1, 2);
            suite.check(s.mul(s.mul(i, j), j) == i, || "(i x j) x j != i".into());
            suite.check(s.mul(i, s.mul(j, j)) == 0, || "i x (j x j) != 0".into());
            suite.check(s.laws().get(Law::MulAssociative).witness() == Some(&[1, 1, 2][..]), || {
                format!("associativity witness {:?}", s.laws().get(Law::MulAssociative))
            });
            Ok(())
        }),
        "austere-z6" => Box::new(|suite| {
            let (i, m1, m2) = (ideal("I")?, ideal("M1")?, ideal("M2")?);
            suite.check(i.to_vec() == [0, 2, 3, 4, 6], || format!("I = {:?}", i.to_vec()));
            for m in [&m1, &m2] {
                suite.check(prime(s, m)?, || format!("{} is not prime", m.display(s)));
                suite.check(!is_subtractive(s, m).holds(), || format!("{} is subtractive", m.display(s)));
                suite.check(!i.is_subset(m), || format!("I lies in {}", m.display(s)));
            }
            let covers = [m1, m2];
            suite.check(i.members().is_subset(&union(s, &covers)), || "I is not covered".into());
            let r = semiring_avoidance(s, &i, &covers)?;
            suite.check(
                r.verdict == Verdict::Fails
                    && r.violated_hypothesis.as_deref().is_some_and(|h| h.starts_with("subtractivity")),
                || format!("{r:?}"),
            );
            Ok(())
        }),
        "f2xy" => Box::new(|suite| {
            let c = Covering::new(ideal("m")?, vec![ideal("x")?, ideal("y")?, ideal("x+y")?])?;
            suite.check(c.is_efficient(), || "covering is not efficient".into());
            let r = mccoy_exponent(s, &c, caps)?;
            suite.check(r.verdict == Verdict::Holds && r.exponent == Some(2), || format!("{r:?}"));
            Ok(())
        }),
        "chain-3" | "boolean-lattice-4" => Box::new(|suite| {
            let r = compactly_packed_battery(s, caps)?;
            suite.check(r.compactly_packed, || "not compactly packed".into());
            Ok(())
        }),
        _ => return None,
    };
    Some(run("golden", body))
}

pub fn verify_entry(e: &CorpusEntry, settings: &SuiteSettings) -> EntryResult {
    let caps = &settings.caps;
    let s = &e.structure;
    let mut suites = vec![laws_suite(e), ideals_suite(s, caps), ringoid_avoidance_suite(s, settings)];
    if e.is_semiring() && s.size() <= 8 {
        suites.push(semiring_avoidance_suite(s, caps));
    }
    if s.is_commutative_semiring() {
        suites.push(mccoy_suite(s, caps));
        suites.push(spectrum_suite(e, caps));
        suites.push(quotient_suite(s, caps));
    }
    match e.modules(caps) {
        Ok(modules) if !modules.is_empty() => {
            suites.push(zero_divisor_suite(&modules, caps));
            let mut slices: Vec<(usize, &FiniteSemimodule)> = modules.iter().map(|m| (0, m)).collect();
            if e.name == "chain-3" {
                slices.push((settings.degree_cap, &modules[0]));
            }
            suites.push(slice_suite(&slices, caps));
        }
        Ok(_) => {}
        Err(err) => suites.push(Suite::new("zero-divisors").finish(match err {
            crate::WorkbenchError::Core(c) => Err(c),
            other => Err(Error::Invalid(other.to_string())),
        })),
    }
    suites.extend(golden_suite(e, caps));
    EntryResult { name: e.name, source: e.source, suites }
}

/// Runs every suite over the named entries, or the whole corpus when
/// `scope` is `None`. Results are ordered by entry name.
pub fn verify_all(scope: Option<&[String]>, settings: &SuiteSettings) -> Result<VerifyAll> {
    let entries = corpus(&settings.caps)?;
    let mut selected: Vec<&CorpusEntry> = match scope {
        None => entries.iter().collect(),
        Some(names) => names.iter().map(|n| find(&entries, n)).collect::<Result<_>>()?,
    };
    selected.sort_by_key(|e| e.name);
    selected.dedup_by_key(|e| e.name);
    let results: Vec<EntryResult> = selected.par_iter().map(|e| verify_entry(e, settings)).collect();
    Ok(VerifyAll {
        scope: selected.iter().map(|e| e.name.to_string()).collect(),
        caps: settings.caps,
        degree_cap: settings.degree_cap,
        seed: settings.seed,
        entries: results,
    })
}
