use std::process::Command;
use std::time::Instant;

use ringoid_core::covering::{mccoy_exponent, semiring_avoidance, Covering, Verdict};
use ringoid_core::ideal::{generate_ideal, is_prime, is_subtractive, Side};
use ringoid_core::spectrum::compactly_packed_battery;
use ringoid_core::standard::{boolean_cross_product, boolean_lattice, chain, f2xy_square};
use ringoid_core::zerodiv::monoid_zd_check;
use ringoid_core::{Caps, Cayley, FiniteSemimodule, IdealSet};
use ringoid_workbench::corpus::corpus;
use ringoid_workbench::suites::{verify_all, SuiteSettings, VerifyAll};
use ringoid_workbench::{execute, Job, Parameters, Settings};

type Outcome = Result<String, String>;

fn settings() -> SuiteSettings {
    SuiteSettings { caps: Caps::default(), seed: None, degree_cap: 2 }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Every named suite ran somewhere, and none failed or was skipped.
fn clean_suite(v: &VerifyAll, suite: &str, full_pass: bool) -> Outcome {
    let mut run = 0;
    for (entry, s) in v.suites_named(suite) {
        ensure(s.skipped.is_none(), format!("{entry}/{suite} skipped: {:?}", s.skipped))?;
        ensure(s.tallies.failed == 0, format!("{entry}/{suite}: {:?}", s.failures))?;
        if full_pass {
            ensure(s.tallies.passed == s.tallies.checks_run, format!("{entry}/{suite}: {:?}", s.tallies))?;
        }
        run += s.tallies.passed;
    }
    ensure(run > 0, format!("{suite} passed no checks"))?;
    Ok(format!("{run} checks passed"))
}

fn ideal(s: &Cayley, g: &[usize]) -> IdealSet {
    generate_ideal(s, g, Side::TwoSided).unwrap()
}

fn c1() -> Outcome {
    let s = boolean_cross_product();
    let (i, j) = (1, 2);
    let start = Instant::now();
    let left = s.mul(s.mul(i, j), j);
    let right = s.mul(i, s.mul(j, j));
    let elapsed = start.elapsed();
    ensure(left == i, format!("(i x j) x j = {left}"))?;
    ensure(right == 0, format!("i x (j x j) = {right}"))?;
    ensure(elapsed.as_micros() < 1000, format!("took {elapsed:?}"))?;
    Ok(format!("(i x j) x j = i, i x (j x j) = 0 in {elapsed:?}"))
}

fn c2(v: &VerifyAll) -> Outcome {
    let s = corpus(&Caps::default()).unwrap().into_iter().find(|e| e.name == "austere-z6").unwrap().structure;
    let (i, m1, m2) = (ideal(&s, &[2, 3]), ideal(&s, &[2]), ideal(&s, &[3]));
    for m in [&m1, &m2] {
        ensure(is_prime(&s, m).unwrap().holds(), "M_i not prime")?;
        ensure(!is_subtractive(&s, m).holds(), "M_i subtractive")?;
        ensure(!i.is_subset(m), "I inside M_i")?;
    }
    ensure(i.iter().all(|x| m1.contains(x) || m2.contains(x)), "I not covered")?;
    let r = semiring_avoidance(&s, &i, &[m1, m2]).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Fails, format!("verdict {:?}", r.verdict))?;
    let h = r.violated_hypothesis.unwrap_or_default();
    ensure(h.starts_with("subtractivity"), format!("violated {h}"))?;
    let golden = v.suite("austere-z6", "golden").ok_or("no golden suite")?;
    ensure(golden.tallies.failed == 0 && golden.tallies.passed > 0, "golden suite failed")?;
    Ok(format!("fails / {h}"))
}

fn c3(v: &VerifyAll) -> Outcome {
    let entries = corpus(&Caps::default()).unwrap();
    let mut checks = 0;
    for e in entries.iter().filter(|e| e.is_semiring() && e.structure.size() <= 8) {
        let s = v.suite(e.name, "prime-criteria").ok_or(format!("{} missing", e.name))?;
        ensure(s.skipped.is_none() && s.tallies.failed == 0, format!("{}: {:?}", e.name, s.failures))?;
        ensure(s.tallies.hypotheses_unmet == 0, format!("{}: criteria not both evaluated", e.name))?;
        checks += s.tallies.passed;
    }
    ensure(checks > 0, "no proper ideals checked")?;
    Ok(format!("0 disagreements over {checks} proper ideals"))
}

fn c6(v: &VerifyAll) -> Outcome {
    let s = f2xy_square();
    let c = Covering::new(ideal(&s, &[2, 4]), vec![ideal(&s, &[2]), ideal(&s, &[4]), ideal(&s, &[6])])
        .map_err(|e| e.to_string())?;
    let r = mccoy_exponent(&s, &c, &Caps::default()).map_err(|e| e.to_string())?;
    ensure(r.exponent == Some(2), format!("k = {:?}", r.exponent))?;
    Ok(format!("k=2; corpus: {}", clean_suite(v, "mccoy", false)?))
}

fn c7(v: &VerifyAll) -> Outcome {
    let caps = Caps::default();
    for s in [chain(3), boolean_lattice(2)] {
        let r = compactly_packed_battery(&s, &caps).map_err(|e| e.to_string())?;
        ensure(r.compactly_packed, format!("{} not packed", s.name()))?;
    }
    clean_suite(v, "spectrum", true)
}

fn c9(v: &VerifyAll) -> Outcome {
    clean_suite(v, "quotient", true)
}

fn c10(v: &VerifyAll) -> Outcome {
    let m = FiniteSemimodule::regular(&chain(3)).unwrap();
    let r = monoid_zd_check(&m, 2, &Caps::default()).map_err(|e| e.to_string())?;
    ensure(r.superset.checked > 0 && r.superset.passed == r.superset.checked, format!("{:?}", r.superset))?;
    ensure(r.subset.violations == 0, format!("{:?}", r.subset))?;
    let d0 = clean_suite(v, "monoid-slices", false)?;
    Ok(format!(
        "d=2 chain-3: superset {}/{}, subset {} witnessed {} inconclusive; d=0: {d0}",
        r.superset.passed, r.superset.checked, r.subset.witnessed, r.subset.inconclusive
    ))
}

fn c11() -> Outcome {
    let job = Job {
        command: ringoid_workbench::Command::VerifyAll,
        structure: None,
        parameters: Parameters::default(),
    };
    let a = execute(&job, &Settings::default()).map_err(|e| e.to_string())?.to_json();
    let b = execute(&job, &Settings::default()).map_err(|e| e.to_string())?.to_json();
    ensure(a == b, "library reports differ")?;
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_workbench"))
            .args(["verify-all", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (x, y) = (run()?, run()?);
    ensure(x.status.success() && y.status.success(), "verify-all exited nonzero")?;
    ensure(x.stdout == y.stdout, "binary reports differ")?;
    Ok(format!("{} bytes identical across runs", x.stdout.len()))
}

fn main() {
    let v = verify_all(None, &settings()).expect("verify-all runs");
    let criteria: Vec<(&str, Outcome)> = vec![
        ("1 cross-product non-associativity", c1()),
        ("2 austere counterexample", c2(&v)),
        ("3 prime-criterion equivalence", c3(&v)),
        ("4 ringoid avoidance", clean_suite(&v, "ringoid-avoidance", true)),
        ("5 semiring avoidance", clean_suite(&v, "semiring-avoidance", true)),
        ("6 McCoy exponent", c6(&v)),
        ("7 compactly-packed battery", c7(&v)),
        ("8 zero-divisor decomposition", clean_suite(&v, "zero-divisors", true)),
        ("9 quotient suite", c9(&v)),
        ("10 monoid-semimodule slices", c10(&v)),
        ("11 determinism", c11()),
    ];
    let mut failed = 0;
    for (name, outcome) in &criteria {
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
