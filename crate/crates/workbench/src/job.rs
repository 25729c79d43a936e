//! Jobs: one command applied to one structure, producing a report.

use std::path::Path;
use std::time::Instant;

use ringoid_core::covering::{
    annihilator_avoidance, avoidance_witness_shaped, davis_witness, mccoy_exponent, semiring_avoidance,
    t_semiprime_avoidance, union_avoidance_suite, Covering, SumShape, UnionMode, Verdict, WitnessReport,
};
use ringoid_core::ideal::{
    classify_ideal, enumerate_ideals, generate_ideal, is_prime, is_subtractive, prime_criteria, radical,
    MultiplicativeSet,
};
use ringoid_core::quotient::{quotient_report, total_quotient};
use ringoid_core::spectrum::{compactly_packed_battery, spec_of, zariski_axioms};
use ringoid_core::zerodiv::{monoid_zd_check, zero_divisor_report};
use ringoid_core::{Caps, Cayley, FiniteSemimodule, IdealSet, Side};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::corpus::{corpus, CorpusEntry};
use crate::error::{Result, WorkbenchError};
use crate::ingest::{ingest, Loaded};
use crate::report::{Report, Tallies, REPORT_VERSION};
use crate::suites::{verify_all, SuiteSettings};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Laws,
    Ideals,
    Spec,
    Avoid,
    Mccoy,
    Packed,
    Zdiv,
    Quotient,
    VerifyAll,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Laws => "laws",
            Command::Ideals => "ideals",
            Command::Spec => "spec",
            Command::Avoid => "avoid",
            Command::Mccoy => "mccoy",
            Command::Packed => "packed",
            Command::Zdiv => "zdiv",
            Command::Quotient => "quotient",
            Command::VerifyAll => "verify-all",
        }
    }
}

/// An ideal given by generators, or by the name of a predefined corpus ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealRef {
    Generators(Vec<usize>),
    Named(String),
}

impl IdealRef {
    /// `"2,3"` is a generator list, anything else a name.
    pub fn parse(text: &str) -> Self {
        let parts: Vec<&str> = text.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        match parts.iter().map(|p| p.parse::<usize>()).collect::<Result<Vec<_>, _>>() {
            Ok(gens) => IdealRef::Generators(gens),
            Err(_) => IdealRef::Named(text.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AvoidMode {
    Ringoid,
    Semiring,
    Radical,
    Semiprime,
    Davis,
    TSemiprime,
    Annihilator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleChoice {
    Regular,
    Square,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideArg {
    Left,
    Right,
    TwoSided,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
            SideArg::TwoSided => Side::TwoSided,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<IdealRef>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<AvoidMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    /// Generators of the multiplicative set `T`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleChoice>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scope: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<SideArg>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<String>,
    #[serde(default)]
    pub parameters: Parameters,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Settings {
    pub caps: Caps,
    pub seed: Option<u64>,
    pub degree_cap: Option<usize>,
    pub timing: bool,
}

pub const DEFAULT_DEGREE_CAP: usize = 2;

/// A resolved structure reference.
pub struct Target {
    pub structure: Cayley,
    pub module: Option<FiniteSemimodule>,
    pub entry: Option<CorpusEntry>,
}

impl Target {
    fn ideal(&self, r: &IdealRef) -> Result<IdealSet> {
        match r {
            IdealRef::Generators(g) => Ok(generate_ideal(&self.structure, g, Side::TwoSided)?),
            IdealRef::Named(name) => {
                self.entry.as_ref().and_then(|e| e.named_ideal(name)).unwrap_or_else(|| {
                    Err(WorkbenchError::Usage(format!("no predefined ideal named {name:?}")))
                })
            }
        }
    }

    fn module(&self, choice: Option<ModuleChoice>, caps: &Caps) -> Result<FiniteSemimodule> {
        let s = &self.structure;
        Ok(match (choice, &self.module) {
            (None, Some(m)) => m.clone(),
            (None | Some(ModuleChoice::Regular), _) => FiniteSemimodule::regular(s)?,
            (Some(ModuleChoice::Square), _) => FiniteSemimodule::power(s, 2, caps)?,
            (Some(ModuleChoice::Zero), _) => FiniteSemimodule::zero_module(s)?,
        })
    }
}

/// A corpus name, or else a path to a structure file.
pub fn resolve(reference: &str, caps: &Caps) -> Result<Target> {
    if let Some(entry) = corpus(caps)?.into_iter().find(|e| e.name == reference) {
        return Ok(Target { structure: entry.structure.clone(), module: None, entry: Some(entry) });
    }
    let path = Path::new(reference);
    if !path.exists() {
        return Err(WorkbenchError::UnknownStructure(reference.to_string()));
    }
    Ok(match ingest(path, caps)? {
        Loaded::Structure(s) => Target { structure: s, module: None, entry: None },
        Loaded::Semimodule(m) => Target { structure: m.semiring().clone(), module: Some(m), entry: None },
    })
}

struct Outcome {
    verdict: String,
    result: Value,
    tallies: Tallies,
}

impl Outcome {
    fn info(result: Value) -> Self {
        Self { verdict: "ok".into(), result, tallies: Tallies { checks_run: 0, ..Tallies::default() } }
    }

    fn witness(r: WitnessReport) -> Self {
        let mut tallies = Tallies { checks_run: 1, ..Tallies::default() };
        let verdict = match r.verdict {
            Verdict::Holds => {
                tallies.passed = 1;
                "holds"
            }
            Verdict::Fails => {
                tallies.hypotheses_unmet = 1;
                "fails"
            }
            Verdict::HypothesesUnmet => {
                tallies.hypotheses_unmet = 1;
                "hypotheses_unmet"
            }
        };
        Self { verdict: verdict.into(), result: json!(r), tallies }
    }

    fn checks(result: Value, checks: &[bool]) -> Self {
        let passed = checks.iter().filter(|&&c| c).count();
        let tallies =
            Tallies { checks_run: checks.len(), passed, failed: checks.len() - passed, hypotheses_unmet: 0 };
        let verdict = if passed == checks.len() { "pass" } else { "fail" };
        Self { verdict: verdict.into(), result, tallies }
    }
}

fn require_structure(job: &Job) -> Result<&str> {
    job.structure
        .as_deref()
        .ok_or_else(|| WorkbenchError::Usage(format!("{} needs a structure", job.command.name())))
}

fn require<T: Clone>(value: &Option<T>, what: &str) -> Result<T> {
    value.clone().ok_or_else(|| WorkbenchError::Usage(format!("missing parameter {what}")))
}

pub fn execute(job: &Job, settings: &Settings) -> Result<Report> {
    let start = Instant::now();
    let outcome = dispatch(job, settings)?;
    Ok(Report {
        report_version: REPORT_VERSION,
        job: job.clone(),
        verdict: outcome.verdict,
        result: outcome.result,
        tallies: outcome.tallies,
        timing_ms: settings.timing.then(|| start.elapsed().as_millis()),
    })
}

fn dispatch(job: &Job, settings: &Settings) -> Result<Outcome> {
    let caps = &settings.caps;
    let p = &job.parameters;
    if job.command == Command::VerifyAll {
        let suite_settings = SuiteSettings {
            caps: *caps,
            seed: settings.seed,
            degree_cap: p.degree_cap.or(settings.degree_cap).unwrap_or(DEFAULT_DEGREE_CAP),
        };
        let v = verify_all(p.scope.as_deref(), &suite_settings)?;
        let tallies = v.tallies();
        let verdict = if tallies.failed == 0 { "pass" } else { "fail" };
        return Ok(Outcome { verdict: verdict.into(), result: json!(v), tallies });
    }
    let target = resolve(require_structure(job)?, caps)?;
    let s = &target.structure;
    Ok(match job.command {
        Command::Laws => {
            let l = s.laws();
            let mut result = json!({
                "size": s.size(),
                "labels": s.labels(),
                "laws": l,
                "ringoid": l.is_ringoid(),
                "na_hemiring": l.is_na_hemiring(),
                "na_semiring": l.is_na_semiring(),
                "semiring": l.is_semiring(),
            });
            if let Some(m) = &target.module {
                result["semimodule"] = json!({ "msize": m.msize(), "axioms": m.check() });
            }
            Outcome::info(result)
        }
        Command::Ideals => ideals(&target, p, caps)?,
        Command::Spec => {
            let primes = spec_of(s, caps)?;
            let mut result = json!({ "primes": primes });
            if s.is_commutative_semiring() {
                result["zariski"] = json!(zariski_axioms(s, caps)?);
            }
            Outcome::info(result)
        }
        Command::Avoid => avoid(&target, p, settings)?,
        Command::Mccoy => {
            let i = target.ideal(&require(&p.ideal, "ideal")?)?;
            let covers =
                require(&p.covers, "covers")?.iter().map(|c| target.ideal(c)).collect::<Result<Vec<_>>>()?;
            let c = Covering::new(i, covers)?;
            let mut out = Outcome::witness(mccoy_exponent(s, &c, caps)?);
            out.result["efficient"] = json!(c.is_efficient());
            out.result["intersection_lemma"] = json!(c.intersection_lemma());
            out
        }
        Command::Packed => {
            let r = compactly_packed_battery(s, caps)?;
            let agree = r.conditions.agree();
            Outcome::checks(json!(r), &[agree])
        }
        Command::Zdiv => {
            let m = target.module(p.module, caps)?;
            let r = zero_divisor_report(&m, caps)?;
            let mut checks = vec![r.very_few, r.ass_covers_zero_divisor_ideals];
            let mut result = json!({ "msize": m.msize(), "report": r });
            if let Some(d) = p.degree_cap.or(settings.degree_cap) {
                let slice = monoid_zd_check(&m, d, caps)?;
                if slice.verdict != Verdict::HypothesesUnmet {
                    checks.push(slice.superset.violations == 0 && slice.subset.violations == 0);
                }
                result["slice"] = json!(slice);
            }
            Outcome::checks(result, &checks)
        }
        Command::Quotient => {
            let q = total_quotient(s, caps)?;
            let r = quotient_report(s, caps)?;
            let holds = r.holds();
            let result = json!({
                "labels": q.structure().labels(),
                "add": q.structure().add_table(),
                "mul": q.structure().mul_table(),
                "report": r,
            });
            Outcome::checks(result, &[holds])
        }
        Command::VerifyAll => unreachable!("handled above"),
    })
}

fn ideals(target: &Target, p: &Parameters, caps: &Caps) -> Result<Outcome> {
    let s = &target.structure;
    if let Some(r) = &p.ideal {
        let i = target.ideal(r)?;
        let t = p.t.as_ref().map(|g| MultiplicativeSet::generated(s, g)).transpose()?;
        let mut result = json!({
            "ideal": i,
            "display": i.display(s),
            "classification": classify_ideal(s, &i, t.as_ref())?,
        });
        if s.is_commutative_semiring() {
            result["radical"] = json!(radical(s, &i)?);
        }
        if i.is_proper() {
            result["prime_criteria"] = json!(prime_criteria(s, &i)?);
        }
        return Ok(Outcome::info(result));
    }
    let side: Side = p.side.map_or(Side::TwoSided, Into::into);
    let all = enumerate_ideals(s, side, caps)?;
    let rows = all
        .iter()
        .map(|i| -> Result<Value> {
            let prime =
                if side == Side::TwoSided && i.is_proper() { Some(is_prime(s, i)?.holds()) } else { None };
            Ok(json!({
                "members": i,
                "subtractive": is_subtractive(s, i).holds(),
                "prime": prime,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::info(json!({ "side": side, "count": all.len(), "ideals": rows })))
}

fn avoid(target: &Target, p: &Parameters, settings: &Settings) -> Result<Outcome> {
    let s = &target.structure;
    let caps = &settings.caps;
    let i = target.ideal(&require(&p.ideal, "ideal")?)?;
    let covers = require(&p.covers, "covers")?.iter().map(|c| target.ideal(c)).collect::<Result<Vec<_>>>()?;
    let r = match p.mode.unwrap_or(AvoidMode::Ringoid) {
        AvoidMode::Ringoid => {
            let shape = settings.seed.map_or(SumShape::LeftComb, SumShape::Seeded);
            avoidance_witness_shaped(s, &i, &covers, shape)?
        }
        AvoidMode::Semiring => semiring_avoidance(s, &i, &covers)?,
        AvoidMode::Radical => union_avoidance_suite(s, &i, &covers, UnionMode::Radical, caps)?,
        AvoidMode::Semiprime => union_avoidance_suite(s, &i, &covers, UnionMode::Semiprime, caps)?,
        AvoidMode::Davis => davis_witness(s, require(&p.x, "x")?, &i, &covers)?,
        AvoidMode::TSemiprime => {
            let t = MultiplicativeSet::generated(s, &require(&p.t, "t")?)?;
            t_semiprime_avoidance(s, &i, &covers, &t, caps)?
        }
        AvoidMode::Annihilator => {
            let m = target.module(p.module, caps)?;
            annihilator_avoidance(&m, &i, &covers, caps)?
        }
    };
    Ok(Outcome::witness(r))
}
