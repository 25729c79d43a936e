//! Zero divisors of finite semimodules and of monoid semimodules.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElemSet;
use crate::constructions::{digits, MonoidSemiring};
use crate::covering::Verdict;
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, generate_ideal, is_prime, is_subtractive, radical, IdealSet, Side};
use crate::semimodule::FiniteSemimodule;
use crate::spectrum::{compactly_packed_battery, spec_of};
use crate::structure::Cayley;
use crate::Caps;

/// An ideal attached to the least element producing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attached {
    pub x: usize,
    pub ideal: IdealSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorReport {
    pub zset: ElemSet,
    /// Distinct `√Ann(x)` over nonzero `x`.
    pub radical_decomposition: Vec<Attached>,
    /// Distinct prime `Ann(x)`.
    pub ass: Vec<Attached>,
    /// Maximal members of `{Ann(x) : x != 0}`.
    pub maximal_annihilators: Vec<IdealSet>,
    pub very_few: bool,
    /// Whether the scalar semiring itself has few zero divisors.
    pub few: bool,
    pub property_a: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property_a_witness: Option<IdealSet>,
    /// Every ideal inside `Z(M)` lies in some associated prime.
    pub ass_covers_zero_divisor_ideals: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ass_cover_witness: Option<IdealSet>,
}

/// `Z(M)`: scalars killing some nonzero element. Empty for the zero module.
pub fn zero_divisors(m: &FiniteSemimodule) -> ElemSet {
    let s = m.semiring();
    ElemSet::from_iter(
        s.size(),
        s.elements().filter(|&r| m.nonzero_elements().any(|x| m.act(r, x) == m.mzero())),
    )
}

fn element_annihilators(m: &FiniteSemimodule) -> Result<Vec<Attached>> {
    m.nonzero_elements().map(|x| Ok(Attached { x, ideal: m.annihilator(&[x])? })).collect()
}

fn dedup_attached(items: impl IntoIterator<Item = Attached>) -> Vec<Attached> {
    let mut out: Vec<Attached> = Vec::new();
    for a in items {
        if !out.iter().any(|b| b.ideal == a.ideal) {
            out.push(a);
        }
    }
    out.sort_by(|a, b| a.ideal.cmp(&b.ideal));
    out
}

fn maximal_of(ideals: &[IdealSet]) -> Vec<IdealSet> {
    let mut out: Vec<IdealSet> =
        ideals.iter().filter(|a| !ideals.iter().any(|b| b != *a && a.is_subset(b))).cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// First ideal inside `Z(M)` with no common nonzero annihilated element.
pub fn property_a_check(m: &FiniteSemimodule, caps: &Caps) -> Result<Option<IdealSet>> {
    let s = m.semiring();
    s.require_commutative_semiring()?;
    let z = zero_divisors(m);
    for i in enumerate_ideals(s, Side::TwoSided, caps)? {
        if i.members().is_subset(&z)
            && !m.nonzero_elements().any(|x| i.iter().all(|r| m.act(r, x) == m.mzero()))
        {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

pub fn zero_divisor_report(m: &FiniteSemimodule, caps: &Caps) -> Result<ZeroDivisorReport> {
    let s = m.semiring();
    s.require_commutative_semiring()?;
    let zset = zero_divisors(m);
    let anns = element_annihilators(m)?;

    let radicals = anns
        .iter()
        .map(|a| Ok(Attached { x: a.x, ideal: radical(s, &a.ideal)? }))
        .collect::<Result<Vec<_>>>()?;
    let radical_union = ElemSet::union_all(s.size(), radicals.iter().map(|a| a.ideal.members()));
    if radical_union != zset {
        return Err(Error::TheoremViolation(
            "Z(M) differs from the union of the radicals of element annihilators".into(),
        ));
    }

    let mut ass = Vec::new();
    for a in &anns {
        if a.ideal.is_proper() && is_prime(s, &a.ideal)?.holds() {
            ass.push(a.clone());
        }
    }
    let ass = dedup_attached(ass);
    let ass_union = ElemSet::union_all(s.size(), ass.iter().map(|a| a.ideal.members()));
    let ann_ideals: Vec<IdealSet> = anns.iter().map(|a| a.ideal.clone()).collect();

    let property_a_witness = property_a_check(m, caps)?;
    let mut ass_cover_witness = None;
    for i in enumerate_ideals(s, Side::TwoSided, caps)? {
        if i.members().is_subset(&zset) && !ass.iter().any(|p| i.is_subset(&p.ideal)) {
            ass_cover_witness = Some(i);
            break;
        }
    }
    Ok(ZeroDivisorReport {
        very_few: ass_union == zset,
        few: few_zero_divisors(s, caps)?.holds,
        property_a: property_a_witness.is_none(),
        property_a_witness,
        ass_covers_zero_divisor_ideals: ass_cover_witness.is_none(),
        ass_cover_witness,
        maximal_annihilators: maximal_of(&ann_ideals),
        radical_decomposition: dedup_attached(radicals),
        ass,
        zset,
    })
}

/// Whether `Z(S)` is a union of subtractive primes; `primes` are the maximal
/// subtractive primes inside `Z(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FewZeroDivisors {
    pub holds: bool,
    pub zset: ElemSet,
    pub primes: Vec<IdealSet>,
}

pub fn few_zero_divisors(s: &Cayley, caps: &Caps) -> Result<FewZeroDivisors> {
    s.require_commutative_semiring()?;
    let zset = zero_divisors(&FiniteSemimodule::regular(s)?);
    let inside: Vec<IdealSet> = spec_of(s, caps)?
        .into_iter()
        .filter(|p| p.members().is_subset(&zset) && is_subtractive(s, p).holds())
        .collect();
    let primes = maximal_of(&inside);
    let union = ElemSet::union_all(s.size(), primes.iter().map(IdealSet::members));
    Ok(FewZeroDivisors { holds: union == zset, zset, primes })
}

/// The ideal generated by the coefficients of `f`.
pub fn content(ms: &MonoidSemiring, f: usize) -> Result<IdealSet> {
    ms.structure().check_element(f)?;
    generate_ideal(ms.base(), &ms.coefficients(f), Side::TwoSided)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SupersetTally {
    pub checked: usize,
    pub passed: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SubsetTally {
    /// Annihilated `f` whose content lies in a decomposition prime.
    pub witnessed: usize,
    /// `f` in some `P[G]` for which the slice holds no annihilator.
    pub inconclusive: usize,
    /// Annihilated `f` outside every `P[G]`.
    pub violations: usize,
    /// `f` with no annihilator in the slice and outside every `P[G]`.
    pub unannihilated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoidZdReport {
    pub verdict: Verdict,
    pub degree_cap: usize,
    pub slice_size: usize,
    pub primes: Vec<IdealSet>,
    pub superset: SupersetTally,
    pub subset: SubsetTally,
    /// Coefficients, constant term first, of the first offending `f`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated_hypothesis: Option<String>,
}

#[derive(Default)]
struct SliceOutcome {
    sup: SupersetTally,
    sub: SubsetTally,
    first_sup: Option<usize>,
    first_sub: Option<usize>,
}

impl SliceOutcome {
    fn merge(mut self, o: SliceOutcome) -> SliceOutcome {
        self.sup.checked += o.sup.checked;
        self.sup.passed += o.sup.passed;
        self.sup.violations += o.sup.violations;
        self.sub.witnessed += o.sub.witnessed;
        self.sub.inconclusive += o.sub.inconclusive;
        self.sub.violations += o.sub.violations;
        self.sub.unannihilated += o.sub.unannihilated;
        self.first_sup = min_some(self.first_sup, o.first_sup);
        self.first_sub = min_some(self.first_sub, o.first_sub);
        self
    }
}

fn min_some(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

/// Checks `Z(M[X]) = ∪ P[X]` over the associated primes of `M`, on
/// polynomials of degree at most `degree_cap`.
pub fn monoid_zd_check(m: &FiniteSemimodule, degree_cap: usize, caps: &Caps) -> Result<MonoidZdReport> {
    let s = m.semiring();
    s.require_commutative_semiring()?;
    let len = degree_cap + 1;
    let (q, k) = (s.size(), m.msize());
    let too_big = || Error::CapExceeded { what: "monoid slice", size: usize::MAX, cap: caps.map_enumeration };
    let fs = q.checked_pow(len as u32).ok_or_else(too_big)?;
    let gs = k.checked_pow(len as u32).ok_or_else(too_big)?;
    let work = fs.checked_mul(gs).ok_or_else(too_big)?;
    if work > caps.map_enumeration {
        return Err(Error::CapExceeded { what: "monoid slice", size: work, cap: caps.map_enumeration });
    }

    let packed = compactly_packed_battery(s, caps)?.compactly_packed;
    let report = zero_divisor_report(m, caps)?;
    let unmet = if !packed {
        Some("scalar semiring is not compactly packed".to_string())
    } else if !report.property_a {
        Some("semimodule lacks Property (A)".to_string())
    } else {
        None
    };
    let primes: Vec<IdealSet> = report.ass.iter().map(|a| a.ideal.clone()).collect();
    let mz = m.mzero();

    let annihilates = |f: &[usize], g: &[usize]| {
        (0..2 * len - 1).all(|deg| {
            let lo = deg.saturating_sub(len - 1);
            let hi = deg.min(len - 1);
            (lo..=hi).fold(mz, |acc, i| m.add(acc, m.act(f[i], g[deg - i]))) == mz
        })
    };

    let outcome = (0..fs)
        .into_par_iter()
        .map(|fi| {
            let f = digits(fi, q, len);
            let mut o = SliceOutcome::default();
            let in_pg = primes.iter().any(|p| f.iter().all(|&c| p.contains(c)));
            let constant = m.nonzero_elements().any(|b| f.iter().all(|&c| m.act(c, b) == mz));
            if in_pg {
                o.sup.checked = 1;
                if constant {
                    o.sup.passed = 1;
                } else {
                    o.sup.violations = 1;
                    o.first_sup = Some(fi);
                }
            }
            let annihilated = constant
                || (1..gs).any(|gi| {
                    let g = digits(gi, k, len);
                    g.iter().any(|&c| c != mz) && annihilates(&f, &g)
                });
            match (annihilated, in_pg) {
                (true, true) => o.sub.witnessed = 1,
                (true, false) => {
                    o.sub.violations = 1;
                    o.first_sub = Some(fi);
                }
                (false, true) => o.sub.inconclusive = 1,
                (false, false) => o.sub.unannihilated = 1,
            }
            o
        })
        .reduce(SliceOutcome::default, SliceOutcome::merge);

    let verdict = match (&unmet, outcome.sup.violations, outcome.sub.violations) {
        (None, 0, 0) => Verdict::Holds,
        (None, v, _) if v > 0 => {
            return Err(Error::TheoremViolation(format!(
                "P[X] contains a polynomial with no nonzero constant annihilator: {:?}",
                digits(outcome.first_sup.unwrap_or(0), q, len)
            )))
        }
        (None, _, _) => Verdict::Fails,
        (Some(_), 0, 0) => Verdict::HypothesesUnmet,
        (Some(_), _, _) => Verdict::Fails,
    };
    Ok(MonoidZdReport {
        verdict,
        degree_cap,
        slice_size: fs,
        primes,
        superset: outcome.sup,
        subset: outcome.sub,
        witness: min_some(outcome.first_sup, outcome.first_sub).map(|fi| digits(fi, q, len)),
        violated_hypothesis: unmet,
    })
}
