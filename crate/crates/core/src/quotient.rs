//! The total quotient semiring `Q(S)`, the localization at the
//! non-zero-divisors.

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, IdealSet, Side};
use crate::laws::Check;
use crate::semimodule::FiniteSemimodule;
use crate::structure::Cayley;
use crate::zerodiv::{few_zero_divisors, zero_divisor_report, zero_divisors};
use crate::Caps;

/// `Q(S)` as a finite structure. Elements are classes of pairs `(s, u)`
/// under `(s, u) ~ (t, v)` iff `w s v = w t u` for some non-zero-divisor
/// `w`. Classes are numbered by their least representative, scanning
/// denominators with `1` first, so `s/1` classes come first.
#[derive(Clone, Debug)]
pub struct QuotientSemiring {
    base: Cayley,
    units: Vec<usize>,
    structure: Cayley,
    /// Class of the pair `(s, units[k])` at `k * |S| + s`.
    class_of: Vec<usize>,
    maximal_ideals: Vec<IdealSet>,
}

impl QuotientSemiring {
    pub fn base(&self) -> &Cayley {
        &self.base
    }

    /// `S \ Z(S)`, with `1` first.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn structure(&self) -> &Cayley {
        &self.structure
    }

    pub fn size(&self) -> usize {
        self.structure.size()
    }

    /// The class of `s/u`; `u` must be a non-zero-divisor.
    pub fn fraction(&self, s: usize, u: usize) -> Result<usize> {
        self.base.check_element(s)?;
        let k = self
            .units
            .iter()
            .position(|&v| v == u)
            .ok_or_else(|| Error::Precondition(format!("{u} is a zero divisor")))?;
        Ok(self.class_of[k * self.base.size() + s])
    }

    /// `s -> s/1`.
    pub fn canonical(&self, s: usize) -> usize {
        self.class_of[s]
    }

    pub fn maximal_ideals(&self) -> &[IdealSet] {
        &self.maximal_ideals
    }

    /// `I_U = {i/u}`.
    pub fn extend(&self, i: &IdealSet) -> Result<IdealSet> {
        let n = self.base.size();
        let members = ElemSet::from_iter(
            self.size(),
            (0..self.units.len()).flat_map(|k| i.iter().map(move |s| self.class_of[k * n + s])),
        );
        IdealSet::new(&self.structure, Side::TwoSided, members)
    }
}

pub fn total_quotient(s: &Cayley, caps: &Caps) -> Result<QuotientSemiring> {
    s.require_commutative_semiring()?;
    let n = s.size();
    let one = s.require_one()?;
    let zset = zero_divisors(&FiniteSemimodule::regular(s)?);
    let mut units = vec![one];
    units.extend(s.elements().filter(|&u| u != one && !zset.contains(u)));
    let pairs = n * units.len();
    if pairs > caps.carrier {
        return Err(Error::CapExceeded { what: "fraction pairs", size: pairs, cap: caps.carrier });
    }
    let pair = |p: usize| (p % n, units[p / n]);
    let equivalent = |p: usize, q: usize| {
        let ((a, u), (b, v)) = (pair(p), pair(q));
        let (l, r) = (s.mul(a, v), s.mul(b, u));
        units.iter().any(|&w| s.mul(w, l) == s.mul(w, r))
    };

    let mut class_of = vec![usize::MAX; pairs];
    let mut reps = Vec::new();
    for p in 0..pairs {
        if class_of[p] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(p);
        for (q, slot) in class_of.iter_mut().enumerate().skip(p) {
            if equivalent(p, q) {
                if *slot != usize::MAX {
                    return Err(Error::TheoremViolation("fraction relation is not transitive".into()));
                }
                *slot = c;
            }
        }
    }
    for p in 0..pairs {
        for q in 0..pairs {
            if equivalent(p, q) != (class_of[p] == class_of[q]) {
                return Err(Error::TheoremViolation("fraction relation is not transitive".into()));
            }
        }
    }

    let size = reps.len();
    let zero = s.require_zero()?;
    let index =
        |a: usize, u: usize| class_of[units.iter().position(|&v| v == u).expect("closed units") * n + a];
    let mut add = vec![vec![usize::MAX; size]; size];
    let mut mul = vec![vec![usize::MAX; size]; size];
    for p in 0..pairs {
        for q in 0..pairs {
            let ((a, u), (b, v)) = (pair(p), pair(q));
            let uv = s.mul(u, v);
            if zset.contains(uv) {
                return Err(Error::TheoremViolation("non-zero-divisors are not closed".into()));
            }
            let sum = index(s.add(s.mul(a, v), s.mul(b, u)), uv);
            let prod = index(s.mul(a, b), uv);
            for (table, value) in [(&mut add, sum), (&mut mul, prod)] {
                let cell = &mut table[class_of[p]][class_of[q]];
                if *cell == usize::MAX {
                    *cell = value;
                } else if *cell != value {
                    return Err(Error::TheoremViolation("fraction operations are not well defined".into()));
                }
            }
        }
    }
    let labels = reps
        .iter()
        .map(|&p| {
            let (a, u) = pair(p);
            if u == one {
                s.label(a).to_string()
            } else {
                format!("{}/{}", s.label(a), s.label(u))
            }
        })
        .collect();
    let structure = Cayley::from_tables(
        format!("Q({})", s.name()),
        &add,
        &mul,
        Some(class_of[zero]),
        Some(class_of[one]),
    )?
    .with_labels(labels)?;
    if !structure.is_commutative_semiring() {
        return Err(Error::TheoremViolation(format!(
            "total quotient is not a commutative semiring: {}",
            structure.laws().first_semiring_failure()
        )));
    }
    let ideals = enumerate_ideals(&structure, Side::TwoSided, caps)?;
    let proper: Vec<&IdealSet> = ideals.iter().filter(|i| i.is_proper()).collect();
    let maximal_ideals = proper
        .iter()
        .filter(|a| !proper.iter().any(|b| b != *a && a.is_subset(b)))
        .map(|a| (*a).clone())
        .collect();
    Ok(QuotientSemiring { base: s.clone(), units, structure, class_of, maximal_ideals })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KaschReport {
    pub kasch: bool,
    pub semilocal: bool,
    pub very_few: bool,
}

impl KaschReport {
    pub fn holds(&self) -> bool {
        self.kasch && self.semilocal && self.very_few
    }
}

pub fn kasch_semilocal_report(q: &QuotientSemiring, caps: &Caps) -> Result<KaschReport> {
    let module = FiniteSemimodule::regular(q.structure())?;
    let anns: Vec<IdealSet> =
        q.structure().elements().map(|x| module.annihilator(&[x])).collect::<Result<_>>()?;
    Ok(KaschReport {
        kasch: q.maximal_ideals().iter().all(|m| anns.contains(m)),
        semilocal: !q.maximal_ideals().is_empty(),
        very_few: zero_divisor_report(&module, caps)?.very_few,
    })
}

/// Everything checked about `Q(S)` for one base semiring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub base_size: usize,
    pub quotient_size: usize,
    pub non_zero_divisors: Vec<usize>,
    /// `s -> s/1`, by base element.
    pub canonical_map: Vec<usize>,
    /// The canonical map preserves `+`, `*`, `0` and `1`.
    pub canonical_morphism: bool,
    /// Witness is a non-zero-divisor whose image has no inverse.
    pub units_invertible: Check,
    pub maximal_ideals: Vec<IdealSet>,
    pub few_zero_divisors: bool,
    pub decomposition_primes: Vec<IdealSet>,
    /// `I_U` for each decomposition prime.
    pub extended_primes: Vec<IdealSet>,
    /// When `S` has few zero divisors: the maximal ideals of `Q(S)` are
    /// exactly the extended decomposition primes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_are_extensions: Option<bool>,
    /// `Ann(x)_U = Ann(x/1)`; witness `x`.
    pub annihilator_extension: Check,
    pub kasch: KaschReport,
}

impl QuotientReport {
    pub fn holds(&self) -> bool {
        self.canonical_morphism
            && self.units_invertible.holds()
            && self.maximal_are_extensions != Some(false)
            && self.annihilator_extension.holds()
            && self.kasch.holds()
    }
}

pub fn quotient_report(s: &Cayley, caps: &Caps) -> Result<QuotientReport> {
    let q = total_quotient(s, caps)?;
    let qs = q.structure();
    let phi: Vec<usize> = s.elements().map(|x| q.canonical(x)).collect();
    let canonical_morphism = phi[s.require_zero()?] == qs.require_zero()?
        && phi[s.require_one()?] == qs.require_one()?
        && s.elements().all(|a| {
            s.elements().all(|b| {
                phi[s.add(a, b)] == qs.add(phi[a], phi[b]) && phi[s.mul(a, b)] == qs.mul(phi[a], phi[b])
            })
        });
    let qone = qs.require_one()?;
    let units_invertible = Check::from_witness(
        q.units().iter().find(|&&u| !qs.elements().any(|y| qs.mul(phi[u], y) == qone)).map(|&u| vec![u]),
    );

    let few = few_zero_divisors(s, caps)?;
    let extended_primes: Vec<IdealSet> = few.primes.iter().map(|p| q.extend(p)).collect::<Result<_>>()?;
    let maximal_are_extensions = few.holds.then(|| {
        let mut ext = extended_primes.clone();
        ext.sort();
        ext.dedup();
        ext == q.maximal_ideals()
    });

    let base_module = FiniteSemimodule::regular(s)?;
    let q_module = FiniteSemimodule::regular(qs)?;
    let mut ext_failure = None;
    for x in s.elements() {
        if q.extend(&base_module.annihilator(&[x])?)? != q_module.annihilator(&[phi[x]])? {
            ext_failure = Some(vec![x]);
            break;
        }
    }
    Ok(QuotientReport {
        base_size: s.size(),
        quotient_size: q.size(),
        non_zero_divisors: q.units().to_vec(),
        canonical_map: phi,
        canonical_morphism,
        units_invertible,
        maximal_ideals: q.maximal_ideals().to_vec(),
        few_zero_divisors: few.holds,
        decomposition_primes: few.primes,
        extended_primes,
        maximal_are_extensions,
        annihilator_extension: Check::from_witness(ext_failure),
        kasch: kasch_semilocal_report(&q, caps)?,
    })
}
