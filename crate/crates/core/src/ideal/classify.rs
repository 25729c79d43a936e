use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{close_from, enumerate_ideals, is_ideal, principal_ideals, IdealSet, Side};
use crate::laws::Check;
use crate::structure::Cayley;
use crate::Caps;

/// A subset containing the identity and closed under multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicativeSet {
    members: ElemSet,
}

impl MultiplicativeSet {
    pub fn new(s: &Cayley, members: ElemSet) -> Result<Self> {
        let one = s.require_one()?;
        if !members.contains(one) {
            return Err(Error::Invalid("multiplicative set must contain 1".into()));
        }
        for a in &members {
            for b in &members {
                if !members.contains(s.mul(a, b)) {
                    return Err(Error::Invalid(format!(
                        "multiplicative set is not closed: {a}*{b} = {}",
                        s.mul(a, b)
                    )));
                }
            }
        }
        Ok(Self { members })
    }

    /// The least multiplicative set containing `xs`.
    pub fn generated(s: &Cayley, xs: &[usize]) -> Result<Self> {
        let mut members = ElemSet::from_iter(s.size(), [s.require_one()?]);
        for &x in xs {
            members.insert(s.check_element(x)?);
        }
        loop {
            let current = members.to_vec();
            let mut grew = false;
            for &a in &current {
                for &b in &current {
                    grew |= members.insert(s.mul(a, b));
                }
            }
            if !grew {
                return Ok(Self { members });
            }
        }
    }

    /// `S` minus the union of the given sets.
    pub fn complement_of(s: &Cayley, sets: &[&ElemSet]) -> Result<Self> {
        let union = ElemSet::union_all(s.size(), sets.iter().copied());
        Self::new(s, union.complement())
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }
}

/// `x + y in I` together with one summand in `I` forces the other into `I`.
/// The witness is the least `(x, y)` breaking this.
pub fn is_subtractive(s: &Cayley, i: &IdealSet) -> Check {
    crate::laws::first_failure2(s.size(), |x, y| !i.contains(s.add(x, y)) || i.contains(x) == i.contains(y))
}

/// Both primeness tests for a proper two-sided ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeCriteria {
    /// `(a)(b) ⊆ P` forces `a` or `b` into `P`, with the raw product set.
    pub principal_product: Check,
    /// `aSb ⊆ P` forces `a` or `b` into `P`; only evaluated on semirings.
    pub element_sandwich: Option<Check>,
}

impl PrimeCriteria {
    pub fn agree(&self) -> bool {
        self.element_sandwich.as_ref().is_none_or(|c| c.holds() == self.principal_product.holds())
    }
}

fn require_two_sided_proper(s: &Cayley, p: &IdealSet) -> Result<()> {
    if !is_ideal(s, p.members(), Side::TwoSided) {
        return Err(Error::Precondition("expected a two-sided ideal".into()));
    }
    if !p.is_proper() {
        return Err(Error::NotProper);
    }
    Ok(())
}

fn principal_criterion(s: &Cayley, p: &IdealSet, principals: &[IdealSet]) -> Check {
    crate::laws::first_failure2(s.size(), |a, b| {
        if p.contains(a) || p.contains(b) {
            return true;
        }
        let (pa, pb) = (&principals[a], &principals[b]);
        pa.iter().any(|x| pb.iter().any(|y| !p.contains(s.mul(x, y))))
    })
}

fn sandwich_criterion(s: &Cayley, p: &IdealSet) -> Check {
    crate::laws::first_failure2(s.size(), |a, b| {
        p.contains(a) || p.contains(b) || s.elements().any(|r| !p.contains(s.mul(s.mul(a, r), b)))
    })
}

/// Evaluates the principal-product test, and on semirings also the
/// `aSb` test.
pub fn prime_criteria(s: &Cayley, p: &IdealSet) -> Result<PrimeCriteria> {
    require_two_sided_proper(s, p)?;
    let principals = principal_ideals(s);
    Ok(PrimeCriteria {
        principal_product: principal_criterion(s, p, &principals),
        element_sandwich: s.laws().is_semiring().then(|| sandwich_criterion(s, p)),
    })
}

/// Primeness of a proper two-sided ideal. On semirings the two criteria are
/// compared and a disagreement is reported as a theorem violation.
pub fn is_prime(s: &Cayley, p: &IdealSet) -> Result<Check> {
    let c = prime_criteria(s, p)?;
    if !c.agree() {
        return Err(Error::TheoremViolation(format!("prime criteria disagree on {}: {:?}", p.display(s), c)));
    }
    Ok(c.principal_product)
}

fn ensure_commutative(s: &Cayley) -> Result<()> {
    s.require_commutative_semiring()
}

/// `√I = {x : x^k in I for some k}`, with `k` bounded by the carrier size.
pub fn radical(s: &Cayley, i: &IdealSet) -> Result<IdealSet> {
    ensure_commutative(s)?;
    let members = ElemSet::from_iter(
        s.size(),
        s.elements().filter(|&x| {
            let mut p = x;
            for _ in 0..s.size() {
                if i.contains(p) {
                    return true;
                }
                p = s.mul(p, x);
            }
            false
        }),
    );
    if !is_ideal(s, &members, Side::TwoSided) {
        return Err(Error::TheoremViolation(format!("radical of {} is not an ideal", i.display(s))));
    }
    Ok(IdealSet::from_closed(Side::TwoSided, members))
}

/// The residual `[I : t] = {x : tx in I}`.
pub fn residual(s: &Cayley, i: &IdealSet, t: usize) -> Result<IdealSet> {
    ensure_commutative(s)?;
    s.check_element(t)?;
    let members = ElemSet::from_iter(s.size(), s.elements().filter(|&x| i.contains(s.mul(t, x))));
    Ok(IdealSet::from_closed(Side::TwoSided, members))
}

/// T-semiprimeness: the least `t` with `x² in P => tx in P` for all `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TSemiprime {
    Holds { t: usize },
    Fails,
}

impl TSemiprime {
    pub fn holds(&self) -> bool {
        matches!(self, TSemiprime::Holds { .. })
    }

    pub fn t(&self) -> Option<usize> {
        match self {
            TSemiprime::Holds { t } => Some(*t),
            TSemiprime::Fails => None,
        }
    }
}

fn t_semiprime(s: &Cayley, p: &IdealSet, t_set: &MultiplicativeSet) -> TSemiprime {
    t_set
        .iter()
        .find(|&t| s.elements().all(|x| !p.contains(s.mul(x, x)) || p.contains(s.mul(t, x))))
        .map_or(TSemiprime::Fails, |t| TSemiprime::Holds { t })
}

/// Every classification flag of an ideal, each failing flag with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealClassification {
    pub subtractive: Check,
    pub proper: bool,
    pub prime: Check,
    pub semiprime: Check,
    pub two_absorbing: Check,
    pub maximal: Check,
    /// Only decided on commutative semirings.
    pub radical_ideal: Option<Check>,
    pub t_semiprime: Option<TSemiprime>,
}

fn semiprime_principal(s: &Cayley, p: &IdealSet, principals: &[IdealSet]) -> Check {
    crate::laws::first_failure1(s.size(), |a| {
        p.contains(a) || {
            let pa = &principals[a];
            pa.iter().any(|x| pa.iter().any(|y| !p.contains(s.mul(x, y))))
        }
    })
}

fn semiprime_elementwise(s: &Cayley, p: &IdealSet) -> Check {
    crate::laws::first_failure1(s.size(), |a| p.contains(a) || !p.contains(s.mul(a, a)))
}

fn maximal(s: &Cayley, i: &IdealSet) -> Check {
    crate::laws::first_failure1(s.size(), |x| {
        i.contains(x) || close_from(s, i.members(), &[x], Side::TwoSided).is_full()
    })
}

fn two_absorbing(s: &Cayley, i: &IdealSet) -> Check {
    crate::laws::first_failure3(s.size(), |x, y, z| {
        !i.contains(s.mul(s.mul(x, y), z))
            || i.contains(s.mul(x, y))
            || i.contains(s.mul(y, z))
            || i.contains(s.mul(x, z))
    })
}

/// Decides every flag of [`IdealClassification`] for a two-sided ideal.
///
/// On commutative semirings semiprimeness is decided by `x² in P => x in P`
/// and cross-checked against the principal-square test.
pub fn classify_ideal(
    s: &Cayley,
    i: &IdealSet,
    t_set: Option<&MultiplicativeSet>,
) -> Result<IdealClassification> {
    if !is_ideal(s, i.members(), Side::TwoSided) {
        return Err(Error::Precondition("expected a two-sided ideal".into()));
    }
    if let Some(t) = t_set {
        if !i.members().is_disjoint(t.members()) {
            return Err(Error::Precondition("T-semiprimeness needs an ideal disjoint from T".into()));
        }
    }
    let subtractive = is_subtractive(s, i);
    let commutative = s.is_commutative_semiring();
    if !i.is_proper() {
        let no = || Check::Fails(vec![]);
        return Ok(IdealClassification {
            subtractive,
            proper: false,
            prime: no(),
            semiprime: no(),
            two_absorbing: no(),
            maximal: no(),
            radical_ideal: commutative.then_some(Check::Holds),
            t_semiprime: t_set.map(|_| TSemiprime::Fails),
        });
    }
    let principals = principal_ideals(s);
    let prime = is_prime(s, i)?;
    let semiprime = if commutative {
        let elementwise = semiprime_elementwise(s, i);
        let principal = semiprime_principal(s, i, &principals);
        if elementwise.holds() != principal.holds() {
            return Err(Error::TheoremViolation(format!("semiprime criteria disagree on {}", i.display(s))));
        }
        elementwise
    } else {
        semiprime_principal(s, i, &principals)
    };
    let radical_ideal = if commutative {
        let r = radical(s, i)?;
        Some(Check::from_witness(r.members().difference(i.members()).first().map(|x| vec![x])))
    } else {
        None
    };
    Ok(IdealClassification {
        subtractive,
        proper: true,
        prime,
        semiprime,
        two_absorbing: two_absorbing(s, i),
        maximal: maximal(s, i),
        radical_ideal,
        t_semiprime: t_set.map(|t| t_semiprime(s, i, t)),
    })
}

/// Both sides of the residual characterisation of T-semiprime ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TSemiprimeEquivalence {
    /// Least `t` witnessing T-semiprimeness of `P`.
    pub t_semiprime: Option<usize>,
    /// Least `t in T` with `[P : t]` semiprime.
    pub residual_semiprime: Option<usize>,
}

impl TSemiprimeEquivalence {
    pub fn holds(&self) -> bool {
        self.t_semiprime.is_some() == self.residual_semiprime.is_some()
    }
}

/// Compares T-semiprimeness of a 2-absorbing `P` with semiprimeness of its
/// residuals `[P : t]`.
pub fn t_semiprime_equivalence(
    s: &Cayley,
    p: &IdealSet,
    t_set: &MultiplicativeSet,
) -> Result<TSemiprimeEquivalence> {
    ensure_commutative(s)?;
    require_two_sided_proper(s, p)?;
    if !p.members().is_disjoint(t_set.members()) {
        return Err(Error::HypothesesUnmet("P meets T".into()));
    }
    if let Check::Fails(w) = two_absorbing(s, p) {
        return Err(Error::HypothesesUnmet(format!("P is not 2-absorbing, witness {w:?}")));
    }
    let residual_semiprime = t_set.iter().find(|&t| {
        residual(s, p, t).map(|q| q.is_proper() && semiprime_elementwise(s, &q).holds()).unwrap_or(false)
    });
    Ok(TSemiprimeEquivalence { t_semiprime: t_semiprime(s, p, t_set).t(), residual_semiprime })
}

/// The least ideal, in sorted order, that contains `I`, misses `T`, and is
/// maximal with these properties. It is checked to be prime.
pub fn krull_separation(
    s: &Cayley,
    t_set: &MultiplicativeSet,
    i: &IdealSet,
    caps: &Caps,
) -> Result<IdealSet> {
    ensure_commutative(s)?;
    if !i.members().is_disjoint(t_set.members()) {
        return Err(Error::Precondition("I meets T".into()));
    }
    let candidates: Vec<IdealSet> = enumerate_ideals(s, Side::TwoSided, caps)?
        .into_iter()
        .filter(|j| i.is_subset(j) && j.members().is_disjoint(t_set.members()))
        .collect();
    let best = candidates
        .iter()
        .find(|j| !candidates.iter().any(|k| k != *j && j.is_subset(k)))
        .cloned()
        .ok_or_else(|| Error::TheoremViolation("no ideal contains I and misses T".into()))?;
    if let Check::Fails(w) = is_prime(s, &best)? {
        return Err(Error::TheoremViolation(format!(
            "maximal T-disjoint ideal {} is not prime, witness {w:?}",
            best.display(s)
        )));
    }
    Ok(best)
}
