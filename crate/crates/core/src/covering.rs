//! Coverings of ideals by finite unions, and the avoidance statements that
//! go with them.
//!
//! Every operation returns a [`WitnessReport`]. Its verdict is computed from
//! a re-check of the witness it carries, never from the hypotheses alone:
//!
//! * hypotheses hold, conclusion holds: [`Verdict::Holds`];
//! * hypotheses hold, conclusion fails: an [`Error::TheoremViolation`];
//! * hypotheses unmet, conclusion holds anyway: [`Verdict::HypothesesUnmet`];
//! * hypotheses unmet, conclusion fails: [`Verdict::Fails`].

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{
    classify_ideal, enumerate_ideals, generated_product, ideal_power, ideal_sum, is_prime, is_subtractive,
    principal, principal_ideals, radical, t_semiprime_equivalence, IdealSet, MultiplicativeSet, Side,
};
use crate::laws::Check;
use crate::semimodule::FiniteSemimodule;
use crate::structure::Cayley;
use crate::sumtree::SumTree;
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    HypothesesUnmet,
}

/// Outcome of one covering or avoidance check. Indices are zero-based
/// positions in the list of ideals supplied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
    /// Witness produced by following the constructive argument.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructive_witness: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated_hypothesis: Option<String>,
}

impl WitnessReport {
    fn settle(unmet: Option<String>, conclusion: bool, theorem: &str) -> Result<Self> {
        let verdict = match (&unmet, conclusion) {
            (None, true) => Verdict::Holds,
            (None, false) => {
                return Err(Error::TheoremViolation(format!(
                    "{theorem}: hypotheses hold but no witness exists"
                )))
            }
            (Some(_), true) => Verdict::HypothesesUnmet,
            (Some(_), false) => Verdict::Fails,
        };
        Ok(Self {
            verdict,
            witness: None,
            constructive_witness: None,
            index: None,
            t: None,
            exponent: None,
            ideal: None,
            violated_hypothesis: unmet,
        })
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// `I ⊆ A_1 ∪ ... ∪ A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Covering {
    target: IdealSet,
    covers: Vec<IdealSet>,
}

fn union_of(universe: usize, sets: &[&IdealSet]) -> ElemSet {
    ElemSet::union_all(universe, sets.iter().map(|p| p.members()))
}

impl Covering {
    pub fn new(target: IdealSet, covers: Vec<IdealSet>) -> Result<Self> {
        let refs: Vec<&IdealSet> = covers.iter().collect();
        if !target.members().is_subset(&union_of(target.members().universe(), &refs)) {
            return Err(Error::NotCovering);
        }
        Ok(Self { target, covers })
    }

    pub fn target(&self) -> &IdealSet {
        &self.target
    }

    pub fn covers(&self) -> &[IdealSet] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    fn covered_without(&self, skip: usize) -> bool {
        let rest: Vec<&IdealSet> =
            self.covers.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, c)| c).collect();
        self.target.members().is_subset(&union_of(self.target.members().universe(), &rest))
    }

    /// No cover can be dropped.
    pub fn is_efficient(&self) -> bool {
        (0..self.covers.len()).all(|i| !self.covered_without(i))
    }

    /// Drops the leftmost redundant cover until none is redundant.
    pub fn efficient_reduce(&self) -> Covering {
        let mut c = self.clone();
        while let Some(i) = (0..c.covers.len()).find(|&i| c.covered_without(i)) {
            c.covers.remove(i);
        }
        c
    }

    /// Whether `∩_{j != i} (I ∩ A_j) = ∩_j (I ∩ A_j)` for every `i`; the
    /// witness is the first offending `i`.
    pub fn intersection_lemma(&self) -> Check {
        self.intersection_lemma_with(|a| a.members().intersection(self.target.members()))
    }

    /// The same equality for the covers themselves, without meeting `I`.
    pub fn raw_intersection_lemma(&self) -> Check {
        self.intersection_lemma_with(|a| a.members().clone())
    }

    fn intersection_lemma_with(&self, part: impl Fn(&IdealSet) -> ElemSet) -> Check {
        let u = self.target.members().universe();
        let parts: Vec<ElemSet> = self.covers.iter().map(part).collect();
        let all = ElemSet::intersection_all(u, &parts);
        crate::laws::first_failure1(parts.len(), |i| {
            let rest = parts.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, p)| p);
            ElemSet::intersection_all(u, rest) == all
        })
    }
}

/// Whether every two-sided ideal of `s` is subtractive.
pub fn all_ideals_subtractive(s: &Cayley, caps: &Caps) -> Result<Check> {
    for i in enumerate_ideals(s, Side::TwoSided, caps)? {
        if let Check::Fails(w) = is_subtractive(s, &i) {
            return Ok(Check::Fails(w));
        }
    }
    Ok(Check::Holds)
}

fn prime_or_false(s: &Cayley, p: &IdealSet) -> Result<bool> {
    match is_prime(s, p) {
        Ok(c) => Ok(c.holds()),
        Err(Error::NotProper) | Err(Error::Precondition(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// How the Behrens elements are summed in the constructive route.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumShape {
    LeftComb,
    Seeded(u64),
}

impl SumShape {
    fn tree(self, leaves: &[usize]) -> Option<SumTree> {
        match self {
            SumShape::LeftComb => SumTree::left_comb(leaves).ok(),
            SumShape::Seeded(seed) => SumTree::random_shape(leaves, seed).ok(),
        }
    }
}

/// `b_l`: a chain of products of elements of principal ideals, starting
/// from `a_i` for `i != l`, that stays outside `P_l`.
fn behrens_chain(
    s: &Cayley,
    a: &[usize],
    primes: &[&IdealSet],
    principals: &[IdealSet],
    l: usize,
) -> Option<usize> {
    let mut others = (0..a.len()).filter(|&i| i != l);
    let mut c = a[others.next()?];
    for i in others {
        let (pc, pa) = (&principals[c], &principals[a[i]]);
        c = pc.iter().find_map(|x| pa.iter().map(|y| s.mul(x, y)).find(|&v| !primes[l].contains(v)))?;
    }
    Some(c)
}

fn avoids(v: usize, primes: &[&IdealSet]) -> bool {
    primes.iter().all(|p| !p.contains(v))
}

/// The inductive argument: avoid all but one prime, and if every such
/// element falls into the remaining prime, sum the Behrens elements.
fn constructive_avoid(
    s: &Cayley,
    target: &ElemSet,
    primes: &[&IdealSet],
    principals: &[IdealSet],
    shape: SumShape,
) -> Option<usize> {
    match primes.len() {
        0 => target.first(),
        1 => target.difference(primes[0].members()).first(),
        n => {
            let mut a = Vec::with_capacity(n);
            for i in 0..n {
                let others: Vec<&IdealSet> =
                    primes.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, p)| *p).collect();
                let ai = constructive_avoid(s, target, &others, principals, shape)?;
                if !primes[i].contains(ai) {
                    return Some(ai);
                }
                a.push(ai);
            }
            let b: Vec<usize> =
                (0..n).map(|l| behrens_chain(s, &a, primes, principals, l)).collect::<Option<_>>()?;
            let v = shape.tree(&b)?.eval(s);
            (target.contains(v) && avoids(v, primes)).then_some(v)
        }
    }
}

fn scan_avoid(target: &ElemSet, primes: &[&IdealSet]) -> Option<usize> {
    target.iter().find(|&v| avoids(v, primes))
}

/// Elements `b_l` of `I` lying in every `P_i` except `P_l`, built by the
/// principal-product chain. Requires elements `a_i in I ∩ P_i` outside the
/// other primes.
pub fn behrens_elements(s: &Cayley, i: &IdealSet, primes: &[IdealSet]) -> Result<Vec<usize>> {
    let refs: Vec<&IdealSet> = primes.iter().collect();
    match primes.len() {
        0 => return Ok(vec![]),
        1 => {
            return i
                .members()
                .difference(primes[0].members())
                .first()
                .map(|b| vec![b])
                .ok_or_else(|| Error::HypothesesUnmet("I is contained in P_0".into()))
        }
        _ => {}
    }
    for (k, p) in primes.iter().enumerate() {
        if !prime_or_false(s, p)? {
            return Err(Error::HypothesesUnmet(format!("P_{k} is not prime")));
        }
    }
    let a: Vec<usize> = (0..primes.len())
        .map(|k| {
            i.iter()
                .find(|&x| {
                    primes[k].contains(x) && primes.iter().enumerate().all(|(j, p)| j == k || !p.contains(x))
                })
                .ok_or_else(|| {
                    Error::HypothesesUnmet(format!(
                        "no element of I lies in P_{k} and outside the other primes"
                    ))
                })
        })
        .collect::<Result<_>>()?;
    let principals = principal_ideals(s);
    (0..primes.len())
        .map(|l| {
            let b = behrens_chain(s, &a, &refs, &principals, l)
                .filter(|&b| {
                    i.contains(b)
                        && !primes[l].contains(b)
                        && primes.iter().enumerate().all(|(k, p)| k == l || p.contains(b))
                })
                .ok_or_else(|| {
                    Error::TheoremViolation(format!("Behrens element b_{l} could not be built"))
                })?;
            Ok(b)
        })
        .collect()
}

/// An element of `I` outside every `P_i`, found by scanning and by the
/// constructive route. Primeness is only required from three ideals on.
pub fn avoidance_witness(s: &Cayley, i: &IdealSet, primes: &[IdealSet]) -> Result<WitnessReport> {
    avoidance_witness_shaped(s, i, primes, SumShape::LeftComb)
}

pub fn avoidance_witness_shaped(
    s: &Cayley,
    i: &IdealSet,
    primes: &[IdealSet],
    shape: SumShape,
) -> Result<WitnessReport> {
    let refs: Vec<&IdealSet> = primes.iter().collect();
    let mut unmet = None;
    for (k, p) in primes.iter().enumerate() {
        if unmet.is_none() && !is_subtractive(s, p).holds() {
            unmet = Some(format!("subtractivity of P_{k}"));
        }
    }
    if primes.len() >= 3 {
        for (k, p) in primes.iter().enumerate() {
            if unmet.is_none() && !prime_or_false(s, p)? {
                unmet = Some(format!("primeness of P_{k}"));
            }
        }
    }
    if let Some(k) = primes.iter().position(|p| i.is_subset(p)) {
        unmet.get_or_insert(format!("I is contained in P_{k}"));
    }
    let principals = principal_ideals(s);
    let witness = scan_avoid(i.members(), &refs);
    let constructive = constructive_avoid(s, i.members(), &refs, &principals, shape);
    let ok = |w: Option<usize>| w.is_some_and(|v| i.contains(v) && avoids(v, &refs));
    let conclusion = if unmet.is_none() {
        if ok(witness) && !ok(constructive) {
            return Err(Error::TheoremViolation("the constructive avoidance route found no witness".into()));
        }
        ok(witness) && ok(constructive)
    } else {
        ok(witness)
    };
    let mut r = WitnessReport::settle(unmet, conclusion, "prime avoidance for ringoids")?;
    r.witness = witness;
    r.constructive_witness = constructive;
    Ok(r)
}

fn count_failures(flags: &[bool]) -> usize {
    flags.iter().filter(|&&f| !f).count()
}

fn containing_index(i: &IdealSet, covers: &[IdealSet]) -> Option<usize> {
    covers.iter().position(|c| i.is_subset(c))
}

fn require_covering(i: &IdealSet, covers: &[IdealSet]) -> Result<()> {
    Covering::new(i.clone(), covers.to_vec()).map(|_| ())
}

/// If `I` lies in a union of subtractive ideals of a semiring, at least
/// `n - 2` of them prime, then it lies in one of them.
pub fn semiring_avoidance(s: &Cayley, i: &IdealSet, covers: &[IdealSet]) -> Result<WitnessReport> {
    s.require_semiring()?;
    require_covering(i, covers)?;
    let n = covers.len();
    let mut unmet = covers
        .iter()
        .position(|c| !is_subtractive(s, c).holds())
        .map(|k| format!("subtractivity (ideal {k} is not subtractive)"));
    let prime: Vec<bool> = covers.iter().map(|c| prime_or_false(s, c)).collect::<Result<_>>()?;
    if unmet.is_none() && count_failures(&prime) > 2.min(n) {
        unmet = Some(format!("primeness ({} of {n} ideals are not prime)", count_failures(&prime)));
    }
    let index = containing_index(i, covers);
    let mut r = WitnessReport::settle(unmet, index.is_some(), "prime avoidance for semirings")?;
    r.index = index;
    Ok(r)
}

/// Removes primes contained in another listed prime, keeping first copies.
fn maximal_primes<'a>(primes: &[&'a IdealSet]) -> Vec<&'a IdealSet> {
    let mut out: Vec<&IdealSet> = Vec::new();
    for (k, p) in primes.iter().enumerate() {
        let dominated = primes.iter().enumerate().any(|(j, q)| j != k && p.is_subset(q) && (p != q || j < k));
        if !dominated {
            out.push(p);
        }
    }
    out
}

fn davis_constructive(s: &Cayley, x: usize, i: &IdealSet, primes: &[&IdealSet]) -> Option<usize> {
    let principals = principal_ideals(s);
    let kept = maximal_primes(primes);
    let (k_set, l_set): (Vec<&IdealSet>, Vec<&IdealSet>) = kept.iter().copied().partition(|p| p.contains(x));
    let z = constructive_avoid(s, i.members(), &k_set, &principals, SumShape::LeftComb)?;
    let w = match l_set.split_first() {
        None => s.one()?,
        Some((first, rest)) => {
            let product = rest.iter().fold((*first).clone(), |acc, p| generated_product(s, &acc, p));
            constructive_avoid(s, product.members(), &k_set, &principals, SumShape::LeftComb)?
        }
    };
    let j = generated_product(s, &principal(s, w), &principal(s, z));
    let y = constructive_avoid(s, j.members(), &k_set, &principals, SumShape::LeftComb)?;
    (i.contains(y) && avoids(s.add(x, y), primes)).then_some(y)
}

/// A `y in I` with `x + y` outside every prime, given `(x) + I` is not
/// covered by them.
pub fn davis_witness(s: &Cayley, x: usize, i: &IdealSet, primes: &[IdealSet]) -> Result<WitnessReport> {
    s.require_semiring()?;
    s.check_element(x)?;
    let refs: Vec<&IdealSet> = primes.iter().collect();
    let mut unmet = None;
    for (k, p) in primes.iter().enumerate() {
        if unmet.is_none() && !is_subtractive(s, p).holds() {
            unmet = Some(format!("subtractivity of P_{k}"));
        }
        if unmet.is_none() && !prime_or_false(s, p)? {
            unmet = Some(format!("primeness of P_{k}"));
        }
    }
    let sum = ideal_sum(s, &principal(s, x), i)?;
    if unmet.is_none() && sum.members().is_subset(&union_of(s.size(), &refs)) {
        unmet = Some("(x) + I is contained in the union of the primes".into());
    }
    let witness = i.iter().find(|&y| avoids(s.add(x, y), &refs));
    let constructive = if unmet.is_none() { davis_constructive(s, x, i, &refs) } else { None };
    if unmet.is_none() && witness.is_some() && constructive.is_none() {
        return Err(Error::TheoremViolation("the product-of-primes route found no witness".into()));
    }
    let mut r = WitnessReport::settle(unmet, witness.is_some(), "Davis avoidance")?;
    r.witness = witness;
    r.constructive_witness = constructive;
    Ok(r)
}

/// Least `k` with `I^k ⊆ ∩ A_i` for an efficient covering with `n >= 3`
/// over a commutative semiring whose ideals are all subtractive. The
/// search bound is the number of ideals of `s`.
pub fn mccoy_exponent(s: &Cayley, c: &Covering, caps: &Caps) -> Result<WitnessReport> {
    s.require_commutative_semiring()?;
    let ideals = enumerate_ideals(s, Side::TwoSided, caps)?;
    let mut unmet = None;
    if let Check::Fails(w) = all_ideals_subtractive(s, caps)? {
        unmet = Some(format!("subtractive semiring (witness {w:?})"));
    } else if !c.is_efficient() {
        unmet = Some("efficient covering".into());
    } else if c.len() < 3 {
        unmet = Some("at least three covers".into());
    }
    if unmet.is_none() {
        if let Check::Fails(w) = c.intersection_lemma() {
            return Err(Error::TheoremViolation(format!(
                "intersection lemma fails when dropping cover {w:?}"
            )));
        }
    }
    let meet = ElemSet::intersection_all(s.size(), c.covers().iter().map(IdealSet::members));
    let exponent = (1..=ideals.len()).find(|&k| ideal_power(s, c.target(), k).members().is_subset(&meet));
    let mut r = WitnessReport::settle(unmet, exponent.is_some(), "McCoy exponent")?;
    r.exponent = exponent;
    Ok(r)
}

/// Which property at least `n - 2` covers must have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnionMode {
    Radical,
    Semiprime,
}

/// Radical and semiprime avoidance over a subtractive commutative semiring.
pub fn union_avoidance_suite(
    s: &Cayley,
    i: &IdealSet,
    covers: &[IdealSet],
    mode: UnionMode,
    caps: &Caps,
) -> Result<WitnessReport> {
    s.require_commutative_semiring()?;
    require_covering(i, covers)?;
    let mut unmet = None;
    if let Check::Fails(w) = all_ideals_subtractive(s, caps)? {
        unmet = Some(format!("subtractive semiring (witness {w:?})"));
    }
    let flags: Vec<bool> = covers
        .iter()
        .map(|c| -> Result<bool> {
            Ok(match mode {
                UnionMode::Radical => radical(s, c)? == *c,
                UnionMode::Semiprime => c.is_proper() && classify_ideal(s, c, None)?.semiprime.holds(),
            })
        })
        .collect::<Result<_>>()?;
    if unmet.is_none() && count_failures(&flags) > 2.min(covers.len()) {
        unmet = Some(format!("{mode:?} covers").to_lowercase());
    }
    let index = containing_index(i, covers);
    let mut r = WitnessReport::settle(unmet, index.is_some(), "union avoidance")?;
    r.index = index;
    Ok(r)
}

/// `tI ⊆ P_j` for some `t in T` and some cover, when every cover is
/// T-semiprime and 2-absorbing. `t` comes from the residual characterisation.
pub fn t_semiprime_avoidance(
    s: &Cayley,
    i: &IdealSet,
    covers: &[IdealSet],
    t_set: &MultiplicativeSet,
    caps: &Caps,
) -> Result<WitnessReport> {
    s.require_commutative_semiring()?;
    require_covering(i, covers)?;
    let mut unmet = None;
    if let Check::Fails(w) = all_ideals_subtractive(s, caps)? {
        unmet = Some(format!("subtractive semiring (witness {w:?})"));
    }
    let mut residual_t = Vec::with_capacity(covers.len());
    for (k, p) in covers.iter().enumerate() {
        if !p.is_proper() || !p.members().is_disjoint(t_set.members()) {
            unmet.get_or_insert(format!("cover {k} meets T"));
            residual_t.push(None);
            continue;
        }
        let class = classify_ideal(s, p, Some(t_set))?;
        if !class.two_absorbing.holds() {
            unmet.get_or_insert(format!("cover {k} is not 2-absorbing"));
            residual_t.push(None);
            continue;
        }
        if !class.t_semiprime.as_ref().is_some_and(|t| t.holds()) {
            unmet.get_or_insert(format!("cover {k} is not T-semiprime"));
        }
        let eq = t_semiprime_equivalence(s, p, t_set)?;
        if !eq.holds() {
            return Err(Error::TheoremViolation(format!(
                "residual characterisation fails for cover {k}: {eq:?}"
            )));
        }
        residual_t.push(eq.residual_semiprime);
    }
    let found = covers.iter().enumerate().find_map(|(k, p)| {
        let t = residual_t[k]?;
        i.iter().all(|a| p.contains(s.mul(t, a))).then_some((t, k))
    });
    let mut r = WitnessReport::settle(unmet, found.is_some(), "T-semiprime avoidance")?;
    if let Some((t, k)) = found {
        r.t = Some(t);
        r.index = Some(k);
    }
    Ok(r)
}

/// An `M`-annihilator prime containing `I`, when `I` lies in a finite union
/// of `M`-annihilator ideals. Covers must be annihilators of nonzero
/// subsemimodules, hence proper.
pub fn annihilator_avoidance(
    m: &FiniteSemimodule,
    i: &IdealSet,
    covers: &[IdealSet],
    caps: &Caps,
) -> Result<WitnessReport> {
    let s = m.semiring();
    s.require_commutative_semiring()?;
    if m.is_zero_module() {
        return Err(Error::Precondition("zero semimodule".into()));
    }
    require_covering(i, covers)?;
    let family = m.annihilator_ideals(caps)?;
    let mut unmet = None;
    for (k, c) in covers.iter().enumerate() {
        if !c.is_proper() {
            unmet.get_or_insert(format!("cover {k} is the whole semiring"));
        } else if !family.iter().any(|a| a.members() == c.members()) {
            unmet.get_or_insert(format!("cover {k} is not an M-annihilator ideal"));
        }
    }
    let maximal: Vec<&IdealSet> =
        family.iter().filter(|a| !family.iter().any(|b| b != *a && a.is_subset(b))).collect();
    for p in &maximal {
        if !prime_or_false(s, p)? || !is_subtractive(s, p).holds() {
            return Err(Error::TheoremViolation(format!(
                "maximal annihilator {} is not a subtractive prime",
                p.display(s)
            )));
        }
    }
    let mut chosen = None;
    for c in covers {
        if i.is_subset(c) && prime_or_false(s, c)? {
            chosen = Some(c.clone());
            break;
        }
    }
    if chosen.is_none() {
        chosen = covers
            .iter()
            .filter_map(|c| maximal.iter().find(|p| c.is_subset(p)))
            .find(|p| i.is_subset(p))
            .map(|p| (*p).clone());
    }
    let valid =
        chosen.as_ref().is_some_and(|p| i.is_subset(p) && family.iter().any(|a| a.members() == p.members()));
    let mut r = WitnessReport::settle(unmet, valid, "annihilator avoidance")?;
    r.ideal = chosen;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::direct_product;
    use crate::ideal::generate_ideal;
    use crate::standard::{boolean, chain, f2xy_square};

    fn ideal(s: &Cayley, xs: &[usize]) -> IdealSet {
        generate_ideal(s, xs, Side::TwoSided).unwrap()
    }

    fn b2() -> Cayley {
        direct_product(&[boolean(), boolean()], &Caps::default()).unwrap()
    }

    #[test]
    fn reduce_coverings() {
        let t = chain(3);
        let a = ideal(&t, &[1]);
        let c = Covering::new(a.clone(), vec![a.clone(), a.clone()]).unwrap();
        assert!(!c.is_efficient());
        assert_eq!(c.efficient_reduce().covers(), std::slice::from_ref(&a));
        assert_eq!(Covering::new(IdealSet::whole(&t), vec![a]), Err(Error::NotCovering));
        let r = f2xy_square();
        let (x, y, xy) = (2, 4, 6);
        let lines = vec![ideal(&r, &[x]), ideal(&r, &[y]), ideal(&r, &[xy])];
        let c = Covering::new(ideal(&r, &[x, y]), lines).unwrap();
        assert!(c.is_efficient());
        assert_eq!(c.efficient_reduce(), c);
    }

    #[test]
    fn boolean_square_avoidance() {
        let s = b2();
        let (p1, p2) = (ideal(&s, &[1]), ideal(&s, &[2]));
        let r = avoidance_witness(&s, &IdealSet::whole(&s), &[p1.clone(), p2.clone()]).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.witness, Some(3));
        assert_eq!(r.constructive_witness, Some(3));
        assert_eq!(behrens_elements(&s, &IdealSet::whole(&s), &[p1, p2]).unwrap(), vec![2, 1]);
    }

    #[test]
    fn avoidance_with_contained_ideal_fails() {
        let t = chain(3);
        let p = ideal(&t, &[1]);
        let r = avoidance_witness(&t, &p, std::slice::from_ref(&p)).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        assert!(r.violated_hypothesis.is_some());
    }

    #[test]
    fn chain_semiring_avoidance() {
        let t = chain(3);
        let a = ideal(&t, &[1]);
        let r = semiring_avoidance(&t, &a, &[a.clone(), IdealSet::whole(&t)]).unwrap();
        assert_eq!((r.verdict, r.index), (Verdict::Holds, Some(0)));
        let r = union_avoidance_suite(
            &t,
            &a,
            &[a.clone(), IdealSet::whole(&t)],
            UnionMode::Semiprime,
            &Caps::default(),
        )
        .unwrap();
        assert_eq!(r.index, Some(0));
    }

    #[test]
    fn davis_on_boolean_square() {
        let s = b2();
        let r = davis_witness(&s, 1, &ideal(&s, &[2]), &[ideal(&s, &[1])]).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.witness, Some(2));
        assert_eq!(s.add(1, 2), 3);
        let r = davis_witness(&s, 3, &ideal(&s, &[2]), &[]).unwrap();
        assert_eq!(r.witness, Some(0));
    }

    #[test]
    fn mccoy_on_f2xy() {
        let r = f2xy_square();
        let (x, y, xy) = (2, 4, 6);
        let lines = vec![ideal(&r, &[x]), ideal(&r, &[y]), ideal(&r, &[xy])];
        let c = Covering::new(ideal(&r, &[x, y]), lines).unwrap();
        let rep = mccoy_exponent(&r, &c, &Caps::default()).unwrap();
        assert_eq!((rep.verdict, rep.exponent), (Verdict::Holds, Some(2)));
        assert!(c.intersection_lemma().holds());
    }

    #[test]
    fn t_semiprime_on_chain() {
        let t = chain(3);
        let a = ideal(&t, &[1]);
        let unit = MultiplicativeSet::generated(&t, &[]).unwrap();
        let r = t_semiprime_avoidance(&t, &a, std::slice::from_ref(&a), &unit, &Caps::default()).unwrap();
        assert_eq!((r.verdict, r.t, r.index), (Verdict::Holds, Some(2), Some(0)));
    }

    #[test]
    fn annihilator_avoidance_on_boolean_square() {
        let s = b2();
        let m = FiniteSemimodule::regular(&s).unwrap();
        let (a1, a2) = (m.annihilator(&[1]).unwrap(), m.annihilator(&[2]).unwrap());
        let zero = ideal(&s, &[]);
        let r = annihilator_avoidance(&m, &zero, &[a1, a2], &Caps::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.ideal.is_some());
    }
}
