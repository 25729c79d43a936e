//! Prime spectra, Zariski closed sets and the compactly packed conditions.

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::covering::all_ideals_subtractive;
use crate::error::{Error, Result};
use crate::ideal::{
    classify_ideal, enumerate_ideals, ideal_sum, intersect, is_prime, is_subtractive, principal, radical,
    IdealSet, Side,
};
use crate::laws::{first_failure1, first_failure2, Check};
use crate::structure::Cayley;
use crate::Caps;

/// All proper two-sided prime ideals, sorted.
pub fn spec_of(s: &Cayley, caps: &Caps) -> Result<Vec<IdealSet>> {
    let mut out = Vec::new();
    for i in enumerate_ideals(s, Side::TwoSided, caps)? {
        if i.is_proper() && is_prime(s, &i)?.holds() {
            out.push(i);
        }
    }
    Ok(out)
}

/// `V(I)`, the primes containing `I`, and its complement `D(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingSets {
    pub v: Vec<IdealSet>,
    pub d: Vec<IdealSet>,
}

pub fn vanishing_sets(spec: &[IdealSet], i: &IdealSet) -> VanishingSets {
    let (v, d) = spec.iter().cloned().partition(|p| i.is_subset(p));
    VanishingSets { v, d }
}

fn v_mask(spec: &[IdealSet], i: &ElemSet) -> u64 {
    spec.iter().enumerate().filter(|(_, p)| i.is_subset(p.members())).fold(0, |m, (k, _)| m | 1 << k)
}

/// The five equivalent conditions, evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingConditions {
    /// Any ideal inside a union of primes lies in one of them.
    pub ideal_targets: bool,
    /// The same, for prime targets only.
    pub prime_targets: bool,
    /// Every prime is `√(x)` for some `x`.
    pub primes_principal_radical: bool,
    /// Every semiprime ideal is `√(x)` for some `x`.
    pub semiprimes_principal_radical: bool,
    /// Every radical ideal is `√(x)` for some `x`.
    pub radicals_principal_radical: bool,
}

impl PackingConditions {
    pub fn values(&self) -> [bool; 5] {
        [
            self.ideal_targets,
            self.prime_targets,
            self.primes_principal_radical,
            self.semiprimes_principal_radical,
            self.radicals_principal_radical,
        ]
    }

    pub fn agree(&self) -> bool {
        self.values().iter().all(|&v| v == self.ideal_targets)
    }
}

/// An ideal inside a union of primes but inside none of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingCounterexample {
    pub ideal: IdealSet,
    pub family: Vec<IdealSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub primes: Vec<IdealSet>,
    /// Every prime is subtractive.
    pub weak_gaussian: bool,
    pub compactly_packed: bool,
    pub conditions: PackingConditions,
    /// For each prime, the least `x` with `√(x) = P`, if any.
    pub radical_principal_map: Vec<Option<usize>>,
    /// `√(x)` equals the intersection of the primes containing `x`.
    pub radical_as_prime_intersection: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<PackingCounterexample>,
}

/// For every subset of the spectrum (as a bitmask), the union of its primes.
fn subset_unions(u: usize, spec: &[IdealSet]) -> Vec<ElemSet> {
    let mut unions = vec![ElemSet::empty(u); 1 << spec.len()];
    for mask in 1usize..unions.len() {
        let low = mask.trailing_zeros() as usize;
        unions[mask] = unions[mask & (mask - 1)].union(spec[low].members());
    }
    unions
}

/// First `(target, family)` where the target lies in the family's union but
/// in none of its members.
fn packing_failure<'a>(
    targets: impl IntoIterator<Item = &'a IdealSet>,
    spec: &[IdealSet],
    unions: &[ElemSet],
) -> Option<(IdealSet, u64)> {
    for i in targets {
        let inside = v_mask(spec, i.members());
        for (mask, u) in unions.iter().enumerate().skip(1) {
            if (mask as u64) & inside == 0 && i.members().is_subset(u) {
                return Some((i.clone(), mask as u64));
            }
        }
    }
    None
}

/// Evaluates the compactly packed battery on a commutative semiring.
pub fn compactly_packed_battery(s: &Cayley, caps: &Caps) -> Result<SpectrumReport> {
    s.require_commutative_semiring()?;
    let ideals = enumerate_ideals(s, Side::TwoSided, caps)?;
    let spec = spec_of(s, caps)?;
    if spec.len() > caps.spectrum {
        return Err(Error::CapExceeded {
            what: "spectrum subset enumeration",
            size: spec.len(),
            cap: caps.spectrum,
        });
    }
    let unions = subset_unions(s.size(), &spec);
    let ideal_failure = packing_failure(&ideals, &spec, &unions);
    let prime_failure = packing_failure(&spec, &spec, &unions);

    let principal_radicals: Vec<IdealSet> =
        s.elements().map(|x| radical(s, &principal(s, x))).collect::<Result<_>>()?;
    let principal_radical_of =
        |i: &IdealSet| principal_radicals.iter().position(|r| r.members() == i.members());

    let mut semiprimes = Vec::new();
    let mut radicals = Vec::new();
    for i in &ideals {
        let class = classify_ideal(s, i, None)?;
        if class.proper && class.semiprime.holds() {
            semiprimes.push(i);
        }
        if class.radical_ideal == Some(Check::Holds) {
            radicals.push(i);
        }
    }
    let radical_principal_map: Vec<Option<usize>> = spec.iter().map(principal_radical_of).collect();

    let radical_as_prime_intersection = first_failure1(s.size(), |x| {
        let containing = spec.iter().filter(|p| p.contains(x)).map(IdealSet::members);
        ElemSet::intersection_all(s.size(), containing) == *principal_radicals[x].members()
    });

    let conditions = PackingConditions {
        ideal_targets: ideal_failure.is_none(),
        prime_targets: prime_failure.is_none(),
        primes_principal_radical: radical_principal_map.iter().all(Option::is_some),
        semiprimes_principal_radical: semiprimes.iter().all(|i| principal_radical_of(i).is_some()),
        radicals_principal_radical: radicals.iter().all(|i| principal_radical_of(i).is_some()),
    };
    let counterexample = ideal_failure.map(|(ideal, mask)| PackingCounterexample {
        ideal,
        family: spec.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| p.clone()).collect(),
    });
    Ok(SpectrumReport {
        weak_gaussian: spec.iter().all(|p| is_subtractive(s, p).holds()),
        compactly_packed: conditions.ideal_targets,
        conditions,
        radical_principal_map,
        radical_as_prime_intersection,
        counterexample,
        primes: spec,
    })
}

/// Given points of `D(I)` in a semiring whose ideals are all subtractive,
/// the least `x in I` with every point in `D(x)`.
pub fn principal_open_refinement(
    s: &Cayley,
    points: &[IdealSet],
    i: &IdealSet,
    caps: &Caps,
) -> Result<usize> {
    s.require_semiring()?;
    if let Check::Fails(w) = all_ideals_subtractive(s, caps)? {
        return Err(Error::HypothesesUnmet(format!("semiring is not subtractive, witness {w:?}")));
    }
    for (k, p) in points.iter().enumerate() {
        if !p.is_proper() || !is_prime(s, p)?.holds() {
            return Err(Error::HypothesesUnmet(format!("point {k} is not a prime")));
        }
        if i.is_subset(p) {
            return Err(Error::HypothesesUnmet(format!("point {k} is not in D(I)")));
        }
    }
    let x = i
        .iter()
        .find(|&x| points.iter().all(|p| !p.contains(x)))
        .ok_or_else(|| Error::TheoremViolation("no principal open refinement".into()))?;
    let spec = spec_of(s, caps)?;
    let dx = vanishing_sets(&spec, &principal(s, x)).d;
    let di = vanishing_sets(&spec, i).d;
    if !points.iter().all(|p| dx.contains(p)) || !dx.iter().all(|p| di.contains(p)) {
        return Err(Error::TheoremViolation(format!(
            "D({}) does not sit between the points and D(I)",
            s.label(x)
        )));
    }
    Ok(x)
}

/// The closed-set axioms of `{V(I)}`; witnesses are pairs of positions in
/// the sorted ideal list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZariskiReport {
    pub empty_closed: bool,
    pub whole_closed: bool,
    /// `V(I) ∪ V(J) = V(I ∩ J)`.
    pub finite_unions: Check,
    /// `V(I) ∩ V(J) = V(I + J)`.
    pub intersections: Check,
}

impl ZariskiReport {
    pub fn holds(&self) -> bool {
        self.empty_closed && self.whole_closed && self.finite_unions.holds() && self.intersections.holds()
    }
}

pub fn zariski_axioms(s: &Cayley, caps: &Caps) -> Result<ZariskiReport> {
    s.require_semiring()?;
    let ideals = enumerate_ideals(s, Side::TwoSided, caps)?;
    let spec = spec_of(s, caps)?;
    if spec.len() > 64 {
        return Err(Error::CapExceeded { what: "spectrum bitmask", size: spec.len(), cap: 64 });
    }
    let masks: Vec<u64> = ideals.iter().map(|i| v_mask(&spec, i.members())).collect();
    let all = if spec.len() == 64 { u64::MAX } else { (1u64 << spec.len()) - 1 };
    let n = ideals.len();
    let unions = first_failure2(n, |a, b| {
        intersect(&ideals[a], &ideals[b]).is_ok_and(|m| v_mask(&spec, m.members()) == masks[a] | masks[b])
    });
    let meets = first_failure2(n, |a, b| {
        ideal_sum(s, &ideals[a], &ideals[b]).is_ok_and(|m| v_mask(&spec, m.members()) == masks[a] & masks[b])
    });
    Ok(ZariskiReport {
        empty_closed: masks.contains(&0),
        whole_closed: masks.contains(&all),
        finite_unions: unions,
        intersections: meets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::direct_product;
    use crate::ideal::generate_ideal;
    use crate::standard::{boolean, boolean_lattice, chain, f2xy_square};

    fn vecs(v: &[IdealSet]) -> Vec<Vec<usize>> {
        v.iter().map(IdealSet::to_vec).collect()
    }

    #[test]
    fn small_spectra() {
        let caps = Caps::default();
        assert_eq!(vecs(&spec_of(&boolean(), &caps).unwrap()), vec![vec![0]]);
        assert_eq!(vecs(&spec_of(&chain(3), &caps).unwrap()), vec![vec![0, 1]]);
        assert_eq!(vecs(&spec_of(&f2xy_square(), &caps).unwrap()), vec![vec![0, 2, 4, 6]]);
    }

    #[test]
    fn chain_vanishing_sets() {
        let t = chain(3);
        let spec = spec_of(&t, &Caps::default()).unwrap();
        let a = generate_ideal(&t, &[1], Side::TwoSided).unwrap();
        assert_eq!(vanishing_sets(&spec, &a).v, spec);
        assert_eq!(vanishing_sets(&spec, &IdealSet::whole(&t)).d, spec);
    }

    #[test]
    fn packed_examples() {
        let caps = Caps::default();
        let r = compactly_packed_battery(&chain(3), &caps).unwrap();
        assert!(r.compactly_packed && r.conditions.agree() && r.weak_gaussian);
        assert_eq!(r.radical_principal_map, vec![Some(0)]);
        let r = compactly_packed_battery(&boolean(), &caps).unwrap();
        assert_eq!(r.radical_principal_map, vec![Some(0)]);
        assert!(compactly_packed_battery(&boolean_lattice(2), &caps).unwrap().compactly_packed);
    }

    #[test]
    fn refinement_and_topology() {
        let caps = Caps::default();
        let s = direct_product(&[boolean(), boolean()], &caps).unwrap();
        let p = generate_ideal(&s, &[1], Side::TwoSided).unwrap();
        assert_eq!(principal_open_refinement(&s, &[p], &IdealSet::whole(&s), &caps).unwrap(), 2);
        let t = chain(3);
        let spec = spec_of(&t, &caps).unwrap();
        assert_eq!(principal_open_refinement(&t, &spec, &IdealSet::whole(&t), &caps).unwrap(), 2);
        for s in [boolean(), chain(3), s, f2xy_square()] {
            assert!(zariski_axioms(&s, &caps).unwrap().holds());
        }
    }
}
