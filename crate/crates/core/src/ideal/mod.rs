//! Ideals of finite ringoids: generation, enumeration and arithmetic.

mod annihilator;
mod arith;
mod classify;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

pub use annihilator::{annihilator, AnnihilatorSide};
pub use arith::{generated_product, ideal_power, ideal_sum, intersect, set_product};
pub use classify::{
    classify_ideal, is_prime, is_subtractive, krull_separation, prime_criteria, radical, residual,
    t_semiprime_equivalence, IdealClassification, MultiplicativeSet, PrimeCriteria, TSemiprime,
    TSemiprimeEquivalence,
};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::structure::Cayley;
use crate::Caps;

/// Which multiplications an ideal absorbs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Closed under `r * a`.
    Left,
    /// Closed under `a * r`.
    Right,
    TwoSided,
}

impl Side {
    fn left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    fn right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }

    /// The weakest side both ideals satisfy, if any.
    pub fn meet(self, other: Side) -> Option<Side> {
        match (self, other) {
            (a, b) if a == b => Some(a),
            (Side::TwoSided, b) => Some(b),
            (a, Side::TwoSided) => Some(a),
            _ => None,
        }
    }
}

/// A one- or two-sided ideal, stored as a bitset over the carrier.
///
/// The ambient structure is not stored; every operation takes it explicitly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSet {
    members: ElemSet,
    side: Side,
}

impl IdealSet {
    /// Wraps `members` after checking that it is an ideal of the given side.
    pub fn new(s: &Cayley, side: Side, members: ElemSet) -> Result<Self> {
        if members.universe() != s.size() {
            return Err(Error::Invalid("member set has the wrong universe".into()));
        }
        if !is_ideal(s, &members, side) {
            return Err(Error::Invalid(format!("{:?} is not a {:?} ideal of {}", members, side, s.name())));
        }
        Ok(Self { members, side })
    }

    pub(crate) fn from_closed(side: Side, members: ElemSet) -> Self {
        Self { members, side }
    }

    pub fn whole(s: &Cayley) -> Self {
        Self::from_closed(Side::TwoSided, ElemSet::full(s.size()))
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.members.is_full()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    /// Same members, viewed as an ideal of a weaker side.
    pub fn with_side(mut self, side: Side) -> Self {
        self.side = side;
        self
    }

    /// Renders the members with the structure's labels, e.g. `{0,a}`.
    pub fn display(&self, s: &Cayley) -> String {
        let parts: Vec<&str> = self.iter().map(|x| s.label(x)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.side, self.members)
    }
}

impl Serialize for IdealSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

/// Whether `set` is a nonempty additive submagma absorbing the side's
/// multiplications.
pub fn is_ideal(s: &Cayley, set: &ElemSet, side: Side) -> bool {
    if set.is_empty() {
        return false;
    }
    for a in set {
        for b in set {
            if !set.contains(s.add(a, b)) {
                return false;
            }
        }
        for r in s.elements() {
            if side.left() && !set.contains(s.mul(r, a)) {
                return false;
            }
            if side.right() && !set.contains(s.mul(a, r)) {
                return false;
            }
        }
    }
    true
}

/// Extends an already closed set by `extra` and closes again.
///
/// Pairs inside `base` are assumed closed; every pair involving a new element
/// is processed when the later of the two leaves the worklist.
pub(crate) fn close_from(s: &Cayley, base: &ElemSet, extra: &[usize], side: Side) -> ElemSet {
    let mut set = base.clone();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &x in extra {
        if set.insert(x) {
            queue.push_back(x);
        }
    }
    while let Some(w) = queue.pop_front() {
        let members: Vec<usize> = set.to_vec();
        for y in members {
            for v in [s.add(w, y), s.add(y, w)] {
                if set.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        for r in s.elements() {
            if side.left() {
                let v = s.mul(r, w);
                if set.insert(v) {
                    queue.push_back(v);
                }
            }
            if side.right() {
                let v = s.mul(w, r);
                if set.insert(v) {
                    queue.push_back(v);
                }
            }
        }
    }
    set
}

fn zero_for_empty_generators(s: &Cayley) -> Result<usize> {
    let z = s.require_zero()?;
    if s.elements().all(|x| s.mul(z, x) == z && s.mul(x, z) == z) {
        Ok(z)
    } else {
        Err(Error::Precondition("empty generator set needs an absorbing zero".into()))
    }
}

/// The least ideal of the given side containing `generators`.
///
/// With no generators this is `{0}`, which requires an absorbing zero.
pub fn generate_ideal(s: &Cayley, generators: &[usize], side: Side) -> Result<IdealSet> {
    for &x in generators {
        s.check_element(x)?;
    }
    let seed: Vec<usize> =
        if generators.is_empty() { vec![zero_for_empty_generators(s)?] } else { generators.to_vec() };
    Ok(IdealSet::from_closed(side, close_from(s, &ElemSet::empty(s.size()), &seed, side)))
}

/// The two-sided principal ideal `(x)`.
pub fn principal(s: &Cayley, x: usize) -> IdealSet {
    IdealSet::from_closed(Side::TwoSided, close_from(s, &ElemSet::empty(s.size()), &[x], Side::TwoSided))
}

/// Principal ideals of every element, indexed by element.
pub fn principal_ideals(s: &Cayley) -> Vec<IdealSet> {
    s.elements().map(|x| principal(s, x)).collect()
}

/// All ideals of the given side, sorted and without duplicates.
///
/// Grows the lattice from the principal ideals: every ideal `J` is reached
/// from `(x)` for some `x in J` by repeatedly adjoining an element of `J` and
/// closing, so the search is complete.
pub fn enumerate_ideals(s: &Cayley, side: Side, caps: &Caps) -> Result<Vec<IdealSet>> {
    if s.size() > caps.ideal_enumeration {
        return Err(Error::CapExceeded {
            what: "ideal enumeration carrier",
            size: s.size(),
            cap: caps.ideal_enumeration,
        });
    }
    let empty = ElemSet::empty(s.size());
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut queue: VecDeque<ElemSet> = VecDeque::new();
    for x in s.elements() {
        let p = close_from(s, &empty, &[x], side);
        if seen.insert(p.clone()) {
            queue.push_back(p);
        }
    }
    while let Some(ideal) = queue.pop_front() {
        for x in ideal.complement().iter() {
            let grown = close_from(s, &ideal, &[x], side);
            if !seen.contains(&grown) {
                seen.insert(grown.clone());
                queue.push_back(grown);
            }
        }
    }
    let mut out: Vec<IdealSet> = seen.into_iter().map(|m| IdealSet::from_closed(side, m)).collect();
    out.sort();
    Ok(out)
}
