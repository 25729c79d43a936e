//! Exhaustive law checking by quantifier elimination over the carrier.
//!
//! Every universally quantified law is decided by scanning all index tuples in
//! lexicographic order; a failing law carries the least offending tuple, so
//! reports are deterministic. The outermost quantifier is split across rayon
//! workers with `find_map_first`, which preserves that minimality.

use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::structure::Cayley;

/// Outcome of a universally quantified check.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Holds,
    /// The least counterexample tuple. Empty when the law fails for a
    /// structural reason (for instance, no zero element was declared).
    Fails(Vec<usize>),
}

impl Check {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Check::Holds => None,
            Check::Fails(w) => Some(w),
        }
    }

    pub fn from_witness(witness: Option<Vec<usize>>) -> Self {
        witness.map_or(Check::Holds, Check::Fails)
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Check::Holds => {
                let mut st = serializer.serialize_struct("Check", 1)?;
                st.serialize_field("holds", &true)?;
                st.end()
            }
            Check::Fails(w) => {
                let mut st = serializer.serialize_struct("Check", 2)?;
                st.serialize_field("holds", &false)?;
                st.serialize_field("witness", w)?;
                st.end()
            }
        }
    }
}

pub(crate) fn first_failure1(n: usize, ok: impl Fn(usize) -> bool) -> Check {
    Check::from_witness((0..n).find(|&a| !ok(a)).map(|a| vec![a]))
}

pub(crate) fn first_failure2(n: usize, ok: impl Fn(usize, usize) -> bool + Sync) -> Check {
    Check::from_witness(
        (0..n).into_par_iter().find_map_first(|a| (0..n).find(|&b| !ok(a, b)).map(|b| vec![a, b])),
    )
}

pub(crate) fn first_failure3(n: usize, ok: impl Fn(usize, usize, usize) -> bool + Sync) -> Check {
    Check::from_witness((0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if !ok(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
        None
    }))
}

pub(crate) fn first_failure4(n: usize, ok: impl Fn(usize, usize, usize, usize) -> bool + Sync) -> Check {
    Check::from_witness((0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if !ok(a, b, c, d) {
                        return Some(vec![a, b, c, d]);
                    }
                }
            }
        }
        None
    }))
}

/// Names of the individual laws, as used in structure-file `claims`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    LeftDistributive,
    RightDistributive,
    AddAssociative,
    AddCommutative,
    AddMedial,
    MulAssociative,
    MulCommutative,
    HasZero,
    ZeroAbsorbing,
    HasOne,
    Zerosumfree,
    Entire,
    Complemented,
    MulIdempotent,
}

impl Law {
    pub const ALL: [Law; 14] = [
        Law::LeftDistributive,
        Law::RightDistributive,
        Law::AddAssociative,
        Law::AddCommutative,
        Law::AddMedial,
        Law::MulAssociative,
        Law::MulCommutative,
        Law::HasZero,
        Law::ZeroAbsorbing,
        Law::HasOne,
        Law::Zerosumfree,
        Law::Entire,
        Law::Complemented,
        Law::MulIdempotent,
    ];

    /// Laws expressible as identities, which pass to direct products
    /// componentwise.
    pub const EQUATIONAL: [Law; 11] = [
        Law::LeftDistributive,
        Law::RightDistributive,
        Law::AddAssociative,
        Law::AddCommutative,
        Law::AddMedial,
        Law::MulAssociative,
        Law::MulCommutative,
        Law::HasZero,
        Law::ZeroAbsorbing,
        Law::HasOne,
        Law::MulIdempotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::LeftDistributive => "left_distributive",
            Law::RightDistributive => "right_distributive",
            Law::AddAssociative => "add_associative",
            Law::AddCommutative => "add_commutative",
            Law::AddMedial => "add_medial",
            Law::MulAssociative => "mul_associative",
            Law::MulCommutative => "mul_commutative",
            Law::HasZero => "has_zero",
            Law::ZeroAbsorbing => "zero_absorbing",
            Law::HasOne => "has_one",
            Law::Zerosumfree => "zerosumfree",
            Law::Entire => "entire",
            Law::Complemented => "complemented",
            Law::MulIdempotent => "mul_idempotent",
        }
    }

    pub fn from_name(name: &str) -> Option<Law> {
        Law::ALL.into_iter().find(|l| l.name() == name)
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every law flag of a structure, each with its least witness on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub left_distributive: Check,
    pub right_distributive: Check,
    pub add_associative: Check,
    pub add_commutative: Check,
    pub add_medial: Check,
    pub mul_associative: Check,
    pub mul_commutative: Check,
    pub has_zero: Check,
    pub zero_absorbing: Check,
    pub has_one: Check,
    pub zerosumfree: Check,
    pub entire: Check,
    pub complemented: Check,
    pub mul_idempotent: Check,
    /// Whether a declared zero and identity are distinct.
    pub zero_ne_one: bool,
}

impl LawReport {
    pub fn get(&self, law: Law) -> &Check {
        match law {
            Law::LeftDistributive => &self.left_distributive,
            Law::RightDistributive => &self.right_distributive,
            Law::AddAssociative => &self.add_associative,
            Law::AddCommutative => &self.add_commutative,
            Law::AddMedial => &self.add_medial,
            Law::MulAssociative => &self.mul_associative,
            Law::MulCommutative => &self.mul_commutative,
            Law::HasZero => &self.has_zero,
            Law::ZeroAbsorbing => &self.zero_absorbing,
            Law::HasOne => &self.has_one,
            Law::Zerosumfree => &self.zerosumfree,
            Law::Entire => &self.entire,
            Law::Complemented => &self.complemented,
            Law::MulIdempotent => &self.mul_idempotent,
        }
    }

    pub fn holds(&self, law: Law) -> bool {
        self.get(law).holds()
    }

    pub fn is_ringoid(&self) -> bool {
        self.left_distributive.holds() && self.right_distributive.holds()
    }

    /// A ringoid with zero whose addition is a commutative monoid.
    pub fn is_na_hemiring(&self) -> bool {
        self.is_ringoid()
            && self.add_associative.holds()
            && self.add_commutative.holds()
            && self.has_zero.holds()
            && self.zero_absorbing.holds()
    }

    /// An NA-hemiring with identity distinct from zero.
    pub fn is_na_semiring(&self) -> bool {
        self.is_na_hemiring() && self.has_one.holds() && self.zero_ne_one
    }

    pub fn is_semiring(&self) -> bool {
        self.is_na_semiring() && self.mul_associative.holds()
    }

    /// Error naming the first semiring requirement that fails.
    pub fn first_semiring_failure(&self) -> Error {
        for law in [
            Law::LeftDistributive,
            Law::RightDistributive,
            Law::AddAssociative,
            Law::AddCommutative,
            Law::HasZero,
            Law::ZeroAbsorbing,
            Law::HasOne,
            Law::MulAssociative,
        ] {
            if let Check::Fails(w) = self.get(law) {
                return Error::LawViolation { law: law.name().into(), witness: w.clone() };
            }
        }
        if !self.zero_ne_one {
            return Error::LawViolation { law: "zero_ne_one".into(), witness: vec![] };
        }
        Error::Invalid("structure is a semiring".into())
    }

    /// `(law, check)` pairs in declaration order.
    pub fn entries(&self) -> impl Iterator<Item = (Law, &Check)> {
        Law::ALL.into_iter().map(move |l| (l, self.get(l)))
    }
}

impl Serialize for LawReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("LawReport", Law::ALL.len() + 1)?;
        for (law, check) in self.entries() {
            st.serialize_field(law.name(), check)?;
        }
        st.serialize_field("zero_ne_one", &self.zero_ne_one)?;
        st.end()
    }
}

/// Decides every law flag of `s` exhaustively.
pub fn check_laws(s: &Cayley) -> LawReport {
    let n = s.size();
    let zero = s.zero();
    let one = s.one();

    let left_distributive =
        first_failure3(n, |a, b, c| s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c)));
    let right_distributive =
        first_failure3(n, |a, b, c| s.mul(s.add(a, b), c) == s.add(s.mul(a, c), s.mul(b, c)));
    let add_associative = first_failure3(n, |a, b, c| s.add(s.add(a, b), c) == s.add(a, s.add(b, c)));
    let add_commutative = first_failure2(n, |a, b| s.add(a, b) == s.add(b, a));
    let add_medial = s.additive_magma().medial();
    let mul_associative = first_failure3(n, |a, b, c| s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)));
    let mul_commutative = first_failure2(n, |a, b| s.mul(a, b) == s.mul(b, a));
    let mul_idempotent = first_failure1(n, |a| s.mul(a, a) == a);

    let missing = || Check::Fails(vec![]);
    let has_zero = match zero {
        Some(z) => first_failure1(n, |x| s.add(z, x) == x && s.add(x, z) == x),
        None => missing(),
    };
    let zero_absorbing = match zero {
        Some(z) => first_failure1(n, |x| s.mul(z, x) == z && s.mul(x, z) == z),
        None => missing(),
    };
    let has_one = match one {
        Some(e) => first_failure1(n, |x| s.mul(e, x) == x && s.mul(x, e) == x),
        None => missing(),
    };
    let zerosumfree = match zero {
        Some(z) => first_failure2(n, |a, b| s.add(a, b) != z || (a == z && b == z)),
        None => missing(),
    };
    let entire = match zero {
        Some(z) => first_failure2(n, |a, b| s.mul(a, b) != z || a == z || b == z),
        None => missing(),
    };
    let complemented = match (zero, one) {
        (Some(z), Some(e)) => first_failure1(n, |r| {
            (0..n)
                .filter(|&c| s.mul(r, c) == z && s.mul(c, r) == z && s.add(r, c) == e && s.add(c, r) == e)
                .count()
                == 1
        }),
        _ => missing(),
    };

    LawReport {
        left_distributive,
        right_distributive,
        add_associative,
        add_commutative,
        add_medial,
        mul_associative,
        mul_commutative,
        has_zero,
        zero_absorbing,
        has_one,
        zerosumfree,
        entire,
        complemented,
        mul_idempotent,
        zero_ne_one: matches!((zero, one), (Some(z), Some(e)) if z != e),
    }
}
