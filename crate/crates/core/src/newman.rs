//! Newman's axioms for Boolean-like structures and their consequences.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laws::{first_failure1, first_failure3, Check};
use crate::structure::Cayley;

/// Outcome of the four axioms, plus the derived facts when they all hold
/// with `0 != 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewmanReport {
    /// `0 + x = x + 0 = x`.
    pub unital_additive_magma: Check,
    /// `x * 1 = x`.
    pub right_identity: Check,
    /// Both distributive laws; the witness is `(a, b, c)`.
    pub distributive: Check,
    /// `a a' = 0` and `a + a' = 1`.
    pub complement: Check,
    pub derived: Option<NewmanConsequences>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewmanConsequences {
    pub mul_idempotent: Check,
    pub complemented: Check,
    pub zero_absorbing: Check,
    /// `(S, +, 0)` is a commutative monoid.
    pub additive_commutative_monoid: Check,
}

impl NewmanConsequences {
    pub fn all_hold(&self) -> bool {
        self.mul_idempotent.holds()
            && self.complemented.holds()
            && self.zero_absorbing.holds()
            && self.additive_commutative_monoid.holds()
    }
}

impl NewmanReport {
    pub fn axioms_hold(&self) -> bool {
        self.unital_additive_magma.holds()
            && self.right_identity.holds()
            && self.distributive.holds()
            && self.complement.holds()
    }
}

/// Checks the axioms for `s` with complementation `complement[a] = a'`.
/// The consequences are computed, never assumed.
pub fn newman_check(s: &Cayley, complement: &[usize]) -> Result<NewmanReport> {
    let n = s.size();
    if complement.len() != n {
        return Err(Error::TableShape {
            table: "complement",
            rows: complement.len(),
            cols: 1,
            expected_rows: n,
            expected_cols: 1,
        });
    }
    if let Some((a, &v)) = complement.iter().enumerate().find(|(_, &v)| v >= n) {
        return Err(Error::MalformedTable { table: "complement", row: a, col: 0, value: v, size: n });
    }
    let missing = || Check::Fails(vec![]);
    let unital_additive_magma = match s.zero() {
        Some(z) => first_failure1(n, |x| s.add(z, x) == x && s.add(x, z) == x),
        None => missing(),
    };
    let right_identity = match s.one() {
        Some(e) => first_failure1(n, |x| s.mul(x, e) == x),
        None => missing(),
    };
    let distributive = first_failure3(n, |a, b, c| {
        s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c))
            && s.mul(s.add(a, b), c) == s.add(s.mul(a, c), s.mul(b, c))
    });
    let complement_check = match (s.zero(), s.one()) {
        (Some(z), Some(e)) => {
            first_failure1(n, |a| s.mul(a, complement[a]) == z && s.add(a, complement[a]) == e)
        }
        _ => missing(),
    };
    let mut report = NewmanReport {
        unital_additive_magma,
        right_identity,
        distributive,
        complement: complement_check,
        derived: None,
    };
    if report.axioms_hold() && s.laws().zero_ne_one {
        let l = s.laws();
        let monoid = [&l.add_associative, &l.add_commutative, &l.has_zero]
            .into_iter()
            .find(|c| !c.holds())
            .cloned()
            .unwrap_or(Check::Holds);
        report.derived = Some(NewmanConsequences {
            mul_idempotent: l.mul_idempotent.clone(),
            complemented: l.complemented.clone(),
            zero_absorbing: l.zero_absorbing.clone(),
            additive_commutative_monoid: monoid,
        });
    }
    Ok(report)
}
