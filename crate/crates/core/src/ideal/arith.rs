use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{close_from, is_ideal, IdealSet, Side};
use crate::laws::Check;
use crate::structure::Cayley;

fn meet(i: &IdealSet, j: &IdealSet) -> Result<Side> {
    i.side()
        .meet(j.side())
        .ok_or_else(|| Error::Precondition("cannot combine a left ideal with a right ideal".into()))
}

/// `I + J = {a + b : a in I, b in J}`, an ideal when addition is medial.
pub fn ideal_sum(s: &Cayley, i: &IdealSet, j: &IdealSet) -> Result<IdealSet> {
    if let Check::Fails(w) = &s.laws().add_medial {
        return Err(Error::LawViolation { law: "add_medial".into(), witness: w.clone() });
    }
    let side = meet(i, j)?;
    let mut out = ElemSet::empty(s.size());
    for a in i.iter() {
        for b in j.iter() {
            out.insert(s.add(a, b));
        }
    }
    if !s.laws().is_ringoid() || !is_ideal(s, &out, side) {
        return Err(Error::Precondition(
            "sum of ideals needs a distributive, additively medial structure".into(),
        ));
    }
    Ok(IdealSet::from_closed(side, out))
}

/// The raw product set `IJ = {ab : a in I, b in J}`.
pub fn set_product(s: &Cayley, i: &IdealSet, j: &IdealSet) -> ElemSet {
    let mut out = ElemSet::empty(s.size());
    for a in i.iter() {
        for b in j.iter() {
            out.insert(s.mul(a, b));
        }
    }
    out
}

/// The two-sided ideal `(IJ)` generated by the product set.
pub fn generated_product(s: &Cayley, i: &IdealSet, j: &IdealSet) -> IdealSet {
    let raw = set_product(s, i, j).to_vec();
    IdealSet::from_closed(Side::TwoSided, close_from(s, &ElemSet::empty(s.size()), &raw, Side::TwoSided))
}

/// `I^k` as left-nested generated products; `k >= 1`.
pub fn ideal_power(s: &Cayley, i: &IdealSet, k: usize) -> IdealSet {
    assert!(k >= 1, "ideal powers start at 1");
    let mut acc = i.clone();
    for _ in 1..k {
        acc = generated_product(s, &acc, i);
    }
    acc
}

pub fn intersect(i: &IdealSet, j: &IdealSet) -> Result<IdealSet> {
    let side = meet(i, j)?;
    let members = i.members().intersection(j.members());
    if members.is_empty() {
        return Err(Error::Precondition("ideals have empty intersection".into()));
    }
    Ok(IdealSet::from_closed(side, members))
}
