#![allow(dead_code)]

use ringoid_core::constructions::{
    austere_extension, direct_product, hemialgebra, monoid_semiring, truncated_polynomial_hemiring,
    StructureConstants,
};
use ringoid_core::standard::*;
use ringoid_core::{Caps, Cayley, ElemSet, Side};

pub fn caps() -> Caps {
    Caps::default()
}

/// Every structure the integration tests quantify over.
pub fn corpus() -> Vec<Cayley> {
    let caps = caps();
    let b = boolean();
    vec![
        b.clone(),
        chain(3),
        chain(4),
        saturating(3),
        saturating(4),
        integers_mod(2),
        integers_mod(4),
        integers_mod(6),
        boolean_lattice(2),
        boolean_lattice(3),
        chain_lattice(3),
        f2xy_square(),
        direct_product(&[b.clone(), b.clone()], &caps).unwrap(),
        direct_product(&[b.clone(), chain(3)], &caps).unwrap(),
        direct_product(&[b.clone(), integers_mod(3)], &caps).unwrap(),
        austere_extension(&integers_mod(6)).unwrap(),
        austere_extension(&integers_mod(4)).unwrap(),
        monoid_semiring(&b, &cyclic_group(2), &caps).unwrap().structure().clone(),
        truncated_polynomial_hemiring(&chain(3), 1, &caps).unwrap(),
        hemialgebra(&StructureConstants::boolean_cross_product(), &caps).unwrap(),
    ]
}

pub fn semirings() -> Vec<Cayley> {
    corpus().into_iter().filter(|s| s.laws().is_semiring()).collect()
}

pub fn commutative_semirings() -> Vec<Cayley> {
    corpus().into_iter().filter(Cayley::is_commutative_semiring).collect()
}

/// Ideal test written directly from the definition.
pub fn oracle_is_ideal(s: &Cayley, set: &[bool], side: Side) -> bool {
    let n = s.size();
    if !set.iter().any(|&b| b) {
        return false;
    }
    for a in 0..n {
        if !set[a] {
            continue;
        }
        for b in 0..n {
            if set[b] && !set[s.add(a, b)] {
                return false;
            }
            let left = matches!(side, Side::Left | Side::TwoSided);
            let right = matches!(side, Side::Right | Side::TwoSided);
            if (left && !set[s.mul(b, a)]) || (right && !set[s.mul(a, b)]) {
                return false;
            }
        }
    }
    true
}

/// All ideals by filtering the power set.
pub fn oracle_ideals(s: &Cayley, side: Side) -> Vec<ElemSet> {
    let n = s.size();
    assert!(n <= 12);
    let mut out: Vec<ElemSet> = (1u64..1 << n)
        .filter_map(|mask| {
            let set: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            oracle_is_ideal(s, &set, side).then(|| ElemSet::from_mask(n, mask))
        })
        .collect();
    out.sort();
    out
}

/// Nonempty subsets of `items` with at most `k` members, in index order.
pub fn subsets_up_to<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<T>)> = vec![(0, vec![])];
    while let Some((start, cur)) = stack.pop() {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            continue;
        }
        for i in (start..items.len()).rev() {
            let mut next = cur.clone();
            next.push(items[i].clone());
            stack.push((i + 1, next));
        }
    }
    out
}
