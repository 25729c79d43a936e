//! Parenthesisations of finite sums in a possibly nonassociative addition.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{is_subtractive, IdealSet};
use crate::structure::Cayley;

/// One way of bracketing `x_1 + ... + x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumTree {
    Leaf(usize),
    Node(Box<SumTree>, Box<SumTree>),
}

impl SumTree {
    pub fn node(left: SumTree, right: SumTree) -> Self {
        SumTree::Node(Box::new(left), Box::new(right))
    }

    /// `((x_1 + x_2) + x_3) + ...`
    pub fn left_comb(leaves: &[usize]) -> Result<Self> {
        let (&first, rest) =
            leaves.split_first().ok_or_else(|| Error::Invalid("a sum needs at least one term".into()))?;
        Ok(rest.iter().fold(SumTree::Leaf(first), |acc, &x| SumTree::node(acc, SumTree::Leaf(x))))
    }

    /// Every bracketing of the given leaves, in a fixed order.
    pub fn all_shapes(leaves: &[usize]) -> Vec<SumTree> {
        match leaves {
            [] => vec![],
            [x] => vec![SumTree::Leaf(*x)],
            _ => (1..leaves.len())
                .flat_map(|split| {
                    let lefts = Self::all_shapes(&leaves[..split]);
                    let rights = Self::all_shapes(&leaves[split..]);
                    lefts.into_iter().flat_map(move |l| {
                        rights.clone().into_iter().map(move |r| SumTree::node(l.clone(), r))
                    })
                })
                .collect(),
        }
    }

    /// A bracketing drawn from a seeded generator.
    pub fn random_shape(leaves: &[usize], seed: u64) -> Result<Self> {
        if leaves.is_empty() {
            return Err(Error::Invalid("a sum needs at least one term".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(Self::random_with(leaves, &mut rng))
    }

    fn random_with(leaves: &[usize], rng: &mut ChaCha8Rng) -> Self {
        if leaves.len() == 1 {
            return SumTree::Leaf(leaves[0]);
        }
        let split = rng.random_range(1..leaves.len());
        SumTree::node(Self::random_with(&leaves[..split], rng), Self::random_with(&leaves[split..], rng))
    }

    /// Post-order fold of the addition table.
    pub fn eval(&self, s: &Cayley) -> usize {
        match self {
            SumTree::Leaf(x) => *x,
            SumTree::Node(l, r) => s.add(l.eval(s), r.eval(s)),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            SumTree::Leaf(x) => out.push(*x),
            SumTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// The same shape with leaves replaced, left to right.
    pub fn relabel(&self, values: &[usize]) -> Result<Self> {
        let mut it = values.iter().copied();
        let out = self.relabel_with(&mut it)?;
        if it.next().is_some() {
            return Err(Error::Invalid("too many leaf values".into()));
        }
        Ok(out)
    }

    fn relabel_with(&self, it: &mut impl Iterator<Item = usize>) -> Result<Self> {
        Ok(match self {
            SumTree::Leaf(_) => {
                SumTree::Leaf(it.next().ok_or_else(|| Error::Invalid("too few leaf values".into()))?)
            }
            SumTree::Node(l, r) => SumTree::node(l.relabel_with(it)?, r.relabel_with(it)?),
        })
    }
}

/// Given a subtractive `I`, a tree whose value lies in `I`, and every leaf
/// but `hole` in `I`, reports whether the hole leaf lies in `I` too.
pub fn subtractive_sumtree_property(s: &Cayley, i: &IdealSet, tree: &SumTree, hole: usize) -> Result<bool> {
    if !is_subtractive(s, i).holds() {
        return Err(Error::Precondition("ideal is not subtractive".into()));
    }
    let leaves = tree.leaves();
    if hole >= leaves.len() {
        return Err(Error::Precondition(format!("tree has no leaf {hole}")));
    }
    for &x in &leaves {
        s.check_element(x)?;
    }
    if !i.contains(tree.eval(s)) {
        return Err(Error::Precondition("tree value is outside the ideal".into()));
    }
    if leaves.iter().enumerate().any(|(k, &x)| k != hole && !i.contains(x)) {
        return Err(Error::Precondition("a non-hole leaf is outside the ideal".into()));
    }
    Ok(i.contains(leaves[hole]))
}
