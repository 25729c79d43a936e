//! Small named structures used throughout the tests and the corpus.

use crate::constructions::{self, StructureConstants};
use crate::structure::{Cayley, Magma};
use crate::Caps;

/// The Boolean semifield `{0, 1}` with `max` and `min`.
pub fn boolean() -> Cayley {
    Cayley::from_fn("B", 2, |a, b| a.max(b), |a, b| a.min(b), Some(0), Some(1)).expect("valid tables")
}

/// The chain semiring `0 < a_1 < ... < 1` on `n >= 2` elements: addition is
/// `max`, multiplication is null except that `1` is a two-sided identity.
pub fn chain(n: usize) -> Cayley {
    assert!(n >= 2, "chain semiring needs at least 0 and 1");
    let top = n - 1;
    let s = Cayley::from_fn(
        format!("chain-{n}"),
        n,
        |a, b| a.max(b),
        |a, b| match (a == top, b == top) {
            (true, _) => b,
            (_, true) => a,
            _ => 0,
        },
        Some(0),
        Some(top),
    )
    .expect("valid tables");
    let labels = (0..n)
        .map(|x| match x {
            0 => "0".to_string(),
            x if x == top => "1".to_string(),
            _ if n == 3 => "a".to_string(),
            x => format!("a{x}"),
        })
        .collect();
    s.with_labels(labels).expect("label count")
}

/// `{0, ..., k}` with addition and multiplication truncated at `k`.
pub fn saturating(k: usize) -> Cayley {
    Cayley::from_fn(
        format!("N{k}"),
        k + 1,
        |a, b| (a + b).min(k),
        |a, b| (a * b).min(k),
        Some(0),
        Some(1.min(k)),
    )
    .expect("valid tables")
}

/// The ring of integers modulo `n`.
pub fn integers_mod(n: usize) -> Cayley {
    Cayley::from_fn(format!("Z{n}"), n, |a, b| (a + b) % n, |a, b| (a * b) % n, Some(0), Some(1 % n))
        .expect("valid tables")
}

/// The cyclic group `Z/n` as an additive magma.
pub fn cyclic_group(n: usize) -> Magma {
    Magma::from_fn(n, |a, b| (a + b) % n).expect("valid table")
}

/// The Boolean lattice of subsets of `atoms` atoms, with union and
/// intersection. Element `x` is the subset whose bitmask is `x`.
pub fn boolean_lattice(atoms: usize) -> Cayley {
    let n = 1usize << atoms;
    let s =
        Cayley::from_fn(format!("boolean-lattice-{n}"), n, |a, b| a | b, |a, b| a & b, Some(0), Some(n - 1))
            .expect("valid tables");
    let names = ["a", "b", "c", "d", "e", "f"];
    let labels = (0..n)
        .map(|x| match x {
            0 => "0".to_string(),
            x if x == n - 1 => "1".to_string(),
            x => (0..atoms)
                .filter(|i| x >> i & 1 == 1)
                .map(|i| names.get(i).copied().unwrap_or("?"))
                .collect::<Vec<_>>()
                .join("∨"),
        })
        .collect();
    s.with_labels(labels).expect("label count")
}

/// Complementation in [`boolean_lattice`].
pub fn boolean_lattice_complement(atoms: usize) -> Vec<usize> {
    let n = 1usize << atoms;
    (0..n).map(|x| (n - 1) ^ x).collect()
}

/// The chain lattice `0 < 1 < ... < n-1` with `max` and `min`.
pub fn chain_lattice(n: usize) -> Cayley {
    Cayley::from_fn(format!("chain-lattice-{n}"), n, |a, b| a.max(b), |a, b| a.min(b), Some(0), Some(n - 1))
        .expect("valid tables")
}

/// `F_2[x, y] / (x, y)^2`; element `a + b x + c y` has index `a + 2b + 4c`.
pub fn f2xy_square() -> Cayley {
    let split = |v: usize| (v & 1, (v >> 1) & 1, (v >> 2) & 1);
    let s = Cayley::from_fn(
        "F2[x,y]/(x,y)^2",
        8,
        |u, v| u ^ v,
        |u, v| {
            let (a, b, c) = split(u);
            let (d, e, f) = split(v);
            (a & d) | (((a & e) ^ (b & d)) << 1) | (((a & f) ^ (c & d)) << 2)
        },
        Some(0),
        Some(1),
    )
    .expect("valid tables");
    let labels = ["0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"].map(String::from).to_vec();
    s.with_labels(labels).expect("label count")
}

/// `B^3` with componentwise addition and the cross product.
pub fn boolean_cross_product() -> Cayley {
    constructions::hemialgebra(&StructureConstants::boolean_cross_product(), &Caps::default())
        .expect("eight elements fit any cap")
        .renamed("B^3 cross product")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_semirings_pass_laws() {
        for s in [
            boolean(),
            chain(3),
            chain(5),
            saturating(3),
            integers_mod(6),
            boolean_lattice(2),
            chain_lattice(4),
            f2xy_square(),
        ] {
            assert!(s.laws().is_semiring(), "{} is not a semiring", s.name());
            assert!(s.laws().mul_commutative.holds());
        }
    }

    #[test]
    fn f2xy_products() {
        let r = f2xy_square();
        let (x, y) = (r.element("x").unwrap(), r.element("y").unwrap());
        assert_eq!(r.mul(x, y), 0);
        assert_eq!(r.mul(x, x), 0);
        assert_eq!(r.mul(r.element("1+x").unwrap(), x), x);
    }

    #[test]
    fn chain_labels() {
        assert_eq!(chain(3).labels(), &["0", "a", "1"]);
        assert_eq!(boolean_lattice(2).labels(), &["0", "a", "b", "1"]);
    }
}
