//! Finite semimodules over finite semirings.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::constructions::{digits, from_digits};
use crate::error::{Error, Result};
use crate::ideal::{is_ideal, is_prime, is_subtractive, IdealSet, Side};
use crate::laws::{first_failure1, first_failure2, first_failure3, Check};
use crate::structure::{flatten_table, Cayley};
use crate::Caps;

/// A commutative monoid `(M, +, 0)` with a left action of a semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemimodule {
    semiring: Cayley,
    msize: usize,
    madd: Vec<u32>,
    mzero: usize,
    action: Vec<u32>,
    labels: Vec<String>,
}

fn check_entries(table: &'static str, flat: &[u32], cols: usize, size: usize) -> Result<()> {
    match flat.iter().position(|&v| v as usize >= size) {
        Some(idx) => Err(Error::MalformedTable {
            table,
            row: idx / cols,
            col: idx % cols,
            value: flat[idx] as usize,
            size,
        }),
        None => Ok(()),
    }
}

impl FiniteSemimodule {
    /// Builds a semimodule from its addition table and an `|S| x msize`
    /// action table. The semiring laws of `semiring` are required.
    pub fn new(semiring: Cayley, madd: &[Vec<usize>], mzero: usize, action: &[Vec<usize>]) -> Result<Self> {
        semiring.require_semiring()?;
        let msize = madd.len();
        if msize == 0 {
            return Err(Error::Invalid("semimodule carrier must be nonempty".into()));
        }
        let madd = flatten_table("madd", madd, msize, msize)?;
        check_entries("madd", &madd, msize, msize)?;
        let action = flatten_table("action", action, semiring.size(), msize)?;
        check_entries("action", &action, msize, msize)?;
        if mzero >= msize {
            return Err(Error::ElementOutOfRange(mzero));
        }
        Ok(Self { semiring, msize, madd, mzero, action, labels: (0..msize).map(|x| x.to_string()).collect() })
    }

    /// The semiring acting on itself by multiplication.
    pub fn regular(s: &Cayley) -> Result<Self> {
        let mut m = Self::new(s.clone(), &s.add_table(), s.require_zero()?, &s.mul_table())?;
        m.labels = s.labels().to_vec();
        Ok(m)
    }

    /// `S^k` with componentwise operations; the first coordinate is least
    /// significant in the index.
    pub fn power(s: &Cayley, k: usize, caps: &Caps) -> Result<Self> {
        let n = s.size();
        let msize = n.checked_pow(k as u32).filter(|&m| m <= caps.carrier).ok_or(Error::CapExceeded {
            what: "semimodule power",
            size: n.saturating_pow(k as u32),
            cap: caps.carrier,
        })?;
        let madd: Vec<Vec<usize>> = (0..msize)
            .map(|u| {
                let du = digits(u, n, k);
                (0..msize)
                    .map(|v| {
                        let dv = digits(v, n, k);
                        let sum: Vec<usize> = du.iter().zip(&dv).map(|(&a, &b)| s.add(a, b)).collect();
                        from_digits(&sum, n)
                    })
                    .collect()
            })
            .collect();
        let action: Vec<Vec<usize>> = s
            .elements()
            .map(|r| {
                (0..msize)
                    .map(|v| {
                        let scaled: Vec<usize> = digits(v, n, k).iter().map(|&a| s.mul(r, a)).collect();
                        from_digits(&scaled, n)
                    })
                    .collect()
            })
            .collect();
        let zero = from_digits(&vec![s.require_zero()?; k], n);
        let mut m = Self::new(s.clone(), &madd, zero, &action)?;
        m.labels = (0..msize)
            .map(|v| {
                let parts: Vec<&str> = digits(v, n, k).iter().map(|&a| s.label(a)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        Ok(m)
    }

    /// The one-element semimodule.
    pub fn zero_module(s: &Cayley) -> Result<Self> {
        Self::new(s.clone(), &[vec![0]], 0, &vec![vec![0]; s.size()])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.msize {
            return Err(Error::Invalid(format!(
                "{} labels for a semimodule of {} elements",
                labels.len(),
                self.msize
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn semiring(&self) -> &Cayley {
        &self.semiring
    }

    pub fn msize(&self) -> usize {
        self.msize
    }

    pub fn mzero(&self) -> usize {
        self.mzero
    }

    pub fn label(&self, m: usize) -> &str {
        &self.labels[m]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.msize
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements().filter(move |&m| m != self.mzero)
    }

    pub fn is_zero_module(&self) -> bool {
        self.msize == 1
    }

    #[inline]
    pub fn add(&self, m: usize, n: usize) -> usize {
        self.madd[m * self.msize + n] as usize
    }

    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.msize + m] as usize
    }

    pub fn madd_table(&self) -> Vec<Vec<usize>> {
        self.madd.chunks(self.msize).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn action_table(&self) -> Vec<Vec<usize>> {
        self.action.chunks(self.msize).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// Checks every semimodule axiom exhaustively.
    pub fn check(&self) -> SemimoduleReport {
        let (s, n, k) = (&self.semiring, self.msize, self.semiring.size());
        let one = s.one();
        let zero = s.zero();
        let z = self.mzero;
        let pairs = |ok: &(dyn Fn(usize, usize, usize) -> bool + Sync)| {
            Check::from_witness(
                (0..k)
                    .find_map(|a| (0..k).find_map(|b| (0..n).find(|&m| !ok(a, b, m)).map(|m| vec![a, b, m]))),
            )
        };
        SemimoduleReport {
            add_associative: first_failure3(n, |a, b, c| {
                self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
            }),
            add_commutative: first_failure2(n, |a, b| self.add(a, b) == self.add(b, a)),
            zero_neutral: first_failure1(n, |m| self.add(z, m) == m),
            action_associative: pairs(&|a, b, m| self.act(s.mul(a, b), m) == self.act(a, self.act(b, m))),
            unital: match one {
                Some(e) => first_failure1(n, |m| self.act(e, m) == m),
                None => Check::Fails(vec![]),
            },
            scalar_distributive: pairs(&|a, b, m| {
                self.act(s.add(a, b), m) == self.add(self.act(a, m), self.act(b, m))
            }),
            vector_distributive: Check::from_witness((0..k).find_map(|r| {
                (0..n).find_map(|m| {
                    (0..n)
                        .find(|&p| self.act(r, self.add(m, p)) != self.add(self.act(r, m), self.act(r, p)))
                        .map(|p| vec![r, m, p])
                })
            })),
            zero_scalar: match zero {
                Some(z0) => first_failure1(n, |m| self.act(z0, m) == z),
                None => Check::Fails(vec![]),
            },
            zero_vector: first_failure1(k, |r| self.act(r, z) == z),
        }
    }

    /// `{r : rx = 0 for every x in xs}` for nonempty `xs`.
    pub fn annihilator(&self, xs: &[usize]) -> Result<IdealSet> {
        if xs.is_empty() {
            return Err(Error::Precondition("annihilator of the empty set".into()));
        }
        if let Some(&x) = xs.iter().find(|&&x| x >= self.msize) {
            return Err(Error::ElementOutOfRange(x));
        }
        let s = &self.semiring;
        let members = ElemSet::from_iter(
            s.size(),
            s.elements().filter(|&r| xs.iter().all(|&x| self.act(r, x) == self.mzero)),
        );
        let side = if is_ideal(s, &members, Side::TwoSided) {
            Side::TwoSided
        } else if is_ideal(s, &members, Side::Left) {
            Side::Left
        } else {
            return Err(Error::Precondition("annihilator is not an ideal".into()));
        };
        Ok(IdealSet::from_closed(side, members))
    }

    /// The least subsemimodule containing `xs` and zero.
    pub fn generate(&self, xs: &[usize]) -> ElemSet {
        self.close_from(&ElemSet::from_iter(self.msize, [self.mzero]), xs)
    }

    fn close_from(&self, base: &ElemSet, extra: &[usize]) -> ElemSet {
        let mut set = base.clone();
        let mut queue: VecDeque<usize> = extra.iter().copied().filter(|&x| set.insert(x)).collect();
        while let Some(w) = queue.pop_front() {
            let current = set.to_vec();
            for y in current {
                let v = self.add(w, y);
                if set.insert(v) {
                    queue.push_back(v);
                }
            }
            for r in self.semiring.elements() {
                let v = self.act(r, w);
                if set.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        set
    }

    pub fn is_subsemimodule(&self, set: &ElemSet) -> bool {
        set.contains(self.mzero)
            && set.iter().all(|a| {
                set.iter().all(|b| set.contains(self.add(a, b)))
                    && self.semiring.elements().all(|r| set.contains(self.act(r, a)))
            })
    }

    /// Every subsemimodule, sorted.
    pub fn subsemimodules(&self, caps: &Caps) -> Result<Vec<ElemSet>> {
        if self.msize > caps.ideal_enumeration {
            return Err(Error::CapExceeded {
                what: "subsemimodule enumeration carrier",
                size: self.msize,
                cap: caps.ideal_enumeration,
            });
        }
        let zero = self.generate(&[]);
        let mut seen: HashSet<ElemSet> = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(n) = queue.pop_front() {
            for x in n.complement().iter() {
                let grown = self.close_from(&n, &[x]);
                if seen.insert(grown.clone()) {
                    queue.push_back(grown);
                }
            }
        }
        let mut out: Vec<ElemSet> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Annihilators of nonzero subsemimodules, deduplicated and sorted.
    pub fn annihilator_ideals(&self, caps: &Caps) -> Result<Vec<IdealSet>> {
        let mut out: Vec<IdealSet> = Vec::new();
        for n in self.subsemimodules(caps)? {
            if n.len() > 1 {
                let ann = self.annihilator(&n.to_vec())?;
                if !out.contains(&ann) {
                    out.push(ann);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Maximal members of `{Ann(N)}` over proper nonzero subsemimodules `N`.
    /// Each is checked to be a subtractive prime.
    pub fn maximal_annihilator_primes(&self, caps: &Caps) -> Result<Vec<IdealSet>> {
        let s = &self.semiring;
        s.require_commutative_semiring()?;
        if self.is_zero_module() {
            return Err(Error::Precondition("zero semimodule".into()));
        }
        let mut gamma: Vec<IdealSet> = Vec::new();
        for n in self.subsemimodules(caps)? {
            if n.len() > 1 && !n.is_full() {
                let ann = self.annihilator(&n.to_vec())?;
                if !gamma.contains(&ann) {
                    gamma.push(ann);
                }
            }
        }
        let mut maximal: Vec<IdealSet> =
            gamma.iter().filter(|a| !gamma.iter().any(|b| b != *a && a.is_subset(b))).cloned().collect();
        maximal.sort();
        for p in &maximal {
            if !is_subtractive(s, p).holds() || !is_prime(s, p)?.holds() {
                return Err(Error::TheoremViolation(format!(
                    "maximal annihilator {} is not a subtractive prime",
                    p.display(s)
                )));
            }
        }
        Ok(maximal)
    }
}

/// Outcome of the semimodule axioms; witnesses are least failing tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemimoduleReport {
    pub add_associative: Check,
    pub add_commutative: Check,
    pub zero_neutral: Check,
    /// `(st)m = s(tm)`, witness `(s, t, m)`.
    pub action_associative: Check,
    /// `1m = m`, witness `m`.
    pub unital: Check,
    /// `(s+t)m = sm + tm`.
    pub scalar_distributive: Check,
    /// `s(m+n) = sm + sn`.
    pub vector_distributive: Check,
    /// `0m = 0`.
    pub zero_scalar: Check,
    /// `s0 = 0`.
    pub zero_vector: Check,
}

impl SemimoduleReport {
    pub fn entries(&self) -> [(&'static str, &Check); 9] {
        [
            ("add_associative", &self.add_associative),
            ("add_commutative", &self.add_commutative),
            ("zero_neutral", &self.zero_neutral),
            ("action_associative", &self.action_associative),
            ("unital", &self.unital),
            ("scalar_distributive", &self.scalar_distributive),
            ("vector_distributive", &self.vector_distributive),
            ("zero_scalar", &self.zero_scalar),
            ("zero_vector", &self.zero_vector),
        ]
    }

    pub fn is_valid(&self) -> bool {
        self.entries().iter().all(|(_, c)| c.holds())
    }
}
