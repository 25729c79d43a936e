//! Finite bimagmas stored as dense Cayley tables.

use std::fmt;
use std::ops::Range;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::laws::{check_laws, Check, LawReport};

/// A finite bimagma on the carrier `0..size`, with optional distinguished
/// zero and identity elements.
///
/// Tables are row-major: `add[a * size + b] = a + b`. The law report is
/// computed lazily on first request and cached; the tables themselves never
/// change after construction.
#[derive(Clone)]
pub struct Cayley {
    name: String,
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    zero: Option<usize>,
    one: Option<usize>,
    labels: Vec<String>,
    laws: OnceLock<LawReport>,
}

fn validate_table(table: &'static str, entries: &[u32], size: usize) -> Result<()> {
    for (idx, &v) in entries.iter().enumerate() {
        if v as usize >= size {
            return Err(Error::MalformedTable {
                table,
                row: idx / size,
                col: idx % size,
                value: v as usize,
                size,
            });
        }
    }
    Ok(())
}

pub(crate) fn flatten_table(
    table: &'static str,
    rows: &[Vec<usize>],
    expected_rows: usize,
    expected_cols: usize,
) -> Result<Vec<u32>> {
    let shape_err = |cols| Error::TableShape { table, rows: rows.len(), cols, expected_rows, expected_cols };
    if rows.len() != expected_rows {
        return Err(shape_err(rows.first().map_or(0, Vec::len)));
    }
    let mut flat = Vec::with_capacity(expected_rows * expected_cols);
    for row in rows {
        if row.len() != expected_cols {
            return Err(shape_err(row.len()));
        }
        flat.extend(row.iter().map(|&v| v.min(u32::MAX as usize) as u32));
    }
    Ok(flat)
}

impl Cayley {
    /// Builds a structure from row-major tables given as nested vectors.
    pub fn from_tables(
        name: impl Into<String>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        zero: Option<usize>,
        one: Option<usize>,
    ) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::Invalid("carrier must be nonempty".into()));
        }
        let add = flatten_table("add", add, size, size)?;
        let mul = flatten_table("mul", mul, size, size)?;
        Self::from_flat(name.into(), size, add, mul, zero, one)
    }

    /// Builds a structure by evaluating the two operations on every pair.
    pub fn from_fn(
        name: impl Into<String>,
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: Option<usize>,
        one: Option<usize>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::Invalid("carrier must be nonempty".into()));
        }
        let mut a = Vec::with_capacity(size * size);
        let mut m = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                a.push(add(x, y).min(u32::MAX as usize) as u32);
                m.push(mul(x, y).min(u32::MAX as usize) as u32);
            }
        }
        Self::from_flat(name.into(), size, a, m, zero, one)
    }

    fn from_flat(
        name: String,
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: Option<usize>,
        one: Option<usize>,
    ) -> Result<Self> {
        if size > u32::MAX as usize {
            return Err(Error::CapExceeded { what: "carrier", size, cap: u32::MAX as usize });
        }
        validate_table("add", &add, size)?;
        validate_table("mul", &mul, size)?;
        for e in [zero, one].into_iter().flatten() {
            if e >= size {
                return Err(Error::ElementOutOfRange(e));
            }
        }
        Ok(Self {
            name,
            size,
            add,
            mul,
            zero,
            one,
            labels: (0..size).map(|x| x.to_string()).collect(),
            laws: OnceLock::new(),
        })
    }

    /// Replaces the display labels; the count must match the carrier.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::Invalid(format!(
                "{} labels for a carrier of {} elements",
                labels.len(),
                self.size
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> Range<usize> {
        0..self.size
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn require_zero(&self) -> Result<usize> {
        self.zero.ok_or(Error::MissingZero)
    }

    pub fn require_one(&self) -> Result<usize> {
        self.one.ok_or(Error::MissingOne)
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    /// `x^k` with left-nested products; `k` must be at least 1.
    pub fn power(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "powers start at 1");
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    /// Left-nested sum; the empty sum is the zero, when there is one.
    pub fn sum(&self, items: impl IntoIterator<Item = usize>) -> Option<usize> {
        let mut iter = items.into_iter();
        match iter.next() {
            Some(first) => Some(iter.fold(first, |acc, x| self.add(acc, x))),
            None => self.zero,
        }
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.size).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.size).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn additive_magma(&self) -> Magma {
        Magma { size: self.size, table: self.add.clone() }
    }

    pub fn multiplicative_magma(&self) -> Magma {
        Magma { size: self.size, table: self.mul.clone() }
    }

    /// The exhaustive law report, computed once per structure.
    pub fn laws(&self) -> &LawReport {
        self.laws.get_or_init(|| check_laws(self))
    }

    pub fn is_commutative_semiring(&self) -> bool {
        let l = self.laws();
        l.is_semiring() && l.mul_commutative.holds()
    }

    pub fn require_semiring(&self) -> Result<()> {
        let l = self.laws();
        if l.is_semiring() {
            Ok(())
        } else {
            Err(l.first_semiring_failure())
        }
    }

    pub fn require_commutative_semiring(&self) -> Result<()> {
        self.require_semiring()?;
        if self.laws().mul_commutative.holds() {
            Ok(())
        } else {
            Err(Error::NotCommutative)
        }
    }

    pub fn check_element(&self, x: usize) -> Result<usize> {
        if x < self.size {
            Ok(x)
        } else {
            Err(Error::ElementOutOfRange(x))
        }
    }
}

impl PartialEq for Cayley {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.add == other.add
            && self.mul == other.mul
            && self.zero == other.zero
            && self.one == other.one
    }
}

impl Eq for Cayley {}

impl fmt::Debug for Cayley {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cayley")
            .field("name", &self.name)
            .field("size", &self.size)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

/// A finite magma: one binary operation on `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Magma {
    size: usize,
    table: Vec<u32>,
}

impl Magma {
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let size = table.len();
        if size == 0 {
            return Err(Error::Invalid("carrier must be nonempty".into()));
        }
        let flat = flatten_table("op", table, size, size)?;
        validate_table("op", &flat, size)?;
        Ok(Self { size, table: flat })
    }

    pub fn from_fn(size: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..size).map(|a| (0..size).map(|b| op(a, b)).collect()).collect();
        Self::from_table(&rows)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// `(a+b)+(c+d) = (a+c)+(b+d)`, least failing `(a, b, c, d)` otherwise.
    pub fn medial(&self) -> Check {
        crate::laws::first_failure4(self.size, |a, b, c, d| {
            self.op(self.op(a, b), self.op(c, d)) == self.op(self.op(a, c), self.op(b, d))
        })
    }

    pub fn associative(&self) -> Check {
        crate::laws::first_failure3(self.size, |a, b, c| {
            self.op(self.op(a, b), c) == self.op(a, self.op(b, c))
        })
    }

    pub fn commutative(&self) -> Check {
        crate::laws::first_failure2(self.size, |a, b| self.op(a, b) == self.op(b, a))
    }

    /// The two-sided identity element, if any.
    pub fn identity(&self) -> Option<usize> {
        (0..self.size).find(|&e| (0..self.size).all(|x| self.op(e, x) == x && self.op(x, e) == x))
    }

    /// Checks that this is a commutative monoid.
    pub fn require_commutative_monoid(&self) -> Result<usize> {
        if let Check::Fails(w) = self.associative() {
            return Err(Error::LawViolation { law: "associative".into(), witness: w });
        }
        if let Check::Fails(w) = self.commutative() {
            return Err(Error::LawViolation { law: "commutative".into(), witness: w });
        }
        self.identity().ok_or_else(|| Error::LawViolation { law: "identity".into(), witness: vec![] })
    }
}
