//! The built-in corpus of named structures.

use ringoid_core::constructions::{
    austere_extension, direct_product, monoid_semiring, truncated_polynomial_hemiring,
};
use ringoid_core::ideal::{generate_ideal, Side};
use ringoid_core::standard::{
    boolean, boolean_cross_product, boolean_lattice, chain, cyclic_group, f2xy_square, integers_mod,
    saturating,
};
use ringoid_core::{Caps, Cayley, FiniteSemimodule, IdealSet, Law};
use serde::Serialize;

use crate::error::{Result, WorkbenchError};

const SEMIRING: &[Law] = &[
    Law::LeftDistributive,
    Law::RightDistributive,
    Law::AddAssociative,
    Law::AddCommutative,
    Law::HasZero,
    Law::ZeroAbsorbing,
    Law::HasOne,
    Law::MulAssociative,
];

/// Flags stated for an entry; `None` where the notion does not apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DocumentedFlags {
    pub packed: Option<bool>,
    pub weak_gaussian: Option<bool>,
    pub entire: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedIdeal {
    pub name: &'static str,
    pub generators: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
    pub structure: Cayley,
    pub claims: Vec<Law>,
    pub flags: DocumentedFlags,
    pub ideals: Vec<NamedIdeal>,
}

impl CorpusEntry {
    fn new(name: &'static str, source: &'static str, structure: Cayley, claims: &[Law]) -> Self {
        Self {
            name,
            source,
            structure: structure.renamed(name),
            claims: claims.to_vec(),
            flags: DocumentedFlags { packed: None, weak_gaussian: None, entire: false },
            ideals: Vec::new(),
        }
    }

    fn flags(mut self, packed: bool, weak_gaussian: bool, entire: bool) -> Self {
        self.flags = DocumentedFlags { packed: Some(packed), weak_gaussian: Some(weak_gaussian), entire };
        self
    }

    fn ideal(mut self, name: &'static str, generators: &[usize]) -> Self {
        self.ideals.push(NamedIdeal { name, generators: generators.to_vec() });
        self
    }

    pub fn named_ideal(&self, name: &str) -> Option<Result<IdealSet>> {
        self.ideals
            .iter()
            .find(|i| i.name == name)
            .map(|i| generate_ideal(&self.structure, &i.generators, Side::TwoSided).map_err(Into::into))
    }

    pub fn is_semiring(&self) -> bool {
        self.structure.laws().is_semiring()
    }

    /// The semimodules the zero-divisor suites run over: `S`, `S^2` when
    /// it stays small, and the zero module.
    pub fn modules(&self, caps: &Caps) -> Result<Vec<FiniteSemimodule>> {
        if !self.is_semiring() {
            return Ok(Vec::new());
        }
        let s = &self.structure;
        let mut out = vec![FiniteSemimodule::regular(s)?];
        if s.size() <= 8 {
            out.push(FiniteSemimodule::power(s, 2, caps)?);
        }
        out.push(FiniteSemimodule::zero_module(s)?);
        Ok(out)
    }
}

fn with_commutative(extra: &[Law]) -> Vec<Law> {
    let mut v = SEMIRING.to_vec();
    v.push(Law::MulCommutative);
    v.extend_from_slice(extra);
    v
}

/// Every entry, sorted by name.
pub fn corpus(caps: &Caps) -> Result<Vec<CorpusEntry>> {
    let b = boolean();
    let comm = with_commutative(&[]);
    let mut entries = vec![
        CorpusEntry::new(
            "austere-z4",
            "austere extension of Z/4",
            austere_extension(&integers_mod(4))?,
            &comm,
        )
        .flags(true, false, true),
        CorpusEntry::new(
            "austere-z6",
            "austere extension of Z/6",
            austere_extension(&integers_mod(6))?,
            &comm,
        )
        .flags(false, false, true)
        .ideal("I", &[2, 3])
        .ideal("M1", &[2])
        .ideal("M2", &[3]),
        CorpusEntry::new(
            "b-cross-product",
            "cross product hemialgebra on B^3",
            boolean_cross_product(),
            &[
                Law::LeftDistributive,
                Law::RightDistributive,
                Law::AddAssociative,
                Law::AddCommutative,
                Law::HasZero,
                Law::ZeroAbsorbing,
            ],
        ),
        CorpusEntry::new(
            "b-squared",
            "direct product B x B",
            direct_product(&[b.clone(), b.clone()], caps)?,
            &comm,
        )
        .flags(true, true, false),
        CorpusEntry::new(
            "b-z2",
            "monoid semiring B[Z/2]",
            monoid_semiring(&b, &cyclic_group(2), caps)?.structure().clone(),
            &comm,
        )
        .flags(true, false, true),
        CorpusEntry::new(
            "boolean",
            "Boolean semifield",
            b.clone(),
            &with_commutative(&[Law::Zerosumfree, Law::Entire]),
        )
        .flags(true, true, true),
        CorpusEntry::new("boolean-lattice-4", "Boolean lattice on two atoms", boolean_lattice(2), &comm)
            .flags(true, true, false),
        CorpusEntry::new(
            "chain-3",
            "chain semiring {0, a, 1}",
            chain(3),
            &with_commutative(&[Law::Zerosumfree]),
        )
        .flags(true, true, false),
        CorpusEntry::new(
            "chain-3-x2",
            "chain-3[X]/(X^2)",
            truncated_polynomial_hemiring(&chain(3), 1, caps)?,
            &comm,
        )
        .flags(true, false, false),
        CorpusEntry::new(
            "chain-4",
            "chain semiring on four elements",
            chain(4),
            &with_commutative(&[Law::Zerosumfree]),
        )
        .flags(true, true, false),
        CorpusEntry::new("f2xy", "F2[x,y]/(x,y)^2", f2xy_square(), &comm)
            .flags(true, true, false)
            .ideal("m", &[2, 4])
            .ideal("x", &[2])
            .ideal("y", &[4])
            .ideal("x+y", &[6]),
        CorpusEntry::new(
            "n3",
            "saturating semiring N3",
            saturating(3),
            &with_commutative(&[Law::Zerosumfree]),
        )
        .flags(true, false, true),
        CorpusEntry::new("z4", "integers mod 4", integers_mod(4), &comm).flags(true, true, false),
        CorpusEntry::new("z6", "integers mod 6", integers_mod(6), &comm).flags(true, true, false),
    ];
    entries.sort_by_key(|e| e.name);
    for e in &entries {
        if e.structure.size() > caps.carrier {
            return Err(ringoid_core::Error::CapExceeded {
                what: "corpus entry",
                size: e.structure.size(),
                cap: caps.carrier,
            }
            .into());
        }
    }
    Ok(entries)
}

pub fn find<'a>(entries: &'a [CorpusEntry], name: &str) -> Result<&'a CorpusEntry> {
    entries.iter().find(|e| e.name == name).ok_or_else(|| WorkbenchError::UnknownStructure(name.to_string()))
}
