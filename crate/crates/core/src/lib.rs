//! Finite ringoids, semirings and semimodules as explicit Cayley tables.
//!
//! The crate decides algebraic laws exhaustively, enumerates ideal lattices,
//! computes prime spectra and zero-divisor data, and checks covering and
//! avoidance statements on concrete finite instances. Every decision comes
//! with a lexicographically least witness so that reports are reproducible.

pub mod bitset;
pub mod constructions;
pub mod covering;
pub mod error;
pub mod ideal;
pub mod laws;
pub mod newman;
pub mod quotient;
pub mod semimodule;
pub mod spectrum;
pub mod standard;
pub mod structure;
pub mod sumtree;
pub mod zerodiv;

pub use bitset::ElemSet;
pub use error::{Error, Result};
pub use ideal::{IdealSet, Side};
pub use laws::{check_laws, Check, Law, LawReport};
pub use semimodule::FiniteSemimodule;
pub use structure::{Cayley, Magma};
pub use sumtree::SumTree;

/// Size limits for constructions and exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Caps {
    /// Largest carrier a construction may materialise.
    pub carrier: usize,
    /// Largest carrier handed to full ideal enumeration.
    pub ideal_enumeration: usize,
    /// Largest spectrum whose subsets are enumerated.
    pub spectrum: usize,
    /// Largest number of candidate maps scanned for endomorphisms.
    pub map_enumeration: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { carrier: 4096, ideal_enumeration: 16, spectrum: 20, map_enumeration: 1 << 24 }
    }
}
