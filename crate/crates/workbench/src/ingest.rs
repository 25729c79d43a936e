//! Structure files: one JSON document per structure or semimodule.

use std::path::Path;

use ringoid_core::{Caps, Cayley, Check, FiniteSemimodule, Law};
use serde::{Deserialize, Serialize};

use crate::error::{ClaimFailure, Result, WorkbenchError};

/// Row-major tables with zero-based indices. The semimodule fields are
/// either all present or all absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub name: String,
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub claims: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub msize: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub madd: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mzero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug)]
pub enum Loaded {
    Structure(Cayley),
    Semimodule(FiniteSemimodule),
}

impl Loaded {
    pub fn structure(&self) -> &Cayley {
        match self {
            Loaded::Structure(s) => s,
            Loaded::Semimodule(m) => m.semiring(),
        }
    }
}

impl StructureFile {
    pub fn from_structure(s: &Cayley, claims: &[Law]) -> Self {
        Self {
            name: s.name().to_string(),
            size: s.size(),
            add: s.add_table(),
            mul: s.mul_table(),
            zero: s.zero(),
            one: s.one(),
            labels: Some(s.labels().to_vec()),
            claims: claims.iter().map(|l| l.name().to_string()).collect(),
            msize: None,
            madd: None,
            mzero: None,
            action: None,
        }
    }

    /// Builds the structure and verifies every claim; all failing claims
    /// are reported together.
    pub fn load(&self, caps: &Caps) -> Result<Loaded> {
        if self.size > caps.carrier {
            return Err(ringoid_core::Error::CapExceeded {
                what: "structure file carrier",
                size: self.size,
                cap: caps.carrier,
            }
            .into());
        }
        if self.add.len() != self.size {
            return Err(WorkbenchError::Usage(format!(
                "size is {} but the add table has {} rows",
                self.size,
                self.add.len()
            )));
        }
        let mut s = Cayley::from_tables(&self.name, &self.add, &self.mul, self.zero, self.one)?;
        if let Some(labels) = &self.labels {
            s = s.with_labels(labels.clone())?;
        }
        let laws = self
            .claims
            .iter()
            .map(|c| Law::from_name(c).ok_or_else(|| WorkbenchError::UnknownClaim(c.clone())))
            .collect::<Result<Vec<_>>>()?;
        let failures: Vec<ClaimFailure> = laws
            .iter()
            .filter_map(|&law| match s.laws().get(law) {
                Check::Holds => None,
                Check::Fails(w) => Some(ClaimFailure { law: law.name().into(), witness: w.clone() }),
            })
            .collect();
        if !failures.is_empty() {
            return Err(WorkbenchError::Claims { name: self.name.clone(), failures });
        }
        match (&self.msize, &self.madd, self.mzero, &self.action) {
            (None, None, None, None) => Ok(Loaded::Structure(s)),
            (Some(msize), Some(madd), Some(mzero), Some(action)) => {
                if madd.len() != *msize {
                    return Err(WorkbenchError::Usage(format!(
                        "msize is {msize} but madd has {} rows",
                        madd.len()
                    )));
                }
                let m = FiniteSemimodule::new(s, madd, mzero, action)?;
                let report = m.check();
                let failures: Vec<ClaimFailure> = report
                    .entries()
                    .iter()
                    .filter_map(|(law, c)| {
                        c.witness().map(|w| ClaimFailure { law: (*law).into(), witness: w.to_vec() })
                    })
                    .collect();
                if !failures.is_empty() {
                    return Err(WorkbenchError::Claims { name: self.name.clone(), failures });
                }
                Ok(Loaded::Semimodule(m))
            }
            _ => Err(WorkbenchError::Usage(
                "semimodule files need msize, madd, mzero and action together".into(),
            )),
        }
    }
}

pub fn parse(text: &str, caps: &Caps) -> Result<Loaded> {
    serde_json::from_str::<StructureFile>(text)?.load(caps)
}

pub fn ingest(path: &Path, caps: &Caps) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| WorkbenchError::Io { path: path.to_path_buf(), source })?;
    parse(&text, caps)
}
