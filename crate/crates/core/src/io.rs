//! Ring and homomorphism definition files.
//!
//! A ring file is a JSON object tagged by `kind`:
//!
//! ```json
//! {"kind": "tables", "order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "one": 1}
//! {"kind": "zmod", "n": 12}
//! {"kind": "product", "left": {"kind": "zmod", "n": 2}, "right": {"kind": "zmod", "n": 6}}
//! {"kind": "matrix", "base": {"kind": "zmod", "n": 2}, "k": 2}
//! {"kind": "quotient", "base": {"kind": "zmod", "n": 12}, "ideal_generators": [4], "side": "two-sided"}
//! ```
//!
//! Loading always re-runs the full axiom check on the finished tables and
//! recomputes the associativity flag, whatever the constructor.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lifting::RingHom;
use crate::ring::{ideal_closure, quotient, Limits, OpTable, RingTable, Side, Tables};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RingSpec {
    Tables {
        order: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        one: usize,
    },
    Zmod {
        n: usize,
    },
    Product {
        left: Box<RingSpec>,
        right: Box<RingSpec>,
    },
    Matrix {
        base: Box<RingSpec>,
        k: usize,
    },
    Quotient {
        base: Box<RingSpec>,
        ideal_generators: Vec<usize>,
        #[serde(default = "two_sided")]
        side: Side,
    },
}

fn two_sided() -> Side {
    Side::TwoSided
}

impl RingSpec {
    pub fn from_tables(tables: Tables) -> RingSpec {
        RingSpec::Tables {
            order: tables.order,
            add: tables.add,
            mul: tables.mul,
            one: tables.one,
        }
    }

    pub fn as_tables(&self) -> Option<Tables> {
        match self {
            RingSpec::Tables {
                order,
                add,
                mul,
                one,
            } => Some(Tables {
                order: *order,
                add: add.clone(),
                mul: mul.clone(),
                one: *one,
            }),
            _ => None,
        }
    }

    /// Builds the ring without the final re-validation pass.
    pub fn construct(&self, limits: &Limits) -> Result<RingTable> {
        match self {
            RingSpec::Tables { .. } => limits.from_tables(&self.as_tables().expect("tables")),
            RingSpec::Zmod { n } => limits.make_zmod(*n),
            RingSpec::Product { left, right } => {
                limits.make_product(&left.construct(limits)?, &right.construct(limits)?)
            }
            RingSpec::Matrix { base, k } => limits.make_matrix_ring(&base.construct(limits)?, *k),
            RingSpec::Quotient {
                base,
                ideal_generators,
                side,
            } => {
                let ring = base.construct(limits)?;
                let ideal = ideal_closure(&ring, ideal_generators, *side)?;
                Ok(quotient(&ring, &ideal)?.0)
            }
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<RingTable> {
        let ring = self.construct(limits)?;
        match self {
            RingSpec::Tables { .. } => Ok(ring),
            _ => limits.revalidate(&ring),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSpec {
    pub source: RingSpec,
    pub target: RingSpec,
    pub map: Vec<usize>,
}

/// A validated homomorphism together with both rings.
#[derive(Debug, Clone)]
pub struct LoadedHom {
    pub spec: HomSpec,
    pub source: RingTable,
    pub target: RingTable,
    pub hom: RingHom,
}

impl HomSpec {
    pub fn build(&self, limits: &Limits) -> Result<LoadedHom> {
        let source = self.source.build(limits)?;
        let target = self.target.build(limits)?;
        let hom = RingHom::new(&source, &target, self.map.clone())?;
        Ok(LoadedHom {
            spec: self.clone(),
            source,
            target,
            hom,
        })
    }
}

pub fn read_ring_spec(path: &Path) -> Result<RingSpec> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

pub fn read_hom_spec(path: &Path) -> Result<HomSpec> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

/// Identification block embedded at the top of every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingInfo {
    pub descriptor: RingSpec,
    pub order: usize,
    pub hash: String,
    pub assoc: crate::ring::AssocFlag,
    pub commutative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl RingInfo {
    pub fn new(spec: &RingSpec, ring: &RingTable) -> RingInfo {
        RingInfo {
            descriptor: spec.clone(),
            order: ring.order(),
            hash: ring.hash().to_owned(),
            assoc: ring.assoc_flag(),
            commutative: ring.is_commutative(),
            labels: ring.labels().map(<[String]>::to_vec),
        }
    }
}
