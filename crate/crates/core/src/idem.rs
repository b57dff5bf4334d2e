//! Idempotents and the partition of a ring into blocks `B_e`.
//!
//! In a finite power-associative ring every element `x` has exactly one
//! idempotent among its powers, written `e_x`. Grouping elements by `e_x`
//! partitions the ring; `B_0` holds the nilpotents and, for associative
//! rings, `B_1` holds the units.
//!
//! `e_x` is computed two independent ways. [`e_of_squaring`] follows the
//! repeated-squaring construction: find `y = x^(2^r)` that recurs as
//! `y = y^t`, then `y^(t-1)` is idempotent. [`e_of_cycle`] walks the power
//! sequence, finds its pre-period and period, and reads off the one power on
//! the cycle whose exponent is a multiple of the period.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::Violations;
use crate::ring::{OpTable, PowerOrbit, RingTable};

/// An idempotent together with an exponent `m >= 1` such that `x^m` equals it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentPower {
    pub idempotent: usize,
    pub exponent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentSet {
    #[serde(skip)]
    ring: String,
    pub members: Vec<usize>,
}

impl IdempotentSet {
    pub fn ring_hash(&self) -> &str {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }
}

pub fn all_idempotents(ring: &RingTable) -> IdempotentSet {
    let members = ring.elements().filter(|&e| ring.is_idempotent(e)).collect();
    IdempotentSet {
        ring: ring.hash().to_owned(),
        members,
    }
}

fn naive_pow(ring: &RingTable, x: usize, k: usize) -> usize {
    let mut p = x;
    for _ in 1..k {
        p = ring.mul(p, x);
    }
    p
}

/// `e_x` via repeated squaring.
///
/// Takes the least `r >= 1` for which `y = x^(2^r)` satisfies `y = y^t` for
/// some `t > 1` (least such `t`), and returns `y^(t-1)` with exponent
/// `2^r (t-1)`.
pub fn e_of_squaring(ring: &RingTable, x: usize) -> Result<IdempotentPower> {
    ring.check_elem(x)?;
    let n = ring.order();
    let mut two_r = 2usize;
    while two_r <= 2 * n {
        let y = naive_pow(ring, x, two_r);
        let mut prev = y;
        for t in 2..=n + 1 {
            let p = ring.mul(prev, y);
            if p == y {
                return Ok(IdempotentPower {
                    idempotent: prev,
                    exponent: two_r * (t - 1),
                });
            }
            prev = p;
        }
        two_r *= 2;
    }
    Err(Error::Unterminated(x))
}

/// `e_x` via cycle detection on the power sequence.
///
/// The exponent returned is the least `m` with `x^m` idempotent: the least
/// multiple of the period that is at least the start of the cycle.
pub fn e_of_cycle(ring: &RingTable, x: usize) -> Result<IdempotentPower> {
    ring.check_elem(x)?;
    let orbit = PowerOrbit::new(ring, x);
    let start = orbit.cycle_start;
    let exponent = start.div_ceil(orbit.period) * orbit.period;
    Ok(IdempotentPower {
        idempotent: orbit.nth(exponent),
        exponent,
    })
}

/// The idempotent power of `x`, by the squaring construction.
pub fn e_of(ring: &RingTable, x: usize) -> Result<usize> {
    e_of_squaring(ring, x).map(|p| p.idempotent)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentPartition {
    #[serde(skip)]
    ring: String,
    pub idempotents: Vec<usize>,
    pub blocks: BTreeMap<usize, Vec<usize>>,
    #[serde(skip)]
    block_of: Vec<usize>,
}

impl IdempotentPartition {
    pub fn ring_hash(&self) -> &str {
        &self.ring
    }

    /// `e_x` for an element of the ring the partition was built from.
    pub fn idempotent_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block(&self, e: usize) -> Option<&[usize]> {
        self.blocks.get(&e).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Disjointness, coverage and the defining property of each block.
    pub fn check_axioms(&self, ring: &RingTable) -> Result<Vec<String>> {
        ring.ensure_same(&self.ring)?;
        let mut problems = Vec::new();
        let mut seen = vec![0usize; ring.order()];
        for (&e, members) in &self.blocks {
            if !ring.is_idempotent(e) {
                problems.push(format!("key {e} is not idempotent"));
            }
            if members.binary_search(&e).is_err() {
                problems.push(format!("{e} is missing from its own block"));
            }
            for &x in members {
                seen[x] += 1;
                let orbit = PowerOrbit::new(ring, x);
                if !orbit.powers.contains(&e) {
                    problems.push(format!("no power of {x} equals {e}"));
                }
            }
        }
        for (x, &count) in seen.iter().enumerate() {
            if count != 1 {
                problems.push(format!("{x} lies in {count} blocks"));
            }
        }
        let total: usize = self.blocks.values().map(Vec::len).sum();
        if total != ring.order() {
            problems.push(format!("block sizes sum to {total}, not {}", ring.order()));
        }
        Ok(problems)
    }
}

pub fn idempotent_partition(ring: &RingTable) -> Result<IdempotentPartition> {
    let block_of = ring
        .elements()
        .into_par_iter()
        .map(|x| e_of(ring, x))
        .collect::<Result<Vec<_>>>()?;
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, &e) in block_of.iter().enumerate() {
        blocks.entry(e).or_default().push(x);
    }
    Ok(IdempotentPartition {
        ring: ring.hash().to_owned(),
        idempotents: blocks.keys().copied().collect(),
        blocks,
        block_of,
    })
}

pub fn nilpotents(ring: &RingTable) -> Vec<usize> {
    ring.elements()
        .filter(|&x| PowerOrbit::new(ring, x).powers.contains(&ring.zero()))
        .collect()
}

/// Least two-sided inverse of `x`, if any.
pub fn inverse(ring: &RingTable, x: usize) -> Option<usize> {
    let one = ring.one();
    ring.elements()
        .find(|&y| ring.mul(x, y) == one && ring.mul(y, x) == one)
}

pub fn units(ring: &RingTable) -> Vec<usize> {
    ring.elements()
        .filter(|&x| inverse(ring, x).is_some())
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    /// `a1 a2 = 0` while `e_{a1} e_{a2} != 0`.
    pub zero_product_lifts: Violations<[usize; 2]>,
    /// `a, b` in the same `B_e` with `e != 0` and `ab = 0`.
    pub same_block_zero_products: Violations<[usize; 2]>,
    /// `None` when the ring is not associative and the scan is skipped.
    pub nilpotent_and_unit_blocks: Option<NilUnitCheck>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilUnitCheck {
    /// Symmetric difference of `B_0` and the nilpotents.
    pub nilpotent_mismatch: Vec<usize>,
    /// Symmetric difference of `B_1` and the units.
    pub unit_mismatch: Vec<usize>,
    /// Elements outside `B_1` with no non-zero `z` such that `xz = 0` or `zx = 0`.
    pub non_units_not_zero_divisors: Vec<usize>,
}

impl BlockReport {
    pub fn passed(&self) -> bool {
        self.zero_product_lifts.is_empty()
            && self.same_block_zero_products.is_empty()
            && self.nilpotent_and_unit_blocks.as_ref().is_none_or(|c| {
                c.nilpotent_mismatch.is_empty()
                    && c.unit_mismatch.is_empty()
                    && c.non_units_not_zero_divisors.is_empty()
            })
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a
        .iter()
        .filter(|x| !b.contains(x))
        .chain(b.iter().filter(|x| !a.contains(x)))
        .copied()
        .collect();
    out.sort_unstable();
    out
}

/// Exhaustive scan of the zero-product properties of the blocks.
///
/// The nilpotent/unit comparison only runs for associative rings.
pub fn verify_block_properties(
    ring: &RingTable,
    partition: &IdempotentPartition,
) -> Result<BlockReport> {
    ring.ensure_same(partition.ring_hash())?;
    let zero = ring.zero();
    let mut report = BlockReport::default();
    for a in ring.elements() {
        let ea = partition.idempotent_of(a);
        for b in ring.elements() {
            if ring.mul(a, b) != zero {
                continue;
            }
            let eb = partition.idempotent_of(b);
            if ring.mul(ea, eb) != zero {
                report.zero_product_lifts.push([a, b]);
            }
            if ea == eb && ea != zero {
                report.same_block_zero_products.push([a, b]);
            }
        }
    }
    if ring.is_associative() {
        let empty = Vec::new();
        let b0 = partition.block(zero).unwrap_or(&empty);
        let b1 = partition.block(ring.one()).unwrap_or(&empty);
        let non_units_not_zero_divisors = if ring.order() > 1 {
            ring.elements()
                .filter(|&x| partition.idempotent_of(x) != ring.one())
                .filter(|&x| {
                    !ring
                        .elements()
                        .any(|z| z != zero && (ring.mul(x, z) == zero || ring.mul(z, x) == zero))
                })
                .collect()
        } else {
            Vec::new()
        };
        report.nilpotent_and_unit_blocks = Some(NilUnitCheck {
            nilpotent_mismatch: symmetric_difference(b0, &nilpotents(ring)),
            unit_mismatch: symmetric_difference(b1, &units(ring)),
            non_units_not_zero_divisors,
        });
    }
    Ok(report)
}
