//! Finite unital rings stored as dense operation tables.
//!
//! Elements are the indices `0..n`. A [`RingTable`] can only be obtained
//! through a constructor that either builds a ring whose axioms hold by
//! construction ([`make_zmod`], [`make_product`], [`make_matrix_ring`],
//! [`quotient`]) or through [`from_tables`], which validates every axiom and
//! computes the associativity flag itself.

use std::fmt;
use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::lifting::RingHom;

/// Largest ring order accepted by the default constructors.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Read access to a pair of `n x n` operation tables.
///
/// Implemented by validated rings and by [`RawTables`], so the axiom and
/// power-associativity checkers can run on tables that are not rings.
pub trait OpTable: Sync {
    fn order(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn one(&self) -> usize;
}

/// Table data as it appears in ring definition files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub one: usize,
}

/// Shape-checked but otherwise unvalidated tables.
#[derive(Debug, Clone)]
pub struct RawTables {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    one: usize,
}

impl RawTables {
    pub fn new(tables: &Tables) -> Result<Self> {
        let n = tables.order;
        if n == 0 {
            return Err(Error::EmptyRing);
        }
        if n > u32::MAX as usize {
            return Err(Error::TooLarge {
                order: n as u128,
                max: u32::MAX as usize,
            });
        }
        let flatten = |name: &str, rows: &[Vec<usize>]| -> Result<Vec<u32>> {
            if rows.len() != n {
                return Err(Error::Shape(format!(
                    "{name} has {} rows, expected {n}",
                    rows.len()
                )));
            }
            let mut flat = Vec::with_capacity(n * n);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Shape(format!(
                        "{name} row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (j, &v) in row.iter().enumerate() {
                    if v >= n {
                        return Err(Error::Shape(format!(
                            "{name}[{i}][{j}] = {v} is out of range"
                        )));
                    }
                    flat.push(v as u32);
                }
            }
            Ok(flat)
        };
        let add = flatten("add", &tables.add)?;
        let mul = flatten("mul", &tables.mul)?;
        if tables.one >= n {
            return Err(Error::Shape(format!(
                "one = {} is out of range",
                tables.one
            )));
        }
        Ok(RawTables {
            order: n,
            add,
            mul,
            one: tables.one,
        })
    }
}

impl OpTable for RawTables {
    fn order(&self) -> usize {
        self.order
    }
    #[inline]
    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }
    fn one(&self) -> usize {
        self.one
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssocFlag {
    Associative,
    PowerAssociative,
    Unverified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn closes_left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    pub fn closes_right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "two-sided" => Ok(Side::TwoSided),
            other => Err(format!(
                "unknown side `{other}` (expected left, right or two-sided)"
            )),
        }
    }
}

/// A finite unital ring whose axioms have been established.
#[derive(Clone)]
pub struct RingTable {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    assoc: AssocFlag,
    commutative: bool,
    labels: Option<Vec<String>>,
    hash: String,
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable")
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .field("assoc", &self.assoc)
            .field("commutative", &self.commutative)
            .field("hash", &self.short_hash())
            .finish()
    }
}

impl OpTable for RingTable {
    fn order(&self) -> usize {
        self.order
    }
    #[inline]
    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }
    fn one(&self) -> usize {
        self.one
    }
}

impl RingTable {
    /// Assembles a ring from tables whose axioms are known to hold.
    fn assemble(
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        assoc: AssocFlag,
        labels: Option<Vec<String>>,
    ) -> RingTable {
        let mut neg = vec![0u32; order];
        for a in 0..order {
            let row = &add[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&s| s as usize == zero)
                .expect("additive inverse");
            neg[a] = b as u32;
        }
        let commutative =
            (0..order).all(|a| (a + 1..order).all(|b| mul[a * order + b] == mul[b * order + a]));
        let hash = content_hash(order, zero, one, &add, &mul);
        RingTable {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            assoc,
            commutative,
            labels,
            hash,
        }
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn elements(&self) -> Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn assoc_flag(&self) -> AssocFlag {
        self.assoc
    }

    pub fn is_associative(&self) -> bool {
        self.assoc == AssocFlag::Associative
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// SHA-256 over the order, distinguished elements and both tables.
    pub fn hash(&self) -> &str {
        &self.hash
    }

    pub fn short_hash(&self) -> &str {
        &self.hash[..12]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn check_elem(&self, x: usize) -> Result<usize> {
        if x < self.order {
            Ok(x)
        } else {
            Err(Error::OutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn sum<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    pub(crate) fn ensure_associative(&self, op: &'static str) -> Result<()> {
        if self.is_associative() {
            Ok(())
        } else {
            Err(Error::NotAssociative { op })
        }
    }

    pub(crate) fn ensure_same(&self, hash: &str) -> Result<()> {
        if self.hash == hash {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                expected: self.short_hash().into(),
                found: hash[..hash.len().min(12)].into(),
            })
        }
    }

    /// Left-normed power `x^k = (..((x x) x)..) x`.
    pub fn pow(&self, x: usize, k: usize) -> Result<usize> {
        self.check_elem(x)?;
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        if k <= self.order {
            let mut p = x;
            for _ in 1..k {
                p = self.mul(p, x);
            }
            Ok(p)
        } else {
            Ok(PowerOrbit::new(self, x).nth(k))
        }
    }

    /// Exports the tables in definition-file form.
    pub fn tables(&self) -> Tables {
        let n = self.order;
        let rows = |t: &[u32]| {
            t.chunks(n)
                .map(|r| r.iter().map(|&v| v as usize).collect())
                .collect()
        };
        Tables {
            order: n,
            add: rows(&self.add),
            mul: rows(&self.mul),
            one: self.one,
        }
    }

    /// Runs the full axiom check against the stored tables.
    pub fn validate(&self) -> ValidationReport {
        validate_axioms(self)
    }
}

fn content_hash(order: usize, zero: usize, one: usize, add: &[u32], mul: &[u32]) -> String {
    let mut h = Sha256::new();
    h.update(b"finring-tables-v1");
    h.update((order as u64).to_le_bytes());
    h.update((zero as u64).to_le_bytes());
    h.update((one as u64).to_le_bytes());
    for &v in add.iter().chain(mul) {
        h.update(v.to_le_bytes());
    }
    hex::encode(h.finalize())
}

/// The left-normed power sequence `x, x^2, x^3, ...` of one element.
///
/// `powers[k - 1]` is `x^k` for every distinct power; the sequence then
/// re-enters itself at exponent `cycle_start` with period `period`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOrbit {
    pub powers: Vec<usize>,
    pub cycle_start: usize,
    pub period: usize,
}

impl PowerOrbit {
    pub fn new<T: OpTable + ?Sized>(t: &T, x: usize) -> PowerOrbit {
        let n = t.order();
        let mut seen = vec![0u32; n];
        let mut powers = vec![x];
        seen[x] = 1;
        let mut p = x;
        loop {
            p = t.mul(p, x);
            if seen[p] != 0 {
                let cycle_start = seen[p] as usize;
                let period = powers.len() + 1 - cycle_start;
                return PowerOrbit {
                    powers,
                    cycle_start,
                    period,
                };
            }
            powers.push(p);
            seen[p] = powers.len() as u32;
        }
    }

    /// Number of distinct powers (pre-period plus period).
    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn nth(&self, k: usize) -> usize {
        assert!(k >= 1);
        if k <= self.powers.len() {
            self.powers[k - 1]
        } else {
            let offset = (k - self.cycle_start) % self.period;
            self.powers[self.cycle_start - 1 + offset]
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveCommutativity,
    AdditiveAssociativity,
    LeftDistributivity,
    RightDistributivity,
    MultiplicativeIdentity,
    ZeroAnnihilation,
}

impl Axiom {
    const PER_ELEMENT: [Axiom; 7] = [
        Axiom::AdditiveInverse,
        Axiom::AdditiveCommutativity,
        Axiom::AdditiveAssociativity,
        Axiom::LeftDistributivity,
        Axiom::RightDistributivity,
        Axiom::MultiplicativeIdentity,
        Axiom::ZeroAnnihilation,
    ];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    fn from_failures(failures: Vec<AxiomFailure>) -> Self {
        ValidationReport {
            passed: failures.is_empty(),
            failures,
        }
    }

    pub fn failure(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }

    pub fn summary(&self) -> String {
        if self.passed {
            return "all axioms hold".into();
        }
        self.failures
            .iter()
            .map(|f| format!("{} at {:?}", f.axiom, f.witness))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Least element acting as a two-sided additive identity, if any.
pub fn additive_identity<T: OpTable + ?Sized>(t: &T) -> Option<usize> {
    let n = t.order();
    (0..n).find(|&z| (0..n).all(|x| t.add(z, x) == x && t.add(x, z) == x))
}

/// Checks the abelian group laws, both distributive laws and the identity.
///
/// Every failing axiom class is reported once, with its lexicographically
/// first witness.
pub fn validate_axioms<T: OpTable + ?Sized>(t: &T) -> ValidationReport {
    let n = t.order();
    let zero = additive_identity(t);
    let one = t.one();

    let per_a: Vec<[Option<Vec<usize>>; 7]> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut found: [Option<Vec<usize>>; 7] = Default::default();
            if let Some(z) = zero {
                if !(0..n).any(|b| t.add(a, b) == z && t.add(b, a) == z) {
                    found[0] = Some(vec![a]);
                }
                if t.mul(z, a) != z || t.mul(a, z) != z {
                    found[6] = Some(vec![a]);
                }
            }
            if t.mul(one, a) != a || t.mul(a, one) != a {
                found[5] = Some(vec![a]);
            }
            for b in 0..n {
                let ab = t.add(a, b);
                if found[1].is_none() && ab != t.add(b, a) {
                    found[1] = Some(vec![a, b]);
                }
                let ma_b = t.mul(a, b);
                for c in 0..n {
                    if found[2].is_none() && t.add(ab, c) != t.add(a, t.add(b, c)) {
                        found[2] = Some(vec![a, b, c]);
                    }
                    if found[3].is_none() && t.mul(a, t.add(b, c)) != t.add(ma_b, t.mul(a, c)) {
                        found[3] = Some(vec![a, b, c]);
                    }
                    if found[4].is_none() && t.mul(ab, c) != t.add(t.mul(a, c), t.mul(b, c)) {
                        found[4] = Some(vec![a, b, c]);
                    }
                }
            }
            found
        })
        .collect();

    let mut failures = Vec::new();
    if zero.is_none() {
        failures.push(AxiomFailure {
            axiom: Axiom::AdditiveIdentity,
            witness: Vec::new(),
        });
    }
    for (slot, axiom) in Axiom::PER_ELEMENT.iter().enumerate() {
        if let Some(witness) = per_a.iter().find_map(|f| f[slot].clone()) {
            failures.push(AxiomFailure {
                axiom: *axiom,
                witness,
            });
        }
    }
    ValidationReport::from_failures(failures)
}

/// Lexicographically first `(a, b, c)` with `(ab)c != a(bc)`.
pub fn first_associativity_failure<T: OpTable + ?Sized>(t: &T) -> Option<[usize; 3]> {
    let n = t.order();
    (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            let ab = t.mul(a, b);
            for c in 0..n {
                if t.mul(ab, c) != t.mul(a, t.mul(b, c)) {
                    return Some([a, b, c]);
                }
            }
        }
        None
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerWitness {
    pub x: usize,
    pub i: usize,
    pub j: usize,
}

/// Verifies `x^i * x^j = x^(i+j)` under left-normed powers.
///
/// For each `x` the identity is checked for all `i, j >= 1` with
/// `i + j <= 2m`, where `m` counts the distinct powers of `x`. Only the
/// multiplication table is consulted.
pub fn check_power_associative<T: OpTable + ?Sized>(t: &T) -> Option<PowerWitness> {
    (0..t.order()).into_par_iter().find_map_first(|x| {
        let orbit = PowerOrbit::new(t, x);
        let bound = 2 * orbit.len();
        let powers: Vec<usize> = (1..=bound).map(|k| orbit.nth(k)).collect();
        for i in 1..bound {
            for j in 1..=bound - i {
                if t.mul(powers[i - 1], powers[j - 1]) != powers[i + j - 1] {
                    return Some(PowerWitness { x, i, j });
                }
            }
        }
        None
    })
}

/// Size limits applied by the constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl Limits {
    pub fn new(max_order: usize) -> Self {
        Limits { max_order }
    }

    fn check(&self, order: u128) -> Result<usize> {
        if order == 0 {
            Err(Error::EmptyRing)
        } else if order > self.max_order as u128 {
            Err(Error::TooLarge {
                order,
                max: self.max_order,
            })
        } else {
            Ok(order as usize)
        }
    }

    pub fn make_zmod(&self, n: usize) -> Result<RingTable> {
        let n = self.check(n as u128)?;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(((a + b) % n) as u32);
                mul.push(((a * b) % n) as u32);
            }
        }
        Ok(RingTable::assemble(
            n,
            add,
            mul,
            0,
            1 % n,
            AssocFlag::Associative,
            None,
        ))
    }

    pub fn make_product(&self, left: &RingTable, right: &RingTable) -> Result<RingTable> {
        let (n1, n2) = (left.order, right.order);
        let n = self.check(n1 as u128 * n2 as u128)?;
        let pair = |x: usize| (x / n2, x % n2);
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (a1, a2) = pair(x);
            for y in 0..n {
                let (b1, b2) = pair(y);
                add.push((left.add(a1, b1) * n2 + right.add(a2, b2)) as u32);
                mul.push((left.mul(a1, b1) * n2 + right.mul(a2, b2)) as u32);
            }
        }
        let assoc = match (left.assoc, right.assoc) {
            (AssocFlag::Associative, AssocFlag::Associative) => AssocFlag::Associative,
            (AssocFlag::Unverified, _) | (_, AssocFlag::Unverified) => AssocFlag::Unverified,
            _ => AssocFlag::PowerAssociative,
        };
        let labels = (0..n)
            .map(|x| {
                let (a, b) = pair(x);
                format!("({},{})", left.label(a), right.label(b))
            })
            .collect();
        Ok(RingTable::assemble(
            n,
            add,
            mul,
            left.zero * n2 + right.zero,
            left.one * n2 + right.one,
            assoc,
            Some(labels),
        ))
    }

    /// `k x k` matrices over a commutative associative base ring.
    ///
    /// Entries are enumerated row-major with the first entry as the most
    /// significant digit, so `[[a, b], [c, d]]` has index `((a n + b) n + c) n + d`.
    pub fn make_matrix_ring(&self, base: &RingTable, k: usize) -> Result<RingTable> {
        if k == 0 {
            return Err(Error::Shape("matrix size k must be at least 1".into()));
        }
        base.ensure_associative("make_matrix_ring")?;
        if !base.is_commutative() {
            return Err(Error::NotCommutative {
                op: "make_matrix_ring",
            });
        }
        let m = base.order;
        let cells = k * k;
        let order = (m as u128).checked_pow(cells as u32).unwrap_or(u128::MAX);
        let n = self.check(order)?;

        let decode = |mut x: usize| {
            let mut entries = vec![0usize; cells];
            for slot in entries.iter_mut().rev() {
                *slot = x % m;
                x /= m;
            }
            entries
        };
        let encode = |entries: &[usize]| entries.iter().fold(0usize, |acc, &e| acc * m + e);
        let matrices: Vec<Vec<usize>> = (0..n).map(decode).collect();

        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        let mut scratch = vec![0usize; cells];
        for a in &matrices {
            for b in &matrices {
                for (s, (&x, &y)) in scratch.iter_mut().zip(a.iter().zip(b)) {
                    *s = base.add(x, y);
                }
                add.push(encode(&scratch) as u32);
                for i in 0..k {
                    for j in 0..k {
                        scratch[i * k + j] = (0..k).fold(base.zero, |acc, l| {
                            base.add(acc, base.mul(a[i * k + l], b[l * k + j]))
                        });
                    }
                }
                mul.push(encode(&scratch) as u32);
            }
        }
        let mut identity = vec![base.zero; cells];
        for i in 0..k {
            identity[i * k + i] = base.one;
        }
        let labels = matrices
            .iter()
            .map(|e| {
                let rows: Vec<String> = e
                    .chunks(k)
                    .map(|r| {
                        format!(
                            "[{}]",
                            r.iter()
                                .map(|&v| base.label(v))
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            })
            .collect();
        Ok(RingTable::assemble(
            n,
            add,
            mul,
            encode(&vec![base.zero; cells]),
            encode(&identity),
            AssocFlag::Associative,
            Some(labels),
        ))
    }

    /// Validates arbitrary tables and classifies their associativity.
    #[allow(clippy::wrong_self_convention)]
    pub fn from_tables(&self, tables: &Tables) -> Result<RingTable> {
        self.check(tables.order as u128)?;
        let raw = RawTables::new(tables)?;
        self.from_raw(raw, None)
    }

    #[allow(clippy::wrong_self_convention)]
    pub(crate) fn from_raw(
        &self,
        raw: RawTables,
        labels: Option<Vec<String>>,
    ) -> Result<RingTable> {
        self.check(raw.order as u128)?;
        let report = validate_axioms(&raw);
        if !report.passed {
            return Err(Error::Axioms(report));
        }
        let zero = additive_identity(&raw).expect("validated");
        let assoc = if first_associativity_failure(&raw).is_none() {
            AssocFlag::Associative
        } else if let Some(w) = check_power_associative(&raw) {
            return Err(Error::NotPowerAssociative {
                x: w.x,
                i: w.i,
                j: w.j,
            });
        } else {
            AssocFlag::PowerAssociative
        };
        Ok(RingTable::assemble(
            raw.order, raw.add, raw.mul, zero, raw.one, assoc, labels,
        ))
    }

    /// Re-runs every check on an already constructed ring, recomputing the
    /// associativity flag from the tables.
    pub fn revalidate(&self, ring: &RingTable) -> Result<RingTable> {
        let raw = RawTables {
            order: ring.order,
            add: ring.add.clone(),
            mul: ring.mul.clone(),
            one: ring.one,
        };
        self.from_raw(raw, ring.labels.clone())
    }
}

pub fn make_zmod(n: usize) -> Result<RingTable> {
    Limits::default().make_zmod(n)
}

pub fn make_product(left: &RingTable, right: &RingTable) -> Result<RingTable> {
    Limits::default().make_product(left, right)
}

pub fn make_matrix_ring(base: &RingTable, k: usize) -> Result<RingTable> {
    Limits::default().make_matrix_ring(base, k)
}

pub fn from_tables(tables: &Tables) -> Result<RingTable> {
    Limits::default().from_tables(tables)
}

/// An additive subgroup closed under multiplication on the given side(s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSubset {
    ring: String,
    members: Vec<usize>,
    mask: Vec<bool>,
    side: Side,
}

impl IdealSubset {
    /// Checks the ideal invariants for an explicit member set.
    pub fn from_members(ring: &RingTable, members: &[usize], side: Side) -> Result<IdealSubset> {
        let mut mask = vec![false; ring.order()];
        for &m in members {
            mask[ring.check_elem(m)?] = true;
        }
        if let Some(reason) = ideal_violation(ring, &mask, side) {
            return Err(Error::InvalidIdeal(reason));
        }
        Ok(IdealSubset::from_mask(ring, mask, side))
    }

    fn from_mask(ring: &RingTable, mask: Vec<bool>, side: Side) -> IdealSubset {
        let members = mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
            .collect();
        IdealSubset {
            ring: ring.hash().to_owned(),
            members,
            mask,
            side,
        }
    }

    pub fn ring_hash(&self) -> &str {
        &self.ring
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }
}

/// First broken ideal invariant for a member mask, described in words.
pub fn ideal_violation(ring: &RingTable, mask: &[bool], side: Side) -> Option<String> {
    if !mask[ring.zero()] {
        return Some("zero is not a member".into());
    }
    let members: Vec<usize> = ring.elements().filter(|&x| mask[x]).collect();
    for &a in &members {
        if !mask[ring.neg(a)] {
            return Some(format!("-{a} is missing"));
        }
        for &b in &members {
            if !mask[ring.add(a, b)] {
                return Some(format!("{a} + {b} is missing"));
            }
        }
        for r in ring.elements() {
            if side.closes_left() && !mask[ring.mul(r, a)] {
                return Some(format!("{r} * {a} is missing"));
            }
            if side.closes_right() && !mask[ring.mul(a, r)] {
                return Some(format!("{a} * {r} is missing"));
            }
        }
    }
    None
}

/// Least ideal of the given side containing `gens`.
pub fn ideal_closure(ring: &RingTable, gens: &[usize], side: Side) -> Result<IdealSubset> {
    ring.ensure_associative("ideal_closure")?;
    let mut mask = vec![false; ring.order()];
    let mut members = Vec::new();
    let mut queue = Vec::new();
    let insert = |x: usize, mask: &mut Vec<bool>, queue: &mut Vec<usize>| {
        if !mask[x] {
            mask[x] = true;
            queue.push(x);
        }
    };
    insert(ring.zero(), &mut mask, &mut queue);
    for &g in gens {
        insert(ring.check_elem(g)?, &mut mask, &mut queue);
    }
    while let Some(x) = queue.pop() {
        members.push(x);
        insert(ring.neg(x), &mut mask, &mut queue);
        for &m in &members {
            insert(ring.add(x, m), &mut mask, &mut queue);
        }
        for r in ring.elements() {
            if side.closes_left() {
                insert(ring.mul(r, x), &mut mask, &mut queue);
            }
            if side.closes_right() {
                insert(ring.mul(x, r), &mut mask, &mut queue);
            }
        }
    }
    Ok(IdealSubset::from_mask(ring, mask, side))
}

/// Distinct ideals generated by single elements, together with `{0}` and
/// the whole ring, ordered by size and then by member list.
pub fn singleton_ideals(ring: &RingTable, side: Side) -> Result<Vec<IdealSubset>> {
    let mut ideals = vec![ideal_closure(ring, &[], side)?];
    for g in ring.elements() {
        ideals.push(ideal_closure(ring, &[g], side)?);
    }
    ideals.push(ideal_closure(ring, &[ring.one()], side)?);
    ideals.sort_by(|a, b| (a.len(), &a.members).cmp(&(b.len(), &b.members)));
    ideals.dedup_by(|a, b| a.members == b.members);
    Ok(ideals)
}

/// Canonical coset representatives: `rep[x]` is the least element of `x + I`.
pub(crate) fn coset_representatives(ring: &RingTable, ideal: &IdealSubset) -> Vec<usize> {
    let n = ring.order();
    let mut rep = vec![usize::MAX; n];
    for x in 0..n {
        if rep[x] != usize::MAX {
            continue;
        }
        for &i in ideal.members() {
            rep[ring.add(x, i)] = x;
        }
    }
    rep
}

/// The ring `R / I` for a two-sided ideal, with its projection.
///
/// Quotient element `j` is the coset whose least member is the `j`-th
/// smallest representative.
pub fn quotient(ring: &RingTable, ideal: &IdealSubset) -> Result<(RingTable, RingHom)> {
    ring.ensure_same(ideal.ring_hash())?;
    if ideal.side() != Side::TwoSided
        && ideal_violation(ring, &ideal.mask, Side::TwoSided).is_some()
    {
        return Err(Error::OneSidedQuotient);
    }
    let rep = coset_representatives(ring, ideal);
    let mut reps: Vec<usize> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let mut slot = vec![usize::MAX; ring.order()];
    for (j, &r) in reps.iter().enumerate() {
        slot[r] = j;
    }
    let project = |x: usize| slot[rep[x]];
    let q = reps.len();
    let mut add = Vec::with_capacity(q * q);
    let mut mul = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            add.push(project(ring.add(a, b)) as u32);
            mul.push(project(ring.mul(a, b)) as u32);
        }
    }
    let labels = reps
        .iter()
        .map(|&r| format!("[{}]", ring.label(r)))
        .collect();
    let table = RingTable::assemble(
        q,
        add,
        mul,
        project(ring.zero()),
        project(ring.one()),
        ring.assoc,
        Some(labels),
    );
    let map = ring.elements().map(project).collect();
    let hom = RingHom::trusted(ring, &table, map);
    Ok((table, hom))
}
