//! Homomorphisms and lifting of idempotents and regular elements.
//!
//! Lifting over a surjection `phi: R -> S` picks any preimage `a` of an
//! idempotent `e'` and returns `e_a`; since `phi(a^k) = phi(a)^k = e'`, the
//! lift maps back to `e'`. Modulo a one-sided ideal the same construction
//! works on cosets: `x^2 - x` in `I` gives `x^k - x` in `I` for every `k`.
//!
//! A regular element modulo a left ideal, `xyx - x` in `I`, lifts to
//! `z = (xy)^(2n-1) x` where `(xy)^n` is idempotent; then `zyz = z` and
//! `z - x = r (xy - 1) x` lies in `I`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::idem::{all_idempotents, e_of, e_of_cycle, idempotent_partition};
use crate::report::Violations;
use crate::ring::{coset_representatives, IdealSubset, OpTable, RingTable, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    source: String,
    target: String,
    map: Vec<usize>,
    surjective: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomLaw {
    Unit,
    Additive,
    Multiplicative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomFailure {
    pub law: HomLaw,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCheck {
    pub ok: bool,
    pub failures: Vec<HomFailure>,
}

/// Checks `phi(1) = 1`, additivity and multiplicativity of an element map.
///
/// Each failing law is reported once with its first witness pair.
pub fn is_homomorphism(source: &RingTable, target: &RingTable, map: &[usize]) -> Result<HomCheck> {
    if map.len() != source.order() {
        return Err(Error::Shape(format!(
            "map has {} entries, source order is {}",
            map.len(),
            source.order()
        )));
    }
    for &m in map {
        target.check_elem(m)?;
    }
    let mut failures = Vec::new();
    if map[source.one()] != target.one() {
        failures.push(HomFailure {
            law: HomLaw::Unit,
            witness: vec![source.one()],
        });
    }
    let mut additive = None;
    let mut multiplicative = None;
    'scan: for a in source.elements() {
        for b in source.elements() {
            if additive.is_none() && map[source.add(a, b)] != target.add(map[a], map[b]) {
                additive = Some(vec![a, b]);
            }
            if multiplicative.is_none() && map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                multiplicative = Some(vec![a, b]);
            }
            if additive.is_some() && multiplicative.is_some() {
                break 'scan;
            }
        }
    }
    if let Some(witness) = additive {
        failures.push(HomFailure {
            law: HomLaw::Additive,
            witness,
        });
    }
    if let Some(witness) = multiplicative {
        failures.push(HomFailure {
            law: HomLaw::Multiplicative,
            witness,
        });
    }
    Ok(HomCheck {
        ok: failures.is_empty(),
        failures,
    })
}

impl RingHom {
    pub fn new(source: &RingTable, target: &RingTable, map: Vec<usize>) -> Result<RingHom> {
        let check = is_homomorphism(source, target, &map)?;
        if !check.ok {
            let detail = check
                .failures
                .iter()
                .map(|f| format!("{:?} law fails at {:?}", f.law, f.witness))
                .collect::<Vec<_>>()
                .join("; ");
            return Err(Error::NotHomomorphism(detail));
        }
        Ok(RingHom::trusted(source, target, map))
    }

    pub(crate) fn trusted(source: &RingTable, target: &RingTable, map: Vec<usize>) -> RingHom {
        let mut hit = vec![false; target.order()];
        for &m in &map {
            hit[m] = true;
        }
        RingHom {
            source: source.hash().to_owned(),
            target: target.hash().to_owned(),
            surjective: hit.iter().all(|&h| h),
            map,
        }
    }

    pub fn identity(ring: &RingTable) -> RingHom {
        RingHom::trusted(ring, ring, ring.elements().collect())
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn source_hash(&self) -> &str {
        &self.source
    }

    pub fn target_hash(&self) -> &str {
        &self.target
    }

    /// Elements sent to the target's zero.
    pub fn kernel(&self, target: &RingTable) -> Result<Vec<usize>> {
        target.ensure_same(&self.target)?;
        Ok(self
            .map
            .iter()
            .enumerate()
            .filter(|(_, &m)| m == target.zero())
            .map(|(x, _)| x)
            .collect())
    }

    /// Least preimage of `y`.
    pub fn preimage(&self, y: usize) -> Option<usize> {
        self.map.iter().position(|&m| m == y)
    }

    fn ensure_between(&self, source: &RingTable, target: &RingTable) -> Result<()> {
        source.ensure_same(&self.source)?;
        target.ensure_same(&self.target)
    }
}

/// Both projections out of a product built by `make_product(left, right)`.
pub fn product_projections(
    left: &RingTable,
    right: &RingTable,
    product: &RingTable,
) -> Result<(RingHom, RingHom)> {
    let n2 = right.order();
    if product.order() != left.order() * n2 {
        return Err(Error::Shape(
            "product order does not match its factors".into(),
        ));
    }
    let to_left = RingHom::new(product, left, product.elements().map(|x| x / n2).collect())?;
    let to_right = RingHom::new(product, right, product.elements().map(|x| x % n2).collect())?;
    Ok((to_left, to_right))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatReport {
    /// Source idempotents whose image is not idempotent.
    pub non_idempotent_images: Violations<usize>,
    /// `(x, e_x)` with `phi(x)` outside `B'_{phi(e_x)}`.
    pub block_escapes: Violations<[usize; 2]>,
    /// Target idempotents whose block differs from the union of
    /// `phi(B_e)` over `phi(e) = e'`; `None` for non-surjective maps.
    pub union_mismatches: Option<Violations<usize>>,
    pub source_blocks: usize,
    /// Number of target blocks met by the image.
    pub image_blocks: usize,
}

impl CompatReport {
    pub fn passed(&self) -> bool {
        self.non_idempotent_images.is_empty()
            && self.block_escapes.is_empty()
            && self
                .union_mismatches
                .as_ref()
                .is_none_or(Violations::is_empty)
            && self.image_blocks <= self.source_blocks
    }
}

pub fn check_partition_compat(
    source: &RingTable,
    target: &RingTable,
    hom: &RingHom,
) -> Result<CompatReport> {
    hom.ensure_between(source, target)?;
    let p = idempotent_partition(source)?;
    let q = idempotent_partition(target)?;
    let mut report = CompatReport {
        source_blocks: p.len(),
        ..Default::default()
    };

    for &e in &p.idempotents {
        if !target.is_idempotent(hom.apply(e)) {
            report.non_idempotent_images.push(e);
        }
    }
    let mut met = vec![false; target.order()];
    for x in source.elements() {
        let e = p.idempotent_of(x);
        let image_block = q.idempotent_of(hom.apply(x));
        met[image_block] = true;
        if image_block != hom.apply(e) {
            report.block_escapes.push([x, e]);
        }
    }
    report.image_blocks = met.iter().filter(|&&m| m).count();

    if hom.is_surjective() {
        let mut mismatches = Violations::default();
        for (&e_target, block) in &q.blocks {
            let mut union: Vec<usize> = p
                .blocks
                .iter()
                .filter(|(&e, _)| hom.apply(e) == e_target)
                .flat_map(|(_, b)| b.iter().map(|&x| hom.apply(x)))
                .collect();
            union.sort_unstable();
            union.dedup();
            if &union != block {
                mismatches.push(e_target);
            }
        }
        report.union_mismatches = Some(mismatches);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentLift {
    pub target_idempotent: usize,
    pub preimage: usize,
    pub lift: usize,
    /// `lift = preimage^exponent`.
    pub exponent: usize,
    pub lift_is_idempotent: bool,
    pub maps_to_target: bool,
}

/// Lifts an idempotent of the target through its least preimage.
pub fn lift_idempotent(
    source: &RingTable,
    target: &RingTable,
    hom: &RingHom,
    e: usize,
) -> Result<IdempotentLift> {
    hom.ensure_between(source, target)?;
    target.check_elem(e)?;
    if !target.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let preimage = hom.preimage(e).ok_or(Error::NoPreimage(e))?;
    let power = crate::idem::e_of_squaring(source, preimage)?;
    Ok(IdempotentLift {
        target_idempotent: e,
        preimage,
        lift: power.idempotent,
        exponent: power.exponent,
        lift_is_idempotent: source.is_idempotent(power.idempotent),
        maps_to_target: hom.apply(power.idempotent) == e,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdemCountReport {
    pub source_count: usize,
    pub target_count: usize,
    pub holds: bool,
    /// `(e', lift of e')` for every target idempotent.
    pub lifts: Vec<[usize; 2]>,
    pub lift_injective: bool,
}

/// `|idem(R)| >= |idem(S)|`, witnessed by the lift map being injective.
pub fn idem_count_inequality(
    source: &RingTable,
    target: &RingTable,
    hom: &RingHom,
) -> Result<IdemCountReport> {
    hom.ensure_between(source, target)?;
    let src = all_idempotents(source);
    let tgt = all_idempotents(target);
    let lifts = tgt
        .members
        .iter()
        .map(|&e| lift_idempotent(source, target, hom, e).map(|l| [e, l.lift]))
        .collect::<Result<Vec<_>>>()?;
    let mut images: Vec<usize> = lifts.iter().map(|l| l[1]).collect();
    images.sort_unstable();
    images.dedup();
    Ok(IdemCountReport {
        source_count: src.len(),
        target_count: tgt.len(),
        holds: src.len() >= tgt.len(),
        lift_injective: images.len() == lifts.len(),
        lifts,
    })
}

/// Cosets `x + I` of a one- or two-sided ideal, without forming a quotient.
#[derive(Debug, Clone)]
pub struct CosetView {
    ideal: IdealSubset,
    rep: Vec<usize>,
}

impl CosetView {
    pub fn new(ring: &RingTable, ideal: IdealSubset) -> Result<CosetView> {
        ring.ensure_same(ideal.ring_hash())?;
        let rep = coset_representatives(ring, &ideal);
        Ok(CosetView { ideal, rep })
    }

    pub fn ideal(&self) -> &IdealSubset {
        &self.ideal
    }

    /// Least element of `x + I`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.rep[x]
    }

    pub fn coset_equal(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }

    /// Distinct coset representatives in ascending order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = self.rep.clone();
        reps.sort_unstable();
        reps.dedup();
        reps
    }
}

/// Whether the coset of `x` is idempotent, i.e. `x*x - x` lies in `I`.
pub fn is_coset_idempotent(ring: &RingTable, view: &CosetView, x: usize) -> Result<bool> {
    ring.ensure_associative("is_coset_idempotent")?;
    ring.ensure_same(view.ideal.ring_hash())?;
    ring.check_elem(x)?;
    Ok(view.ideal.contains(ring.sub(ring.mul(x, x), x)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealLift {
    pub element: usize,
    pub lift: usize,
    pub exponent: usize,
    pub lift_is_idempotent: bool,
    pub difference_in_ideal: bool,
}

/// Lifts an idempotent coset of a left or right ideal to an idempotent `e_x`.
pub fn lift_idempotent_mod_ideal(
    ring: &RingTable,
    ideal: &IdealSubset,
    x: usize,
) -> Result<IdealLift> {
    ring.ensure_associative("lift_idempotent_mod_ideal")?;
    ring.ensure_same(ideal.ring_hash())?;
    ring.check_elem(x)?;
    let residue = ring.sub(ring.mul(x, x), x);
    if !ideal.contains(residue) {
        return Err(Error::NotCosetIdempotent { x, residue });
    }
    let power = crate::idem::e_of_squaring(ring, x)?;
    let e = power.idempotent;
    Ok(IdealLift {
        element: x,
        lift: e,
        exponent: power.exponent,
        lift_is_idempotent: ring.is_idempotent(e),
        difference_in_ideal: ideal.contains(ring.sub(e, x)),
    })
}

/// Least `y` with `xyx = x`.
pub fn is_regular(ring: &RingTable, x: usize) -> Result<Option<usize>> {
    ring.ensure_associative("is_regular")?;
    ring.check_elem(x)?;
    Ok(ring.elements().find(|&y| ring.mul(ring.mul(x, y), x) == x))
}

pub fn regular_elements(ring: &RingTable) -> Result<Vec<usize>> {
    ring.ensure_associative("regular_elements")?;
    Ok(ring
        .elements()
        .filter(|&x| is_regular(ring, x).ok().flatten().is_some())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegularConstruction {
    /// `z = (xy)^(2n-1) x`, for left (and two-sided) ideals.
    Standard,
    /// `z = x (yx)^(2n-1)`, for right ideals.
    Mirrored,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularLift {
    pub x: usize,
    pub y: usize,
    pub construction: RegularConstruction,
    /// `xy` for the standard construction, `yx` for the mirrored one.
    pub product: usize,
    pub idempotent: usize,
    /// Least `n` with `product^n` idempotent.
    pub exponent: usize,
    pub z: usize,
    pub zyz_is_z: bool,
    pub difference_in_ideal: bool,
    /// `zy = e` (standard) or `yz = e` (mirrored).
    pub witness_product_is_idempotent: bool,
    /// `ez = z` (standard) or `ze = z` (mirrored).
    pub idempotent_fixes_z: bool,
}

impl RegularLift {
    pub fn verified(&self) -> bool {
        self.zyz_is_z
            && self.difference_in_ideal
            && self.witness_product_is_idempotent
            && self.idempotent_fixes_z
    }
}

/// Lifts `x` with `xyx - x` in `I` to a regular `z` congruent to `x` mod `I`.
///
/// Left and two-sided ideals use `z = (xy)^(2n-1) x`; right ideals use the
/// mirrored `z = x (yx)^(2n-1)`.
pub fn lift_regular(
    ring: &RingTable,
    ideal: &IdealSubset,
    x: usize,
    y: usize,
) -> Result<RegularLift> {
    ring.ensure_associative("lift_regular")?;
    ring.ensure_same(ideal.ring_hash())?;
    ring.check_elem(x)?;
    ring.check_elem(y)?;
    let residue = ring.sub(ring.mul(ring.mul(x, y), x), x);
    if !ideal.contains(residue) {
        return Err(Error::NotRegularModIdeal { x, y, residue });
    }
    let construction = if ideal.side() == Side::Right {
        RegularConstruction::Mirrored
    } else {
        RegularConstruction::Standard
    };
    let product = match construction {
        RegularConstruction::Standard => ring.mul(x, y),
        RegularConstruction::Mirrored => ring.mul(y, x),
    };
    let e = e_of(ring, product)?;
    let n = e_of_cycle(ring, product)?.exponent;
    let tail = ring.pow(product, 2 * n - 1)?;
    let z = match construction {
        RegularConstruction::Standard => ring.mul(tail, x),
        RegularConstruction::Mirrored => ring.mul(x, tail),
    };
    let (witness_product, fixed) = match construction {
        RegularConstruction::Standard => (ring.mul(z, y), ring.mul(e, z)),
        RegularConstruction::Mirrored => (ring.mul(y, z), ring.mul(z, e)),
    };
    Ok(RegularLift {
        x,
        y,
        construction,
        product,
        idempotent: e,
        exponent: n,
        z,
        zyz_is_z: ring.mul(ring.mul(z, y), z) == z,
        difference_in_ideal: ideal.contains(ring.sub(z, x)),
        witness_product_is_idempotent: witness_product == e,
        idempotent_fixes_z: fixed == z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ideal_closure, make_product, make_zmod, quotient};

    fn z(n: usize) -> RingTable {
        make_zmod(n).unwrap()
    }

    fn reduction(m: usize, d: usize) -> (RingTable, RingTable, RingHom) {
        let (r, s) = (z(m), z(d));
        let hom = RingHom::new(&r, &s, (0..m).map(|x| x % d).collect()).unwrap();
        (r, s, hom)
    }

    #[test]
    fn homomorphism_checks() {
        let (r, s) = (z(12), z(4));
        assert!(
            is_homomorphism(&r, &s, &(0..12).map(|x| x % 4).collect::<Vec<_>>())
                .unwrap()
                .ok
        );
        let shifted: Vec<usize> = (0..12).map(|x| (x + 1) % 4).collect();
        let check = is_homomorphism(&r, &s, &shifted).unwrap();
        assert!(!check.ok);
        assert_eq!(check.failures[0].law, HomLaw::Unit);
        assert!(check.failures.iter().any(|f| f.law == HomLaw::Additive));
        assert!(matches!(
            RingHom::new(&r, &s, shifted),
            Err(Error::NotHomomorphism(_))
        ));
        assert!(matches!(
            is_homomorphism(&r, &s, &[0; 5]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn quotient_projection_is_homomorphism_with_kernel_i() {
        let r = z(12);
        let i = ideal_closure(&r, &[4], Side::TwoSided).unwrap();
        let (q, hom) = quotient(&r, &i).unwrap();
        assert!(is_homomorphism(&r, &q, hom.map()).unwrap().ok);
        assert_eq!(hom.kernel(&q).unwrap(), i.members());
    }

    #[test]
    fn compat_for_reductions() {
        let (r, s, hom) = reduction(12, 4);
        let report = check_partition_compat(&r, &s, &hom).unwrap();
        assert!(report.passed(), "{report:?}");
        // B_4 of Z/12 lands in B'_0 of Z/4
        let q = idempotent_partition(&s).unwrap();
        for x in [2, 4, 8, 10] {
            assert_eq!(q.idempotent_of(hom.apply(x)), 0);
        }
        let (r, s, hom) = reduction(6, 3);
        let idem: Vec<usize> = all_idempotents(&r)
            .members
            .iter()
            .map(|&e| hom.apply(e))
            .collect();
        assert_eq!(idem, vec![0, 1, 0, 1]);
        assert!(check_partition_compat(&r, &s, &hom).unwrap().passed());
        let id = RingHom::identity(&r);
        let report = check_partition_compat(&r, &r, &id).unwrap();
        assert!(report.passed());
        assert_eq!(report.image_blocks, report.source_blocks);
    }

    #[test]
    fn non_surjective_map_skips_union_formula() {
        // Z/2 -> Z/2 x Z/2, x -> (x, x)
        let (a, p) = (z(2), make_product(&z(2), &z(2)).unwrap());
        let hom = RingHom::new(&a, &p, vec![0, 3]).unwrap();
        assert!(!hom.is_surjective());
        let report = check_partition_compat(&a, &p, &hom).unwrap();
        assert!(report.union_mismatches.is_none());
        assert!(report.passed());
        assert!(matches!(
            lift_idempotent(&a, &p, &hom, 1),
            Err(Error::NoPreimage(1))
        ));
    }

    #[test]
    fn lifting_idempotents() {
        let (r, s, hom) = reduction(12, 4);
        let lift = lift_idempotent(&r, &s, &hom, 1).unwrap();
        assert_eq!((lift.preimage, lift.lift), (1, 1));
        assert_eq!(lift_idempotent(&r, &s, &hom, 0).unwrap().lift, 0);
        assert!(matches!(
            lift_idempotent(&r, &s, &hom, 2),
            Err(Error::NotIdempotent(2))
        ));
        // 9 is another valid lift of 1
        assert!(r.is_idempotent(9) && hom.apply(9) == 1);

        let (r, s, hom) = reduction(6, 3);
        assert_eq!(lift_idempotent(&r, &s, &hom, 1).unwrap().lift, 1);
        assert_eq!(crate::idem::e_of(&r, 4).unwrap(), 4);
        assert_eq!(hom.apply(4), 1);
    }

    #[test]
    fn idempotent_counts() {
        let (r, s, hom) = reduction(12, 4);
        let report = idem_count_inequality(&r, &s, &hom).unwrap();
        assert_eq!((report.source_count, report.target_count), (4, 2));
        assert!(report.holds && report.lift_injective);
        let id = RingHom::identity(&r);
        let report = idem_count_inequality(&r, &r, &id).unwrap();
        assert_eq!(report.source_count, report.target_count);
        let (r, s, hom) = reduction(12, 1);
        assert!(idem_count_inequality(&r, &s, &hom).unwrap().holds);
    }

    #[test]
    fn coset_idempotents_mod_4z12() {
        let r = z(12);
        let i = ideal_closure(&r, &[4], Side::Left).unwrap();
        let view = CosetView::new(&r, i.clone()).unwrap();
        assert!(is_coset_idempotent(&r, &view, 9).unwrap());
        assert!(!is_coset_idempotent(&r, &view, 2).unwrap());
        for e in [0, 1, 4, 9] {
            assert!(is_coset_idempotent(&r, &view, e).unwrap());
        }
        assert_eq!(view.representatives(), vec![0, 1, 2, 3]);
        assert!(view.coset_equal(5, 1));

        assert_eq!(lift_idempotent_mod_ideal(&r, &i, 9).unwrap().lift, 9);
        let lift = lift_idempotent_mod_ideal(&r, &i, 5).unwrap();
        assert_eq!(lift.lift, 1);
        assert!(lift.difference_in_ideal && lift.lift_is_idempotent);
        assert!(matches!(
            lift_idempotent_mod_ideal(&r, &i, 2),
            Err(Error::NotCosetIdempotent { x: 2, residue: 2 })
        ));
    }

    #[test]
    fn regular_elements_of_z8() {
        let r = z(8);
        assert_eq!(regular_elements(&r).unwrap(), vec![0, 1, 3, 5, 7]);
        assert_eq!(is_regular(&r, 2).unwrap(), None);
        assert_eq!(is_regular(&r, 1).unwrap(), Some(1));
    }

    #[test]
    fn regular_lift_in_product_ring() {
        let (a, b) = (z(4), z(4));
        let r = make_product(&a, &b).unwrap();
        let pair = |u: usize, v: usize| u * 4 + v;
        let i = IdealSubset::from_members(
            &r,
            &(0..4).map(|v| pair(0, v)).collect::<Vec<_>>(),
            Side::Left,
        )
        .unwrap();
        let lift = lift_regular(&r, &i, pair(3, 2), pair(3, 0)).unwrap();
        assert_eq!(lift.product, pair(1, 0));
        assert_eq!(lift.exponent, 1);
        assert_eq!(lift.z, pair(3, 0));
        assert!(lift.verified());
        assert!(matches!(
            lift_regular(&r, &i, pair(2, 0), pair(1, 1)),
            Err(Error::NotRegularModIdeal { .. })
        ));
    }

    #[test]
    fn regular_lift_degenerate_cases() {
        let r = z(12);
        let zero = ideal_closure(&r, &[], Side::Left).unwrap();
        let lift = lift_regular(&r, &zero, 9, 1).unwrap();
        assert_eq!((lift.idempotent, lift.exponent, lift.z), (9, 1, 9));
        for y in r.elements() {
            assert_eq!(lift_regular(&r, &zero, 0, y).unwrap().z, 0);
        }
    }

    #[test]
    fn mirrored_lift_for_right_ideals() {
        let m = crate::ring::make_matrix_ring(&z(2), 2).unwrap();
        let right = ideal_closure(&m, &[8], Side::Right).unwrap();
        let mut checked = 0;
        for x in m.elements() {
            for y in m.elements() {
                if let Ok(lift) = lift_regular(&m, &right, x, y) {
                    assert_eq!(lift.construction, RegularConstruction::Mirrored);
                    assert!(lift.verified(), "{lift:?}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn non_associative_rings_are_refused() {
        let r = crate::fixtures::power_associative_algebra();
        assert!(matches!(
            is_regular(&r, 1),
            Err(Error::NotAssociative { .. })
        ));
    }
}
