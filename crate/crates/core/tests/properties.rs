mod common;

use common::*;
use finring::idem::{e_of, e_of_cycle, e_of_squaring, idempotent_partition};
use finring::ring::{from_tables, ideal_closure, quotient, PowerOrbit, Side};
use finring::zdgraph::{export_dot, zero_divisor_graph};
use finring::{OpTable, RingTable};
use proptest::prelude::*;

fn arb_ring() -> impl Strategy<Value = RingTable> {
    prop_oneof![
        (1usize..=64).prop_map(z),
        (1usize..=8, 1usize..=8).prop_map(|(a, b)| product(a, b)),
        Just(m2z2()),
    ]
}

fn ring_and_element() -> impl Strategy<Value = (RingTable, usize)> {
    arb_ring().prop_flat_map(|r| {
        let n = r.order();
        (Just(r), 0..n)
    })
}

fn ring_and_generators() -> impl Strategy<Value = (RingTable, Vec<usize>)> {
    arb_ring().prop_flat_map(|r| {
        let n = r.order();
        (Just(r), prop::collection::vec(0..n, 1..3))
    })
}

proptest! {
    #[test]
    fn orbit_is_short_and_eventually_periodic((r, x) in ring_and_element()) {
        let orbit = PowerOrbit::new(&r, x);
        prop_assert!(orbit.len() <= r.order());
        prop_assert!(orbit.cycle_start >= 1 && orbit.period >= 1);
        let naive = naive_powers(&r, x, 3 * r.order());
        for (k, &p) in naive.iter().enumerate() {
            prop_assert_eq!(orbit.nth(k + 1), p);
        }
    }

    #[test]
    fn both_idempotent_routes_agree((r, x) in ring_and_element()) {
        let a = e_of_squaring(&r, x).unwrap();
        let b = e_of_cycle(&r, x).unwrap();
        prop_assert_eq!(a.idempotent, b.idempotent);
        prop_assert_eq!(r.pow(x, a.exponent).unwrap(), a.idempotent);
        prop_assert_eq!(r.pow(x, b.exponent).unwrap(), b.idempotent);
    }

    #[test]
    fn exactly_one_idempotent_power((r, x) in ring_and_element()) {
        let idem: std::collections::BTreeSet<usize> = naive_powers(&r, x, 2 * r.order())
            .into_iter()
            .filter(|&p| r.mul(p, p) == p)
            .collect();
        prop_assert_eq!(idem.len(), 1);
        prop_assert!(idem.contains(&e_of(&r, x).unwrap()));
    }

    #[test]
    fn partition_is_a_partition_by_e_of(r in arb_ring()) {
        let p = idempotent_partition(&r).unwrap();
        prop_assert!(p.check_axioms(&r).unwrap().is_empty());
        let total: usize = p.blocks.values().map(Vec::len).sum();
        prop_assert_eq!(total, r.order());
        for (e, block) in &p.blocks {
            for &x in block {
                prop_assert_eq!(e_of(&r, x).unwrap(), *e);
            }
        }
    }

    #[test]
    fn ideal_closure_is_least_closed_superset((r, gens) in ring_and_generators(), side_ix in 0usize..3) {
        let side = [Side::Left, Side::Right, Side::TwoSided][side_ix];
        let ideal = ideal_closure(&r, &gens, side).unwrap();
        let m = ideal.members();
        for &g in &gens {
            prop_assert!(ideal.contains(g));
        }
        prop_assert!(ideal.contains(r.zero()));
        prop_assert_eq!(r.order() % m.len(), 0);
        for &a in m {
            prop_assert!(ideal.contains(r.neg(a)));
            for &b in m {
                prop_assert!(ideal.contains(r.add(a, b)));
            }
            for s in r.elements() {
                if side.closes_left() {
                    prop_assert!(ideal.contains(r.mul(s, a)));
                }
                if side.closes_right() {
                    prop_assert!(ideal.contains(r.mul(a, s)));
                }
            }
        }
        // Idempotent: closing again changes nothing.
        let again = ideal_closure(&r, m, side).unwrap();
        prop_assert_eq!(again.members(), m);
    }

    #[test]
    fn quotient_projection_has_the_ideal_as_kernel((r, gens) in ring_and_generators()) {
        let ideal = ideal_closure(&r, &gens, Side::TwoSided).unwrap();
        let (q, hom) = quotient(&r, &ideal).unwrap();
        prop_assert_eq!(q.order() * ideal.len(), r.order());
        prop_assert!(hom.is_surjective());
        prop_assert_eq!(hom.kernel(&q).unwrap(), ideal.members().to_vec());
        for a in r.elements() {
            for b in r.elements() {
                prop_assert_eq!(hom.apply(r.add(a, b)), q.add(hom.apply(a), hom.apply(b)));
                prop_assert_eq!(hom.apply(r.mul(a, b)), q.mul(hom.apply(a), hom.apply(b)));
            }
        }
        prop_assert_eq!(hom.apply(r.one()), q.one());
    }

    #[test]
    fn tables_round_trip(r in arb_ring()) {
        let t = r.tables();
        let json = serde_json::to_string(&t).unwrap();
        let back = from_tables(&serde_json::from_str(&json).unwrap()).unwrap();
        prop_assert_eq!(back.tables(), t);
        prop_assert_eq!(back.hash(), r.hash());
    }

    #[test]
    fn graph_edges_are_exactly_zero_products(
        (r, subset) in arb_ring().prop_flat_map(|r| {
            let n = r.order();
            (Just(r), prop::collection::btree_set(0..n, 0..=n.min(12)))
        })
    ) {
        let vertices: Vec<usize> = subset.into_iter().collect();
        let g = zero_divisor_graph(&r, &vertices).unwrap();
        let mut expected = Vec::new();
        for &a in &vertices {
            for &b in &vertices {
                if r.mul(a, b) == r.zero() {
                    expected.push([a, b]);
                }
            }
        }
        prop_assert_eq!(&g.edges, &expected);

        let dot = export_dot(&g, None);
        prop_assert_eq!(dot.matches(" -> ").count(), expected.len());
        let nodes = dot.lines().filter(|l| !l.contains("->") && l.trim_end().ends_with(';')).count();
        prop_assert_eq!(nodes, vertices.len());
    }
}
