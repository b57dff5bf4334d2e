//! Zero-divisor digraphs and orthogonal idempotent cliques.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::idem::{all_idempotents, IdempotentPartition};
use crate::report::Violations;
use crate::ring::{OpTable, RingTable};

/// Directed graph on a subset `S` with an edge `a -> b` exactly when `ab = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroDivisorGraph {
    #[serde(skip)]
    ring: String,
    pub vertices: Vec<usize>,
    /// Sorted by source, then target. Self-loops are kept.
    pub edges: Vec<[usize; 2]>,
}

impl ZeroDivisorGraph {
    pub fn ring_hash(&self) -> &str {
        &self.ring
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&[a, b]).is_ok()
    }
}

pub fn zero_divisor_graph(ring: &RingTable, subset: &[usize]) -> Result<ZeroDivisorGraph> {
    let mut vertices = subset
        .iter()
        .map(|&x| ring.check_elem(x))
        .collect::<Result<Vec<_>>>()?;
    vertices.sort_unstable();
    vertices.dedup();
    let mut edges = Vec::new();
    for &a in &vertices {
        for &b in &vertices {
            if ring.mul(a, b) == ring.zero() {
                edges.push([a, b]);
            }
        }
    }
    Ok(ZeroDivisorGraph {
        ring: ring.hash().to_owned(),
        vertices,
        edges,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLiftReport {
    /// Edges `a -> b` of the full graph without the edge `e_a -> e_b`.
    pub unlifted_edges: Violations<[usize; 2]>,
    /// Edges inside some `B_e` with `e != 0`.
    pub intra_block_edges: Violations<[usize; 2]>,
    /// The blocks `B_e` with `e != 0` cover exactly the vertices outside `B_0`.
    pub nonzero_blocks_cover_complement: bool,
}

impl EdgeLiftReport {
    pub fn passed(&self) -> bool {
        self.unlifted_edges.is_empty()
            && self.intra_block_edges.is_empty()
            && self.nonzero_blocks_cover_complement
    }
}

pub fn check_edge_lifting(
    ring: &RingTable,
    partition: &IdempotentPartition,
) -> Result<EdgeLiftReport> {
    ring.ensure_associative("check_edge_lifting")?;
    ring.ensure_same(partition.ring_hash())?;
    let zero = ring.zero();
    let mut report = EdgeLiftReport::default();
    for a in ring.elements() {
        let ea = partition.idempotent_of(a);
        for b in ring.elements() {
            if ring.mul(a, b) != zero {
                continue;
            }
            let eb = partition.idempotent_of(b);
            if ring.mul(ea, eb) != zero {
                report.unlifted_edges.push([a, b]);
            }
            if ea == eb && ea != zero {
                report.intra_block_edges.push([a, b]);
            }
        }
    }
    let mut covered: Vec<usize> = partition
        .blocks
        .iter()
        .filter(|(&e, _)| e != zero)
        .flat_map(|(_, b)| b.iter().copied())
        .collect();
    covered.sort_unstable();
    let empty = Vec::new();
    let b0 = partition.block(zero).unwrap_or(&empty);
    let complement: Vec<usize> = ring
        .elements()
        .filter(|x| b0.binary_search(x).is_err())
        .collect();
    report.nonzero_blocks_cover_complement = covered == complement;
    Ok(report)
}

/// Pairwise orthogonal non-zero idempotents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IdemClique {
    pub members: Vec<usize>,
}

/// Whether the singleton `{1}` is reported as a maximal clique.
///
/// `1` is never orthogonal to a non-zero idempotent, so `{1}` is always a
/// maximal clique in the graph-theoretic sense. It only carries information
/// when the ring has no non-trivial idempotents.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrivialClique {
    /// Report `{1}` only when it is the sole maximal clique.
    #[default]
    WhenAlone,
    Always,
}

/// Maximal cliques of the mutual-annihilation graph on non-zero idempotents,
/// sorted lexicographically.
pub fn idempotent_cliques(ring: &RingTable) -> Result<Vec<IdemClique>> {
    idempotent_cliques_with(ring, TrivialClique::default())
}

pub fn idempotent_cliques_with(
    ring: &RingTable,
    trivial: TrivialClique,
) -> Result<Vec<IdemClique>> {
    ring.ensure_associative("idempotent_cliques")?;
    let zero = ring.zero();
    let vertices: Vec<usize> = all_idempotents(ring)
        .members
        .into_iter()
        .filter(|&e| e != zero)
        .collect();
    let k = vertices.len();
    let adj: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let (a, b) = (vertices[i], vertices[j]);
                    i != j && ring.mul(a, b) == zero && ring.mul(b, a) == zero
                })
                .collect()
        })
        .collect();

    let mut found = Vec::new();
    bron_kerbosch(
        &adj,
        &mut Vec::new(),
        (0..k).collect(),
        Vec::new(),
        &mut found,
    );

    let mut cliques: Vec<IdemClique> = found
        .into_iter()
        .map(|c| {
            let mut members: Vec<usize> = c.into_iter().map(|i| vertices[i]).collect();
            members.sort_unstable();
            IdemClique { members }
        })
        .collect();
    cliques.sort();
    if trivial == TrivialClique::WhenAlone && cliques.len() > 1 {
        let one = ring.one();
        cliques.retain(|c| c.members != [one]);
    }
    Ok(cliques)
}

/// Bron-Kerbosch with Tomita pivoting on a dense adjacency matrix.
fn bron_kerbosch(
    adj: &[Vec<bool>],
    clique: &mut Vec<usize>,
    candidates: Vec<usize>,
    excluded: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(clique.clone());
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(&excluded)
        .copied()
        .max_by_key(|&u| {
            (
                candidates.iter().filter(|&&v| adj[u][v]).count(),
                std::cmp::Reverse(u),
            )
        })
        .expect("non-empty");
    let branch: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| !adj[pivot][v])
        .collect();
    let mut candidates = candidates;
    let mut excluded = excluded;
    for v in branch {
        clique.push(v);
        bron_kerbosch(
            adj,
            clique,
            candidates.iter().copied().filter(|&u| adj[v][u]).collect(),
            excluded.iter().copied().filter(|&u| adj[v][u]).collect(),
            out,
        );
        clique.pop();
        candidates.retain(|&u| u != v);
        excluded.push(v);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSumReport {
    pub members: Vec<usize>,
    pub sum: usize,
    pub sum_is_one: bool,
    /// `d = 1 - sum`.
    pub complement: usize,
    pub complement_idempotent: bool,
    pub complement_orthogonal: bool,
    pub maximal: bool,
    /// `Some(sum_is_one)` for maximal cliques, `None` when the sum theorem
    /// does not apply.
    pub holds: Option<bool>,
}

/// Sums a clique and checks the complement `1 - sum` along the way.
pub fn verify_clique_sum(ring: &RingTable, clique: &IdemClique) -> Result<CliqueSumReport> {
    ring.ensure_associative("verify_clique_sum")?;
    let zero = ring.zero();
    let members = &clique.members;
    for (i, &a) in members.iter().enumerate() {
        ring.check_elem(a)?;
        if a == zero || !ring.is_idempotent(a) {
            return Err(Error::InvalidClique(format!(
                "{a} is not a non-zero idempotent"
            )));
        }
        for &b in &members[i + 1..] {
            if a == b {
                return Err(Error::InvalidClique(format!("{a} is repeated")));
            }
            if ring.mul(a, b) != zero || ring.mul(b, a) != zero {
                return Err(Error::InvalidClique(format!(
                    "{a} and {b} are not orthogonal"
                )));
            }
        }
    }
    let sum = ring.sum(members.iter().copied());
    let d = ring.sub(ring.one(), sum);
    let orthogonal_to_all = |f: usize| {
        members
            .iter()
            .all(|&e| ring.mul(f, e) == zero && ring.mul(e, f) == zero)
    };
    let maximal = !ring.elements().any(|f| {
        f != zero && !members.contains(&f) && ring.is_idempotent(f) && orthogonal_to_all(f)
    });
    let sum_is_one = sum == ring.one();
    Ok(CliqueSumReport {
        members: members.clone(),
        sum,
        sum_is_one,
        complement: d,
        complement_idempotent: ring.is_idempotent(d),
        complement_orthogonal: orthogonal_to_all(d),
        maximal,
        holds: maximal.then_some(sum_is_one),
    })
}

/// Graphviz rendering; with a partition, vertices are grouped into one
/// cluster per block.
pub fn export_dot(graph: &ZeroDivisorGraph, partition: Option<&IdempotentPartition>) -> String {
    let mut out = String::from("digraph zero_divisors {\n");
    match partition {
        Some(p) => {
            for (&e, block) in &p.blocks {
                let inside: Vec<usize> = block
                    .iter()
                    .copied()
                    .filter(|x| graph.vertices.binary_search(x).is_ok())
                    .collect();
                if inside.is_empty() {
                    continue;
                }
                let _ = writeln!(out, "  subgraph cluster_{e} {{");
                let _ = writeln!(out, "    label=\"B_{e}\";");
                for x in inside {
                    let _ = writeln!(out, "    {x};");
                }
                out.push_str("  }\n");
            }
        }
        None => {
            for x in &graph.vertices {
                let _ = writeln!(out, "  {x};");
            }
        }
    }
    for [a, b] in &graph.edges {
        let _ = writeln!(out, "  {a} -> {b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idem::idempotent_partition;
    use crate::ring::{make_matrix_ring, make_zmod};

    fn z(n: usize) -> RingTable {
        make_zmod(n).unwrap()
    }

    #[test]
    fn graph_of_z8() {
        let r = z(8);
        let g = zero_divisor_graph(&r, &(0..8).collect::<Vec<_>>()).unwrap();
        for edge in [[2, 4], [4, 2], [4, 4], [2, 0]] {
            assert!(g.has_edge(edge[0], edge[1]), "{edge:?}");
        }
        assert!((0..8).all(|b| g.has_edge(0, b)));
        assert!(!g.has_edge(2, 2));
        assert!(zero_divisor_graph(&r, &[1]).unwrap().edges.is_empty());
    }

    #[test]
    fn graph_of_z6_subset() {
        let g = zero_divisor_graph(&z(6), &[3, 2]).unwrap();
        assert_eq!(g.vertices, vec![2, 3]);
        assert_eq!(g.edges, vec![[2, 3], [3, 2]]);
    }

    #[test]
    fn edge_lifting_on_z12_and_z8() {
        for n in [8, 12] {
            let r = z(n);
            let p = idempotent_partition(&r).unwrap();
            let report = check_edge_lifting(&r, &p).unwrap();
            assert!(report.passed(), "Z/{n}: {report:?}");
        }
    }

    #[test]
    fn cliques_of_small_rings() {
        let members = |r: &RingTable| -> Vec<Vec<usize>> {
            idempotent_cliques(r)
                .unwrap()
                .into_iter()
                .map(|c| c.members)
                .collect()
        };
        assert_eq!(members(&z(6)), vec![vec![3, 4]]);
        assert_eq!(members(&z(8)), vec![vec![1]]);
        assert_eq!(members(&z(1)), vec![Vec::<usize>::new()]);
        let all: Vec<Vec<usize>> = idempotent_cliques_with(&z(6), TrivialClique::Always)
            .unwrap()
            .into_iter()
            .map(|c| c.members)
            .collect();
        assert_eq!(all, vec![vec![1], vec![3, 4]]);

        let m = make_matrix_ring(&z(2), 2).unwrap();
        let cliques = members(&m);
        // E11 = 8, E22 = 1
        assert!(cliques.contains(&vec![1, 8]));
        assert!(cliques.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn clique_sums() {
        let r = z(6);
        let report = verify_clique_sum(
            &r,
            &IdemClique {
                members: vec![3, 4],
            },
        )
        .unwrap();
        assert_eq!(report.sum, 1);
        assert_eq!(report.holds, Some(true));
        assert_eq!(report.complement, 0);

        let partial = verify_clique_sum(&r, &IdemClique { members: vec![3] }).unwrap();
        assert!(!partial.maximal);
        assert_eq!(partial.holds, None);
        assert_eq!(partial.complement, 4);
        assert!(partial.complement_idempotent && partial.complement_orthogonal);

        let m = make_matrix_ring(&z(2), 2).unwrap();
        let report = verify_clique_sum(
            &m,
            &IdemClique {
                members: vec![1, 8],
            },
        )
        .unwrap();
        assert_eq!(report.sum, m.one());

        let trivial = verify_clique_sum(&z(1), &IdemClique { members: vec![] }).unwrap();
        assert_eq!(trivial.holds, Some(true));

        assert!(matches!(
            verify_clique_sum(
                &r,
                &IdemClique {
                    members: vec![3, 1]
                }
            ),
            Err(Error::InvalidClique(_))
        ));
    }

    #[test]
    fn dot_output() {
        let r = z(6);
        let g = zero_divisor_graph(&r, &[]).unwrap();
        assert_eq!(export_dot(&g, None), "digraph zero_divisors {\n}\n");
        let g = zero_divisor_graph(&r, &[2, 3]).unwrap();
        assert_eq!(
            export_dot(&g, None),
            "digraph zero_divisors {\n  2;\n  3;\n  2 -> 3;\n  3 -> 2;\n}\n"
        );
        let p = idempotent_partition(&r).unwrap();
        let dot = export_dot(&g, Some(&p));
        assert!(dot.contains("subgraph cluster_3 {\n    label=\"B_3\";\n    3;\n  }"));
        assert!(dot.contains("subgraph cluster_4 {\n    label=\"B_4\";\n    2;\n  }"));
        assert!(!dot.contains("cluster_0"));
    }
}
