#![allow(dead_code)]

use finring::fixtures::power_associative_algebra;
use finring::ring::{ideal_closure, make_matrix_ring, make_product, make_zmod, quotient, Side};
use finring::{OpTable, RingTable};

pub fn z(n: usize) -> RingTable {
    make_zmod(n).unwrap()
}

pub fn product(a: usize, b: usize) -> RingTable {
    make_product(&z(a), &z(b)).unwrap()
}

pub fn m2z2() -> RingTable {
    make_matrix_ring(&z(2), 2).unwrap()
}

/// Quotients of Z/12 by the ideal generated by each divisor of 12.
pub fn z12_quotients() -> Vec<(String, RingTable)> {
    let r = z(12);
    [1, 2, 3, 4, 6, 0]
        .into_iter()
        .map(|g| {
            let i = ideal_closure(&r, &[g], Side::TwoSided).unwrap();
            (format!("Z/12/({g})"), quotient(&r, &i).unwrap().0)
        })
        .collect()
}

/// Every ring named in the fixture list, power-associative ones included.
pub fn all_fixtures() -> Vec<(String, RingTable)> {
    let mut out: Vec<(String, RingTable)> = (1..=64).map(|n| (format!("Z/{n}"), z(n))).collect();
    out.push(("Z/2xZ/2".into(), product(2, 2)));
    out.push(("Z/4xZ/4".into(), product(4, 4)));
    out.push(("Z/2xZ/6".into(), product(2, 6)));
    out.push(("M2(Z/2)".into(), m2z2()));
    out.extend(z12_quotients());
    out.push(("F2-power-assoc".into(), power_associative_algebra()));
    out
}

pub fn associative_fixtures() -> Vec<(String, RingTable)> {
    all_fixtures()
        .into_iter()
        .filter(|(_, r)| r.is_associative())
        .collect()
}

pub fn small_associative_fixtures() -> Vec<(String, RingTable)> {
    associative_fixtures()
        .into_iter()
        .filter(|(_, r)| r.order() <= 16)
        .collect()
}

/// Powers `x^1 ..= x^k` by repeated right multiplication.
pub fn naive_powers(r: &RingTable, x: usize, k: usize) -> Vec<usize> {
    let mut out = vec![x];
    while out.len() < k {
        out.push(r.mul(*out.last().unwrap(), x));
    }
    out
}

/// Maximal sets of pairwise orthogonal non-zero idempotents by subset
/// enumeration, with `{1}` dropped when any other maximal set exists.
pub fn brute_force_cliques(r: &RingTable) -> Vec<Vec<usize>> {
    let zero = r.zero();
    let idem: Vec<usize> = r
        .elements()
        .filter(|&e| e != zero && r.mul(e, e) == e)
        .collect();
    let k = idem.len();
    assert!(k <= 20, "subset oracle limited to small idempotent counts");
    let orth = |a: usize, b: usize| r.mul(a, b) == zero && r.mul(b, a) == zero;
    let is_clique = |mask: u32| {
        (0..k).all(|i| {
            (i + 1..k).all(|j| mask >> i & 1 == 0 || mask >> j & 1 == 0 || orth(idem[i], idem[j]))
        })
    };
    let cliques: Vec<u32> = (0..1u32 << k).filter(|&m| is_clique(m)).collect();
    let mut maximal: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|&&m| (0..k).all(|i| m >> i & 1 == 1 || !is_clique(m | 1 << i)))
        .map(|&m| {
            (0..k)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| idem[i])
                .collect()
        })
        .collect();
    maximal.sort();
    if maximal.len() > 1 {
        maximal.retain(|c| c != &vec![r.one()]);
    }
    maximal
}

/// 2x2 matrices over Z/2 indexed as `8a + 4b + 2c + d` for `[[a, b], [c, d]]`.
pub fn m2z2_decode(x: usize) -> [[usize; 2]; 2] {
    [[x >> 3 & 1, x >> 2 & 1], [x >> 1 & 1, x & 1]]
}

pub fn m2z2_mul(a: [[usize; 2]; 2], b: [[usize; 2]; 2]) -> [[usize; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 2;
        }
    }
    c
}
