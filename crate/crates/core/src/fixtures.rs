//! Small hand-built tables used by the test suites and examples.
//!
//! The three-dimensional algebras below live on `F_2^3` with basis
//! `1, a, b`; element `c0 + 2 c1 + 4 c2` stands for `c0 1 + c1 a + c2 b`.

use crate::ring::{from_tables, RingTable, Tables};

/// Multiplication on `F_2^3` from the products of basis vectors.
/// `products[i][j]` is the element index of `basis_i * basis_j`.
fn f2_cube_algebra(products: [[usize; 3]; 3]) -> Tables {
    let n = 8;
    let add = (0..n).map(|x| (0..n).map(|y| x ^ y).collect()).collect();
    let mul = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let mut acc = 0;
                    for (i, row) in products.iter().enumerate() {
                        for (j, &p) in row.iter().enumerate() {
                            if (x >> i) & 1 == 1 && (y >> j) & 1 == 1 {
                                acc ^= p;
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Tables {
        order: n,
        add,
        mul,
        one: 1,
    }
}

/// Commutative, power-associative, not associative: `a^2 = 0`, `ab = 0`,
/// `b^2 = 1`. Here `(bb)a = a` but `b(ba) = 0`.
pub fn power_associative_tables() -> Tables {
    f2_cube_algebra([[1, 2, 4], [2, 0, 0], [4, 0, 1]])
}

pub fn power_associative_algebra() -> RingTable {
    from_tables(&power_associative_tables()).expect("power-associative fixture")
}

/// A commutative unital ring table that is not power-associative:
/// `a^2 = b`, `ab = 0`, `b^2 = 1`, so `a^2 a^2 = 1` while `a^4 = 0`.
pub fn non_power_associative_tables() -> Tables {
    f2_cube_algebra([[1, 2, 4], [2, 4, 0], [4, 0, 1]])
}

/// Four elements under addition mod 4 with a commutative unital product
/// that fails distributivity and power-associativity: `3^2 = 2`,
/// `3^3 = 1`, `3^4 = 3`, but `3^2 3^2 = 0`.
pub fn non_distributive_unital_tables() -> Tables {
    Tables {
        order: 4,
        add: (0..4)
            .map(|a| (0..4).map(|b| (a + b) % 4).collect())
            .collect(),
        mul: vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 2, 3],
            vec![0, 2, 0, 1],
            vec![0, 3, 1, 2],
        ],
        one: 1,
    }
}
