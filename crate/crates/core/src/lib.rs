//! Finite unital power-associative rings given by explicit operation tables.
//!
//! Every element of a finite power-associative ring has exactly one
//! idempotent among its powers. Grouping elements by that idempotent gives a
//! partition `R = B_0 ⊔ B_1 ⊔ ...` which homomorphisms respect, and which
//! makes lifting of idempotents (and, for associative rings, of von Neumann
//! regular elements) constructive. This crate computes the partition and
//! checks those facts exhaustively:
//!
//! - [`ring`]: validated tables, constructors, powers, ideals and quotients.
//! - [`idem`]: idempotents, `e_x` by two independent routes, the partition
//!   and its zero-product properties.
//! - [`lifting`]: homomorphisms, partition compatibility, idempotent and
//!   regular-element lifting.
//! - [`zdgraph`]: zero-divisor digraphs and maximal cliques of orthogonal
//!   idempotents.
//! - [`io`] and [`suite`]: definition files and the `verify-all` battery.
//!
//! ```
//! use finring::ring::make_zmod;
//! use finring::idem::idempotent_partition;
//!
//! let r = make_zmod(12).unwrap();
//! let p = idempotent_partition(&r).unwrap();
//! assert_eq!(p.block(4), Some(&[2, 4, 8, 10][..]));
//! ```

pub mod error;
pub mod fixtures;
pub mod idem;
pub mod io;
pub mod lifting;
pub mod report;
pub mod ring;
pub mod suite;
pub mod zdgraph;

pub use error::{Error, Result};
pub use ring::{OpTable, RingTable};
