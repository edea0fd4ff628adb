//! Pipe dreams (rc-graphs), Schubert polynomials and the Catalan combinatorics
//! of the zigzag permutation `1 (n+1) n ... 2`.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: permutations in one-line notation.
//! * [`rcgraph`]: the rc-graph grid, strand tracing, enumeration, inverse
//!   chute moves, transposition and the recursive split of zigzag rc-graphs.
//! * [`poly`]: exact sparse polynomials, Schubert polynomials (from rc-graphs
//!   and from divided differences) and principal specialization.
//! * [`catalan`]: Catalan numbers, Carlitz–Riordan q-Catalan polynomials and
//!   partitions inside the staircase.
//! * [`bijections`]: rc-graphs of the zigzag permutation to partitions,
//!   Dyck paths, bracketings and binary trees.
//! * [`eg`]: Edelman–Greene insertion and its evacuation inverse.
//! * [`multiplicity`]: the Catalan multiplicity computation and the
//!   q-Catalan identity report.
//! * [`verify`]: property suites shared by the CLI.

pub mod bijections;
pub mod catalan;
pub mod eg;
mod error;
pub mod multiplicity;
pub mod perm;
pub mod poly;
pub mod rcgraph;
pub mod verify;

pub use bijections::{BinaryTree, Bracketing, DyckPath, Step};
pub use catalan::{catalan, q_catalan, q_catalan_via_partitions, Partition};
pub use eg::{BiWord, ReadingOrder, Tableau};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use poly::{QPolynomial, SparsePolynomial};
pub use rcgraph::{Cell, RcGraph};
