//! Bijections from `RC(w_n)` to other Catalan families.
//!
//! * [`partition_of`] / [`rcgraph_of`]: rc-graphs and partitions inside the
//!   staircase `delta_n`, via the rows of the non-trivial elbows.
//! * [`partition_to_dyck`] / [`dyck_to_partition`]: partitions and Dyck paths.
//! * [`bracketing_of`]: rc-graphs and full bracketings of `1 2 ... n+1`, one
//!   bracket pair per non-trivial elbow. Transposing the rc-graph reverses
//!   the bracketing, i.e. mirrors the binary tree.

mod bracket;
mod dyck;

pub use bracket::{bracketing_of, tree_of, BinaryTree, Bracketing, Token};
pub use dyck::{dyck_to_partition, partition_to_dyck, DyckPath, Step};

use crate::catalan::Partition;
use crate::error::{Error, Result};
use crate::rcgraph::{ChuteMove, RcGraph};

/// `lambda(D)`: the conjugate of the multiset `{i - 1 : (i, j) non-trivial
/// elbow}` with zero parts dropped.
pub fn partition_of(d: &RcGraph) -> Result<Partition> {
    let n = d.zigzag_order()?;
    let conj = Partition::from_multiset(d.elbows().iter().map(|&(i, _)| i - 1).collect());
    let lambda = conj.conjugate();
    if !lambda.fits_staircase(n) {
        return Err(Error::NotAZigzagRcGraph(format!(
            "{lambda} does not fit delta_{n}"
        )));
    }
    Ok(lambda)
}

/// Each intermediate rc-graph with the move applied to it, and the final graph.
#[derive(Debug, Clone)]
pub struct Construction {
    pub steps: Vec<(RcGraph, ChuteMove)>,
    pub result: RcGraph,
}

/// The moves that build the rc-graph of `lambda`, starting from the bottom
/// rc-graph. Conjugate parts are processed in decreasing order; a part `k`
/// moves the rightmost cross of row `k + 1` not lying under a top-row cross
/// into the first top-row elbow to its right.
pub fn rcgraph_moves(lambda: &Partition, n: usize) -> Result<Construction> {
    lambda.check_fits(n)?;
    let mut d = RcGraph::bottom(n);
    let mut steps = Vec::new();
    for &k in lambda.conjugate().parts() {
        let row = k + 1;
        let l = (1..=n + 1 - row)
            .rev()
            .find(|&c| d.is_cross(row, c) && !d.is_cross(1, c))
            .ok_or_else(|| Error::PartitionOutOfBounds {
                partition: lambda.to_string(),
                n,
            })?;
        let m =
            (l + 1..=n)
                .find(|&c| d.is_elbow(1, c))
                .ok_or_else(|| Error::PartitionOutOfBounds {
                    partition: lambda.to_string(),
                    n,
                })?;
        let mv = ChuteMove {
            elbow: (1, m),
            cross: (row, l),
        };
        let next = d.inverse_chute_move(mv)?;
        steps.push((d, mv));
        d = next;
    }
    Ok(Construction { steps, result: d })
}

/// Inverse of [`partition_of`].
pub fn rcgraph_of(lambda: &Partition, n: usize) -> Result<RcGraph> {
    Ok(rcgraph_moves(lambda, n)?.result)
}
