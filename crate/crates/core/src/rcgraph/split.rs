//! Recursive decomposition of an rc-graph for the zigzag permutation `w_n`.
//!
//! The strand entering row `n + 1` exits through column 2, so it turns right
//! in exactly one row `k`. Around that row the grid breaks into
//!
//! * forced crosses in rows `1..k-1`, columns `2..=n+2-k`;
//! * forced crosses in column 1, rows `k+1..=n`;
//! * a lower block (rows `k..=n`, columns `2..=n+2-k`), an rc-graph for
//!   `w_{n-k}`;
//! * an upper block (rows `1..=k`, column 1 and columns `n+3-k..=n+1`), an
//!   rc-graph for `w_{k-1}`.

use super::{Cell, RcGraph};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub k: usize,
    /// rc-graph for `w_{n-k}`.
    pub lower: RcGraph,
    /// rc-graph for `w_{k-1}`.
    pub upper: RcGraph,
}

fn not_zigzag(msg: impl Into<String>) -> Error {
    Error::NotAZigzagRcGraph(msg.into())
}

impl RcGraph {
    /// `n` with `self` in `RC(w_n)`, or an error.
    pub fn zigzag_order(&self) -> Result<usize> {
        let n = self.m - 1;
        match self.validate() {
            Ok(w) if w == Permutation::zigzag(n) => Ok(n),
            Ok(w) => Err(not_zigzag(format!("traces to {w}"))),
            Err(e) => Err(not_zigzag(e.to_string())),
        }
    }

    pub fn split(&self) -> Result<Split> {
        if self.m < 2 {
            return Err(not_zigzag("need n >= 1"));
        }
        let n = self.zigzag_order()?;
        // the last strand climbs column 1 through crosses and turns right at
        // the first elbow it meets
        let k = (1..=n)
            .rev()
            .find(|&r| self.is_elbow(r, 1))
            .ok_or_else(|| not_zigzag("no turn row"))?;
        for i in 1..k {
            for j in 2..=n + 2 - k {
                if !self.is_cross(i, j) {
                    return Err(not_zigzag(format!("expected forced cross at ({i},{j})")));
                }
            }
        }

        let m_lower = n - k + 1;
        let lower_rows = (1..=m_lower)
            .map(|i| {
                (1..=m_lower + 1 - i)
                    .map(|j| self.rows[i + k - 2][j])
                    .collect()
            })
            .collect();
        let lower = RcGraph::new(lower_rows)?;

        let upper_cols: Vec<usize> = std::iter::once(1).chain(n + 3 - k..=n + 1).collect();
        let upper_rows = (1..=k)
            .map(|i| {
                upper_cols[..k + 1 - i]
                    .iter()
                    .map(|&c| self.rows[i - 1][c - 1])
                    .collect()
            })
            .collect();
        let upper = RcGraph::new(upper_rows)?;

        if lower.zigzag_order().ok() != Some(n - k) || upper.zigzag_order().ok() != Some(k - 1) {
            return Err(not_zigzag("blocks are not zigzag rc-graphs"));
        }
        Ok(Split { k, lower, upper })
    }

    /// Inverse of [`RcGraph::split`]: rebuilds the rc-graph for `w_n` from
    /// the turn row and the two blocks.
    pub fn assemble(n: usize, split: &Split) -> Result<RcGraph> {
        let k = split.k;
        if k == 0 || k > n || split.lower.m != n - k + 1 || split.upper.m != k {
            return Err(Error::SizeMismatch { left: n, right: k });
        }
        let m = n + 1;
        let mut d = RcGraph::all_elbows(m);
        for i in 1..k {
            for j in 2..=n + 2 - k {
                d.set(i, j, Cell::Cross);
            }
        }
        for i in k + 1..=n {
            d.set(i, 1, Cell::Cross);
        }
        for (i, j) in split.lower.crosses() {
            d.set(i + k - 1, j + 1, Cell::Cross);
        }
        for (i, j) in split.upper.crosses() {
            let col = if j == 1 { 1 } else { n + 1 - k + j };
            d.set(i, col, Cell::Cross);
        }
        Ok(d)
    }
}
