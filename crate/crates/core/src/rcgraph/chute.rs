//! Generalized inverse chute moves.
//!
//! A move trades an elbow at `(i, j)` for the cross at `(i', j')`, where
//! `i' > i` and `j' < j`, provided the rectangle between them looks like:
//!
//! 1. `(k, j)` is a cross for `i < k < i'`, and `(i', j)` is an elbow;
//! 2. `(i, k)` is a cross for `j' < k < j`, and `(i, j')` is an elbow;
//! 3. `(k, j')` is a cross for `i < k <= i'`;
//! 4. `(i', k)` is a cross for `j' <= k < j`.
//!
//! The resulting grid is an rc-graph for the same permutation.

use std::collections::{BTreeSet, VecDeque};

use super::{Cell, RcGraph};
use crate::error::{Error, Result};

/// The cross at `cross` moves to the elbow at `elbow`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChuteMove {
    pub elbow: (usize, usize),
    pub cross: (usize, usize),
}

fn violated(condition: u8, detail: String) -> Error {
    Error::MoveConditionViolated { condition, detail }
}

impl RcGraph {
    /// Checks the four move conditions without applying the move.
    /// Geometric preconditions (`i' > i`, `j' < j`, cells inside the grid,
    /// target elbow off the anti-diagonal) are reported as condition `0`.
    pub fn check_inverse_chute_move(&self, mv: ChuteMove) -> Result<()> {
        let (i, j) = mv.elbow;
        let (ip, jp) = mv.cross;
        if ip <= i || jp >= j || i == 0 || jp == 0 {
            return Err(violated(
                0,
                format!("need i' > i and j' < j, got ({i},{j}) and ({ip},{jp})"),
            ));
        }
        if self.get(i, j).is_none() || self.get(ip, jp).is_none() {
            return Err(violated(0, "cell outside the staircase".into()));
        }
        if self.is_antidiagonal(i, j) {
            return Err(violated(0, format!("({i},{j}) is on the anti-diagonal")));
        }
        if !self.is_elbow(i, j) {
            return Err(violated(0, format!("({i},{j}) is not an elbow")));
        }
        if let Some(k) = (i + 1..ip).find(|&k| !self.is_cross(k, j)) {
            return Err(violated(1, format!("({k},{j}) is not a cross")));
        }
        if !self.is_elbow(ip, j) {
            return Err(violated(1, format!("({ip},{j}) is not an elbow")));
        }
        if let Some(k) = (jp + 1..j).find(|&k| !self.is_cross(i, k)) {
            return Err(violated(2, format!("({i},{k}) is not a cross")));
        }
        if !self.is_elbow(i, jp) {
            return Err(violated(2, format!("({i},{jp}) is not an elbow")));
        }
        if let Some(k) = (i + 1..=ip).find(|&k| !self.is_cross(k, jp)) {
            return Err(violated(3, format!("({k},{jp}) is not a cross")));
        }
        if let Some(k) = (jp..j).find(|&k| !self.is_cross(ip, k)) {
            return Err(violated(4, format!("({ip},{k}) is not a cross")));
        }
        Ok(())
    }

    pub fn inverse_chute_move(&self, mv: ChuteMove) -> Result<RcGraph> {
        self.check_inverse_chute_move(mv)?;
        let mut out = self.clone();
        out.set(mv.elbow.0, mv.elbow.1, Cell::Cross);
        out.set(mv.cross.0, mv.cross.1, Cell::Elbow);
        Ok(out)
    }

    /// All valid inverse chute moves. For a given elbow, conditions 1 and 2
    /// pin down `i'` and `j'`, so each elbow contributes at most one move.
    pub fn inverse_chute_moves(&self) -> Vec<ChuteMove> {
        let mut moves = Vec::new();
        for (i, j) in self.elbows() {
            let Some(ip) = (i + 1..=self.m).find(|&k| !self.is_cross(k, j)) else {
                continue;
            };
            let Some(jp) = (1..j).rev().find(|&k| !self.is_cross(i, k)) else {
                continue;
            };
            let mv = ChuteMove {
                elbow: (i, j),
                cross: (ip, jp),
            };
            if self.check_inverse_chute_move(mv).is_ok() {
                moves.push(mv);
            }
        }
        moves
    }

    /// Every rc-graph reachable from `self` by inverse chute moves, sorted.
    pub fn chute_closure(&self) -> Vec<RcGraph> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([self.clone()]);
        seen.insert(self.clone());
        while let Some(d) = queue.pop_front() {
            for mv in d.inverse_chute_moves() {
                let e = d.inverse_chute_move(mv).expect("listed moves are valid");
                if seen.insert(e.clone()) {
                    queue.push_back(e);
                }
            }
        }
        seen.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::rcgraph::enumerate_rcgraphs;

    #[test]
    fn surjection_step_on_bottom_graph() {
        // the first move for the conjugate part 2: the cross at (3,1) goes to (1,2)
        let d = RcGraph::bottom(3);
        let e = d
            .inverse_chute_move(ChuteMove {
                elbow: (1, 2),
                cross: (3, 1),
            })
            .unwrap();
        assert_eq!(e.validate().unwrap(), Permutation::zigzag(3));
        assert_eq!(e.crosses(), vec![(1, 2), (2, 1), (2, 2)]);
        assert_eq!(e.weight() as isize - d.weight() as isize, (1 - 1) - (3 - 1));
    }

    #[test]
    fn reports_failing_condition() {
        let d = RcGraph::bottom(3);
        let err = d
            .inverse_chute_move(ChuteMove {
                elbow: (1, 3),
                cross: (2, 1),
            })
            .unwrap_err();
        assert!(
            matches!(err, Error::MoveConditionViolated { condition: 2, .. }),
            "{err}"
        );
        let err = d
            .inverse_chute_move(ChuteMove {
                elbow: (1, 2),
                cross: (2, 1),
            })
            .unwrap_err();
        assert!(
            matches!(err, Error::MoveConditionViolated { condition: 1, .. }),
            "{err}"
        );
        let err = d
            .inverse_chute_move(ChuteMove {
                elbow: (1, 1),
                cross: (2, 2),
            })
            .unwrap_err();
        assert!(
            matches!(err, Error::MoveConditionViolated { condition: 0, .. }),
            "{err}"
        );
    }

    #[test]
    fn moves_preserve_permutation_and_cross_count() {
        for w in Permutation::all(4) {
            for d in enumerate_rcgraphs(&w) {
                for mv in d.inverse_chute_moves() {
                    let e = d.inverse_chute_move(mv).unwrap();
                    assert_eq!(e.validate().as_ref(), Ok(&w));
                    assert_eq!(e.cross_count(), d.cross_count());
                }
            }
        }
    }

    #[test]
    fn closure_from_bottom_reaches_everything() {
        for n in 1..=5 {
            let all = enumerate_rcgraphs(&Permutation::zigzag(n));
            assert_eq!(RcGraph::bottom(n).chute_closure(), all, "n = {n}");
        }
    }
}
