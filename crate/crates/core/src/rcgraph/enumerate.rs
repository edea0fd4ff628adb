//! Depth-first enumeration of `RC(w)`.
//!
//! Cells are decided bottom row first, left to right within a row. At that
//! point both strands entering a cell (from the left and from below) are
//! already known. A cross is allowed only between two strands forming an
//! inversion of `w` that have not crossed yet, and every strand must stay
//! weakly left of its exit column. The search therefore never produces a
//! non-reduced grid, and the exit check at row one is exact.

use super::{Cell, RcGraph};
use crate::perm::Permutation;

struct Search<'a> {
    m: usize,
    target: &'a [usize],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<Cell>>,
    // strand leaving each cell through its right / top edge
    right: Vec<Vec<usize>>,
    top: Vec<Vec<usize>>,
    crossed: Vec<bool>,
    out: Vec<RcGraph>,
}

pub(super) fn enumerate(w: &Permutation) -> Vec<RcGraph> {
    let m = w.size();
    let cells = (1..=m)
        .rev()
        .flat_map(|i| (1..=m + 1 - i).map(move |j| (i, j)))
        .collect();
    let mut search = Search {
        m,
        target: w.word(),
        cells,
        grid: (1..=m).map(|i| vec![Cell::Elbow; m + 1 - i]).collect(),
        right: (1..=m).map(|i| vec![0; m + 1 - i]).collect(),
        top: (1..=m).map(|i| vec![0; m + 1 - i]).collect(),
        crossed: vec![false; (m + 1) * (m + 1)],
        out: Vec::new(),
    };
    search.step(0);
    let mut out = search.out;
    out.sort();
    out
}

impl Search<'_> {
    fn exit(&self, strand: usize) -> usize {
        self.target[strand - 1]
    }

    fn pair(&self, a: usize, b: usize) -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        lo * (self.m + 1) + hi
    }

    fn is_inversion(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.exit(lo) > self.exit(hi)
    }

    // A strand leaving through the top of column c: c must not exceed its
    // exit column, and in row one it must equal it.
    fn top_ok(&self, strand: usize, row: usize, col: usize) -> bool {
        let e = self.exit(strand);
        if row == 1 {
            col == e
        } else {
            col <= e
        }
    }

    fn right_ok(&self, strand: usize, col: usize) -> bool {
        col < self.exit(strand)
    }

    fn step(&mut self, idx: usize) {
        if idx == self.cells.len() {
            self.out.push(RcGraph {
                m: self.m,
                rows: self.grid.clone(),
            });
            return;
        }
        let (i, j) = self.cells[idx];
        let left = if j == 1 { i } else { self.right[i - 1][j - 2] };
        if i + j == self.m + 1 {
            // anti-diagonal: forced elbow, nothing enters from below
            if self.top_ok(left, i, j) {
                self.grid[i - 1][j - 1] = Cell::Elbow;
                self.top[i - 1][j - 1] = left;
                self.step(idx + 1);
            }
            return;
        }
        let below = self.top[i][j - 1];

        // elbow: left strand turns up, lower strand turns right
        if self.top_ok(left, i, j) && self.right_ok(below, j) {
            self.grid[i - 1][j - 1] = Cell::Elbow;
            self.top[i - 1][j - 1] = left;
            self.right[i - 1][j - 1] = below;
            self.step(idx + 1);
        }

        // cross: both go straight
        let key = self.pair(left, below);
        if !self.crossed[key]
            && self.is_inversion(left, below)
            && self.right_ok(left, j)
            && self.top_ok(below, i, j)
        {
            self.crossed[key] = true;
            self.grid[i - 1][j - 1] = Cell::Cross;
            self.top[i - 1][j - 1] = below;
            self.right[i - 1][j - 1] = left;
            self.step(idx + 1);
            self.crossed[key] = false;
            self.grid[i - 1][j - 1] = Cell::Elbow;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::figure_1432;
    use super::*;
    use std::collections::BTreeSet;

    // Oracle: try every filling of the decidable cells and keep the reduced
    // ones that trace to w. Only feasible for tiny m.
    fn brute_force(w: &Permutation) -> Vec<RcGraph> {
        let m = w.size();
        let free: Vec<(usize, usize)> = (1..=m)
            .flat_map(|i| (1..=m - i).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << free.len()) {
            let crosses: Vec<_> = free
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            if crosses.len() != w.length() {
                continue;
            }
            let d = RcGraph::from_crosses(m, &crosses).unwrap();
            if d.validate().ok().as_ref() == Some(w) {
                out.push(d);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn figure_1432_exactly() {
        let w = Permutation::zigzag(3);
        let got: BTreeSet<_> = enumerate(&w).into_iter().collect();
        let want: BTreeSet<_> = figure_1432().into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn identity_singleton() {
        let got = enumerate(&Permutation::identity(3));
        assert_eq!(got, vec![RcGraph::all_elbows(3)]);
        assert_eq!(enumerate(&Permutation::identity(1)).len(), 1);
    }

    #[test]
    fn matches_brute_force_on_s4() {
        for w in Permutation::all(4) {
            let got = enumerate(&w);
            assert_eq!(got, brute_force(&w), "w = {w}");
            for d in &got {
                assert_eq!(d.validate().as_ref(), Ok(&w));
            }
        }
    }

    #[test]
    fn matches_brute_force_on_sample_of_s5() {
        for w in Permutation::all(5).into_iter().step_by(7) {
            assert_eq!(enumerate(&w), brute_force(&w), "w = {w}");
        }
    }

    #[test]
    fn zigzag_counts_are_catalan() {
        let counts: Vec<_> = (1..=7)
            .map(|n| enumerate(&Permutation::zigzag(n)).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
    }
}
