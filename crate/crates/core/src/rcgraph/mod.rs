//! rc-graphs (pipe dreams).
//!
//! An rc-graph for `w` in `S_m` fills the staircase `{(i, j) : i + j <= m + 1}`
//! with crosses and elbows. The strand entering row `i` from the left leaves
//! through the top of column `w(i)`, and no two strands cross twice. Cells on
//! the anti-diagonal `i + j = m + 1` are always elbows.
//!
//! Coordinates are 1-based `(row, column)`; `(1, 3)` is the top row, third
//! column.

mod chute;
mod enumerate;
mod split;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use chute::ChuteMove;
pub use split::Split;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Elbow,
    Cross,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RcGraphJson", into = "RcGraphJson")]
pub struct RcGraph {
    m: usize,
    // rows[i - 1] has m + 1 - i cells, the last one on the anti-diagonal.
    rows: Vec<Vec<Cell>>,
}

/// Wire form: `{"m": m, "crosses": [[i, j], ...]}`, crosses row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RcGraphJson {
    pub m: usize,
    pub crosses: Vec<[usize; 2]>,
}

impl From<RcGraph> for RcGraphJson {
    fn from(d: RcGraph) -> Self {
        RcGraphJson {
            m: d.m,
            crosses: d.crosses().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

impl TryFrom<RcGraphJson> for RcGraph {
    type Error = Error;

    fn try_from(j: RcGraphJson) -> Result<Self> {
        let crosses: Vec<_> = j.crosses.iter().map(|c| (c[0], c[1])).collect();
        RcGraph::from_crosses(j.m, &crosses)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Entry {
    FromLeft,
    FromBottom,
}

impl RcGraph {
    /// Builds a grid from explicit rows; each row `i` must have `m + 1 - i`
    /// cells and end in an elbow.
    pub fn new(rows: Vec<Vec<Cell>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::MalformedGrid("no rows".into()));
        }
        for (idx, row) in rows.iter().enumerate() {
            let i = idx + 1;
            if row.len() != m + 1 - i {
                return Err(Error::MalformedGrid(format!(
                    "row {i} has {} cells, expected {}",
                    row.len(),
                    m + 1 - i
                )));
            }
            if row[row.len() - 1] == Cell::Cross {
                return Err(Error::CrossOnAntidiagonal(i, row.len()));
            }
        }
        Ok(RcGraph { m, rows })
    }

    /// The all-elbow grid, the unique rc-graph of the identity.
    pub fn all_elbows(m: usize) -> Self {
        RcGraph {
            m,
            rows: (1..=m).map(|i| vec![Cell::Elbow; m + 1 - i]).collect(),
        }
    }

    pub fn from_crosses(m: usize, crosses: &[(usize, usize)]) -> Result<Self> {
        if m == 0 {
            return Err(Error::MalformedGrid("m must be positive".into()));
        }
        let mut d = RcGraph::all_elbows(m);
        for &(i, j) in crosses {
            if i == 0 || j == 0 || i + j > m + 1 {
                return Err(Error::MalformedGrid(format!(
                    "cell ({i},{j}) outside the staircase"
                )));
            }
            if i + j == m + 1 {
                return Err(Error::CrossOnAntidiagonal(i, j));
            }
            d.rows[i - 1][j - 1] = Cell::Cross;
        }
        Ok(d)
    }

    /// The rc-graph of the zigzag permutation with elbows exactly in row one
    /// (and on the anti-diagonal).
    pub fn bottom(n: usize) -> Self {
        let m = n + 1;
        let rows = (1..=m)
            .map(|i| {
                let len = m + 1 - i;
                (1..=len)
                    .map(|j| {
                        if i > 1 && j < len {
                            Cell::Cross
                        } else {
                            Cell::Elbow
                        }
                    })
                    .collect()
            })
            .collect();
        RcGraph { m, rows }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> Option<Cell> {
        if i == 0 || j == 0 {
            return None;
        }
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied()
    }

    pub fn is_cross(&self, i: usize, j: usize) -> bool {
        self.get(i, j) == Some(Cell::Cross)
    }

    pub fn is_elbow(&self, i: usize, j: usize) -> bool {
        self.get(i, j) == Some(Cell::Elbow)
    }

    pub fn is_antidiagonal(&self, i: usize, j: usize) -> bool {
        i + j == self.m + 1
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, cell: Cell) {
        self.rows[i - 1][j - 1] = cell;
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    /// Cross locations `C(D)` in row-major order.
    pub fn crosses(&self) -> Vec<(usize, usize)> {
        self.cells_where(|c| c == Cell::Cross, true)
    }

    /// Elbow locations off the anti-diagonal (the non-trivial elbows), row-major.
    pub fn elbows(&self) -> Vec<(usize, usize)> {
        self.cells_where(|c| c == Cell::Elbow, false)
    }

    fn cells_where(
        &self,
        pred: impl Fn(Cell) -> bool,
        with_antidiagonal: bool,
    ) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (ri, row) in self.rows.iter().enumerate() {
            let last = if with_antidiagonal {
                row.len()
            } else {
                row.len() - 1
            };
            for (ci, &cell) in row[..last].iter().enumerate() {
                if pred(cell) {
                    out.push((ri + 1, ci + 1));
                }
            }
        }
        out
    }

    pub fn cross_count(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .filter(|&&c| c == Cell::Cross)
            .count()
    }

    /// Follows every strand; returns `w` with `w(i)` the exit column of the
    /// strand entering row `i`. Any filling defines a permutation this way;
    /// reducedness is checked separately by [`RcGraph::validate`].
    pub fn trace(&self) -> Permutation {
        let word = (1..=self.m).map(|r| self.exit_column(r)).collect();
        Permutation::new(word).expect("strand tracing is a bijection")
    }

    fn exit_column(&self, start_row: usize) -> usize {
        let (mut r, mut c, mut entry) = (start_row, 1, Entry::FromLeft);
        while r > 0 {
            match (self.rows[r - 1][c - 1], entry) {
                (Cell::Cross, Entry::FromLeft) | (Cell::Elbow, Entry::FromBottom) => {
                    c += 1;
                    entry = Entry::FromLeft;
                }
                (Cell::Cross, Entry::FromBottom) | (Cell::Elbow, Entry::FromLeft) => {
                    r -= 1;
                    entry = Entry::FromBottom;
                }
            }
        }
        c
    }

    /// Traces the strands and checks the cross count equals `l(w)`.
    pub fn validate(&self) -> Result<Permutation> {
        let w = self.trace();
        let crosses = self.cross_count();
        let length = w.length();
        if crosses != length {
            return Err(Error::NotReduced { crosses, length });
        }
        Ok(w)
    }

    /// `sum (i - 1)` over the crosses: the exponent of `q` contributed to the
    /// principal specialization.
    pub fn weight(&self) -> usize {
        self.crosses().iter().map(|&(i, _)| i - 1).sum()
    }

    /// Exponent vector of `prod x_i` over the crosses, one entry per row.
    pub fn monomial(&self) -> Vec<u32> {
        self.rows
            .iter()
            .map(|row| row.iter().filter(|&&c| c == Cell::Cross).count() as u32)
            .collect()
    }

    /// Reflects across the main diagonal. The result is an rc-graph for the
    /// inverse permutation.
    pub fn transpose(&self) -> Self {
        let m = self.m;
        let rows = (1..=m)
            .map(|i| (1..=m + 1 - i).map(|j| self.rows[j - 1][i - 1]).collect())
            .collect();
        RcGraph { m, rows }
    }

    /// Adds an anti-diagonal of elbows, giving an rc-graph of the embedded
    /// permutation in `S_{m'}`.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.m {
            return Err(Error::SizeMismatch {
                left: self.m,
                right: m,
            });
        }
        RcGraph::from_crosses(m, &self.crosses())
    }

    /// `'+'`/`'.'` rendering, one line per row, anti-diagonal included.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            for &c in row {
                s.push(if c == Cell::Cross { '+' } else { '.' });
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text format; blank lines are ignored, and the number of
    /// remaining lines fixes `m`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .map(|ch| match ch {
                        '+' => Ok(Cell::Cross),
                        '.' => Ok(Cell::Elbow),
                        other => Err(Error::Parse(format!("unexpected character {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RcGraph::new(rows)
    }
}

impl fmt::Display for RcGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for RcGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RcGraph::parse_text(s)
    }
}

/// Every rc-graph of `w`, sorted canonically.
pub fn enumerate_rcgraphs(w: &Permutation) -> Vec<RcGraph> {
    enumerate::enumerate(w)
}
