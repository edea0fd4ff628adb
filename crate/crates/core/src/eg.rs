//! Edelman–Greene insertion on rc-graphs.
//!
//! The crosses of an rc-graph are read row by row, top row first, and each
//! row from right to left. A cross at `(i, j)` contributes the pair
//! `(a, alpha) = (i, i + j)`. The letters `alpha` are inserted with the
//! Edelman–Greene rule into `P` while the `a` are recorded in `Q`; both
//! tableaux are transposed at the end.
//!
//! Reading each row left to right instead does not give a reduced word, and
//! insertion breaks already on `1432`; [`diagnose_reading_order`] reports
//! this explicitly.

use serde::{Deserialize, Serialize};

use crate::bijections::partition_of;
use crate::catalan::Partition;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rcgraph::{enumerate_rcgraphs, RcGraph};

/// Rows of a tableau, top to bottom; row lengths weakly decrease.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        if t.rows.iter().any(Vec::is_empty) || t.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidQTableau(format!(
                "{:?} is not of partition shape",
                t.rows
            )));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("partition shape")
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect();
        Tableau { rows }
    }

    pub fn rows_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn rows_weak(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    pub fn columns_strict(&self) -> bool {
        self.transpose().rows_strict()
    }

    pub fn columns_weak(&self) -> bool {
        self.transpose().rows_weak()
    }

    pub fn count(&self, label: usize) -> usize {
        self.rows.iter().flatten().filter(|&&x| x == label).count()
    }
}

/// Pairs `(a_k, alpha_k)`; serializes as `[[a, alpha], ...]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BiWord {
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReadingOrder {
    LeftToRight,
    #[default]
    RightToLeft,
}

pub fn eg_word(d: &RcGraph) -> BiWord {
    eg_word_with(d, ReadingOrder::RightToLeft)
}

pub fn eg_word_with(d: &RcGraph, order: ReadingOrder) -> BiWord {
    let mut pairs = Vec::with_capacity(d.cross_count());
    for i in 1..=d.m() {
        let mut row: Vec<usize> = (1..=d.m() + 1 - i).filter(|&j| d.is_cross(i, j)).collect();
        if order == ReadingOrder::RightToLeft {
            row.reverse();
        }
        pairs.extend(row.into_iter().map(|j| (i, i + j)));
    }
    BiWord { pairs }
}

fn inconsistent(msg: String) -> Error {
    Error::InsertionInconsistency(msg)
}

/// Inserts one letter, returning the row where a new box was created.
fn insert_letter(p: &mut Vec<Vec<usize>>, letter: usize) -> Result<usize> {
    let mut x = letter;
    for r in 0.. {
        if r == p.len() {
            p.push(vec![x]);
            return Ok(r);
        }
        let row = &mut p[r];
        let bump = row.iter().position(|&y| y > x);
        if row.contains(&x) {
            // only legal when x + 1 is present too: row unchanged, x + 1 moves on
            match bump {
                Some(pos) if row[pos] == x + 1 => {
                    x += 1;
                    continue;
                }
                _ => {
                    return Err(inconsistent(format!(
                        "letter {letter} would repeat {x} in row {}",
                        r + 1
                    )))
                }
            }
        }
        match bump {
            None => {
                row.push(x);
                return Ok(r);
            }
            Some(pos) => {
                x = std::mem::replace(&mut row[pos], x);
            }
        }
    }
    unreachable!()
}

/// Edelman–Greene insertion of the letters, recording the `a`s. Returns the
/// transposed `(P, Q)`.
pub fn eg_insert(word: &BiWord) -> Result<(Tableau, Tableau)> {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for &(a, alpha) in &word.pairs {
        let r = insert_letter(&mut p, alpha)?;
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(a);
    }
    let p = Tableau { rows: p };
    let q = Tableau { rows: q };
    if !(p.rows_strict() && p.columns_strict()) {
        return Err(inconsistent("P is not strict".into()));
    }
    if !q.rows_strict() {
        return Err(inconsistent(
            "Q is not row-strict before transposing".into(),
        ));
    }
    Ok((p.transpose(), q.transpose()))
}

/// Recovers the biword of an rc-graph for `w_n` from its (transposed) `Q`.
///
/// Working on the untransposed tableau: the largest label among the filled
/// boxes with nothing filled to their right or below is removed, preferring
/// the southernmost box on ties. Its label is `a`, and a box in row `r`
/// gives `alpha = n + 2 - r`. The vacated box is refilled by reverse jeu de
/// taquin (the larger of the upper and left neighbours slides in, the left
/// one on ties), so the hole travels to the inner boundary. Letters are
/// produced last to first.
pub fn evacuate(q: &Tableau, n: usize) -> Result<BiWord> {
    let shape = q.shape();
    if shape != Partition::staircase(n) {
        return Err(Error::InvalidQTableau(format!(
            "shape {shape} is not delta_{n}"
        )));
    }
    if !(q.rows_weak() && q.columns_strict()) {
        return Err(Error::InvalidQTableau("not column-strict".into()));
    }
    let mut cells: Vec<Vec<Option<usize>>> = q
        .transpose()
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| Some(x)).collect())
        .collect();
    let filled = |cells: &Vec<Vec<Option<usize>>>, r: usize, c: usize| -> Option<usize> {
        cells.get(r).and_then(|row| row.get(c)).copied().flatten()
    };
    let mut pairs = Vec::with_capacity(q.len());
    for _ in 0..q.len() {
        let mut best: Option<(usize, usize, usize)> = None;
        for r in 0..cells.len() {
            for c in 0..cells[r].len() {
                let Some(v) = cells[r][c] else { continue };
                if filled(&cells, r, c + 1).is_some() || filled(&cells, r + 1, c).is_some() {
                    continue;
                }
                if best.is_none_or(|(bv, br, _)| v > bv || (v == bv && r > br)) {
                    best = Some((v, r, c));
                }
            }
        }
        let (v, r0, c0) = best.ok_or_else(|| Error::InvalidQTableau("no removable box".into()))?;
        pairs.push((v, n + 1 - r0));
        cells[r0][c0] = None;
        let (mut r, mut c) = (r0, c0);
        loop {
            let up = if r > 0 {
                filled(&cells, r - 1, c)
            } else {
                None
            };
            let left = if c > 0 {
                filled(&cells, r, c - 1)
            } else {
                None
            };
            let (nr, nc) = match (up, left) {
                (None, None) => break,
                (Some(_), None) => (r - 1, c),
                (None, Some(_)) => (r, c - 1),
                (Some(u), Some(l)) => {
                    if l >= u {
                        (r, c - 1)
                    } else {
                        (r - 1, c)
                    }
                }
            };
            cells[r][c] = cells[nr][nc].take();
            r = nr;
            c = nc;
        }
    }
    pairs.reverse();
    Ok(BiWord { pairs })
}

/// Every label `i` of the transposed `Q` lies in row `i - 1` or row `i`.
pub fn q_label_row_check(q: &Tableau) -> bool {
    q.rows.iter().enumerate().all(|(idx, row)| {
        row.iter()
            .all(|&label| idx + 1 == label || idx + 2 == label)
    })
}

/// The boxes of the transposed `Q` whose label equals their row index.
pub fn eg_partition_of(d: &RcGraph) -> Result<Partition> {
    d.zigzag_order()?;
    let (_, q) = eg_insert(&eg_word(d))?;
    let mut parts = Vec::new();
    for (idx, row) in q.rows.iter().enumerate() {
        let hits: Vec<usize> = row
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == idx + 1)
            .map(|(c, _)| c)
            .collect();
        if hits.iter().enumerate().any(|(k, &c)| k != c) {
            return Err(Error::BoxesNotPartition(format!(
                "row {} is not left-justified",
                idx + 1
            )));
        }
        parts.push(hits.len());
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::new(parts.clone())
        .map_err(|_| Error::BoxesNotPartition(format!("row lengths {parts:?}")))
}

/// How one reading order fares on `RC(w_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReadingDiagnosis {
    pub order: &'static str,
    pub n: usize,
    /// Insertion succeeded on every rc-graph.
    pub insertion_ok: bool,
    pub p_constant: bool,
    pub q_rows_ok: bool,
    pub matches_elbow_bijection: bool,
}

impl ReadingDiagnosis {
    pub fn passes(&self) -> bool {
        self.insertion_ok && self.p_constant && self.q_rows_ok && self.matches_elbow_bijection
    }
}

/// Runs insertion under both reading orders over `RC(w_n)`.
pub fn diagnose_reading_order(n: usize) -> Vec<ReadingDiagnosis> {
    let all = enumerate_rcgraphs(&Permutation::zigzag(n));
    [
        (ReadingOrder::LeftToRight, "left-to-right"),
        (ReadingOrder::RightToLeft, "right-to-left"),
    ]
    .into_iter()
    .map(|(order, name)| {
        let results: Vec<_> = all
            .iter()
            .map(|d| eg_insert(&eg_word_with(d, order)))
            .collect();
        let insertion_ok = results.iter().all(Result::is_ok);
        let ok: Vec<_> = results.into_iter().filter_map(Result::ok).collect();
        let p_constant = insertion_ok && ok.windows(2).all(|w| w[0].0 == w[1].0);
        let q_rows_ok = insertion_ok && ok.iter().all(|(_, q)| q_label_row_check(q));
        let matches_elbow_bijection = insertion_ok
            && all.iter().all(|d| {
                let q = eg_insert(&eg_word_with(d, order)).unwrap().1;
                let lambda = boxes_matching_row(&q);
                lambda.is_some() && lambda == partition_of(d).ok()
            });
        ReadingDiagnosis {
            order: name,
            n,
            insertion_ok,
            p_constant,
            q_rows_ok,
            matches_elbow_bijection,
        }
    })
    .collect()
}

fn boxes_matching_row(q: &Tableau) -> Option<Partition> {
    let parts: Vec<usize> = q
        .rows
        .iter()
        .enumerate()
        .map(|(idx, row)| row.iter().take_while(|&&x| x == idx + 1).count())
        .collect();
    Partition::new(parts).ok()
}
