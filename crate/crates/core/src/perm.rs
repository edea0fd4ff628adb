//! Permutations of `S_m` in one-line notation.
//!
//! Positions and values are 1-based. Products compose right to left:
//! `(u * w)(i) = u(w(i))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates a one-line word as a rearrangement of `1..=m`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::NotAPermutation("empty word".into()));
        }
        let m = word.len();
        let mut seen = vec![false; m + 1];
        for &x in &word {
            if x == 0 || x > m {
                return Err(Error::NotAPermutation(format!(
                    "entry {x} out of range 1..={m}"
                )));
            }
            if seen[x] {
                return Err(Error::NotAPermutation(format!("duplicate entry {x}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            word: (1..=m).collect(),
        }
    }

    /// `w_0 = m (m-1) ... 1`.
    pub fn longest_element(m: usize) -> Self {
        Permutation {
            word: (1..=m).rev().collect(),
        }
    }

    /// The zigzag permutation `1 (n+1) n ... 2` in `S_{n+1}`.
    ///
    /// `n = 0` gives the identity of `S_1`, which is what the recursive split
    /// of a zigzag rc-graph produces at the bottom of the recursion.
    pub fn zigzag(n: usize) -> Self {
        let mut word = vec![1];
        word.extend((2..=n + 1).rev());
        Permutation { word }
    }

    /// `(n+2) 2 3 ... (n+1) 1` in `S_{n+2}`.
    pub fn dominant_singular(n: usize) -> Self {
        let mut word = vec![n + 2];
        word.extend(2..=n + 1);
        word.push(1);
        Permutation { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Size of the ambient symmetric group.
    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// `w(i)` for `1 <= i <= m`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.word.len()];
        for (i, &x) in self.word.iter().enumerate() {
            word[x - 1] = i + 1;
        }
        Permutation { word }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn multiply(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(Permutation {
            word: other.word.iter().map(|&x| self.word[x - 1]).collect(),
        })
    }

    /// Extends by fixed points up to `S_m`.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: m,
            });
        }
        let mut word = self.word.clone();
        word.extend(self.size() + 1..=m);
        Ok(Permutation { word })
    }

    /// Right multiplication by the simple transposition `s_i`, swapping
    /// positions `i` and `i+1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// Ascents `i` with `w(i) < w(i+1)`.
    pub fn ascents(&self) -> impl Iterator<Item = usize> + '_ {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] < p[1])
            .map(|(i, _)| i + 1)
    }

    /// True iff for every `(i, j)` in `1..=m` with `i + j > m`, either
    /// `(w_0 w)^{-1}(i) <= j` or `(w_0 w)(j) <= i`.
    ///
    /// For permutations with this property the local equations of the Schubert
    /// variety at the identity coincide with those of the matrix Schubert
    /// variety.
    pub fn local_equations_condition(&self) -> bool {
        let m = self.size();
        let u = Permutation::longest_element(m)
            .multiply(self)
            .expect("same size");
        let u_inv = u.inverse();
        (1..=m).all(|i| {
            (1..=m)
                .filter(|&j| i + j > m)
                .all(|j| u_inv.apply(i) <= j || u.apply(j) <= i)
        })
    }

    /// All permutations of `S_m` in lexicographic order.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=m).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            // next lexicographic permutation
            let Some(i) = (0..m.saturating_sub(1))
                .rev()
                .find(|&i| word[i] < word[i + 1])
            else {
                break;
            };
            let j = (i + 1..m).rev().find(|&j| word[j] > word[i]).unwrap();
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }
}
