//! Catalan numbers, Carlitz–Riordan q-Catalan polynomials, and partitions
//! fitting inside the staircase `delta_n = (n-1, ..., 1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::QPolynomial;

/// A partition, stored as its positive parts in weakly decreasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Zero parts are dropped; the rest must be weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts an arbitrary multiset of parts.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `delta_n = (n-1, n-2, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition {
            parts: (1..n).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `lambda_k` (1-based), zero past the last part.
    pub fn part(&self, k: usize) -> usize {
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `lambda_k <= n - k` for every `k`.
    pub fn fits_staircase(&self, n: usize) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(idx, &p)| idx < n && p <= n - (idx + 1))
    }

    pub(crate) fn check_fits(&self, n: usize) -> Result<()> {
        if self.fits_staircase(n) {
            Ok(())
        } else {
            Err(Error::PartitionOutOfBounds {
                partition: self.to_string(),
                n,
            })
        }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    let mut binom = BigInt::one();
    for t in 0..n {
        binom = binom * (2 * n - t) / (t + 1);
    }
    binom / (n + 1)
}

/// `C_n(q) = sum_{k=0}^{n-1} q^k C_{n-k-1}(q) C_k(q)`, `C_0(q) = 1`.
pub fn q_catalan(n: usize) -> QPolynomial {
    let mut table = vec![QPolynomial::one()];
    for m in 1..=n {
        let mut acc = QPolynomial::zero();
        for k in 0..m {
            acc = &acc + &(&table[m - k - 1] * &table[k]).shift(k);
        }
        table.push(acc);
    }
    table.swap_remove(n)
}

/// `C_n(q) = sum over lambda in DP(n) of q^{binom(n,2) - |lambda|}`.
pub fn q_catalan_via_partitions(n: usize) -> QPolynomial {
    let top = n * n.saturating_sub(1) / 2;
    let mut coeffs = vec![0i64; top + 1];
    for lambda in enumerate_staircase_partitions(n) {
        coeffs[top - lambda.size()] += 1;
    }
    QPolynomial::from_i64(&coeffs)
}

/// `DP(n)`: partitions with `lambda_k <= n - k`, in lexicographic order of
/// their part sequences.
pub fn enumerate_staircase_partitions(n: usize) -> Vec<Partition> {
    fn extend(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: prefix.clone(),
        });
        let k = prefix.len() + 1;
        if k >= n {
            return;
        }
        let cap = prefix.last().copied().unwrap_or(usize::MAX).min(n - k);
        for p in 1..=cap {
            prefix.push(p);
            extend(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn catalan_values() {
        let got: Vec<BigInt> = (0..=7).map(catalan).collect();
        let want: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(got, want);
        assert_eq!(catalan(30).to_string(), "3814986502092304");
    }

    #[test]
    fn q_catalan_small() {
        assert_eq!(q_catalan(0), QPolynomial::one());
        assert_eq!(q_catalan(1), QPolynomial::one());
        assert_eq!(q_catalan(2), QPolynomial::from_i64(&[1, 1]));
        assert_eq!(q_catalan(3), QPolynomial::from_i64(&[1, 2, 1, 1]));
        // independently computed with a throwaway script from the recurrence
        assert_eq!(q_catalan(4), QPolynomial::from_i64(&[1, 3, 3, 3, 2, 1, 1]));
        assert_eq!(
            q_catalan(5),
            QPolynomial::from_i64(&[1, 4, 6, 7, 7, 5, 5, 3, 2, 1, 1])
        );
    }

    #[test]
    fn two_routes_agree() {
        for n in 0..=10 {
            assert_eq!(q_catalan(n), q_catalan_via_partitions(n), "n = {n}");
            assert_eq!(q_catalan(n).degree(), Some(n * n.saturating_sub(1) / 2));
            assert_eq!(q_catalan(n).coefficient(0), BigInt::one());
        }
        for n in 0..=12 {
            assert_eq!(q_catalan(n).evaluate_at_one(), catalan(n));
        }
    }

    #[test]
    fn staircase_partitions() {
        assert_eq!(
            enumerate_staircase_partitions(3),
            vec![
                part(&[]),
                part(&[1]),
                part(&[1, 1]),
                part(&[2]),
                part(&[2, 1])
            ]
        );
        assert_eq!(enumerate_staircase_partitions(1), vec![Partition::empty()]);
        assert_eq!(enumerate_staircase_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_staircase_partitions(6).len(), 132);
        for n in 0..=8 {
            let all = enumerate_staircase_partitions(n);
            assert_eq!(BigInt::from(all.len()), catalan(n));
            assert!(all.iter().all(|l| l.fits_staircase(n)));
        }
    }

    #[test]
    fn partition_basics() {
        assert_eq!(part(&[2, 1, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert!(Partition::staircase(4).fits_staircase(4));
        assert!(!part(&[3, 1]).fits_staircase(3));
        assert_eq!(serde_json::to_string(&part(&[2, 1])).unwrap(), "[2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        assert_eq!(Partition::from_multiset(vec![1, 0, 3, 1]), part(&[3, 1, 1]));
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(v in prop::collection::vec(0usize..8, 0..8)) {
            let l = Partition::from_multiset(v);
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().size(), l.size());
        }
    }
}
