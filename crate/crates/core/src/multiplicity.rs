//! Multiplicity of a Schubert variety at the identity point, for permutations
//! whose local equations are those of the matrix Schubert variety, and the
//! q-Catalan identity for the zigzag permutation.

use num_bigint::BigInt;
use serde::Serialize;

use crate::catalan::q_catalan;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{schubert_polynomial, QPolynomial};
use crate::rcgraph::enumerate_rcgraphs;

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// `S_{w_0 w}(1, ..., 1)`. Refuses permutations failing
/// [`Permutation::local_equations_condition`], where this value need not be
/// the multiplicity.
pub fn schubert_multiplicity_at_identity(w: &Permutation) -> Result<BigInt> {
    if !w.local_equations_condition() {
        return Err(Error::ConditionNotSatisfied(w.to_string()));
    }
    let u = Permutation::longest_element(w.size()).multiply(w)?;
    Ok(schubert_polynomial(&u).evaluate_all_ones())
}

/// `S_{w_n}(1, q, ..., q^n)` against `q^{binom(n,3)} C_n(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop1Report {
    pub n: usize,
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
    pub equal: bool,
    /// `|RC(w_n)|` as a decimal string.
    pub count: String,
    /// Both sums of the recursive count agree with `lhs`.
    pub recurrence: bool,
}

impl Prop1Report {
    pub fn passed(&self) -> bool {
        self.equal && self.recurrence
    }
}

/// `F_n(q)`, the principal specialization of the zigzag Schubert polynomial.
pub fn zigzag_specialization(n: usize) -> QPolynomial {
    schubert_polynomial(&Permutation::zigzag(n)).principal_specialization()
}

pub fn verify_prop1(n: usize) -> Prop1Report {
    let w = Permutation::zigzag(n);
    let count = enumerate_rcgraphs(&w).len();
    let lhs = zigzag_specialization(n);
    let rhs = q_catalan(n).shift(binom(n, 3));

    // F_n = sum_k q^{e_k} F_{k-1} F_{n-k} with the exponent from the split
    let f: Vec<QPolynomial> = (0..n).map(zigzag_specialization).collect();
    let mut by_split = QPolynomial::zero();
    // F_n = q^{binom(n,3)} sum_k q^{n-k} C_{k-1}(q) C_{n-k}(q)
    let mut by_catalan = QPolynomial::zero();
    for k in 1..=n {
        let e =
            (k - 1) * binom(n - k, 2) + (n + 1 - k) * binom(k - 1, 2) + binom(n, 2) - binom(k, 2);
        by_split = &by_split + &(&f[k - 1] * &f[n - k]).shift(e);
        let c = &q_catalan(k - 1) * &q_catalan(n - k);
        by_catalan = &by_catalan + &c.shift(binom(n, 3) + n - k);
    }
    let recurrence = n == 0 || (by_split == lhs && by_catalan == lhs);

    Prop1Report {
        n,
        equal: lhs == rhs,
        lhs,
        rhs,
        count: count.to_string(),
        recurrence,
    }
}
