//! Schubert polynomials, from rc-graphs and from divided differences.

use num_bigint::BigInt;
use num_traits::One;

use super::SparsePolynomial;
use crate::perm::Permutation;
use crate::rcgraph::enumerate_rcgraphs;

/// `S_w = sum over D in RC(w) of prod x_i`, one `x_i` per cross in row `i`.
pub fn schubert_polynomial(w: &Permutation) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero();
    for d in enumerate_rcgraphs(w) {
        p.add_term(d.monomial(), BigInt::one());
    }
    p
}

/// Which ascent to climb at each step of the walk from `w` up to `w_0`.
/// Any choice yields a reduced word for `w^{-1} w_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReducedWordStrategy {
    /// Lowest ascent first.
    #[default]
    FirstAscent,
    /// Highest ascent first.
    LastAscent,
}

/// `S_w = d_{a_1} ... d_{a_l} (x_1^{m-1} x_2^{m-2} ... x_{m-1})` where
/// `w s_{a_1} ... s_{a_l} = w_0` with every step raising the length.
pub fn schubert_via_divided_differences(w: &Permutation) -> SparsePolynomial {
    schubert_via_divided_differences_with(w, ReducedWordStrategy::default())
}

pub fn schubert_via_divided_differences_with(
    w: &Permutation,
    strategy: ReducedWordStrategy,
) -> SparsePolynomial {
    let m = w.size();
    let mut word = Vec::new();
    let mut v = w.clone();
    loop {
        let next = match strategy {
            ReducedWordStrategy::FirstAscent => v.ascents().next(),
            ReducedWordStrategy::LastAscent => v.ascents().last(),
        };
        let Some(i) = next else { break };
        word.push(i);
        v = v.swap_positions(i);
    }
    debug_assert_eq!(word.len(), m * (m - 1) / 2 - w.length());

    let staircase: Vec<u32> = (1..=m).map(|i| (m - i) as u32).collect();
    let mut p = SparsePolynomial::monomial(staircase, BigInt::one());
    for &i in word.iter().rev() {
        p = p.divided_difference(i);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn mono(e: &[u32]) -> SparsePolynomial {
        SparsePolynomial::monomial(e.to_vec(), BigInt::one())
    }

    fn s1432() -> SparsePolynomial {
        [[0, 2, 1], [1, 1, 1], [2, 0, 1], [1, 2, 0], [2, 1, 0]]
            .iter()
            .fold(SparsePolynomial::zero(), |acc, e| &acc + &mono(e))
    }

    #[test]
    fn s1432_from_rcgraphs() {
        assert_eq!(schubert_polynomial(&p(&[1, 4, 3, 2])), s1432());
        assert_eq!(
            schubert_polynomial(&Permutation::identity(4)),
            SparsePolynomial::one()
        );
        assert_eq!(schubert_polynomial(&p(&[1, 4, 3, 2, 5])), s1432());
    }

    #[test]
    fn s1432_from_divided_differences() {
        assert_eq!(schubert_via_divided_differences(&p(&[1, 4, 3, 2])), s1432());
        assert_eq!(
            schubert_via_divided_differences(&Permutation::longest_element(3)),
            mono(&[2, 1])
        );
        assert_eq!(
            schubert_via_divided_differences(&Permutation::identity(3)),
            SparsePolynomial::one()
        );
    }

    #[test]
    fn agree_on_s4_and_zigzags() {
        for w in Permutation::all(4) {
            let a = schubert_polynomial(&w);
            assert_eq!(a, schubert_via_divided_differences(&w), "w = {w}");
            assert_eq!(
                schubert_via_divided_differences_with(&w, ReducedWordStrategy::LastAscent),
                schubert_via_divided_differences_with(&w, ReducedWordStrategy::FirstAscent)
            );
            assert!(a.terms().all(|(_, c)| c > &BigInt::from(0)));
            let n_rc = enumerate_rcgraphs(&w).len();
            assert_eq!(a.evaluate_all_ones(), BigInt::from(n_rc));
        }
        for n in 1..=5 {
            let z = Permutation::zigzag(n);
            assert_eq!(
                schubert_polynomial(&z),
                schubert_via_divided_differences(&z)
            );
        }
    }

    #[test]
    fn specialization_exponents_are_weights() {
        for w in Permutation::all(4) {
            let spec = schubert_polynomial(&w).principal_specialization();
            let mut from_weights = vec![0i64; spec.coeffs().len().max(1)];
            for d in enumerate_rcgraphs(&w) {
                from_weights[d.weight()] += 1;
            }
            assert_eq!(spec, crate::poly::QPolynomial::from_i64(&from_weights));
        }
    }

    #[test]
    fn s1432_specializations() {
        let s = s1432();
        assert_eq!(
            s.principal_specialization(),
            crate::poly::QPolynomial::from_i64(&[0, 1, 2, 1, 1])
        );
        assert_eq!(s.evaluate_all_ones(), BigInt::from(5));
        assert_eq!(
            schubert_polynomial(&Permutation::zigzag(5)).evaluate_all_ones(),
            BigInt::from(42)
        );
    }
}
