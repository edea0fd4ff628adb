//! Property suites over the zigzag family, run by `pipedream verify`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::bijections::{
    bracketing_of, dyck_to_partition, partition_of, partition_to_dyck, rcgraph_of,
};
use crate::catalan::{
    catalan, enumerate_staircase_partitions, q_catalan, q_catalan_via_partitions,
};
use crate::eg::{eg_insert, eg_partition_of, eg_word, evacuate, q_label_row_check};
use crate::error::Error;
use crate::multiplicity::{schubert_multiplicity_at_identity, verify_prop1};
use crate::perm::Permutation;
use crate::poly::{schubert_polynomial, schubert_via_divided_differences, SparsePolynomial};
use crate::rcgraph::{enumerate_rcgraphs, RcGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Figure,
    Prop1,
    Counting,
    Oracle,
    Bijections,
    Eg,
    Transpose,
    Split,
    Multiplicity,
    Qcatalan,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Figure,
        Suite::Prop1,
        Suite::Counting,
        Suite::Oracle,
        Suite::Bijections,
        Suite::Eg,
        Suite::Transpose,
        Suite::Split,
        Suite::Multiplicity,
        Suite::Qcatalan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Figure => "figure",
            Suite::Prop1 => "prop1",
            Suite::Counting => "counting",
            Suite::Oracle => "oracle",
            Suite::Bijections => "bijections",
            Suite::Eg => "eg",
            Suite::Transpose => "transpose",
            Suite::Split => "split",
            Suite::Multiplicity => "multiplicity",
            Suite::Qcatalan => "qcatalan",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, suite: Suite, name: impl Into<String>, outcome: Result<(), String>) {
        let (passed, detail) = match outcome {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e),
        };
        self.checks.push(Check {
            suite,
            name: name.into(),
            passed,
            detail,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{tag} [{}] {}", c.suite, c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn zigzag_family(n: usize) -> Vec<RcGraph> {
    enumerate_rcgraphs(&Permutation::zigzag(n))
}

/// Runs `suites` with the zigzag family up to `max_n`.
pub fn run(suites: &[Suite], max_n: usize) -> Report {
    let mut report = Report::default();
    for &suite in suites {
        match suite {
            Suite::Figure => figure(&mut report),
            Suite::Prop1 => {
                for n in 1..=max_n {
                    let r = verify_prop1(n);
                    report.push(
                        suite,
                        format!("n={n}"),
                        ensure(r.passed(), || format!("lhs {} rhs {}", r.lhs, r.rhs)),
                    );
                }
            }
            Suite::Counting => {
                for n in 1..=max_n {
                    let got = zigzag_family(n).len();
                    let want = catalan(n);
                    report.push(
                        suite,
                        format!("n={n}"),
                        ensure(BigInt::from(got) == want, || format!("{got} != {want}")),
                    );
                }
            }
            Suite::Oracle => {
                for w in Permutation::all(4) {
                    report.push(suite, format!("w={w}"), oracle_check(&w));
                }
                for n in 1..=max_n {
                    report.push(
                        suite,
                        format!("zigzag n={n}"),
                        oracle_check(&Permutation::zigzag(n)),
                    );
                }
            }
            Suite::Bijections => {
                for n in 1..=max_n {
                    report.push(suite, format!("n={n}"), bijection_check(n));
                }
            }
            Suite::Eg => {
                for n in 1..=max_n {
                    report.push(suite, format!("n={n}"), eg_check(n));
                }
            }
            Suite::Transpose => {
                for n in 1..=max_n {
                    report.push(suite, format!("n={n}"), transpose_check(n));
                }
            }
            Suite::Split => {
                for n in 1..=max_n {
                    report.push(suite, format!("n={n}"), split_check(n));
                }
            }
            Suite::Multiplicity => {
                for n in 1..=max_n {
                    let w = Permutation::dominant_singular(n);
                    let out = ensure(w.local_equations_condition(), || "condition fails".into())
                        .and_then(|_| {
                            let m =
                                schubert_multiplicity_at_identity(&w).map_err(|e| e.to_string())?;
                            ensure(m == catalan(n), || format!("{m} != {}", catalan(n)))
                        });
                    report.push(suite, format!("n={n}"), out);
                }
            }
            Suite::Qcatalan => {
                for n in 0..=max_n {
                    let a = q_catalan(n);
                    let out = ensure(a == q_catalan_via_partitions(n), || {
                        format!("routes differ: {a}")
                    })
                    .and_then(|_| {
                        ensure(a.evaluate_at_one() == catalan(n), || "value at 1".into())
                    });
                    report.push(suite, format!("n={n}"), out);
                }
            }
        }
    }
    report
}

fn figure(report: &mut Report) {
    let w = Permutation::zigzag(3);
    let all = enumerate_rcgraphs(&w);
    let got: BTreeSet<Vec<u32>> = all
        .iter()
        .map(|d| {
            let mut e = d.monomial();
            while e.last() == Some(&0) {
                e.pop();
            }
            e
        })
        .collect();
    let want: BTreeSet<Vec<u32>> = [
        vec![0, 2, 1],
        vec![1, 1, 1],
        vec![2, 0, 1],
        vec![1, 2],
        vec![2, 1],
    ]
    .into_iter()
    .collect();
    report.push(
        Suite::Figure,
        "RC(1432) monomials",
        ensure(all.len() == 5 && got == want, || {
            format!("{} graphs, monomials {got:?}", all.len())
        }),
    );
}

fn oracle_check(w: &Permutation) -> Result<(), String> {
    let a = schubert_polynomial(w);
    let b = schubert_via_divided_differences(w);
    ensure(a == b, || {
        format!("rc-graphs give {a}, divided differences give {b}")
    })?;
    let positive = a.terms().all(|(_, c)| c >= &BigInt::one());
    ensure(positive, || "non-positive coefficient".into())
}

fn bijection_check(n: usize) -> Result<(), String> {
    let all = zigzag_family(n);
    let top = n * n.saturating_sub(1) * (n + 1) / 6;
    let mut image = BTreeSet::new();
    for d in &all {
        let l = partition_of(d).map_err(|e| e.to_string())?;
        ensure(d.weight() + l.size() == top, || {
            format!("weight law fails for {l}")
        })?;
        let back = rcgraph_of(&l, n).map_err(|e| e.to_string())?;
        ensure(&back == d, || format!("rcgraph_of({l}) differs"))?;
        let p = partition_to_dyck(&l, n).map_err(|e| e.to_string())?;
        ensure(dyck_to_partition(&p) == l, || {
            format!("Dyck round trip fails at {p}")
        })?;
        image.insert(l);
    }
    let dp: BTreeSet<_> = enumerate_staircase_partitions(n).into_iter().collect();
    ensure(image == dp, || "image is not DP(n)".into())
}

fn eg_check(n: usize) -> Result<(), String> {
    let all = zigzag_family(n);
    let mut ps = BTreeSet::new();
    for d in &all {
        let word = eg_word(d);
        let (p, q) = eg_insert(&word).map_err(|e| e.to_string())?;
        ensure(q_label_row_check(&q), || {
            format!("label rows fail for {q:?}")
        })?;
        let lambda = eg_partition_of(d).map_err(|e| e.to_string())?;
        let elbow = partition_of(d).map_err(|e| e.to_string())?;
        ensure(lambda == elbow, || format!("{lambda} != {elbow}"))?;
        let back = evacuate(&q, n).map_err(|e| e.to_string())?;
        ensure(back == word, || {
            "evacuation does not recover the word".into()
        })?;
        ps.insert(p);
    }
    ensure(ps.len() == 1, || {
        format!("{} distinct P tableaux", ps.len())
    })
}

fn transpose_check(n: usize) -> Result<(), String> {
    let all = zigzag_family(n);
    let set: BTreeSet<_> = all.iter().cloned().collect();
    for d in &all {
        let t = d.transpose();
        ensure(set.contains(&t), || "transpose leaves RC(w_n)".into())?;
        let b = bracketing_of(d).map_err(|e| e.to_string())?;
        ensure(b.pairs() == n, || format!("{b} has {} pairs", b.pairs()))?;
        let bt = bracketing_of(&t).map_err(|e| e.to_string())?;
        ensure(bt == b.reverse(), || {
            format!("{bt} is not the reverse of {b}")
        })?;
        ensure(bt.tree() == b.tree().flip(), || {
            "tree is not mirrored".into()
        })?;
    }
    Ok(())
}

fn split_check(n: usize) -> Result<(), String> {
    let binom = |a: usize, b: usize| -> usize {
        if b > a {
            0
        } else {
            (0..b).fold(1, |acc, t| acc * (a - t) / (t + 1))
        }
    };
    for d in zigzag_family(n) {
        let s = d.split().map_err(|e| e.to_string())?;
        let k = s.k;
        let rhs = s.upper.weight()
            + (k - 1) * binom(n - k, 2)
            + s.lower.weight()
            + (n + 1 - k) * binom(k - 1, 2)
            + binom(n, 2)
            - binom(k, 2);
        ensure(d.weight() == rhs, || format!("wt {} != {rhs}", d.weight()))?;
        let back = RcGraph::assemble(n, &s).map_err(|e| e.to_string())?;
        ensure(back == d, || "reassembly differs".into())?;
    }
    Ok(())
}

/// Sum of `x^monomial(D)`; kept for callers that want the polynomial of an
/// explicit list of rc-graphs.
pub fn polynomial_of(graphs: &[RcGraph]) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero();
    for d in graphs {
        p.add_term(d.monomial(), BigInt::one());
    }
    p
}
