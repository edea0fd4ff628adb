use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pipedream::bijections::{bracketing_of, partition_of, partition_to_dyck};
use pipedream::catalan::{catalan, q_catalan, q_catalan_via_partitions};
use pipedream::eg::{eg_insert, eg_partition_of, eg_word};
use pipedream::multiplicity::schubert_multiplicity_at_identity;
use pipedream::poly::{schubert_polynomial, schubert_via_divided_differences};
use pipedream::rcgraph::enumerate_rcgraphs;
use pipedream::verify::{self, Suite};
use pipedream::{Permutation, RcGraph};

#[derive(Parser)]
#[command(
    name = "pipedream",
    version,
    about = "rc-graphs, Schubert polynomials and Catalan bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the rc-graphs of a permutation.
    Enumerate {
        /// One-line notation, comma separated.
        #[arg(long)]
        perm: Permutation,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Print the glyph legend first.
        #[arg(long)]
        legend: bool,
    },
    /// Print the Schubert polynomial.
    Schubert {
        #[arg(long)]
        perm: Permutation,
        /// Cross-check against divided differences.
        #[arg(long)]
        oracle: bool,
    },
    /// Principal specialization x_i -> q^(i-1).
    Specialize {
        #[arg(long)]
        perm: Permutation,
        /// Print the value at q = 1 instead.
        #[arg(long)]
        at_one: bool,
    },
    /// Catalan numbers and q-Catalan polynomials.
    Catalan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: bool,
        #[arg(long, value_enum, default_value_t = Via::Recurrence)]
        via: Via,
    },
    /// Apply a bijection to RC(w_n), or to one rc-graph read from a file.
    Biject {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        to: Target,
        /// rc-graph in the '+'/'.' text format.
        #[arg(long)]
        rc: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Run the property suites.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// prop1, bijections, eg, transpose, figure, counting, oracle,
        /// split, multiplicity, qcatalan, or all.
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Multiplicity of the Schubert variety of 1 (n+1) n ... 2 at the identity.
    Multiplicity {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Partitions,
    Recurrence,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Partition,
    Dyck,
    Tree,
    Eg,
}

#[derive(Clone)]
enum SuiteArg {
    All,
    One(Suite),
}

fn parse_suite(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        return Ok(SuiteArg::All);
    }
    s.parse()
        .map(SuiteArg::One)
        .map_err(|e: pipedream::Error| e.to_string())
}

enum Outcome {
    Ok(String),
    Failed { report: String, summary: String },
}

fn compact<T: serde::Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string(v)?)
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let out = match cli.command {
        Command::Enumerate {
            perm,
            format,
            legend,
        } => {
            let all = enumerate_rcgraphs(&perm);
            match format {
                Format::Json => compact(&all)?,
                Format::Ascii => {
                    let mut s = String::new();
                    if legend {
                        s.push_str("legend: '+' cross, '.' elbow; row i has m+1-i cells\n\n");
                    }
                    let blocks: Vec<String> = all.iter().map(RcGraph::to_text).collect();
                    for b in &blocks {
                        s.push_str(b);
                        s.push('\n');
                    }
                    s.push_str(&format!("{} rc-graphs", all.len()));
                    s
                }
            }
        }
        Command::Schubert { perm, oracle } => {
            let p = schubert_polynomial(&perm);
            if oracle {
                let q = schubert_via_divided_differences(&perm);
                if p != q {
                    return Ok(Outcome::Failed {
                        report: format!("rc-graphs:           {p}\ndivided differences: {q}"),
                        summary: "oracle disagrees".into(),
                    });
                }
                format!("{p}\noracle: agrees")
            } else {
                p.to_string()
            }
        }
        Command::Specialize { perm, at_one } => {
            let f = schubert_polynomial(&perm).principal_specialization();
            if at_one {
                f.evaluate_at_one().to_string()
            } else {
                f.to_string()
            }
        }
        Command::Catalan { n, q, via } => {
            if q {
                match via {
                    Via::Recurrence => q_catalan(n),
                    Via::Partitions => q_catalan_via_partitions(n),
                }
                .to_string()
            } else {
                catalan(n).to_string()
            }
        }
        Command::Biject { n, to, rc, format } => {
            let w = Permutation::zigzag(n);
            let graphs = match rc {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("--rc: cannot read {}", path.display()))?;
                    let d: RcGraph = text.parse().map_err(|e| anyhow!("--rc: {e}"))?;
                    let got = d.validate().map_err(|e| anyhow!("--rc: {e}"))?;
                    if got != w {
                        bail!(
                            "--rc: graph realizes {got}, not the zigzag permutation {w} of --n {n}"
                        );
                    }
                    vec![d]
                }
                None => enumerate_rcgraphs(&w),
            };
            let rows = graphs
                .iter()
                .map(|d| biject_one(d, n, to))
                .collect::<anyhow::Result<Vec<_>>>()?;
            match format {
                Format::Json => compact(&rows.into_iter().map(|(_, v)| v).collect::<Vec<_>>())?,
                Format::Ascii => {
                    let lines: Vec<String> = graphs
                        .iter()
                        .zip(rows)
                        .map(|(d, (s, _))| format!("{}-> {s}\n", d.to_text()))
                        .collect();
                    lines.join("\n").trim_end().to_string()
                }
            }
        }
        Command::Verify {
            max_n,
            suite,
            format,
        } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::One(s) => vec![s],
            };
            let report = verify::run(&suites, max_n);
            let text = match format {
                Format::Json => {
                    compact(&json!({ "passed": report.passed(), "checks": report.checks }))?
                }
                Format::Ascii => report.to_string(),
            };
            if !report.passed() {
                let failed: Vec<String> = report
                    .failures()
                    .map(|c| format!("[{}] {}", c.suite, c.name))
                    .collect();
                return Ok(Outcome::Failed {
                    report: text,
                    summary: format!("{} check(s) failed: {}", failed.len(), failed.join(", ")),
                });
            }
            text
        }
        Command::Multiplicity { n } => {
            let w = Permutation::dominant_singular(n);
            schubert_multiplicity_at_identity(&w)
                .map_err(|e| anyhow!("--n: {e}"))?
                .to_string()
        }
    };
    Ok(Outcome::Ok(out))
}

fn biject_one(d: &RcGraph, n: usize, to: Target) -> anyhow::Result<(String, Value)> {
    Ok(match to {
        Target::Partition => {
            let l = partition_of(d)?;
            (l.to_string(), serde_json::to_value(&l)?)
        }
        Target::Dyck => {
            let p = partition_to_dyck(&partition_of(d)?, n)?.to_string();
            (p.clone(), Value::String(p))
        }
        Target::Tree => {
            let b = bracketing_of(d)?;
            let t = b.tree();
            (
                format!("{b}  {t}"),
                json!({ "bracketing": b.to_string(), "tree": t }),
            )
        }
        Target::Eg => {
            let (p, q) = eg_insert(&eg_word(d))?;
            let l = eg_partition_of(d)?;
            (
                format!(
                    "P={} Q={} shape={l}",
                    serde_json::to_string(&p)?,
                    serde_json::to_string(&q)?
                ),
                json!({ "p": p, "q": q, "partition": l }),
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Ok(s)) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed { report, summary }) => {
            println!("{report}");
            eprintln!("error: {summary}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
