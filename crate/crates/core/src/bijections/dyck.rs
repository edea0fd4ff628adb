//! Dyck paths from `(0,0)` to `(n,n)` with up (`U`) and right (`R`) steps,
//! never dropping below the diagonal.
//!
//! Coding: let `a_r` be the number of `R` steps taken before the `r`-th `U`
//! step. Then `a_r <= r - 1`, the cells left of the path in row `r` number
//! `a_r`, and `lambda_k = a_{n+1-k}` is a partition inside `delta_n`. The
//! area between the path and the diagonal (full cells) is
//! `binom(n,2) - |lambda|`, so the empty partition is `U^n R^n` and
//! `delta_n` is `(UR)^n`.

use std::fmt;
use std::str::FromStr;

use crate::catalan::Partition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    R,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if !steps.len().is_multiple_of(2) {
            return Err(Error::MalformedPath("odd number of steps".into()));
        }
        let mut height: isize = 0;
        for (k, s) in steps.iter().enumerate() {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::MalformedPath(format!(
                    "dips below the diagonal at step {}",
                    k + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::MalformedPath("does not end on the diagonal".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Full cells strictly between the path and the diagonal.
    pub fn area(&self) -> usize {
        let mut rights = 0;
        let mut area = 0;
        let mut ups = 0;
        for s in &self.steps {
            match s {
                Step::U => {
                    ups += 1;
                    area += ups - 1 - rights;
                }
                Step::R => rights += 1,
            }
        }
        area
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::U { "U" } else { "R" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::U),
                'R' => Ok(Step::R),
                other => Err(Error::MalformedPath(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

pub fn partition_to_dyck(lambda: &Partition, n: usize) -> Result<DyckPath> {
    lambda.check_fits(n)?;
    let mut steps = Vec::with_capacity(2 * n);
    let mut rights = 0;
    for r in 1..=n {
        let a = lambda.part(n + 1 - r);
        while rights < a {
            steps.push(Step::R);
            rights += 1;
        }
        steps.push(Step::U);
    }
    steps.extend(std::iter::repeat_n(Step::R, n - rights));
    DyckPath::new(steps)
}

pub fn dyck_to_partition(path: &DyckPath) -> Partition {
    let mut rights = 0;
    let mut a = Vec::new();
    for s in path.steps() {
        match s {
            Step::U => a.push(rights),
            Step::R => rights += 1,
        }
    }
    a.reverse();
    Partition::new(a).expect("R counts before successive U steps are non-decreasing")
}
