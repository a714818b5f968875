//! Structured coefficient-by-coefficient comparison reports.

use std::fmt;

use num::BigInt;
use serde::Serialize;

use crate::laurent::{halved, BigradedPoly, JsonInt, SeriesQ};

/// First monomial where two coefficients disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Doubled exponents of `x` and `y`.
    pub s2: i64,
    pub t2: i64,
    pub left: JsonInt,
    pub right: JsonInt,
}

impl Mismatch {
    fn new((s2, t2, left, right): (i64, i64, BigInt, BigInt)) -> Self {
        Mismatch {
            s2,
            t2,
            left: JsonInt(left),
            right: JsonInt(right),
        }
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x^{} y^{}: {} vs {}",
            halved(self.s2),
            halved(self.t2),
            self.left.0,
            self.right.0
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Hypothesis {
    Holds,
    /// The inputs' own polynomials (the degree-one coefficients) differ.
    Violated {
        mismatch: Mismatch,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStatus {
    pub q: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub title: String,
    pub hypothesis: Hypothesis,
    pub degrees: Vec<DegreeStatus>,
}

impl ComparisonReport {
    /// Compares every coefficient in `left`'s truncation box.
    pub fn compare(title: impl Into<String>, left: &SeriesQ, right: &SeriesQ) -> Self {
        let trunc = left.truncation();
        let mut keys: Vec<(u32, u32)> = trunc.degrees().collect();
        keys.sort_unstable_by_key(|&(q, p)| (p, q));
        let degrees = keys
            .into_iter()
            .map(|(q, p)| {
                let first = left.coeff_qp(q, p).first_difference(&right.coeff_qp(q, p));
                DegreeStatus {
                    q,
                    p: trunc.pmax.map(|_| p),
                    matches: first.is_none(),
                    first_mismatch: first.map(Mismatch::new),
                }
            })
            .collect();
        ComparisonReport {
            title: title.into(),
            hypothesis: Hypothesis::Holds,
            degrees,
        }
    }

    /// Report for inputs whose polynomials already disagree; no series are compared.
    pub fn hypothesis_failed(
        title: impl Into<String>,
        left: &BigradedPoly,
        right: &BigradedPoly,
    ) -> Option<Self> {
        left.first_difference(right).map(|d| ComparisonReport {
            title: title.into(),
            hypothesis: Hypothesis::Violated {
                mismatch: Mismatch::new(d),
            },
            degrees: Vec::new(),
        })
    }

    pub fn passed(&self) -> bool {
        self.hypothesis == Hypothesis::Holds && self.degrees.iter().all(|d| d.matches)
    }

    pub fn first_failure(&self) -> Option<&DegreeStatus> {
        self.degrees.iter().find(|d| !d.matches)
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        if let Hypothesis::Violated { mismatch } = &self.hypothesis {
            return writeln!(f, "  hypothesis violated at q^1: {mismatch}");
        }
        for d in &self.degrees {
            let degree = match d.p {
                Some(p) => format!("p^{p} q^{}", d.q),
                None => format!("q^{}", d.q),
            };
            match &d.first_mismatch {
                None => writeln!(f, "  {degree}: ok")?,
                Some(m) => writeln!(f, "  {degree}: MISMATCH at {m}")?,
            }
        }
        writeln!(f, "  result: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}
