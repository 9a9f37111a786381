//! Re-run the classifier over tabulated or recomputed class-number data and
//! check every row comes out as a certified (9, 3) field.

use std::fmt;

use serde::Serialize;

use super::cas::{cas_query, CasBackend, CasError};
use super::fixtures::FixtureRow;
use crate::classifier::{classify, Status, Verdict};

pub enum TableSource<'a> {
    Fixtures(Vec<FixtureRow>),
    /// Query the backend for each prime.
    Cas {
        backend: &'a mut dyn CasBackend,
        primes: Vec<u64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowOutcome {
    pub p: u64,
    pub passed: bool,
    pub message: String,
    pub verdict: Option<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    /// Sorted by p.
    pub rows: Vec<RowOutcome>,
    /// Set when the source could not be consulted at all.
    pub skipped: Option<String>,
}

impl TableReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.passed).count()
    }

    pub fn total(&self) -> usize {
        self.rows.len()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.total()
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(why) = &self.skipped {
            return writeln!(f, "skipped: {why}");
        }
        writeln!(f, "{:>6}  {:>9}  {:>6}  {:>4}  {:>2}  {:<8}  result", "p", "p^2", "h_G,3", "h_k,3", "u", "C_k,3")?;
        for row in &self.rows {
            let v = row.verdict.as_ref();
            let data = v.and_then(|v| v.inputs_used).unwrap_or_default();
            let show = |x: Option<u64>| x.map_or("-".to_string(), |n| n.to_string());
            writeln!(
                f,
                "{:>6}  {:>9}  {:>6}  {:>5}  {:>2}  {:<8}  {}",
                row.p,
                row.p as u128 * row.p as u128,
                show(data.h_gamma3),
                show(v.and_then(|v| v.h_k3)),
                show(data.u),
                v.and_then(|v| v.certified_shape.as_ref())
                    .map_or("-".to_string(), |s| s.to_string()),
                if row.passed { "PASS".to_string() } else { format!("FAIL: {}", row.message) }
            )?;
        }
        writeln!(f, "{}/{} rows certified (9, 3)", self.passed(), self.total())
    }
}

fn check(p: u64, h_gamma3: u64, u: u64) -> RowOutcome {
    match classify(p, Some(h_gamma3), Some(u)) {
        Ok(v) => {
            let ok = v.status == Status::Certified93
                && v.certified_shape.as_ref().is_some_and(|s| s.is_type_9_3())
                && v.h_k3 == Some(27);
            let message = if ok {
                "certified (9, 3)".to_string()
            } else {
                format!("expected certified (9, 3), got {}; trace: {}", v.status, v.trace.join(" | "))
            };
            RowOutcome { p, passed: ok, message, verdict: Some(v) }
        }
        Err(e) => RowOutcome { p, passed: false, message: e.to_string(), verdict: None },
    }
}

pub fn reproduce_table(source: TableSource<'_>) -> TableReport {
    let mut rows = match source {
        TableSource::Fixtures(fixtures) => fixtures.iter().map(|r| check(r.p, r.h_gamma3, r.u)).collect(),
        TableSource::Cas { backend, primes } => {
            let mut rows = Vec::new();
            for p in primes {
                match cas_query(p, backend) {
                    Ok(res) => {
                        let mut row = check(p, res.h_gamma3, res.u_estimate);
                        if row.passed && !res.c_k.is_type_9_3() {
                            row.passed = false;
                            row.message = format!("recomputed C_k,3 = {} is not [9, 3]", res.c_k);
                        }
                        rows.push(row);
                    }
                    Err(CasError::Unavailable(why)) => {
                        return TableReport { rows: Vec::new(), skipped: Some(why) };
                    }
                    Err(e) => rows.push(RowOutcome { p, passed: false, message: e.to_string(), verdict: None }),
                }
            }
            rows
        }
    };
    rows.sort_by_key(|r: &RowOutcome| r.p);
    TableReport { rows, skipped: None }
}
