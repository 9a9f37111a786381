//! Tabulated class-number data and verdict persistence.
//!
//! Fixture files are JSON Lines, one record per line, with the fields
//! `p`, `h_gamma3`, `h_k3`, `u`, `c_gamma`, `c_k` in that order. Shapes are
//! JSON arrays of cyclic factor orders, e.g. `[9,3]`. Blank lines are ignored.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::classifier::{hk_from_hgamma, ClassGroupShape, Verdict};
use crate::error::{Error, Result};

/// The 28 fields Q(∛p, ζ₃), 199 ≤ p ≤ 5347, with 3-class group of type (9, 3).
pub const BUNDLED_TABLE: &str = include_str!("../../data/table.jsonl");

/// On-disk record; field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureRecord {
    p: u64,
    h_gamma3: u64,
    h_k3: u64,
    u: u64,
    c_gamma: ClassGroupShape,
    c_k: ClassGroupShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureRow {
    pub p: u64,
    pub p_squared: u64,
    pub p_mod9: u64,
    pub h_gamma3: u64,
    pub h_k3: u64,
    pub u: u64,
    pub c_gamma: ClassGroupShape,
    pub c_k: ClassGroupShape,
}

impl FixtureRow {
    /// Build a row, checking every row invariant. `line` is used for error
    /// reporting only.
    pub fn new(
        p: u64,
        h_gamma3: u64,
        h_k3: u64,
        u: u64,
        c_gamma: ClassGroupShape,
        c_k: ClassGroupShape,
        line: usize,
    ) -> Result<Self> {
        let bad = |message: String| Error::Invariant { line, message };
        if !arith::is_prime(p) {
            return Err(bad(format!("p = {p} is not prime")));
        }
        let expected = hk_from_hgamma(h_gamma3, u).map_err(|e| bad(e.to_string()))?;
        if expected != h_k3 {
            return Err(bad(format!(
                "h_k3 = {h_k3} but (u/3)·h_gamma3² = ({u}/3)·{h_gamma3}² = {expected}"
            )));
        }
        if c_gamma.order() != h_gamma3 {
            return Err(bad(format!("c_gamma = {c_gamma} has order {} ≠ h_gamma3 = {h_gamma3}", c_gamma.order())));
        }
        if c_k.order() != h_k3 {
            return Err(bad(format!("c_k = {c_k} has order {} ≠ h_k3 = {h_k3}", c_k.order())));
        }
        let p_squared = p.checked_mul(p).ok_or_else(|| bad(format!("p = {p} too large")))?;
        Ok(Self {
            p,
            p_squared,
            p_mod9: p % 9,
            h_gamma3,
            h_k3,
            u,
            c_gamma,
            c_k,
        })
    }

    fn record(&self) -> FixtureRecord {
        FixtureRecord {
            p: self.p,
            h_gamma3: self.h_gamma3,
            h_k3: self.h_k3,
            u: self.u,
            c_gamma: self.c_gamma.clone(),
            c_k: self.c_k.clone(),
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(&self.record()).expect("fixture record serializes")
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRow>> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let rec: FixtureRecord = serde_json::from_str(raw).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        rows.push(FixtureRow::new(rec.p, rec.h_gamma3, rec.h_k3, rec.u, rec.c_gamma, rec.c_k, line)?);
    }
    Ok(rows)
}

pub fn load_fixtures(path: impl AsRef<Path>) -> Result<Vec<FixtureRow>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_fixtures(&text)
}

pub fn bundled_fixtures() -> Vec<FixtureRow> {
    parse_fixtures(BUNDLED_TABLE).expect("bundled table is valid")
}

pub fn fixtures_to_string(rows: &[FixtureRow]) -> String {
    rows.iter().map(|r| r.to_line() + "\n").collect()
}

pub fn save_fixtures(path: impl AsRef<Path>, rows: &[FixtureRow]) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, fixtures_to_string(rows)).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

/// Append verdicts, one JSON record per line, creating the file if needed.
pub fn append_verdicts(path: impl AsRef<Path>, verdicts: &[Verdict]) -> Result<()> {
    let path = path.as_ref();
    let io_err = |e: std::io::Error| Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    let mut file = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(io_err)?;
    let mut buf = String::new();
    for v in verdicts {
        buf.push_str(&serde_json::to_string(v).expect("verdict serializes"));
        buf.push('\n');
    }
    file.write_all(buf.as_bytes()).map_err(io_err)
}

pub fn read_verdicts(path: impl AsRef<Path>) -> Result<Vec<Verdict>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table() {
        let rows = bundled_fixtures();
        assert_eq!(rows.len(), 28);
        assert_eq!(rows.first().unwrap().p, 199);
        assert_eq!(rows.last().unwrap().p, 5347);
        assert_eq!(rows[0].p_squared, 39601);
        assert!(rows.iter().all(|r| r.p_mod9 == 1 && r.h_k3 == 27 && r.u == 1));
    }

    #[test]
    fn invariant_violation_reports_line() {
        let text = "\n{\"p\":199,\"h_gamma3\":9,\"h_k3\":28,\"u\":1,\"c_gamma\":[9],\"c_k\":[9,3]}\n";
        match parse_fixtures(text) {
            Err(Error::Invariant { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("28"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(parse_fixtures("{\"p\":199}"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_fixtures("not json"), Err(Error::Parse { line: 1, .. })));
        let bad_shape = "{\"p\":199,\"h_gamma3\":9,\"h_k3\":27,\"u\":1,\"c_gamma\":[3,9],\"c_k\":[9,3]}";
        assert!(matches!(parse_fixtures(bad_shape), Err(Error::Parse { .. })));
        let wrong_order = "{\"p\":199,\"h_gamma3\":9,\"h_k3\":27,\"u\":1,\"c_gamma\":[3],\"c_k\":[9,3]}";
        assert!(matches!(parse_fixtures(wrong_order), Err(Error::Invariant { .. })));
    }

    #[test]
    fn empty_and_missing_files() {
        assert!(parse_fixtures("").unwrap().is_empty());
        assert!(matches!(load_fixtures("/nonexistent/table.jsonl"), Err(Error::Io { .. })));
    }

    #[test]
    fn bundled_text_is_canonical_serialization() {
        assert_eq!(fixtures_to_string(&bundled_fixtures()), BUNDLED_TABLE);
    }
}
