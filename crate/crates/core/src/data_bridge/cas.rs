//! Adapter for recomputing class groups with an external computer-algebra
//! system (PARI/GP by default).
//!
//! The adapter writes a short script to the subprocess's standard input and
//! reads integer lists back from standard output. Tests drive it through
//! [`ScriptedCas`], so nothing here requires the external program.

use std::collections::VecDeque;
use std::io::{ErrorKind, Read, Write};
use std::process::{Command, Stdio};
use std::thread;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::classifier::{hk_from_hgamma, ClassGroupShape};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CasError {
    #[error("computer-algebra executable unavailable: {0}")]
    Unavailable(String),
    #[error("computer-algebra process timed out after {0:?}")]
    Timeout(Duration),
    #[error("computer-algebra process failed: {0}")]
    Failed(String),
    #[error("cannot parse computer-algebra output: {0}")]
    Unparseable(String),
}

pub trait CasBackend {
    /// Run one script and return everything it printed.
    fn run(&mut self, script: &str) -> Result<String, CasError>;
}

/// An external program fed through stdin.
#[derive(Clone, Debug)]
pub struct SubprocessCas {
    pub program: String,
    pub args: Vec<String>,
    pub timeout: Duration,
}

impl SubprocessCas {
    /// Split a command line such as `"gp -q"` on whitespace.
    pub fn from_command_line(cmd: &str, timeout: Duration) -> Result<Self, CasError> {
        let mut parts = cmd.split_whitespace().map(str::to_string);
        let program = parts
            .next()
            .ok_or_else(|| CasError::Unavailable("empty command".into()))?;
        Ok(Self {
            program,
            args: parts.collect(),
            timeout,
        })
    }
}

impl CasBackend for SubprocessCas {
    fn run(&mut self, script: &str) -> Result<String, CasError> {
        let mut child = Command::new(&self.program)
            .args(&self.args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| match e.kind() {
                ErrorKind::NotFound | ErrorKind::PermissionDenied => {
                    CasError::Unavailable(format!("{}: {e}", self.program))
                }
                _ => CasError::Failed(e.to_string()),
            })?;
        {
            let mut stdin = child.stdin.take().expect("stdin piped");
            // a program that exits early closes the pipe; its exit status is checked below
            let _ = stdin.write_all(script.as_bytes());
        }
        let mut stdout = child.stdout.take().expect("stdout piped");
        let reader = thread::spawn(move || {
            let mut out = String::new();
            stdout.read_to_string(&mut out).map(|_| out)
        });
        let deadline = Instant::now() + self.timeout;
        let status = loop {
            match child.try_wait().map_err(|e| CasError::Failed(e.to_string()))? {
                Some(status) => break status,
                None if Instant::now() >= deadline => {
                    let _ = child.kill();
                    let _ = child.wait();
                    return Err(CasError::Timeout(self.timeout));
                }
                None => thread::sleep(Duration::from_millis(10)),
            }
        };
        let out = reader
            .join()
            .map_err(|_| CasError::Failed("reader thread panicked".into()))?
            .map_err(|e| CasError::Failed(e.to_string()))?;
        if !status.success() {
            return Err(CasError::Failed(format!("exit status {status}")));
        }
        Ok(out)
    }
}

/// Replays canned outputs in order and records the scripts it was given.
#[derive(Clone, Debug, Default)]
pub struct ScriptedCas {
    responses: VecDeque<Result<String, CasError>>,
    pub scripts: Vec<String>,
}

impl ScriptedCas {
    pub fn new(responses: impl IntoIterator<Item = Result<String, CasError>>) -> Self {
        Self {
            responses: responses.into_iter().collect(),
            scripts: Vec::new(),
        }
    }
}

impl CasBackend for ScriptedCas {
    fn run(&mut self, script: &str) -> Result<String, CasError> {
        self.scripts.push(script.to_string());
        self.responses
            .pop_front()
            .unwrap_or_else(|| Err(CasError::Failed("transcript exhausted".into())))
    }
}

/// GP script printing the class group invariants of Q(∛d) and of its normal
/// closure, one list per line.
pub fn gp_script(d: u64) -> String {
    format!(
        "default(parisize, 10^8);\n\
         f = x^3 - {d};\n\
         print(bnfinit(f, 1).cyc);\n\
         print(bnfinit(polcompositum(f, x^2 + x + 1)[1], 1).cyc);\n\
         quit;\n"
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CasResult {
    pub p: u64,
    pub h_gamma3: u64,
    pub h_k3: u64,
    pub c_gamma: ClassGroupShape,
    pub c_k: ClassGroupShape,
    pub u_estimate: u64,
    /// Always true: u is inferred from h_k,3 = (u/3)·h_Γ,3², not computed.
    pub u_inferred: bool,
}

/// u from h_k,3 = (u/3)·h_Γ,3².
pub fn infer_unit_index(h_gamma3: u64, h_k3: u64) -> Result<u64, CasError> {
    [1, 3]
        .into_iter()
        .find(|&u| hk_from_hgamma(h_gamma3, u).ok() == Some(h_k3))
        .ok_or_else(|| {
            CasError::Unparseable(format!(
                "no u ∈ {{1, 3}} satisfies {h_k3} = (u/3)·{h_gamma3}²"
            ))
        })
}

fn integer_lists(out: &str) -> Vec<Vec<u64>> {
    out.lines()
        .filter_map(|line| {
            let inner = line.trim().strip_prefix('[')?.strip_suffix(']')?;
            if inner.trim().is_empty() {
                return Some(Vec::new());
            }
            inner
                .split(',')
                .map(|t| t.trim().parse::<u64>().ok())
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

pub fn parse_cas_output(p: u64, out: &str) -> Result<CasResult, CasError> {
    let lists = integer_lists(out);
    let [gamma, k] = lists.as_slice() else {
        return Err(CasError::Unparseable(format!(
            "expected two integer lists, found {}: {out:?}",
            lists.len()
        )));
    };
    let shape = |v: &[u64]| {
        ClassGroupShape::three_part_of(v).map_err(|e| CasError::Unparseable(e.to_string()))
    };
    let c_gamma = shape(gamma)?;
    let c_k = shape(k)?;
    let (h_gamma3, h_k3) = (c_gamma.order(), c_k.order());
    Ok(CasResult {
        p,
        h_gamma3,
        h_k3,
        u_estimate: infer_unit_index(h_gamma3, h_k3)?,
        c_gamma,
        c_k,
        u_inferred: true,
    })
}

pub fn cas_query(p: u64, backend: &mut dyn CasBackend) -> Result<CasResult, CasError> {
    let out = backend.run(&gp_script(p))?;
    parse_cas_output(p, &out)
}
