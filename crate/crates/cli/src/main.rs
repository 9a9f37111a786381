use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use purecubic::classifier::{self, Status, Verdict};
use purecubic::data_bridge::{self, reproduce_table, SubprocessCas, TableSource};
use purecubic::{eisenstein, genus, radicand, ramification, Error};

#[derive(Parser)]
#[command(name = "purecubic", version, about = "Class groups of pure cubic fields Q(∛d, ζ₃)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether Q(∛d, ζ₃) can have 3-class group of type (9, 3)
    Classify {
        d: u64,
        /// Exact 3-part of the class number of Q(∛d)
        #[arg(long)]
        h3: Option<u64>,
        /// Unit index, 1 or 3
        #[arg(long)]
        u: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Split d by prime residues modulo 9
    Decompose { d: u64 },
    /// Ramified primes, t, q* and the rank of the ambiguous class group
    Ramify {
        d: u64,
        #[arg(long)]
        json: bool,
    },
    /// Genus number and the cubic fields M(p) generating the genus field
    Genus {
        d: u64,
        /// Assume 9 exactly divides the class number of Q(∛d)
        #[arg(long)]
        h9: bool,
    },
    /// Cubic residue symbol (a/p)₃ for a prime p ≡ 1 (mod 3)
    Symbol {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        p: u64,
    },
    /// Re-derive the tabulated (9, 3) fields
    Table {
        /// JSON Lines fixture file (defaults to the bundled table)
        #[arg(long, conflicts_with = "cas")]
        fixtures: Option<PathBuf>,
        /// Recompute with an external program, e.g. "gp -q"
        #[arg(long)]
        cas: Option<String>,
        /// Seconds allowed per CAS call
        #[arg(long, default_value_t = 600)]
        timeout: u64,
    },
    /// Run the necessary-form filter over all cube-free 2 ≤ d ≤ max
    Scan {
        #[arg(long)]
        max: u64,
        #[arg(long)]
        json: bool,
        /// Append every verdict to this JSON Lines file
        #[arg(long)]
        log: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } | Error::Parse { .. } | Error::Invariant { .. } | Error::Contradiction(_) => {
                Failure::Data(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn cube_notice(n: u64) -> Result<u64, Failure> {
    let norm = radicand::normalize(n)?;
    if norm.was_stripped() {
        eprintln!("note: {n} = {}³·{}; using the cube-free radicand {}", norm.cube_factor, norm.d, norm.d);
    }
    Ok(norm.d)
}

fn print_verdict(v: &Verdict) {
    println!("d = {} (field radicand {}): {}", v.input, v.d, v.status);
    println!("form: {:?}", v.form);
    println!("t = {}, q* = {}, σ-rank = {}", v.t, v.q_star, v.sigma_rank.map_or("unknown".into(), |s| s.to_string()));
    if let Some(s) = v.cubic_symbol_3 {
        println!("(3/p)₃ = {s}");
    }
    for r in &v.reasons {
        println!("reason: {r}");
    }
    if let Some(shape) = &v.certified_shape {
        println!("C_k,3 ≅ {shape}");
    } else if let Some(shape) = &v.predicted_shape {
        println!("predicted C_k,3: {shape}");
    }
    for line in &v.trace {
        println!("  {line}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { d, h3, u, json: as_json } => {
            cube_notice(d)?;
            let v = classifier::classify(d, h3, u)?;
            if as_json {
                println!("{}", json(&v));
            } else {
                print_verdict(&v);
            }
        }
        Command::Decompose { d } => {
            let d = cube_notice(d)?;
            println!("{}", radicand::gerth_decompose(d)?);
        }
        Command::Ramify { d, json: as_json } => {
            let d = cube_notice(d)?;
            let r = ramification::report(d)?;
            if as_json {
                println!("{}", json(&r));
                return Ok(());
            }
            let gamma: Vec<String> = r.gamma_ramified.iter().map(u64::to_string).collect();
            let k0: Vec<String> = r.k0_ramified.iter().map(ToString::to_string).collect();
            println!("d = {d}");
            println!("ramified in Q(∛d): {{{}}}", gamma.join(", "));
            println!("ramified primes of Q(ζ₃): {}", k0.join(", "));
            println!("t = {}, q* = {}", r.t, r.q_star);
            match r.sigma_rank {
                Some(s) => println!("σ-rank = {s}"),
                None => println!("σ-rank unknown (q* undetermined)"),
            }
            for n in &r.notes {
                println!("  {n}");
            }
        }
        Command::Genus { d, h9 } => {
            let d = cube_notice(d)?;
            let g = genus::genus_field_description(d, h9)?;
            println!("d = {d}: r = {}, genus number 3^{} = {}", g.r, g.r, g.genus_number);
            for (p, poly) in &g.m_fields {
                println!("M({p}): {poly}");
            }
            println!("Hilbert 3-class field equals genus field: {:?}", g.hilbert_equals_genus);
            for n in &g.notes {
                println!("  {n}");
            }
        }
        Command::Symbol { a, p } => {
            println!("({a}/{p})₃ = {}", eisenstein::rational_cubic_symbol(a, p)?);
        }
        Command::Table { fixtures, cas, timeout } => {
            let report = match cas {
                Some(cmd) => {
                    let mut backend = SubprocessCas::from_command_line(&cmd, Duration::from_secs(timeout))
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    let primes = data_bridge::bundled_fixtures().iter().map(|r| r.p).collect();
                    reproduce_table(TableSource::Cas { backend: &mut backend, primes })
                }
                None => {
                    let rows = match fixtures {
                        Some(path) => data_bridge::load_fixtures(path)?,
                        None => data_bridge::bundled_fixtures(),
                    };
                    reproduce_table(TableSource::Fixtures(rows))
                }
            };
            print!("{report}");
            if report.skipped.is_none() && !report.all_passed() {
                return Err(Failure::Data(format!("{} of {} rows failed", report.total() - report.passed(), report.total())));
            }
        }
        Command::Scan { max, json: as_json, log } => {
            let verdicts = classifier::scan(max)?;
            if let Some(path) = log {
                data_bridge::append_verdicts(path, &verdicts)?;
            }
            let kept: Vec<&Verdict> = verdicts.iter().filter(|v| v.is_candidate()).collect();
            if as_json {
                println!("{}", json(&kept));
            } else {
                for v in &kept {
                    let label = if v.status == Status::Certified93 { "certified" } else { "needs data" };
                    println!("{} ({label})", v.input);
                }
                println!("{} candidates among {} cube-free d ≤ {max}", kept.len(), verdicts.len());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
