use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use dnlat::checks::{self, status_word, strip_timings, CheckResult, Status};
use dnlat::cohomology::{profile, triple, ProfileRow};
use dnlat::{lattice_by_name, DnLattice, LatticeDoc, Subgroup};

/// `println!` that reports write errors instead of panicking on a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {
        writeln!(io::stdout(), $($t)*)?
    };
}

#[derive(Parser)]
#[command(name = "dnlat", version, about = "Exact verification for lattices over dihedral groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check at one n.
    Verify {
        #[arg(long, visible_alias = "theorem")]
        check: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every check for each n in a range.
    Suite {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Report elapsed_ms as 0 so output is reproducible.
        #[arg(long)]
        deterministic: bool,
    },
    /// Print Ĥ⁻¹, Ĥ⁰ and H¹ at one subgroup or at all of them.
    Cohomology {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        n: u32,
        /// `rot:d` or `dih:d:i`; all subgroups when omitted.
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide stable rationality for one n from recomputed evidence.
    Verdict {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        deterministic: bool,
    },
    /// Write a lattice as JSON.
    Export {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// List check ids and lattice names.
    List,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { check, n, format } => {
            let r = checks::run_check(&check, n)?;
            print_results(std::slice::from_ref(&r), format)?;
            Ok(exit_for(&[r]))
        }
        Command::Suite {
            n_min,
            n_max,
            format,
            deterministic,
        } => {
            if n_min > n_max {
                bail!("--n-min {n_min} is larger than --n-max {n_max}");
            }
            let mut rs = checks::run_suite(n_min, n_max)?;
            if deterministic {
                strip_timings(&mut rs);
            }
            print_results(&rs, format)?;
            Ok(exit_for(&rs))
        }
        Command::Cohomology {
            lattice,
            n,
            subgroup,
            format,
        } => {
            let l = load(&lattice, n)?;
            let rows = match subgroup {
                Some(spec) => {
                    let s = Subgroup::parse(n, &spec)?;
                    let t = triple(&l, &s)?;
                    vec![ProfileRow {
                        subgroup: s.label(),
                        order: s.order(),
                        h_minus1: t.h_minus1.to_string(),
                        h0_hat: t.h0_hat.to_string(),
                        h1: t.h1.to_string(),
                    }]
                }
                None => profile(&l)?.to_report(),
            };
            match format {
                Format::Json => out!("{}", serde_json::to_string_pretty(&rows)?),
                Format::Text => {
                    out!("{} (rank {}) over D_{n}", l.label, l.rank);
                    for r in rows {
                        out!(
                            "{:<10} |S| = {:<3} Ĥ⁻¹ = {}, Ĥ⁰ = {}, H¹ = {}",
                            r.subgroup, r.order, r.h_minus1, r.h0_hat, r.h1
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verdict {
            n,
            format,
            deterministic,
        } => {
            let mut v = checks::verdict(n)?;
            if deterministic {
                strip_timings(&mut v.evidence);
            }
            match format {
                Format::Json => out!("{}", serde_json::to_string_pretty(&v)?),
                Format::Text => write!(io::stdout(), "{}", v.render_text())?,
            }
            Ok(exit_for(&v.evidence))
        }
        Command::Export { lattice, n, out } => {
            let l = load(&lattice, n)?;
            let doc = l.to_doc();
            let text = serde_json::to_string_pretty(&doc)?;
            fs::write(&out, text + "\n").with_context(|| format!("writing {}", out.display()))?;
            let back: LatticeDoc = serde_json::from_str(&fs::read_to_string(&out)?)?;
            if DnLattice::from_doc(&back)? != l {
                bail!("re-import of {} does not round-trip", out.display());
            }
            out!("wrote {} (rank {}) to {}", l.label, l.rank, out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::List => {
            out!("checks:");
            for c in checks::CHECKS {
                out!("  {:<34} {}", c.id, c.summary);
            }
            out!("lattices:");
            for name in dnlat::LATTICE_NAMES {
                out!("  {name}");
            }
            out!("  Rab, IG, IG2, dual:<name>");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn load(name: &str, n: u32) -> Result<DnLattice> {
    lattice_by_name(name, n).with_context(|| format!("building {name} for n = {n}"))
}

fn print_results(rs: &[CheckResult], format: Format) -> Result<()> {
    match format {
        Format::Json => out!("{}", serde_json::to_string_pretty(rs)?),
        Format::Text => {
            for r in rs {
                out!(
                    "{:<7} n={:<3} {:<34} {} ({} ms)",
                    status_word(r.status),
                    r.n,
                    r.id,
                    r.detail,
                    r.elapsed_ms
                );
            }
            let fails = rs.iter().filter(|r| r.status == Status::Fail).count();
            let skipped = rs.iter().filter(|r| r.status == Status::Skipped).count();
            out!("{} checks: {} failed, {} skipped", rs.len(), fails, skipped);
        }
    }
    Ok(())
}

fn exit_for(rs: &[CheckResult]) -> ExitCode {
    if rs.iter().any(|r| r.status == Status::Fail) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
