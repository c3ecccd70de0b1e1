use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use deloop_cli::compute::{compute, ComputeInput};
use deloop_cli::fixtures::dump_fixtures;
use deloop_cli::{replay, verify_all, Report, VerifyOptions};
use deloop_core::io::{read_algebra, read_module};
use deloop_core::Scalar;

#[derive(Parser)]
#[command(name = "deloop", version, about = "Exact verifier for syzygies, Sigma and delooping bounds of Lambda(q)")]
struct Cli {
    /// Re-check every certificate and witness in a saved report.
    #[arg(long, global = true, value_name = "REPORT")]
    replay: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check and write a JSON report.
    VerifyAll {
        #[arg(long, default_value = "2")]
        q: Scalar,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Regression mode: drop the sign of x*y in the table.
        #[arg(long)]
        corrupt_sign: bool,
    },
    /// Evaluate an expression such as "omega^3 M(2)" or "dell_upper S".
    Compute {
        expr: String,
        #[arg(long, value_name = "FILE")]
        algebra: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        module: Option<PathBuf>,
        #[arg(long, default_value = "2")]
        q: Scalar,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the algebra and module fixtures as JSON.
    DumpFixtures {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, default_value = "2")]
        q: Scalar,
    },
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(path) = cli.replay {
        let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let report: Report = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let out = replay(&report);
        for (id, i, why) in &out.failures {
            println!("FAIL {id} evidence {i}: {why}");
        }
        println!("replayed {} pieces of evidence, {} failed", out.replayed, out.failures.len());
        return Ok(out.ok() && report.all_passed());
    }
    match cli.command {
        None => bail!("no command given; see --help"),
        Some(Command::VerifyAll { q, n_max, seed, out, corrupt_sign }) => {
            let opts = VerifyOptions { q, n_max, seed, corrupt_sign };
            if let Some(path) = &out {
                std::fs::write(path, "").with_context(|| format!("cannot write {}", path.display()))?;
            }
            let report = verify_all(&opts)?;
            print!("{}", report.render());
            if let Some(path) = &out {
                std::fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(report.all_passed())
        }
        Some(Command::Compute { expr, algebra, module, q, n_max, seed }) => {
            let algebra = algebra.map(|p| read_algebra(&p)).transpose()?;
            let module = module.map(|p| read_module(&p, algebra.as_ref())).transpose()?;
            let input = ComputeInput { algebra, module, q, n_max, seed };
            print!("{}", compute(&expr, &input)?);
            Ok(true)
        }
        Some(Command::DumpFixtures { dir, q }) => {
            for p in dump_fixtures(&q, &dir)? {
                println!("{}", p.display());
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
