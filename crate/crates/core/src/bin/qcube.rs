use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qcube::harness::{self, Manifest, RunOutput};

/// Experiments on low-degree qubit observables and their Boolean lifts.
#[derive(Parser)]
#[command(name = "qcube", version)]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Experiment manifest (`key = value` lines).
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,

    /// Base seed; overrides the manifest.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Extra `key=value` manifest entry; may be repeated.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Observed Bohnenblust–Hille ratios over random instances.
    BhSweep,
    /// Learning trials against simulated oracles.
    Learn {
        /// Print the theoretical threshold and sample count, then exit.
        #[arg(long)]
        paper_n: bool,
        /// Observable file in the Pauli text format.
        #[arg(long)]
        observable: Option<PathBuf>,
    },
    /// Check tr[A ρ(ε)] = f_A(ε) point by point.
    LiftVerify {
        #[arg(long)]
        observable: Option<PathBuf>,
        /// Perturb the lift first; the run must then fail.
        #[arg(long)]
        corrupt: bool,
    },
    /// Boolean radius searches or the radii of one observable.
    Bohr {
        #[arg(long)]
        observable: Option<PathBuf>,
    },
    /// Emit a random observable in the Pauli text format.
    Gen,
}

fn write_output(path: Option<&Path>, text: &str) -> qcube::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn finish(out: RunOutput, path: Option<&Path>) -> qcube::Result<bool> {
    write_output(path, &out.csv)?;
    if let Some(summary) = &out.summary {
        match path {
            Some(p) => std::fs::write(p.with_extension("json"), summary)?,
            None => eprint!("{summary}"),
        }
    }
    for line in &out.messages {
        eprintln!("{line}");
    }
    Ok(out.passed)
}

fn run(cli: Cli) -> qcube::Result<bool> {
    let mut manifest = match &cli.common.manifest {
        Some(path) => Manifest::from_file(path)?,
        None => Manifest::default(),
    };
    for assignment in &cli.common.overrides {
        manifest.apply_override(assignment)?;
    }
    if let Some(seed) = cli.common.seed {
        manifest.set("seed", &seed.to_string());
    }
    let out = cli.common.out.as_deref();
    let set_observable = |m: &mut Manifest, path: &Option<PathBuf>| {
        if let Some(p) = path {
            m.set("observable", &p.to_string_lossy());
        }
    };
    match &cli.command {
        Command::BhSweep => finish(harness::run_bh_sweep(&manifest)?, out),
        Command::Learn { paper_n, observable } => {
            set_observable(&mut manifest, observable);
            if *paper_n {
                write_output(out, &harness::paper_n(&manifest)?)?;
                Ok(true)
            } else {
                finish(harness::run_learn(&manifest)?, out)
            }
        }
        Command::LiftVerify { observable, corrupt } => {
            set_observable(&mut manifest, observable);
            if *corrupt {
                manifest.set("corrupt", "true");
            }
            finish(harness::run_lift_verify(&manifest)?, out)
        }
        Command::Bohr { observable } => {
            set_observable(&mut manifest, observable);
            finish(harness::run_bohr(&manifest)?, out)
        }
        Command::Gen => {
            write_output(out, &harness::run_gen(&manifest)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
