use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use coxdeform::pipeline::{self, PipelineError, ProblemInstance, TraceFile};

#[derive(Parser)]
#[command(
    name = "coxdeform",
    version,
    about = "Sharpen reflection generating sets of Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Problem instance (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    order_cap: Option<u64>,
    #[arg(long, global = true)]
    group_cap: Option<usize>,
    /// Lexicographic edge order; the only mode currently implemented.
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    deterministic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Sharpen S, routing every edge through Theta- or Delta-edge deformations.
    Sharpen,
    /// Sharpen S with Theta-edge deformations only.
    SharpenNoH3,
    /// Classify every edge of the diagram of S.
    Analyze,
    /// Enumerate W and compare sharpness verdicts by brute force.
    Oracle,
    /// Replay a trace and re-verify every step.
    Verify { trace: PathBuf },
}

fn instance(cli: &Cli) -> Result<ProblemInstance, PipelineError> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| PipelineError::Io("--input is required".into()))?;
    let mut inst = pipeline::load(path)?;
    if let Some(c) = cli.order_cap {
        inst.caps.order_cap = c;
    }
    if let Some(c) = cli.group_cap {
        inst.caps.group_cap = c;
    }
    Ok(inst)
}

fn emit<T: Serialize>(cli: &Cli, value: &T) -> Result<(), PipelineError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| PipelineError::Io(e.to_string()))?;
    match &cli.output {
        Some(p) => std::fs::write(p, text + "\n")
            .map_err(|e| PipelineError::Io(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), PipelineError> {
    match &cli.command {
        Command::Sharpen => emit(cli, &pipeline::sharpen(&instance(cli)?)?),
        Command::SharpenNoH3 => emit(cli, &pipeline::sharpen_no_h3(&instance(cli)?)?),
        Command::Analyze => emit(cli, &pipeline::analyze(&instance(cli)?)?),
        Command::Oracle => emit(cli, &pipeline::oracle(&instance(cli)?)?),
        Command::Verify { trace } => {
            let text = std::fs::read_to_string(trace)
                .map_err(|e| PipelineError::Io(format!("{}: {e}", trace.display())))?;
            let mut t: TraceFile =
                serde_json::from_str(&text).map_err(|e| PipelineError::Parse(e.to_string()))?;
            if let Some(c) = cli.order_cap {
                t.options.order_cap = c;
            }
            if let Some(c) = cli.group_cap {
                t.options.group_cap = c;
            }
            emit(cli, &pipeline::replay(&t)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
