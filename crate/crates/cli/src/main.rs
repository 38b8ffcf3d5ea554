use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qgroup::cli::{cmd_frobenius_check, cmd_linkage, cmd_triple_verify, CliError, OutputFormat, Report, RunConfig};

#[derive(Parser)]
#[command(name = "qgroup", version, about = "Exact checks for quantum groups at roots of unity and finite Hopf triples")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct Common {
    /// key = value file applied before the flags below
    #[arg(long)]
    config: Option<PathBuf>,
    /// Cartan type: A1, A2, B2 or G2
    #[arg(long = "type")]
    cartan_type: Option<String>,
    #[arg(long)]
    ell: Option<u32>,
    /// a..b, a..b,c..d or box
    #[arg(long)]
    window: Option<String>,
    /// predict or verify
    #[arg(long)]
    suite: Option<String>,
    /// json or text
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// add per-check wall-clock times to the report
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Block decomposition of a window of weights
    Linkage(Common),
    /// Relations, Frobenius round trips and Hecke structures on A1 modules
    FrobeniusCheck {
        #[command(flatten)]
        common: Common,
        /// include a module with a damaged matrix entry
        #[arg(long)]
        corrupt: bool,
    },
    /// Conditions, equivalence, blocks and twisting for a group and a normal subgroup
    TripleVerify {
        #[command(flatten)]
        common: Common,
        /// group table file
        group: PathBuf,
    },
}

fn build_config(c: &Common) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &c.config {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))?;
        cfg.apply_kv(&text)?;
    }
    let flags = [
        ("type", c.cartan_type.clone()),
        ("ell", c.ell.map(|v| v.to_string())),
        ("window", c.window.clone()),
        ("suite", c.suite.clone()),
        ("format", c.format.clone()),
        ("seed", c.seed.map(|v| v.to_string())),
    ];
    for (k, v) in flags {
        if let Some(v) = v {
            cfg.set(k, &v)?;
        }
    }
    if let Some(out) = &c.out {
        cfg.out = Some(out.clone());
    }
    if c.timing {
        cfg.timing = true;
    }
    Ok(cfg)
}

fn emit(cfg: &RunConfig, report: &Report) -> Result<(), CliError> {
    let mut body = match cfg.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Text => report.to_text(),
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cfg.out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e))),
        None => {
            print!("{}", body);
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (cfg, report) = match cli.command {
        Command::Linkage(c) => {
            let cfg = build_config(&c)?;
            let r = cmd_linkage(&cfg)?;
            (cfg, r)
        }
        Command::FrobeniusCheck { common, corrupt } => {
            let mut cfg = build_config(&common)?;
            cfg.corrupt |= corrupt;
            let r = cmd_frobenius_check(&cfg)?;
            (cfg, r)
        }
        Command::TripleVerify { common, group } => {
            let mut cfg = build_config(&common)?;
            let text = std::fs::read_to_string(&group).map_err(|e| CliError::Io(format!("{}: {}", group.display(), e)))?;
            cfg.group_file = Some(group);
            let r = cmd_triple_verify(&cfg, &text)?;
            (cfg, r)
        }
    };
    emit(&cfg, &report)?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("qgroup: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
