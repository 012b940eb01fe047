use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use berezin::config::{OutputFormat, RunConfig, RunMode, SuiteSelection};
use berezin::report::{emit_report, to_json, write_csv, ReportMeta};
use berezin::suite::{exit_code, run, SuiteReport};
use berezin::Error;

#[derive(Parser)]
#[command(name = "berezin", version, about = "Certify Berezin-number inequalities on sampled kernel spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the selected suites and report violations.
    Certify(RunArgs),
    /// Run the selected suites and report the tightest instance of each.
    Tighten(RunArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct RunArgs {
    /// Run configuration (JSON). Without it every suite runs on the default spaces.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Directory for the report file; the report goes to stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Master seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Suite id; repeat to select several. Overrides the config's list.
    #[arg(long = "suite")]
    suites: Vec<String>,
}

fn build_config(args: &RunArgs, mode: RunMode) -> Result<RunConfig, Error> {
    let mut c = match &args.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::new(&["all"]),
    };
    c.mode = mode;
    if let Some(s) = args.seed {
        c.master_seed = s;
    }
    if let Some(t) = args.trials {
        c.trials = t;
    }
    if !args.suites.is_empty() {
        c.suites = args.suites.iter().cloned().map(SuiteSelection::Id).collect();
    }
    if let Some(f) = args.format {
        c.output.format = match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        };
    }
    if let Some(dir) = &args.out {
        c.output.dir = Some(dir.clone());
    }
    if c.output.format == OutputFormat::Csv {
        c.keep_certificates = true;
    }
    c.resolve()?;
    Ok(c)
}

fn print_summary(reports: &[SuiteReport]) {
    let mut err = std::io::stderr().lock();
    for r in reports {
        let status = if r.passed() { "ok  " } else { "FAIL" };
        let _ = write!(
            err,
            "{status} {:<24} {:<44} trials={} violations={} errors={}",
            r.suite_id.as_str(),
            r.space,
            r.trials,
            r.violations.len(),
            r.errors.len()
        );
        if let Some(t) = &r.tighten {
            let _ = write!(err, " minRelGap={:.3e} (trial {}, seed {})", t.min_rel_gap, t.trial, t.seed);
        }
        let _ = writeln!(err);
    }
}

fn execute(config: &RunConfig, mode: RunMode) -> Result<i32, Error> {
    let reports = run(config)?;
    print_summary(&reports);
    let meta = ReportMeta::new(config, &reports);
    let format = config.output.format;
    match &config.output.dir {
        Some(dir) => {
            let name = match mode {
                RunMode::Certify => "certify",
                RunMode::Tighten => "tighten",
            };
            let path = dir.join(format!("{name}.{}", format.extension()));
            emit_report(&meta, &reports, format, &path)?;
            eprintln!("report written to {}", path.display());
        }
        None => match format {
            OutputFormat::Json => println!("{}", to_json(&meta, &reports)?),
            OutputFormat::Csv => write_csv(std::io::stdout().lock(), &reports)?,
        },
    }
    Ok(exit_code(&reports))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, mode) = match &cli.command {
        Command::Certify(a) => (a, RunMode::Certify),
        Command::Tighten(a) => (a, RunMode::Tighten),
    };
    let config = match build_config(args, mode) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match execute(&config, mode) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
