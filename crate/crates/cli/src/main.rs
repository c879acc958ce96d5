use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixlr_core::display::DEFAULT_SIG_FIGS;
use mixlr_core::oracle::{self, OracleConfig};
use mixlr_core::report::RenderedReport;
use mixlr_core::scenario::{self, parse_scenario, Scenario};
use mixlr_core::{parse_rational, Error, Result};

#[derive(Parser)]
#[command(
    name = "mixlr",
    version,
    about = "Exact likelihood ratios and posteriors for DNA mixture evidence"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Diagnostic-test style update from a prior and two likelihoods.
    Screening(ScreeningArgs),
    /// Hypothesis comparisons over a finite outcome space.
    Lottery { scenario: PathBuf },
    /// Two-person genotype mixture analysis.
    Mixture { scenario: PathBuf },
    /// Numbered-ball models.
    #[command(subcommand)]
    Ball(BallCommand),
    /// Run any scenario file, including expert-report scenarios.
    Report { scenario: PathBuf },
    /// Check closed forms against enumeration and sampling.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct ScreeningArgs {
    /// Scenario file; flags are used when it is omitted.
    scenario: Option<PathBuf>,
    #[arg(long, required_unless_present = "scenario")]
    prior: Option<String>,
    #[arg(long = "p-e-given-h", required_unless_present = "scenario")]
    p_e_given_h: Option<String>,
    #[arg(long = "p-e-given-not-h", required_unless_present = "scenario")]
    p_e_given_not_h: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SIG_FIGS)]
    sig_figs: usize,
}

#[derive(Subcommand)]
enum BallCommand {
    /// Single-profile match within a population.
    Single {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 10)]
        alphabet: u32,
        #[arg(long)]
        population: u64,
    },
    /// Two-contributor mixture of n-pot profiles.
    Two {
        scenario: Option<PathBuf>,
        #[arg(long, required_unless_present = "scenario")]
        n: Option<u32>,
        #[arg(long, default_value_t = 10)]
        alphabet: u32,
        #[arg(long, default_value_t = 0)]
        repeated: u32,
    },
    /// Likelihood ratio table over contributor counts.
    Table {
        scenario: Option<PathBuf>,
        /// Contributor counts, e.g. `1..10,15,20`.
        #[arg(long, required_unless_present = "scenario", allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long = "n-pots", default_value_t = 20)]
        n_pots: u32,
        /// Chance an unknown matches, e.g. `1/10`.
        #[arg(long, default_value = "1/10")]
        freq: String,
    },
}

#[derive(Args)]
struct ValidateArgs {
    /// Sampling seed; defaults to MIXLR_SEED, then a built-in value.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads for sampling.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = oracle::DEFAULT_MC_SAMPLES)]
    samples: u64,
    #[arg(long = "max-enumeration", default_value_t = oracle::DEFAULT_MAX_ENUMERATION)]
    max_enumeration: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8)> {
    let report = match &cli.command {
        Command::Screening(args) => match &args.scenario {
            Some(path) => load(path, Some("screening"))?,
            None => {
                let text = format!(
                    r#"{{"kind":"screening","prior":{},"p_e_given_h":{},"p_e_given_not_h":{},"sig_figs":{}}}"#,
                    quote(args.prior.as_deref()),
                    quote(args.p_e_given_h.as_deref()),
                    quote(args.p_e_given_not_h.as_deref()),
                    args.sig_figs
                );
                parse_scenario(&text)?
            }
        }
        .run()?,
        Command::Lottery { scenario } => load(scenario, Some("lottery"))?.run()?,
        Command::Mixture { scenario } => load(scenario, Some("genotype-mixture"))?.run()?,
        Command::Report { scenario } => load(scenario, None)?.run()?,
        Command::Ball(ball) => run_ball(ball)?,
        Command::Validate(args) => return validate(args, cli.format),
    };
    let text = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    Ok((text, 0))
}

fn quote(value: Option<&str>) -> String {
    format!("{:?}", value.unwrap_or_default())
}

fn run_ball(command: &BallCommand) -> Result<RenderedReport> {
    match command {
        BallCommand::Single {
            n,
            alphabet,
            population,
        } => scenario::ball_single_report(None, *n, *alphabet, *population, DEFAULT_SIG_FIGS),
        BallCommand::Two {
            scenario: Some(path), ..
        } => load(path, Some("ball-two"))?.run(),
        BallCommand::Two {
            scenario: None,
            n,
            alphabet,
            repeated,
        } => {
            let n = n.expect("clap requires --n without a scenario");
            scenario::ball_two_report(None, n, *alphabet, *repeated, DEFAULT_SIG_FIGS)
        }
        BallCommand::Table {
            scenario: Some(path), ..
        } => load(path, Some("ball-k"))?.run(),
        BallCommand::Table {
            scenario: None,
            k,
            n_pots,
            freq,
        } => {
            let ks = scenario::parse_k_list(k.as_deref().unwrap_or_default()).map_err(|e| flag_error("--k", e))?;
            let freq = parse_rational(freq).map_err(|e| flag_error("--freq", e))?;
            scenario::contributor_table_report(None, &ks, *n_pots, &freq, DEFAULT_SIG_FIGS)
        }
    }
}

fn flag_error(flag: &str, e: Error) -> Error {
    match e {
        Error::Validation(message) => Error::Schema {
            path: flag.into(),
            message,
        },
        other => other,
    }
}

fn load(path: &Path, expected_kind: Option<&str>) -> Result<Scenario> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Schema {
        path: path.display().to_string(),
        message: format!("cannot read scenario: {e}"),
    })?;
    let scenario = parse_scenario(&text)?;
    if let Some(expected) = expected_kind {
        let kind = kind_of(&scenario);
        if kind != expected {
            return Err(Error::Schema {
                path: "kind".into(),
                message: format!("this command expects `{expected}` scenarios, got `{kind}`"),
            });
        }
    }
    Ok(scenario)
}

fn kind_of(scenario: &Scenario) -> &'static str {
    match scenario {
        Scenario::Screening(_) => "screening",
        Scenario::Lottery(_) => "lottery",
        Scenario::GenotypeMixture(_) => "genotype-mixture",
        Scenario::BallTwo(_) => "ball-two",
        Scenario::BallK(_) => "ball-k",
        Scenario::Table1Report(_) => "table-1-report",
    }
}

fn validate(args: &ValidateArgs, format: Format) -> Result<(String, u8)> {
    let seed = match args.seed {
        Some(seed) => seed,
        None => match std::env::var("MIXLR_SEED") {
            Ok(text) => text.trim().parse().map_err(|_| Error::Schema {
                path: "MIXLR_SEED".into(),
                message: format!("`{text}` is not an unsigned 64-bit integer"),
            })?,
            Err(_) => oracle::DEFAULT_SEED,
        },
    };
    let config = OracleConfig {
        max_enumeration: args.max_enumeration,
        mc_samples: args.samples,
        seed,
        threads: args.threads,
    };
    let report = oracle::validate(&config)?;
    let text = match format {
        Format::Text => report.render(),
        Format::Json => report.to_json(),
    };
    Ok((text, if report.all_pass() { 0 } else { 1 }))
}
