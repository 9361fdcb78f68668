use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pathdepth::campaign::{run_campaign, CampaignConfig, Check, Mode, Sampling};
use pathdepth::oracle::{path_power_depth, DEFAULT_MAX_BASIS, DEFAULT_MAX_DEGREES};
use pathdepth::table::DepthTable;
use pathdepth::witness::{first_power_witness, witness_report};
use pathdepth::{
    depth_oracle, path_ideal, Backend, DeltaProfile, Monomial, MonomialIdeal, OracleOptions,
    WeightVector,
};

#[derive(Parser)]
#[command(
    name = "pathdepth",
    version,
    about = "Depth of powers of edge ideals of weighted paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BackendArg {
    Exact,
    Modular,
    #[value(name = "cross-check")]
    CrossCheck,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Modular => Backend::Modular,
            BackendArg::CrossCheck => Backend::CrossCheck,
        }
    }
}

#[derive(Args, Clone)]
struct Budgets {
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREES)]
    budget_degrees: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_BASIS)]
    budget_basis: usize,
    #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
    backend: BackendArg,
}

impl Budgets {
    fn options(&self) -> OracleOptions {
        OracleOptions {
            backend: self.backend.into(),
            max_degrees: self.budget_degrees,
            max_basis: self.budget_basis,
            parallel: true,
        }
    }
}

#[derive(Args, Clone)]
struct CampaignArgs {
    /// Run on these weight vectors only (repeatable), instead of a stream.
    #[arg(long)]
    weights: Vec<String>,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    w_max: u32,
    /// Largest power; defaults to |Δ| + 2 per weight vector.
    #[arg(long)]
    t_max: Option<u32>,
    #[arg(long, default_value_t = 100, conflicts_with = "exhaustive")]
    samples: usize,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, env = "PATHDEPTH_SEED", default_value_t = 0)]
    seed: u64,
    /// Comma-separated subset of oracle,first-power,colon,witness.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Sample only weight vectors with a repeated adjacent weight.
    #[arg(long)]
    nonempty_delta: bool,
    #[arg(long, default_value_t = 9)]
    oracle_var_cap: usize,
    /// Record per-instance wall time; reports are then no longer reproducible.
    #[arg(long)]
    timings: bool,
    /// Directory for records.jsonl, summary.csv and report.json.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[command(flatten)]
    budgets: Budgets,
    #[arg(long, hide = true)]
    corrupt_formula: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Depth table with the Δ profile of a weight vector.
    Table {
        #[arg(long)]
        weights: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Formula depth of S/I^t.
    Formula {
        #[arg(long)]
        weights: String,
        /// Single power; all of 1..=t-max otherwise.
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        t_max: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exact depth through Koszul homology.
    Oracle {
        /// Weighted path ideal to power t.
        #[arg(long, required_unless_present = "ideal")]
        weights: Option<String>,
        #[arg(long, default_value_t = 1)]
        t: u32,
        /// Arbitrary ideal given by generators, e.g. "x1*x2,x2^3"; needs --n-vars.
        #[arg(long, conflicts_with = "weights", requires = "n_vars")]
        ideal: Option<String>,
        #[arg(long)]
        n_vars: Option<usize>,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// Witness ρ_t and the closed-form colon (I^t : ρ_t), for 2 <= t <= |Δ|+1.
    Witness {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        t: u32,
    },
    /// Witness f with depth(S/(I : f)) = k + 1 at the first power.
    FirstPower {
        #[arg(long)]
        weights: String,
    },
    /// Closed-form colon identities against brute force.
    ColonCheck(CampaignArgs),
    /// Full verification campaign.
    Verify(CampaignArgs),
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Usage(anyhow::Error),
    Mismatch,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn parse_weights(s: &str) -> Result<WeightVector> {
    s.parse()
        .with_context(|| format!("invalid --weights `{s}`"))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cmd_table(weights: &str, format: Format) -> Result<()> {
    let table = DepthTable::new(&parse_weights(weights)?)?;
    match format {
        Format::Text => println!("{table}"),
        Format::Json => print_json(&table)?,
        Format::Csv => {
            println!("t,depth");
            for (t, d) in table.depths.iter().enumerate() {
                println!("{},{d}", t + 1);
            }
        }
    }
    Ok(())
}

fn cmd_formula(weights: &str, t: Option<u32>, t_max: Option<u32>, format: Format) -> Result<()> {
    let w = parse_weights(weights)?;
    let profile = DeltaProfile::of_weights(&w);
    let ts: Vec<u32> = match t {
        Some(t) => vec![t],
        None => (1..=t_max.unwrap_or(profile.delta.len() as u32 + 1)).collect(),
    };
    let rows = ts
        .iter()
        .map(|&t| Ok((t, pathdepth::depth_formula(&w, t)?)))
        .collect::<Result<Vec<_>>>()?;
    match format {
        Format::Json => print_json(&serde_json::json!({
            "weights": w.as_slice(),
            "k": profile.counts.k,
            "depths": rows.iter().map(|(t, d)| serde_json::json!({"t": t, "depth": d})).collect::<Vec<_>>(),
        }))?,
        Format::Text | Format::Csv => {
            println!("t,depth");
            for (t, d) in rows {
                println!("{t},{d}");
            }
        }
    }
    Ok(())
}

fn parse_ideal(spec: &str, n_vars: usize) -> Result<MonomialIdeal> {
    let gens = spec
        .split(',')
        .map(|g| Monomial::parse(g.trim(), n_vars))
        .collect::<pathdepth::Result<Vec<_>>>()?;
    Ok(MonomialIdeal::minimalize(n_vars, gens)?)
}

fn cmd_oracle(
    weights: Option<&str>,
    t: u32,
    ideal: Option<&str>,
    n_vars: Option<usize>,
    budgets: &Budgets,
) -> Result<()> {
    let opts = budgets.options();
    let report = match (weights, ideal, n_vars) {
        (Some(w), _, _) => path_power_depth(&parse_weights(w)?, t, &opts)?,
        (None, Some(spec), Some(n)) => depth_oracle(&parse_ideal(spec, n)?, &opts)?,
        _ => bail!("give --weights, or --ideal with --n-vars"),
    };
    print_json(&report)
}

/// Prints the report and returns its match flag.
fn cmd_witness(weights: &str, t: u32) -> Result<bool> {
    if t == 1 {
        bail!("t = 1 has its own witness: run `pathdepth first-power --weights {weights}`");
    }
    let report = witness_report(&parse_weights(weights)?, t)?;
    print_json(&report)?;
    Ok(report.matches)
}

fn cmd_first_power(weights: &str) -> Result<bool> {
    let w = parse_weights(weights)?;
    let (f, closed) = first_power_witness(&w)?;
    let brute = path_ideal(&w).colon(&f)?;
    print_json(&serde_json::json!({
        "weights": w.as_slice(),
        "k": DeltaProfile::of_weights(&w).counts.k,
        "f": f.to_string(),
        "predicted_colon": closed.to_string(),
        "brute_colon": brute.to_string(),
        "match": brute == closed,
    }))?;
    Ok(brute == closed)
}

fn campaign_config(mode: Mode, args: &CampaignArgs) -> Result<CampaignConfig> {
    let checks = match &args.checks {
        Some(names) => names
            .iter()
            .map(|c| c.parse::<Check>())
            .collect::<pathdepth::Result<Vec<_>>>()?,
        None => mode.default_checks(),
    };
    let sampling = if !args.weights.is_empty() {
        let weights = args
            .weights
            .iter()
            .map(|s| Ok(parse_weights(s)?.as_slice().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Sampling::Given { weights }
    } else if args.exhaustive {
        Sampling::Exhaustive
    } else {
        Sampling::Random {
            samples: args.samples,
        }
    };
    let cfg = CampaignConfig {
        mode,
        n_min: args.n_min,
        n_max: args.n_max,
        w_max: args.w_max,
        t_max: args.t_max,
        sampling,
        seed: args.seed,
        checks,
        nonempty_delta: args.nonempty_delta,
        max_degrees: args.budgets.budget_degrees,
        max_basis: args.budgets.budget_basis,
        backend: args.budgets.backend.into(),
        oracle_var_cap: args.oracle_var_cap,
        timings: args.timings,
        corrupt_formula: args.corrupt_formula,
        ..CampaignConfig::default()
    };
    cfg.validate()?;
    Ok(cfg)
}

fn cmd_campaign(mode: Mode, args: &CampaignArgs) -> Result<(), Failure> {
    let cfg = campaign_config(mode, args)?;
    let report = run_campaign(&cfg).map_err(anyhow::Error::from)?;
    if let Some(dir) = &args.out {
        report
            .write_to(dir)
            .with_context(|| format!("writing reports to {}", dir.display()))?;
    }
    match args.format {
        Format::Json => print_json(&report)?,
        Format::Csv => print!("{}", report.summary_csv().map_err(anyhow::Error::from)?),
        Format::Text => {
            let s = &report.summary;
            println!(
                "{} weight vectors, {} instances: {} match, {} mismatch, {} skipped, {} unverified",
                s.weight_vectors, s.instances, s.matches, s.mismatches, s.skips, s.unverified
            );
            for r in report.mismatches() {
                let failed: Vec<&str> = r
                    .checks
                    .iter()
                    .filter(|(_, ok)| !**ok)
                    .map(|(k, _)| k.as_str())
                    .collect();
                println!(
                    "MISMATCH weights={:?} t={} seed={} formula={} oracle={:?} failed={:?} {}",
                    r.weights,
                    r.t,
                    r.seed,
                    r.formula,
                    r.oracle,
                    failed,
                    r.reason.as_deref().unwrap_or("")
                );
            }
        }
    }
    matched(report.summary.passed)
}

fn matched(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Table { weights, format } => cmd_table(weights, *format)?,
        Command::Formula {
            weights,
            t,
            t_max,
            format,
        } => cmd_formula(weights, *t, *t_max, *format)?,
        Command::Oracle {
            weights,
            t,
            ideal,
            n_vars,
            budgets,
        } => cmd_oracle(weights.as_deref(), *t, ideal.as_deref(), *n_vars, budgets)?,
        Command::Witness { weights, t } => matched(cmd_witness(weights, *t)?)?,
        Command::FirstPower { weights } => matched(cmd_first_power(weights)?)?,
        Command::ColonCheck(args) => cmd_campaign(Mode::ColonCheck, args)?,
        Command::Verify(args) => cmd_campaign(Mode::Verify, args)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
