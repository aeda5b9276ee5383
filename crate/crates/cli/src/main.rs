use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use regbound_core::lpp::{egh_corollary_bound, LppIdeal};
use regbound_core::macaulay::{cprime_from_c, expand, green_bound};
use regbound_core::parse::{default_prime, parse_ideal};
use regbound_core::{analyze, run_fuzz, AnalyzeOptions, DimFilter, Experiment, FuzzConfig, Ideal, OracleBudget};

/// Castelnuovo–Mumford regularity bounds for homogeneous ideals over F_p.
#[derive(Parser)]
#[command(name = "regbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants and regularity bounds for an ideal file.
    Analyze(AnalyzeArgs),
    /// Check every bound on random ideals against the exact oracle.
    Fuzz(FuzzArgs),
    /// Build a lex-plus-powers ideal and report its regularity.
    Lpp(LppArgs),
    /// Macaulay expansion of a and the Green estimate it yields.
    Macaulay(MacaulayArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Compute the exact regularity and check each bound against it.
    #[arg(long)]
    exact: bool,
    /// Print the Betti table (implies --exact).
    #[arg(long)]
    betti: bool,
    /// Seed for the random linear system of parameters.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
    /// Largest Koszul strand dimension the exact oracle may build.
    #[arg(long, default_value_t = OracleBudget::default().max_strand_dim)]
    max_strand_dim: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExperimentArg {
    WeakEgh,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    #[arg(long = "D-max", default_value_t = 3)]
    d_max: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep only ideals with dim S/I = K.
    #[arg(long, value_name = "K", conflicts_with_all = ["dim_max", "dim_min"])]
    dim: Option<usize>,
    /// Keep only ideals with dim S/I <= K.
    #[arg(long, value_name = "K", conflicts_with = "dim_min")]
    dim_max: Option<usize>,
    /// Keep only ideals with dim S/I >= K.
    #[arg(long, value_name = "K")]
    dim_min: Option<usize>,
    /// Upper bound on the number of generators (default n+1).
    #[arg(long)]
    gens_max: Option<usize>,
    /// Upper bound on the number of terms per generator; 0 draws dense forms.
    #[arg(long, default_value_t = 4)]
    max_terms: usize,
    #[arg(long, value_enum)]
    experiment: Option<ExperimentArg>,
    #[arg(long, default_value_t = OracleBudget::default().max_strand_dim)]
    max_strand_dim: usize,
    /// Directory receiving one reproducer file per failing trial.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LppArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "D")]
    degree: u32,
    /// Target value of the Hilbert function in degree D.
    #[arg(long)]
    c: u64,
    /// Pure-power degrees d1,..,dh (default: n copies of D).
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<u32>>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MacaulayArgs {
    #[arg(long)]
    a: u64,
    #[arg(long = "D")]
    degree: u32,
    /// Number of general linear sections for the Green estimate.
    #[arg(long, default_value_t = 1)]
    k: u64,
    #[arg(long)]
    json: bool,
}

/// Exit status: 0 on success, 1 when a bound or check fails, 2 on invalid input.
fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Fuzz(args) => cmd_fuzz(args),
        Command::Lpp(args) => cmd_lpp(args),
        Command::Macaulay(args) => cmd_macaulay(args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json(value: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<bool> {
    let text = std::fs::read_to_string(&args.file).with_context(|| format!("cannot read {}", args.file.display()))?;
    let (ring, gens) = parse_ideal(&text).with_context(|| format!("in {}", args.file.display()))?;
    let ideal = Ideal::new(ring, gens)?;
    let options = AnalyzeOptions {
        seed: args.seed,
        exact: args.exact || args.betti,
        betti: args.betti,
        budget: OracleBudget {
            max_strand_dim: args.max_strand_dim,
        },
        ..AnalyzeOptions::default()
    };
    let report = match analyze(&ideal, &options) {
        Err(err @ regbound_core::Error::GenericityFailure { .. }) => {
            bail!("{err}; retry with a different --seed or a larger prime via REGBOUND_PRIME")
        }
        other => other?,
    };
    if args.json {
        print_json(&report.to_json())?;
    } else {
        print!("{}", report.render_text());
    }
    Ok(report.all_hold())
}

fn cmd_fuzz(args: FuzzArgs) -> Result<bool> {
    let dim = match (args.dim, args.dim_max, args.dim_min) {
        (Some(k), _, _) => Some(DimFilter::Exactly(k)),
        (_, Some(k), _) => Some(DimFilter::AtMost(k)),
        (_, _, Some(k)) => Some(DimFilter::AtLeast(k)),
        _ => None,
    };
    let config = FuzzConfig {
        trials: args.trials,
        seed: args.seed,
        prime: default_prime()?,
        n_min: args.n_min.min(args.n_max),
        n_max: args.n_max,
        degree_max: args.d_max,
        gens_max: args.gens_max,
        dim,
        budget: OracleBudget {
            max_strand_dim: args.max_strand_dim,
        },
        max_terms: (args.max_terms > 0).then_some(args.max_terms),
        experiment: args.experiment.map(|ExperimentArg::WeakEgh| Experiment::WeakEgh),
        reproducer_dir: args.out_dir,
        ..FuzzConfig::default()
    };
    let summary = run_fuzz(&config)?;
    if args.json {
        print_json(&summary.to_json())?;
    } else {
        println!(
            "{} trials: {} passed, {} failed, {} skipped",
            summary.records.len(),
            summary.passed(),
            summary.failed(),
            summary.skipped()
        );
        for (name, (evaluated, held)) in summary.check_tallies() {
            println!("  {name:<24}{held}/{evaluated}");
        }
        for record in summary.records.iter().filter(|r| !r.failures.is_empty()) {
            println!("trial {}: {}", record.index, record.failures.join("; "));
        }
        for path in &summary.reproducers {
            println!("reproducer: {}", path.display());
        }
    }
    Ok(summary.failed() == 0)
}

fn cmd_lpp(args: LppArgs) -> Result<bool> {
    let degrees = args.degrees.unwrap_or_else(|| vec![args.degree; args.n]);
    let lpp = LppIdeal::construct(args.n, args.c, args.degree, &degrees)?;
    let prime = default_prime()?;
    let generators: Vec<String> = lpp.monomial_ideal().generators().iter().map(ToString::to_string).collect();
    let u = lpp.smallest_monomial().map(ToString::to_string);
    let pivot = lpp.pivot_monomial().map(ToString::to_string);
    let lead = lpp.leading_index();
    let closed = lpp.closed_form_regularity();
    let reg = lpp.regularity(prime);
    // the conditional bound is stated for LPP(I; D), where every power has degree D
    let uniform = degrees.len() == args.n && degrees.iter().all(|&d| d == args.degree);
    let egh = match lead {
        Some((a, t_a)) if uniform => Some(egh_corollary_bound(args.n, args.degree, a, t_a)?),
        _ => None,
    };
    if args.json {
        let s = |x: Option<String>| x.map_or(Value::Null, Value::String);
        print_json(&json!({
            "n": args.n.to_string(),
            "D": args.degree.to_string(),
            "c": args.c.to_string(),
            "degrees": degrees.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "generators": generators,
            "u": s(u),
            "pivot": s(pivot),
            "a": s(lead.map(|(a, _)| a.to_string())),
            "t_a": s(lead.map(|(_, t)| t.to_string())),
            "closed_form_regularity": s(closed.map(|r| r.to_string())),
            "regularity": reg.to_string(),
            "egh_bound": s(egh.map(|b| b.to_string())),
        }))?;
    } else {
        println!("generators: {}", generators.join(", "));
        match &u {
            Some(u) => println!("u = {u}"),
            None => println!("u = none (empty lex segment)"),
        }
        if let (Some(pivot), Some((a, t_a))) = (&pivot, lead) {
            println!("smallest outside the powers: {pivot}, a = {a}, t_a = {t_a}");
        }
        match closed {
            Some(r) => println!("reg = {r} (closed form)"),
            None => println!("reg = {reg} (Koszul oracle; closed form does not apply)"),
        }
        if let Some(b) = egh {
            println!("EGH-conditional bound: reg(S/I) <= {b}");
        }
    }
    Ok(true)
}

fn cmd_macaulay(args: MacaulayArgs) -> Result<bool> {
    if args.degree == 0 {
        bail!("--D must be positive");
    }
    let exp = expand(args.a, args.degree);
    let green = green_bound(&exp, args.k);
    let cprime = cprime_from_c(args.a, args.degree);
    if args.json {
        print_json(&json!({
            "a": args.a.to_string(),
            "D": args.degree.to_string(),
            "k": args.k.to_string(),
            "expansion": exp.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "green_bound": green.to_string(),
            "cprime_from_c": cprime.to_string(),
        }))?;
    } else {
        println!("expansion {:?} = {exp}", exp.coefficients());
        println!("Green estimate after {} section(s): {green}", args.k);
        println!("c' estimate from c = a: {cprime}");
    }
    Ok(true)
}
