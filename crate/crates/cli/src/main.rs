//! `abelrank`: exact generating series, trace values and Schur ranks from
//! the command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 the descriptor
//! is invalid, 3 the request could not be parsed.

mod render;
mod source;

use std::process::ExitCode;

use abelrank::engine::verify::{verify, Suite, VerifyOptions};
use abelrank::engine::{
    f_polynomials, ftilde_polynomials, schur_rank, schur_table, trace_values, z_series, EngineError, SeriesKind,
};
use abelrank::sheaf::{descriptor_json, serialize_descriptor};
use abelrank::symgroup::Partition;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigInt, ToPrimitive};
use serde_json::{json, Value};

use render::{coeff_strings, poly_strings, render_poly, Format};
use source::{expand_sweep, Failure, SourceArgs};

const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Parser)]
#[command(name = "abelrank", version, about = "Generic ranks of convolution powers on abelian varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numerators, pole and expansion of the rank generating series.
    Series(SeriesArgs),
    /// Generic rank of a Schur functor, or the table for all partitions of n.
    Schur(SchurArgs),
    /// Trace values c*, c•, c for a cycle type.
    Trace(TraceArgs),
    /// Run consistency suites on one or many descriptors.
    Verify(VerifyArgs),
    /// Print a descriptor as JSON (after validation).
    Preset(PresetArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Conv,
    Sym,
}

#[derive(Args)]
struct SeriesArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value = "conv")]
    kind: Kind,
    /// Highest power of t in the expansion.
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct SchurArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Partition as comma-separated decreasing parts, e.g. 2,1.
    #[arg(long, required_unless_present = "all")]
    alpha: Option<Partition>,
    /// Table over every partition of n (n taken from --n or --alpha).
    #[arg(long)]
    all: bool,
    #[arg(long, requires = "all")]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Cycle type as comma-separated decreasing parts, e.g. 2,1.
    #[arg(long)]
    sigma: Partition,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Comma-separated suite names; all suites by default.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<Suite>,
    /// Parameter ranges for the chosen preset, e.g. g=2..6,m=1..3.
    #[arg(long, requires = "preset", conflicts_with = "random")]
    sweep: Option<String>,
    /// Number of seeded random descriptors instead of a single source.
    #[arg(long, conflicts_with_all = ["preset", "input"])]
    random: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "random")]
    seed: u64,
    /// Largest dimension g for random descriptors.
    #[arg(long, default_value_t = 4, requires = "random")]
    max_g: usize,
    /// Largest n for the Schur-sum identity.
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Number of coefficients compared between routes.
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct PresetArgs {
    #[command(flatten)]
    source: SourceArgs,
}

fn max_order() -> Result<usize, Failure> {
    match std::env::var("ABELRANK_MAX_ORDER") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::usage(format!("ABELRANK_MAX_ORDER must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn check_order(order: usize) -> Result<(), Failure> {
    let cap = max_order()?;
    if order > cap {
        return Err(Failure::usage(format!("--order {order} exceeds the maximum {cap} (set ABELRANK_MAX_ORDER to raise it)")));
    }
    Ok(())
}

fn engine_failure(e: EngineError) -> Failure {
    match e {
        EngineError::NonIntegerChi(_) => Failure::validation(e.to_string()),
        EngineError::EmptyPartition => Failure::usage(e.to_string()),
        _ => Failure::internal(e.to_string()),
    }
}

fn parts_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn cmd_series(args: &SeriesArgs) -> Result<String, Failure> {
    check_order(args.order)?;
    let d = args.source.descriptor()?;
    let (kind, names, numerators) = match args.kind {
        Kind::Conv => (SeriesKind::Conv, ["f_star", "f_bullet", "f"], f_polynomials(&d)),
        Kind::Sym => (SeriesKind::Sym, ["f_tilde_star", "f_tilde_bullet", "f_tilde"], ftilde_polynomials(&d)),
    };
    let z = z_series(&d, kind).map_err(engine_failure)?;
    let coefficients = z.expand(args.order);
    let polys = [&numerators.star, &numerators.bullet, &numerators.total];
    Ok(match args.format {
        Format::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("descriptor".into(), descriptor_json(&d));
            doc.insert("kind".into(), json!(if kind == SeriesKind::Conv { "conv" } else { "sym" }));
            for (name, p) in names.iter().zip(polys) {
                doc.insert((*name).into(), json!(poly_strings(p)));
            }
            doc.insert("pole".into(), json!({"base": z.pole_base().to_string(), "order": z.pole_order()}));
            doc.insert("coefficients".into(), json!(coeff_strings(&coefficients)));
            render::json_doc(&Value::Object(doc))
        }
        fmt => {
            let mut out = String::new();
            for (name, p) in names.iter().zip(polys) {
                out += &format!("{name} = {}\n", render_poly(p, fmt));
            }
            out += &format!("pole = (1 - {}*t)^{}\n", z.pole_base(), z.pole_order());
            out += &format!("coefficients = {}\n", coeff_strings(&coefficients).join(", "));
            out
        }
    })
}

fn cmd_schur(args: &SchurArgs) -> Result<String, Failure> {
    let d = args.source.descriptor()?;
    if !args.all {
        let alpha = args.alpha.as_ref().expect("clap requires --alpha without --all");
        let rank = schur_rank(&d, alpha).map_err(engine_failure)?;
        return Ok(match args.format {
            Format::Json => render::json_doc(&json!({
                "descriptor": descriptor_json(&d),
                "alpha": parts_json(alpha),
                "rank": rank.to_string(),
            })),
            _ => format!("r~{alpha} = {rank}\n"),
        });
    }
    let n = match (args.n, &args.alpha) {
        (Some(n), _) => n,
        (None, Some(alpha)) => alpha.degree(),
        (None, None) => return Err(Failure::usage("--all needs --n or --alpha")),
    };
    let table = schur_table(&d, n).map_err(engine_failure)?;
    let sum: BigInt = table.iter().map(|row| BigInt::from(row.dim.clone()) * &row.rank).sum();
    Ok(match args.format {
        Format::Json => {
            let rows: Vec<Value> = table
                .iter()
                .map(|row| {
                    let dim = row.dim.to_u64().map_or_else(|| json!(row.dim.to_string()), |v| json!(v));
                    json!({"alpha": parts_json(&row.alpha), "dim": dim, "rank": row.rank.to_string()})
                })
                .collect();
            render::json_doc(&json!({
                "descriptor": descriptor_json(&d),
                "n": n,
                "schur_table": rows,
                "schur_sum": sum.to_string(),
            }))
        }
        _ => {
            let mut out = String::new();
            for row in &table {
                out += &format!("{}  dim {}  rank {}\n", row.alpha, row.dim, row.rank);
            }
            out += &format!("sum of dim*rank = {sum}\n");
            out
        }
    })
}

fn cmd_trace(args: &TraceArgs) -> Result<String, Failure> {
    let d = args.source.descriptor()?;
    let c = trace_values(&d, &args.sigma).map_err(engine_failure)?;
    Ok(match args.format {
        Format::Json => render::json_doc(&json!({
            "descriptor": descriptor_json(&d),
            "sigma": parts_json(&args.sigma),
            "c_star": c.star.to_string(),
            "c_bullet": c.bullet.to_string(),
            "c": c.total.to_string(),
        })),
        _ => format!("c_star = {}\nc_bullet = {}\nc = {}\n", c.star, c.bullet, c.total),
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let suites = if args.suite.is_empty() { Suite::ALL.to_vec() } else { args.suite.clone() };
    let opts = VerifyOptions { schur_max_n: args.max_n, route_order: args.order, trace_max_n: 6 };
    check_order(args.order)?;
    let descriptors = if let Some(count) = args.random {
        abelrank::random::random_descriptors(count, args.seed, args.max_g)
    } else if let Some(sweep) = &args.sweep {
        expand_sweep(&args.source, sweep)?
    } else {
        vec![args.source.descriptor()?]
    };
    let reports: Vec<_> = descriptors.iter().map(|d| (d, verify(d, &suites, &opts))).collect();
    let pass = reports.iter().all(|(_, r)| r.passed());
    let out = match args.format {
        Format::Json => {
            let runs: Vec<Value> = reports
                .iter()
                .map(|(d, r)| json!({"descriptor": descriptor_json(d), "pass": r.passed(), "checks": r.checks}))
                .collect();
            render::json_doc(&json!({"pass": pass, "runs": runs}))
        }
        _ => {
            let mut out = String::new();
            for (d, r) in &reports {
                out += &format!("{}\n", serialize_descriptor(d));
                for c in &r.checks {
                    let verdict = if c.pass { "pass" } else { "FAIL" };
                    out += &format!("  {verdict}  {}", c.name);
                    if let Some(w) = &c.witness {
                        out += &format!(": {w}");
                    }
                    out += "\n";
                }
            }
            out += if pass { "all checks passed\n" } else { "some checks failed\n" };
            out
        }
    };
    Ok((out, pass))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match &cli.command {
        Command::Series(a) => cmd_series(a).map(|s| (s, true)),
        Command::Schur(a) => cmd_schur(a).map(|s| (s, true)),
        Command::Trace(a) => cmd_trace(a).map(|s| (s, true)),
        Command::Verify(a) => cmd_verify(a),
        Command::Preset(a) => a.source.descriptor().map(|d| (render::json_doc(&descriptor_json(&d)), true)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, pass)) => {
            print!("{out}");
            ExitCode::from(if pass { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
