//! Batch front end: family tables, identity verification sweeps, and
//! generating-function expansions, with machine-readable exit codes.
//!
//! Exit codes: 0 success / all checks pass, 1 identity failure, 2 usage or
//! precondition error, 3 I/O error.

mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use config::CliConfig;
use degenpoly::families;
use degenpoly::identity::{
    all_passed, reports_to_json, reports_to_text, run_all, run_check, AlphaMode, IdentityId,
    ParamGrid,
};
use degenpoly::table::{
    build_table, parse_param_value, parse_rational, FamilyId, OutputFormat, ParamValue, Params,
};
use degenpoly::{Poly, Scalar, Series, Var};

const OUT_DIR_ENV: &str = "DEGENPOLY_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "degenpoly",
    version,
    about = "Exact tables, expansions and identity verification for degenerate Euler-Genocchi polynomial families"
)]
struct Cli {
    /// JSON config file with default grid bounds and output settings
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family table (rows n = 0..n-max)
    Table(TableArgs),
    /// Sweep one identity or the whole catalog over a parameter grid
    Verify(VerifyArgs),
    /// Expand a generating function and print its EGF coefficients
    Expand(ExpandArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Family name: falling, euler, euler-order, genocchi-order,
    /// euler-genocchi, euler-genocchi-order, stirling2-deg, bell,
    /// alt-power-sum
    #[arg(long)]
    family: String,

    /// Shift order r for the euler-genocchi families
    #[arg(long, default_value_t = 0)]
    r: u32,

    /// Fixed second index k (stirling2-deg, bell: optional; alt-power-sum:
    /// required)
    #[arg(long)]
    k: Option<u32>,

    /// Order parameter: a rational `p/q` or `sym` (genocchi-order requires
    /// a nonnegative integer)
    #[arg(long)]
    alpha: Option<String>,

    /// Argument: a rational `p/q` or `sym`
    #[arg(long)]
    x: Option<String>,

    #[arg(long, value_name = "N")]
    n_max: Option<u32>,

    /// csv, json, latex or text
    #[arg(long)]
    format: Option<String>,

    /// Output file (defaults to stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog entry (T1..T10, E5, E10, E13, E26, E30, E34, E40, E43, E44,
    /// E48) or `all`
    #[arg(long)]
    identity: String,

    #[arg(long, value_name = "N")]
    n_max: Option<u32>,

    #[arg(long, value_name = "R")]
    r_max: Option<u32>,

    /// Comma-separated odd moduli, e.g. `1,3,5` (empty for none)
    #[arg(long)]
    m: Option<String>,

    #[arg(long, value_name = "K")]
    k_max: Option<u32>,

    /// `sym` for symbolic alpha, or comma-separated rationals to
    /// specialize, e.g. `1,2,-1/2`
    #[arg(long)]
    alpha: Option<String>,

    /// json or text
    #[arg(long)]
    format: Option<String>,

    /// Output file (defaults to stdout)
    #[arg(long)]
    out: Option<PathBuf>,

    /// Include per-check wall-clock times (makes output nondeterministic)
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ExpandArgs {
    /// Generating function: degenerate-exp, euler, euler-order,
    /// genocchi-order, aeg, aeg-order
    #[arg(long)]
    gf: String,

    /// Shift order r (aeg, aeg-order)
    #[arg(long, default_value_t = 0)]
    r: u32,

    /// Order parameter: rational `p/q` or `sym`; genocchi-order requires a
    /// nonnegative integer
    #[arg(long)]
    alpha: Option<String>,

    /// Argument: rational `p/q` or `sym`
    #[arg(long)]
    x: Option<String>,

    /// Truncation order (coefficients 0..order are printed)
    #[arg(long)]
    order: u32,

    /// Output file (defaults to stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match &cli.config {
        Some(path) => match CliConfig::load(path) {
            Ok(cfg) => cfg,
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        },
        None => CliConfig::default(),
    };
    let result = match cli.command {
        Command::Table(args) => cmd_table(args, &cfg),
        Command::Verify(args) => cmd_verify(args, &cfg),
        Command::Expand(args) => cmd_expand(args, &cfg),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

// Resolve the output target: files go under $DEGENPOLY_OUT_DIR when it is
// set and the path is relative.
fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            let resolved = match std::env::var_os(OUT_DIR_ENV) {
                Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
                _ => path.to_path_buf(),
            };
            std::fs::write(&resolved, content)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", resolved.display())))
        }
    }
}

fn parse_opt_param(name: &str, value: &Option<String>) -> Result<Option<ParamValue>, CliError> {
    match value {
        None => Ok(None),
        Some(s) => parse_param_value(s)
            .map(Some)
            .map_err(|e| usage(format!("--{name}: {e}"))),
    }
}

fn cmd_table(args: TableArgs, cfg: &CliConfig) -> Result<u8, CliError> {
    let family = FamilyId::parse(&args.family, args.r)
        .ok_or_else(|| usage(format!(
            "unknown family `{}` (expected one of: {})",
            args.family,
            FamilyId::NAMES.join(", ")
        )))?;
    let n_max = args.n_max.unwrap_or(cfg.n_max);
    if n_max + args.r > cfg.truncation_order {
        return Err(usage(format!(
            "n-max {} + r {} exceeds truncation order {}",
            n_max, args.r, cfg.truncation_order
        )));
    }

    let mut params = Params::new();
    if let Some(v) = parse_opt_param("x", &args.x)? {
        params.insert("x".into(), v);
    }
    if let Some(v) = parse_opt_param("alpha", &args.alpha)? {
        params.insert("alpha".into(), v);
    }
    if let Some(k) = args.k {
        params.insert(
            "k".into(),
            ParamValue::Rational(degenpoly::Rat::from_int(k as i64)),
        );
    }

    let table = build_table(family, &params, n_max).map_err(|e| usage(e.to_string()))?;
    let format = resolve_format(args.format.as_deref(), cfg)?;
    let mut rendered = table.render(format);
    if !rendered.ends_with('\n') {
        rendered.push('\n');
    }
    write_output(args.out.as_deref(), &rendered)?;
    Ok(0)
}

fn resolve_format(flag: Option<&str>, cfg: &CliConfig) -> Result<OutputFormat, CliError> {
    let name = flag.unwrap_or(&cfg.format);
    OutputFormat::from_str(name).map_err(|e| usage(e.to_string()))
}

fn parse_m_list(s: &str) -> Result<Vec<u32>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| usage(format!("--m: `{part}` is not a nonnegative integer")))
        })
        .collect()
}

fn parse_alpha_mode(s: &str) -> Result<AlphaMode, CliError> {
    if s == "sym" {
        return Ok(AlphaMode::Symbolic);
    }
    let values = s
        .split(',')
        .map(|part| parse_rational(part.trim()).map_err(|e| usage(format!("--alpha: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlphaMode::Specialize(values))
}

fn cmd_verify(args: VerifyArgs, cfg: &CliConfig) -> Result<u8, CliError> {
    let n_max = args.n_max.unwrap_or(cfg.n_max);
    let r_max = args.r_max.unwrap_or(cfg.r_max);
    let k_max = args.k_max.unwrap_or(cfg.k_max);
    let m_values = match &args.m {
        Some(s) => parse_m_list(s)?,
        None => cfg.m_values.clone(),
    };
    let alpha_mode = match &args.alpha {
        Some(s) => parse_alpha_mode(s)?,
        None => AlphaMode::Symbolic,
    };
    if n_max + r_max > cfg.truncation_order {
        return Err(usage(format!(
            "n-max {n_max} + r-max {r_max} exceeds truncation order {}",
            cfg.truncation_order
        )));
    }

    let grid = ParamGrid::new(n_max, r_max, m_values, alpha_mode, k_max)
        .map_err(|e| usage(e.to_string()))?;

    let reports = if args.identity == "all" {
        run_all(&grid)
    } else {
        let id = args.identity.parse::<IdentityId>().map_err(|e| usage(e.to_string()))?;
        vec![run_check(id, &grid)]
    };

    let format = args.format.as_deref().unwrap_or("json");
    let rendered = match format {
        "json" => {
            let mut s = reports_to_json(&reports, args.timings);
            s.push('\n');
            s
        }
        "text" => reports_to_text(&reports, args.timings),
        other => return Err(usage(format!("unknown format `{other}` (json, text)"))),
    };
    write_output(args.out.as_deref(), &rendered)?;
    Ok(if all_passed(&reports) { 0 } else { 1 })
}

fn cmd_expand(args: ExpandArgs, cfg: &CliConfig) -> Result<u8, CliError> {
    if args.order > cfg.truncation_order {
        return Err(usage(format!(
            "order {} exceeds configured truncation order {}",
            args.order, cfg.truncation_order
        )));
    }
    let order = args.order as usize;

    let x_expr = match parse_opt_param("x", &args.x)? {
        Some(ParamValue::Rational(r)) => Poly::constant(r),
        _ => Poly::var(Var::X),
    };
    let alpha = parse_opt_param("alpha", &args.alpha)?;

    let nonneg_int_alpha = |default: u32| -> Result<u32, CliError> {
        match &alpha {
            None => Ok(default),
            Some(ParamValue::Sym) => {
                Err(usage("--alpha: this generating function needs a nonnegative integer"))
            }
            Some(ParamValue::Rational(r)) => {
                use num_traits::{Signed, ToPrimitive};
                if !r.is_integer() || r.is_negative() {
                    return Err(usage(format!(
                        "--alpha: needs a nonnegative integer, got {r}"
                    )));
                }
                r.numer()
                    .to_u32()
                    .ok_or_else(|| usage(format!("--alpha: out of range: {r}")))
            }
        }
    };

    let specialize = |series: Series| -> Series {
        match &alpha {
            Some(ParamValue::Rational(a)) => {
                let at = Poly::constant(a.clone());
                Series::from_coeffs(
                    series
                        .coeffs()
                        .iter()
                        .map(|p| p.substitute(Var::Alpha, &at))
                        .collect(),
                )
            }
            _ => series,
        }
    };

    let series = match args.gf.as_str() {
        "degenerate-exp" => Series::degenerate_exp(&x_expr, order),
        "euler" => families::euler_series(&x_expr, order),
        "euler-order" => specialize(families::euler_order_series(&x_expr, order)),
        "genocchi-order" => {
            // a shift beyond the printed order just yields zero rows, so
            // build at the shift order and truncate back
            let rho = nonneg_int_alpha(1)?;
            let work = order.max(rho as usize);
            families::genocchi_order_series(&x_expr, rho, work)
                .expect("rho <= order by construction")
                .truncate(order)
                .expect("order <= work")
        }
        "aeg" | "aeg-order" => {
            let work = order.max(args.r as usize);
            let series = if args.gf == "aeg" {
                families::aeg_series(&x_expr, args.r, work)
            } else {
                families::aeg_order_series(&x_expr, args.r, work)
            };
            specialize(
                series
                    .expect("r <= order by construction")
                    .truncate(order)
                    .expect("order <= work"),
            )
        }
        other => {
            return Err(usage(format!(
                "unknown generating function `{other}` (degenerate-exp, euler, euler-order, genocchi-order, aeg, aeg-order)"
            )))
        }
    };

    let mut rendered = series.to_string();
    rendered.push('\n');
    write_output(args.out.as_deref(), &rendered)?;
    Ok(0)
}
