//! `dirichlet`: exact Dirichlet inverses, ordered-factorization counts,
//! zeta-type growth exponents, and bound-verification sweeps.
//!
//! Exit codes: 0 success, 1 failed verification, 2 argument errors,
//! 3 hypothesis violations, 4 resource ceilings.

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dirichlet_core::arith::{
    inverse_recursive, rat_frac, ArithmeticFunction, InverseTable, Rat,
};
use dirichlet_core::bounds::{
    generators, sci_string_f64, sweep_to_json, verify_sweep, write_reports_csv, BoundSpec, Family,
    SweepMode, SweepOutcome,
};
use dirichlet_core::error::Error;
use dirichlet_core::factorizations::{
    d_max_k, d_max_upper_bound, d_min_k, d_min_log_bound, d_min_lower_bound,
    enumerate_with_ceiling, h_k, h_table, FactorSet, DEFAULT_ENUMERATION_CEILING,
};
use dirichlet_core::zeta::{solve, GrowthExponent, ZetaEquation, DEFAULT_ROOT_TOLERANCE};

#[derive(Parser)]
#[command(
    name = "dirichlet",
    about = "Toolkit for Dirichlet inverses, ordered factorizations, zeta roots, and bound sweeps",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Dirichlet inverse values of a built-in family or a table file.
    Inverse {
        /// Built-in family, e.g. hille, onlytwo, power:g=-1,
        /// twopowerpoly:C=3,g=-1, twoexp:A=1,c=1/2, twopowerexp:A=1,c=2.
        #[arg(long, conflicts_with = "table")]
        family: Option<String>,
        /// Two-column "n value" file with rationals as p/q; the n = 1 line
        /// must carry value 1; unlisted n evaluate to 0.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        n: u64,
        /// Print every value 1..=n instead of the single value at n.
        #[arg(long)]
        upto: bool,
    },
    /// Ordered-factorization count H(n, P).
    H {
        #[arg(long)]
        n: u64,
        /// Factor set: all2, odd3, or list:2,3,5.
        #[arg(long, default_value = "all2")]
        set: String,
        #[arg(long)]
        upto: bool,
    },
    /// Fixed-length count H_k(n, P).
    Hk {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "all2")]
        set: String,
    },
    /// Enumerate ordered factorizations lexicographically.
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value = "all2")]
        set: String,
        /// Abort past this many visited factor prefixes.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CEILING)]
        ceiling: u64,
    },
    /// Exact min/max factor sums over k-factorizations, with their bounds.
    Dminmax {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
    },
    /// Solve zeta_P(s) = 1 for the growth exponent of H(n, P).
    Rho {
        #[arg(long, default_value = "all2")]
        set: String,
        #[arg(long, default_value_t = DEFAULT_ROOT_TOLERANCE)]
        tol: f64,
    },
    /// Solve a named zeta-type equation: zeta2, odd2, varsigma:C,
    /// upsilon:A,c, trunclow:N,C, finite:N,C, oddsigma:C.
    Solve {
        #[arg(long)]
        equation: String,
        #[arg(long, default_value_t = DEFAULT_ROOT_TOLERANCE)]
        tol: f64,
    },
    /// Verify a bound specification against a family or random function.
    Verify {
        /// Bound kind and parameters, e.g. generalpoly:C=1,g=0,
        /// multpoly:C=3,g=0, expsmallc:A=1,c=1/2, trunclow:N=5,C=1,g=0.
        #[arg(long)]
        spec: String,
        #[arg(long, conflicts_with = "random")]
        family: Option<String>,
        /// Generate the hypothesis-matching seeded random function.
        #[arg(long)]
        random: bool,
        /// Inclusive range lo..hi.
        #[arg(long)]
        range: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check a seeded random sample of this size instead of every n.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// List the built-in extremal families.
    Families,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("DIRICHLET_THREADS") {
        if let Ok(count) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(count)
                .build_global();
        } else {
            eprintln!("error: DIRICHLET_THREADS must be an integer");
            return ExitCode::from(2);
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// CLI-level failures reuse the library error type; `InvalidParameter`
/// doubles as the argument-error carrier (exit 2).
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::HypothesisViolation { .. } => 3,
        Error::EnumerationCeiling { .. }
        | Error::CounterOverflow { .. }
        | Error::PartitionCeiling { .. }
        | Error::HorizonExceeded { .. }
        | Error::PrimePowerTooLarge { .. } => 4,
        Error::InvalidParameter(_) | Error::NotNormalized { .. } | Error::InvalidFactorSet => 2,
        _ => 1,
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn require_min(n: u64, min: u64, what: &str) -> Result<(), Error> {
    if n < min {
        Err(invalid(format!("{what} must be at least {min}")))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    match cli.command {
        Command::Inverse { family, table, n, upto } => {
            require_min(n, 1, "--n")?;
            let f = match (family, table) {
                (Some(spec), None) => parse_family(&spec)?.function(),
                (None, Some(path)) => load_table_function(&path)?,
                _ => return Err(invalid("provide exactly one of --family or --table")),
            };
            let table = inverse_recursive(&f, n);
            emit_inverse(format, &table, n, upto);
            Ok(ExitCode::SUCCESS)
        }
        Command::H { n, set, upto } => {
            require_min(n, 1, "--n")?;
            let set = parse_set(&set)?;
            let table = h_table(n, &set)?;
            if upto {
                emit_rows(
                    format,
                    &["n", "h"],
                    (1..=n).map(|m| vec![m.to_string(), table[m as usize].to_string()]),
                );
            } else {
                emit_scalar(format, "h", &table[n as usize].to_string(), n);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hk { n, k, set } => {
            require_min(n, 1, "--n")?;
            require_min(k as u64, 1, "--k")?;
            let set = parse_set(&set)?;
            let value = h_k(n, k, &set)?;
            emit_scalar(format, "h_k", &value.to_string(), n);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, k, set, ceiling } => {
            require_min(n, 2, "--n")?;
            let set = parse_set(&set)?;
            let tuples = enumerate_with_ceiling(n, &set, k, ceiling)?;
            match format {
                Format::Table => {
                    for t in &tuples {
                        println!("{}", join_u64(t, " "));
                    }
                }
                Format::Csv => {
                    println!("k,factors");
                    for t in &tuples {
                        println!("{},{}", t.len(), join_u64(t, " "));
                    }
                }
                Format::Json => {
                    println!("{}", json!({ "n": n, "tuples": tuples }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dminmax { n, k } => {
            require_min(n, 2, "--n")?;
            require_min(k as u64, 1, "--k")?;
            let dmin = d_min_k(n, k)?;
            let dmax = d_max_k(n, k)?;
            let fields = [
                ("n", n.to_string()),
                ("k", k.to_string()),
                ("d_min", dmin.map_or("inf".into(), |v| v.to_string())),
                ("d_max", dmax.map_or("-inf".into(), |v| v.to_string())),
                ("min_lower_bound", sci_string_f64(d_min_lower_bound(n, k))),
                ("min_log_bound", sci_string_f64(d_min_log_bound(n))),
                ("max_upper_bound", sci_string_f64(d_max_upper_bound(n, k))),
            ];
            emit_record(format, &fields);
            Ok(ExitCode::SUCCESS)
        }
        Command::Rho { set, tol } => {
            let set = parse_set(&set)?;
            let root = solve(ZetaEquation::GenericFactorSet { set, target: 1.0 }, tol)?;
            emit_root(format, &root);
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { equation, tol } => {
            let equation = parse_equation(&equation)?;
            let root = solve(equation, tol)?;
            emit_root(format, &root);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { spec, family, random, range, seed, sample } => {
            let spec = parse_spec(&spec)?;
            let (lo, hi) = parse_range(&range)?;
            let f = if random {
                random_function_for(&spec, seed)?
            } else {
                match family {
                    Some(name) => parse_family(&name)?.function(),
                    None => return Err(invalid("provide --family or --random")),
                }
            };
            let mode = match sample {
                Some(count) => SweepMode::RandomSample { count, seed },
                None => SweepMode::Exhaustive,
            };
            let outcome = verify_sweep(&spec, &f, lo..=hi, mode)?;
            emit_sweep(format, &outcome);
            if outcome.summary.failures > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Families => {
            let rows = Family::catalog();
            emit_rows(
                format,
                &["name", "parameters", "definition", "inverse"],
                rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()),
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn join_u64(values: &[u64], sep: &str) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom() == &num_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn num_one() -> num::BigInt {
    num::BigInt::from(1)
}

use dirichlet_core::num;

fn emit_inverse(format: Format, table: &InverseTable, n: u64, upto: bool) {
    if upto {
        emit_rows(
            format,
            &["n", "inverse"],
            (1..=n).map(|m| vec![m.to_string(), fmt_rat(table.get(m))]),
        );
    } else {
        emit_scalar(format, "inverse", &fmt_rat(table.get(n)), n);
    }
}

fn emit_scalar(format: Format, name: &str, value: &str, n: u64) {
    match format {
        Format::Table => println!("{value}"),
        Format::Csv => {
            println!("n,{name}");
            println!("{n},{value}");
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("n".into(), json!(n));
            obj.insert(name.into(), json!(value));
            println!("{}", serde_json::Value::Object(obj));
        }
    }
}

fn emit_rows(
    format: Format,
    header: &[&str],
    rows: impl Iterator<Item = Vec<String>>,
) {
    match format {
        Format::Table => {
            for row in rows {
                println!("{}", row.join("\t"));
            }
        }
        Format::Csv => {
            println!("{}", header.join(","));
            for row in rows {
                println!("{}", row.join(","));
            }
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = rows
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (key, value) in header.iter().zip(row) {
                        obj.insert(key.to_string(), json!(value));
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            println!("{}", serde_json::Value::Array(objects));
        }
    }
}

fn emit_record(format: Format, fields: &[(&str, String)]) {
    match format {
        Format::Table => {
            for (key, value) in fields {
                println!("{key}\t{value}");
            }
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let row: Vec<String> = fields.iter().map(|(_, v)| v.clone()).collect();
            println!("{}", header.join(","));
            println!("{}", row.join(","));
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (key, value) in fields {
                obj.insert(key.to_string(), json!(value));
            }
            println!("{}", serde_json::Value::Object(obj));
        }
    }
}

fn emit_root(format: Format, root: &GrowthExponent) {
    let mut fields = vec![
        ("equation", root.equation.to_string()),
        ("root", sci_string_f64(root.value)),
        ("enclosure_lo", sci_string_f64(root.lo)),
        ("enclosure_hi", sci_string_f64(root.hi)),
    ];
    if root.nonpositive {
        fields.push(("note", "root at or below 0".into()));
    }
    emit_record(format, &fields);
}

fn emit_sweep(format: Format, outcome: &SweepOutcome) {
    match format {
        Format::Table => {
            println!("n\tinv_abs\tbound\tratio\tverdict");
            for r in &outcome.reports {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    r.n,
                    fmt_rat(&r.inv_abs),
                    r.bound.to_sci_string(),
                    sci_string_f64(r.ratio),
                    if r.pass { "pass" } else { "fail" }
                );
            }
            println!("{}", outcome.summary.line());
        }
        Format::Csv => {
            let mut stdout = std::io::stdout().lock();
            write_reports_csv(&mut stdout, &outcome.reports).expect("stdout");
            eprintln!("{}", outcome.summary.line());
        }
        Format::Json => {
            println!("{}", sweep_to_json(&outcome.reports, &outcome.summary));
        }
    }
}

fn parse_rat(text: &str) -> Result<Rat, Error> {
    let parse_int = |s: &str| -> Result<i64, Error> {
        s.trim()
            .parse::<i64>()
            .map_err(|_| invalid(format!("`{s}` is not an integer")))
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den == 0 {
                return Err(invalid("zero denominator"));
            }
            Ok(rat_frac(parse_int(p)?, den))
        }
        None => Ok(rat_frac(parse_int(text)?, 1)),
    }
}

fn parse_set(text: &str) -> Result<FactorSet, Error> {
    match text {
        "all2" => Ok(FactorSet::all_from_2()),
        "odd3" => Ok(FactorSet::odd_from_3()),
        other => match other.strip_prefix("list:") {
            Some(list) => {
                let members = list
                    .split(',')
                    .map(|item| {
                        item.trim()
                            .parse::<u64>()
                            .map_err(|_| invalid(format!("bad set member `{item}`")))
                    })
                    .collect::<Result<Vec<u64>, Error>>()?;
                FactorSet::explicit(members)
            }
            None => Err(invalid(format!(
                "unknown set `{other}` (expected all2, odd3, or list:2,3,5)"
            ))),
        },
    }
}

fn parse_range(text: &str) -> Result<(u64, u64), Error> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| invalid("range must look like 2..1000"))?;
    let lo = lo
        .parse::<u64>()
        .map_err(|_| invalid(format!("bad range start `{lo}`")))?;
    let hi = hi
        .parse::<u64>()
        .map_err(|_| invalid(format!("bad range end `{hi}`")))?;
    if hi < lo {
        return Err(invalid("empty range"));
    }
    Ok((lo, hi))
}

/// key=value parameter lists like `C=3,g=-1`.
fn parse_params(text: &str) -> Result<HashMap<String, String>, Error> {
    let mut out = HashMap::new();
    for item in text.split(',') {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| invalid(format!("expected key=value, got `{item}`")))?;
        out.insert(key.trim().to_ascii_lowercase(), value.trim().to_string());
    }
    Ok(out)
}

struct Params {
    kind: String,
    values: HashMap<String, String>,
}

impl Params {
    fn parse(text: &str) -> Result<Self, Error> {
        match text.split_once(':') {
            Some((kind, rest)) => Ok(Params {
                kind: kind.trim().to_ascii_lowercase(),
                values: parse_params(rest)?,
            }),
            None => Ok(Params {
                kind: text.trim().to_ascii_lowercase(),
                values: HashMap::new(),
            }),
        }
    }

    fn rat(&self, key: &str) -> Result<Rat, Error> {
        parse_rat(
            self.values
                .get(key)
                .ok_or_else(|| invalid(format!("missing parameter `{key}`")))?,
        )
    }

    fn int(&self, key: &str) -> Result<i64, Error> {
        self.values
            .get(key)
            .ok_or_else(|| invalid(format!("missing parameter `{key}`")))?
            .parse::<i64>()
            .map_err(|_| invalid(format!("parameter `{key}` must be an integer")))
    }

    fn uint(&self, key: &str) -> Result<u64, Error> {
        self.values
            .get(key)
            .ok_or_else(|| invalid(format!("missing parameter `{key}`")))?
            .parse::<u64>()
            .map_err(|_| invalid(format!("parameter `{key}` must be a positive integer")))
    }
}

fn parse_family(text: &str) -> Result<Family, Error> {
    let p = Params::parse(text)?;
    match p.kind.as_str() {
        "hille" => Ok(Family::Hille),
        "onlytwo" => Ok(Family::OnlyTwo),
        "power" => Ok(Family::PowerGamma { gamma: p.int("g")? }),
        "twopowerpoly" => Ok(Family::TwoPowerPoly {
            c: p.rat("c")?,
            gamma: p.int("g")?,
        }),
        "twoexp" => Ok(Family::TwoExp {
            a: p.rat("a")?,
            c: p.rat("c")?,
        }),
        "twopowerexp" => Ok(Family::TwoPowerExp {
            a: p.rat("a")?,
            c: p.rat("c")?,
        }),
        other => Err(invalid(format!("unknown family `{other}`"))),
    }
}

fn parse_spec(text: &str) -> Result<BoundSpec, Error> {
    let p = Params::parse(text)?;
    match p.kind.as_str() {
        "submultpoly" => BoundSpec::submult_poly(p.rat("c")?, p.rat("g")?),
        "multpoly" => BoundSpec::mult_poly(p.rat("c")?, p.rat("g")?),
        "multpolyzero" => BoundSpec::mult_poly_zero_higher_powers(p.rat("c")?, p.rat("g")?),
        "multexp" => BoundSpec::mult_exp(p.rat("a")?, p.rat("c")?),
        "partition" => BoundSpec::prime_power_partition(p.rat("a")?, p.rat("c")?),
        "generalpoly" => BoundSpec::general_poly(p.rat("c")?, p.rat("g")?),
        "generalpolylog" => BoundSpec::general_poly_log(p.rat("c")?, p.rat("g")?),
        "expsmallc" => BoundSpec::exp_small_c(p.rat("a")?, p.rat("c")?),
        "expsmallcunita" => BoundSpec::exp_small_c_unit_a(p.rat("c")?),
        "explargec" => BoundSpec::exp_large_c(p.rat("a")?, p.rat("c")?),
        "trunclow" => BoundSpec::truncated_low(p.uint("n")?, p.rat("c")?, p.rat("g")?),
        "trunchigh" => BoundSpec::truncated_high(p.uint("n")?, p.rat("c")?, p.rat("g")?),
        "oddsupport" => BoundSpec::odd_support(p.rat("c")?, p.rat("g")?),
        other => Err(invalid(format!("unknown bound kind `{other}`"))),
    }
}

/// Positional equation forms: zeta2, odd2, varsigma:C, upsilon:A,c,
/// trunclow:N,C, finite:N,C, oddsigma:C.
fn parse_equation(text: &str) -> Result<ZetaEquation, Error> {
    let (kind, rest) = match text.split_once(':') {
        Some((k, r)) => (k.trim(), r.trim()),
        None => (text.trim(), ""),
    };
    let args: Vec<&str> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',').map(str::trim).collect()
    };
    let rat_arg = |i: usize| -> Result<f64, Error> {
        let r = parse_rat(args.get(i).ok_or_else(|| invalid("missing equation argument"))?)?;
        Ok(rat_f64(&r))
    };
    let uint_arg = |i: usize| -> Result<u64, Error> {
        args.get(i)
            .ok_or_else(|| invalid("missing equation argument"))?
            .parse::<u64>()
            .map_err(|_| invalid("equation argument must be a positive integer"))
    };
    match kind {
        "zeta2" => Ok(ZetaEquation::FullZetaEquals { target: 2.0 }),
        "odd2" => Ok(ZetaEquation::OddZetaEquals { target: 2.0 }),
        "varsigma" => Ok(ZetaEquation::FullZetaEquals {
            target: 1.0 / rat_arg(0)? + 1.0,
        }),
        "upsilon" => {
            let a = rat_arg(0)?;
            let c = rat_arg(1)?;
            Ok(ZetaEquation::FullZetaEquals {
                target: 1.0 / (a * c * c) + 1.0,
            })
        }
        "trunclow" => Ok(ZetaEquation::TruncatedLow {
            n_cut: uint_arg(0)?,
            c: rat_arg(1)?,
        }),
        "finite" => Ok(ZetaEquation::FiniteSet {
            n_max: uint_arg(0)?,
            c: rat_arg(1)?,
        }),
        "oddsigma" => Ok(ZetaEquation::OddZetaEquals {
            target: 1.0 / rat_arg(0)? + 1.0,
        }),
        other => Err(invalid(format!("unknown equation `{other}`"))),
    }
}

fn rat_f64(r: &Rat) -> f64 {
    use dirichlet_core::num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn random_function_for(spec: &BoundSpec, seed: u64) -> Result<ArithmeticFunction, Error> {
    use dirichlet_core::num::One;
    Ok(match spec {
        BoundSpec::SubmultPoly { c, gamma, .. } => {
            if *c < Rat::one() || !gamma.is_integer() {
                return Err(invalid(
                    "the submultiplicative generator needs C >= 1 and integral gamma",
                ));
            }
            let g = i64::try_from(gamma.to_integer())
                .map_err(|_| invalid("gamma out of range"))?;
            generators::submultiplicative_poly(seed, c, g)
        }
        BoundSpec::MultPoly { c, gamma } => generators::multiplicative_poly(seed, c, gamma),
        BoundSpec::MultPolyZeroHigherPowers { c, gamma } => {
            generators::multiplicative_zero_higher(seed, c, gamma)
        }
        BoundSpec::MultExp { a, c } => generators::multiplicative_exp_single_prime(seed, a, c),
        BoundSpec::PrimePowerPartition { a, c } => generators::exponential(seed, a, c),
        BoundSpec::GeneralPoly { c, gamma, .. } | BoundSpec::GeneralPolyLog { c, gamma, .. } => {
            generators::poly(seed, c, gamma)
        }
        BoundSpec::ExpSmallC { a, c, .. } => generators::exponential(seed, a, c),
        BoundSpec::ExpSmallCUnitA { c, .. } => generators::exponential(seed, &Rat::one(), c),
        BoundSpec::ExpLargeC { a, c, .. } => generators::exponential(seed, a, c),
        BoundSpec::TruncatedLow { n_cut, c, gamma, .. } => {
            generators::truncated_low_poly(seed, *n_cut, c, gamma)
        }
        BoundSpec::TruncatedHigh { n_cut, c, gamma, .. } => {
            generators::truncated_high_poly(seed, *n_cut, c, gamma)
        }
        BoundSpec::OddSupport { c, gamma, .. } => generators::odd_support_poly(seed, c, gamma),
    })
}

fn load_table_function(path: &PathBuf) -> Result<ArithmeticFunction, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    let mut values = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let n = parts
            .next()
            .and_then(|s| s.parse::<u64>().ok())
            .ok_or_else(|| invalid(format!("line {}: expected `n value`", idx + 1)))?;
        let value = parts
            .next()
            .ok_or_else(|| invalid(format!("line {}: expected `n value`", idx + 1)))?;
        if parts.next().is_some() {
            return Err(invalid(format!("line {}: trailing fields", idx + 1)));
        }
        values.push((n, parse_rat(value)?));
    }
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "table".into());
    ArithmeticFunction::from_values(name, values)
}
