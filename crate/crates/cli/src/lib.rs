//! Command implementations behind the `pqtrig` binary.
//!
//! Each command returns its complete standard output as a string, so the
//! binary only prints and picks an exit status. Numbers in tables and
//! constants use Rust's shortest round-trip formatting; `eval` prints 15
//! significant digits.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use pqtrig::verify::{check_names, summary, write_records};
use pqtrig::{
    cos_pq, cosh_pq, run_suite_with, sin_pq, sinh_pq, tan_pq, tau_pq, EvalResult, ExtReal, ParamPair, SuiteConfig,
};
use thiserror::Error;

/// Exit status for a run whose checks failed.
pub const EXIT_CHECK_FAILURE: u8 = 1;
/// Exit status for bad flags, invalid parameters and domain errors.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] pqtrig::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Parser)]
#[command(name = "pqtrig", version, about = "Generalized trigonometric and hyperbolic functions with parameters (p, q)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval {
        function: Function,
        #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
        q: f64,
        #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
        x: f64,
    },
    /// Print `x,value` rows on an evenly spaced grid.
    Table {
        function: Function,
        #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
        q: f64,
        #[arg(long = "x-min", value_parser = parse_finite, allow_negative_numbers = true)]
        x_min: f64,
        #[arg(long = "x-max", value_parser = parse_finite, allow_negative_numbers = true)]
        x_max: f64,
        #[arg(long)]
        n: usize,
    },
    /// Print the period constant, the conjugate exponent and the dual exponent.
    Const {
        #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, value_parser = parse_finite, allow_negative_numbers = true)]
        q: f64,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 1e-9, value_parser = parse_finite)]
        tolerance: f64,
        /// Only run checks whose names start with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Also write the reports as tab-separated records to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tan,
    Tau,
}

impl Function {
    pub fn evaluate(self, pq: &ParamPair, x: f64) -> pqtrig::Result<EvalResult> {
        match self {
            Function::Sin => sin_pq(pq, x),
            Function::Cos => cos_pq(pq, x),
            Function::Sinh => sinh_pq(pq, x),
            Function::Cosh => cosh_pq(pq, x),
            Function::Tan => tan_pq(pq, x),
            Function::Tau => tau_pq(pq, x),
        }
    }

    /// Right end of the function's domain.
    pub fn domain_end(self, pq: &ParamPair) -> ExtReal {
        match self {
            Function::Sinh | Function::Cosh => pq.hyperbolic_half_period(),
            _ => pq.half_period(),
        }
    }
}

/// Parses a finite `f64`; used for every numeric flag.
pub fn parse_finite(text: &str) -> Result<f64, String> {
    let value: f64 = text.trim().parse().map_err(|e| format!("{text:?} is not a number: {e}"))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("{text:?} is not finite"))
    }
}

/// `value` to 15 significant digits with trailing zeros removed; plain
/// notation for magnitudes in `[1e-5, 1e15)`, scientific otherwise.
pub fn format_significant(value: f64) -> String {
    if value == 0.0 {
        return "0".into();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let scientific = format!("{value:.14e}");
    let (mantissa, exponent) = scientific.split_once('e').expect("scientific format has an exponent");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-5..15).contains(&exponent) {
        let decimals = (14 - exponent).max(0) as usize;
        trim_zeros(&format!("{value:.decimals$}")).to_string()
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa))
    }
}

fn trim_zeros(text: &str) -> &str {
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.')
    } else {
        text
    }
}

/// Output of a command: the text for standard output and whether every
/// check it ran passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, success: true }
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Eval { function, p, q, x } => eval(*function, *p, *q, *x).map(Outcome::ok),
        Command::Table { function, p, q, x_min, x_max, n } => {
            table(*function, *p, *q, *x_min, *x_max, *n).map(Outcome::ok)
        }
        Command::Const { p, q } => constants(*p, *q).map(Outcome::ok),
        Command::Verify { tolerance, filter, out } => verify(*tolerance, filter.as_deref(), out.as_ref()),
    }
}

/// The value on the first line, the achieved residual on the second.
pub fn eval(function: Function, p: f64, q: f64, x: f64) -> Result<String, CliError> {
    let result = function.evaluate(&ParamPair::new(p, q)?, x)?;
    Ok(format!("{}\nresidual {:e}\n", format_significant(result.value), result.residual))
}

/// The abscissas of a table: `n` points from `x_min` to `x_max` inclusive.
pub fn table_grid(x_min: f64, x_max: f64, n: usize) -> Vec<f64> {
    let step = (x_max - x_min) / (n - 1) as f64;
    (0..n).map(|i| if i + 1 == n { x_max } else { x_min + step * i as f64 }).collect()
}

/// CSV with header `x,value`. Every row is computed before any is returned.
pub fn table(function: Function, p: f64, q: f64, x_min: f64, x_max: f64, n: usize) -> Result<String, CliError> {
    let pq = ParamPair::new(p, q)?;
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    if !(0.0 <= x_min && x_min < x_max) {
        return Err(CliError::Usage(format!("need 0 <= x-min < x-max, got [{x_min}, {x_max}]")));
    }
    if let ExtReal::Finite(end) = function.domain_end(&pq) {
        if x_max >= end {
            return Err(CliError::Usage(format!("x-max = {x_max} is not below the domain end {end}")));
        }
    }
    let mut csv = String::from("x,value\n");
    for x in table_grid(x_min, x_max, n) {
        let value = function.evaluate(&pq, x)?.value;
        writeln!(csv, "{x},{value}").expect("writing to a String cannot fail");
    }
    Ok(csv)
}

/// `pi_pq`, `p_star` and `r` as `name = value` lines.
pub fn constants(p: f64, q: f64) -> Result<String, CliError> {
    let pq = ParamPair::new(p, q)?;
    let pi = match pq.half_period() {
        ExtReal::Finite(half) => (2.0 * half).to_string(),
        ExtReal::Infinite => "inf".into(),
    };
    let p_star = pq.p_star().map_or_else(|| "undefined".into(), |v| v.to_string());
    Ok(format!("pi_pq = {pi}\np_star = {p_star}\nr = {}\n", pq.r()))
}

/// Runs the default suite, one line per check followed by a summary line.
pub fn verify(tolerance: f64, filter: Option<&str>, out: Option<&PathBuf>) -> Result<Outcome, CliError> {
    if !(tolerance > 0.0) {
        return Err(CliError::Usage(format!("--tolerance must be positive, got {tolerance}")));
    }
    let config = SuiteConfig::default();
    if let Some(prefix) = filter {
        if !check_names(&config).iter().any(|name| name.starts_with(prefix)) {
            return Err(CliError::Usage(format!("no check name starts with {prefix:?}")));
        }
    }
    let reports = run_suite_with(&config, tolerance, filter);
    if let Some(path) = out {
        std::fs::write(path, write_records(&reports)).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    let mut stdout = String::new();
    for report in &reports {
        writeln!(stdout, "{report}").expect("writing to a String cannot fail");
    }
    let (passed, failed) = summary(&reports);
    writeln!(stdout, "{passed} passed, {failed} failed").expect("writing to a String cannot fail");
    Ok(Outcome { stdout, success: failed == 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.5), "0.5");
        assert_eq!(format_significant(0.7615941559557649), "0.761594155955765");
        assert_eq!(format_significant(-2.0), "-2");
        assert_eq!(format_significant(123456.0), "123456");
        assert_eq!(format_significant(1.5e-7), "1.5e-7");
        assert_eq!(format_significant(2.5e20), "2.5e20");
        assert_eq!(format_significant(9.9999999999999995), "10");
    }

    #[test]
    fn finite_flags_only() {
        assert_eq!(parse_finite("1e-3"), Ok(1e-3));
        assert!(parse_finite("inf").is_err());
        assert!(parse_finite("NaN").is_err());
        assert!(parse_finite("two").is_err());
    }

    #[test]
    fn table_grid_hits_both_ends() {
        assert_eq!(table_grid(0.0, 1.5, 2), vec![0.0, 1.5]);
        assert_eq!(table_grid(0.0, 1.5, 4), vec![0.0, 0.5, 1.0, 1.5]);
    }
}
