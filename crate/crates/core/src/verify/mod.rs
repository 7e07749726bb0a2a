//! Verification harness.
//!
//! Every check produces a [`CheckReport`]. [`run_suite`] runs the standard
//! set: all registered formulas, special values, the two Pythagorean
//! identities, inversion round trips, the duality transports, the relations
//! between half-periods, both Mitrinović–Adamović inequalities over a
//! parameter grid, the ODE oracle and the antiderivative checks.
//!
//! Each check carries a nominal tolerance calibrated for a suite tolerance of
//! `1e-9`; the suite tolerance rescales all of them proportionally. The
//! inequality checks and the ODE convergence-order checks are structural and
//! are not rescaled.

mod antiderivative;
mod inequality;
mod ode;
mod record;

use std::fmt;

use rayon::prelude::*;

pub use antiderivative::{check_antiderivatives, AntiderivativeReport, Reading};
pub use inequality::{check_mai, check_maih, inequality_grid, STRICTNESS_MARGIN};
pub use ode::{ode_convergence_ratio, ode_deviation, ode_oracle_sin, OdeNode, MIN_STEPS};
pub use record::{parse_records, write_records, RecordError};

use crate::duality::{hyp_from_trig, trig_from_hyp};
use crate::formulas::{self, FormulaId, Shape};
use crate::gtf::{sincos_pq, sinhcosh_pq};
use crate::params::{ExtReal, ParamPair};
use crate::quadrature::{arcsin_pq, arsinh_pq};

/// Suite tolerance the nominal check tolerances are calibrated for.
pub const REFERENCE_TOLERANCE: f64 = 1e-9;

/// Window used for identity grids when a domain is unbounded.
pub const IDENTITY_WINDOW: f64 = 2.0;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub grid_spec: String,
    pub max_residual: f64,
    pub worst_point: f64,
    pub passed: bool,
    pub tolerance: f64,
    /// Inequality points whose margin is within the strictness margin of
    /// zero; always zero for residual checks.
    pub indeterminate: usize,
}

impl CheckReport {
    /// Builds a report, deriving `passed` from the residual and tolerance.
    pub fn new(name: impl Into<String>, grid_spec: impl Into<String>, max_residual: f64, worst_point: f64, tolerance: f64) -> Self {
        CheckReport {
            name: name.into(),
            grid_spec: grid_spec.into(),
            max_residual,
            worst_point,
            passed: max_residual <= tolerance,
            tolerance,
            indeterminate: 0,
        }
    }

    /// `true` when `passed` agrees with `max_residual ≤ tolerance`.
    pub fn is_consistent(&self) -> bool {
        self.passed == (self.max_residual <= self.tolerance)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} max_residual={:.3e} at x={} tol={:.1e} [{}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.max_residual,
            self.worst_point,
            self.tolerance,
            self.grid_spec
        )?;
        if self.indeterminate > 0 {
            write!(f, " indeterminate={}", self.indeterminate)?;
        }
        Ok(())
    }
}

/// Tracks the worst residual over a grid.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Worst {
    pub residual: f64,
    pub point: f64,
}

impl Worst {
    pub fn new() -> Self {
        Worst { residual: f64::NEG_INFINITY, point: 0.0 }
    }

    /// NaN residuals count as infinite.
    pub fn update(&mut self, residual: f64, point: f64) {
        let residual = if residual.is_nan() { f64::INFINITY } else { residual };
        if residual > self.residual {
            self.residual = residual;
            self.point = point;
        }
    }

    /// A failed evaluation counts as an infinite residual.
    pub fn update_result(&mut self, residual: crate::Result<f64>, point: f64) {
        self.update(residual.unwrap_or(f64::INFINITY), point);
    }

    pub fn residual_or_zero(&self) -> f64 {
        if self.residual == f64::NEG_INFINITY {
            0.0
        } else {
            self.residual
        }
    }

    pub fn report(&self, name: impl Into<String>, grid: impl Into<String>, tolerance: f64) -> CheckReport {
        CheckReport::new(name, grid, self.residual_or_zero(), self.point, tolerance)
    }
}

/// An ODE oracle case: the pair and the integration range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeCase {
    pub pq: ParamPair,
    pub x_max: f64,
}

/// An antiderivative case: exponent `q` and the interval `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiderivativeCase {
    pub q: f64,
    pub a: f64,
    pub b: f64,
}

/// Which checks [`run_suite_with`] runs and on which grids.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    /// Interior points per formula sweep; zero disables formula checks.
    pub formula_points: usize,
    /// Exponents `q` used for the family formulas.
    pub family_qs: Vec<f64>,
    /// Pairs for the identity, round-trip and duality checks.
    pub param_grid: Vec<ParamPair>,
    /// Interior points per pair for the identity checks.
    pub identity_points: usize,
    /// Pairs for the inequality checks.
    pub inequality_pairs: Vec<ParamPair>,
    pub inequality_points: usize,
    pub ode_cases: Vec<OdeCase>,
    pub ode_steps: usize,
    pub antiderivative_cases: Vec<AntiderivativeCase>,
    /// Exponents `q` for the half-period relations.
    pub pi_relation_qs: Vec<f64>,
    pub special_values: bool,
}

/// `q ∈ {1.25, 1.5, 2, 3, 4, 6, 10}` against
/// `p ∈ {q/(q+1) + 0.05, 0.9, 1, 1.2, 1.5, 2, 3, 5}`, keeping the valid pairs.
pub fn default_param_grid() -> Vec<ParamPair> {
    let mut grid = Vec::new();
    for q in [1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 10.0] {
        for p in [q / (q + 1.0) + 0.05, 0.9, 1.0, 1.2, 1.5, 2.0, 3.0, 5.0] {
            if let Ok(pq) = ParamPair::new(p, q) {
                grid.push(pq);
            }
        }
    }
    grid
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let pair = |p, q| ParamPair::new(p, q).expect("valid default pair");
        let grid = default_param_grid();
        SuiteConfig {
            formula_points: 100,
            family_qs: vec![1.5, 2.0, 3.0, 4.0, 6.0],
            param_grid: grid.clone(),
            identity_points: 20,
            inequality_pairs: grid,
            inequality_points: 50,
            ode_cases: vec![
                OdeCase { pq: pair(2.0, 2.0), x_max: 1.0 },
                OdeCase { pq: pair(1.0, 2.0), x_max: 2.0 },
                OdeCase { pq: pair(4.0 / 3.0, 4.0), x_max: 0.8 },
                OdeCase { pq: pair(1.5, 3.0), x_max: 1.2 },
                OdeCase { pq: pair(3.0, 6.0), x_max: 0.8 },
                OdeCase { pq: pair(2.0, 6.0), x_max: 0.9 },
            ],
            ode_steps: 10_000,
            antiderivative_cases: vec![
                AntiderivativeCase { q: 2.0, a: 0.5, b: 1.0 },
                AntiderivativeCase { q: 3.0, a: 0.3, b: 0.7 },
                AntiderivativeCase { q: 4.0, a: 0.3, b: 0.7 },
                AntiderivativeCase { q: 6.0, a: 0.3, b: 0.7 },
            ],
            pi_relation_qs: vec![2.0, 3.0, 4.0, 6.0],
            special_values: true,
        }
    }
}

impl SuiteConfig {
    /// A configuration with every grid empty; the suite then runs nothing.
    pub fn empty() -> Self {
        SuiteConfig {
            formula_points: 0,
            family_qs: Vec::new(),
            param_grid: Vec::new(),
            identity_points: 0,
            inequality_pairs: Vec::new(),
            inequality_points: 0,
            ode_cases: Vec::new(),
            ode_steps: 0,
            antiderivative_cases: Vec::new(),
            pi_relation_qs: Vec::new(),
            special_values: false,
        }
    }
}

/// `end·i/(n+1)` for `i = 1..=n`, with `end` replaced by `window` when the
/// domain is unbounded.
pub fn interior_grid(end: ExtReal, window: f64, n: usize) -> Vec<f64> {
    let end = end.as_finite().unwrap_or(window);
    (1..=n).map(|i| end * i as f64 / (n + 1) as f64).collect()
}

fn pair_label(pq: &ParamPair) -> String {
    format!("[{},{}]", pq.p(), pq.q())
}

type CheckFn<'a> = Box<dyn Fn(f64) -> CheckReport + Send + Sync + 'a>;

struct Check<'a> {
    name: String,
    run: CheckFn<'a>,
}

impl<'a> Check<'a> {
    fn new(name: impl Into<String>, run: impl Fn(f64) -> CheckReport + Send + Sync + 'a) -> Self {
        Check { name: name.into(), run: Box::new(run) }
    }
}

fn formula_check(id: FormulaId, config: &SuiteConfig, scale: f64) -> CheckReport {
    let tolerance = REFERENCE_TOLERANCE * scale;
    let qs: Vec<f64> = if id.shape() == Shape::Family { config.family_qs.clone() } else { vec![0.0] };
    let mut worst = Worst::new();
    for &q in &qs {
        match formulas::sweep(id, q, config.formula_points) {
            Ok(sweep) => {
                worst.update(sweep.max_residual, sweep.worst_point);
            }
            Err(_) => worst.update(f64::INFINITY, 0.0),
        }
    }
    let grid = match id.shape() {
        Shape::Family => format!("{} points x q in {:?}", config.formula_points, qs),
        Shape::Binary => format!("{} points (u,v)=(0.55,0.35)*t*end", config.formula_points),
        Shape::Fixed => format!("{} points", config.formula_points),
    };
    worst.report(id.name(), grid, tolerance)
}

fn dixon_double_cos_check(points: usize, scale: f64) -> CheckReport {
    let pq = ParamPair::new(1.5, 3.0).expect("valid pair");
    let end = 0.5 * formulas::dixon_half_period();
    let mut worst = Worst::new();
    for x in interior_grid(ExtReal::Finite(end), end, points) {
        let residual = formulas::dixon_double(x)
            .and_then(|(_, cos)| Ok((cos - sincos_pq(&pq, 2.0 * x)?.cos).abs()));
        worst.update_result(residual, x);
    }
    worst.report("DIXON_DOUBLE_COS", format!("{points} points"), REFERENCE_TOLERANCE * scale)
}

/// Closed-form values at quarter periods.
pub fn special_values() -> Vec<(&'static str, ParamPair, SpecialKind, f64)> {
    let pair = |p, q| ParamPair::new(p, q).expect("valid pair");
    let sqrt3 = 3f64.sqrt();
    vec![
        ("SPECIAL_SINH_2_6", pair(2.0, 6.0), SpecialKind::Sinh(pair(1.5, 6.0)), 0.5f64.sqrt()),
        ("SPECIAL_SIN_3_2_6", pair(1.5, 6.0), SpecialKind::Sin, 3f64.powf(-1.0 / 3.0)),
        ("SPECIAL_SIN_3_6", pair(3.0, 6.0), SpecialKind::Sin, (3.0 - 2.0 * 2f64.sqrt()).cbrt()),
        ("SPECIAL_COS_6_5_3", pair(1.2, 3.0), SpecialKind::Cos, 3f64.powf(-5.0 / 3.0)),
        (
            "SPECIAL_SIN_3_2_2",
            pair(1.5, 2.0),
            SpecialKind::Sin,
            (135.0 + 78.0 * sqrt3 - 6.0 * (6.0 * (168.0 + 97.0 * sqrt3)).sqrt()).sqrt(),
        ),
    ]
}

/// Which function a special value refers to. `Sinh` carries the pair whose
/// quarter period is the argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialKind {
    Sin,
    Cos,
    Sinh(ParamPair),
}

fn special_value_check(name: &'static str, pq: ParamPair, kind: SpecialKind, expected: f64, scale: f64) -> CheckReport {
    let period_pair = match kind {
        SpecialKind::Sinh(other) => other,
        _ => pq,
    };
    let x = 0.5 * period_pair.half_period().to_f64();
    let value = match kind {
        SpecialKind::Sin => sincos_pq(&pq, x).map(|sc| sc.sin),
        SpecialKind::Cos => sincos_pq(&pq, x).map(|sc| sc.cos),
        SpecialKind::Sinh(_) => sinhcosh_pq(&pq, x).map(|sc| sc.sinh),
    };
    let residual = value.map(|v| (v - expected).abs()).unwrap_or(f64::INFINITY);
    CheckReport::new(name, format!("x = pi/4 of {period_pair}"), residual, x, REFERENCE_TOLERANCE * scale)
}

fn grid_label(config: &SuiteConfig) -> String {
    format!("{} pairs x {} points", config.param_grid.len(), config.identity_points)
}

fn pythagorean_trig(config: &SuiteConfig, scale: f64) -> CheckReport {
    let mut worst = Worst::new();
    for pq in &config.param_grid {
        for x in interior_grid(pq.half_period(), IDENTITY_WINDOW, config.identity_points) {
            let r = sincos_pq(pq, x).map(|sc| (sc.cos.powf(pq.p()) + sc.sin.powf(pq.q()) - 1.0).abs());
            worst.update_result(r, x);
        }
    }
    worst.report("PYTHAGOREAN_TRIG", grid_label(config), 1e-10 * scale)
}

fn pythagorean_hyp(config: &SuiteConfig, scale: f64) -> CheckReport {
    let mut worst = Worst::new();
    for pq in &config.param_grid {
        for x in interior_grid(pq.hyperbolic_half_period(), IDENTITY_WINDOW, config.identity_points) {
            let r = sinhcosh_pq(pq, x).map(|sc| {
                let cosh_p = sc.cosh.powf(pq.p());
                (cosh_p - sc.sinh.powf(pq.q()) - 1.0).abs() / cosh_p.max(1.0)
            });
            worst.update_result(r, x);
        }
    }
    worst.report("PYTHAGOREAN_HYP", format!("{}, relative to max(1, cosh^p)", grid_label(config)), 1e-10 * scale)
}

fn round_trip_sin(config: &SuiteConfig, scale: f64) -> CheckReport {
    let mut worst = Worst::new();
    for pq in &config.param_grid {
        for x in interior_grid(pq.half_period(), IDENTITY_WINDOW, config.identity_points) {
            let r = sincos_pq(pq, x).and_then(|sc| Ok(sc.residual.max((arcsin_pq(pq, sc.sin)?.value - x).abs())));
            worst.update_result(r, x);
        }
    }
    worst.report("ROUND_TRIP_SIN", grid_label(config), 1e-10 * scale)
}

fn round_trip_sinh(config: &SuiteConfig, scale: f64) -> CheckReport {
    let mut worst = Worst::new();
    for pq in &config.param_grid {
        for x in interior_grid(pq.hyperbolic_half_period(), IDENTITY_WINDOW, config.identity_points) {
            let r = sinhcosh_pq(pq, x).and_then(|sc| Ok(sc.residual.max((arsinh_pq(pq, sc.sinh)?.value - x).abs())));
            worst.update_result(r, x);
        }
    }
    worst.report("ROUND_TRIP_SINH", grid_label(config), 1e-10 * scale)
}

fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn duality_hyp_from_trig(config: &SuiteConfig, scale: f64) -> CheckReport {
    let mut worst = Worst::new();
    for pq in &config.param_grid {
        for x in interior_grid(pq.hyperbolic_half_period(), IDENTITY_WINDOW, config.identity_points) {
            let r = hyp_from_trig(pq, x)
                .and_then(|(s, c)| sinhcosh_pq(pq, x).map(|d| relative(s, d.sinh).max(relative(c, d.cosh))));
            worst.update_result(r, x);
        }
    }
    worst.report("DUALITY_HYP_FROM_TRIG", grid_label(config), REFERENCE_TOLERANCE * scale)
}

fn duality_trig_from_hyp(config: &SuiteConfig, scale: f64) -> CheckReport {
    let mut worst = Worst::new();
    for pq in &config.param_grid {
        for x in interior_grid(pq.half_period(), IDENTITY_WINDOW, config.identity_points) {
            let r = trig_from_hyp(pq, x)
                .and_then(|(s, c)| sincos_pq(pq, x).map(|d| relative(s, d.sin).max(relative(c, d.cos))));
            worst.update_result(r, x);
        }
    }
    worst.report("DUALITY_TRIG_FROM_HYP", grid_label(config), REFERENCE_TOLERANCE * scale)
}

fn duality_involution(config: &SuiteConfig, scale: f64) -> CheckReport {
    let mut worst = Worst::new();
    for pq in &config.param_grid {
        worst.update((pq.dual().dual().p() - pq.p()).abs(), pq.p());
    }
    worst.report("DUALITY_INVOLUTION", format!("{} pairs, |r(r(p)) - p|", config.param_grid.len()), 1e-12 * scale)
}

/// `q π_{p,q} = p* π_{q*,p*}` over the pairs with `p > 1`.
fn pi_conjugate(config: &SuiteConfig, scale: f64) -> CheckReport {
    let mut worst = Worst::new();
    for pq in &config.param_grid {
        let Some(p_star) = pq.p_star() else { continue };
        let q_star = pq.q() / (pq.q() - 1.0);
        let r = ParamPair::new(q_star, p_star).map(|other| {
            let lhs = pq.q() * 2.0 * pq.half_period().to_f64();
            let rhs = p_star * 2.0 * other.half_period().to_f64();
            relative(lhs, rhs)
        });
        worst.update_result(r, pq.p());
    }
    worst.report("PI_CONJUGATE", "pairs with p > 1, relative", 1e-10 * scale)
}

/// `π_{q/2,q} = π_{2q/(q+2),q} / 2^{2/q}`; both sides infinite for `q ≤ 2`.
fn pi_half_exponent(config: &SuiteConfig, scale: f64) -> CheckReport {
    let mut worst = Worst::new();
    for &q in &config.pi_relation_qs {
        let r = ParamPair::new(q / 2.0, q).and_then(|a| {
            let b = ParamPair::new(2.0 * q / (q + 2.0), q)?;
            Ok(match (a.half_period(), b.half_period()) {
                (ExtReal::Infinite, ExtReal::Infinite) => 0.0,
                (ExtReal::Finite(x), ExtReal::Finite(y)) => relative(x, y / formulas::scale_factor(q)),
                _ => f64::INFINITY,
            })
        });
        worst.update_result(r, q);
    }
    worst.report("PI_HALF_EXPONENT", format!("q in {:?}", config.pi_relation_qs), 1e-10 * scale)
}

fn build_checks(config: &SuiteConfig) -> Vec<Check<'_>> {
    let mut checks = Vec::new();
    if config.formula_points > 0 {
        for id in FormulaId::ALL {
            checks.push(Check::new(id.name(), move |scale| formula_check(id, config, scale)));
            if id == FormulaId::DixonDouble {
                checks.push(Check::new("DIXON_DOUBLE_COS", move |scale| {
                    dixon_double_cos_check(config.formula_points, scale)
                }));
            }
        }
    }
    if config.special_values {
        for (name, pq, kind, expected) in special_values() {
            checks.push(Check::new(name, move |scale| special_value_check(name, pq, kind, expected, scale)));
        }
    }
    if !config.param_grid.is_empty() && config.identity_points > 0 {
        checks.push(Check::new("PYTHAGOREAN_TRIG", move |s| pythagorean_trig(config, s)));
        checks.push(Check::new("PYTHAGOREAN_HYP", move |s| pythagorean_hyp(config, s)));
        checks.push(Check::new("ROUND_TRIP_SIN", move |s| round_trip_sin(config, s)));
        checks.push(Check::new("ROUND_TRIP_SINH", move |s| round_trip_sinh(config, s)));
        checks.push(Check::new("DUALITY_HYP_FROM_TRIG", move |s| duality_hyp_from_trig(config, s)));
        checks.push(Check::new("DUALITY_TRIG_FROM_HYP", move |s| duality_trig_from_hyp(config, s)));
    }
    if !config.param_grid.is_empty() {
        checks.push(Check::new("DUALITY_INVOLUTION", move |s| duality_involution(config, s)));
        checks.push(Check::new("PI_CONJUGATE", move |s| pi_conjugate(config, s)));
    }
    if !config.pi_relation_qs.is_empty() {
        checks.push(Check::new("PI_HALF_EXPONENT", move |s| pi_half_exponent(config, s)));
    }
    if config.inequality_points > 0 {
        for pq in &config.inequality_pairs {
            let n = config.inequality_points;
            checks.push(Check::new(format!("MAI{}", pair_label(pq)), move |_| check_mai(pq, n)));
        }
        for pq in &config.inequality_pairs {
            let n = config.inequality_points;
            checks.push(Check::new(format!("MAIH{}", pair_label(pq)), move |_| check_maih(pq, n)));
        }
    }
    for case in &config.ode_cases {
        let label = pair_label(&case.pq);
        checks.push(Check::new(format!("ODE{label}"), move |scale| ode::accuracy_check(case, config.ode_steps, scale)));
        checks.push(Check::new(format!("ODE_ORDER{label}"), move |_| ode::order_check(case)));
    }
    for case in &config.antiderivative_cases {
        checks.push(Check::new(format!("ANTIDERIV_SIN[{}]", case.q), move |scale| {
            check_antiderivatives(case.q, case.a, case.b).sin_report(REFERENCE_TOLERANCE * scale)
        }));
        checks.push(Check::new(format!("ANTIDERIV_COS[{}]", case.q), move |scale| {
            check_antiderivatives(case.q, case.a, case.b).cos_report(REFERENCE_TOLERANCE * scale)
        }));
    }
    checks
}

/// Names of the checks `config` would run, in canonical order.
pub fn check_names(config: &SuiteConfig) -> Vec<String> {
    build_checks(config).into_iter().map(|c| c.name).collect()
}

/// Runs the default suite at `tolerance`.
pub fn run_suite(tolerance: f64) -> Vec<CheckReport> {
    run_suite_with(&SuiteConfig::default(), tolerance, None)
}

/// Runs the checks of `config` whose names start with `filter`, in parallel.
/// Reports come back in canonical order regardless of scheduling.
pub fn run_suite_with(config: &SuiteConfig, tolerance: f64, filter: Option<&str>) -> Vec<CheckReport> {
    let scale = tolerance / REFERENCE_TOLERANCE;
    build_checks(config)
        .into_par_iter()
        .filter(|c| filter.map_or(true, |prefix| c.name.starts_with(prefix)))
        .map(|c| (c.run)(scale))
        .collect()
}

/// Number of passed and failed reports.
pub fn summary(reports: &[CheckReport]) -> (usize, usize) {
    let passed = reports.iter().filter(|r| r.passed).count();
    (passed, reports.len() - passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            formula_points: 10,
            param_grid: default_param_grid().into_iter().step_by(9).collect(),
            identity_points: 5,
            inequality_pairs: vec![ParamPair::new(2.0, 2.0).unwrap()],
            inequality_points: 10,
            ode_steps: 1000,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn empty_config_runs_nothing() {
        assert!(run_suite_with(&SuiteConfig::empty(), 1e-9, None).is_empty());
        assert!(check_names(&SuiteConfig::empty()).is_empty());
    }

    #[test]
    fn default_grid_is_large_enough() {
        let grid = default_param_grid();
        assert!(grid.len() >= 50);
        assert!(grid.iter().any(|pq| pq.p() <= 1.0) && grid.iter().any(|pq| pq.p() > 1.0));
    }

    #[test]
    fn filter_and_order() {
        let config = small();
        let names = check_names(&config);
        assert_eq!(names[0], "MAF1_SIN");
        let reports = run_suite_with(&config, 1e-9, None);
        let got: Vec<_> = reports.iter().map(|r| r.name.clone()).collect();
        assert_eq!(got, names);
        assert!(reports.iter().all(CheckReport::is_consistent));
        let special = run_suite_with(&config, 1e-9, Some("SPECIAL_"));
        assert_eq!(special.len(), 5);
        assert!(special.iter().all(|r| r.passed));
        assert!(run_suite_with(&config, 1e-9, Some("NO_SUCH_CHECK")).is_empty());
    }

    #[test]
    fn tolerance_rescales_nominal_values() {
        let config = small();
        let loose = run_suite_with(&config, 1e-9, Some("DUALITY_INVOLUTION"));
        let tight = run_suite_with(&config, 1e-12, Some("DUALITY_INVOLUTION"));
        assert_eq!(loose[0].tolerance, 1e-12);
        assert!((tight[0].tolerance - 1e-15).abs() < 1e-28);
    }

    #[test]
    fn nan_counts_as_worst() {
        let mut worst = Worst::new();
        worst.update(1.0, 0.1);
        worst.update(f64::NAN, 0.2);
        worst.update(2.0, 0.3);
        assert_eq!((worst.residual, worst.point), (f64::INFINITY, 0.2));
    }
}
