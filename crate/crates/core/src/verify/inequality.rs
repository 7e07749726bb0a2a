//! Mitrinović–Adamović type inequalities
//! `cos^{1/(q+1)} x < sin x / x < 1` and
//! `cosh^{1/(q+1)} x < sinh x / x < cosh^{p/q} x`.
//!
//! Margins are relative: for `a < b` the margin is `b/a - 1`, computed from
//! logarithms so that large hyperbolic values cannot overflow. A report's
//! residual is the largest negated margin, so the check passes when no margin
//! falls below `-STRICTNESS_MARGIN`. Margins within `STRICTNESS_MARGIN` of
//! zero are counted as indeterminate. Near the origin the lower margin decays
//! like `x^{2q}`, so small grid points at large `q` land there.

use super::{CheckReport, Worst};
use crate::gtf::{sincos_pq, sinhcosh_pq};
use crate::params::{ExtReal, ParamPair};

pub const STRICTNESS_MARGIN: f64 = 1e-13;

const LOG_WINDOW: (f64, f64) = (1e-2, 10.0);

/// Interior points of `(0, end)`: linear `end·i/(n+1)` on a finite interval,
/// logarithmically spaced over `[0.01, 10]` otherwise.
pub fn inequality_grid(end: ExtReal, n: usize) -> Vec<f64> {
    match end {
        ExtReal::Finite(end) => (1..=n).map(|i| end * i as f64 / (n + 1) as f64).collect(),
        ExtReal::Infinite => {
            let (lo, hi) = (LOG_WINDOW.0.ln(), LOG_WINDOW.1.ln());
            let last = n.saturating_sub(1).max(1) as f64;
            (0..n).map(|i| (lo + (hi - lo) * i as f64 / last).exp()).collect()
        }
    }
}

fn grid_spec(end: ExtReal, n: usize) -> String {
    match end {
        ExtReal::Finite(end) => format!("{n} points linear on (0, {end})"),
        ExtReal::Infinite => format!("{n} points log-spaced on [{}, {}]", LOG_WINDOW.0, LOG_WINDOW.1),
    }
}

fn tally(name: String, end: ExtReal, n: usize, margins: impl Iterator<Item = (f64, Option<f64>)>) -> CheckReport {
    let mut worst = Worst::new();
    let mut indeterminate = 0;
    for (x, margin) in margins {
        let margin = margin.unwrap_or(f64::NEG_INFINITY);
        if margin.abs() <= STRICTNESS_MARGIN {
            indeterminate += 1;
        }
        worst.update(-margin, x);
    }
    let mut report = worst.report(name, grid_spec(end, n), STRICTNESS_MARGIN);
    report.indeterminate = indeterminate;
    report
}

fn label(pq: &ParamPair) -> String {
    format!("[{},{}]", pq.p(), pq.q())
}

/// Checks `cos^{1/(q+1)} x < sin x / x < 1` on `(0, π_{p,q}/2)`.
pub fn check_mai(pq: &ParamPair, n_points: usize) -> CheckReport {
    let end = pq.half_period();
    let q = pq.q();
    let margins = inequality_grid(end, n_points).into_iter().flat_map(move |x| {
        let (lower, upper) = match sincos_pq(pq, x) {
            Ok(sc) => {
                let log_ratio = (sc.sin / x).ln();
                let log_cos = sc.complement.ln() / pq.p();
                (Some((log_ratio - log_cos / (q + 1.0)).exp_m1()), Some((-log_ratio).exp_m1()))
            }
            Err(_) => (None, None),
        };
        [(x, lower), (x, upper)]
    });
    tally(format!("MAI{}", label(pq)), end, n_points, margins)
}

/// Checks `cosh^{1/(q+1)} x < sinh x / x < cosh^{p/q} x` on `(0, π_{r,q}/2)`.
pub fn check_maih(pq: &ParamPair, n_points: usize) -> CheckReport {
    let end = pq.hyperbolic_half_period();
    let (p, q) = (pq.p(), pq.q());
    let margins = inequality_grid(end, n_points).into_iter().flat_map(move |x| {
        let (lower, upper) = match sinhcosh_pq(pq, x) {
            Ok(sh) => {
                let log_ratio = sh.sinh.ln() - x.ln();
                let log_cosh = sh.log1p_power / p;
                (
                    Some((log_ratio - log_cosh / (q + 1.0)).exp_m1()),
                    Some((log_cosh * p / q - log_ratio).exp_m1()),
                )
            }
            Err(_) => (None, None),
        };
        [(x, lower), (x, upper)]
    });
    tally(format!("MAIH{}", label(pq)), end, n_points, margins)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_circle() {
        let report = check_mai(&ParamPair::new(2.0, 2.0).unwrap(), 50);
        assert!(report.passed, "{report}");
        assert_eq!(report.name, "MAI[2,2]");
        assert!(report.max_residual < 0.0);
    }

    #[test]
    fn tanh_case_on_log_window() {
        let pq = ParamPair::new(1.0, 2.0).unwrap();
        let grid = inequality_grid(pq.half_period(), 20);
        assert!((grid[0] - 0.01).abs() < 1e-15 && (grid[19] - 10.0).abs() < 1e-12);
        assert!(check_mai(&pq, 20).passed);
    }

    #[test]
    fn classical_hyperbolic() {
        let report = check_maih(&ParamPair::new(2.0, 2.0).unwrap(), 40);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn sampled_pairs() {
        for (p, q) in [(1.5, 6.0), (1.5, 3.0), (0.85, 4.0), (5.0, 1.25)] {
            let pq = ParamPair::new(p, q).unwrap();
            assert!(check_mai(&pq, 30).passed);
            assert!(check_maih(&pq, 30).passed);
        }
    }
}
