//! Antiderivatives of `1/sin_{2,q}` and `cos_{2,q}^{-2/q}` expressed through
//! the functions at `(q*, q)` and `(q/2, q)`.
//!
//! With `k = 2^{2/q}` the candidates are
//! `log τ_{q*,q}(·)` and `k · arcsin_{q/2,q}(τ_{q*,q}(·))`. Two argument
//! conventions are tested: `x/k` ([`Reading::Substitution`]) and `k·x`
//! ([`Reading::Printed`]). Each is compared with adaptive quadrature and with
//! a finite-difference derivative; the report prefers whichever reading
//! satisfies the derivative identity better.

use std::fmt;

use super::CheckReport;
use crate::formulas::scale_factor;
use crate::gtf::sincos_pq;
use crate::params::ParamPair;
use crate::quadrature::{arcsin_pq, gauss_kronrod};

const DERIVATIVE_POINTS: usize = 5;
const DERIVATIVE_STEP: f64 = 1e-5;

/// Argument convention for the candidate antiderivatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    /// Argument `x / 2^{2/q}`.
    Substitution,
    /// Argument `2^{2/q} x`.
    Printed,
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reading::Substitution => "x/2^(2/q)",
            Reading::Printed => "2^(2/q)*x",
        })
    }
}

/// Integrals over `[a, b]` predicted by one reading, and the worst relative
/// derivative residual over interior points. `None` where the reading leaves
/// the domain of the functions involved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReadingResult {
    pub sin_integral: Option<f64>,
    pub cos_integral: Option<f64>,
    pub derivative_residual: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiderivativeReport {
    pub q: f64,
    pub a: f64,
    pub b: f64,
    /// `∫_a^b dx / sin_{2,q} x` by quadrature.
    pub quadrature_sin: f64,
    /// `∫_a^b cos_{2,q}^{-2/q} x dx` by quadrature.
    pub quadrature_cos: f64,
    pub substitution: ReadingResult,
    pub printed: ReadingResult,
}

struct Candidates {
    conjugate: ParamPair,
    half: ParamPair,
    factor: f64,
}

impl Candidates {
    fn new(q: f64) -> Option<Self> {
        Some(Candidates {
            conjugate: ParamPair::new(q / (q - 1.0), q).ok()?,
            half: ParamPair::new(q / 2.0, q).ok()?,
            factor: scale_factor(q),
        })
    }

    fn argument(&self, reading: Reading, x: f64) -> f64 {
        match reading {
            Reading::Substitution => x / self.factor,
            Reading::Printed => x * self.factor,
        }
    }

    fn tau(&self, reading: Reading, x: f64) -> Option<f64> {
        let sc = sincos_pq(&self.conjugate, self.argument(reading, x)).ok()?;
        Some(sc.tau(&self.conjugate))
    }

    fn sin_antiderivative(&self, reading: Reading, x: f64) -> Option<f64> {
        Some(self.tau(reading, x)?.ln())
    }

    fn cos_antiderivative(&self, reading: Reading, x: f64) -> Option<f64> {
        let value = arcsin_pq(&self.half, self.tau(reading, x)?).ok()?.value;
        Some(self.factor * value)
    }
}

fn difference(f: impl Fn(f64) -> Option<f64>, a: f64, b: f64) -> Option<f64> {
    Some(f(b)? - f(a)?)
}

fn derivative_residual(
    antiderivative: impl Fn(f64) -> Option<f64>,
    integrand: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
) -> Option<f64> {
    let mut worst: f64 = 0.0;
    for i in 1..=DERIVATIVE_POINTS {
        let x = a + (b - a) * i as f64 / (DERIVATIVE_POINTS + 1) as f64;
        let h = DERIVATIVE_STEP * x;
        let slope = (antiderivative(x + h)? - antiderivative(x - h)?) / (2.0 * h);
        let exact = integrand(x);
        worst = worst.max((slope - exact).abs() / exact.abs());
    }
    Some(worst)
}

fn evaluate(c: &Candidates, reading: Reading, q: f64, a: f64, b: f64) -> ReadingResult {
    let sin_integrand = |x| sin_integrand(q, x);
    let cos_integrand = |x| cos_integrand(q, x);
    let derivative_residual = derivative_residual(|x| c.sin_antiderivative(reading, x), sin_integrand, a, b)
        .zip(derivative_residual(|x| c.cos_antiderivative(reading, x), cos_integrand, a, b))
        .map(|(s, t)| s.max(t));
    ReadingResult {
        sin_integral: difference(|x| c.sin_antiderivative(reading, x), a, b),
        cos_integral: difference(|x| c.cos_antiderivative(reading, x), a, b),
        derivative_residual,
    }
}

fn sin_integrand(q: f64, x: f64) -> f64 {
    ParamPair::new(2.0, q).and_then(|pq| sincos_pq(&pq, x)).map_or(f64::NAN, |sc| 1.0 / sc.sin)
}

fn cos_integrand(q: f64, x: f64) -> f64 {
    // cos_{2,q}^{-2/q} = (1 - sin^q)^{-1/q}
    ParamPair::new(2.0, q).and_then(|pq| sincos_pq(&pq, x)).map_or(f64::NAN, |sc| sc.complement.powf(-1.0 / q))
}

/// Compares quadrature on `[a, b]` with both readings of the antiderivatives.
/// Requires `q > 1` and `0 < a < b < π_{2,q}/2`; otherwise the integrals are
/// NaN and the derived reports fail.
pub fn check_antiderivatives(q: f64, a: f64, b: f64) -> AntiderivativeReport {
    let quad = |f: &dyn Fn(f64) -> f64| gauss_kronrod(f, a, b, 0.0, 1e-14).value;
    let quadrature_sin = quad(&|x| sin_integrand(q, x));
    let quadrature_cos = quad(&|x| cos_integrand(q, x));
    let missing = ReadingResult { sin_integral: None, cos_integral: None, derivative_residual: None };
    let (substitution, printed) = match Candidates::new(q) {
        Some(c) if 0.0 < a && a < b => (evaluate(&c, Reading::Substitution, q, a, b), evaluate(&c, Reading::Printed, q, a, b)),
        _ => (missing, missing),
    };
    AntiderivativeReport { q, a, b, quadrature_sin, quadrature_cos, substitution, printed }
}

impl AntiderivativeReport {
    /// The reading with the smaller derivative residual; ties and missing
    /// values favour [`Reading::Substitution`].
    pub fn preferred(&self) -> Reading {
        match (self.substitution.derivative_residual, self.printed.derivative_residual) {
            (Some(s), Some(p)) if p < s => Reading::Printed,
            (None, Some(_)) => Reading::Printed,
            _ => Reading::Substitution,
        }
    }

    pub fn reading(&self, reading: Reading) -> &ReadingResult {
        match reading {
            Reading::Substitution => &self.substitution,
            Reading::Printed => &self.printed,
        }
    }

    fn report(&self, name: &str, quadrature: f64, closed: Option<f64>, tolerance: f64) -> CheckReport {
        let reading = self.preferred();
        let residual = closed.map_or(f64::INFINITY, |c| (quadrature - c).abs() / c.abs().max(1.0));
        let derivative = self.reading(reading).derivative_residual.unwrap_or(f64::INFINITY);
        CheckReport::new(
            format!("{name}[{}]", self.q),
            format!("[{}, {}], argument {reading}, derivative residual {derivative:.1e}", self.a, self.b),
            if residual.is_nan() { f64::INFINITY } else { residual },
            self.b,
            tolerance,
        )
    }

    /// Quadrature against the preferred reading for `1/sin_{2,q}`.
    pub fn sin_report(&self, tolerance: f64) -> CheckReport {
        self.report("ANTIDERIV_SIN", self.quadrature_sin, self.reading(self.preferred()).sin_integral, tolerance)
    }

    /// Quadrature against the preferred reading for `cos_{2,q}^{-2/q}`.
    pub fn cos_report(&self, tolerance: f64) -> CheckReport {
        self.report("ANTIDERIV_COS", self.quadrature_cos, self.reading(self.preferred()).cos_integral, tolerance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_case() {
        let r = check_antiderivatives(2.0, 0.5, 1.0);
        let expected = (0.5f64).tan().ln() - (0.25f64).tan().ln();
        assert!((r.quadrature_sin - expected).abs() < 1e-13);
        assert_eq!(r.preferred(), Reading::Substitution);
        assert!((r.substitution.sin_integral.unwrap() - expected).abs() < 1e-13);
        assert!(r.sin_report(1e-9).passed);
        assert!(r.cos_report(1e-9).passed);
    }

    #[test]
    fn quartic_case() {
        let r = check_antiderivatives(4.0, 0.3, 0.7);
        assert_eq!(r.preferred(), Reading::Substitution);
        assert!(r.substitution.derivative_residual.unwrap() < 1e-6);
        assert!(r.sin_report(1e-8).passed);
        assert!(r.cos_report(1e-8).passed);
    }

    #[test]
    fn invalid_input_fails_the_report() {
        let r = check_antiderivatives(4.0, 0.7, 0.3);
        assert!(!r.sin_report(1e-9).passed);
    }
}
