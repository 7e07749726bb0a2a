//! The generalized trigonometric and hyperbolic functions, obtained by
//! inverting [`arcsin_pq`](crate::quadrature::arcsin_pq) and
//! [`arsinh_pq`](crate::quadrature::arsinh_pq).
//!
//! Arguments below the value of the integral at the split point are inverted
//! directly in `y`. Larger arguments are inverted in a logarithmic variable
//! tied to the distance from the singular end (`1 - y` for the sine,
//! `1/y` for the hyperbolic sine), which keeps the complements `1 - y^q` and
//! `1 + y^q` accurate where `y` itself has run out of digits. The cosines are
//! computed from those complements rather than from `y`.

use crate::error::{Error, Result};
use crate::params::ParamPair;
use crate::quadrature::{
    complement_power, sine_head, sine_integrand_at_complement, sine_mid, sine_tail, sinh_head,
    sinh_integrand_at_reciprocal, sinh_mid, sinh_tail,
};
use crate::roots::{newton_bracketed, Root};

/// Arguments closer than this to the end of the domain are rejected.
pub const SINGULAR_END_MARGIN: f64 = 1e-12;

/// Accepted inversion residual, relative to `1 + |x|`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-11;

/// Largest `f64` below one; the sine is capped here when `1 - w` rounds up.
const ONE_BELOW: f64 = 1.0 - f64::EPSILON / 2.0;

/// Smallest `ln w` with `w = exp(ln w)` still positive.
const LN_MIN_SUBNORMAL: f64 = -745.0;

/// A function value with the residual of the inversion that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// `|∫ - x|` at the solution, in the integral that was inverted.
    pub residual: f64,
    pub iterations: usize,
}

/// `sin_{p,q}` and everything derived from the same inversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinCos {
    pub sin: f64,
    pub cos: f64,
    /// `1 - sin^q`, accurate even when `sin` rounds to its cap below one.
    pub complement: f64,
    pub residual: f64,
    pub iterations: usize,
}

impl SinCos {
    pub fn tan(&self) -> f64 {
        self.sin / self.cos
    }

    /// `sin / cos^{p/q} = sin / (1 - sin^q)^{1/q}`.
    pub fn tau(&self, pq: &ParamPair) -> f64 {
        self.sin / self.complement.powf(1.0 / pq.q())
    }

    fn eval(&self, value: f64) -> EvalResult {
        EvalResult { value, residual: self.residual, iterations: self.iterations }
    }
}

/// `sinh_{p,q}` and `cosh_{p,q}` from one inversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinhCosh {
    pub sinh: f64,
    pub cosh: f64,
    /// `ln(1 + sinh^q)`, so that `cosh = exp(log1p_power / p)`.
    pub log1p_power: f64,
    pub residual: f64,
    pub iterations: usize,
}

impl SinhCosh {
    fn eval(&self, value: f64) -> EvalResult {
        EvalResult { value, residual: self.residual, iterations: self.iterations }
    }
}

fn check_argument(x: f64, end: Option<f64>, what: &str) -> Result<()> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(x, format!("{what} needs a finite argument x >= 0")));
    }
    if let Some(end) = end {
        if x >= end - SINGULAR_END_MARGIN {
            return Err(Error::domain(x, format!("{what} needs x below the half-period {end}")));
        }
    }
    Ok(())
}

fn accept(x: f64, best: f64, residual: f64, iterations: usize) -> Result<()> {
    if residual <= RESIDUAL_TOLERANCE * (1.0 + x.abs()) {
        Ok(())
    } else {
        Err(Error::Convergence { best, residual, iterations })
    }
}

/// Solves `ln I(z) = ln target` for an increasing integral `I`, returning the
/// root and `|I(z) - target|`.
fn solve_log<F>(mut integral_and_slope: F, target: f64, lo: f64, hi: f64, guess: f64) -> (Root, f64)
where
    F: FnMut(f64) -> (f64, f64),
{
    let ln_target = target.ln();
    let root = newton_bracketed(
        |z| {
            let (value, slope) = integral_and_slope(z);
            (value.ln() - ln_target, slope / value)
        },
        lo,
        hi,
        guess,
    );
    let residual = target * root.value.exp_m1().abs();
    (root, residual)
}

/// Evaluates `sin_{p,q} x` together with `cos_{p,q} x` and `1 - sin^q`.
pub fn sincos_pq(pq: &ParamPair, x: f64) -> Result<SinCos> {
    check_argument(x, pq.half_period().as_finite(), "sin_pq")?;
    let (p, q) = (pq.p(), pq.q());
    if x == 0.0 {
        return Ok(SinCos { sin: 0.0, cos: 1.0, complement: 1.0, residual: 0.0, iterations: 0 });
    }
    let head_end = sine_head(pq, 0.5).value;

    let (sin, complement, residual, iterations) = if x <= head_end {
        let root = newton_bracketed(
            |y| (sine_head(pq, y).value - x, (-(q * y.ln()).exp_m1()).powf(-1.0 / p)),
            0.0,
            0.5,
            x * 0.5 / head_end,
        );
        let y = root.point;
        (y, -(q * y.ln()).exp_m1(), root.value.abs(), root.iterations)
    } else {
        let slope = |w: f64| w * sine_integrand_at_complement(pq, w);
        let (w, residual, iterations) = match pq.p_star() {
            Some(k) => {
                let total = head_end + sine_tail(pq, 0.5).value;
                let target = total - x;
                if !(target > 0.0) {
                    return Err(Error::domain(x, "sin_pq argument at the end of the domain"));
                }
                let guess = k * (target / k).ln() + k * q.ln() / p;
                let (root, residual) = solve_log(
                    |lam| {
                        let w = lam.exp();
                        (sine_tail(pq, w).value, slope(w))
                    },
                    target,
                    LN_MIN_SUBNORMAL,
                    -std::f64::consts::LN_2,
                    guess,
                );
                if root.point <= LN_MIN_SUBNORMAL && root.value > 0.0 {
                    return Err(Error::domain(x, "1 - sin_pq underflows"));
                }
                (root.point.exp(), residual, root.iterations)
            }
            None => {
                let target = x - head_end;
                let excess = 1.0 / p - 1.0;
                let guess = if excess > 1e-3 {
                    (target * excess * q.powf(1.0 / p)).ln() / excess
                } else {
                    target * q + std::f64::consts::LN_2
                };
                let (root, residual) = solve_log(
                    |mu| {
                        let w = (-mu).exp();
                        (sine_mid(pq, w).value, slope(w))
                    },
                    target,
                    std::f64::consts::LN_2,
                    -LN_MIN_SUBNORMAL,
                    guess,
                );
                if root.point >= -LN_MIN_SUBNORMAL && root.value < 0.0 {
                    return Err(Error::domain(x, "1 - sin_pq underflows"));
                }
                ((-root.point).exp(), residual, root.iterations)
            }
        };
        ((1.0 - w).min(ONE_BELOW), complement_power(q, w), residual, iterations)
    };

    accept(x, sin, residual, iterations)?;
    Ok(SinCos { sin, cos: complement.powf(1.0 / p), complement, residual, iterations })
}

/// Evaluates `sinh_{p,q} x` together with `cosh_{p,q} x`.
pub fn sinhcosh_pq(pq: &ParamPair, x: f64) -> Result<SinhCosh> {
    check_argument(x, pq.hyperbolic_half_period().as_finite(), "sinh_pq")?;
    let (p, q) = (pq.p(), pq.q());
    if x == 0.0 {
        return Ok(SinhCosh { sinh: 0.0, cosh: 1.0, log1p_power: 0.0, residual: 0.0, iterations: 0 });
    }
    let head_end = sinh_head(pq, 1.0).value;
    let ln_max = f64::MAX.ln();

    let (sinh, log1p_power, residual, iterations) = if x <= head_end {
        let root = newton_bracketed(
            |y| (sinh_head(pq, y).value - x, (-(y.powf(q)).ln_1p() / p).exp()),
            0.0,
            1.0,
            x / head_end,
        );
        let y = root.point;
        (y, y.powf(q).ln_1p(), root.value.abs(), root.iterations)
    } else {
        let slope = |v: f64| v * sinh_integrand_at_reciprocal(pq, v);
        if p < q {
            let total = head_end + sinh_tail(pq, 1.0).value;
            let target = total - x;
            if !(target > 0.0) {
                return Err(Error::domain(x, "sinh_pq argument at the end of the domain"));
            }
            let k = p / (q - p);
            let (root, residual) = solve_log(
                |lam| {
                    let v = lam.exp();
                    (sinh_tail(pq, v).value, slope(v))
                },
                target,
                -ln_max,
                0.0,
                k * (target / k).ln(),
            );
            let lam = root.point;
            if lam <= -ln_max && root.value > 0.0 {
                return Err(Error::domain(x, "sinh_pq overflows"));
            }
            ((-lam).exp(), -q * lam + (q * lam).exp().ln_1p(), residual, root.iterations)
        } else {
            let target = x - head_end;
            let decay = 1.0 - q / p;
            let guess = if decay > 1e-3 { (decay * target).ln_1p() / decay } else { target };
            let (root, residual) = solve_log(
                |mu| {
                    let v = (-mu).exp();
                    (sinh_mid(pq, v).value, slope(v))
                },
                target,
                0.0,
                ln_max,
                guess,
            );
            let mu = root.point;
            if mu >= ln_max && root.value < 0.0 {
                return Err(Error::domain(x, "sinh_pq overflows"));
            }
            (mu.exp(), q * mu + (-q * mu).exp().ln_1p(), residual, root.iterations)
        }
    };

    accept(x, sinh, residual, iterations)?;
    Ok(SinhCosh { sinh, cosh: (log1p_power / p).exp(), log1p_power, residual, iterations })
}

/// `sin_{p,q} x` for `0 ≤ x < π_{p,q}/2`.
pub fn sin_pq(pq: &ParamPair, x: f64) -> Result<EvalResult> {
    sincos_pq(pq, x).map(|sc| sc.eval(sc.sin))
}

/// `cos_{p,q} x = (1 - sin_{p,q}^q x)^{1/p}`, the derivative of `sin_{p,q}`.
pub fn cos_pq(pq: &ParamPair, x: f64) -> Result<EvalResult> {
    sincos_pq(pq, x).map(|sc| sc.eval(sc.cos))
}

/// `tan_{p,q} x = sin_{p,q} x / cos_{p,q} x`.
pub fn tan_pq(pq: &ParamPair, x: f64) -> Result<EvalResult> {
    sincos_pq(pq, x).map(|sc| sc.eval(sc.tan()))
}

/// `τ_{p,q}(x) = sin_{p,q} x / cos_{p,q}^{p/q} x`.
pub fn tau_pq(pq: &ParamPair, x: f64) -> Result<EvalResult> {
    sincos_pq(pq, x).map(|sc| sc.eval(sc.tau(pq)))
}

/// `sinh_{p,q} x` for `0 ≤ x < π_{r,q}/2`.
pub fn sinh_pq(pq: &ParamPair, x: f64) -> Result<EvalResult> {
    sinhcosh_pq(pq, x).map(|sc| sc.eval(sc.sinh))
}

/// `cosh_{p,q} x = (1 + sinh_{p,q}^q x)^{1/p}`.
pub fn cosh_pq(pq: &ParamPair, x: f64) -> Result<EvalResult> {
    sinhcosh_pq(pq, x).map(|sc| sc.eval(sc.cosh))
}
