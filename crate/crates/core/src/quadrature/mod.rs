//! Numerical evaluation of the integrals inverted by the generalized
//! trigonometric and hyperbolic functions:
//!
//! * `arcsin_pq(y) = ∫_0^y (1 - t^q)^{-1/p} dt` for `0 ≤ y < 1`,
//! * `arsinh_pq(y) = ∫_0^y (1 + t^q)^{-1/p} dt` for `y ≥ 0`.
//!
//! Each integral is split at a fixed point and every piece is rewritten so
//! that the quadrature sees a bounded integrand:
//!
//! * near `t = 1` the sine integral is taken in the complement `u = 1 - t`,
//!   with `1 - (1-u)^q` evaluated as `-expm1(q·ln_1p(-u))`. For `p > 1` the
//!   power substitution `u = v^{p*}` cancels the `u^{-1/p}` singularity; for
//!   `p ≤ 1` the integral is taken in `ln u`.
//! * beyond `t = 1` the hyperbolic integral is taken in `u = 1/t`, again with
//!   a power substitution when the tail converges (`p < q`) and in `ln u`
//!   otherwise.
//!
//! The pieces are exposed to the crate so the inverse functions can solve in
//! whichever variable keeps the problem well conditioned.

mod gamma;
mod kronrod;
mod tanh_sinh;

use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::params::{ExtReal, ParamPair};

pub use gamma::{ln_gamma, log_beta};
pub use kronrod::integrate as gauss_kronrod;
pub use tanh_sinh::integrate as double_exponential;

/// Outcome of a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

impl QuadResult {
    const ZERO: QuadResult = QuadResult { value: 0.0, abs_error_estimate: 0.0, evaluations: 1 };

    fn plus(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            abs_error_estimate: self.abs_error_estimate + other.abs_error_estimate,
            evaluations: self.evaluations + other.evaluations,
        }
    }

    fn scaled(self, factor: f64) -> QuadResult {
        QuadResult {
            value: self.value * factor,
            abs_error_estimate: self.abs_error_estimate * factor.abs(),
            evaluations: self.evaluations,
        }
    }
}

const PIECE_TOL: f64 = 2e-14;

/// Tanh-sinh first; if it stops at the level cap without meeting the
/// tolerance, adaptive Gauss–Kronrod gets a chance and the result with the
/// smaller error estimate wins.
fn integrate_piece<F>(mut f: F, a: f64, b: f64) -> QuadResult
where
    F: FnMut(f64, f64, f64) -> f64,
{
    let primary = tanh_sinh::integrate(&mut f, a, b, PIECE_TOL, PIECE_TOL);
    if primary.abs_error_estimate <= PIECE_TOL * (1.0 + primary.value.abs()) {
        return primary;
    }
    let fallback = kronrod::integrate(|t| f(t, t - a, b - t), a, b, PIECE_TOL, PIECE_TOL);
    let evaluations = primary.evaluations + fallback.evaluations;
    let best = if fallback.abs_error_estimate < primary.abs_error_estimate { fallback } else { primary };
    QuadResult { evaluations, ..best }
}

/// Below this `u` the first-order series of [`complement_ratio`] is exact in
/// double precision, and the direct quotient would lose digits to subnormals.
const SERIES_THRESHOLD: f64 = 1e-150;

/// `(1 - (1-u)^q) / u`, continuous at `u = 0` with value `q`.
pub(crate) fn complement_ratio(q: f64, u: f64) -> f64 {
    if u < SERIES_THRESHOLD {
        q * (1.0 - 0.5 * (q - 1.0) * u)
    } else {
        -(q * (-u).ln_1p()).exp_m1() / u
    }
}

/// `1 - (1-u)^q` without cancellation.
pub(crate) fn complement_power(q: f64, u: f64) -> f64 {
    -(q * (-u).ln_1p()).exp_m1()
}

/// `∫_0^y (1 - t^q)^{-1/p} dt` for `0 ≤ y ≤ 1/2`.
pub(crate) fn sine_head(pq: &ParamPair, y: f64) -> QuadResult {
    let (p, q) = (pq.p(), pq.q());
    integrate_piece(|_, t, _| (-(q * t.ln()).exp_m1()).powf(-1.0 / p), 0.0, y)
}

/// `∫_{1-w}^1 (1 - t^q)^{-1/p} dt` for `p > 1`, `0 ≤ w ≤ 1/2`.
pub(crate) fn sine_tail(pq: &ParamPair, w: f64) -> QuadResult {
    let (p, q) = (pq.p(), pq.q());
    let k = pq.p_star().expect("sine tail needs p > 1");
    if w == 0.0 {
        return QuadResult::ZERO;
    }
    integrate_piece(|_, v, _| complement_ratio(q, v.powf(k)).powf(-1.0 / p), 0.0, w.powf(1.0 / k)).scaled(k)
}

/// `∫_{1/2}^{1-w} (1 - t^q)^{-1/p} dt` for `0 < w ≤ 1/2`.
pub(crate) fn sine_mid(pq: &ParamPair, w: f64) -> QuadResult {
    let (p, q) = (pq.p(), pq.q());
    if w >= 0.5 {
        return QuadResult::ZERO;
    }
    match pq.p_star() {
        Some(k) => integrate_piece(
            |v, _, _| complement_ratio(q, v.powf(k)).powf(-1.0 / p),
            w.powf(1.0 / k),
            0.5f64.powf(1.0 / k),
        )
        .scaled(k),
        None => {
            let rate = 1.0 - 1.0 / p;
            integrate_piece(
                |s, _, _| (rate * s).exp() * complement_ratio(q, s.exp()).powf(-1.0 / p),
                w.ln(),
                -LN_2,
            )
        }
    }
}

/// The sine integrand `(1 - t^q)^{-1/p}` written in the complement `w = 1 - t`.
pub(crate) fn sine_integrand_at_complement(pq: &ParamPair, w: f64) -> f64 {
    complement_power(pq.q(), w).powf(-1.0 / pq.p())
}

/// `∫_0^y (1 + t^q)^{-1/p} dt` for `0 ≤ y ≤ 1`.
pub(crate) fn sinh_head(pq: &ParamPair, y: f64) -> QuadResult {
    let (p, q) = (pq.p(), pq.q());
    integrate_piece(|_, t, _| (-(t.powf(q)).ln_1p() / p).exp(), 0.0, y)
}

/// Exponent `p/(q-p)` of the substitution that smooths the hyperbolic tail.
fn sinh_tail_exponent(pq: &ParamPair) -> Option<f64> {
    (pq.p() < pq.q()).then(|| pq.p() / (pq.q() - pq.p()))
}

/// `∫_{1/v}^∞ (1 + t^q)^{-1/p} dt` for `p < q`, `0 ≤ v ≤ 1`.
pub(crate) fn sinh_tail(pq: &ParamPair, v: f64) -> QuadResult {
    let (p, q) = (pq.p(), pq.q());
    let k = sinh_tail_exponent(pq).expect("hyperbolic tail needs p < q");
    if v == 0.0 {
        return QuadResult::ZERO;
    }
    integrate_piece(|_, z, _| (-(z.powf(k * q)).ln_1p() / p).exp(), 0.0, v.powf(1.0 / k)).scaled(k)
}

/// `∫_1^{1/v} (1 + t^q)^{-1/p} dt` for `0 < v ≤ 1`.
pub(crate) fn sinh_mid(pq: &ParamPair, v: f64) -> QuadResult {
    let (p, q) = (pq.p(), pq.q());
    if v >= 1.0 {
        return QuadResult::ZERO;
    }
    match sinh_tail_exponent(pq) {
        Some(k) => integrate_piece(|z, _, _| (-(z.powf(k * q)).ln_1p() / p).exp(), v.powf(1.0 / k), 1.0).scaled(k),
        None => {
            let rate = q / p - 1.0;
            integrate_piece(|s, _, _| (rate * s - (q * s).exp().ln_1p() / p).exp(), v.ln(), 0.0)
        }
    }
}

/// The tail integrand in `u = 1/t`: `u^{q/p-2} (1 + u^q)^{-1/p}`.
pub(crate) fn sinh_integrand_at_reciprocal(pq: &ParamPair, v: f64) -> f64 {
    let (p, q) = (pq.p(), pq.q());
    ((q / p - 2.0) * v.ln() - (v.powf(q)).ln_1p() / p).exp()
}

/// `∫_0^y (1 - t^q)^{-1/p} dt`, the inverse of `sin_{p,q}`.
pub fn arcsin_pq(pq: &ParamPair, y: f64) -> Result<QuadResult> {
    if !(0.0..1.0).contains(&y) {
        return Err(Error::domain(y, "arcsine integral needs 0 <= y < 1"));
    }
    if y == 0.0 {
        return Ok(QuadResult { value: 0.0, abs_error_estimate: 0.0, evaluations: 0 });
    }
    if y <= 0.5 {
        return Ok(sine_head(pq, y));
    }
    Ok(sine_head(pq, 0.5).plus(sine_mid(pq, 1.0 - y)))
}

/// `∫_0^1 (1 - t^q)^{-1/p} dt`, computed by quadrature. Finite exactly when
/// `p > 1`, where it equals the half-period.
pub fn arcsin_to_one(pq: &ParamPair) -> ExtReal {
    if pq.p_star().is_none() {
        return ExtReal::Infinite;
    }
    let total = sine_head(pq, 0.5).plus(sine_tail(pq, 0.5));
    ExtReal::finite(total.value).unwrap_or(ExtReal::Infinite)
}

/// `∫_0^y (1 + t^q)^{-1/p} dt`, the inverse of `sinh_{p,q}`.
pub fn arsinh_pq(pq: &ParamPair, y: f64) -> Result<QuadResult> {
    if !(y >= 0.0) || !y.is_finite() {
        return Err(Error::domain(y, "hyperbolic integral needs finite y >= 0"));
    }
    if y == 0.0 {
        return Ok(QuadResult { value: 0.0, abs_error_estimate: 0.0, evaluations: 0 });
    }
    if y <= 1.0 {
        return Ok(sinh_head(pq, y));
    }
    Ok(sinh_head(pq, 1.0).plus(sinh_mid(pq, 1.0 / y)))
}

/// `∫_0^∞ (1 + t^q)^{-1/p} dt` by quadrature; finite exactly when `p < q`.
pub fn arsinh_to_infinity(pq: &ParamPair) -> ExtReal {
    if sinh_tail_exponent(pq).is_none() {
        return ExtReal::Infinite;
    }
    let total = sinh_head(pq, 1.0).plus(sinh_tail(pq, 1.0));
    ExtReal::finite(total.value).unwrap_or(ExtReal::Infinite)
}
