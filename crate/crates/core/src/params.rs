//! Exponent pairs `(p, q)` and the quantities derived from them.
//!
//! Every function in the crate takes a [`ParamPair`], which can only be built
//! for `q > 1` and `p > q/(q+1)`. Within that range the generalized sine is
//! defined on `[0, π_{p,q}/2)`, where the half-period is finite exactly when
//! `p > 1`; the generalized hyperbolic sine lives on `[0, π_{r,q}/2)` with `r`
//! the dual exponent given by [`r_map`].

use std::fmt;

use crate::error::{Error, Result};
use crate::quadrature::log_beta;

/// A validated exponent pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPair {
    p: f64,
    q: f64,
}

impl ParamPair {
    /// Builds the pair, rejecting anything outside `q > 1`, `p > q/(q+1)`.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() {
            return Err(Error::InvalidParams { p, q, reason: "exponents must be finite" });
        }
        if q <= 1.0 {
            return Err(Error::InvalidParams { p, q, reason: "q must exceed 1" });
        }
        if p <= q / (q + 1.0) {
            return Err(Error::InvalidParams { p, q, reason: "p must exceed q/(q+1)" });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Hölder conjugate of `p`, defined only for `p > 1`.
    pub fn p_star(&self) -> Option<f64> {
        conjugate(self.p).ok()
    }

    /// The dual exponent `r` with `1/p + 1/r = 1 + 1/q`.
    pub fn r(&self) -> f64 {
        r_map(self)
    }

    /// The pair `(r, q)`. Applying this twice returns the original pair up to
    /// rounding.
    pub fn dual(&self) -> Self {
        let r = self.r();
        // r > q/(q+1) holds exactly whenever p does; guard only against the last ulp.
        let floor = self.q / (self.q + 1.0);
        let r = if r > floor { r } else { floor * (1.0 + f64::EPSILON) };
        Self { p: r, q: self.q }
    }

    /// `π_{p,q}/2`, the right end of the domain of `sin_{p,q}`.
    pub fn half_period(&self) -> ExtReal {
        half_period(self)
    }

    /// `π_{r,q}/2`, the right end of the domain of `sinh_{p,q}`.
    pub fn hyperbolic_half_period(&self) -> ExtReal {
        half_period(&self.dual())
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// A positive real number or `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinite,
}

impl ExtReal {
    /// Wraps a finite positive value; anything else is rejected.
    pub fn finite(value: f64) -> Option<Self> {
        (value.is_finite() && value > 0.0).then_some(ExtReal::Finite(value))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    /// The value as an `f64`, mapping `Infinite` to `f64::INFINITY`.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtReal::Finite(v) => v,
            ExtReal::Infinite => f64::INFINITY,
        }
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(v) => Some(v),
            ExtReal::Infinite => None,
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(v) => write!(f, "{v}"),
            ExtReal::Infinite => f.write_str("inf"),
        }
    }
}

/// `p* = p/(p-1)`.
pub fn conjugate(p: f64) -> Result<f64> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::domain(p, "conjugate exponent needs finite p > 1"));
    }
    Ok(p / (p - 1.0))
}

/// `r = pq/(pq + p - q)`.
pub fn r_map(pq: &ParamPair) -> f64 {
    let (p, q) = (pq.p, pq.q);
    p * q / (p * q + p - q)
}

/// `π_{p,q}/2 = B(1/p*, 1/q)/q` for `p > 1`, infinite otherwise.
pub fn half_period(pq: &ParamPair) -> ExtReal {
    match pq.p_star() {
        Some(p_star) => {
            let value = (log_beta(1.0 / p_star, 1.0 / pq.q).expect("positive arguments")).exp() / pq.q;
            ExtReal::finite(value).unwrap_or(ExtReal::Infinite)
        }
        None => ExtReal::Infinite,
    }
}
