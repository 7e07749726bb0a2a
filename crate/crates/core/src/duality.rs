//! Transport between the trigonometric and hyperbolic families.
//!
//! With `r` the dual exponent of `(p, q)`,
//!
//! ```text
//! sinh_{p,q} x = sin_{r,q} x / cos_{r,q}^{r/q} x,   cosh_{p,q} x = cos_{r,q}^{-r/p} x,
//! sin_{p,q} x  = sinh_{r,q} x / cosh_{r,q}^{r/q} x, cos_{p,q} x  = cosh_{r,q}^{-r/p} x.
//! ```
//!
//! Each side is obtained from a single inversion at the dual pair. The powers
//! are taken of `cos_{r,q}^r = 1 - sin^q` and `cosh_{r,q}^r = 1 + sinh^q`,
//! which the inversions return without rounding through the cosines.

use crate::error::{Error, Result};
use crate::gtf::{sincos_pq, sinhcosh_pq};
use crate::params::ParamPair;

/// `(sinh_{p,q} x, cosh_{p,q} x)` computed from `sin_{r,q}` and `cos_{r,q}`.
///
/// ```
/// use pqtrig::{duality::hyp_from_trig, ParamPair};
/// let (s, c) = hyp_from_trig(&ParamPair::new(2.0, 2.0).unwrap(), 1.0).unwrap();
/// assert!((s - 1f64.sinh()).abs() < 1e-14 && (c - 1f64.cosh()).abs() < 1e-14);
/// ```
pub fn hyp_from_trig(pq: &ParamPair, x: f64) -> Result<(f64, f64)> {
    let sc = sincos_pq(&pq.dual(), x)?;
    let ln_complement = sc.complement.ln();
    let sinh = sc.sin * (-ln_complement / pq.q()).exp();
    let cosh = (-ln_complement / pq.p()).exp();
    Ok((sinh, cosh))
}

/// `(sin_{p,q} x, cos_{p,q} x)` computed from `sinh_{r,q}` and `cosh_{r,q}`.
pub fn trig_from_hyp(pq: &ParamPair, x: f64) -> Result<(f64, f64)> {
    if let Some(end) = pq.half_period().as_finite() {
        if x >= end {
            return Err(Error::domain(x, format!("trig_from_hyp needs x below the half-period {end}")));
        }
    }
    let sh = sinhcosh_pq(&pq.dual(), x)?;
    let sin = sh.sinh * (-sh.log1p_power / pq.q()).exp();
    let cos = (-sh.log1p_power / pq.p()).exp();
    Ok((sin, cos))
}
