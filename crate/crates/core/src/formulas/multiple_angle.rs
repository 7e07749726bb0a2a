//! Multiple-angle formulas relating the functions at `(2, q)` and
//! `(2q/(q+2), q)` to those at `(q*, q)` and `(q/2, q)`, with the argument
//! scaled by `2^{2/q}`.

use super::{check_domain, FormulaId};
use crate::error::{Error, Result};
use crate::gtf::{sincos_pq, sinhcosh_pq};
use crate::params::ParamPair;

/// The four values produced by one multiple-angle theorem, all at the
/// scaled argument `2^{2/q} x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValues {
    pub sin: f64,
    pub cos: f64,
    pub sinh: f64,
    pub cosh: f64,
}

/// `2^{2/q}`.
pub fn scale_factor(q: f64) -> f64 {
    (2.0 / q).exp2()
}

pub(crate) fn conjugate_pair(q: f64) -> Result<ParamPair> {
    ParamPair::new(q / (q - 1.0), q)
}

/// `(sin_{2,q}, cos_{2,q})(2^{2/q} x)` from `sin_{q*,q} x` and `cos_{q*,q} x`.
pub fn maf1_trig(q: f64, x: f64) -> Result<(f64, f64)> {
    let sc = sincos_pq(&conjugate_pair(q)?, x)?;
    // cos_{q*,q}^{q*} = 1 - sin^q, so cos^{q*-1} = (1 - sin^q)^{1/q}
    let sin = scale_factor(q) * sc.sin * sc.complement.powf(1.0 / q);
    let cos = sc.complement - sc.sin.powf(q);
    Ok((sin, cos))
}

/// `(sinh, cosh)_{2q/(q+2),q}(2^{2/q} x)` from `sinh_{q/2,q} x`.
pub fn maf1_hyp(q: f64, x: f64) -> Result<(f64, f64)> {
    let sh = sinhcosh_pq(&ParamPair::new(q / 2.0, q)?, x)?;
    let power = sh.sinh.powf(q);
    let gap = 1.0 - power;
    if !(gap > 0.0) {
        return Err(Error::FormulaDomain {
            formula: "MAF1_SINH",
            reason: format!("sinh_(q/2,q)^q = {power} is not below 1"),
        });
    }
    let sinh = scale_factor(q) * sh.sinh / gap.powf(2.0 / q);
    let cosh = ((1.0 + power) / gap).powf(2.0 / q + 1.0);
    Ok((sinh, cosh))
}

/// The first multiple-angle theorem, on `0 ≤ x < π_{q*,q}/4`.
pub fn maf1(q: f64, x: f64) -> Result<ScaledValues> {
    check_domain(FormulaId::Maf1Sin, q, &[x])?;
    let (sin, cos) = maf1_trig(q, x)?;
    let (sinh, cosh) = maf1_hyp(q, x)?;
    Ok(ScaledValues { sin, cos, sinh, cosh })
}

/// `(sinh_{2,q}, cosh_{2,q})(2^{2/q} x)` from `sinh_{q*,q} x` and `cosh_{q*,q} x`.
pub fn maf2_hyp(q: f64, x: f64) -> Result<(f64, f64)> {
    let sh = sinhcosh_pq(&conjugate_pair(q)?, x)?;
    // cosh_{q*,q}^{q*} = 1 + sinh^q
    let sinh = scale_factor(q) * sh.sinh * (sh.log1p_power / q).exp();
    let cosh = sh.log1p_power.exp() + sh.sinh.powf(q);
    Ok((sinh, cosh))
}

/// `(sin, cos)_{2q/(q+2),q}(2^{2/q} x)` from `sin_{q/2,q} x`.
pub fn maf2_trig(q: f64, x: f64) -> Result<(f64, f64)> {
    let sc = sincos_pq(&ParamPair::new(q / 2.0, q)?, x)?;
    let power = sc.sin.powf(q);
    let sin = scale_factor(q) * sc.sin / (1.0 + power).powf(2.0 / q);
    let cos = (sc.complement / (1.0 + power)).powf(2.0 / q + 1.0);
    Ok((sin, cos))
}

/// The second multiple-angle theorem, on `0 ≤ x < π_{q/2,q}/2`.
pub fn maf2(q: f64, x: f64) -> Result<ScaledValues> {
    check_domain(FormulaId::Maf2Sin, q, &[x])?;
    let (sinh, cosh) = maf2_hyp(q, x)?;
    let (sin, cos) = maf2_trig(q, x)?;
    Ok(ScaledValues { sin, cos, sinh, cosh })
}

/// `τ_{2,q}(2^{2/q} x) = 2^{2/q} τ_{q*,q}(x) / (1 - τ_{q*,q}^q(x))^{2/q}`.
pub fn tau_double(q: f64, x: f64) -> Result<f64> {
    check_domain(FormulaId::TauDouble, q, &[x])?;
    let pq = conjugate_pair(q)?;
    let tau = sincos_pq(&pq, x)?.tau(&pq);
    let gap = 1.0 - tau.powf(q);
    if !(gap > 0.0) {
        return Err(Error::FormulaDomain { formula: "TAU_DOUBLE", reason: format!("tau^q = {} is not below 1", 1.0 - gap) });
    }
    Ok(scale_factor(q) * tau / gap.powf(2.0 / q))
}
