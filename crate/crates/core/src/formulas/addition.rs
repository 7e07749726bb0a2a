//! Addition theorems for the two exponent pairs that have one: Dixon's
//! `(3/2, 3)` and the `(2, 3)` formula of Cox and Shurman.
//!
//! Equal arguments are detected with exact equality and routed to the
//! doubling forms, since the addition forms are `0/0` there. Arguments that
//! are merely close produce a [`NearDegenerate`](Error::NearDegenerate) error
//! once the denominator drops below [`NEAR_DEGENERATE`].

use super::double_angle::fixed;
use crate::error::{Error, Result};
use crate::gtf::{sincos_pq, SinCos};

/// Denominator magnitude below which an addition form is refused.
pub const NEAR_DEGENERATE: f64 = 1e-14;

fn within(formula: &'static str, end: f64, args: &[f64]) -> Result<()> {
    for &a in args {
        if !(a >= 0.0 && a < end) {
            return Err(Error::FormulaDomain { formula, reason: format!("argument {a} outside [0, {end})") });
        }
    }
    Ok(())
}

fn denominator(formula: &'static str, den: f64) -> Result<f64> {
    if den.abs() < NEAR_DEGENERATE {
        Err(Error::NearDegenerate { formula, denominator: den })
    } else {
        Ok(den)
    }
}

/// Right end of the domain of `sin_{3/2,3}`.
pub fn dixon_half_period() -> f64 {
    fixed(1.5, 3.0).half_period().to_f64()
}

/// Right end of the domain of `sin_{2,3}`.
pub fn cox_shurman_half_period() -> f64 {
    fixed(2.0, 3.0).half_period().to_f64()
}

fn dixon(x: f64) -> Result<SinCos> {
    sincos_pq(&fixed(1.5, 3.0), x)
}

/// `(sin_{3/2,3}(u+v), cos_{3/2,3}(u+v))` by Dixon's addition theorem, which
/// produces `cos^{1/2}`; the cosine returned is its square.
pub fn dixon_add(u: f64, v: f64) -> Result<(f64, f64)> {
    let end = dixon_half_period();
    within("DIXON_ADD", end, &[u, v, u + v])?;
    if u == v {
        return dixon_double(u);
    }
    let (a, b) = (dixon(u)?, dixon(v)?);
    let (ha, hb) = (a.cos.sqrt(), b.cos.sqrt());
    let den = denominator("DIXON_ADD", a.sin * b.cos - a.cos * b.sin)?;
    let sin = (a.sin * a.sin * hb - ha * b.sin * b.sin) / den;
    let cos_half = (a.sin * ha - hb * b.sin) / den;
    Ok((sin, cos_half * cos_half))
}

/// `(sin_{3/2,3}(2u), cos_{3/2,3}(2u))` by Dixon's doubling formula.
pub fn dixon_double(u: f64) -> Result<(f64, f64)> {
    within("DIXON_DOUBLE", 0.5 * dixon_half_period(), &[u])?;
    let a = dixon(u)?;
    // cos^{3/2} = 1 - sin^3
    let s3 = a.sin.powi(3);
    let den = a.cos.sqrt() * (1.0 + s3);
    let sin = a.sin * (1.0 + a.complement) / den;
    let cos_half = (a.complement - s3) / den;
    Ok((sin, cos_half * cos_half))
}

fn cox_shurman(x: f64) -> Result<(f64, f64, f64)> {
    let sc = sincos_pq(&fixed(2.0, 3.0), x)?;
    // 1 - c = s^3 / (1 + c)
    Ok((sc.sin, sc.cos, sc.sin.powi(3) / (1.0 + sc.cos)))
}

/// `sin_{2,3}(x+y)` by the Cox–Shurman addition formula.
pub fn cox_shurman_add(x: f64, y: f64) -> Result<f64> {
    within("CS_ADD", cox_shurman_half_period(), &[x, y, x + y])?;
    if x == y {
        return cox_shurman_double(x);
    }
    let (sx, cx, gx) = cox_shurman(x)?;
    let (sy, cy, _) = cox_shurman(y)?;
    let num = 2.0 * (sx - sy) * (gx * (1.0 + cy) - sx * sy * sy);
    let den = gx * (1.0 + cy).powi(2) - 2.0 * sx * sx * sy * (1.0 + cy) + sx * sy * sy * (1.0 + cx);
    Ok(num / denominator("CS_ADD", den)?)
}

/// `sin_{2,3}(2x) = 4sc(3+c)³ / ((1+c)(8+s³)²)`.
pub fn cox_shurman_double(x: f64) -> Result<f64> {
    within("CS_DOUBLE", 0.5 * cox_shurman_half_period(), &[x])?;
    let (s, c, _) = cox_shurman(x)?;
    Ok(4.0 * s * c * (3.0 + c).powi(3) / ((1.0 + c) * (8.0 + s.powi(3)).powi(2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_second_argument_reduces_identically() {
        let a = dixon(0.6).unwrap();
        let (s, c) = dixon_add(0.6, 0.0).unwrap();
        assert!((s - a.sin).abs() < 1e-15);
        assert!((c - a.cos).abs() < 1e-15);
        let (sx, _, _) = cox_shurman(0.7).unwrap();
        assert!((cox_shurman_add(0.7, 0.0).unwrap() - sx).abs() < 1e-15);
    }

    #[test]
    fn equal_arguments_use_doubling() {
        assert_eq!(dixon_add(0.4, 0.4).unwrap(), dixon_double(0.4).unwrap());
        assert_eq!(cox_shurman_add(0.6, 0.6).unwrap(), cox_shurman_double(0.6).unwrap());
    }

    #[test]
    fn near_equal_arguments_are_refused() {
        let err = dixon_add(0.4, 0.4 + 1e-15).unwrap_err();
        assert!(matches!(err, Error::NearDegenerate { .. }), "{err:?}");
    }

    #[test]
    fn domain() {
        let end = dixon_half_period();
        assert!(dixon_add(0.6 * end, 0.5 * end).is_err());
        assert!(dixon_double(0.5 * end).is_err());
        assert!(cox_shurman_add(-0.1, 0.2).is_err());
        assert!(cox_shurman_double(0.5 * cox_shurman_half_period()).is_err());
    }
}
