//! Closed-form doubling formulas at fixed exponent pairs. Each function
//! returns the value at `2x` computed from the functions at `x`.

use super::phi_psi::{phi, phi_inverse, psi};
use crate::error::{Error, Result};
use crate::gtf::{sincos_pq, sinhcosh_pq};
use crate::params::ParamPair;

pub(crate) fn fixed(p: f64, q: f64) -> ParamPair {
    ParamPair::new(p, q).expect("fixed exponent pairs are valid")
}

fn positive(formula: &'static str, what: &str, value: f64) -> Result<f64> {
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::FormulaDomain { formula, reason: format!("{what} = {value} is not positive") })
    }
}

/// `sinh_{2,6}(2x) = 2 sinh cosh / √(1 - 8 sinh⁶)`.
pub fn sinh_2_6(x: f64) -> Result<f64> {
    let sh = sinhcosh_pq(&fixed(2.0, 6.0), x)?;
    let den = positive("DA_SINH_2_6", "1 - 8 sinh^6", 1.0 - 8.0 * sh.sinh.powi(6))?;
    Ok(2.0 * sh.sinh * sh.cosh / den.sqrt())
}

/// `cosh_{2,6}(2x) = (1 + 20 sinh⁶ - 8 sinh¹²) / (1 - 8 sinh⁶)^{3/2}`.
pub fn cosh_2_6(x: f64) -> Result<f64> {
    let s6 = sinhcosh_pq(&fixed(2.0, 6.0), x)?.sinh.powi(6);
    let den = positive("DA_COSH_2_6", "1 - 8 sinh^6", 1.0 - 8.0 * s6)?;
    Ok((1.0 + 20.0 * s6 - 8.0 * s6 * s6) / den.powf(1.5))
}

/// `sin_{3/2,6}(2x) = 2s / (1 + 18s⁶ - 27s¹²)^{1/3}`.
pub fn sin_3_2_6(x: f64) -> Result<f64> {
    let s = sincos_pq(&fixed(1.5, 6.0), x)?.sin;
    let s6 = s.powi(6);
    let den = positive("DA_SIN_3_2_6", "1 + 18 s^6 - 27 s^12", 1.0 + 18.0 * s6 - 27.0 * s6 * s6)?;
    Ok(2.0 * s / den.cbrt())
}

/// `sin_{3,6}(2x)` from `s = sin_{3,6} x`, with the two radicals kept in
/// factored form.
pub fn sin_3_6(x: f64) -> Result<f64> {
    let s = sincos_pq(&fixed(3.0, 6.0), x)?.sin;
    let s3 = s.powi(3);
    let plus = 1.0 + 6.0 * s3 + s3 * s3;
    let minus = 1.0 - 6.0 * s3 + s3 * s3;
    if minus < 0.0 {
        return Err(Error::FormulaDomain { formula: "DA_SIN_3_6", reason: format!("1 - 6 s^3 + s^6 = {minus} is negative") });
    }
    let den = (1.0 - s3) * plus.powf(1.5) + (1.0 + s3) * minus.powf(1.5);
    Ok(2f64.powf(5.0 / 3.0) * s * (1.0 + s3 * s3) / den.powf(2.0 / 3.0))
}

/// `sin_{6/5,3}(2x)` from `c = cos_{6/5,3} x`.
pub fn sin_6_5_3(x: f64) -> Result<f64> {
    let sc = sincos_pq(&fixed(1.2, 3.0), x)?;
    // c^{3/5} = (1 - s^3)^{1/2}, and 1 - c^{3/5} = s^3 / (1 + c^{3/5})
    let t = sc.complement.sqrt();
    let one_minus_t = sc.sin.powi(3) / (1.0 + t);
    let den = positive(
        "DA_SIN_6_5_3",
        "1 + 24 c^(3/5) + 18 c^(6/5) - 27 c^(12/5)",
        1.0 + 24.0 * t + 18.0 * t * t - 27.0 * t.powi(4),
    )?;
    Ok(4.0 * sc.cos.powf(0.2) * (1.0 + 3.0 * t) * one_minus_t.cbrt() / den.powf(2.0 / 3.0))
}

/// `sin_{3/2,2}(2x) = Φ(Ψ(Φ⁻¹(sin_{3/2,2} x)))`.
pub fn sin_3_2_2(x: f64) -> Result<f64> {
    let s = sincos_pq(&fixed(1.5, 2.0), x)?.sin;
    // Ψ maps [0, 1] into itself; near the endpoint it can round a few ulps past 1
    phi(psi(phi_inverse(s)?)?.min(1.0))
}

/// `sinh_{2,4}(2x) = 2 sinh cosh / (1 - sinh⁴)`.
pub fn sinh_2_4(x: f64) -> Result<f64> {
    let sh = sinhcosh_pq(&fixed(2.0, 4.0), x)?;
    let den = positive("DA_SINH_2_4", "1 - sinh^4", 1.0 - sh.sinh.powi(4))?;
    Ok(2.0 * sh.sinh * sh.cosh / den)
}

/// `sin_{2,4}(2x) = 2 sin cos / (1 + sin⁴)`.
pub fn sin_2_4(x: f64) -> Result<f64> {
    let sc = sincos_pq(&fixed(2.0, 4.0), x)?;
    Ok(2.0 * sc.sin * sc.cos / (1.0 + sc.sin.powi(4)))
}

/// `sin_{4/3,4}(2x) = 2 s c^{1/3} / √(1 + 4 s⁴ c^{4/3})`.
pub fn sin_4_3_4(x: f64) -> Result<f64> {
    let sc = sincos_pq(&fixed(4.0 / 3.0, 4.0), x)?;
    let c_third = sc.cos.cbrt();
    Ok(2.0 * sc.sin * c_third / (1.0 + 4.0 * sc.sin.powi(4) * c_third.powi(4)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_argument() {
        for f in [sinh_2_6, sin_3_2_6, sin_3_6, sin_6_5_3, sin_3_2_2, sinh_2_4, sin_2_4, sin_4_3_4] {
            assert_eq!(f(0.0).unwrap(), 0.0);
        }
        assert_eq!(cosh_2_6(0.0).unwrap(), 1.0);
    }
}
