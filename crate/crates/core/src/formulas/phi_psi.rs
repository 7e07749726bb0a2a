//! The algebraic maps whose composition `Φ ∘ Ψ ∘ Φ⁻¹` doubles the argument
//! of `sin_{3/2,2}`.

use crate::error::{Error, Result};

fn unit_interval(x: f64, what: &'static str) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::FormulaDomain { formula: what, reason: format!("argument {x} outside [0, 1]") })
    }
}

/// `Φ(x) = sqrt(1 - ((2 - 2x² + 2√(1-x³)) / (2 + x² + 2√(1-x³)))³)`.
pub fn phi(x: f64) -> Result<f64> {
    unit_interval(x, "PHI")?;
    let root = (1.0 - x.powi(3)).sqrt();
    let den = 2.0 + x * x + 2.0 * root;
    let ratio = (2.0 - 2.0 * x * x + 2.0 * root) / den;
    let one_minus_ratio = 3.0 * x * x / den;
    Ok((one_minus_ratio * (1.0 + ratio + ratio * ratio)).sqrt())
}

/// `Ψ(x) = 4x√(1-x³)(3 + √(1-x³))³ / ((1 + √(1-x³))(8 + x³)²)`.
pub fn psi(x: f64) -> Result<f64> {
    unit_interval(x, "PSI")?;
    let root = (1.0 - x.powi(3)).sqrt();
    Ok(4.0 * x * root * (3.0 + root).powi(3) / ((1.0 + root) * (8.0 + x.powi(3)).powi(2)))
}

/// `Φ⁻¹(x) = (6x - 2(1 - k)²) / (2 + k)²` with `k = (1 - x²)^{1/3}`.
pub fn phi_inverse(x: f64) -> Result<f64> {
    unit_interval(x, "PHI_INVERSE")?;
    let k = (1.0 - x * x).cbrt();
    // 1 - k without cancellation for small x
    let one_minus_k = x * x / (1.0 + k + k * k);
    Ok((6.0 * x - 2.0 * one_minus_k * one_minus_k) / ((2.0 + k) * (2.0 + k)))
}

/// `(Φ(x), Ψ(x), Φ⁻¹(x))`.
pub fn phi_psi(x: f64) -> Result<(f64, f64, f64)> {
    Ok((phi(x)?, psi(x)?, phi_inverse(x)?))
}
