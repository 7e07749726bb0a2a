//! Independent oracle for `sin_{p,q}`: classical Runge–Kutta on the
//! first-order energy form `u' = (1 - u^q)^{1/p}`, `u(0) = 0`.

use super::{CheckReport, OdeCase, REFERENCE_TOLERANCE};
use crate::error::{Error, Result};
use crate::gtf::sin_pq;
use crate::params::ParamPair;

/// Fewest steps the oracle accepts.
pub const MIN_STEPS: usize = 100;

/// Fraction of the half-period beyond which `u` is too close to 1.
const STIFF_FRACTION: f64 = 0.95;

/// Deviations below this are rounding noise, not truncation error.
const ORDER_FLOOR: f64 = 1e-12;

const ORDER_RANGE: (f64, f64) = (8.0, 32.0);

/// A node of the integrated solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeNode {
    pub x: f64,
    pub u: f64,
    pub du: f64,
}

fn slope(pq: &ParamPair, u: f64) -> f64 {
    if u <= 0.0 {
        return 1.0;
    }
    let gap = -(pq.q() * u.ln()).exp_m1();
    gap.max(0.0).powf(1.0 / pq.p())
}

/// Integrates from `0` to `x_max` in `steps` equal steps and returns all
/// `steps + 1` nodes.
pub fn ode_oracle_sin(pq: &ParamPair, x_max: f64, steps: usize) -> Result<Vec<OdeNode>> {
    if !(x_max > 0.0) {
        return Err(Error::domain(x_max, "integration range must be positive"));
    }
    if let Some(end) = pq.half_period().as_finite() {
        if x_max >= STIFF_FRACTION * end {
            return Err(Error::domain(x_max, format!("too close to the half-period {end}")));
        }
    }
    if steps < MIN_STEPS {
        return Err(Error::domain(steps as f64, format!("at least {MIN_STEPS} steps are required")));
    }
    let h = x_max / steps as f64;
    let mut u = 0.0;
    let mut nodes = Vec::with_capacity(steps + 1);
    nodes.push(OdeNode { x: 0.0, u, du: slope(pq, u) });
    for i in 1..=steps {
        let k1 = slope(pq, u);
        let k2 = slope(pq, u + 0.5 * h * k1);
        let k3 = slope(pq, u + 0.5 * h * k2);
        let k4 = slope(pq, u + h * k3);
        u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        nodes.push(OdeNode { x: x_max * i as f64 / steps as f64, u, du: slope(pq, u) });
    }
    Ok(nodes)
}

/// Largest `|u(x) - sin_{p,q} x|` over the nodes, with the node where it
/// occurs.
pub fn ode_deviation(pq: &ParamPair, x_max: f64, steps: usize) -> Result<(f64, f64)> {
    let mut worst = (0.0, 0.0);
    for node in ode_oracle_sin(pq, x_max, steps)? {
        let deviation = (node.u - sin_pq(pq, node.x)?.value).abs();
        if deviation > worst.0 {
            worst = (deviation, node.x);
        }
    }
    Ok(worst)
}

/// Ratio of the maximal deviations at `coarse_steps` and twice as many.
pub fn ode_convergence_ratio(pq: &ParamPair, x_max: f64, coarse_steps: usize) -> Result<f64> {
    let coarse = ode_deviation(pq, x_max, coarse_steps)?.0;
    let fine = ode_deviation(pq, x_max, 2 * coarse_steps)?.0;
    Ok(coarse / fine)
}

pub(super) fn accuracy_check(case: &OdeCase, steps: usize, scale: f64) -> CheckReport {
    let (residual, point) = ode_deviation(&case.pq, case.x_max, steps).unwrap_or((f64::INFINITY, case.x_max));
    CheckReport::new(
        format!("ODE[{},{}]", case.pq.p(), case.pq.q()),
        format!("RK4, {steps} steps on [0, {}]", case.x_max),
        residual,
        point,
        10.0 * REFERENCE_TOLERANCE * scale,
    )
}

/// Residual is the distance of the halving ratio from `[8, 32]`; the ratio
/// itself goes into the grid description. When the fine deviation is already
/// at the rounding floor the order is not measurable and the check passes
/// with zero residual.
pub(super) fn order_check(case: &OdeCase) -> CheckReport {
    let name = format!("ODE_ORDER[{},{}]", case.pq.p(), case.pq.q());
    let measured = ode_deviation(&case.pq, case.x_max, MIN_STEPS)
        .and_then(|coarse| Ok((coarse.0, ode_deviation(&case.pq, case.x_max, 2 * MIN_STEPS)?.0)));
    let (residual, ratio) = match measured {
        Ok((_, fine)) if fine < ORDER_FLOOR => (0.0, f64::NAN),
        Ok((coarse, fine)) => {
            let ratio = coarse / fine;
            ((ORDER_RANGE.0 - ratio).max(ratio - ORDER_RANGE.1).max(0.0), ratio)
        }
        Err(_) => (f64::INFINITY, f64::NAN),
    };
    let grid = format!("RK4, {MIN_STEPS} vs {} steps on [0, {}], ratio {ratio:.2}", 2 * MIN_STEPS, case.x_max);
    CheckReport::new(name, grid, residual, case.x_max, 0.0)
}
