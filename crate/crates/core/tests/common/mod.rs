//! Brute-force reference implementations used as test oracles. They share no
//! code with the library: integrals use a composite midpoint rule with one
//! Richardson step, the sine integral near `t = 1` is taken in the variable
//! `σ = ln s` where `1 - t^q = s^p`, the gamma function comes from Stirling's
//! series after upward recurrence, and inversion is plain bisection.

#![allow(dead_code)]

/// `(4 M_{2n} - M_n) / 3` for the composite midpoint sums `M_n`.
pub fn midpoint_richardson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let midpoint = |n: usize| {
        let h = (b - a) / n as f64;
        (0..n).map(|i| f(a + (i as f64 + 0.5) * h)).sum::<f64>() * h
    };
    (4.0 * midpoint(2 * n) - midpoint(n)) / 3.0
}

fn panels(length: f64) -> usize {
    ((4000.0 * length).ceil() as usize).max(2000)
}

/// `∫_0^y (1 - t^q)^{-1/p} dt` for `0 ≤ y < 1`.
/// The integral is split where `t^q = 1/2`, which keeps `1 - s^p ≥ 1/2` on
/// the tail.
pub fn arcsin_oracle(p: f64, q: f64, y: f64) -> f64 {
    let join = 0.5f64.powf(1.0 / q);
    let split = y.min(join);
    let head = midpoint_richardson(|t| (1.0 - t.powf(q)).powf(-1.0 / p), 0.0, split, panels(split));
    if y <= join {
        return head;
    }
    // t = (1 - s^p)^{1/q}, s = e^σ: dt (1-t^q)^{-1/p} = (p/q) s^{p-1} (1 - s^p)^{1/q - 1} dσ
    let sigma = |t: f64| (1.0 - t.powf(q)).ln() / p;
    let (lo, hi) = (sigma(y), sigma(join));
    let tail = midpoint_richardson(
        |s| p / q * ((p - 1.0) * s).exp() * (-(p * s).exp_m1()).powf(1.0 / q - 1.0),
        lo,
        hi,
        panels(hi - lo),
    );
    head + tail
}

/// `∫_0^1 (1 - t^q)^{-1/p} dt` for `p > 1`; in `σ` the integrand decays like
/// `e^{(p-1)σ}`, so the range is cut where that drops below `e^{-40}`.
pub fn arcsin_to_one_oracle(p: f64, q: f64) -> f64 {
    let hi = 0.5f64.ln() / p;
    let lo = -40.0 / (p - 1.0);
    let tail = midpoint_richardson(
        |s| p / q * ((p - 1.0) * s).exp() * (-(p * s).exp_m1()).powf(1.0 / q - 1.0),
        lo,
        hi,
        panels(hi - lo),
    );
    arcsin_oracle(p, q, 0.5f64.powf(1.0 / q)) + tail
}

/// `∫_0^y (1 + t^q)^{-1/p} dt` for `y ≥ 0`.
pub fn arsinh_oracle(p: f64, q: f64, y: f64) -> f64 {
    let split = y.min(1.0);
    let head = midpoint_richardson(|t| (1.0 + t.powf(q)).powf(-1.0 / p), 0.0, split, panels(split));
    if y <= 1.0 {
        return head;
    }
    let tail = midpoint_richardson(|s| s.exp() * (1.0 + (q * s).exp()).powf(-1.0 / p), 0.0, y.ln(), panels(y.ln()));
    head + tail
}

/// `ln Γ(x)` for `x > 0` from Stirling's series at `x + 20`.
pub fn ln_gamma_oracle(x: f64) -> f64 {
    let mut shift = 0.0;
    let mut z = x;
    while z < 20.0 {
        shift += z.ln();
        z += 1.0;
    }
    let z2 = z * z;
    let series = 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z * z2 * z2)
        - 1.0 / (1680.0 * z * z2 * z2 * z2);
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln() + series - shift
}

pub fn ln_beta_oracle(a: f64, b: f64) -> f64 {
    ln_gamma_oracle(a) + ln_gamma_oracle(b) - ln_gamma_oracle(a + b)
}

/// `π_{p,q}/2` for `p > 1` from the beta function.
pub fn half_period_oracle(p: f64, q: f64) -> f64 {
    let p_star = p / (p - 1.0);
    ln_beta_oracle(1.0 / p_star, 1.0 / q).exp() / q
}

/// Root of the increasing function `f(y) - target` on `[lo, hi]`.
pub fn bisect(f: impl Fn(f64) -> f64, target: f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn sin_oracle(p: f64, q: f64, x: f64) -> f64 {
    bisect(|y| arcsin_oracle(p, q, y), x, 0.0, 1.0)
}

pub fn sinh_oracle(p: f64, q: f64, x: f64, upper: f64) -> f64 {
    bisect(|y| arsinh_oracle(p, q, y), x, 0.0, upper)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}
