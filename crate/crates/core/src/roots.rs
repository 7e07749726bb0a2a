//! Bracketed Newton iteration for increasing functions.

pub(crate) const MAX_ITERATIONS: usize = 200;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Root {
    pub point: f64,
    /// Signed value of the function at `point`.
    pub value: f64,
    pub iterations: usize,
}

/// Finds a zero of an increasing function on `[lo, hi]`.
///
/// `f` returns the function value and its derivative. A Newton step is taken
/// from the current point whenever it lands strictly inside the bracket;
/// otherwise the bracket is bisected. The iteration stops when the step falls
/// below a few ulps of the iterate, the function vanishes, or the bracket
/// collapses. The returned point is always freshly evaluated, so `value` is
/// the true residual at `point`.
pub(crate) fn newton_bracketed<F>(mut f: F, mut lo: f64, mut hi: f64, guess: f64) -> Root
where
    F: FnMut(f64) -> (f64, f64),
{
    let mut x = guess.clamp(lo, hi);
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let (value, slope) = f(x);
        if value == 0.0 {
            return Root { point: x, value, iterations };
        }
        if value > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let newton = x - value / slope;
        let next = if newton >= lo && newton <= hi && newton.is_finite() { newton } else { 0.5 * (lo + hi) };
        let step = (next - x).abs();
        x = next;
        if step <= 4.0 * f64::EPSILON * x.abs() || step == 0.0 || hi - lo <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
            break;
        }
    }
    let (value, _) = f(x);
    Root { point: x, value, iterations }
}
