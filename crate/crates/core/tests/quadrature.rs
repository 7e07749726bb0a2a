mod common;

use common::{arcsin_oracle, arsinh_oracle, close};
use pqtrig::quadrature::{arsinh_to_infinity, gauss_kronrod};
use pqtrig::{arcsin_pq, arsinh_pq, Error, ParamPair};
use proptest::prelude::*;

const ARCSIN_3_2_3_AT_0_9: f64 = 1.085_721_443_912_177_336;
const ARSINH_3_2_3_AT_2: f64 = 1.276_479_718_543_715_299;

fn pair(p: f64, q: f64) -> ParamPair {
    ParamPair::new(p, q).unwrap()
}

#[test]
fn classical_examples() {
    let pi6 = std::f64::consts::FRAC_PI_6;
    assert!((arcsin_pq(&pair(2.0, 2.0), 0.5).unwrap().value - pi6).abs() < 1e-15);
    assert!((arcsin_pq(&pair(1.0, 2.0), 0.5).unwrap().value - 0.5f64.atanh()).abs() < 1e-15);
    assert!((arsinh_pq(&pair(2.0, 2.0), 1.0).unwrap().value - 1f64.asinh()).abs() < 1e-15);
}

#[test]
fn zero_is_exact() {
    for (p, q) in [(2.0, 2.0), (0.7, 1.5), (5.0, 10.0)] {
        assert_eq!(arcsin_pq(&pair(p, q), 0.0).unwrap().value, 0.0);
        assert_eq!(arsinh_pq(&pair(p, q), 0.0).unwrap().value, 0.0);
    }
}

#[test]
fn frozen_sine_integral() {
    assert!(close(arcsin_oracle(1.5, 3.0, 0.9), ARCSIN_3_2_3_AT_0_9, 1e-12));
    let r = arcsin_pq(&pair(1.5, 3.0), 0.9).unwrap();
    assert!(close(r.value, ARCSIN_3_2_3_AT_0_9, 1e-14));
    assert!(r.abs_error_estimate <= 1e-13 * (1.0 + r.value));
    assert!(r.evaluations > 0);
}

#[test]
fn frozen_hyperbolic_integral() {
    assert!(close(arsinh_oracle(1.5, 3.0, 2.0), ARSINH_3_2_3_AT_2, 1e-12));
    assert!(close(arsinh_pq(&pair(1.5, 3.0), 2.0).unwrap().value, ARSINH_3_2_3_AT_2, 1e-14));
}

#[test]
fn domain_errors() {
    let pq = pair(2.0, 3.0);
    for y in [-0.1, 1.0, 1.5, f64::NAN] {
        assert!(matches!(arcsin_pq(&pq, y), Err(Error::Domain { .. })), "{y}");
    }
    assert!(matches!(arsinh_pq(&pq, -1.0), Err(Error::Domain { .. })));
}

#[test]
fn hyperbolic_integral_bounded_by_dual_half_period() {
    for (p, q) in [(1.5, 3.0), (2.0, 6.0), (3.0, 2.0)] {
        let pq = pair(p, q);
        let limit = pq.hyperbolic_half_period();
        if let Some(limit) = limit.as_finite() {
            assert!(close(arsinh_to_infinity(&pq).to_f64(), limit, 1e-12));
            assert!(arsinh_pq(&pq, 1e6).unwrap().value < limit);
        }
    }
}

#[test]
fn gauss_kronrod_smooth_integral() {
    let r = gauss_kronrod(|x: f64| x.cos(), 0.0, 1.0, 0.0, 1e-14);
    assert!((r.value - 1f64.sin()).abs() < 1e-15);
}

#[test]
fn oracle_agreement_over_grid() {
    let ys = [0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999];
    for (p, q) in [(0.7, 1.5), (1.0, 2.0), (1.5, 3.0), (2.0, 2.0), (3.0, 6.0), (0.95, 10.0), (5.0, 1.25)] {
        let pq = pair(p, q);
        for y in ys {
            let got = arcsin_pq(&pq, y).unwrap().value;
            let want = arcsin_oracle(p, q, y);
            assert!((got - want).abs() <= 1e-11, "F({p},{q};{y}) = {got} vs {want}");
        }
        for y in [0.5, 2.0, 30.0] {
            let got = arsinh_pq(&pq, y).unwrap().value;
            let want = arsinh_oracle(p, q, y);
            assert!((got - want).abs() <= 1e-11, "G({p},{q};{y}) = {got} vs {want}");
        }
    }
}

fn valid_pair() -> impl Strategy<Value = ParamPair> {
    (1.1f64..10.0, 0.02f64..4.0).prop_map(|(q, spread)| ParamPair::new(q / (q + 1.0) + spread, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sine_integral_is_increasing(pq in valid_pair(), a in 0.0f64..0.999, b in 0.0f64..0.999) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assume!(hi - lo > 1e-9);
        prop_assert!(arcsin_pq(&pq, lo).unwrap().value < arcsin_pq(&pq, hi).unwrap().value);
    }

    #[test]
    fn hyperbolic_integral_is_increasing(pq in valid_pair(), a in 0.0f64..50.0, b in 0.0f64..50.0) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assume!(hi - lo > 1e-9);
        prop_assert!(arsinh_pq(&pq, lo).unwrap().value < arsinh_pq(&pq, hi).unwrap().value);
    }

    #[test]
    fn derivative_is_the_integrand(pq in valid_pair(), y in 0.05f64..0.95) {
        let h = 1e-5;
        let f = |y| arcsin_pq(&pq, y).unwrap().value;
        let slope = (f(y + h) - f(y - h)) / (2.0 * h);
        let exact = (1.0 - y.powf(pq.q())).powf(-1.0 / pq.p());
        prop_assert!((slope - exact).abs() <= 1e-6 * exact.max(1.0));
        let g = |y| arsinh_pq(&pq, y).unwrap().value;
        let slope = (g(y + h) - g(y - h)) / (2.0 * h);
        let exact = (1.0 + y.powf(pq.q())).powf(-1.0 / pq.p());
        prop_assert!((slope - exact).abs() <= 1e-6);
    }
}
