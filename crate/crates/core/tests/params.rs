mod common;

use common::{arcsin_to_one_oracle, close, half_period_oracle, ln_beta_oracle};
use pqtrig::quadrature::arcsin_to_one;
use pqtrig::{conjugate, half_period, log_beta, r_map, Error, ExtReal, ParamPair};
use proptest::prelude::*;
use std::f64::consts::{FRAC_PI_2, PI};

const HALF_PERIOD_4_3_4: f64 = 1.854_074_677_301_371_918_4;
const HALF_PERIOD_2_6: f64 = 1.214_325_323_943_790_805_9;
const LOG_BETA_QUARTERS: f64 = 2.003_680_106_471_454_827_7;

fn pair(p: f64, q: f64) -> ParamPair {
    ParamPair::new(p, q).unwrap()
}

#[test]
fn conjugate_examples() {
    assert_eq!(conjugate(2.0).unwrap(), 2.0);
    assert!((conjugate(1.5).unwrap() - 3.0).abs() < 1e-15);
    assert!((conjugate(4.0 / 3.0).unwrap() - 4.0).abs() < 1e-14);
    assert!(matches!(conjugate(1.0), Err(Error::Domain { .. })));
}

#[test]
fn r_map_examples() {
    assert_eq!(r_map(&pair(2.0, 2.0)), 1.0);
    assert!((r_map(&pair(1.5, 3.0)) - 1.5).abs() < 1e-15);
    assert!((r_map(&pair(1.5, 6.0)) - 2.0).abs() < 1e-15);
}

#[test]
fn construction_rejects_invalid_pairs() {
    for (p, q) in [(2.0, 1.0), (0.5, 2.0), (2.0 / 3.0, 2.0), (f64::NAN, 2.0), (2.0, f64::INFINITY)] {
        assert!(matches!(ParamPair::new(p, q), Err(Error::InvalidParams { .. })), "({p}, {q})");
    }
}

#[test]
fn half_period_examples() {
    assert!((half_period(&pair(2.0, 2.0)).to_f64() - FRAC_PI_2).abs() < 1e-14);
    assert_eq!(half_period(&pair(1.0, 2.0)), ExtReal::Infinite);
    assert_eq!(arcsin_to_one(&pair(1.0, 2.0)), ExtReal::Infinite);
}

#[test]
fn quartic_half_period_against_two_oracles() {
    let pq = pair(4.0 / 3.0, 4.0);
    let oracle_beta = (0.25f64, 0.25f64);
    let from_gamma = ln_beta_oracle(oracle_beta.0, oracle_beta.1).exp() / 4.0;
    assert!(close(from_gamma, HALF_PERIOD_4_3_4, 1e-13));
    let from_integral = arcsin_to_one_oracle(4.0 / 3.0, 4.0);
    assert!(close(from_integral, HALF_PERIOD_4_3_4, 1e-10), "{from_integral}");
    assert!(close(half_period(&pq).to_f64(), HALF_PERIOD_4_3_4, 1e-13));
    assert!(close(arcsin_to_one(&pq).to_f64(), half_period(&pq).to_f64(), 1e-10));
}

#[test]
fn sextic_half_period_against_beta() {
    assert!(close(half_period_oracle(2.0, 6.0), HALF_PERIOD_2_6, 1e-13));
    assert!(close(arcsin_to_one(&pair(2.0, 6.0)).to_f64(), HALF_PERIOD_2_6, 1e-12));
    assert!(close(arcsin_to_one_oracle(2.0, 6.0), HALF_PERIOD_2_6, 1e-10));
}

#[test]
fn log_beta_examples() {
    assert_eq!(log_beta(1.0, 1.0).unwrap(), 0.0);
    assert!((log_beta(0.5, 0.5).unwrap() - PI.ln()).abs() < 1e-14);
    assert!(close(ln_beta_oracle(0.25, 0.25), LOG_BETA_QUARTERS, 1e-13));
    assert!(close(log_beta(0.25, 0.25).unwrap(), LOG_BETA_QUARTERS, 1e-13));
    assert!(log_beta(0.0, 1.0).is_err());
}

#[test]
fn half_period_relation_at_sextic() {
    // π_{3,6} = π_{3/2,6} / 2^{1/3}
    let lhs = half_period(&pair(3.0, 6.0)).to_f64();
    let rhs = half_period(&pair(1.5, 6.0)).to_f64() / 2f64.cbrt();
    assert!(close(lhs, rhs, 1e-10));
}

fn valid_pair() -> impl Strategy<Value = ParamPair> {
    (1.05f64..12.0, 0.0f64..1.0, 0.001f64..6.0).prop_map(|(q, choose, spread)| {
        let lower = q / (q + 1.0);
        let p = if choose < 0.3 { lower + (1.0 - lower) * (spread / 6.0).max(1e-3) } else { lower + spread };
        ParamPair::new(p, q).unwrap()
    })
}

proptest! {
    #[test]
    fn r_map_is_an_involution(pq in valid_pair()) {
        let dual = pq.dual();
        let back = ParamPair::new(r_map(&dual), pq.q()).unwrap();
        prop_assert!((back.p() - pq.p()).abs() <= 1e-12 * pq.p());
    }

    #[test]
    fn r_map_preserves_validity(pq in valid_pair()) {
        prop_assert!(r_map(&pq) > pq.q() / (pq.q() + 1.0));
    }

    #[test]
    fn finite_half_period_iff_p_above_one(pq in valid_pair()) {
        prop_assert_eq!(half_period(&pq).is_finite(), pq.p() > 1.0);
    }

    #[test]
    fn conjugate_half_period_relation(p in 1.05f64..8.0, q in 1.05f64..8.0) {
        let pq = ParamPair::new(p, q).unwrap();
        let p_star = p / (p - 1.0);
        let other = ParamPair::new(q / (q - 1.0), p_star).unwrap();
        let lhs = q * half_period(&pq).to_f64();
        let rhs = p_star * half_period(&other).to_f64();
        prop_assert!(close(lhs, rhs, 1e-10));
    }

    #[test]
    fn half_period_matches_gamma_oracle(p in 1.05f64..8.0, q in 1.05f64..8.0) {
        let pq = ParamPair::new(p, q).unwrap();
        prop_assert!(close(half_period(&pq).to_f64(), half_period_oracle(p, q), 1e-12));
    }
}
