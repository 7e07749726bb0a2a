use pqtrig::verify::{
    check_antiderivatives, check_mai, check_maih, check_names, default_param_grid, ode_convergence_ratio, ode_deviation,
    parse_records, summary, write_records, AntiderivativeCase, OdeCase, Reading,
};
use pqtrig::{run_suite_with, FormulaId, ParamPair, SuiteConfig};

fn pair(p: f64, q: f64) -> ParamPair {
    ParamPair::new(p, q).unwrap()
}

fn light() -> SuiteConfig {
    SuiteConfig {
        formula_points: 20,
        family_qs: vec![2.0, 3.0],
        param_grid: vec![pair(2.0, 2.0), pair(0.9, 3.0), pair(1.5, 6.0)],
        identity_points: 5,
        inequality_pairs: vec![pair(1.0, 2.0), pair(3.0, 4.0)],
        inequality_points: 10,
        ode_cases: vec![OdeCase { pq: pair(1.5, 3.0), x_max: 1.0 }],
        ode_steps: 2000,
        antiderivative_cases: vec![AntiderivativeCase { q: 3.0, a: 0.3, b: 0.7 }],
        pi_relation_qs: vec![2.0, 4.0],
        special_values: true,
    }
}

#[test]
fn light_suite_passes_in_canonical_order() {
    let config = light();
    let reports = run_suite_with(&config, 1e-9, None);
    let names: Vec<_> = reports.iter().map(|r| r.name.clone()).collect();
    assert_eq!(names, check_names(&config));
    assert_eq!(names[0], FormulaId::ALL[0].name());
    for r in &reports {
        assert!(r.passed, "{r}");
        assert!(r.is_consistent());
    }
    assert_eq!(summary(&reports), (reports.len(), 0));
}

#[test]
fn below_the_precision_floor_checks_fail() {
    let mut config = light();
    config.param_grid = default_param_grid();
    let reports = run_suite_with(&config, 1e-15, Some("ROUND_TRIP"));
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().any(|r| !r.passed));
}

#[test]
fn filter_selects_by_prefix() {
    let reports = run_suite_with(&light(), 1e-9, Some("DA_SIN_3_2_2"));
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].name, "DA_SIN_3_2_2");
    assert!(run_suite_with(&light(), 1e-9, Some("NO_SUCH_CHECK")).is_empty());
}

#[test]
fn records_survive_a_round_trip() {
    let reports = run_suite_with(&light(), 1e-9, Some("MAI"));
    let parsed = parse_records(&write_records(&reports)).unwrap();
    assert_eq!(parsed.len(), reports.len());
    for (a, b) in reports.iter().zip(&parsed) {
        assert_eq!(a.name, b.name);
        assert_eq!(a.max_residual.to_bits(), b.max_residual.to_bits());
        assert_eq!((a.passed, a.indeterminate), (b.passed, b.indeterminate));
    }
}

#[test]
fn inequalities_are_strict_on_both_sides_of_p_one() {
    for (p, q) in [(0.7, 1.5), (0.95, 3.0), (1.0, 4.0), (2.0, 3.0), (4.0, 10.0)] {
        let pq = pair(p, q);
        let (mai, maih) = (check_mai(&pq, 40), check_maih(&pq, 40));
        assert!(mai.passed && maih.passed, "{mai}\n{maih}");
    }
}

#[test]
fn ode_oracle_is_accurate_and_fourth_order() {
    let pq = pair(3.0, 6.0);
    let (deviation, _) = ode_deviation(&pq, 0.8, 10_000).unwrap();
    assert!(deviation <= 1e-8, "{deviation}");
    let ratio = ode_convergence_ratio(&pq, 0.8, 200).unwrap();
    assert!((8.0..=32.0).contains(&ratio), "{ratio}");
}

#[test]
fn antiderivative_reading_is_resolved_numerically() {
    let report = check_antiderivatives(4.0, 0.3, 0.7);
    assert_eq!(report.preferred(), Reading::Substitution);
    let chosen = report.reading(Reading::Substitution);
    let other = report.reading(Reading::Printed);
    assert!(chosen.derivative_residual.unwrap() < 1e-9);
    assert!(other.derivative_residual.map_or(true, |r| r > 1e-3));
    assert!(report.sin_report(1e-9).passed && report.cos_report(1e-9).passed);
}
