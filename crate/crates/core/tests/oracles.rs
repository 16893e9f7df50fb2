use num_complex::Complex64;
use proptest::prelude::*;
use qbernoulli::algebra::rat;
use qbernoulli::beta::{BetaFamily, ZeroMode};
use qbernoulli::complex_oracle::{
    check_gf, check_series, classical_limit_check, reflection_check, resolved_checks, series_points, SeriesSpec,
};
use qbernoulli::padic::{
    multi_riemann_sum, normalisation, riemann_sum, validate_family, zero_mode_check, Integrand, OracleConfig,
    PadicApprox,
};
use qbernoulli::Error;

fn cfg(p: u64, levels: (u32, u32)) -> OracleConfig {
    OracleConfig { p, level_min: levels.0, level_max: levels.1, ..OracleConfig::default() }
}

#[test]
fn carlitz_sums_approach_the_closed_form() {
    for p in [3, 5] {
        for n in 0..=3 {
            let r = validate_family(&BetaFamily::carlitz(n), &cfg(p, (1, 5))).unwrap();
            assert!(r.nonincreasing, "p={p} n={n}");
            assert!(r.final_digits().unwrap() >= 3, "p={p} n={n}");
        }
    }
}

#[test]
fn zero_mode_is_the_limit_of_the_constant_sum() {
    let rows = zero_mode_check(&cfg(3, (1, 6))).unwrap();
    for r in rows {
        assert!(r.distance_digits >= i64::from(r.level), "{r:?}");
    }
}

#[test]
fn measure_is_normalised() {
    for p in [3, 5, 7] {
        for level in 1..=3 {
            let one = normalisation(&cfg(p, (1, 3)), level).unwrap();
            assert!(one.sub(&PadicApprox::from_i64(p, 1)).is_zero(), "p={p} N={level}");
        }
    }
}

#[test]
fn single_fold_multi_sum_is_the_plain_sum() {
    let c = cfg(5, (1, 3));
    let integrand = Integrand::from_family(&BetaFamily::hr(3, 2, 1)).unwrap();
    for level in 1..=3 {
        let a = multi_riemann_sum(&integrand, level, &c).unwrap();
        let b = riemann_sum(&integrand, level, &c).unwrap();
        assert!(a.sub(&b).is_zero());
    }
}

#[test]
fn coordinate_order_does_not_matter() {
    let c = cfg(3, (1, 3));
    let fwd = Integrand { n: 3, factors: vec![(1, 2), (2, -1)], chi: None };
    let rev = Integrand { n: 3, factors: vec![(2, -1), (1, 2)], chi: None };
    for level in 1..=3 {
        let a = multi_riemann_sum(&fwd, level, &c).unwrap();
        let b = multi_riemann_sum(&rev, level, &c).unwrap();
        assert!(a.sub(&b).is_zero(), "N={level}");
    }
}

fn assert_level_rate(r: &qbernoulli::padic::ConvergenceReport) {
    // at least N digits at level N; monotonicity can break by cancellation (p=3, n=2, h = 0 mod 3)
    for l in &r.levels {
        assert!(l.effective_digits() >= i64::from(l.level), "{} p={} x0={}: {:?}", r.family, r.p, r.x0, r.levels);
    }
}

#[test]
fn negative_exponents_converge() {
    // q^{-k} and [k] for k < 0 come from the downward half of the power table
    for p in [3, 5] {
        for n in 0..=3 {
            for h in [-1, 0] {
                assert_level_rate(&validate_family(&BetaFamily::hr(n, h, 1), &cfg(p, (1, 5))).unwrap());
            }
            let c = OracleConfig { x0: -2, ..cfg(p, (1, 5)) };
            assert_level_rate(&validate_family(&BetaFamily::carlitz(n), &c).unwrap());
        }
    }
}

#[test]
fn character_embedding_needs_roots_of_unity() {
    // characters mod 5 of order 4 need 4 | p-1
    let fam = BetaFamily::chi(1, 5, 1);
    assert!(matches!(validate_family(&fam, &cfg(7, (1, 2))), Err(Error::CharacterNotEmbeddable { .. })));
    let fam = BetaFamily::chi(2, 4, 1);
    let r = validate_family(&fam, &cfg(5, (1, 3))).unwrap();
    assert!(r.nonincreasing);
}

#[test]
fn budget_is_enforced() {
    let c = OracleConfig { budget: 100, ..cfg(3, (1, 6)) };
    let err = validate_family(&BetaFamily::order_r(2, 2), &c).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded(_)), "{err:?}");
}

#[test]
fn non_prime_base_is_rejected() {
    assert!(validate_family(&BetaFamily::carlitz(1), &cfg(9, (1, 2))).is_err());
}

#[test]
fn resolved_series_forms_agree_everywhere() {
    let checks = resolved_checks(&series_points()).unwrap();
    assert!(checks.len() > 100);
    for (name, c) in checks {
        assert!(c.agrees, "{name} {}: diff {} bound {}", c.spec, c.difference, c.bound);
    }
}

#[test]
fn literal_series_misses_the_zero_mode() {
    let spec = SeriesSpec::twisted(0, Complex64::new(0.3, 0.0), 0.0);
    assert!(!check_series(&spec, ZeroMode::Log).unwrap().agrees);
    assert!(check_series(&spec, ZeroMode::Drop).unwrap().agrees);
}

#[test]
fn divergent_inputs_are_rejected() {
    let q = Complex64::new(0.95, 0.0);
    assert!(check_series(&SeriesSpec::twisted(2, q, 0.0), ZeroMode::Drop).is_err());
    let q = Complex64::new(0.3, 0.0);
    assert!(check_series(&SeriesSpec::h_twisted(2, 0, q, 0.0), ZeroMode::Drop).is_err());
    assert!(check_gf(&SeriesSpec::h_twisted(2, 2, q, 0.0), ZeroMode::Drop).is_err());
}

#[test]
fn carlitz_tends_to_bernoulli_numbers() {
    for n in 0..=6 {
        let report = classical_limit_check(&BetaFamily::carlitz(n), &rat(0, 1), &[rat(1, 100), rat(1, 1000)]).unwrap();
        for row in report.rows {
            assert!(row.error <= 5.0 * row.epsilon, "n={n} {row:?}");
        }
    }
}

#[test]
fn twisted_tends_to_bernoulli_polynomials() {
    let report =
        classical_limit_check(&BetaFamily::twisted(3), &rat(1, 4), &[rat(1, 100), rat(1, 1000), rat(1, 10000)]).unwrap();
    let errs: Vec<f64> = report.rows.iter().map(|r| r.error).collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
    assert!(errs[2] < 1e-3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn drop_form_matches_series(re in -0.8f64..0.8, im in -0.5f64..0.5, x in 0.0f64..2.0, n in 0u32..=5) {
        let q = Complex64::new(re, im);
        prop_assume!(q.norm() < 0.85 && q.norm() > 0.05);
        let c = check_series(&SeriesSpec::twisted(n, q, x), ZeroMode::Drop).unwrap();
        prop_assert!(c.agrees, "{}: {} > {}", c.spec, c.difference, c.bound);
    }

    #[test]
    fn reflection_holds(n in 0u32..=5, h in 1i64..=3, q in 0.2f64..0.9, x in 0.0f64..1.0) {
        prop_assert!(reflection_check(n, h, q, x).unwrap() < 1e-9);
    }
}
