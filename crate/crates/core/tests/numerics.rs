mod common;

use binom_ci::numerics::*;
use proptest::prelude::*;

#[test]
fn oracle_self_check() {
    // erfc(2) and erfc(0.5) to published digits
    assert!((common::erfc(2.0) / 0.004_677_734_981_047_266 - 1.0).abs() < 1e-12);
    assert!((common::erfc(2.5) / 4.069_520_174_449_59e-4 - 1.0).abs() < 1e-12);
    assert!((common::erfc(0.5) - 0.479_500_122_186_953_5).abs() < 1e-15);
    assert_eq!(common::erfc(0.0), 1.0);
    assert!((common::erfc(2.000_001) / common::erfc(1.999_999) - 1.0).abs() < 1e-4);
}

#[test]
fn log_pmf_matches_exact_rational() {
    let got = log_binomial_pmf(25, 50, 0.3).unwrap().exp();
    let want = common::exact_pmf_f64(25, 50, 0.3);
    assert!(((got - want) / want).abs() < 1e-12, "{got} vs {want}");
    for &(k, n, p) in &[(0u64, 1u64, 0.5), (3, 7, 0.123), (100, 200, 0.5), (2, 150, 0.01)] {
        let got = log_binomial_pmf(k, n, p).unwrap().exp();
        let want = common::exact_pmf_f64(k, n, p);
        assert!(((got - want) / want).abs() < 1e-12, "k={k} n={n} p={p}");
    }
}

#[test]
fn cdf_matches_exact_rational() {
    let got = binomial_cdf(20, 40, 0.5).unwrap();
    let want = common::exact_cdf(20, 40, 0.5);
    assert!((got - want).abs() < 1e-13, "{got} vs {want}");
    for &(k, n, p) in &[(5i64, 10u64, 0.37), (0, 30, 0.2), (29, 30, 0.95), (12, 60, 0.31), (45, 60, 0.7)] {
        let got = binomial_cdf(k, n, p).unwrap();
        assert!((got - common::exact_cdf(k, n, p)).abs() < 1e-13, "k={k} n={n} p={p}");
        let got = binomial_sf(k, n, p).unwrap();
        assert!((got - common::exact_sf(k, n, p)).abs() < 1e-13, "sf k={k} n={n} p={p}");
    }
}

#[test]
fn pmf_sums_to_one() {
    for n in 1..=200u64 {
        for &p in &[0.01, 0.5, 0.99] {
            let total: f64 = (0..=n).map(|k| log_binomial_pmf(k, n, p).unwrap().exp()).sum();
            assert!((total - 1.0).abs() < 1e-12, "n={n} p={p}: {total}");
        }
    }
}

#[test]
fn lower_and_upper_tails_complement() {
    for n in [1u64, 7, 40, 120, 200] {
        for &p in &[0.01, 0.3, 0.5, 0.77, 0.99] {
            for k in -1..=n as i64 {
                let upper: f64 = ((k + 1) as u64..=n).map(|j| binomial_pmf(j, n, p).unwrap()).sum();
                let total = binomial_cdf(k, n, p).unwrap() + upper;
                assert!((total - 1.0).abs() < 1e-12, "n={n} p={p} k={k}");
            }
        }
    }
}

#[test]
fn cdf_monotone_in_k_and_p() {
    for n in [5u64, 40, 200] {
        for k in 0..n as i64 {
            let mut prev = f64::INFINITY;
            for i in 0..=200 {
                let p = i as f64 / 200.0;
                let c = binomial_cdf(k, n, p).unwrap();
                assert!(c <= prev, "n={n} k={k} p={p}");
                prev = c;
            }
        }
        for &p in &[0.05, 0.5, 0.93] {
            let mut prev = 0.0;
            for k in -1..=n as i64 {
                let c = binomial_cdf(k, n, p).unwrap();
                assert!(c >= prev);
                prev = c;
            }
        }
    }
}

#[test]
fn normal_quantile_against_erf_inversion() {
    let oracle = common::bisect(|z| common::normal_cdf(z) - 0.975, 0.0, 5.0);
    let got = normal_quantile(0.975).unwrap();
    assert!((got - oracle).abs() < 1e-9);
    assert!((got - 1.959_963_985).abs() < 1e-9);
    assert!((normal_quantile(0.025).unwrap() + 1.959_963_985).abs() < 1e-9);
    for &q in &[1e-10, 1e-7, 1e-3, 0.1, 0.3, 0.6, 0.9, 0.999, 1.0 - 1e-7] {
        let oracle = common::bisect(|z| common::normal_cdf(z) - q, -7.0, 7.0);
        assert!((normal_quantile(q).unwrap() - oracle).abs() < 1e-9, "q={q}");
    }
}

#[test]
fn normal_quantile_inverts_cdf() {
    for i in 0..=1200 {
        let z = -6.0 + i as f64 / 100.0;
        let back = normal_quantile(common::normal_cdf(z)).unwrap();
        assert!((back - z).abs() < 1e-8, "z={z}: {back}");
    }
}

#[test]
fn reg_inc_beta_against_quadrature() {
    // Smooth integrands (both shapes > 1), so composite Simpson converges
    // as h^4; two panel counts bound the quadrature error.
    for &(t, a, b) in &[(0.3, 10.5, 30.5), (0.2, 2.0, 3.0), (0.7, 5.5, 4.5)] {
        let density = |x: f64| x.powf(a - 1.0) * (1.0 - x).powf(b - 1.0);
        let ratio = |panels| common::simpson(density, 0.0, t, panels) / common::simpson(density, 0.0, 1.0, panels);
        let (coarse, fine) = (ratio(20_000), ratio(40_000));
        assert!((coarse - fine).abs() < 1e-12, "{coarse} {fine}");
        let got = reg_inc_beta(t, a, b).unwrap();
        assert!((got - fine).abs() < 1e-10, "({t}, {a}, {b}): {got} vs {fine}");
    }
}

#[test]
fn reg_inc_beta_matches_binomial_tail() {
    // Pr(X >= k) = I_p(k, n - k + 1); the two routes share no code.
    for &(k, n, p) in &[(3u64, 10u64, 0.2), (20, 40, 0.5), (55, 60, 0.95), (1, 200, 0.001)] {
        let tail = binomial_sf(k as i64, n, p).unwrap();
        let beta = reg_inc_beta(p, k as f64, (n - k + 1) as f64).unwrap();
        assert!((tail - beta).abs() < 1e-12, "k={k} n={n} p={p}");
    }
}

#[test]
fn beta_quantile_examples() {
    assert!((beta_quantile(0.5, 3.0, 3.0).unwrap() - 0.5).abs() < 1e-10);
    let t = beta_quantile(0.975, 0.5, 10.5).unwrap();
    assert!((reg_inc_beta(t, 0.5, 10.5).unwrap() - 0.975).abs() < 1e-10);
    for &(q, a, b) in &[(0.025, 10.5, 30.5), (0.9, 0.5, 0.5), (0.3, 150.0, 2.0)] {
        let t = beta_quantile(q, a, b).unwrap();
        let s = beta_quantile(1.0 - q, b, a).unwrap();
        assert!((t + s - 1.0).abs() < 1e-10);
    }
}

#[test]
fn find_root_examples() {
    let br = Bracket::new(0.0, 1.0).unwrap();
    let r = find_root(|p| p - 0.3, br, DEFAULT_TOL).unwrap();
    assert!((r - 0.3).abs() <= 1e-10);

    let closed = 1.0 - 0.025f64.powf(0.1);
    let r = find_root(|p| (1.0 - p).powi(10) - 0.025, br, DEFAULT_TOL).unwrap();
    assert!((r - closed).abs() <= 1e-10);
    assert!((r - 0.3085).abs() < 1e-4);

    let r = find_root(|p| binomial_cdf(5, 10, p).unwrap() - 0.5, br, DEFAULT_TOL).unwrap();
    assert!((binomial_cdf(5, 10, r).unwrap() - 0.5).abs() <= 1e-9);
}

#[test]
fn find_root_is_deterministic() {
    let br = Bracket::new(0.0, 1.0).unwrap();
    let f = |p: f64| binomial_cdf(17, 60, p).unwrap() - 0.025;
    let first = find_root(f, br, DEFAULT_TOL).unwrap();
    for _ in 0..20 {
        assert_eq!(find_root(f, br, DEFAULT_TOL).unwrap().to_bits(), first.to_bits());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn beta_quantile_round_trips(q in 1e-6f64..(1.0 - 1e-6), a in 0.5f64..200.0, b in 0.5f64..200.0) {
        let t = beta_quantile(q, a, b).unwrap();
        prop_assert!(t > 0.0 && t < 1.0);
        prop_assert!((reg_inc_beta(t, a, b).unwrap() - q).abs() <= 1e-10);
    }

    #[test]
    fn reg_inc_beta_reflection(t in 0.0f64..=1.0, a in 0.5f64..200.0, b in 0.5f64..200.0) {
        let lhs = reg_inc_beta(t, a, b).unwrap();
        let rhs = 1.0 - reg_inc_beta(1.0 - t, b, a).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12);
    }
}
