//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's numerical code.
#![allow(dead_code)]

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};

fn binom_coeff(n: u64, k: u64) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// Exact `C(n, k) p^k (1 - p)^(n - k)` with `p` taken as the exact rational
/// value of the `f64`.
pub fn exact_pmf(k: u64, n: u64, p: f64) -> BigRational {
    let p = BigRational::from_float(p).expect("finite p");
    let q = BigRational::one() - &p;
    let mut out = BigRational::from_integer(binom_coeff(n, k));
    for _ in 0..k {
        out *= &p;
    }
    for _ in 0..n - k {
        out *= &q;
    }
    out
}

/// Exact `Pr(X <= k)`.
pub fn exact_cdf(k: i64, n: u64, p: f64) -> f64 {
    if k < 0 {
        return 0.0;
    }
    let mut s = BigRational::zero();
    for j in 0..=(k as u64).min(n) {
        s += exact_pmf(j, n, p);
    }
    s.to_f64().unwrap()
}

/// Exact `Pr(X >= k)`.
pub fn exact_sf(k: i64, n: u64, p: f64) -> f64 {
    let mut s = BigRational::zero();
    for j in k.max(0) as u64..=n {
        s += exact_pmf(j, n, p);
    }
    s.to_f64().unwrap()
}

pub fn exact_pmf_f64(k: u64, n: u64, p: f64) -> f64 {
    exact_pmf(k, n, p).to_f64().unwrap()
}

/// erf by its Maclaurin series (|x| <= 2).
fn erf_series(x: f64) -> f64 {
    let mut term = x;
    let mut sum = x;
    let x2 = x * x;
    let mut n = 0.0;
    for _ in 0..200 {
        n += 1.0;
        term *= -x2 / n;
        let add = term / (2.0 * n + 1.0);
        sum += add;
        if add.abs() <= 1e-18 * sum.abs() {
            break;
        }
    }
    sum * 2.0 / std::f64::consts::PI.sqrt()
}

/// erfc by Laplace's continued fraction (x > 2), evaluated bottom-up.
fn erfc_cf(x: f64) -> f64 {
    let mut tail = 0.0;
    for k in (1..=400).rev() {
        tail = (k as f64 / 2.0) / (x + tail);
    }
    (-x * x).exp() / std::f64::consts::PI.sqrt() / (x + tail)
}

pub fn erfc(x: f64) -> f64 {
    if x < 0.0 {
        2.0 - erfc(-x)
    } else if x <= 2.0 {
        1.0 - erf_series(x)
    } else {
        erfc_cf(x)
    }
}

/// Standard normal CDF.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / std::f64::consts::SQRT_2)
}

/// Bisection, used only by oracles.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) == (f_lo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Composite Simpson rule with `panels` (even) subintervals.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    assert!(panels.is_multiple_of(2));
    let h = (b - a) / panels as f64;
    let mut sum = f(a) + f(b);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + h * i as f64);
    }
    sum * h / 3.0
}
