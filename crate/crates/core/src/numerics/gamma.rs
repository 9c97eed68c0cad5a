//! Log-gamma and log-binomial-coefficient helpers.

use std::f64::consts::PI;
use std::sync::OnceLock;

// Lanczos approximation, g = 7, nine terms (Godfrey's coefficient set).
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest `n` for which `n!` is finite in `f64`.
const FACTORIAL_TABLE_MAX: usize = 170;

/// Natural log of the gamma function for `x > 0`.
///
/// Lanczos series for `x >= 0.5`, reflection below that.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

fn ln_factorial_table() -> &'static [f64; FACTORIAL_TABLE_MAX + 1] {
    static TABLE: OnceLock<[f64; FACTORIAL_TABLE_MAX + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; FACTORIAL_TABLE_MAX + 1];
        let mut fact = 1.0_f64;
        for (i, slot) in out.iter_mut().enumerate().skip(1) {
            fact *= i as f64;
            *slot = fact.ln();
        }
        out
    })
}

/// `ln(n!)`, tabulated for `n <= 170`.
pub fn ln_factorial(n: u64) -> f64 {
    if n as usize <= FACTORIAL_TABLE_MAX {
        ln_factorial_table()[n as usize]
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

/// `ln C(n, k)` for `k <= n`.
pub fn ln_choose(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    let (small, large) = if k <= n - k { (k, n - k) } else { (n - k, k) };
    ln_factorial(n) - ln_factorial(large) - ln_factorial(small)
}

/// `ln B(a, b)`.
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}
