//! Complex log-Gamma via the Lanczos approximation (g = 7, 9 terms),
//! with the reflection formula on `Re z < 1/2`.
//!
//! The returned value is *a* logarithm of `Gamma(z)`; the imaginary part is
//! only meaningful modulo `2 pi`. Callers exponentiate sums of these.

use core::f64::consts::PI;

use num_complex::Complex64;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// `ln Gamma(z)` for `z` away from the poles `0, -1, -2, ...`.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let one = Complex64::new(1.0, 0.0);
        return Complex64::new(LN_PI, 0.0) - ln_sin_pi(z) - ln_gamma(one - z);
    }
    let z = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += *c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + series.ln() + LN_SQRT_2PI
}

/// `ln sin(pi z)`, stable for large `|Im z|`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    if z.im.abs() < 20.0 {
        return (z * PI).sin().ln();
    }
    let one = Complex64::new(1.0, 0.0);
    if z.im > 0.0 {
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
        Complex64::new(0.0, 0.5).ln() - i * PI * z + (one - (i * 2.0 * PI * z).exp()).ln()
    } else {
        Complex64::new(0.0, -0.5).ln() + i * PI * z + (one - (-i * 2.0 * PI * z).exp()).ln()
    }
}

/// `ln n!` for small nonnegative integers.
pub fn ln_factorial(n: u64) -> f64 {
    libm::lgamma(n as f64 + 1.0)
}

/// If `z` lies within `tol` of a nonpositive integer `-n`, returns `n`.
pub fn nonpositive_integer_near(z: Complex64, tol: f64) -> Option<u64> {
    if z.im.abs() > tol || z.re > tol {
        return None;
    }
    let r = libm::round(z.re);
    if (z.re - r).abs() <= tol && r <= 0.0 {
        Some((-r) as u64)
    } else {
        None
    }
}

/// Log of the residue of Gamma at `-n`, i.e. `ln((-1)^n / n!)`.
pub fn ln_residue(n: u64) -> Complex64 {
    Complex64::new(-ln_factorial(n), if n % 2 == 1 { PI } else { 0.0 })
}
