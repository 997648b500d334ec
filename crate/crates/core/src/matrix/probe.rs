//! Norm comparison between `u` and `v = u conj(u)^{-1}` for upper unitriangular
//! `u` with purely imaginary entries above the diagonal.

use alloc::vec::Vec;

use super::{conj, frobenius, require_square, MatrixC};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeSample {
    /// Sum of squared moduli of the entries of `u`.
    pub norm_u: f64,
    /// Same for `v = u conj(u)^{-1}`.
    pub norm_v: f64,
}

pub fn require_fundamental_domain(u: &MatrixC) -> Result<usize> {
    let n = require_square(u)?;
    let tol = 1e-12 * frobenius(u).max(1.0);
    for i in 0..n {
        for j in 0..n {
            let z = u[(i, j)];
            let bad = match i.cmp(&j) {
                core::cmp::Ordering::Greater => z.norm() > tol,
                core::cmp::Ordering::Equal => (z.re - 1.0).abs() > tol || z.im.abs() > tol,
                core::cmp::Ordering::Less => z.re.abs() > tol,
            };
            if bad {
                return Err(Error::NotInDomain(alloc::format!(
                    "entry ({}, {}) = {z}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(n)
}

/// `v = u conj(u)^{-1}`.
pub fn probe_image(u: &MatrixC) -> Result<MatrixC> {
    let n = require_fundamental_domain(u)?;
    let inv = conj(u)
        .solve_upper_triangular(&MatrixC::identity(n, n))
        .ok_or_else(|| Error::NotInDomain("conj(u) is singular".into()))?;
    Ok(u * inv)
}

pub fn unipotent_probe(u: &MatrixC) -> Result<ProbeSample> {
    let v = probe_image(u)?;
    let sq = |m: &MatrixC| m.iter().map(|z| z.norm_sqr()).sum::<f64>();
    Ok(ProbeSample {
        norm_u: sq(u),
        norm_v: sq(&v),
    })
}

/// `log |u| <= d log |v| + c` fitted to a sample set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogFit {
    pub d: f64,
    pub c: f64,
    /// Samples above the line by more than `margin`.
    pub violations: usize,
    pub margin: f64,
}

impl LogFit {
    pub fn bound(&self, norm_v: f64) -> f64 {
        self.d * libm::log(norm_v) + self.c
    }

    pub fn count_violations(&self, samples: &[ProbeSample]) -> usize {
        samples
            .iter()
            .filter(|s| libm::log(s.norm_u) > self.bound(s.norm_v) + self.margin)
            .count()
    }
}

/// Least-squares slope `d`; the intercept is then raised until the line
/// covers every sample.
pub fn fit_log_bound(samples: &[ProbeSample], margin: f64) -> LogFit {
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .map(|s| (libm::log(s.norm_v), libm::log(s.norm_u)))
        .collect();
    let count = pts.len().max(1) as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / count;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / count;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let d = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let c = pts
        .iter()
        .map(|p| p.1 - d * p.0)
        .fold(f64::NEG_INFINITY, f64::max);
    let c = if c.is_finite() { c } else { my };
    let mut fit = LogFit {
        d,
        c,
        violations: 0,
        margin,
    };
    fit.violations = fit.count_violations(samples);
    fit
}

#[cfg(test)]
mod tests {
    use super::super::ONE;
    use super::*;
    use num_complex::Complex64;

    fn upper(n: usize, entries: &[(usize, usize, f64)]) -> MatrixC {
        let mut u = MatrixC::identity(n, n);
        for &(i, j, x) in entries {
            u[(i, j)] = Complex64::new(0.0, x);
        }
        u
    }

    #[test]
    fn identity_probe() {
        let s = unipotent_probe(&MatrixC::identity(4, 4)).unwrap();
        assert_eq!((s.norm_u, s.norm_v), (4.0, 4.0));
    }

    #[test]
    fn two_by_two() {
        let x = 1.7;
        let u = upper(2, &[(0, 1, x)]);
        let v = probe_image(&u).unwrap();
        assert!((v[(0, 1)] - Complex64::new(0.0, 2.0 * x)).norm() < 1e-14);
        let s = unipotent_probe(&u).unwrap();
        assert!((s.norm_u - (2.0 + x * x)).abs() < 1e-12);
        assert!((s.norm_v - (2.0 + 4.0 * x * x)).abs() < 1e-12);
    }

    #[test]
    fn three_by_three() {
        let (x, y, z) = (0.5, -1.25, 2.0);
        let u = upper(3, &[(0, 1, x), (0, 2, y), (1, 2, z)]);
        let v = probe_image(&u).unwrap();
        let i = Complex64::new(0.0, 1.0);
        assert!((v[(0, 1)] - i * (2.0 * x)).norm() < 1e-14);
        assert!((v[(1, 2)] - i * (2.0 * z)).norm() < 1e-14);
        assert!((v[(0, 2)] - (i * (2.0 * y) - Complex64::new(2.0 * x * z, 0.0))).norm() < 1e-14);
        assert_eq!(v[(1, 0)], Complex64::new(0.0, 0.0));
        assert_eq!(v[(2, 2)], ONE);
    }

    #[test]
    fn domain_is_checked() {
        let mut u = upper(2, &[(0, 1, 1.0)]);
        u[(0, 1)] = Complex64::new(0.5, 1.0);
        assert!(matches!(unipotent_probe(&u), Err(Error::NotInDomain(_))));
        let mut u = MatrixC::identity(2, 2);
        u[(1, 0)] = ONE;
        assert!(unipotent_probe(&u).is_err());
    }

    #[test]
    fn fit_covers_its_samples() {
        let samples: Vec<ProbeSample> = (1..50)
            .map(|k| {
                let x = k as f64 * 0.37;
                ProbeSample {
                    norm_u: 2.0 + x * x,
                    norm_v: 2.0 + 4.0 * x * x,
                }
            })
            .collect();
        let fit = fit_log_bound(&samples, 1e-6);
        assert_eq!(fit.violations, 0);
        assert!(fit.d > 0.5 && fit.d < 1.5);
    }
}
