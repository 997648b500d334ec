//! Random inputs for sweeps, probes and tests. All samplers take an explicit
//! RNG so runs are reproducible from a seed.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::involution::Involution;
use crate::matrix::{MatrixC, MatrixR};

pub use rand_chacha::ChaCha8Rng as SeededRng;

pub fn seeded(seed: u64) -> SeededRng {
    use rand::SeedableRng;
    SeededRng::seed_from_u64(seed)
}

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

pub fn complex_gaussian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MatrixC {
    MatrixC::from_fn(n, n, |_, _| Complex64::new(normal(rng), normal(rng)))
}

pub fn real_gaussian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MatrixR {
    MatrixR::from_fn(n, n, |_, _| normal(rng))
}

/// Haar-distributed unitary: QR of a complex Gaussian with the phases of
/// `diag R` moved into `Q`.
pub fn unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MatrixC {
    let qr = complex_gaussian(n, rng).qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        let d = r[(j, j)];
        if d.norm() > 0.0 {
            let phase = d / d.norm();
            for i in 0..n {
                q[(i, j)] *= phase;
            }
        }
    }
    q
}

/// `U diag(s) V` with `log10(s)` spread uniformly over `[0, log10_cond]`.
pub fn with_condition<R: Rng + ?Sized>(n: usize, log10_cond: f64, rng: &mut R) -> MatrixC {
    let u = unitary(n, rng);
    let v = unitary(n, rng);
    let mut s: Vec<f64> = (0..n)
        .map(|_| rng.random_range(0.0..=1.0) * log10_cond)
        .collect();
    if n >= 2 {
        s[0] = 0.0;
        s[n - 1] = log10_cond;
    }
    let d = MatrixC::from_diagonal(&nalgebra::DVector::from_iterator(
        n,
        s.iter().map(|e| Complex64::new(libm::pow(10.0, *e), 0.0)),
    ));
    u * d * v
}

/// Real matrix with moderate condition number: Gaussian plus a multiple of the identity.
pub fn real_invertible<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MatrixR {
    let mut h = real_gaussian(n, rng);
    for i in 0..n {
        let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        h[(i, i)] += sign * 2.0 * libm::sqrt(n as f64);
    }
    h
}

/// Upper-triangular with diagonal moduli in `[1/2, 2]` and Gaussian entries above.
pub fn borel<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MatrixC {
    let mut b = MatrixC::zeros(n, n);
    for i in 0..n {
        let modulus = libm::pow(2.0, rng.random_range(-1.0..=1.0));
        b[(i, i)] = Complex64::from_polar(modulus, rng.random_range(0.0..core::f64::consts::TAU));
        for j in i + 1..n {
            b[(i, j)] = Complex64::new(normal(rng), normal(rng));
        }
    }
    b
}

/// A diagonal `d` with `d w` in `X_n`.
pub fn admissible_diagonal<R: Rng + ?Sized>(w: &Involution, rng: &mut R) -> Vec<Complex64> {
    let n = w.len();
    let mut d = alloc::vec![Complex64::new(1.0, 0.0); n];
    for i in 0..n {
        let j = w.apply(i);
        if i == j {
            d[i] = Complex64::from_polar(1.0, rng.random_range(0.0..core::f64::consts::TAU));
        } else if i < j {
            let modulus = libm::pow(2.0, rng.random_range(-1.0..=1.0));
            d[i] = Complex64::from_polar(modulus, rng.random_range(0.0..core::f64::consts::TAU));
            d[j] = Complex64::new(1.0, 0.0) / d[i].conj();
        }
    }
    d
}

/// Upper unitriangular `u` with entries `i x` above the diagonal, `|x|` log-uniform
/// in `[10^-3, 10^max_log10]`.
pub fn unipotent<R: Rng + ?Sized>(n: usize, max_log10: f64, rng: &mut R) -> MatrixC {
    let mut u = MatrixC::identity(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let magnitude = libm::pow(10.0, rng.random_range(-3.0..=max_log10));
            let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            u[(i, j)] = Complex64::new(0.0, sign * magnitude);
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{frobenius, is_x_point, monomial_matrix};

    #[test]
    fn unitary_is_unitary() {
        let mut rng = seeded(1);
        let u = unitary(5, &mut rng);
        assert!(frobenius(&(u.adjoint() * &u - MatrixC::identity(5, 5))) < 1e-12);
    }

    #[test]
    fn admissible_diagonal_lands_in_x() {
        let mut rng = seeded(2);
        for w in Involution::all(4) {
            let d = admissible_diagonal(&w, &mut rng);
            assert!(is_x_point(&monomial_matrix(&d, &w).unwrap(), 1e-12));
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(borel(3, &mut seeded(9)), borel(3, &mut seeded(9)));
    }
}
