//! Matrix tools on `G_n(C)`: the twisted space `X_n = {x : x conj(x) = I}`,
//! its Borel orbits, the `K A H` decomposition and the unipotent norm probe.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::involution::Involution;

pub mod kah;
pub mod orbit;
pub mod probe;

pub use kah::{a_matrix, a_part_distance, kah_decompose, AParam, KahDecomposition, Order};
pub use orbit::{monomial_witness, orbit_involution, XPoint};
pub use probe::{fit_log_bound, unipotent_probe, LogFit, ProbeSample};

pub type MatrixC = DMatrix<Complex64>;
pub type MatrixR = DMatrix<f64>;

pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn require_square(x: &MatrixC) -> Result<usize> {
    if x.nrows() != x.ncols() {
        return Err(Error::Structure(alloc::format!(
            "matrix is {}x{}",
            x.nrows(),
            x.ncols()
        )));
    }
    if x.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Domain("matrix has non-finite entries".into()));
    }
    Ok(x.nrows())
}

pub fn conj(x: &MatrixC) -> MatrixC {
    x.map(|z| z.conj())
}

pub fn frobenius(x: &MatrixC) -> f64 {
    libm::sqrt(x.iter().map(|z| z.norm_sqr()).sum::<f64>())
}

pub fn real_part(x: &MatrixC) -> MatrixR {
    x.map(|z| z.re)
}

pub fn imag_part(x: &MatrixC) -> MatrixR {
    x.map(|z| z.im)
}

pub fn complexify(x: &MatrixR) -> MatrixC {
    x.map(|r| Complex64::new(r, 0.0))
}

/// `x conj(x) = I` up to `tol * max(1, |x|_F)` in Frobenius norm.
pub fn is_x_point(x: &MatrixC, tol: f64) -> bool {
    if x.nrows() != x.ncols() {
        return false;
    }
    let n = x.nrows();
    let defect = x * conj(x) - MatrixC::identity(n, n);
    frobenius(&defect) <= tol * frobenius(x).max(1.0)
}

/// The monomial matrix `d w`, with `d_i` in row `i`, column `w(i)`.
pub fn monomial_matrix(d: &[Complex64], w: &Involution) -> Result<MatrixC> {
    if d.len() != w.len() {
        return Err(Error::Structure(alloc::format!(
            "{} diagonal entries for S_{}",
            d.len(),
            w.len()
        )));
    }
    let n = d.len();
    let mut x = MatrixC::zeros(n, n);
    for (i, &di) in d.iter().enumerate() {
        x[(i, w.apply(i))] = di;
    }
    Ok(x)
}

pub fn permutation_matrix(w: &Involution) -> MatrixC {
    monomial_matrix(&alloc::vec![ONE; w.len()], w).expect("sizes agree")
}

pub fn diagonal(d: &[Complex64]) -> MatrixC {
    MatrixC::from_diagonal(&nalgebra::DVector::from_column_slice(d))
}

/// The twisted action `b x conj(b)^{-1}`.
pub fn twisted_action(b: &MatrixC, x: &MatrixC) -> Result<MatrixC> {
    let inv = conj(b)
        .try_inverse()
        .ok_or(Error::IllConditioned(f64::INFINITY))?;
    Ok(b * x * inv)
}

/// `x = u diag(s) v*` with `s` non-increasing.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: MatrixC,
    pub s: Vec<f64>,
    pub v: MatrixC,
}

fn to_faer(x: &MatrixC) -> faer::Mat<faer::c64> {
    faer::Mat::from_fn(x.nrows(), x.ncols(), |i, j| {
        faer::c64::new(x[(i, j)].re, x[(i, j)].im)
    })
}

/// Singular value decomposition through faer; nalgebra's bidiagonal SVD
/// does not converge reliably on ill-conditioned complex input.
pub fn svd(x: &MatrixC) -> Result<Svd> {
    let (m, n) = x.shape();
    if m == 0 || n == 0 {
        return Ok(Svd {
            u: MatrixC::zeros(m, m),
            s: Vec::new(),
            v: MatrixC::zeros(n, n),
        });
    }
    let d = to_faer(x)
        .svd()
        .map_err(|_| Error::IllConditioned(f64::INFINITY))?;
    let (u, v) = (d.U(), d.V());
    let s = d.S().column_vector();
    Ok(Svd {
        u: MatrixC::from_fn(m, m, |i, j| Complex64::new(u[(i, j)].re, u[(i, j)].im)),
        s: (0..m.min(n)).map(|i| s[i].re).collect(),
        v: MatrixC::from_fn(n, n, |i, j| Complex64::new(v[(i, j)].re, v[(i, j)].im)),
    })
}

pub(crate) fn singular_values(x: &MatrixC) -> Vec<f64> {
    if x.nrows() == 0 || x.ncols() == 0 {
        return Vec::new();
    }
    to_faer(x).singular_values().unwrap_or_default()
}

/// Ratio of extreme singular values.
pub fn condition_number(x: &MatrixC) -> f64 {
    let s = singular_values(x);
    let max = s.iter().cloned().fold(0.0, f64::max);
    let min = s.iter().cloned().fold(f64::INFINITY, f64::min);
    if s.is_empty() {
        1.0
    } else if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_point_examples() {
        assert!(is_x_point(&MatrixC::identity(3, 3), 1e-12));
        let d = [
            Complex64::from_polar(1.0, 0.3),
            Complex64::from_polar(1.0, -2.0),
        ];
        assert!(is_x_point(&diagonal(&d), 1e-12));
        assert!(!is_x_point(
            &(MatrixC::identity(2, 2) * Complex64::new(2.0, 0.0)),
            1e-6
        ));
        assert!(!is_x_point(&MatrixC::zeros(2, 3), 1.0));
    }

    #[test]
    fn monomial_layout() {
        let w = Involution::from_pairs(2, &[(0, 1)]).unwrap();
        let x = monomial_matrix(&[Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.0)], &w).unwrap();
        assert_eq!(x[(0, 1)], Complex64::new(2.0, 0.0));
        assert_eq!(x[(1, 0)], Complex64::new(0.5, 0.0));
        assert!(is_x_point(&x, 1e-12));
    }
}
