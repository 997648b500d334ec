//! Borel orbits on `X_n` under the twisted action `x -> b x conj(b)^{-1}`.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::{frobenius, is_x_point, require_square, singular_values, MatrixC, ONE};
use crate::error::{Error, Result};
use crate::involution::Involution;

/// Singular values below this multiple of `|x|_F` count as zero.
pub const RANK_TOL: f64 = 1e-8;
/// Singular values within this factor of the rank threshold are refused.
pub const RANK_BAND: f64 = 100.0;

/// A validated point of `X_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct XPoint {
    matrix: MatrixC,
}

impl XPoint {
    pub fn new(matrix: MatrixC, tol: f64) -> Result<Self> {
        require_square(&matrix)?;
        if !is_x_point(&matrix, tol) {
            let n = matrix.nrows();
            let defect = frobenius(&(&matrix * super::conj(&matrix) - MatrixC::identity(n, n)));
            return Err(Error::NotXPoint(alloc::format!(
                "|x conj(x) - I|_F = {defect:e}"
            )));
        }
        Ok(XPoint { matrix })
    }

    pub fn matrix(&self) -> &MatrixC {
        &self.matrix
    }

    pub fn into_matrix(self) -> MatrixC {
        self.matrix
    }
}

fn numerical_rank(x: &MatrixC, rows: usize, cols: usize, threshold: f64) -> Result<usize> {
    let n = x.nrows();
    if rows >= n || cols == 0 {
        return Ok(0);
    }
    let minor = x.view((rows, 0), (n - rows, cols)).into_owned();
    let mut rank = 0;
    for s in singular_values(&minor) {
        if s > threshold / RANK_BAND && s <= threshold * RANK_BAND {
            return Err(Error::NumericalRank {
                row: rows + 1,
                col: cols,
                value: s,
            });
        }
        if s > threshold {
            rank += 1;
        }
    }
    Ok(rank)
}

/// The involution `w` with `x` in the Bruhat cell `B w B`.
///
/// With `r(i, j)` the rank of the lower-left minor on rows `i..n` and columns
/// `0..j`, `w(j) = i` exactly when `r(i, j+1) - r(i+1, j+1) - r(i, j) + r(i+1, j) = 1`.
pub fn orbit_involution(x: &XPoint) -> Result<Involution> {
    let x = x.matrix();
    let n = x.nrows();
    let threshold = RANK_TOL * frobenius(x);
    // r[i][j] for i, j in 0..=n
    let mut r = alloc::vec![alloc::vec![0usize; n + 1]; n + 1];
    for (i, row) in r.iter_mut().enumerate().take(n) {
        for (j, entry) in row.iter_mut().enumerate().skip(1) {
            *entry = numerical_rank(x, i, j, threshold)?;
        }
    }
    let mut map = alloc::vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..n {
            let jump =
                r[i][j + 1] as i64 - r[i + 1][j + 1] as i64 - r[i][j] as i64 + r[i + 1][j] as i64;
            if jump == 1 {
                if map[j] != usize::MAX {
                    return Err(Error::Structure(alloc::format!(
                        "column {} has two rank jumps",
                        j + 1
                    )));
                }
                map[j] = i;
            } else if jump != 0 {
                return Err(Error::Structure(alloc::format!(
                    "rank jump {jump} at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if map.contains(&usize::MAX) {
        return Err(Error::Structure(
            "rank jumps do not form a permutation".into(),
        ));
    }
    Involution::new(map)
}

/// Solves `mu (d w) conj(mu)^{-1} = w` for a diagonal `mu`.
///
/// Fixed points take `mu_i = d_i^{-1/2}` on the unit circle; a 2-cycle
/// `i < j` takes `mu_i = 1`, `mu_j = conj(d_i)`.
pub fn monomial_witness(d: &[Complex64], w: &Involution, tol: f64) -> Result<Vec<Complex64>> {
    if d.len() != w.len() {
        return Err(Error::Structure(alloc::format!(
            "{} diagonal entries for S_{}",
            d.len(),
            w.len()
        )));
    }
    let mut mu = alloc::vec![ONE; d.len()];
    for i in 0..d.len() {
        let j = w.apply(i);
        let pairing = d[i] * d[j].conj();
        if (pairing - ONE).norm() > tol {
            return Err(Error::NotXPoint(alloc::format!(
                "d_{} conj(d_{}) = {pairing} is not 1",
                i + 1,
                j + 1
            )));
        }
        if i == j {
            mu[i] = Complex64::from_polar(1.0, -d[i].arg() / 2.0);
        } else if i < j {
            mu[j] = d[i].conj();
        }
    }
    Ok(mu)
}

#[cfg(test)]
mod tests {
    use super::super::{diagonal, monomial_matrix, permutation_matrix, twisted_action};
    use super::*;

    #[test]
    fn identity_and_swap() {
        let id = XPoint::new(MatrixC::identity(3, 3), 1e-12).unwrap();
        assert_eq!(orbit_involution(&id).unwrap(), Involution::identity(3));
        let w = Involution::from_pairs(2, &[(0, 1)]).unwrap();
        let x = XPoint::new(permutation_matrix(&w), 1e-12).unwrap();
        assert_eq!(orbit_involution(&x).unwrap(), w);
    }

    #[test]
    fn every_small_involution_is_realised() {
        for n in 0..=4 {
            for w in Involution::all(n) {
                let x = XPoint::new(permutation_matrix(&w), 1e-12).unwrap();
                assert_eq!(orbit_involution(&x).unwrap(), w);
            }
        }
    }

    #[test]
    fn rejects_non_x_points() {
        let x = MatrixC::identity(2, 2) * Complex64::new(2.0, 0.0);
        assert!(matches!(XPoint::new(x, 1e-9), Err(Error::NotXPoint(_))));
    }

    #[test]
    fn witness_examples() {
        let w = Involution::from_pairs(3, &[(0, 2)]).unwrap();
        assert_eq!(monomial_witness(&[ONE; 3], &w, 1e-12).unwrap(), [ONE; 3]);

        let theta = 1.1;
        let d = [Complex64::from_polar(1.0, theta)];
        let mu = monomial_witness(&d, &Involution::identity(1), 1e-12).unwrap();
        assert!((mu[0] - Complex64::from_polar(1.0, -theta / 2.0)).norm() < 1e-15);
        assert!((mu[0] * d[0] / mu[0].conj() - ONE).norm() < 1e-15);

        let w = Involution::from_pairs(2, &[(0, 1)]).unwrap();
        let d1 = Complex64::new(0.0, 2.0);
        let d = [d1, ONE / d1.conj()];
        let mu = monomial_witness(&d, &w, 1e-12).unwrap();
        let x = monomial_matrix(&d, &w).unwrap();
        let y = twisted_action(&diagonal(&mu), &x).unwrap();
        assert!(frobenius(&(y - permutation_matrix(&w))) < 1e-14);

        let bad = [d1, d1];
        assert!(matches!(
            monomial_witness(&bad, &w, 1e-9),
            Err(Error::NotXPoint(_))
        ));
    }
}
