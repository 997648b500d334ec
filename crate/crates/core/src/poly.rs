//! Dense univariate polynomials over exact rational-complex coefficients.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::scalar::QComplex;

/// Coefficients in ascending degree; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub coeffs: Vec<QComplex>,
}

impl Poly {
    pub fn one() -> Self {
        Poly {
            coeffs: alloc::vec![QComplex::one()],
        }
    }

    /// `prod_i (x + shifts[i])`.
    pub fn from_shifts<'a>(shifts: impl IntoIterator<Item = &'a QComplex>) -> Self {
        let mut p = Poly::one();
        for c in shifts {
            p = p.mul_linear(c);
        }
        p
    }

    /// Multiplies by `(x + c)`.
    pub fn mul_linear(&self, c: &QComplex) -> Poly {
        let mut out = alloc::vec![QComplex::zero(); self.coeffs.len() + 1];
        for (d, a) in self.coeffs.iter().enumerate() {
            out[d + 1] = out[d + 1].clone() + a.clone();
            out[d] = out[d].clone() + a.clone() * c.clone();
        }
        let mut p = Poly { coeffs: out };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, d: usize) -> QComplex {
        self.coeffs.get(d).cloned().unwrap_or_else(QComplex::zero)
    }

    pub fn eval(&self, x: &QComplex) -> QComplex {
        self.coeffs
            .iter()
            .rev()
            .fold(QComplex::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Lowest degree at which the two polynomials differ.
    pub fn first_difference(&self, other: &Poly) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&d| self.coeff(d) != other.coeff(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn q(p: i64, d: i64) -> QComplex {
        QComplex::new(rational(p, d), rational(0, 1))
    }

    #[test]
    fn expands_products() {
        // (x + 1)(x + 2) = x^2 + 3x + 2
        let p = Poly::from_shifts(&[q(1, 1), q(2, 1)]);
        assert_eq!(p.coeffs, [q(2, 1), q(3, 1), q(1, 1)]);
        assert_eq!(p.eval(&q(3, 1)), q(20, 1));
    }

    #[test]
    fn complex_shifts() {
        // (x + i)(x - i) = x^2 + 1
        let i = QComplex::new(rational(0, 1), rational(1, 1));
        let p = Poly::from_shifts(&[i.clone(), -i]);
        assert_eq!(p.coeffs, [q(1, 1), q(0, 1), q(1, 1)]);
    }

    #[test]
    fn first_difference_is_lowest_degree() {
        let a = Poly::from_shifts(&[q(3, 4), q(3, 4)]);
        let b = Poly::from_shifts(&[q(1, 4), q(5, 4)]);
        assert_eq!(a.first_difference(&b), Some(0));
        assert_eq!(a.first_difference(&a), None);
    }
}
