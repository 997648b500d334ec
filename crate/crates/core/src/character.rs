//! Characters of C^x and of the diagonal torus of the Borel subgroup.
//!
//! A continuous character of C^x is stored as `(sigma, k)` with
//! `chi(z) = |z|_C^sigma * (z/|z|)^k`, where `|z|_C = x^2 + y^2` is the
//! square of the usual absolute value. Note the exponent is on `|z|_C`,
//! so `|chi(t)| = |t|^(2 Re sigma)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{QComplex, Scalar};

/// Character `z -> |z|_C^sigma (z/|z|)^k` of C^x.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub sigma: Scalar,
    pub k: i64,
}

impl Character {
    pub fn new(sigma: Scalar, k: i64) -> Self {
        Character { sigma, k }
    }

    /// The unitary character `c_m(z) = (z/|z|)^m`.
    pub fn unitary(m: i64) -> Self {
        Character {
            sigma: Scalar::zero(),
            k: m,
        }
    }

    /// Pointwise product of characters.
    pub fn mul(&self, other: &Character) -> Character {
        Character {
            sigma: &self.sigma + &other.sigma,
            k: self.k + other.k,
        }
    }

    /// `z -> chi(conj z)^{-1}`, which is `(-sigma, k)` in these coordinates.
    pub fn bar_inverse(&self) -> Character {
        Character {
            sigma: -&self.sigma,
            k: self.k,
        }
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        match &self.sigma {
            Scalar::Exact(q) => q.re.is_zero(),
            Scalar::Float(z) => z.re.abs() <= tol,
        }
    }

    /// R^x-distinguished: sigma = 0 and even winding.
    pub fn is_real_distinguished(&self, tol: f64) -> bool {
        let zero = match &self.sigma {
            Scalar::Exact(q) => q.is_zero(),
            Scalar::Float(z) => z.norm() <= tol,
        };
        zero && self.k % 2 == 0
    }

    /// Exponent `lambda` with `|chi(t)| = |t|^lambda`, i.e. `2 Re sigma`.
    pub fn lambda(&self) -> f64 {
        2.0 * self.sigma.re_f64()
    }

    /// Evaluates the character at `z != 0`.
    ///
    /// The result is exact when both inputs are exact, `|z|^sigma` is rational
    /// (`sigma` a real integer, or `|z| = 1`) and `z/|z|` raised to `k` is
    /// rational (`k` even, or `|z|` rational). Otherwise a float is returned.
    pub fn eval(&self, z: &Scalar) -> Result<Scalar> {
        if z.is_zero() {
            return Err(Error::Domain("character evaluated at z = 0".into()));
        }
        if let (Scalar::Exact(s), Scalar::Exact(zq)) = (&self.sigma, z) {
            let sigma = if zq.norm_sqr().is_one() {
                Some(BigInt::zero())
            } else if s.im.is_zero() && s.re.is_integer() {
                Some(s.re.to_integer())
            } else {
                None
            };
            if let Some(v) = sigma.and_then(|sigma| eval_exact(zq, sigma, self.k)) {
                return Ok(Scalar::Exact(v));
            }
        }
        let zf = z.to_c64();
        let abs_c = zf.norm_sqr();
        let magnitude = (self.sigma.to_c64() * libm::log(abs_c)).exp();
        let phase = Complex64::from_polar(1.0, self.k as f64 * zf.arg());
        Ok(Scalar::Float(magnitude * phase))
    }
}

fn qpow(z: &QComplex, e: i64) -> QComplex {
    let mut acc = QComplex::one();
    for _ in 0..e.unsigned_abs() {
        acc *= z.clone();
    }
    if e < 0 {
        QComplex::one() / acc
    } else {
        acc
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

fn eval_exact(z: &QComplex, sigma: BigInt, k: i64) -> Option<QComplex> {
    let abs_c = z.norm_sqr();
    let sigma: i64 = sigma.try_into().ok()?;
    if sigma.unsigned_abs() > 4096 || k.unsigned_abs() > 4096 {
        return None;
    }
    let radial = qpow(&QComplex::new(abs_c.clone(), BigRational::zero()), sigma);
    let angular = if k % 2 == 0 {
        qpow(z, k) / qpow(&QComplex::new(abs_c, BigRational::zero()), k / 2)
    } else {
        let r = rational_sqrt(&abs_c)?;
        qpow(&(z.clone() / QComplex::new(r, BigRational::zero())), k)
    };
    Some(radial * angular)
}

/// A character `(chi_1, ..., chi_n)` of the Borel subgroup, read off the diagonal torus.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct BorelCharacter {
    pub entries: Vec<Character>,
}

impl BorelCharacter {
    pub fn new(entries: Vec<Character>) -> Self {
        BorelCharacter { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(|c| c.sigma.is_exact())
    }

    /// Errors with the first float entry when exact mode is required.
    pub fn require_exact(&self) -> Result<()> {
        match self.entries.iter().position(|c| !c.sigma.is_exact()) {
            Some(index) => Err(Error::NotExact { index }),
            None => Ok(()),
        }
    }

    pub fn lambdas(&self) -> Vec<f64> {
        self.entries.iter().map(Character::lambda).collect()
    }

    pub fn bar_inverse(&self) -> BorelCharacter {
        BorelCharacter::new(self.entries.iter().map(Character::bar_inverse).collect())
    }
}

impl From<Vec<Character>> for BorelCharacter {
    fn from(entries: Vec<Character>) -> Self {
        BorelCharacter::new(entries)
    }
}
