//! Complex scalars in two modes: exact rational-complex and binary64 floats.
//!
//! Exact values are `Complex<BigRational>` and stay exact under `+ - * /`.
//! Any operation that touches a float value produces a float.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational complex number.
pub type QComplex = num_complex::Complex<BigRational>;

/// Default relative tolerance of float mode.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A complex scalar, exact or float.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(QComplex),
    Float(Complex64),
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"-0.25"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".to_string()));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if t.contains('/') || frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(Error::Parse(format!("malformed decimal {t:?}")));
        }
        let negative = int_part.starts_with('-');
        let digits = int_part.trim_start_matches(['-', '+']);
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("malformed decimal {t:?}")));
        }
        let mut joined = String::from(if digits.is_empty() { "0" } else { digits });
        joined.push_str(frac_part);
        let numer = BigInt::from_str(&joined).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        let value = BigRational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            let q = BigInt::from_str(q.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {t:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => BigInt::from_str(t)
            .map(BigRational::from_integer)
            .map_err(|e| Error::Parse(format!("{t:?}: {e}"))),
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Lexicographic order on (re, im), used to canonicalise exact values.
pub fn cmp_qcomplex(a: &QComplex, b: &QComplex) -> Ordering {
    a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(QComplex::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(QComplex::one())
    }

    pub fn exact(re: BigRational, im: BigRational) -> Self {
        Scalar::Exact(QComplex::new(re, im))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::exact(rational(p, q), BigRational::zero())
    }

    pub fn int(p: i64) -> Self {
        Scalar::ratio(p, 1)
    }

    pub fn float(re: f64, im: f64) -> Self {
        Scalar::Float(Complex64::new(re, im))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&QComplex> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Float(_) => None,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Scalar::Exact(q) => Complex64::new(rational_to_f64(&q.re), rational_to_f64(&q.im)),
            Scalar::Float(z) => *z,
        }
    }

    pub fn re_f64(&self) -> f64 {
        self.to_c64().re
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_zero(),
            Scalar::Float(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    /// Sign of the real part; exact when possible.
    pub fn re_signum(&self) -> i32 {
        match self {
            Scalar::Exact(q) => {
                if q.re.is_positive() {
                    1
                } else if q.re.is_negative() {
                    -1
                } else {
                    0
                }
            }
            Scalar::Float(z) => {
                if z.re > 0.0 {
                    1
                } else if z.re < 0.0 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Exact(q) => Scalar::Exact(q.conj()),
            Scalar::Float(z) => Scalar::Float(z.conj()),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                if b.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Exact(a / b))
                }
            }
            _ => {
                let b = rhs.to_c64();
                if b.re == 0.0 && b.im == 0.0 {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Float(self.to_c64() / b))
                }
            }
        }
    }

    /// Equality: exact comparison when both sides are exact, otherwise
    /// `|a - b| <= tol * max(1, |a|, |b|)`.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => {
                let a = self.to_c64();
                let b = other.to_c64();
                let scale = 1f64.max(a.norm()).max(b.norm());
                (a - b).norm() <= tol * scale
            }
        }
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Float(z)
    }
}

impl From<QComplex> for Scalar {
    fn from(q: QComplex) -> Self {
        Scalar::Exact(q)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self) $op (&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.clone() $op b.clone()),
                    _ => Scalar::Float(self.to_c64() $op rhs.to_c64()),
                }
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(-q.clone()),
            Scalar::Float(z) => Scalar::Float(-*z),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{}+{}i", format_rational(&q.re), format_rational(&q.im)),
            Scalar::Float(z) => write!(f, "{}+{}i", z.re, z.im),
        }
    }
}
