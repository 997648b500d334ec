//! Archimedean gamma factors for the additive character `psi(x) = e^{pi (x - conj x)}`.
//!
//! For the unitary character `c_m(z) = (z/|z|)^m`
//!
//! ```text
//! gamma(s, c_m, psi) = eps_m (2 pi)^{1-s} Gamma(s + |m|/2) / ((2 pi)^s Gamma(1 - s + |m|/2))
//! ```
//!
//! with `eps_m = -1` exactly when `m` is odd and negative, `+1` otherwise.
//! This sign follows Tate's convention as used for GL_n(C) distinguishedness;
//! other references normalise it as `i^{-|m|}`, and those values differ.
//! A general character `(sigma, k)` shifts `s` by `sigma`.
//!
//! Values are kept in log form (log-magnitude plus an unwrapped phase) together
//! with a pole order, so long products neither overflow nor turn into NaN.

use core::f64::consts::PI;

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::character::{BorelCharacter, Character};
use crate::distinguish::Certificate;
use crate::error::{Error, Result};
use crate::lgamma::{ln_gamma, ln_residue, nonpositive_integer_near};
use crate::scalar::Scalar;

/// A Gamma argument within this distance of a nonpositive integer is treated as a pole.
pub const POLE_TOL: f64 = 1e-10;

const LN_2PI: f64 = 1.837_877_066_409_345_5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaKind {
    Finite,
    Zero,
    Pole,
}

impl GammaKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GammaKind::Finite => "finite",
            GammaKind::Zero => "zero",
            GammaKind::Pole => "pole",
        }
    }
}

/// A gamma factor value.
///
/// `order` counts Gamma poles in numerators minus those in denominators.
/// When it is nonzero, `log` holds the leading coefficient obtained by
/// replacing each singular `Gamma(-n)` by its residue `(-1)^n / n!`; matched
/// pole/zero pairs therefore cancel to a finite value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaValue {
    pub log: Complex64,
    pub order: i32,
}

impl GammaValue {
    pub fn one() -> Self {
        GammaValue {
            log: Complex64::new(0.0, 0.0),
            order: 0,
        }
    }

    pub fn kind(&self) -> GammaKind {
        match self.order {
            0 => GammaKind::Finite,
            o if o > 0 => GammaKind::Pole,
            _ => GammaKind::Zero,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order == 0
    }

    /// The finite value, or the regularised leading coefficient at a pole/zero.
    pub fn value(&self) -> Complex64 {
        self.log.exp()
    }

    pub fn mul(&self, other: &GammaValue) -> GammaValue {
        GammaValue {
            log: self.log + other.log,
            order: self.order + other.order,
        }
    }

    /// `|value - 1|` for finite values, infinity otherwise.
    pub fn defect(&self) -> f64 {
        if self.is_finite() {
            (self.value() - Complex64::new(1.0, 0.0)).norm()
        } else {
            f64::INFINITY
        }
    }
}

/// Tate's sign `eps_m`.
pub fn epsilon(m: i64) -> i8 {
    if m % 2 != 0 && m < 0 {
        -1
    } else {
        1
    }
}

/// Log of `Gamma(z)` together with a pole flag.
fn ln_gamma_or_residue(z: Complex64) -> (Complex64, bool) {
    match nonpositive_integer_near(z, POLE_TOL) {
        Some(n) => (ln_residue(n), true),
        None => (ln_gamma(z), false),
    }
}

/// `gamma(s, c_m, psi)` for a float `s`.
pub fn tate_gamma_unitary(s: Complex64, m: i64) -> GammaValue {
    let half_m = m.unsigned_abs() as f64 / 2.0;
    let one = Complex64::new(1.0, 0.0);
    let (num, num_pole) = ln_gamma_or_residue(s + half_m);
    let (den, den_pole) = ln_gamma_or_residue(one - s + half_m);
    let sign = if epsilon(m) < 0 {
        Complex64::new(0.0, PI)
    } else {
        Complex64::new(0.0, 0.0)
    };
    GammaValue {
        log: sign + (one - s * 2.0) * LN_2PI + num - den,
        order: num_pole as i32 - den_pole as i32,
    }
}

/// `gamma(s, chi, psi)` for `chi = (sigma, k)`: the unitary formula at `s + sigma`.
pub fn tate_gamma(s: &Scalar, chi: &Character) -> GammaValue {
    tate_gamma_unitary((s + &chi.sigma).to_c64(), chi.k)
}

/// `gamma(s, chi, psi) * gamma(1 - s, bar_inverse(chi), psi)`, which the
/// functional equation forces to be 1.
pub fn tate_fe_defect(s: &Scalar, chi: &Character) -> Result<Complex64> {
    let first = tate_gamma(s, chi);
    let second = tate_gamma(&(&Scalar::one() - s), &chi.bar_inverse());
    for (g, which) in [(first, "s"), (second, "1-s")] {
        if !g.is_finite() {
            return Err(Error::IndeterminateDefect {
                which,
                kind: g.kind().as_str(),
            });
        }
    }
    Ok(first.mul(&second).value())
}

/// Rankin-Selberg gamma factor of `Ind(chi) x Ind(chi')`: the product over all
/// pairs of the Tate factors of `chi_i chi'_j`.
pub fn rs_gamma(chi: &BorelCharacter, chi_prime: &BorelCharacter, s: &Scalar) -> GammaValue {
    let mut acc = GammaValue::one();
    for a in &chi.entries {
        for b in &chi_prime.entries {
            acc = acc.mul(&tate_gamma(s, &a.mul(b)));
        }
    }
    acc
}

/// The two partial products of the Rankin-Selberg factor obtained by grouping
/// pair terms along a pair of involution certificates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Regrouped {
    /// Terms `(i, j)` fixed by `(w, w')`.
    pub fixed: GammaValue,
    /// Products `gamma(chi_i chi'_j) gamma(chi_{w(i)} chi'_{w'(j)})` over orbit representatives.
    pub paired: GammaValue,
}

impl Regrouped {
    pub fn total(&self) -> GammaValue {
        self.fixed.mul(&self.paired)
    }
}

/// Regroups `rs_gamma(chi, chi', s)` as `I_1 * I_2` along certificates of `chi` and `chi'`.
pub fn rs_gamma_regrouped(
    chi: &BorelCharacter,
    cert: &Certificate,
    chi_prime: &BorelCharacter,
    cert_prime: &Certificate,
    s: &Scalar,
) -> Result<Regrouped> {
    if cert.w.len() != chi.len() || cert_prime.w.len() != chi_prime.len() {
        return Err(Error::Structure(
            "certificate size does not match character".into(),
        ));
    }
    let factor = |i: usize, j: usize| tate_gamma(s, &chi.entries[i].mul(&chi_prime.entries[j]));
    let mut fixed = GammaValue::one();
    let mut paired = GammaValue::one();
    for i in 0..chi.len() {
        let wi = cert.w.apply(i);
        for j in 0..chi_prime.len() {
            let wj = cert_prime.w.apply(j);
            if wi == i && wj == j {
                fixed = fixed.mul(&factor(i, j));
            } else if i < wi || (i == wi && wj < j) {
                paired = paired.mul(&factor(i, j).mul(&factor(wi, wj)));
            }
        }
    }
    Ok(Regrouped { fixed, paired })
}

/// Evaluates `gamma(1/2, c_m)` for each `m` in the range; convenience for sign tables.
pub fn epsilon_table(range: core::ops::RangeInclusive<i64>) -> Vec<(i64, Complex64)> {
    let half = Complex64::new(0.5, 0.0);
    range
        .map(|m| (m, tate_gamma_unitary(half, m).value()))
        .collect()
}
