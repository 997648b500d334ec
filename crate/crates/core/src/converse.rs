//! Deciding distinguishedness from gamma values of twists.
//!
//! For `chi = ((s_1, k_1), ..., (s_n, k_n))` and the R^x-distinguished unitary
//! characters `c_{2m}`, the twisted factor
//! `gamma(1/2, Ind(chi) x c_{2m}, psi)` splits as `p1 * p2 * p3` with
//!
//! ```text
//! p1 = prod eps_{2m + k_i}
//! p2 = (2 pi)^{-2 (s_1 + ... + s_n)}
//! p3 = prod Gamma(1/2 + s_i + |k_i + 2m|/2) / Gamma(1/2 - s_i + |k_i + 2m|/2)
//! ```
//!
//! If every twist gives 1 then, for `m` large, the ratio of consecutive `p3`
//! forces the polynomial identity
//! `prod (1/2 + s_i + (k_i + 2m)/2) = prod (1/2 - s_i + (k_i + 2m)/2)`.
//! Inside the strip `-1/2 < Re s_i < 1/2` its roots pair up into an involution,
//! and an odd-winding fixed point flips `p1` between `m` and `m + 1` at
//! `m = (-k_i - 1)/2`. [`converse_decide`] runs that pipeline and produces either a
//! certificate or a concrete twist `m` whose gamma value is not 1.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::character::{BorelCharacter, Character};
use crate::distinguish::{verify_certificate, Certificate, MatchMode};
use crate::error::{Error, Result};
use crate::gamma::{epsilon, rs_gamma, GammaValue, POLE_TOL};
use crate::involution::Involution;
use crate::lgamma::{ln_gamma, nonpositive_integer_near};
use crate::poly::Poly;
use crate::scalar::{rational, QComplex, Scalar};

const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Largest `|m|` the counterexample search widens to.
pub const MAX_SEARCH_RADIUS: i64 = 1 << 14;

/// The three sub-products of a twisted gamma value at a fixed `m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProductTriple {
    pub p1: i8,
    pub p2: Complex64,
    pub p3: Complex64,
}

impl ProductTriple {
    pub fn product(&self) -> Complex64 {
        self.p2 * self.p3 * f64::from(self.p1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwistEntry {
    pub m: i64,
    pub gamma: GammaValue,
    /// `|gamma - 1|`; infinite when the twist hits a pole or zero.
    pub defect: f64,
    /// `None` when some Gamma argument of `p3` is singular.
    pub triple: Option<ProductTriple>,
}

impl TwistEntry {
    pub fn flagged(&self) -> bool {
        !self.gamma.is_finite()
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct TwistScanReport {
    pub entries: Vec<TwistEntry>,
}

/// `gamma(1/2, Ind(chi) x c_{2m}, psi)` through the Rankin-Selberg product.
pub fn twisted_gamma(chi: &BorelCharacter, m: i64) -> GammaValue {
    let twist = BorelCharacter::new(alloc::vec![Character::unitary(2 * m)]);
    rs_gamma(chi, &twist, &Scalar::ratio(1, 2))
}

/// `p1 = prod_i eps_{2m + k_i}`.
pub fn sign_product(chi: &BorelCharacter, m: i64) -> i8 {
    chi.entries.iter().map(|c| epsilon(2 * m + c.k)).product()
}

/// Evaluates the three sub-products independently of the Tate-factor route.
pub fn product_triple(chi: &BorelCharacter, m: i64) -> Option<ProductTriple> {
    let half = Complex64::new(0.5, 0.0);
    let mut sum_s = Complex64::new(0.0, 0.0);
    let mut ln_p3 = Complex64::new(0.0, 0.0);
    for c in &chi.entries {
        let s = c.sigma.to_c64();
        sum_s += s;
        let shift = (c.k + 2 * m).unsigned_abs() as f64 / 2.0;
        let num = half + s + shift;
        let den = half - s + shift;
        if nonpositive_integer_near(num, POLE_TOL).is_some()
            || nonpositive_integer_near(den, POLE_TOL).is_some()
        {
            return None;
        }
        ln_p3 += ln_gamma(num) - ln_gamma(den);
    }
    Some(ProductTriple {
        p1: sign_product(chi, m),
        p2: (sum_s * (-2.0 * LN_2PI)).exp(),
        p3: ln_p3.exp(),
    })
}

/// Evaluates the twisted gamma value for every `m` in `[m_lo, m_hi]`.
/// Singular twists are kept in the report and flagged rather than aborting the scan.
pub fn twist_scan(chi: &BorelCharacter, m_lo: i64, m_hi: i64) -> Result<TwistScanReport> {
    if m_lo > m_hi {
        return Err(Error::Precondition(alloc::format!(
            "empty scan range [{m_lo}, {m_hi}]"
        )));
    }
    let entries = (m_lo..=m_hi).map(|m| scan_entry(chi, m)).collect();
    Ok(TwistScanReport { entries })
}

fn scan_entry(chi: &BorelCharacter, m: i64) -> TwistEntry {
    let gamma = twisted_gamma(chi, m);
    TwistEntry {
        m,
        gamma,
        defect: gamma.defect(),
        triple: product_triple(chi, m),
    }
}

/// Default scan radius `K + n` with `K = max |k_i|`; every sign flip of `p1`
/// happens at `|2m + k_i| <= 1`, which lies inside `[-(K + n), K + n]`.
pub fn default_scan_radius(chi: &BorelCharacter) -> i64 {
    let k_max = chi.entries.iter().map(|c| c.k.abs()).max().unwrap_or(0);
    k_max + chi.len() as i64
}

/// Result of comparing the two sides of the polynomial identity in `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCheck {
    pub equal: bool,
    pub lhs: Poly,
    pub rhs: Poly,
    /// Lowest degree whose coefficients differ.
    pub first_difference: Option<usize>,
}

fn exact_sigmas(chi: &BorelCharacter) -> Result<Vec<QComplex>> {
    chi.require_exact()?;
    Ok(chi
        .entries
        .iter()
        .map(|c| c.sigma.as_exact().expect("checked exact").clone())
        .collect())
}

fn qreal(r: BigRational) -> QComplex {
    QComplex::new(r, BigRational::zero())
}

/// Expands `prod (m + 1/2 + s_i + k_i/2)` and `prod (m + 1/2 - s_i + k_i/2)` exactly.
pub fn polynomial_identity_check(chi: &BorelCharacter) -> Result<PolyCheck> {
    let sigmas = exact_sigmas(chi)?;
    let half = qreal(rational(1, 2));
    let mut plus = Vec::with_capacity(chi.len());
    let mut minus = Vec::with_capacity(chi.len());
    for (s, c) in sigmas.iter().zip(&chi.entries) {
        let base = half.clone() + qreal(BigRational::new(BigInt::from(c.k), BigInt::from(2)));
        plus.push(base.clone() + s.clone());
        minus.push(base - s.clone());
    }
    let lhs = Poly::from_shifts(&plus);
    let rhs = Poly::from_shifts(&minus);
    let first_difference = lhs.first_difference(&rhs);
    Ok(PolyCheck {
        equal: first_difference.is_none(),
        lhs,
        rhs,
        first_difference,
    })
}

/// Checks `-1/2 < Re s_i < 1/2` exactly.
pub fn check_strip(chi: &BorelCharacter) -> Result<()> {
    let sigmas = exact_sigmas(chi)?;
    let half = rational(1, 2);
    match sigmas.iter().position(|s| s.re.abs() >= half) {
        Some(index) => Err(Error::Strip { index }),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RootPairing {
    Paired {
        w: Involution,
        /// True when some class needed its imaginary parts matched after the
        /// real-part pairing.
        second_phase: bool,
    },
    Failed {
        /// Starting at an unmatched index, successive indices related by
        /// `-2 Re s_i + k_i = 2 Re s_j + k_j`; the chain cannot close up.
        chain: Vec<usize>,
    },
}

/// Pairs roots in two phases: real parts first (class `(k, |Re s|)`, entries
/// with `Re s = r` against `Re s = -r`), then imaginary parts within each
/// class. Entries left over must have `s = 0`. Parity of fixed points is not
/// checked here.
pub fn root_pairing(chi: &BorelCharacter) -> Result<RootPairing> {
    check_strip(chi)?;
    let sigmas = exact_sigmas(chi)?;
    let n = chi.len();

    let mut classes: BTreeMap<(i64, BigRational), Vec<usize>> = BTreeMap::new();
    for (i, s) in sigmas.iter().enumerate() {
        classes
            .entry((chi.entries[i].k, s.re.abs()))
            .or_default()
            .push(i);
    }

    let mut map: Vec<usize> = (0..n).collect();
    let mut unmatched: Vec<usize> = Vec::new();
    let mut second_phase = false;
    for ((_, r), members) in &classes {
        if members.iter().any(|&i| !sigmas[i].im.is_zero()) {
            second_phase = true;
        }
        // imaginary part -> indices, split by the sign of the real part
        let mut pos: BTreeMap<BigRational, Vec<usize>> = BTreeMap::new();
        let mut neg: BTreeMap<BigRational, Vec<usize>> = BTreeMap::new();
        for &i in members {
            let side = if sigmas[i].re.is_negative() {
                &mut neg
            } else {
                &mut pos
            };
            side.entry(sigmas[i].im.clone()).or_default().push(i);
        }
        if r.is_zero() {
            // Re s = 0: match Im y with Im -y; Im 0 stays fixed
            let keys: Vec<BigRational> = pos.keys().cloned().collect();
            for y in keys {
                if y.is_zero() || y.is_negative() {
                    continue;
                }
                let left = pos.remove(&y).unwrap_or_default();
                let right = pos.remove(&-y).unwrap_or_default();
                pair_lists(&mut map, &mut unmatched, &left, &right);
            }
            pos.remove(&BigRational::zero());
            for (_, rest) in pos {
                unmatched.extend(rest);
            }
        } else {
            let pos_count: usize = pos.values().map(Vec::len).sum();
            let neg_count: usize = neg.values().map(Vec::len).sum();
            if pos_count != neg_count {
                // phase one already fails; report the whole surplus side
                let surplus = if pos_count > neg_count { &pos } else { &neg };
                unmatched.extend(surplus.values().flatten());
                continue;
            }
            for (y, left) in core::mem::take(&mut pos) {
                let right = neg.remove(&-y).unwrap_or_default();
                pair_lists(&mut map, &mut unmatched, &left, &right);
            }
            for (_, rest) in neg {
                unmatched.extend(rest);
            }
        }
    }

    match unmatched.iter().min() {
        None => Ok(RootPairing::Paired {
            w: Involution::new(map)?,
            second_phase,
        }),
        Some(&start) => Ok(RootPairing::Failed {
            chain: antisymmetry_chain(chi, &sigmas, start),
        }),
    }
}

fn pair_lists(map: &mut [usize], unmatched: &mut Vec<usize>, left: &[usize], right: &[usize]) {
    for (&i, &j) in left.iter().zip(right) {
        map[i] = j;
        map[j] = i;
    }
    let surplus = if left.len() > right.len() {
        &left[right.len()..]
    } else {
        &right[left.len()..]
    };
    unmatched.extend_from_slice(surplus);
}

fn antisymmetry_chain(chi: &BorelCharacter, sigmas: &[QComplex], start: usize) -> Vec<usize> {
    let two = rational(2, 1);
    let key = |i: usize, sign: i64| -> BigRational {
        rational(sign, 1) * two.clone() * sigmas[i].re.clone() + rational(chi.entries[i].k, 1)
    };
    let mut chain = alloc::vec![start];
    let mut current = start;
    loop {
        let target = key(current, -1);
        let next = (0..chi.len()).find(|&j| !chain.contains(&j) && key(j, 1) == target);
        match next {
            Some(j) => {
                chain.push(j);
                current = j;
            }
            None => return chain,
        }
    }
}

/// The sign flip of `p1` across `m = (-k_i - 1)/2, m + 1` for an odd `k_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EpsilonJump {
    pub m: i64,
    pub p1_at_m: i8,
    pub p1_at_next: i8,
}

impl EpsilonJump {
    pub fn flips(&self) -> bool {
        self.p1_at_next == -self.p1_at_m
    }
}

pub fn epsilon_jump_check(chi: &BorelCharacter, index: usize) -> Result<EpsilonJump> {
    let c = chi
        .entries
        .get(index)
        .ok_or_else(|| Error::Precondition(alloc::format!("index {index} out of range")))?;
    if c.k % 2 == 0 {
        return Err(Error::Precondition(alloc::format!(
            "k_{} = {} is even",
            index + 1,
            c.k
        )));
    }
    let m = (-c.k - 1) / 2;
    Ok(EpsilonJump {
        m,
        p1_at_m: sign_product(chi, m),
        p1_at_next: sign_product(chi, m + 1),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum CounterexampleSource {
    /// The two sides of the polynomial identity differ at this degree.
    PolynomialMismatch { degree: usize },
    /// Root pairing failed although the polynomials agree.
    PairingFailure { chain: Vec<usize> },
    /// A fixed point with odd winding survives; `p1` flips at the returned `m`.
    OddFixedPoint { index: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum ConverseOutcome {
    Certified {
        certificate: Certificate,
        second_phase: bool,
    },
    Counterexample {
        m: i64,
        gamma: GammaValue,
        source: CounterexampleSource,
    },
}

impl ConverseOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, ConverseOutcome::Certified { .. })
    }
}

/// Polynomial identity, then root pairing, then parity screening of the fixed points.
pub fn converse_decide(chi: &BorelCharacter) -> Result<ConverseOutcome> {
    check_strip(chi)?;
    let poly = polynomial_identity_check(chi)?;
    if let Some(degree) = poly.first_difference {
        let (m, gamma) = search_counterexample(chi);
        return Ok(ConverseOutcome::Counterexample {
            m,
            gamma,
            source: CounterexampleSource::PolynomialMismatch { degree },
        });
    }
    let (w, second_phase) = match root_pairing(chi)? {
        RootPairing::Paired { w, second_phase } => (w, second_phase),
        RootPairing::Failed { chain } => {
            let (m, gamma) = search_counterexample(chi);
            return Ok(ConverseOutcome::Counterexample {
                m,
                gamma,
                source: CounterexampleSource::PairingFailure { chain },
            });
        }
    };

    // Fixed points with equal odd winding can be swapped into 2-cycles.
    let mut map = w.as_slice().to_vec();
    let mut by_k: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for i in w.fixed_points() {
        by_k.entry(chi.entries[i].k).or_default().push(i);
    }
    for (k, fixed) in by_k {
        if k % 2 == 0 {
            continue;
        }
        for c in fixed.chunks(2) {
            match *c {
                [i, j] => {
                    map[i] = j;
                    map[j] = i;
                }
                [i] => {
                    let jump = epsilon_jump_check(chi, i)?;
                    debug_assert!(jump.flips());
                    let at_m = twisted_gamma(chi, jump.m);
                    let at_next = twisted_gamma(chi, jump.m + 1);
                    let (m, gamma) = if at_next.defect() > at_m.defect() {
                        (jump.m + 1, at_next)
                    } else {
                        (jump.m, at_m)
                    };
                    return Ok(ConverseOutcome::Counterexample {
                        m,
                        gamma,
                        source: CounterexampleSource::OddFixedPoint { index: i },
                    });
                }
                _ => unreachable!(),
            }
        }
    }
    let certificate = Certificate::from_involution(Involution::new(map)?);
    debug_assert!(verify_certificate(chi, &certificate, MatchMode::Exact).unwrap_or(false));
    Ok(ConverseOutcome::Certified {
        certificate,
        second_phase,
    })
}

/// Scans twists in widening windows and returns the one farthest from 1.
/// Stops as soon as a window contains a twist with `|gamma - 1| > 1/2`, or
/// at [`MAX_SEARCH_RADIUS`].
pub fn search_counterexample(chi: &BorelCharacter) -> (i64, GammaValue) {
    let mut best = scan_entry(chi, 0);
    let consider = |e: TwistEntry, best: &mut TwistEntry| {
        let better = e.defect > best.defect
            || (e.defect == best.defect && (e.m.abs(), e.m) < (best.m.abs(), best.m));
        if better {
            *best = e;
        }
    };
    let mut lo = 1;
    let mut hi = default_scan_radius(chi).max(1);
    loop {
        for r in lo..=hi {
            consider(scan_entry(chi, -r), &mut best);
            consider(scan_entry(chi, r), &mut best);
        }
        if best.defect > 0.5 || hi >= MAX_SEARCH_RADIUS {
            return (best.m, best.gamma);
        }
        lo = hi + 1;
        hi = (2 * hi).min(MAX_SEARCH_RADIUS);
    }
}

/// `p2 = (2 pi)^{-2 sum s_i}` as a float, exposed for diagnostics.
pub fn constant_factor(chi: &BorelCharacter) -> Complex64 {
    let sum: Complex64 = chi.entries.iter().map(|c| c.sigma.to_c64()).sum();
    (sum * (-2.0 * libm::log(2.0 * PI))).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(entries: &[(Scalar, i64)]) -> BorelCharacter {
        BorelCharacter::new(
            entries
                .iter()
                .map(|(s, k)| Character::new(s.clone(), *k))
                .collect(),
        )
    }

    fn close(a: Complex64, b: f64) -> bool {
        (a - Complex64::new(b, 0.0)).norm() < 1e-12
    }

    #[test]
    fn scan_of_even_winding_is_identically_one() {
        let report = twist_scan(&chi(&[(Scalar::zero(), 2)]), -3, 3).unwrap();
        assert_eq!(report.entries.len(), 7);
        for e in &report.entries {
            assert!(close(e.gamma.value(), 1.0), "m = {}", e.m);
            assert!(e.defect < 1e-12);
        }
    }

    #[test]
    fn scan_of_odd_winding_at_minus_one() {
        let report = twist_scan(&chi(&[(Scalar::zero(), 1)]), -1, -1).unwrap();
        assert!(close(report.entries[0].gamma.value(), -1.0));
        assert_eq!(report.entries[0].triple.unwrap().p1, -1);
    }

    #[test]
    fn empty_character_scans_to_one() {
        let report = twist_scan(&BorelCharacter::default(), -2, 5).unwrap();
        assert!(report.entries.iter().all(|e| close(e.gamma.value(), 1.0)));
        assert!(twist_scan(&BorelCharacter::default(), 1, 0).is_err());
    }

    #[test]
    fn polynomial_identity_examples() {
        assert!(
            polynomial_identity_check(&chi(&[(Scalar::zero(), 2)]))
                .unwrap()
                .equal
        );
        let ok =
            polynomial_identity_check(&chi(&[(Scalar::ratio(1, 4), 0), (Scalar::ratio(-1, 4), 0)]))
                .unwrap();
        assert!(ok.equal);
        // (m + 3/4)(m + 1/4) = m^2 + m + 3/16
        let expected = Poly::from_shifts(&[qreal(rational(3, 4)), qreal(rational(1, 4))]);
        assert_eq!(ok.lhs, expected);
        let bad =
            polynomial_identity_check(&chi(&[(Scalar::ratio(1, 4), 0), (Scalar::ratio(-1, 4), 1)]))
                .unwrap();
        assert!(!bad.equal);
        assert_eq!(bad.first_difference, Some(0));
        assert_eq!(bad.lhs.coeff(0), qreal(rational(9, 16)));
        assert_eq!(bad.rhs.coeff(0), qreal(rational(5, 16)));
    }

    #[test]
    fn root_pairing_examples() {
        let r = root_pairing(&chi(&[(Scalar::ratio(1, 4), 0), (Scalar::ratio(-1, 4), 0)])).unwrap();
        assert_eq!(
            r,
            RootPairing::Paired {
                w: Involution::from_pairs(2, &[(0, 1)]).unwrap(),
                second_phase: false
            }
        );
        let r = root_pairing(&chi(&[(Scalar::zero(), 0)])).unwrap();
        assert_eq!(
            r,
            RootPairing::Paired {
                w: Involution::identity(1),
                second_phase: false
            }
        );
        let r = root_pairing(&chi(&[(Scalar::ratio(3, 10), 0), (Scalar::ratio(1, 5), 0)])).unwrap();
        assert!(matches!(r, RootPairing::Failed { .. }));
        assert!(matches!(
            root_pairing(&chi(&[(Scalar::ratio(1, 2), 0)])),
            Err(Error::Strip { index: 0 })
        ));
    }

    #[test]
    fn chain_follows_the_antisymmetry_relation() {
        // -2(1/4) + 0 = 2(1/4) - 1: index 0 points at index 1 (s = 1/4, k = -1)
        let x = chi(&[(Scalar::ratio(1, 4), 0), (Scalar::ratio(1, 4), -1)]);
        match root_pairing(&x).unwrap() {
            RootPairing::Failed { chain } => assert_eq!(chain, [0, 1]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn imaginary_second_phase_is_flagged() {
        let x = chi(&[
            (Scalar::exact(rational(0, 1), rational(1, 10)), 4),
            (Scalar::exact(rational(0, 1), rational(-1, 10)), 4),
        ]);
        match root_pairing(&x).unwrap() {
            RootPairing::Paired { second_phase, .. } => assert!(second_phase),
            other => panic!("{other:?}"),
        }
        // real parts pair, imaginary parts do not
        let y = chi(&[
            (Scalar::exact(rational(1, 4), rational(1, 10)), 0),
            (Scalar::exact(rational(-1, 4), rational(1, 10)), 0),
        ]);
        assert!(matches!(
            root_pairing(&y).unwrap(),
            RootPairing::Failed { .. }
        ));
    }

    #[test]
    fn epsilon_jump_examples() {
        let j = epsilon_jump_check(&chi(&[(Scalar::zero(), 1)]), 0).unwrap();
        assert_eq!((j.m, j.p1_at_m, j.p1_at_next), (-1, -1, 1));
        assert_eq!(
            epsilon_jump_check(&chi(&[(Scalar::zero(), 3)]), 0)
                .unwrap()
                .m,
            -2
        );
        let j = epsilon_jump_check(&chi(&[(Scalar::zero(), -1)]), 0).unwrap();
        assert_eq!(j.m, 0);
        assert!(j.flips());
        assert!(epsilon_jump_check(&chi(&[(Scalar::zero(), 2)]), 0).is_err());
    }

    #[test]
    fn decide_examples() {
        let out =
            converse_decide(&chi(&[(Scalar::ratio(1, 4), 0), (Scalar::ratio(-1, 4), 0)])).unwrap();
        match out {
            ConverseOutcome::Certified { certificate, .. } => {
                assert_eq!(certificate.pairs, [(0, 1)])
            }
            other => panic!("{other:?}"),
        }
        match converse_decide(&chi(&[(Scalar::zero(), 1)])).unwrap() {
            ConverseOutcome::Counterexample { m, gamma, .. } => {
                assert_eq!(m, -1);
                assert!(close(gamma.value(), -1.0));
            }
            other => panic!("{other:?}"),
        }
        let x = chi(&[
            (Scalar::zero(), 2),
            (Scalar::exact(rational(0, 1), rational(1, 10)), 4),
            (Scalar::exact(rational(0, 1), rational(-1, 10)), 4),
        ]);
        match converse_decide(&x).unwrap() {
            ConverseOutcome::Certified {
                certificate,
                second_phase,
            } => {
                assert_eq!(certificate.fixed, [0]);
                assert_eq!(certificate.pairs, [(1, 2)]);
                assert!(second_phase);
                assert!(verify_certificate(&x, &certificate, MatchMode::Exact).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equal_odd_fixed_points_are_swapped() {
        let x = chi(&[(Scalar::zero(), 1), (Scalar::zero(), 1)]);
        assert!(converse_decide(&x).unwrap().is_certified());
    }

    #[test]
    fn triple_recombines_to_gamma() {
        let x = chi(&[
            (Scalar::ratio(1, 8), 3),
            (Scalar::exact(rational(-1, 3), rational(1, 5)), -2),
        ]);
        for e in twist_scan(&x, -6, 6).unwrap().entries {
            let t = e.triple.unwrap();
            assert!(
                (t.product() - e.gamma.value()).norm() < 1e-10 * e.gamma.value().norm().max(1.0)
            );
            assert!((t.p2 - constant_factor(&x)).norm() < 1e-14);
        }
    }
}
