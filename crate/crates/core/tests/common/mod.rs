//! Input generators shared by the integration targets.
#![allow(dead_code)]

use gammadist_core::involution::Involution;
use gammadist_core::scalar::rational;
use gammadist_core::{BorelCharacter, Character, Scalar};
use rand::seq::SliceRandom;
use rand::Rng;

/// Exact `sigma = a / re_den + i b / im_den` with `|a| <= re_max`, `|b| <= im_max`.
pub fn exact_sigma<R: Rng>(
    rng: &mut R,
    re_max: i64,
    re_den: i64,
    im_max: i64,
    im_den: i64,
) -> Scalar {
    Scalar::exact(
        rational(rng.random_range(-re_max..=re_max), re_den),
        rational(rng.random_range(-im_max..=im_max), im_den),
    )
}

pub fn random_involution<R: Rng>(n: usize, rng: &mut R) -> Involution {
    let all = Involution::all(n);
    all[rng.random_range(0..all.len())].clone()
}

/// A character that admits an involution certificate, with entries shuffled.
///
/// 2-cycles carry `(sigma, k), (-sigma, k)`; fixed points carry `(i b, k)`
/// with `b = 0` and `k` even. `re_max / re_den` bounds `|Re sigma|`.
pub fn certified_character<R: Rng>(
    n: usize,
    rng: &mut R,
    re_max: i64,
    re_den: i64,
) -> BorelCharacter {
    let w = random_involution(n, rng);
    let mut entries = vec![Character::unitary(0); n];
    for i in 0..n {
        let j = w.apply(i);
        if i == j {
            entries[i] = Character::unitary(2 * rng.random_range(-3i64..=3));
        } else if i < j {
            let sigma = exact_sigma(rng, re_max, re_den, 8, 4);
            let k = rng.random_range(-6i64..=6);
            entries[j] = Character::new(-&sigma, k);
            entries[i] = Character::new(sigma, k);
        }
    }
    entries.shuffle(rng);
    BorelCharacter::new(entries)
}

/// Arbitrary exact character strictly inside `|Re sigma| < 1/2`.
pub fn strip_character<R: Rng>(n: usize, rng: &mut R) -> BorelCharacter {
    BorelCharacter::new(
        (0..n)
            .map(|_| Character::new(exact_sigma(rng, 3, 8, 8, 4), rng.random_range(-6i64..=6)))
            .collect(),
    )
}

/// A certified character with one entry nudged, which usually breaks the matching.
pub fn perturbed_character<R: Rng>(n: usize, rng: &mut R) -> BorelCharacter {
    let mut chi = certified_character(n, rng, 3, 8);
    if n == 0 {
        return chi;
    }
    let i = rng.random_range(0..n);
    let e = &mut chi.entries[i];
    match rng.random_range(0..3) {
        0 => e.k += 1,
        1 => e.sigma = &e.sigma + &Scalar::exact(rational(1, 8), rational(0, 1)),
        _ => e.sigma = &e.sigma + &Scalar::exact(rational(0, 1), rational(1, 4)),
    }
    if e.sigma.re_f64().abs() >= 0.5 {
        e.sigma = &e.sigma - &Scalar::exact(rational(1, 4), rational(0, 1));
    }
    chi
}

/// Mix of certified, perturbed and unconstrained characters, all in the strip.
pub fn mixed_character<R: Rng>(n: usize, rng: &mut R) -> BorelCharacter {
    match rng.random_range(0..4) {
        0 | 1 => certified_character(n, rng, 3, 8),
        2 => perturbed_character(n, rng),
        _ => strip_character(n, rng),
    }
}
