//! Involution certificates for GL_n(R)-distinguishedness of a Borel character.
//!
//! A certificate is an involution `w` with `w chi = conj(chi^{-1})`, i.e.
//! `sigma_{w(i)} = -sigma_i` and `k_{w(i)} = k_i`, whose fixed points carry
//! `sigma_i = 0` and even `k_i` (so `chi_i(-1) = 1`). The checker reports this
//! matching condition only; it does not look at Langlands ordering.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_complex::Complex64;
use num_traits::Zero;

use crate::character::BorelCharacter;
use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::scalar::{cmp_qcomplex, QComplex, Scalar, DEFAULT_TOL};

/// How sigma values are compared.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MatchMode {
    Exact,
    /// `sigma ~ tau` iff `|sigma - tau| < eps`.
    Tolerance(f64),
}

impl Default for MatchMode {
    fn default() -> Self {
        MatchMode::Tolerance(DEFAULT_TOL)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub w: Involution,
    /// `(i, w(i))` with `i < w(i)`, 0-based.
    pub pairs: Vec<(usize, usize)>,
    pub fixed: Vec<usize>,
}

impl Certificate {
    pub fn from_involution(w: Involution) -> Self {
        Certificate {
            pairs: w.two_cycles(),
            fixed: w.fixed_points(),
            w,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefutationReason {
    /// No partner with `(-sigma, k)` is left for this entry.
    Unmatched,
    /// The entry must be a fixed point but has odd winding, so `chi_i(-1) = -1`.
    OddFixedPoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub index: usize,
    pub reason: RefutationReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified(Certificate),
    Refuted(Refutation),
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Certified(c) => Some(c),
            Verdict::Refuted(_) => None,
        }
    }
}

/// True iff `2 Re sigma_1 >= ... >= 2 Re sigma_n`; exact comparison for exact entries.
pub fn check_langlands_order(chi: &BorelCharacter) -> bool {
    chi.entries
        .windows(2)
        .all(|w| match (&w[0].sigma, &w[1].sigma) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.re >= b.re,
            (a, b) => a.re_f64() >= b.re_f64(),
        })
}

#[derive(Clone, Debug)]
struct Key(QComplex);

impl PartialEq for Key {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}
impl Eq for Key {}
impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_qcomplex(&self.0, &other.0)
    }
}

/// Bookkeeping shared by the exact and tolerance matchers.
struct Matching {
    map: Vec<usize>,
    failures: Vec<Refutation>,
}

impl Matching {
    fn new(n: usize) -> Self {
        Matching {
            map: (0..n).collect(),
            failures: Vec::new(),
        }
    }

    /// Pairs `left[t]` with `right[t]`; the surplus of the longer side is unmatched.
    fn pair_up(&mut self, left: &[usize], right: &[usize]) {
        for (&i, &j) in left.iter().zip(right) {
            self.map[i] = j;
            self.map[j] = i;
        }
        let surplus = if left.len() > right.len() {
            &left[right.len()..]
        } else {
            &right[left.len()..]
        };
        for &i in surplus {
            self.failures.push(Refutation {
                index: i,
                reason: RefutationReason::Unmatched,
            });
        }
    }

    /// Entries with sigma = 0 and winding `k`: fixed points when `k` is even,
    /// otherwise paired among themselves with at most one leftover.
    fn zeros(&mut self, k: i64, zeros: &[usize]) {
        if k % 2 == 0 {
            return;
        }
        for c in zeros.chunks(2) {
            match *c {
                [i, j] => {
                    self.map[i] = j;
                    self.map[j] = i;
                }
                [i] => self.failures.push(Refutation {
                    index: i,
                    reason: RefutationReason::OddFixedPoint,
                }),
                _ => unreachable!(),
            }
        }
    }

    fn finish(self) -> Result<Verdict> {
        match self.failures.iter().min_by_key(|r| r.index) {
            Some(r) => Ok(Verdict::Refuted(*r)),
            None => Ok(Verdict::Certified(Certificate::from_involution(
                Involution::new(self.map)?,
            ))),
        }
    }
}

fn groups_by_k(chi: &BorelCharacter) -> BTreeMap<i64, Vec<usize>> {
    let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, c) in chi.entries.iter().enumerate() {
        groups.entry(c.k).or_default().push(i);
    }
    groups
}

/// Searches for an involution certificate.
///
/// Indices are grouped by `k`; inside a group each sigma is paired with an
/// entry carrying `-sigma` in canonical (lexicographic, then index) order, and
/// leftovers must be `(0, even)`. The returned certificate is deterministic.
pub fn find_involution(chi: &BorelCharacter, mode: MatchMode) -> Result<Verdict> {
    match mode {
        MatchMode::Exact => find_exact(chi),
        MatchMode::Tolerance(eps) => find_tolerance(chi, eps),
    }
}

fn find_exact(chi: &BorelCharacter) -> Result<Verdict> {
    chi.require_exact()?;
    let mut m = Matching::new(chi.len());
    for (k, idx) in groups_by_k(chi) {
        let mut classes: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
        for i in idx {
            let q = chi.entries[i]
                .sigma
                .as_exact()
                .expect("checked exact")
                .clone();
            classes.entry(Key(q)).or_default().push(i);
        }
        let zero = Key(QComplex::zero());
        if let Some(z) = classes.remove(&zero) {
            m.zeros(k, &z);
        }
        let keys: Vec<Key> = classes.keys().cloned().collect();
        for key in keys {
            if key < zero {
                continue;
            }
            let left = classes.remove(&key).unwrap_or_default();
            let right = classes.remove(&Key(-key.0.clone())).unwrap_or_default();
            m.pair_up(&left, &right);
        }
        // negative values whose positive partner never appeared
        for (_, rest) in classes {
            m.pair_up(&rest, &[]);
        }
    }
    m.finish()
}

fn find_tolerance(chi: &BorelCharacter, eps: f64) -> Result<Verdict> {
    let values: Vec<Complex64> = chi.entries.iter().map(|c| c.sigma.to_c64()).collect();
    let near = |a: Complex64, b: Complex64| (a - b).norm() < eps;
    let mut m = Matching::new(chi.len());
    for (k, idx) in groups_by_k(chi) {
        // Classes of the relation |sigma_i - sigma_j| < eps; it must be transitive on the group.
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut assigned = alloc::vec![false; chi.len()];
        for &i in &idx {
            if assigned[i] {
                continue;
            }
            let class: Vec<usize> = idx
                .iter()
                .copied()
                .filter(|&j| near(values[i], values[j]))
                .collect();
            for &j in &class {
                if assigned[j] {
                    return Err(ambiguous(&class, &[j]));
                }
                let other: Vec<usize> = idx
                    .iter()
                    .copied()
                    .filter(|&l| near(values[j], values[l]))
                    .collect();
                if other != class {
                    return Err(ambiguous(&class, &other));
                }
                assigned[j] = true;
            }
            classes.push(class);
        }
        let mut done = alloc::vec![false; classes.len()];
        for c in 0..classes.len() {
            if done[c] {
                continue;
            }
            done[c] = true;
            let class = &classes[c];
            let zero_count = class.iter().filter(|&&i| values[i].norm() < eps).count();
            if zero_count == class.len() {
                m.zeros(k, class);
                continue;
            }
            if zero_count > 0 {
                return Err(ambiguous(class, &[]));
            }
            let mut partner = None;
            for d in 0..classes.len() {
                let hits = cross_hits(&classes[c], &classes[d], &values, eps);
                let total = classes[c].len() * classes[d].len();
                if hits == 0 {
                    continue;
                }
                if hits != total || partner.is_some() || d == c {
                    return Err(ambiguous(&classes[c], &classes[d]));
                }
                partner = Some(d);
            }
            match partner {
                Some(d) if !done[d] => {
                    done[d] = true;
                    m.pair_up(&classes[c], &classes[d]);
                }
                Some(_) => unreachable!("partner classes are symmetric"),
                None => m.pair_up(&classes[c], &[]),
            }
        }
    }
    m.finish()
}

fn cross_hits(a: &[usize], b: &[usize], values: &[Complex64], eps: f64) -> usize {
    a.iter()
        .map(|&i| {
            b.iter()
                .filter(|&&j| (values[i] + values[j]).norm() < eps)
                .count()
        })
        .sum()
}

fn ambiguous(a: &[usize], b: &[usize]) -> Error {
    let mut cluster: Vec<usize> = a.iter().chain(b).copied().collect();
    cluster.sort_unstable();
    cluster.dedup();
    Error::Ambiguous { cluster }
}

/// Checks a certificate against `chi`: the structure of `pairs`/`fixed` must
/// agree with `w`, then every pair and fixed point must satisfy the matching
/// conditions (exactly in exact mode, within `eps` otherwise).
pub fn verify_certificate(
    chi: &BorelCharacter,
    cert: &Certificate,
    mode: MatchMode,
) -> Result<bool> {
    if cert.w.len() != chi.len() {
        return Err(Error::Structure(alloc::format!(
            "certificate acts on {} indices, character has {}",
            cert.w.len(),
            chi.len()
        )));
    }
    let mut pairs = cert.pairs.clone();
    pairs.sort_unstable();
    let mut fixed = cert.fixed.clone();
    fixed.sort_unstable();
    if pairs != cert.w.two_cycles() || fixed != cert.w.fixed_points() {
        return Err(Error::Structure(
            "pairs/fixed do not match the involution".into(),
        ));
    }
    if mode == MatchMode::Exact {
        chi.require_exact()?;
    }
    let is_zero = |s: &Scalar| match mode {
        MatchMode::Exact => s.is_zero(),
        MatchMode::Tolerance(eps) => s.to_c64().norm() < eps,
    };
    let pairs_ok = pairs.iter().all(|&(i, j)| {
        let (a, b) = (&chi.entries[i], &chi.entries[j]);
        a.k == b.k && is_zero(&(&a.sigma + &b.sigma))
    });
    let fixed_ok = fixed.iter().all(|&i| {
        let c = &chi.entries[i];
        c.k % 2 == 0 && is_zero(&c.sigma)
    });
    Ok(pairs_ok && fixed_ok)
}
