//! Orbit-stratification combinatorics: inversion sets `I_w`, the characters
//! `alpha_kappa`, the exponent system constraining `kappa`, and an explicit
//! computation of the normal space to `B(w)` in `X` at `w` with its torus weights.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::matrix::{permutation_matrix, twisted_action, MatrixC};

/// `I_w = {(i, j) : i > j, w(i) > w(j)}`, 0-based, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSet {
    w: Involution,
    pairs: Vec<(usize, usize)>,
}

impl InversionSet {
    pub fn new(w: &Involution) -> Self {
        let n = w.len();
        let pairs = (0..n)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .filter(|&(i, j)| w.apply(i) > w.apply(j))
            .collect();
        InversionSet {
            w: w.clone(),
            pairs,
        }
    }

    pub fn involution(&self) -> &Involution {
        &self.w
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    /// The image `(w(i), w(j))` of a pair.
    pub fn partner(&self, (i, j): (usize, usize)) -> (usize, usize) {
        (self.w.apply(i), self.w.apply(j))
    }

    /// Whether the set is closed under `(i, j) -> (w(i), w(j))`.
    pub fn is_w_symmetric(&self) -> bool {
        self.pairs.iter().all(|&p| self.contains(self.partner(p)))
    }
}

pub fn inversion_set(w: &Involution) -> InversionSet {
    InversionSet::new(w)
}

/// `kappa : I_w -> Z_{>=0}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct KappaFunction {
    values: BTreeMap<(usize, usize), u32>,
}

impl KappaFunction {
    pub fn zero(iw: &InversionSet) -> Self {
        KappaFunction {
            values: iw.pairs().iter().map(|&p| (p, 0)).collect(),
        }
    }

    pub fn new(iw: &InversionSet, values: BTreeMap<(usize, usize), u32>) -> Result<Self> {
        if values.len() != iw.len() || values.keys().any(|&p| !iw.contains(p)) {
            return Err(Error::Structure(
                "kappa must be defined exactly on I_w".into(),
            ));
        }
        Ok(KappaFunction { values })
    }

    pub fn values(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.values
    }

    pub fn get(&self, pair: (usize, usize)) -> Option<u32> {
        self.values.get(&pair).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|&k| k == 0)
    }

    /// Exponent vector `a` with `alpha_kappa(diag t) = prod t_k^{a_k}`.
    pub fn exponents(&self, n: usize) -> Vec<i64> {
        let mut a = alloc::vec![0i64; n];
        for (&(i, j), &k) in &self.values {
            a[i] += k as i64;
            a[j] -= k as i64;
        }
        a
    }

    pub fn character(&self, t: &[Complex64]) -> Complex64 {
        self.values
            .iter()
            .fold(Complex64::new(1.0, 0.0), |acc, (&(i, j), &k)| {
                acc * (t[i] / t[j]).powi(k as i32)
            })
    }
}

/// Left side of the exponent system: the coefficient of `e_m` in
/// `sum_{(i,j) in I_w} (kappa(i,j) + kappa(w(i),w(j))) (e_i - e_j)`.
pub fn kappa_lhs(iw: &InversionSet, kappa: &KappaFunction) -> Vec<i64> {
    let mut v = alloc::vec![0i64; iw.involution().len()];
    for &(i, j) in iw.pairs() {
        let c = kappa.get((i, j)).unwrap_or(0) as i64
            + kappa.get(iw.partner((i, j))).unwrap_or(0) as i64;
        v[i] += c;
        v[j] -= c;
    }
    v
}

/// Right side: `lambda_m + lambda_{w(m)}`.
pub fn kappa_rhs(w: &Involution, lambda: &[BigRational]) -> Vec<BigRational> {
    (0..w.len())
        .map(|m| &lambda[m] + &lambda[w.apply(m)])
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct KappaReport {
    /// Every `kappa` with entries `<= bound` solving the system.
    pub solutions: Vec<KappaFunction>,
    /// `{0}` when `lambda_i + lambda_{w(i)} = 0` for all `i`, else empty.
    pub predicted: Vec<KappaFunction>,
    pub bound: u32,
}

impl KappaReport {
    pub fn agrees(&self) -> bool {
        self.solutions == self.predicted
    }
}

/// Brute force over `{0..=bound}^{I_w}` with exact rational arithmetic.
pub fn kappa_solutions(w: &Involution, lambda: &[BigRational], bound: u32) -> Result<KappaReport> {
    let n = w.len();
    if lambda.len() != n {
        return Err(Error::Structure(alloc::format!(
            "{} weights for S_{n}",
            lambda.len()
        )));
    }
    if lambda.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::Precondition(
            "lambda must be sorted in non-increasing order".into(),
        ));
    }
    let iw = InversionSet::new(w);
    let rhs = kappa_rhs(w, lambda);
    let predicted = if rhs.iter().all(Zero::is_zero) {
        alloc::vec![KappaFunction::zero(&iw)]
    } else {
        Vec::new()
    };

    let mut solutions = Vec::new();
    // the left side is integral, so a fractional right side has no solutions
    let target: Option<Vec<i64>> = rhs
        .iter()
        .map(|r| {
            if r.is_integer() {
                r.to_integer().to_i64()
            } else {
                None
            }
        })
        .collect();
    if let Some(target) = target {
        let m = iw.len();
        let base = bound as u64 + 1;
        let total = base
            .checked_pow(m as u32)
            .ok_or_else(|| Error::Domain("kappa search space overflows".into()))?;
        let mut digits = alloc::vec![0u32; m];
        for _ in 0..total {
            let kappa = KappaFunction {
                values: iw
                    .pairs()
                    .iter()
                    .copied()
                    .zip(digits.iter().copied())
                    .collect(),
            };
            if kappa_lhs(&iw, &kappa) == target {
                solutions.push(kappa);
            }
            for d in digits.iter_mut() {
                if *d < bound {
                    *d += 1;
                    break;
                }
                *d = 0;
            }
        }
        solutions.sort();
    }
    Ok(KappaReport {
        solutions,
        predicted,
        bound,
    })
}

/// Random non-increasing rational weights with small denominators.
pub fn sample_lambda<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<BigRational> {
    let mut v: Vec<BigRational> = (0..n)
        .map(|_| {
            BigRational::new(
                BigInt::from(rng.random_range(-12i64..=12)),
                BigInt::from(rng.random_range(1i64..=4)),
            )
        })
        .collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// Weights with `lambda_i + lambda_{w(i)} = 0`: fixed points get 0 and a
/// 2-cycle `i < j` gets `(c, -c)`. `None` when the draw is not non-increasing.
pub fn sample_balanced_lambda<R: Rng + ?Sized>(
    w: &Involution,
    rng: &mut R,
) -> Option<Vec<BigRational>> {
    let n = w.len();
    let mut v = alloc::vec![BigRational::zero(); n];
    for i in 0..n {
        let j = w.apply(i);
        if i < j {
            let c = BigRational::new(
                BigInt::from(rng.random_range(0i64..=8)),
                BigInt::from(rng.random_range(1i64..=3)),
            );
            v[j] = -c.clone();
            v[i] = c;
        }
    }
    v.windows(2).all(|p| p[0] >= p[1]).then_some(v)
}

/// Sample of the stabiliser `M^w = {t : t w conj(t)^{-1} = w}` as
/// `s (w conj(s) w) a` with `a_i = +-1` on fixed points and 1 elsewhere.
pub fn sample_stabiliser<R: Rng + ?Sized>(w: &Involution, rng: &mut R) -> Vec<Complex64> {
    let n = w.len();
    let s: Vec<Complex64> = (0..n)
        .map(|_| {
            Complex64::from_polar(
                libm::pow(2.0, rng.random_range(-1.0..=1.0)),
                rng.random_range(0.0..core::f64::consts::TAU),
            )
        })
        .collect();
    (0..n)
        .map(|i| {
            let a = if w.apply(i) == i && rng.random_bool(0.5) {
                -1.0
            } else {
                1.0
            };
            s[i] * s[w.apply(i)].conj() * a
        })
        .collect()
}

/// Whether `t w conj(t)^{-1} = w` within `tol`.
pub fn stabilises(t: &[Complex64], w: &Involution, tol: f64) -> Result<bool> {
    let p = permutation_matrix(w);
    let d = MatrixC::from_diagonal(&nalgebra::DVector::from_column_slice(t));
    let y = twisted_action(&d, &p)?;
    Ok((y - p).iter().all(|z| z.norm() <= tol))
}

/// Eigenvalues below this count as zero when extracting spans.
const SPAN_TOL: f64 = 1e-9;
/// Integer exponents must be within this of an integer.
const INTEGRALITY_TOL: f64 = 1e-9;
/// Minimal separation of character values at the generic sample.
const SEPARATION: f64 = 1e-3;
const MAX_RESAMPLES: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct NormalSpaceReport {
    pub tangent_dimension: usize,
    pub orbit_dimension: usize,
    /// Real dimension of the quotient.
    pub dimension: usize,
    /// Weights found, each `(i, j)` meaning `t -> t_i / t_j`, sorted.
    pub weights: Vec<(usize, usize)>,
    pub expected: Vec<(usize, usize)>,
}

impl NormalSpaceReport {
    pub fn matches(&self) -> bool {
        self.weights == self.expected && self.dimension == self.expected.len()
    }
}

// Real coordinates on Mat_n(C): entry (r, c) -> (2 (r n + c), 2 (r n + c) + 1).
fn flatten(a: &MatrixC) -> Vec<f64> {
    let n = a.nrows();
    let mut v = alloc::vec![0.0; 2 * n * n];
    for r in 0..n {
        for c in 0..n {
            v[2 * (r * n + c)] = a[(r, c)].re;
            v[2 * (r * n + c) + 1] = a[(r, c)].im;
        }
    }
    v
}

fn unflatten(v: &[f64], n: usize) -> MatrixC {
    MatrixC::from_fn(n, n, |r, c| {
        Complex64::new(v[2 * (r * n + c)], v[2 * (r * n + c) + 1])
    })
}

fn basis_matrix(n: usize, k: usize) -> MatrixC {
    let mut a = MatrixC::zeros(n, n);
    let (e, im) = (k / 2, k % 2 == 1);
    a[(e / n, e % n)] = if im {
        Complex64::new(0.0, 1.0)
    } else {
        Complex64::new(1.0, 0.0)
    };
    a
}

/// Matrix of a real-linear map on Mat_n(C) in the flattened coordinates.
fn real_matrix(n: usize, f: impl Fn(&MatrixC) -> MatrixC) -> DMatrix<f64> {
    let dim = 2 * n * n;
    let mut m = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let col = flatten(&f(&basis_matrix(n, k)));
        for (r, x) in col.into_iter().enumerate() {
            m[(r, k)] = x;
        }
    }
    m
}

/// Orthonormal basis of the column span of `m`.
fn span(m: &DMatrix<f64>) -> DMatrix<f64> {
    let gram = m * m.transpose();
    let eig = gram.symmetric_eigen();
    let scale = eig.eigenvalues.iter().cloned().fold(1.0, f64::max);
    let keep: Vec<usize> = (0..eig.eigenvalues.len())
        .filter(|&k| eig.eigenvalues[k] > SPAN_TOL * scale)
        .collect();
    DMatrix::from_fn(m.nrows(), keep.len(), |r, c| eig.eigenvectors[(r, keep[c])])
}

/// Orthonormal basis of the kernel of `m`.
fn kernel(m: &DMatrix<f64>) -> DMatrix<f64> {
    let gram = m.transpose() * m;
    let eig = gram.symmetric_eigen();
    let scale = eig.eigenvalues.iter().cloned().fold(1.0, f64::max);
    let keep: Vec<usize> = (0..eig.eigenvalues.len())
        .filter(|&k| eig.eigenvalues[k] <= SPAN_TOL * scale)
        .collect();
    DMatrix::from_fn(m.ncols(), keep.len(), |r, c| eig.eigenvectors[(r, keep[c])])
}

struct Quotient {
    n: usize,
    tangent: usize,
    orbit: usize,
    /// Orthonormal complement of the orbit tangent inside `T^X`.
    basis: DMatrix<f64>,
}

fn quotient(w: &Involution) -> Result<Quotient> {
    let n = w.len();
    let p = permutation_matrix(w);
    let conj = |a: &MatrixC| a.map(|z| z.conj());
    let tx = kernel(&real_matrix(n, |a| a * &p + &p * conj(a)));
    let orbit_map = real_matrix(n, |a| {
        let upper = MatrixC::from_fn(n, n, |r, c| {
            if r <= c {
                a[(r, c)]
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        &p * conj(&upper) - &upper * &p
    });
    let tb = span(&orbit_map);
    // T^B must lie in T^X
    let leak = &tb - &tx * (tx.transpose() * &tb);
    if leak.norm() > 1e-8 {
        return Err(Error::Structure(alloc::format!(
            "orbit tangent leaves T^X by {:e}",
            leak.norm()
        )));
    }
    let residual = &tx - &tb * (tb.transpose() * &tx);
    let basis = span(&residual);
    if basis.ncols() + tb.ncols() != tx.ncols() {
        return Err(Error::Structure(
            "quotient dimension does not add up".into(),
        ));
    }
    Ok(Quotient {
        n,
        tangent: tx.ncols(),
        orbit: tb.ncols(),
        basis,
    })
}

/// The action `A -> t A conj(t)^{-1}` induced on the quotient.
fn induced_action(q: &Quotient, t: &[Complex64]) -> DMatrix<f64> {
    let d = q.basis.ncols();
    let mut m = DMatrix::zeros(d, d);
    for c in 0..d {
        let col: Vec<f64> = q.basis.column(c).iter().copied().collect();
        let a = unflatten(&col, q.n);
        let image = MatrixC::from_fn(q.n, q.n, |r, s| a[(r, s)] * t[r] / t[s].conj());
        let v = nalgebra::DVector::from_vec(flatten(&image));
        let coords = q.basis.transpose() * v;
        m.set_column(c, &coords);
    }
    m
}

fn to_faer(m: &DMatrix<f64>) -> faer::Mat<f64> {
    faer::Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// Eigenvectors of the induced action at a generic stabiliser element.
fn weight_vectors<R: Rng + ?Sized>(
    q: &Quotient,
    w: &Involution,
    rng: &mut R,
) -> Result<Vec<Vec<Complex64>>> {
    let d = q.basis.ncols();
    for _ in 0..MAX_RESAMPLES {
        let t = sample_stabiliser(w, rng);
        let eig = to_faer(&induced_action(q, &t))
            .eigen()
            .map_err(|_| Error::IllConditioned(f64::INFINITY))?;
        let s = eig.S().column_vector();
        let values: Vec<Complex64> = (0..d).map(|k| Complex64::new(s[k].re, s[k].im)).collect();
        let separated = (0..d).all(|a| (0..a).all(|b| (values[a] - values[b]).norm() > SEPARATION));
        if separated {
            let u = eig.U();
            return Ok((0..d)
                .map(|k| {
                    (0..d)
                        .map(|r| Complex64::new(u[(r, k)].re, u[(r, k)].im))
                        .collect()
                })
                .collect());
        }
    }
    Err(Error::Structure(alloc::format!(
        "torus samples stayed degenerate after {MAX_RESAMPLES} draws"
    )))
}

/// One-parameter subgroups of `M^w` paired with the exponent combination
/// their logarithmic derivative reads off.
enum Direction {
    /// `t_k = e^s` on a fixed point: reads `a_k`.
    Fixed(usize),
    /// `t_k = t_{w(k)} = e^s`: reads `a_k + a_{w(k)}`.
    Modulus(usize),
    /// `t_k = e^{i s}`, `t_{w(k)} = e^{-i s}`: reads `a_k - a_{w(k)}`.
    Phase(usize),
}

fn direction_element(w: &Involution, dir: &Direction) -> Vec<Complex64> {
    let mut t = alloc::vec![Complex64::new(1.0, 0.0); w.len()];
    match *dir {
        Direction::Fixed(k) => t[k] = Complex64::new(core::f64::consts::E, 0.0),
        Direction::Modulus(k) => {
            t[k] = Complex64::new(core::f64::consts::E, 0.0);
            t[w.apply(k)] = t[k];
        }
        Direction::Phase(k) => {
            t[k] = Complex64::from_polar(1.0, 1.0);
            t[w.apply(k)] = t[k].conj();
        }
    }
    t
}

fn rounded(x: f64) -> Result<i64> {
    let r = libm::round(x);
    if (x - r).abs() > INTEGRALITY_TOL {
        return Err(Error::Structure(alloc::format!(
            "non-integral exponent {x}"
        )));
    }
    Ok(r as i64)
}

/// Builds the normal space explicitly and reads off its torus weights.
pub fn normal_space_check<R: Rng + ?Sized>(
    w: &Involution,
    rng: &mut R,
) -> Result<NormalSpaceReport> {
    let n = w.len();
    let q = quotient(w)?;
    let expected = InversionSet::new(w).pairs().to_vec();
    let mut weights = Vec::new();
    if q.basis.ncols() > 0 {
        let vectors = weight_vectors(&q, w, rng)?;
        let directions: Vec<Direction> = (0..n)
            .flat_map(|k| {
                let j = w.apply(k);
                if j == k {
                    alloc::vec![Direction::Fixed(k)]
                } else if k < j {
                    alloc::vec![Direction::Modulus(k), Direction::Phase(k)]
                } else {
                    Vec::new()
                }
            })
            .collect();
        let actions: Vec<DMatrix<Complex64>> = directions
            .iter()
            .map(|d| induced_action(&q, &direction_element(w, d)).map(|x| Complex64::new(x, 0.0)))
            .collect();
        for v in &vectors {
            let v = nalgebra::DVector::from_column_slice(v);
            let norm = v.norm_squared();
            let mut a = alloc::vec![0i64; n];
            // a_k + a_{w(k)} from the modulus direction, combined with the phase reading
            let mut sums = alloc::vec![0i64; n];
            for (dir, m) in directions.iter().zip(&actions) {
                let image = m * &v;
                let mu = v.dotc(&image) / norm;
                if (&image - &v * mu).norm() > 1e-7 * libm::sqrt(norm) {
                    return Err(Error::Structure(
                        "quotient vector is not a torus weight vector".into(),
                    ));
                }
                let log = mu.ln();
                match *dir {
                    Direction::Fixed(k) => a[k] = rounded(log.re)?,
                    Direction::Modulus(k) => sums[k] = rounded(log.re)?,
                    Direction::Phase(k) => {
                        let (f, g) = (sums[k], rounded(log.im)?);
                        if (f + g) % 2 != 0 {
                            return Err(Error::Structure("exponent parity mismatch".into()));
                        }
                        a[k] = (f + g) / 2;
                        a[w.apply(k)] = (f - g) / 2;
                    }
                }
            }
            weights.push(decode_root(&a)?);
        }
        weights.sort();
    }
    Ok(NormalSpaceReport {
        tangent_dimension: q.tangent,
        orbit_dimension: q.orbit,
        dimension: q.basis.ncols(),
        weights,
        expected,
    })
}

/// `e_i - e_j` to `(i, j)`.
fn decode_root(a: &[i64]) -> Result<(usize, usize)> {
    let plus: Vec<usize> = (0..a.len()).filter(|&k| a[k] == 1).collect();
    let minus: Vec<usize> = (0..a.len()).filter(|&k| a[k] == -1).collect();
    let support = a.iter().filter(|&&x| x != 0).count();
    if plus.len() == 1 && minus.len() == 1 && support == 2 {
        Ok((plus[0], minus[0]))
    } else {
        Err(Error::Structure(alloc::format!(
            "weight {a:?} is not a root"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::seeded;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn inversion_set_examples() {
        assert_eq!(inversion_set(&Involution::identity(2)).pairs(), [(1, 0)]);
        let swap = Involution::from_one_line("2 1").unwrap();
        assert!(inversion_set(&swap).is_empty());
        // w = (1 3): only (2, 1)? w(2)=2 < w(1)=3; (3,1): 1<3; (3,2): 1<2; nothing survives
        let w = Involution::from_one_line("3 2 1").unwrap();
        assert!(inversion_set(&w).is_empty());
        let w = Involution::from_one_line("1 3 2").unwrap();
        assert_eq!(inversion_set(&w).pairs(), [(1, 0), (2, 0)]);
    }

    #[test]
    fn inversion_set_is_symmetric() {
        for n in 0..=6 {
            for w in Involution::all(n) {
                assert!(inversion_set(&w).is_w_symmetric(), "{w:?}");
            }
        }
    }

    #[test]
    fn kappa_examples() {
        let id = Involution::identity(2);
        let r = kappa_solutions(&id, &[rat(0, 1), rat(0, 1)], 3).unwrap();
        assert_eq!(r.solutions.len(), 1);
        assert!(r.solutions[0].is_zero() && r.agrees());

        let r = kappa_solutions(&id, &[rat(1, 1), rat(-1, 1)], 3).unwrap();
        assert!(r.solutions.is_empty() && r.agrees());

        let swap = Involution::from_one_line("2 1").unwrap();
        let r = kappa_solutions(&swap, &[rat(1, 1), rat(-1, 1)], 3).unwrap();
        assert_eq!(r.solutions, [KappaFunction::zero(&inversion_set(&swap))]);
        assert!(r.agrees());

        assert!(matches!(
            kappa_solutions(&id, &[rat(-1, 1), rat(1, 1)], 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn kappa_character_matches_exponents() {
        let w = Involution::identity(3);
        let iw = inversion_set(&w);
        let values = iw
            .pairs()
            .iter()
            .enumerate()
            .map(|(k, &p)| (p, k as u32))
            .collect();
        let kappa = KappaFunction::new(&iw, values).unwrap();
        let t = [
            Complex64::new(1.5, 0.2),
            Complex64::new(-0.7, 1.0),
            Complex64::new(0.3, -2.0),
        ];
        let a = kappa.exponents(3);
        let direct = (0..3).fold(Complex64::new(1.0, 0.0), |acc, k| {
            acc * t[k].powi(a[k] as i32)
        });
        assert!((kappa.character(&t) - direct).norm() < 1e-12);
    }

    #[test]
    fn stabiliser_samples_fix_w() {
        let mut rng = seeded(5);
        for w in Involution::all(4) {
            for _ in 0..10 {
                let t = sample_stabiliser(&w, &mut rng);
                assert!(stabilises(&t, &w, 1e-12).unwrap());
            }
        }
    }

    #[test]
    fn normal_space_small_cases() {
        let mut rng = seeded(11);
        let swap = Involution::from_one_line("2 1").unwrap();
        let r = normal_space_check(&swap, &mut rng).unwrap();
        assert_eq!((r.tangent_dimension, r.dimension), (4, 0));

        let r = normal_space_check(&Involution::identity(2), &mut rng).unwrap();
        assert_eq!(r.dimension, 1);
        assert_eq!(r.weights, [(1, 0)]);

        let w = Involution::from_one_line("1 3 2").unwrap();
        let r = normal_space_check(&w, &mut rng).unwrap();
        assert!(r.matches(), "{r:?}");
    }

    #[test]
    fn normal_space_all_n3() {
        let mut rng = seeded(12);
        for w in Involution::all(3) {
            let r = normal_space_check(&w, &mut rng).unwrap();
            assert_eq!(r.tangent_dimension, 9);
            assert!(r.matches(), "{w:?}: {r:?}");
        }
    }
}
