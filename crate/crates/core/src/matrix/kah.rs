//! `G = K A+ H` with `K` unitary, `H = GL_n(R)` and `A` the split torus of
//! `2 x 2` blocks `[[ch t, i sh t], [-i sh t, ch t]]`.
//!
//! From `g = k a h` one gets `g* g = h^T a^2 h`. Writing `[Re g; Im g] = Q R`
//! (real thin QR) gives `g = C R` with `C = Q_top + i Q_bot` and
//! `C* C = I + i z`, `z` real antisymmetric. An orthogonal `O` puts `z` into
//! blocks `[[0, l], [-l, 0]]`, and each block `[[1, i l], [-i l, 1]]` equals
//! `e^2 a(2t)` with `tanh 2t = l` and `e^2 = 1/cosh 2t`. Then
//! `h = E O^T R`, `k = C O E^{-1} a(-t)`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use nalgebra::DVector;
use num_complex::Complex64;

use super::{
    complexify, condition_number, frobenius, imag_part, real_part, require_square, MatrixC,
    MatrixR, I,
};
use crate::error::{Error, Result};

/// Largest condition number accepted by [`kah_decompose`].
pub const CONDITION_GUARD: f64 = 1e12;
/// `|l| >= 1 - DEGENERACY_TOL` is refused.
pub const DEGENERACY_TOL: f64 = 1e-12;
/// Block parameters below this fraction of `|z|_F` are split off and
/// block-diagonalised again on their own subspace.
const NULL_RATIO: f64 = 1e-6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Order {
    /// `g = k a h`
    #[default]
    Kah,
    /// `g = h a k`
    Hak,
}

/// Parameters `t_1, ..., t_m` of `a(t)`, `m = floor(n/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AParam {
    pub t: Vec<f64>,
}

impl AParam {
    /// `t_1 >= ... >= t_m >= 0`.
    pub fn is_canonical(&self) -> bool {
        self.t.windows(2).all(|p| p[0] >= p[1]) && self.t.last().is_none_or(|&t| t >= 0.0)
    }

    pub fn matrix(&self, n: usize) -> Result<MatrixC> {
        a_matrix(&self.t, n)
    }
}

/// `a(t_1, ..., t_m)` as an `n x n` matrix; for odd `n` the last diagonal entry is 1.
pub fn a_matrix(t: &[f64], n: usize) -> Result<MatrixC> {
    if t.len() != n / 2 {
        return Err(Error::Structure(alloc::format!(
            "{} block parameters for n = {n}",
            t.len()
        )));
    }
    let mut a = MatrixC::identity(n, n);
    for (j, &tj) in t.iter().enumerate() {
        let (c, s) = (libm::cosh(tj), libm::sinh(tj));
        let p = 2 * j;
        a[(p, p)] = Complex64::new(c, 0.0);
        a[(p + 1, p + 1)] = Complex64::new(c, 0.0);
        a[(p, p + 1)] = I * s;
        a[(p + 1, p)] = -I * s;
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq)]
pub struct KahDecomposition {
    pub order: Order,
    /// Unitary factor.
    pub k: MatrixC,
    pub a: AParam,
    /// Real invertible factor.
    pub h: MatrixR,
}

impl KahDecomposition {
    pub fn n(&self) -> usize {
        self.h.nrows()
    }

    pub fn reconstruct(&self) -> MatrixC {
        let a = self.a.matrix(self.n()).expect("parameter count matches");
        let h = complexify(&self.h);
        match self.order {
            Order::Kah => &self.k * a * h,
            Order::Hak => h * a * &self.k,
        }
    }

    /// `|g - reconstruction|_F / |g|_F`.
    pub fn relative_error(&self, g: &MatrixC) -> f64 {
        let norm = frobenius(g);
        let diff = frobenius(&(g - self.reconstruct()));
        if norm == 0.0 {
            diff
        } else {
            diff / norm
        }
    }

    /// `|k* k - I|_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.n();
        frobenius(&(self.k.adjoint() * &self.k - MatrixC::identity(n, n)))
    }
}

pub fn kah_decompose(g: &MatrixC, order: Order) -> Result<KahDecomposition> {
    match order {
        Order::Kah => decompose_kah(g),
        Order::Hak => {
            // g^T = k' a h' gives g = (h'^T P) a (P k'^T) since a^T = P a P
            let d = decompose_kah(&g.transpose())?;
            let p = block_swap(d.h.nrows());
            Ok(KahDecomposition {
                order: Order::Hak,
                h: d.h.transpose() * &p,
                k: complexify(&p) * d.k.transpose(),
                a: d.a,
            })
        }
    }
}

fn block_swap(n: usize) -> MatrixR {
    let mut p = MatrixR::identity(n, n);
    for j in 0..n / 2 {
        p.swap_columns(2 * j, 2 * j + 1);
    }
    p
}

fn decompose_kah(g: &MatrixC) -> Result<KahDecomposition> {
    let n = require_square(g)?;
    if n == 0 {
        return Ok(KahDecomposition {
            order: Order::Kah,
            k: MatrixC::zeros(0, 0),
            a: AParam { t: Vec::new() },
            h: MatrixR::zeros(0, 0),
        });
    }
    let cond = condition_number(g);
    if cond.is_nan() || cond > CONDITION_GUARD {
        return Err(Error::IllConditioned(cond));
    }

    let mut stacked = MatrixR::zeros(2 * n, n);
    stacked.view_mut((0, 0), (n, n)).copy_from(&real_part(g));
    stacked.view_mut((n, 0), (n, n)).copy_from(&imag_part(g));
    let qr = stacked.qr();
    let (mut q, mut r) = (qr.q(), qr.r());
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
            r.row_mut(j).neg_mut();
        }
    }
    let top = q.rows(0, n).into_owned();
    let bottom = q.rows(n, n).into_owned();
    let z = top.transpose() * &bottom - bottom.transpose() * &top;

    let c = complexify(&top) + complexify(&bottom) * I;
    let (mut o, smalls) = block_frame(&c, &z)?;

    // Per block, Y = C O has columns y1, y2 with |y1 - i y2| / sqrt 2 = e^t e
    // and |y1 + i y2| / sqrt 2 = e^-t e. Then k = [b, s] W* with b, s those
    // vectors normalised, and h = diag(e) O^T R.
    let mut y = &c * complexify(&o);
    let mut blocks: Vec<(f64, f64, usize)> = Vec::with_capacity(n / 2);
    let mut k_cols: Vec<(nalgebra::DVector<Complex64>, nalgebra::DVector<Complex64>)> = Vec::new();
    let r2 = core::f64::consts::FRAC_1_SQRT_2;
    for (j, small_dir) in smalls.iter().enumerate() {
        let p = 2 * j;
        let mut big = (y.column(p) - y.column(p + 1) * I) * Complex64::new(r2, 0.0);
        let (ns, s_hat) = match small_dir {
            // C v = s u is far more accurate than the product C (O w2) when s is small
            Some(d) => (d.value, d.left.clone()),
            None => {
                let mut small = (y.column(p) + y.column(p + 1) * I) * Complex64::new(r2, 0.0);
                if big.norm() < small.norm() {
                    o.swap_columns(p, p + 1);
                    y.swap_columns(p, p + 1);
                    core::mem::swap(&mut big, &mut small);
                    // swapping the pair exchanges the roles of w1 and w2 up to a phase
                    big *= -I;
                    small *= I;
                }
                let ns = small.norm();
                (ns, small / Complex64::new(ns, 0.0))
            }
        };
        let nb = big.norm();
        if ns * ns <= DEGENERACY_TOL {
            return Err(Error::Degenerate(1.0 - ns * ns));
        }
        blocks.push((0.5 * libm::log(nb / ns), libm::sqrt(nb * ns), j));
        k_cols.push((big / Complex64::new(nb, 0.0), s_hat));
    }
    blocks.sort_by(|a, b| {
        b.0.partial_cmp(&a.0)
            .unwrap_or(Ordering::Equal)
            .then(a.2.cmp(&b.2))
    });

    let mut o_sorted = MatrixR::zeros(n, n);
    let mut k = MatrixC::zeros(n, n);
    let mut scale = alloc::vec![1.0; n];
    let mut t = Vec::with_capacity(blocks.len());
    for (slot, &(tj, e, j)) in blocks.iter().enumerate() {
        let (p, q) = (2 * slot, 2 * j);
        o_sorted.set_column(p, &o.column(q));
        o_sorted.set_column(p + 1, &o.column(q + 1));
        let (b, s) = &k_cols[j];
        k.set_column(p, &((b + s) * Complex64::new(r2, 0.0)));
        k.set_column(p + 1, &((b - s) * (I * r2)));
        scale[p] = e;
        scale[p + 1] = e;
        t.push(tj);
    }
    if n % 2 == 1 {
        let last = y.column(n - 1).into_owned();
        let norm = last.norm();
        o_sorted.set_column(n - 1, &o.column(n - 1));
        k.set_column(n - 1, &(last / Complex64::new(norm, 0.0)));
        scale[n - 1] = norm;
    }
    let h = MatrixR::from_diagonal(&DVector::from_vec(scale)) * o_sorted.transpose() * &r;
    Ok(KahDecomposition {
        order: Order::Kah,
        k,
        a: AParam { t },
        h,
    })
}

/// Left singular vector and singular value of `C` for the small direction
/// `(q1 + i q2) / sqrt 2` of a block.
#[derive(Clone, Debug)]
struct SmallDirection {
    left: DVector<Complex64>,
    value: f64,
}

/// Orthogonal `O` with `O^T z O = diag([[0, l_j], [-l_j, 0]]) (+ [0])`.
///
/// Each block contributes singular values `sqrt(1 + l)` and `sqrt(1 - l)` to
/// `C`. Blocks with `sqrt(1 - l) < SPLIT` are read off the small right
/// singular vectors of `C`, whose real and imaginary parts are the block
/// columns; going through `z^T z` would lose the small directions to
/// cancellation. The remaining blocks come from [`antisymmetric_blocks`].
fn block_frame(c: &MatrixC, z: &MatrixR) -> Result<(MatrixR, Vec<Option<SmallDirection>>)> {
    const SPLIT: f64 = 0.5;
    let n = z.nrows();
    let svd = super::svd(c)?;
    let mut small: Vec<usize> = (0..n).filter(|&j| svd.s[j] < SPLIT).collect();
    small.sort_by(|&a, &b| svd.s[a].total_cmp(&svd.s[b]).then(a.cmp(&b)));

    let mut cols: Vec<DVector<f64>> = Vec::with_capacity(n);
    let mut smalls = Vec::new();
    for &j in small.iter().take(n / 2) {
        let re = DVector::from_iterator(n, svd.v.column(j).iter().map(|x| x.re));
        let im = DVector::from_iterator(n, svd.v.column(j).iter().map(|x| x.im));
        // v is proportional to q1 + i q2 for the block columns (q1, q2)
        let Some(q1) = orthonormalise(re, &cols, 0.1) else {
            continue;
        };
        let mut with_q1 = cols.clone();
        with_q1.push(q1.clone());
        let Some(q2) = orthonormalise(im, &with_q1, 0.1) else {
            continue;
        };
        cols.push(q1);
        cols.push(q2);
        smalls.push(Some(SmallDirection {
            left: svd.u.column(j).into_owned(),
            value: svd.s[j],
        }));
    }

    let mut rest: Vec<DVector<f64>> = Vec::new();
    for i in 0..n {
        if cols.len() + rest.len() == n {
            break;
        }
        let e = DVector::from_fn(n, |r, _| if r == i { 1.0 } else { 0.0 });
        let spanned: Vec<DVector<f64>> = cols.iter().chain(&rest).cloned().collect();
        if let Some(v) = orthonormalise(e, &spanned, 0.1) {
            rest.push(v);
        }
    }
    if !rest.is_empty() {
        let r = MatrixR::from_columns(&rest);
        let (inner, _) = antisymmetric_blocks(&(r.transpose() * z * &r));
        cols.extend((r * inner).column_iter().map(|c| c.into_owned()));
    }
    if cols.len() != n {
        return Err(Error::Structure(alloc::format!(
            "block frame has {} of {n} columns",
            cols.len()
        )));
    }
    smalls.resize(n / 2, None);
    Ok((MatrixR::from_columns(&cols), smalls))
}

fn orthonormalise(
    mut v: DVector<f64>,
    basis: &[DVector<f64>],
    min_norm: f64,
) -> Option<DVector<f64>> {
    let start = v.norm();
    if start == 0.0 {
        return None;
    }
    for _ in 0..2 {
        for b in basis {
            let c = b.dot(&v);
            v.axpy(-c, b, 1.0);
        }
    }
    let norm = v.norm();
    (norm > min_norm * start).then(|| v / norm)
}

fn antisymmetric_blocks(z: &MatrixR) -> (MatrixR, Vec<f64>) {
    let n = z.nrows();
    let scale = z.norm();
    if n < 2 || scale == 0.0 {
        return (MatrixR::identity(n, n), alloc::vec![0.0; n / 2]);
    }
    let eig = (z.transpose() * z).symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .total_cmp(&eig.eigenvalues[a])
            .then(a.cmp(&b))
    });

    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(n);
    let mut lambdas = Vec::new();
    let mut next = 0;
    while next < n && basis.len() + 2 <= n {
        let c = order[next];
        if libm::sqrt(eig.eigenvalues[c].max(0.0)) <= NULL_RATIO * scale {
            break;
        }
        next += 1;
        let Some(v) = orthonormalise(eig.eigenvectors.column(c).into_owned(), &basis, 0.5) else {
            continue;
        };
        let Some(u) = orthonormalise(z * &v, &basis, 0.5) else {
            continue;
        };
        lambdas.push(u.dot(&(z * &v)));
        basis.push(u);
        basis.push(v);
    }

    let mut rest: Vec<DVector<f64>> = Vec::new();
    let candidates = order[next..]
        .iter()
        .map(|&c| eig.eigenvectors.column(c).into_owned())
        .chain((0..n).map(|i| DVector::from_fn(n, |r, _| if r == i { 1.0 } else { 0.0 })));
    for cand in candidates {
        if basis.len() + rest.len() == n {
            break;
        }
        let spanned: Vec<DVector<f64>> = basis.iter().chain(&rest).cloned().collect();
        if let Some(v) = orthonormalise(cand, &spanned, 0.1) {
            rest.push(v);
        }
    }
    if rest.len() >= 2 {
        let r = MatrixR::from_columns(&rest);
        let (inner, more) = antisymmetric_blocks(&(r.transpose() * z * &r));
        rest = (r * inner).column_iter().map(|c| c.into_owned()).collect();
        lambdas.extend(more);
    }
    basis.extend(rest);
    (MatrixR::from_columns(&basis), lambdas)
}

/// `|t(g1) - t(g2)|` for the `A+` parts in `K A+ H` order.
pub fn a_part_distance(g1: &MatrixC, g2: &MatrixC) -> Result<f64> {
    if g1.shape() != g2.shape() {
        return Err(Error::Structure(alloc::format!(
            "shapes {:?} and {:?} differ",
            g1.shape(),
            g2.shape()
        )));
    }
    let t1 = kah_decompose(g1, Order::Kah)?.a.t;
    let t2 = kah_decompose(g2, Order::Kah)?.a.t;
    Ok(libm::sqrt(
        t1.iter().zip(&t2).map(|(a, b)| (a - b) * (a - b)).sum(),
    ))
}
