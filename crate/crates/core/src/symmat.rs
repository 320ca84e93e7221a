//! Dense symmetric-matrix kernel: eigendecomposition, positive part, matrix
//! square root, rank-revealing factorization, and Cholesky.
//!
//! All operations are pure functions on immutable values. Matrices are
//! symmetrized on construction; asymmetry beyond `1e-8` relative is rejected.

use crate::error::{Error, Result};
use crate::mat::{norm2, Mat};
use crate::scalar::{cst, Real};

/// Relative asymmetry tolerated (and silently repaired) on ingest.
pub const ASYMMETRY_TOL: f64 = 1e-8;
/// Relative eigenvalue cutoff below which a spectrum direction counts as null.
pub const TAU_RANK_DEFAULT: f64 = 1e-10;
/// Relative tolerance under which negative eigenvalues are clipped to zero.
pub const PSD_CLIP_TOL: f64 = 1e-8;

const MAX_JACOBI_SWEEPS: usize = 60;

/// Dense symmetric matrix with full row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Real> SymMatrix<T> {
    /// Builds a symmetric matrix from square row data. Asymmetry up to
    /// [`ASYMMETRY_TOL`] relative to the largest entry is repaired by
    /// averaging; beyond that the input is rejected.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("matrix dimension must be >= 1".into()));
        }
        for r in rows {
            if r.len() != n {
                return Err(Error::InvalidInput(format!(
                    "matrix must be square: found row of length {} in a {}-row matrix",
                    r.len(),
                    n
                )));
            }
            if r.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidInput("matrix entries must be finite".into()));
            }
        }
        let mut scale = T::zero();
        let mut asym = T::zero();
        for i in 0..n {
            for j in 0..n {
                scale = scale.max(rows[i][j].abs());
                let d = (rows[i][j] - rows[j][i]).abs();
                asym = asym.max(d);
            }
        }
        let denom = if scale > T::zero() { scale } else { T::one() };
        let rel = asym / denom;
        if rel > cst(ASYMMETRY_TOL) {
            return Err(Error::Asymmetric {
                asymmetry: rel.to_f64().unwrap_or(f64::NAN),
            });
        }
        let half = cst::<T>(0.5);
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(half * (rows[i][j] + rows[j][i]));
            }
        }
        Ok(Self { dim: n, data })
    }

    /// Exact symmetrization `(M + M^T)/2` of a computed square product.
    pub fn from_mat_average(m: &Mat<T>) -> Self {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        let half = cst::<T>(0.5);
        Self {
            dim: n,
            data: (0..n * n)
                .map(|k| {
                    let (i, j) = (k / n, k % n);
                    half * (m.at(i, j) + m.at(j, i))
                })
                .collect(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            dim: n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scaled_identity(n, T::one())
    }

    pub fn scaled_identity(n: usize, c: T) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_diag(d: &[T]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, v) in d.iter().enumerate() {
            m.data[i * d.len() + i] = *v;
        }
        m
    }

    /// Rank-one matrix `v v^T`.
    pub fn outer(v: &[T]) -> Self {
        let n = v.len();
        Self {
            dim: n,
            data: (0..n * n).map(|k| v[k / n] * v[k % n]).collect(),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> T {
        debug_assert!(i < self.dim && j < self.dim);
        self.data[i * self.dim + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.dim + j] = v;
        self.data[j * self.dim + i] = v;
    }

    pub fn to_mat(&self) -> Mat<T> {
        Mat::from_fn(self.dim, self.dim, |i, j| self.at(i, j))
    }

    pub fn diag(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.at(i, i)).collect()
    }

    pub fn trace(&self) -> T {
        (0..self.dim).map(|i| self.at(i, i)).sum()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(o.data.iter())
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(o.data.iter())
                .map(|(a, b)| *a - *b)
                .collect(),
        }
    }

    pub fn scale(&self, c: T) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|a| *a * c).collect(),
        }
    }

    pub fn add_scaled_identity(&self, c: T) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.data[i * self.dim + i] = out.data[i * self.dim + i] + c;
        }
        out
    }

    /// Frobenius inner product `<self, o>`.
    pub fn frob_inner(&self, o: &Self) -> T {
        assert_eq!(self.dim, o.dim);
        self.data
            .iter()
            .zip(o.data.iter())
            .map(|(a, b)| *a * *b)
            .sum()
    }

    pub fn frob_norm(&self) -> T {
        self.frob_inner(self).sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, v| acc.max(v.abs()))
    }

    pub fn max_offdiag_abs(&self) -> T {
        let mut m = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    m = m.max(self.at(i, j).abs());
                }
            }
        }
        m
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(self.dim, x.len());
        (0..self.dim)
            .map(|i| {
                let mut s = T::zero();
                for j in 0..self.dim {
                    s = s + self.at(i, j) * x[j];
                }
                s
            })
            .collect()
    }

    pub fn quad_form(&self, x: &[T]) -> T {
        let mx = self.matvec(x);
        crate::mat::dot(x, &mx)
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        assert!(k >= 1);
        let mut data = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                data.push(self.at(i, j));
            }
        }
        Self { dim: k, data }
    }

    /// Symmetric permutation `P M P^T`: entry `(i, j)` of the result is
    /// `M[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim);
        self.principal_submatrix(perm)
    }

    /// Full eigendecomposition by cyclic Jacobi rotations. Eigenvalues are
    /// returned in descending order with an orthonormal set of column
    /// eigenvectors.
    pub fn eigh(&self) -> Result<EigenDecomposition<T>> {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut v = Mat::<T>::identity(n);
        let mut d: Vec<T> = (0..n).map(|i| a[i * n + i]).collect();
        let mut b = d.clone();
        let mut z = vec![T::zero(); n];
        let hundred = cst::<T>(100.0);
        let half = cst::<T>(0.5);

        for sweep in 0..MAX_JACOBI_SWEEPS {
            let mut sm = T::zero();
            for p in 0..n {
                for q in p + 1..n {
                    sm = sm + a[p * n + q].abs();
                }
            }
            if sm == T::zero() {
                return Ok(EigenDecomposition::sorted(d, v));
            }
            let tresh = if sweep < 3 {
                cst::<T>(0.2) * sm / cst((n * n) as f64)
            } else {
                T::zero()
            };
            for p in 0..n - 1 {
                for q in p + 1..n {
                    let apq = a[p * n + q];
                    let g = hundred * apq.abs();
                    if sweep > 3
                        && d[p].abs() + g == d[p].abs()
                        && d[q].abs() + g == d[q].abs()
                    {
                        a[p * n + q] = T::zero();
                    } else if apq.abs() > tresh {
                        let mut h = d[q] - d[p];
                        let t = if h.abs() + g == h.abs() {
                            apq / h
                        } else {
                            let theta = half * h / apq;
                            let mut t =
                                T::one() / (theta.abs() + (T::one() + theta * theta).sqrt());
                            if theta < T::zero() {
                                t = -t;
                            }
                            t
                        };
                        let c = T::one() / (T::one() + t * t).sqrt();
                        let s = t * c;
                        let tau = s / (T::one() + c);
                        h = t * apq;
                        z[p] = z[p] - h;
                        z[q] = z[q] + h;
                        d[p] = d[p] - h;
                        d[q] = d[q] + h;
                        a[p * n + q] = T::zero();
                        let rot = |a: &mut Vec<T>, i1: usize, j1: usize, i2: usize, j2: usize| {
                            let g = a[i1 * n + j1];
                            let h = a[i2 * n + j2];
                            a[i1 * n + j1] = g - s * (h + g * tau);
                            a[i2 * n + j2] = h + s * (g - h * tau);
                        };
                        for j in 0..p {
                            rot(&mut a, j, p, j, q);
                        }
                        for j in p + 1..q {
                            rot(&mut a, p, j, j, q);
                        }
                        for j in q + 1..n {
                            rot(&mut a, p, j, q, j);
                        }
                        for j in 0..n {
                            let gj = v.at(j, p);
                            let hj = v.at(j, q);
                            v.set(j, p, gj - s * (hj + gj * tau));
                            v.set(j, q, hj + s * (gj - hj * tau));
                        }
                    }
                }
            }
            for i in 0..n {
                b[i] = b[i] + z[i];
                d[i] = b[i];
                z[i] = T::zero();
            }
        }
        Err(Error::EigNoConvergence { dim: n })
    }

    /// Projection onto the positive-semidefinite cone: negative eigenvalues
    /// are replaced by zero, so the trace of the result is the sum of the
    /// positive eigenvalues of the input.
    pub fn psd_part(&self) -> Result<Self> {
        let e = self.eigh()?;
        Ok(e.reconstruct_with(|l| if l > T::zero() { l } else { T::zero() }))
    }

    /// Symmetric square root of a PSD matrix. Eigenvalues in
    /// `[-PSD_CLIP_TOL * lambda_max, 0)` are clipped to zero; anything more
    /// negative is an error.
    pub fn sqrt_psd(&self) -> Result<Self> {
        let e = self.eigh()?;
        let lmax = e.values[0].max(T::zero());
        let tol = cst::<T>(PSD_CLIP_TOL) * lmax;
        let lmin = *e.values.last().expect("dim >= 1");
        if lmin < -tol {
            return Err(Error::NotPsd {
                min_eig: lmin.to_f64().unwrap_or(f64::NAN),
                dim: self.dim,
            });
        }
        Ok(e.reconstruct_with(|l| if l > T::zero() { l.sqrt() } else { T::zero() }))
    }

    /// Largest eigenvalue with a unit eigenvector.
    pub fn lambda_max(&self) -> Result<(T, Vec<T>)> {
        let e = self.eigh()?;
        let mut v = e.vectors.col_vec(0);
        let nrm = norm2(&v);
        if nrm > T::zero() {
            for x in v.iter_mut() {
                *x = *x / nrm;
            }
        }
        Ok((e.values[0], v))
    }

    /// Spectral norm (largest absolute eigenvalue).
    pub fn spectral_norm(&self) -> Result<T> {
        let e = self.eigh()?;
        let hi = e.values[0].abs();
        let lo = e.values.last().expect("dim >= 1").abs();
        Ok(hi.max(lo))
    }

    /// Cholesky factorization `L L^T`; `None` when the matrix is not
    /// numerically positive definite.
    pub fn cholesky(&self) -> Option<CholeskyFactor<T>> {
        let n = self.dim;
        let mut l = Mat::<T>::zeros(n, n);
        for j in 0..n {
            let mut s = self.at(j, j);
            for k in 0..j {
                s = s - l.at(j, k) * l.at(j, k);
            }
            if !(s > T::zero()) || !s.is_finite() {
                return None;
            }
            let ljj = s.sqrt();
            l.set(j, j, ljj);
            for i in j + 1..n {
                let mut t = self.at(i, j);
                for k in 0..j {
                    t = t - l.at(i, k) * l.at(j, k);
                }
                l.set(i, j, t / ljj);
            }
        }
        Some(CholeskyFactor { l })
    }
}

/// Spectrum and orthonormal eigenbasis, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<T> {
    /// Eigenvalues, sorted descending.
    pub values: Vec<T>,
    /// Matching eigenvectors as matrix columns.
    pub vectors: Mat<T>,
}

impl<T: Real> EigenDecomposition<T> {
    fn sorted(d: Vec<T>, v: Mat<T>) -> Self {
        let n = d.len();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| {
            d[j].partial_cmp(&d[i])
                .unwrap_or(core::cmp::Ordering::Equal)
                .then(i.cmp(&j))
        });
        let values: Vec<T> = idx.iter().map(|&i| d[i]).collect();
        let vectors = Mat::from_fn(n, n, |r, c| v.at(r, idx[c]));
        Self { values, vectors }
    }

    /// Rebuilds `V f(Lambda) V^T`.
    pub fn reconstruct_with(&self, f: impl Fn(T) -> T) -> SymMatrix<T> {
        let n = self.values.len();
        let mut out = SymMatrix::zeros(n);
        for (k, &lam) in self.values.iter().enumerate() {
            let fl = f(lam);
            if fl != T::zero() {
                for i in 0..n {
                    let vik = self.vectors.at(i, k) * fl;
                    if vik != T::zero() {
                        for j in i..n {
                            let add = vik * self.vectors.at(j, k);
                            let cur = out.at(i, j);
                            out.set_sym(i, j, cur + add);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Rank-revealing factorization `Sigma = A^T A` with `A` of shape `m x n`,
/// rows being eigenvectors scaled by root-eigenvalues.
#[derive(Debug, Clone)]
pub struct RankFactor<T> {
    m: usize,
    a: Mat<T>,
    tau_rank: T,
}

impl<T: Real> RankFactor<T> {
    /// Numerical rank: eigenvalues exceeding `tau_rank * lambda_max`.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// The `m x n` factor.
    #[inline]
    pub fn a(&self) -> &Mat<T> {
        &self.a
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.a.cols()
    }

    /// Column `a_i` of the factor.
    pub fn col(&self, i: usize) -> Vec<T> {
        self.a.col_vec(i)
    }

    /// Relative rank cutoff used to build this factor.
    #[inline]
    pub fn tau_rank(&self) -> T {
        self.tau_rank
    }
}

/// Factors a PSD matrix as `A^T A` keeping eigenvalues above
/// `tau_rank * lambda_max`. The zero matrix is rejected.
pub fn factor_rank<T: Real>(sigma: &SymMatrix<T>, tau_rank: T) -> Result<RankFactor<T>> {
    let e = sigma.eigh()?;
    let n = sigma.dim();
    let lmax = e.values[0];
    let lmin = *e.values.last().expect("dim >= 1");
    if lmin < -cst::<T>(PSD_CLIP_TOL) * lmax.max(T::zero()) {
        return Err(Error::NotPsd {
            min_eig: lmin.to_f64().unwrap_or(f64::NAN),
            dim: n,
        });
    }
    if lmax <= T::zero() {
        return Err(Error::ZeroMatrix);
    }
    let cut = tau_rank * lmax;
    let m = e.values.iter().filter(|&&l| l > cut).count();
    debug_assert!(m >= 1);
    let a = Mat::from_fn(m, n, |k, j| e.values[k].max(T::zero()).sqrt() * e.vectors.at(j, k));
    Ok(RankFactor { m, a, tau_rank })
}

/// Lower-triangular Cholesky factor.
#[derive(Debug, Clone)]
pub struct CholeskyFactor<T> {
    l: Mat<T>,
}

impl<T: Real> CholeskyFactor<T> {
    /// Solves `L L^T x = b`.
    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.l.rows();
        assert_eq!(b.len(), n);
        let mut y = vec![T::zero(); n];
        for i in 0..n {
            let mut s = b[i];
            for k in 0..i {
                s = s - self.l.at(i, k) * y[k];
            }
            y[i] = s / self.l.at(i, i);
        }
        let mut x = vec![T::zero(); n];
        for i in (0..n).rev() {
            let mut s = y[i];
            for k in i + 1..n {
                s = s - self.l.at(k, i) * x[k];
            }
            x[i] = s / self.l.at(i, i);
        }
        x
    }

    /// Inverse of the factored matrix, symmetrized.
    pub fn inverse(&self) -> SymMatrix<T> {
        let n = self.l.rows();
        let mut cols = Mat::<T>::zeros(n, n);
        let mut e = vec![T::zero(); n];
        for j in 0..n {
            e[j] = T::one();
            let x = self.solve(&e);
            e[j] = T::zero();
            for i in 0..n {
                cols.set(i, j, x[i]);
            }
        }
        SymMatrix::from_mat_average(&cols)
    }

    /// `log det` of the factored matrix.
    pub fn logdet(&self) -> T {
        let two = cst::<T>(2.0);
        let mut s = T::zero();
        for i in 0..self.l.rows() {
            s = s + self.l.at(i, i).ln();
        }
        two * s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn sym(rows: &[&[f64]]) -> SymMatrix<f64> {
        SymMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn eigh_identity() {
        let m = SymMatrix::<f64>::identity(3);
        let e = m.eigh().unwrap();
        for &v in &e.values {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn eigh_diagonal_sorted() {
        let m = SymMatrix::from_diag(&[1.0f64, 3.0]);
        let e = m.eigh().unwrap();
        assert_abs_diff_eq!(e.values[0], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.values[1], 1.0, epsilon = 1e-12);
        // top eigenvector is e2 up to sign
        assert_abs_diff_eq!(e.vectors.at(1, 0).abs(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn eigh_offdiagonal_pair() {
        let m = sym(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let e = m.eigh().unwrap();
        assert_abs_diff_eq!(e.values[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.values[1], -1.0, epsilon = 1e-12);
    }

    #[test]
    fn psd_part_examples() {
        let m = SymMatrix::from_diag(&[2.0f64, -1.0]);
        let p = m.psd_part().unwrap();
        assert_abs_diff_eq!(p.at(0, 0), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.at(1, 1), 0.0, epsilon = 1e-12);

        let swap = sym(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_abs_diff_eq!(swap.psd_part().unwrap().trace(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn sqrt_psd_examples() {
        let m = SymMatrix::from_diag(&[4.0f64, 9.0]);
        let r = m.sqrt_psd().unwrap();
        assert_abs_diff_eq!(r.at(0, 0), 2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r.at(1, 1), 3.0, epsilon = 1e-10);

        let id = SymMatrix::<f64>::identity(3);
        let ri = id.sqrt_psd().unwrap();
        assert_abs_diff_eq!(ri.sub(&id).max_abs(), 0.0, epsilon = 1e-12);

        // rank-one projector is its own square root
        let v = [3.0f64 / 5.0, 4.0 / 5.0];
        let p = SymMatrix::outer(&v);
        let rp = p.sqrt_psd().unwrap();
        assert!(rp.sub(&p).max_abs() < 1e-10);

        let neg = SymMatrix::from_diag(&[1.0f64, -0.5]);
        assert!(matches!(neg.sqrt_psd(), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn factor_rank_examples() {
        let id = SymMatrix::<f64>::identity(2);
        let f = factor_rank(&id, 1e-10).unwrap();
        assert_eq!(f.m(), 2);

        // rank-one dyad of (2, 1)
        let m = sym(&[&[4.0, 2.0], &[2.0, 1.0]]);
        let f = factor_rank(&m, 1e-10).unwrap();
        assert_eq!(f.m(), 1);
        let a0 = f.col(0);
        let a1 = f.col(1);
        assert_abs_diff_eq!(norm2(&a0), 2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(norm2(&a1), 1.0, epsilon = 1e-10);

        assert!(matches!(
            factor_rank(&SymMatrix::<f64>::zeros(3), 1e-10),
            Err(Error::ZeroMatrix)
        ));
    }

    #[test]
    fn lambda_max_examples() {
        let m = SymMatrix::from_diag(&[3.0f64, 1.0]);
        let (v, x) = m.lambda_max().unwrap();
        assert_abs_diff_eq!(v, 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(x[0].abs(), 1.0, epsilon = 1e-12);

        let z = SymMatrix::<f64>::zeros(2);
        let (v, x) = z.lambda_max().unwrap();
        assert_eq!(v, 0.0);
        assert_abs_diff_eq!(norm2(&x), 1.0, epsilon = 1e-12);

        let m = SymMatrix::from_diag(&[2.5f64, -0.5]);
        let (v, x) = m.lambda_max().unwrap();
        assert_abs_diff_eq!(v, 2.5, epsilon = 1e-12);
        assert_abs_diff_eq!(x[0].abs(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn asymmetry_rejected_beyond_tolerance() {
        let rows = vec![vec![1.0f64, 0.5], vec![0.4, 1.0]];
        assert!(matches!(
            SymMatrix::from_rows(&rows),
            Err(Error::Asymmetric { .. })
        ));
        let rows = vec![vec![1.0f64, 0.5 + 1e-10], vec![0.5, 1.0]];
        let m = SymMatrix::from_rows(&rows).unwrap();
        assert_eq!(m.at(0, 1), m.at(1, 0));
    }

    #[test]
    fn cholesky_round_trip() {
        let m = sym(&[&[4.0, 1.0, 0.0], &[1.0, 3.0, 0.5], &[0.0, 0.5, 2.0]]);
        let ch = m.cholesky().unwrap();
        let x_true = [0.5, -1.0, 2.0];
        let b = m.matvec(&x_true);
        let x = ch.solve(&b);
        for (a, t) in x.iter().zip(x_true.iter()) {
            assert_abs_diff_eq!(*a, *t, epsilon = 1e-12);
        }
        let inv = ch.inverse();
        let prod = Mat::from_fn(3, 3, |i, j| {
            (0..3).map(|k| m.at(i, k) * inv.at(k, j)).sum::<f64>()
        });
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(prod.at(i, j), want, epsilon = 1e-12);
            }
        }
        // det(m) via logdet
        assert_abs_diff_eq!(ch.logdet(), m_det_log(&m), epsilon = 1e-10);
        assert!(SymMatrix::from_diag(&[1.0f64, -1.0]).cholesky().is_none());
    }

    fn m_det_log(m: &SymMatrix<f64>) -> f64 {
        let e = m.eigh().unwrap();
        e.values.iter().map(|v| v.ln()).sum()
    }

    #[test]
    fn eigh_f32_smoke() {
        let m = SymMatrix::<f32>::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let e = m.eigh().unwrap();
        assert!((e.values[0] - 3.0).abs() < 1e-5);
        assert!((e.values[1] - 1.0).abs() < 1e-5);
    }
}
