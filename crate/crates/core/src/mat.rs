//! Dense row-major matrices and the small direct solvers the rest of the
//! crate is built on. Everything here targets matrices of at most a few
//! hundred rows.

use crate::scalar::Real;

/// Dense rectangular matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> T {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i))
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(self.cols, x.len());
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik != T::zero() {
                    let base = i * rhs.cols;
                    for j in 0..rhs.cols {
                        out.data[base + j] = out.data[base + j] + aik * rhs.at(k, j);
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

#[inline]
pub fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    let mut s = T::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        s = s + *x * *y;
    }
    s
}

#[inline]
pub fn norm2<T: Real>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

/// Solves `a x = b` by LU factorization with partial pivoting.
/// Returns `None` when the matrix is numerically singular.
pub fn lu_solve<T: Real>(mut a: Mat<T>, mut b: Vec<T>) -> Option<Vec<T>> {
    let n = a.rows();
    assert!(a.cols() == n && b.len() == n);
    for k in 0..n {
        let mut piv = k;
        let mut best = a.at(k, k).abs();
        for i in k + 1..n {
            let v = a.at(i, k).abs();
            if v > best {
                best = v;
                piv = i;
            }
        }
        if best == T::zero() || !best.is_finite() {
            return None;
        }
        a.swap_rows(piv, k);
        b.swap(piv, k);
        let akk = a.at(k, k);
        for i in k + 1..n {
            let f = a.at(i, k) / akk;
            if f != T::zero() {
                for j in k..n {
                    a.set(i, j, a.at(i, j) - f * a.at(k, j));
                }
                b[i] = b[i] - f * b[k];
            }
        }
    }
    let mut x = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut s = b[i];
        for j in i + 1..n {
            s = s - a.at(i, j) * x[j];
        }
        x[i] = s / a.at(i, i);
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_identity() {
        let a = Mat::<f64>::from_fn(2, 3, |i, j| (i * 3 + j) as f64);
        let prod = Mat::<f64>::identity(2).matmul(&a);
        assert_eq!(prod, a);
    }

    #[test]
    fn lu_solves_small_system() {
        let a = Mat::<f64>::from_fn(3, 3, |i, j| {
            [[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 4.0]][i][j]
        });
        let x_true = [1.0, -2.0, 0.5];
        let b = a.matvec(&x_true);
        let x = lu_solve(a, b).unwrap();
        for (xi, ti) in x.iter().zip(x_true.iter()) {
            assert!((xi - ti).abs() < 1e-12);
        }
    }

    #[test]
    fn lu_rejects_singular() {
        let a = Mat::<f64>::from_fn(2, 2, |i, _| if i == 0 { 1.0 } else { 2.0 });
        assert!(lu_solve(a, vec![1.0, 2.0]).is_some());
        let s = Mat::<f64>::from_fn(2, 2, |_, j| if j == 0 { 1.0 } else { 0.0 });
        assert!(lu_solve(s, vec![1.0, 2.0]).is_none());
    }
}
