//! Row-major `f64` matrices and a cyclic Jacobi eigensolver.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn diag(d: &[f64]) -> Mat {
        let mut m = Mat::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<f64>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                let src = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += a * s;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: f64) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn add_scaled_identity(&mut self, s: f64) {
        for i in 0..self.rows.min(self.cols) {
            self[(i, i)] += s;
        }
    }

    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|a| a * a).sum::<f64>())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, a| m.max(a.abs()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest `|a_ij - a_ji|` relative to the largest entry.
    pub fn asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..i {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        let scale = self.max_abs();
        if scale == 0.0 {
            0.0
        } else {
            worst / scale
        }
    }

    pub fn symmetrize(&mut self) {
        for i in 0..self.rows {
            for j in 0..i {
                let m = 0.5 * (self[(i, j)] + self[(j, i)]);
                self[(i, j)] = m;
                self[(j, i)] = m;
            }
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// Symmetric eigendecomposition `S = V diag(λ) Vᵀ`.
#[derive(Clone, Debug)]
pub struct SymEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector for `values[k]`.
    pub vectors: Mat,
}

impl SymEigen {
    pub fn min_value(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// `V diag(f(λ)) Vᵀ`.
    pub fn reassemble(&self, f: impl Fn(f64) -> f64) -> Mat {
        let n = self.values.len();
        let v = &self.vectors;
        let mut out = Mat::zeros(n, n);
        for (k, &lam) in self.values.iter().enumerate() {
            let w = f(lam);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = w * v[(i, k)];
                if vik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += vik * v[(j, k)];
                }
            }
        }
        out.symmetrize();
        out
    }
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigensolver for a real symmetric matrix.
///
/// Each sweep visits every off-diagonal pair `(p, q)` and applies the plane
/// rotation that zeroes `a_pq`; sweeps repeat until the off-diagonal mass is
/// negligible against the diagonal.
pub fn eigen_sym(s: &Mat) -> Result<SymEigen> {
    if !s.is_square() {
        return Err(Error::Dimension(alloc::format!("{}x{} is not square", s.rows, s.cols)));
    }
    if s.asymmetry() > 1e-12 {
        return Err(Error::NotSymmetric);
    }
    let n = s.rows;
    let mut a = s.clone();
    a.symmetrize();
    let mut v = Mat::identity(n);

    for sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[(p, q)] * a[(p, q)];
            }
        }
        let diag: f64 = (0..n).map(|i| a[(i, i)] * a[(i, i)]).sum();
        if off == 0.0 || libm::sqrt(off) <= 1e-18 * libm::sqrt(diag + 2.0 * off) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                let g = 100.0 * apq.abs();
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t =
                    if theta == 0.0 { 1.0 } else { theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0)) };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let sn = t * c;
                rotate(&mut a, &mut v, p, q, c, sn, t);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = Mat::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(SymEigen { values, vectors })
}

fn rotate(a: &mut Mat, v: &mut Mat, p: usize, q: usize, c: f64, s: f64, t: f64) {
    let n = a.rows;
    let apq = a[(p, q)];
    let tau = s / (1.0 + c);
    a[(p, p)] -= t * apq;
    a[(q, q)] += t * apq;
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[(r, p)];
        let arq = a[(r, q)];
        let np = arp - s * (arq + tau * arp);
        let nq = arq + s * (arp - tau * arq);
        a[(r, p)] = np;
        a[(p, r)] = np;
        a[(r, q)] = nq;
        a[(q, r)] = nq;
    }
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = vrp - s * (vrq + tau * vrp);
        v[(r, q)] = vrq + s * (vrp - tau * vrq);
    }
}

/// Orthonormal basis of the common null space of `mats`.
///
/// Each matrix is normalized by its Frobenius norm and the eigenvectors of
/// `Σ MᵢᵀMᵢ` with eigenvalue at most `tol²` are returned as columns, so every
/// returned `k` satisfies `‖Mᵢ k‖ ≤ tol ‖Mᵢ‖_F`. Zero columns when the
/// intersection is trivial.
pub fn common_kernel(mats: &[Mat], tol: f64) -> Result<Mat> {
    let n = match mats.first() {
        Some(m) => m.cols,
        None => return Ok(Mat::zeros(0, 0)),
    };
    let mut gram = Mat::zeros(n, n);
    for m in mats {
        if m.cols != n {
            return Err(Error::Dimension(alloc::format!("expected {n} columns, found {}", m.cols)));
        }
        let f = m.frobenius();
        if f == 0.0 {
            continue;
        }
        let mn = m.scale(1.0 / f);
        gram = gram.add(&mn.transpose().matmul(&mn));
    }
    let eig = eigen_sym(&gram)?;
    let keep: Vec<usize> = (0..n).filter(|&k| eig.values[k] <= tol * tol).collect();
    Ok(Mat::from_fn(n, keep.len(), |i, c| eig.vectors[(i, keep[c])]))
}
