//! Column-major dense matrix of `f64` and column permutations.
//!
//! All reductions run in a fixed order (ascending row index within a column,
//! ascending column index, ascending inner index in products), so every
//! operation is bitwise reproducible. Operations never mutate their inputs.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::fmath;

/// Dense matrix with column-major storage: entry `(i, j)` lives at
/// `data[i + j * rows]`. All entries are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Zero matrix. Dimensions must be positive.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds a matrix from column-major data, validating length and
    /// finiteness.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::InvalidArgument {
                what: "data length must equal rows * cols, both positive",
            });
        }
        if !data.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite { op: "from_vec" });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix entry by entry. Panics if `f` produces a non-finite
    /// value.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                let v = f(i, j);
                assert!(v.is_finite(), "from_fn produced a non-finite entry");
                m.set(i, j, v);
            }
        }
        m
    }

    /// Convenience constructor from rows of equal length.
    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::InvalidArgument {
                what: "from_rows requires a nonempty row list",
            });
        }
        let nc = rows[0].len();
        if rows.iter().any(|r| r.len() != nc) {
            return Err(Error::InvalidArgument {
                what: "from_rows requires rows of equal length",
            });
        }
        let mut data = Vec::with_capacity(rows.len() * nc);
        for j in 0..nc {
            for r in rows {
                data.push(r[j]);
            }
        }
        Self::from_vec(rows.len(), nc, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Raw column-major data.
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i + j * self.rows]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i + j * self.rows] = v;
    }

    /// Column `j` as a contiguous slice.
    #[inline]
    pub fn col(&self, j: usize) -> &[f64] {
        debug_assert!(j < self.cols);
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    #[inline]
    pub fn col_mut(&mut self, j: usize) -> &mut [f64] {
        debug_assert!(j < self.cols);
        &mut self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let t = self.get(i, a);
            self.set(i, a, self.get(i, b));
            self.set(i, b, t);
        }
    }

    /// Copy of the submatrix at the given row and column ranges.
    pub fn block(&self, rows: Range<usize>, cols: Range<usize>) -> Self {
        assert!(rows.end <= self.rows && cols.end <= self.cols && !rows.is_empty() && !cols.is_empty());
        let mut out = Self::zeros(rows.len(), cols.len());
        for (jo, j) in cols.clone().enumerate() {
            let src = self.col(j);
            let dst = out.col_mut(jo);
            dst.copy_from_slice(&src[rows.clone()]);
        }
        out
    }

    /// Copy of the leading `k` columns.
    pub fn leading_cols(&self, k: usize) -> Self {
        self.block(0..self.rows, 0..k)
    }

    /// Matrix product `self * other` with ascending-k accumulation per
    /// output entry, so the result does not depend on internal blocking.
    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "matmul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        acc_matmul(&mut out, self, other);
        debug_assert!(out.all_finite());
        Ok(out)
    }

    /// Transpose copy. `transpose(transpose(A))` is bit-identical to `A`.
    pub fn transpose(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.cols, self.rows);
        for j in 0..self.cols {
            let src = self.col(j);
            for i in 0..self.rows {
                out.set(j, i, src[i]);
            }
        }
        out
    }

    /// Frobenius norm, summed in column-major order.
    pub fn frobenius_norm(&self) -> f64 {
        let mut acc = 0.0;
        for x in &self.data {
            acc += x * x;
        }
        fmath::sqrt(acc)
    }

    /// Entry-wise difference `self - other`.
    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                op: "sub",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Copy with column `j` scaled by `factors[j]`.
    pub fn scale_cols(&self, factors: &[f64]) -> Result<DenseMatrix> {
        if factors.len() != self.cols {
            return Err(Error::InvalidArgument {
                what: "scale_cols requires one factor per column",
            });
        }
        let mut out = self.clone();
        for (j, &f) in factors.iter().enumerate() {
            for x in out.col_mut(j) {
                *x *= f;
            }
        }
        Ok(out)
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for x in &self.data {
            m = m.max(fmath::abs(*x));
        }
        m
    }

    pub(crate) fn all_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }
}

/// `c += a * b`, accumulating contributions in ascending inner index per
/// output entry. Splitting `a` into row blocks and `b` accordingly and
/// calling this per block reproduces the unblocked result bit for bit.
pub(crate) fn acc_matmul(c: &mut DenseMatrix, a: &DenseMatrix, b: &DenseMatrix) {
    debug_assert_eq!(a.cols, b.rows);
    debug_assert_eq!(c.rows, a.rows);
    debug_assert_eq!(c.cols, b.cols);
    let m = a.rows;
    for j in 0..b.cols {
        let bcol = &b.data[j * b.rows..(j + 1) * b.rows];
        let ccol = &mut c.data[j * m..(j + 1) * m];
        for (k, &bkj) in bcol.iter().enumerate() {
            let acol = &a.data[k * m..(k + 1) * m];
            for i in 0..m {
                ccol[i] += acol[i] * bkj;
            }
        }
    }
}

/// Column permutation: `map[j]` is the source column index that lands at
/// position `j`. `map` is a bijection on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        assert!(size > 0, "permutation size must be positive");
        Self {
            map: (0..size).collect(),
        }
    }

    /// Validates that `map` is a bijection on `0..map.len()`.
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        if map.is_empty() {
            return Err(Error::InvalidArgument {
                what: "permutation must be nonempty",
            });
        }
        let mut seen = vec![false; map.len()];
        for &m in &map {
            if m >= map.len() || seen[m] {
                return Err(Error::InvalidArgument {
                    what: "permutation map must be a bijection",
                });
            }
            seen[m] = true;
        }
        Ok(Self { map })
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| i == m)
    }

    pub(crate) fn swap(&mut self, a: usize, b: usize) {
        self.map.swap(a, b);
    }

    /// Inverse permutation: applying then inverting is the identity.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0usize; self.map.len()];
        for (j, &m) in self.map.iter().enumerate() {
            inv[m] = j;
        }
        Self { map: inv }
    }

    /// `A * P`: gathers columns, `out[:, j] = a[:, map[j]]`.
    pub fn gather_cols(&self, a: &DenseMatrix) -> Result<DenseMatrix> {
        if a.cols() != self.size() {
            return Err(Error::ShapeMismatch {
                op: "gather_cols",
                lhs_rows: a.rows(),
                lhs_cols: a.cols(),
                rhs_rows: self.size(),
                rhs_cols: self.size(),
            });
        }
        let mut out = DenseMatrix::zeros(a.rows(), a.cols());
        for j in 0..self.size() {
            out.col_mut(j).copy_from_slice(a.col(self.map[j]));
        }
        Ok(out)
    }

    /// `P * A`: scatters rows, `out[map[i], :] = a[i, :]`.
    pub fn scatter_rows(&self, a: &DenseMatrix) -> Result<DenseMatrix> {
        if a.rows() != self.size() {
            return Err(Error::ShapeMismatch {
                op: "scatter_rows",
                lhs_rows: self.size(),
                lhs_cols: self.size(),
                rhs_rows: a.rows(),
                rhs_cols: a.cols(),
            });
        }
        let mut out = DenseMatrix::zeros(a.rows(), a.cols());
        for j in 0..a.cols() {
            let src = a.col(j);
            let dst = out.col_mut(j);
            for (i, &m) in self.map.iter().enumerate() {
                dst[m] = src[i];
            }
        }
        Ok(out)
    }

    /// Dense 0/1 matrix form, mainly for tests.
    pub fn to_matrix(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.size(), self.size());
        for (j, &src) in self.map.iter().enumerate() {
            m.set(src, j, 1.0);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(values: &[f64]) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    #[test]
    fn matmul_identity() {
        let m = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0], &[5.0, 6.0]]).unwrap();
        let i3 = DenseMatrix::identity(3);
        assert_eq!(i3.matmul(&m).unwrap(), m);
    }

    #[test]
    fn matmul_diagonal_product() {
        let a = diag(&[2.0, 3.0]);
        let b = diag(&[5.0, 7.0]);
        assert_eq!(a.matmul(&b).unwrap(), diag(&[10.0, 21.0]));
    }

    #[test]
    fn matmul_matches_triple_loop_oracle() {
        // Deterministic pseudo-random fill; the oracle is the literal
        // definition evaluated entry by entry.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
        };
        let a = DenseMatrix::from_fn(4, 3, |_, _| next());
        let b = DenseMatrix::from_fn(3, 2, |_, _| next());
        let c = a.matmul(&b).unwrap();
        for i in 0..4 {
            for j in 0..2 {
                let mut want = 0.0;
                for k in 0..3 {
                    want += a.get(i, k) * b.get(k, j);
                }
                assert!((c.get(i, j) - want).abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn matmul_shape_mismatch() {
        let a = DenseMatrix::zeros(2, 3);
        let b = DenseMatrix::zeros(2, 2);
        assert!(matches!(a.matmul(&b), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn transpose_definition_and_involution() {
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]).unwrap();
        let t = a.transpose();
        let want = DenseMatrix::from_rows(&[&[1.0, 4.0], &[2.0, 5.0], &[3.0, 6.0]]).unwrap();
        assert_eq!(t, want);
        assert_eq!(t.transpose(), a);
        assert_eq!(DenseMatrix::identity(3).transpose(), DenseMatrix::identity(3));
    }

    #[test]
    fn frobenius_norm_cases() {
        assert_eq!(DenseMatrix::zeros(3, 3).frobenius_norm(), 0.0);
        assert_eq!(DenseMatrix::identity(4).frobenius_norm(), 2.0);
        let m = DenseMatrix::from_rows(&[&[3.0, 4.0]]).unwrap();
        assert_eq!(m.frobenius_norm(), 5.0);
    }

    #[test]
    fn from_vec_validates() {
        assert!(DenseMatrix::from_vec(2, 2, vec![1.0; 3]).is_err());
        assert!(matches!(
            DenseMatrix::from_vec(1, 2, vec![1.0, f64::NAN]),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn permutation_roundtrip() {
        let p = Permutation::from_map(vec![2, 0, 1]).unwrap();
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]).unwrap();
        let g = p.gather_cols(&a).unwrap();
        assert_eq!(g.col(0), a.col(2));
        let back = p.inverse().gather_cols(&g).unwrap();
        assert_eq!(back, a);
        // Dense form agrees: A * P == gather.
        assert_eq!(a.matmul(&p.to_matrix()).unwrap(), g);
    }

    #[test]
    fn permutation_scatter_is_left_multiplication() {
        let p = Permutation::from_map(vec![1, 2, 0]).unwrap();
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0], &[5.0, 6.0]]).unwrap();
        let s = p.scatter_rows(&a).unwrap();
        assert_eq!(p.to_matrix().matmul(&a).unwrap(), s);
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        assert!(Permutation::from_map(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_map(vec![0, 3]).is_err());
    }
}
