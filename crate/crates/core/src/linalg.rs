//! Exact linear algebra over a field, plus Z2-graded spaces and homogeneous
//! maps. Everything downstream (reflection functors, path-algebra quotients)
//! reduces to row reduction here.
//!
//! Conventions: matrices are row-major; a graded space `K^{e|o}` carries the
//! implicit standard basis with the `e` even coordinates first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::parity::Parity;
use crate::scalar::Field;

/// Dense matrix over the scalar field `K`.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Test helper: build from integer rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(nrows, ncols, |r, c| K::from_i64(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, rhs: &Matrix<K>) -> Result<Matrix<K>, Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "matrix product {}x{} * {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = K::zero();
            for k in 0..self.cols {
                acc = acc + self[(r, k)].clone() * rhs[(k, c)].clone();
            }
            acc
        }))
    }

    pub fn add(&self, rhs: &Matrix<K>) -> Result<Matrix<K>, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix sum".into(),
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + rhs[(r, c)].clone()
        }))
    }

    pub fn neg(&self) -> Matrix<K> {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self[(r, c)].clone())
    }

    /// Horizontal concatenation of blocks sharing a row count.
    pub fn hstack(blocks: &[&Matrix<K>], rows: usize) -> Matrix<K> {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zero(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                for c in 0..b.cols {
                    m[(r, offset + c)] = b[(r, c)].clone();
                }
            }
            offset += b.cols;
        }
        m
    }

    /// Vertical concatenation of blocks sharing a column count.
    pub fn vstack(blocks: &[&Matrix<K>], cols: usize) -> Matrix<K> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Matrix::zero(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack col mismatch");
            for r in 0..b.rows {
                for c in 0..cols {
                    m[(offset + r, c)] = b[(r, c)].clone();
                }
            }
            offset += b.rows;
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix<K> {
        Matrix::from_fn(rows.len(), self.cols, |r, c| self[(rows[r], c)].clone())
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix<K> {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix<K>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv();
            for c in col..m.cols {
                m[(row, c)] = m[(row, c)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for c in col..m.cols {
                        m[(r, c)] = m[(r, c)].clone() - factor.clone() * m[(row, c)].clone();
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, one column per basis vector, ordered by
    /// ascending free column index. Also returns those free column indices.
    pub fn kernel_basis_with_free(&self) -> (Matrix<K>, Vec<usize>) {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zero(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            basis[(f, j)] = K::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                basis[(pcol, j)] = -r[(prow, f)].clone();
            }
        }
        (basis, free)
    }

    pub fn kernel_basis(&self) -> Matrix<K> {
        self.kernel_basis_with_free().0
    }

    /// Deterministic projection onto a complement of the column space:
    /// column-reduce, then read off the non-pivot coordinates. Also returns
    /// which target coordinates index the quotient.
    pub fn cokernel_projection_with_coords(&self) -> (Matrix<K>, Vec<usize>) {
        // RREF of the transpose: rows are an echelon basis of the column
        // space, pivot columns are the pivot coordinates of the target.
        let (r, pivots) = self.transpose().rref();
        let nonpivot: Vec<usize> = (0..self.rows).filter(|c| !pivots.contains(c)).collect();
        let mut p = Matrix::zero(nonpivot.len(), self.rows);
        for (out, &q) in nonpivot.iter().enumerate() {
            p[(out, q)] = K::one();
            for (l, &rl) in pivots.iter().enumerate() {
                p[(out, rl)] = -r[(l, q)].clone();
            }
        }
        (p, nonpivot)
    }

    pub fn cokernel_projection(&self) -> Matrix<K> {
        self.cokernel_projection_with_coords().0
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn entries_as_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| format!("{}", self[(r, c)])).collect())
            .collect()
    }
}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (r, c): (usize, usize)) -> &K {
        &self.data[r * self.cols + c]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut K {
        &mut self.data[r * self.cols + c]
    }
}

impl<K: Field> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Dimension of a Z2-graded space `K^{even|odd}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub fn new(even: usize, odd: usize) -> Self {
        SuperDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn is_zero(self) -> bool {
        self.total() == 0
    }

    /// Parity of coordinate `c` under the even-first convention.
    pub fn coord_parity(self, c: usize) -> Parity {
        if c < self.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Swap even and odd parts.
pub fn parity_change(d: SuperDim) -> SuperDim {
    SuperDim::new(d.odd, d.even)
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

/// Homogeneous linear map between graded spaces, stored in the even-first
/// basis of source and target. A degree-0 map has zero off-diagonal blocks,
/// a degree-1 map has zero diagonal blocks.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedMap<K> {
    pub source: SuperDim,
    pub target: SuperDim,
    pub degree: Parity,
    mat: Matrix<K>,
}

impl<K: Field> GradedMap<K> {
    pub fn new(
        source: SuperDim,
        target: SuperDim,
        degree: Parity,
        mat: Matrix<K>,
    ) -> Result<Self, Error> {
        if mat.rows() != target.total() || mat.cols() != source.total() {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "graded map matrix {}x{} for {} -> {}",
                    mat.rows(),
                    mat.cols(),
                    source,
                    target
                ),
            });
        }
        for r in 0..mat.rows() {
            for c in 0..mat.cols() {
                let block_degree = target.coord_parity(r) + source.coord_parity(c);
                if block_degree != degree && !mat[(r, c)].is_zero() {
                    return Err(Error::NotHomogeneous {
                        degree: degree.as_u8(),
                        row: r,
                        col: c,
                    });
                }
            }
        }
        Ok(GradedMap {
            source,
            target,
            degree,
            mat,
        })
    }

    pub fn zero(source: SuperDim, target: SuperDim, degree: Parity) -> Self {
        GradedMap {
            source,
            target,
            degree,
            mat: Matrix::zero(target.total(), source.total()),
        }
    }

    pub fn identity(dim: SuperDim) -> Self {
        GradedMap {
            source: dim,
            target: dim,
            degree: Parity::Even,
            mat: Matrix::identity(dim.total()),
        }
    }

    pub fn matrix(&self) -> &Matrix<K> {
        &self.mat
    }

    /// Composition `self ∘ rhs`; degrees add in Z2.
    pub fn compose(&self, rhs: &GradedMap<K>) -> Result<GradedMap<K>, Error> {
        if self.source != rhs.target {
            return Err(Error::DimensionMismatch {
                context: format!(
                    "compose: inner dims {} vs {}",
                    self.source, rhs.target
                ),
            });
        }
        GradedMap::new(
            rhs.source,
            self.target,
            self.degree + rhs.degree,
            self.mat.mul(&rhs.mat)?,
        )
    }

    /// The permutation matrix moving the odd block in front of the even one.
    fn swap_perm(d: SuperDim) -> Vec<usize> {
        // new coordinate i comes from old coordinate perm[i]
        let mut perm = Vec::with_capacity(d.total());
        for c in d.even..d.total() {
            perm.push(c);
        }
        for c in 0..d.even {
            perm.push(c);
        }
        perm
    }

    /// View the same linear map with the source grading flipped.
    pub fn flip_source(&self) -> GradedMap<K> {
        let perm = Self::swap_perm(self.source);
        let mat = Matrix::from_fn(self.mat.rows(), self.mat.cols(), |r, c| {
            self.mat[(r, perm[c])].clone()
        });
        GradedMap {
            source: parity_change(self.source),
            target: self.target,
            degree: self.degree.flip(),
            mat,
        }
    }

    /// View the same linear map with the target grading flipped.
    pub fn flip_target(&self) -> GradedMap<K> {
        let perm = Self::swap_perm(self.target);
        let mat = Matrix::from_fn(self.mat.rows(), self.mat.cols(), |r, c| {
            self.mat[(perm[r], c)].clone()
        });
        GradedMap {
            source: self.source,
            target: parity_change(self.target),
            degree: self.degree.flip(),
            mat,
        }
    }
}

/// The parity change functor on maps: conjugate by the block swap on both
/// sides (the A/D and B/C exchange). The degree is preserved.
pub fn parity_change_map<K: Field>(f: &GradedMap<K>) -> GradedMap<K> {
    f.flip_source().flip_target()
}
