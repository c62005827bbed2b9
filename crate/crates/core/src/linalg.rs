//! Exact linear algebra over ℚ(i): dense matrices and a sparse row reducer.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense matrix over ℚ(i), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        Self::from_rows(v).expect("rectangular literal")
    }

    /// Scalar multiple of the identity.
    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.cols);
        for r in 0..self.rows {
            red.insert(dense_to_sparse(self.row(r)));
        }
        red.rank()
    }

    /// Basis of `{x : Ax = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut red = RowReducer::new(self.cols);
        for r in 0..self.rows {
            red.insert(dense_to_sparse(self.row(r)));
        }
        red.nullspace().into_iter().map(|v| sparse_to_dense(&v, self.cols)).collect()
    }

    /// Some solution of `Ax = b`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut red = RowReducer::new(self.cols + 1);
        for r in 0..self.rows {
            let mut row = dense_to_sparse(self.row(r));
            if !b[r].is_zero() {
                row.insert(self.cols, b[r].clone());
            }
            red.insert(row);
        }
        Ok(red.particular_solution(self.cols).map(|v| sparse_to_dense(&v, self.cols)))
    }
}

pub type SparseVec = BTreeMap<usize, Scalar>;

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense(v: &SparseVec, n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `dst += c·src` on sparse vectors.
pub fn axpy(dst: &mut SparseVec, c: &Scalar, src: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (k, x) in src {
        let e = dst.entry(*k).or_default();
        *e += &(c * x);
        if e.is_zero() {
            dst.remove(k);
        }
    }
}

/// Incremental Gauss–Jordan elimination on sparse rows. Stored rows are
/// normalized (pivot 1) and fully reduced against each other.
#[derive(Clone, Debug, Default)]
pub struct RowReducer {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        RowReducer { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.rows.get(&col)
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let cols: Vec<usize> = v.keys().copied().filter(|k| self.rows.contains_key(k)).collect();
        // stored rows are fully reduced, so each pivot only needs one pass
        for k in cols {
            if let Some(c) = v.get(&k).cloned() {
                axpy(&mut v, &-c, &self.rows[&k]);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(&v);
        let Some((&p, lead)) = v.iter().next() else { return false };
        let inv = lead.inv();
        let v: SparseVec = v.iter().map(|(k, x)| (*k, x * &inv)).collect();
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &v);
            }
        }
        self.rows.insert(p, v);
        true
    }

    /// Basis of the solution space of the homogeneous system.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for free in 0..self.ncols {
            if self.rows.contains_key(&free) {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(free, Scalar::one());
            for (p, row) in &self.rows {
                if let Some(c) = row.get(&free) {
                    v.insert(*p, -c);
                }
            }
            out.push(v);
        }
        out
    }

    /// Treating column `rhs` as the augmented right-hand side, a solution
    /// with free variables set to zero.
    pub fn particular_solution(&self, rhs: usize) -> Option<SparseVec> {
        if self.rows.contains_key(&rhs) {
            return None;
        }
        let mut v = SparseVec::new();
        for (p, row) in &self.rows {
            if *p >= rhs {
                continue;
            }
            if let Some(c) = row.get(&rhs) {
                v.insert(*p, c.clone());
            }
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for x in &ns {
            for r in 0..3 {
                let mut acc = Scalar::zero();
                for c in 0..3 {
                    acc += &(m.get(r, c) * &x[c]);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_ints(&[&[1, 1], &[1, -1]]);
        let x = m.solve(&[Scalar::from_int(3), Scalar::from_int(1)]).unwrap().unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::from_int(1)]);
        let s = Matrix::from_ints(&[&[1, 1], &[2, 2]]);
        assert!(s.solve(&[Scalar::one(), Scalar::one()]).unwrap().is_none());
    }
}
