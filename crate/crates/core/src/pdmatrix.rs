//! Linear algebra over the principal ideal domain ℚ(i)[∂].
//!
//! Column conventions throughout: a matrix with `n` rows and `k` columns is
//! read as `k` vectors in the free module of rank `n`, and "span" means the
//! ℚ(i)[∂]-span of the columns.

use std::fmt;

use crate::dpoly::DPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdMatrix {
    rows: usize,
    cols: usize,
    data: Vec<DPoly>,
}

/// Size `(r, d)` of a finitely generated ℚ(i)[∂]-module: free rank and the
/// dimension of the torsion part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Size {
    pub r: usize,
    pub d: usize,
}

impl fmt::Display for Size {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.d)
    }
}

/// Column Hermite decomposition `m · transform = [form | 0]`.
#[derive(Clone, Debug)]
pub struct Hermite {
    /// Echelon part: column `k` has its pivot at row `pivots[k]`, zeros above.
    pub form: PdMatrix,
    pub pivots: Vec<usize>,
    /// Unimodular column transform (square, `m.cols()` wide).
    pub transform: PdMatrix,
}

impl PdMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PdMatrix { rows, cols, data: vec![DPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, DPoly::one());
        }
        m
    }

    /// Builds from column vectors of equal length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<DPoly>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<DPoly>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row length");
            for (c, x) in row.iter().enumerate() {
                m.set(r, c, x.clone());
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

    pub fn get(&self, r: usize, c: usize) -> &DPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: DPoly) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<DPoly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<DPoly>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(DPoly::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &PdMatrix) -> Result<PdMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = DPoly::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * other.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Entrywise image under `f`.
    pub fn map(&self, f: impl Fn(&DPoly) -> DPoly) -> PdMatrix {
        PdMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, other: &PdMatrix) -> Result<PdMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(PdMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Scalar) -> PdMatrix {
        self.map(|p| p.scale(c))
    }

    /// Largest entry degree (0 for the zero matrix).
    pub fn max_degree(&self) -> usize {
        self.data.iter().filter_map(DPoly::degree).max().unwrap_or(0)
    }

    pub fn mul_vec(&self, v: &[DPoly]) -> Result<Vec<DPoly>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = DPoly::zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = &acc + &(self.get(r, k) * x);
                    }
                }
                acc
            })
            .collect())
    }

    /// Appends columns of another matrix with the same row count.
    pub fn hcat(&self, other: &PdMatrix) -> Result<PdMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        Ok(Self::from_columns(self.rows, &cols))
    }

    fn col_axpy(&mut self, dst: usize, q: &DPoly, src: usize) {
        // column dst -= q * column src
        for r in 0..self.rows {
            let s = self.get(r, src);
            if s.is_zero() {
                continue;
            }
            let v = self.get(r, dst) - &(q * s);
            self.set(r, dst, v);
        }
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn col_scale(&mut self, c: usize, s: &Scalar) {
        for r in 0..self.rows {
            let v = self.get(r, c).scale(s);
            self.set(r, c, v);
        }
    }

    /// Column Hermite form with transform.
    ///
    /// Pivots are monic; within a pivot row, entries of earlier columns are
    /// reduced modulo the pivot.
    pub fn hermite(&self) -> Hermite {
        let mut h = self.clone();
        let mut u = PdMatrix::identity(self.cols);
        let mut pivots = Vec::new();
        let mut pc = 0;
        for r in 0..self.rows {
            if pc == self.cols {
                break;
            }
            loop {
                let best = (pc..self.cols)
                    .filter_map(|c| h.get(r, c).degree().map(|d| (d, c)))
                    .min();
                let Some((_, c)) = best else { break };
                h.col_swap(c, pc);
                u.col_swap(c, pc);
                let mut again = false;
                for c in pc + 1..self.cols {
                    if h.get(r, c).is_zero() {
                        continue;
                    }
                    let (q, rem) = h.get(r, c).div_rem(h.get(r, pc)).expect("pivot nonzero");
                    h.col_axpy(c, &q, pc);
                    u.col_axpy(c, &q, pc);
                    if !rem.is_zero() {
                        again = true;
                    }
                }
                if !again {
                    break;
                }
            }
            if h.get(r, pc).is_zero() {
                continue;
            }
            let lead_inv = h.get(r, pc).leading().expect("nonzero").inv();
            h.col_scale(pc, &lead_inv);
            u.col_scale(pc, &lead_inv);
            for c in 0..pc {
                if h.get(r, c).is_zero() {
                    continue;
                }
                let (q, _) = h.get(r, c).div_rem(h.get(r, pc)).expect("pivot nonzero");
                if !q.is_zero() {
                    h.col_axpy(c, &q, pc);
                    u.col_axpy(c, &q, pc);
                }
            }
            pivots.push(r);
            pc += 1;
        }
        let form_cols: Vec<Vec<DPoly>> = (0..pc).map(|c| h.column(c)).collect();
        Hermite { form: PdMatrix::from_columns(self.rows, &form_cols), pivots, transform: u }
    }

    /// Echelon basis of the column span (zero columns dropped).
    pub fn hermite_form(&self) -> PdMatrix {
        self.hermite().form
    }

    /// Rank over the fraction field.
    pub fn rank(&self) -> usize {
        self.hermite().pivots.len()
    }

    /// Free basis (as columns) of `{x : self · x = 0}`.
    pub fn kernel(&self) -> PdMatrix {
        let h = self.hermite();
        let k = h.pivots.len();
        let cols: Vec<Vec<DPoly>> = (k..self.cols).map(|c| h.transform.column(c)).collect();
        PdMatrix::from_columns(self.cols, &cols)
    }

    /// Coefficients `c` with `self · c = v`, if `v` lies in the column span.
    pub fn solve(&self, v: &[DPoly]) -> Result<Option<Vec<DPoly>>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: v.len() });
        }
        let h = self.hermite();
        let Some(c) = h.solve_echelon(v) else { return Ok(None) };
        let mut full = c;
        full.resize(self.cols, DPoly::zero());
        Ok(Some(h.transform.mul_vec(&full)?))
    }

    /// Invariant factors (monic, each dividing the next), zeros omitted.
    pub fn smith_diagonal(&self) -> Vec<DPoly> {
        let mut m = self.clone();
        let mut diag = Vec::new();
        let mut t = 0;
        while t < m.rows.min(m.cols) {
            let best = (t..m.rows)
                .flat_map(|r| (t..m.cols).map(move |c| (r, c)))
                .filter_map(|(r, c)| m.get(r, c).degree().map(|d| (d, r, c)))
                .min();
            let Some((_, r, c)) = best else { break };
            m.row_swap(r, t);
            m.col_swap(c, t);
            loop {
                let mut dirty = false;
                for c in t + 1..m.cols {
                    if m.get(t, c).is_zero() {
                        continue;
                    }
                    let (q, rem) = m.get(t, c).div_rem(m.get(t, t)).expect("pivot");
                    m.col_axpy(c, &q, t);
                    if !rem.is_zero() {
                        dirty = true;
                    }
                }
                for r in t + 1..m.rows {
                    if m.get(r, t).is_zero() {
                        continue;
                    }
                    let (q, rem) = m.get(r, t).div_rem(m.get(t, t)).expect("pivot");
                    m.row_axpy(r, &q, t);
                    if !rem.is_zero() {
                        dirty = true;
                    }
                }
                if !dirty {
                    break;
                }
                // move the smallest remaining entry of row/column t to the pivot
                let mut best = (m.get(t, t).degree().unwrap_or(usize::MAX), t, t);
                for c in t + 1..m.cols {
                    if let Some(d) = m.get(t, c).degree() {
                        best = best.min((d, t, c));
                    }
                }
                for r in t + 1..m.rows {
                    if let Some(d) = m.get(r, t).degree() {
                        best = best.min((d, r, t));
                    }
                }
                m.row_swap(best.1, t);
                m.col_swap(best.2, t);
            }
            diag.push(m.get(t, t).monic());
            t += 1;
        }
        // enforce the divisibility chain
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                let g = diag[i].gcd(&diag[j]);
                if g != diag[i] {
                    let l = (&diag[i] * &diag[j]).div_exact(&g).expect("gcd divides").monic();
                    diag[i] = g;
                    diag[j] = l;
                }
            }
        }
        diag
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn row_axpy(&mut self, dst: usize, q: &DPoly, src: usize) {
        for c in 0..self.cols {
            let s = self.get(src, c);
            if s.is_zero() {
                continue;
            }
            let v = self.get(dst, c) - &(q * s);
            self.set(dst, c, v);
        }
    }
}

impl Hermite {
    /// Coefficients on the echelon columns, or `None` if `v` is outside the span.
    pub fn solve_echelon(&self, v: &[DPoly]) -> Option<Vec<DPoly>> {
        let mut v = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.pivots.len());
        let mut next_row = 0;
        for (k, &pr) in self.pivots.iter().enumerate() {
            if v[next_row..pr].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (q, rem) = v[pr].div_rem(self.form.get(pr, k)).expect("pivot nonzero");
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (r, x) in v.iter_mut().enumerate().skip(pr) {
                    let h = self.form.get(r, k);
                    if !h.is_zero() {
                        *x = &*x - &(&q * h);
                    }
                }
            }
            coeffs.push(q);
            next_row = pr + 1;
        }
        if v[next_row..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(coeffs)
    }

    pub fn contains(&self, v: &[DPoly]) -> bool {
        self.solve_echelon(v).is_some()
    }

    /// Coefficients on the original columns, or `None` if `v` is outside the span.
    pub fn solve_columns(&self, v: &[DPoly]) -> Option<Vec<DPoly>> {
        let mut c = self.solve_echelon(v)?;
        c.resize(self.transform.cols(), DPoly::zero());
        Some(self.transform.mul_vec(&c).expect("transform is square"))
    }
}

/// Size of the module presented by `n = presentation.rows()` free generators
/// modulo the column relations.
pub fn size_of(presentation: &PdMatrix) -> Size {
    let diag = presentation.smith_diagonal();
    let r = presentation.rows() - diag.len();
    let d = diag.iter().map(|e| e.degree().unwrap_or(0)).sum();
    Size { r, d }
}

/// Whether `v` lies in the column span of `basis`.
pub fn membership(v: &[DPoly], basis: &PdMatrix) -> Result<bool> {
    if v.len() != basis.rows() {
        return Err(Error::DimensionMismatch { expected: basis.rows(), found: v.len() });
    }
    Ok(basis.hermite().contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DPoly {
        DPoly::from_ints(c)
    }

    #[test]
    fn hermite_gcd_column() {
        let m = PdMatrix::from_rows(&[vec![p(&[0, 1]), p(&[0, 0, 1])]]);
        let h = m.hermite_form();
        assert_eq!(h, PdMatrix::from_rows(&[vec![p(&[0, 1])]]));
    }

    #[test]
    fn hermite_identity_and_zero() {
        let id = PdMatrix::identity(2);
        assert_eq!(id.hermite_form(), id);
        let z = PdMatrix::zeros(2, 3);
        assert_eq!(z.hermite_form().cols(), 0);
    }

    #[test]
    fn sizes() {
        let m = PdMatrix::from_rows(&[vec![p(&[1]), p(&[])], vec![p(&[]), p(&[0, 0, 1])]]);
        assert_eq!(size_of(&m), Size { r: 0, d: 2 });
        assert_eq!(size_of(&PdMatrix::zeros(2, 0)), Size { r: 2, d: 0 });
        assert_eq!(size_of(&PdMatrix::from_rows(&[vec![p(&[3, 1])]])), Size { r: 0, d: 1 });
    }

    #[test]
    fn membership_cases() {
        let b = PdMatrix::from_rows(&[vec![p(&[0, 1])]]);
        assert!(membership(&[p(&[0, 0, 1])], &b).unwrap());
        assert!(!membership(&[p(&[1])], &b).unwrap());
        let b2 = PdMatrix::from_columns(2, &[vec![p(&[1]), p(&[1])]]);
        assert!(membership(&[p(&[1, 1]), p(&[1, 1])], &b2).unwrap());
        assert!(membership(&[p(&[1])], &PdMatrix::zeros(2, 0)).is_err());
    }

    #[test]
    fn kernel_cases() {
        let m = PdMatrix::from_rows(&[vec![p(&[0, 1]), p(&[0, -1])]]);
        let k = m.kernel();
        assert_eq!(k.cols(), 1);
        let col = k.column(0);
        // unique up to a unit: (1, 1)
        assert_eq!(col[0], col[1]);
        assert!(col[0].is_constant() && !col[0].is_zero());

        let inv = PdMatrix::from_rows(&[vec![p(&[1]), p(&[0, 1])], vec![p(&[]), p(&[1])]]);
        assert_eq!(inv.kernel().cols(), 0);
        assert_eq!(PdMatrix::zeros(1, 2).kernel().cols(), 2);
    }

    #[test]
    fn solve_reconstructs() {
        let m = PdMatrix::from_columns(
            2,
            &[vec![p(&[1, 1]), p(&[0, 1])], vec![p(&[0, 0, 1]), p(&[2])]],
        );
        let v = m.mul_vec(&[p(&[1, 2]), p(&[-1, 0, 1])]).unwrap();
        let c = m.solve(&v).unwrap().expect("in span");
        assert_eq!(m.mul_vec(&c).unwrap(), v);
    }

    #[test]
    fn smith_divisibility() {
        let m = PdMatrix::from_rows(&[vec![p(&[0, 1]), p(&[])], vec![p(&[]), p(&[1, 1])]]);
        let d = m.smith_diagonal();
        assert_eq!(d, vec![p(&[1]), p(&[0, 1, 1])]);
    }
}
