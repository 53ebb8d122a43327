//! Dense row-major matrices over GF(p^n).
//!
//! Matrices act on column vectors from the left, so composition of maps is
//! the matrix product in application order.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

pub type Vector = Vec<FieldElem>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over {:?}",
            self.rows, self.cols, self.field
        )?;
        for r in 0..self.rows {
            let row: Vec<u16> = self.row(r).iter().map(|e| e.0).collect();
            writeln!(f, "  {:?}", row)?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![FieldElem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElem::ONE);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vector>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElem,
    ) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[FieldElem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: FieldElem) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * out.cols;
                for (j, &b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j] = f.add(out.data[base + j], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[FieldElem]) -> Vector {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        let mut out = vec![FieldElem::ZERO; self.rows];
        for i in 0..self.rows {
            let mut acc = FieldElem::ZERO;
            for (j, &x) in v.iter().enumerate() {
                if !x.is_zero() {
                    acc = f.add(acc, f.mul(self.get(i, j), x));
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Kronecker product; the factor index of `other` varies fastest.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(field: &Field, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(&self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j)
            } else {
                other.get(i - self.rows, j)
            }
        })
    }

    /// Reduced row echelon form with the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : Av = 0}`, one vector per non-pivot column, with the
    /// free coordinate set to 1. Deterministic.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![FieldElem::ZERO; self.cols];
            v[free] = FieldElem::ONE;
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// A solution of `Ax = b` with free variables set to zero, or `None`
    /// if the system is inconsistent.
    pub fn solve(&self, b: &[FieldElem]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: matrix has {} rows, rhs has {}",
                self.rows,
                b.len()
            )));
        }
        let rhs = Matrix::from_fn(&self.field, self.rows, 1, |i, _| b[i]);
        let aug = self.hstack(&rhs);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the augmented column
        }
        let mut x = vec![FieldElem::ZERO; self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(&self.field, n, n, |i, j| r.get(i, n + j)))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Canonical form of the row space: reduced echelon rows with zero rows
    /// dropped. Two matrices have equal row spaces iff these agree.
    pub fn row_space_canonical(&self) -> Matrix {
        let (r, pivots) = self.rref();
        Matrix::from_fn(&self.field, pivots.len(), self.cols, |i, j| r.get(i, j))
    }

    /// Stable byte encoding used for memo keys and content hashes.
    pub fn content_bytes(&self, out: &mut Vec<u8>) {
        out.extend((self.rows as u32).to_le_bytes());
        out.extend((self.cols as u32).to_le_bytes());
        for e in &self.data {
            out.extend(e.0.to_le_bytes());
        }
    }
}

fn rref_in_place(m: &mut Matrix) -> Vec<usize> {
    let field = m.field.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut lead = 0usize;
    for col in 0..cols {
        // find a pivot at or below `lead`
        let Some(pr) = (lead..rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        m.data.swap_with_slice_rows(pr, lead, cols);
        // normalize the pivot row
        let inv = field.inv(m.get(lead, col)).expect("nonzero pivot");
        if inv != FieldElem::ONE {
            let base = lead * cols;
            for j in col..cols {
                m.data[base + j] = field.mul(m.data[base + j], inv);
            }
        }
        // eliminate everywhere else
        for r in 0..rows {
            if r == lead {
                continue;
            }
            let factor = m.get(r, col);
            if factor.is_zero() {
                continue;
            }
            let (pivot_row, target_row) = row_pair(&mut m.data, lead, r, cols);
            for j in col..cols {
                let s = field.mul(factor, pivot_row[j]);
                target_row[j] = field.sub(target_row[j], s);
            }
        }
        pivots.push(col);
        lead += 1;
        if lead == rows {
            break;
        }
    }
    pivots
}

/// Disjoint mutable views of two rows.
fn row_pair(
    data: &mut [FieldElem],
    a: usize,
    b: usize,
    cols: usize,
) -> (&[FieldElem], &mut [FieldElem]) {
    debug_assert_ne!(a, b);
    if a < b {
        let (lo, hi) = data.split_at_mut(b * cols);
        (&lo[a * cols..a * cols + cols], &mut hi[..cols])
    } else {
        let (lo, hi) = data.split_at_mut(a * cols);
        let target = &mut lo[b * cols..b * cols + cols];
        // SAFETY-free workaround: recompute via split ordering
        (&hi[..cols], target)
    }
}

trait SwapRows {
    fn swap_with_slice_rows(&mut self, a: usize, b: usize, cols: usize);
}

impl SwapRows for Vec<FieldElem> {
    fn swap_with_slice_rows(&mut self, a: usize, b: usize, cols: usize) {
        if a == b {
            return;
        }
        for j in 0..cols {
            self.swap(a * cols + j, b * cols + j);
        }
    }
}

/// Incrementally maintained echelonized span of row vectors, with optional
/// coordinate tracking against the inserted vectors.
pub struct Echelon {
    field: Field,
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, cols: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    /// Reduce `v` against the current basis. Returns the residue.
    pub fn reduce(&self, v: &[FieldElem]) -> Vector {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let s = f.mul(c, row[j]);
                v[j] = f.sub(v[j], s);
            }
        }
        v
    }

    /// Insert `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = f.inv(r[p]).unwrap();
        for e in r.iter_mut() {
            *e = f.mul(*e, inv);
        }
        // back-substitute into existing rows to keep reduced form
        for (row, &_rp) in self.rows.iter_mut().zip(&self.pivots) {
            let c = row[p];
            if !c.is_zero() {
                for j in 0..self.cols {
                    let s = f.mul(c, r[j]);
                    row[j] = f.sub(row[j], s);
                }
            }
        }
        // keep rows ordered by pivot
        let pos = self
            .pivots
            .iter()
            .position(|&q| q > p)
            .unwrap_or(self.pivots.len());
        self.rows.insert(pos, r);
        self.pivots.insert(pos, p);
        true
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.reduce(v).iter().all(|e| e.is_zero())
    }

    pub fn into_matrix(self) -> Matrix {
        let rows = self.rows.len();
        let cols = self.cols;
        let mut m = Matrix::zeros(&self.field, rows, cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }
}

/// Precomputed solver for repeated systems `A x = b` with the same `A`.
pub struct LinearSolver {
    r: Matrix,
    l: Matrix,
    pivots: Vec<usize>,
    rows: usize,
    cols: usize,
}

impl LinearSolver {
    pub fn new(a: &Matrix) -> LinearSolver {
        let aug = a.hstack(&Matrix::identity(a.field(), a.rows()));
        let mut m = aug;
        // restrict pivots to the A-part: run rref but it may pivot into the
        // identity part; instead rref the A columns only by rank profile.
        // Simpler: rref of [A | I] never pivots in I-columns before A is
        // exhausted column-by-column, because columns are scanned left to
        // right. Pivots beyond a.cols() belong to I and are ignored.
        let pivots_all = rref_in_place(&mut m);
        let pivots: Vec<usize> = pivots_all
            .iter()
            .copied()
            .filter(|&p| p < a.cols())
            .collect();
        let rank = pivots.len();
        let r = Matrix::from_fn(a.field(), rank, a.cols(), |i, j| m.get(i, j));
        let l = Matrix::from_fn(a.field(), a.rows(), a.rows(), |i, j| m.get(i, a.cols() + j));
        LinearSolver {
            r,
            l,
            pivots,
            rows: a.rows(),
            cols: a.cols(),
        }
    }

    /// Solve `A x = b`; free variables zero; `None` if inconsistent.
    pub fn solve(&self, b: &[FieldElem]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let c = self.l.apply(b);
        // consistency: rows beyond the rank must vanish
        if c[self.pivots.len()..].iter().any(|e| !e.is_zero()) {
            return None;
        }
        let mut x = vec![FieldElem::ZERO; self.cols];
        for (row, &p) in self.pivots.iter().enumerate() {
            x[p] = c[row];
        }
        Some(x)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Echelonized basis matrix of the row space of `A` (for containment checks).
    pub fn echelon(&self) -> &Matrix {
        &self.r
    }
}
