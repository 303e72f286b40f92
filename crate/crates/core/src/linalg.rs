//! Dense exact matrices over `Q(zeta_L)`.
//!
//! Operator blocks here are at most a few dozen rows wide, so a dense
//! row-major layout with zero-skipping products is simpler and faster than
//! a sparse format. Elimination prefers rational pivots because inverting
//! them is free.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::scalars::{Cyclotomic, CyclotomicField};

#[derive(Clone)]
pub struct Matrix {
    field: &'static CyclotomicField,
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(field: &'static CyclotomicField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Cyclotomic::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &'static CyclotomicField, n: usize) -> Self {
        Self::scalar(field, n, &Cyclotomic::one(field))
    }

    pub fn scalar(field: &'static CyclotomicField, n: usize, s: &Cyclotomic) -> Self {
        let mut out = Self::zeros(field, n, n);
        for i in 0..n {
            out.set(i, i, s.clone());
        }
        out
    }

    /// Builds a matrix from its columns; `rows` is needed when there are none.
    pub fn from_columns(field: &'static CyclotomicField, rows: usize, columns: &[Vec<Cyclotomic>]) -> Self {
        let mut out = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    out.set(i, j, x.clone());
                }
            }
        }
        out
    }

    pub fn from_rows(field: &'static CyclotomicField, cols: usize, rows: &[Vec<Cyclotomic>]) -> Self {
        let mut out = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row {i} has the wrong length");
            for (j, x) in row.iter().enumerate() {
                out.set(i, j, x.clone());
            }
        }
        out
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclotomic::is_zero)
    }

    /// First nonzero entry in row-major order, for failure diagnostics.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|p| (p / self.cols, p % self.cols))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let other_nz: Vec<Vec<usize>> = (0..other.rows)
            .map(|l| (0..other.cols).filter(|j| !other.get(l, *j).is_zero()).collect())
            .collect();
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for &j in &other_nz[l] {
                    let prod = a * other.get(l, j);
                    out.data[i * out.cols + j] += &prod;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let mut out = vec![Cyclotomic::zero(self.field); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *slot += &(a * x);
                }
            }
        }
        out
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Cyclotomic) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| if a.is_zero() { a.clone() } else { a * s }).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Cyclotomic::from_int(self.field, -1))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    out.set(j, i, x.conj());
                }
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }

    /// Copies `block` into `self` with its top-left corner at `(r, c)`.
    pub fn set_block(&mut self, r: usize, c: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r + i, c + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r: usize, c: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r + i, c + j).clone());
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, 0, other);
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let candidates: Vec<usize> = (row..a.rows).filter(|r| !a.get(*r, col).is_zero()).collect();
            let Some(&pivot) = candidates
                .iter()
                .find(|r| a.get(**r, col).is_rational())
                .or_else(|| candidates.first())
            else {
                continue;
            };
            a.swap_rows(row, pivot);
            let inv = a.get(row, col).inv().expect("pivot is nonzero");
            for j in col..a.cols {
                let v = a.get(row, j);
                if !v.is_zero() {
                    let scaled = v * &inv;
                    a.set(row, j, scaled);
                }
            }
            let pivot_row: Vec<(usize, Cyclotomic)> = (col..a.cols)
                .filter(|j| !a.get(row, *j).is_zero())
                .map(|j| (j, a.get(row, j).clone()))
                .collect();
            for r in 0..a.rows {
                if r == row {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, p) in &pivot_row {
                    let v = a.get(r, *j) - &(&f * p);
                    a.set(r, *j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Cyclotomic>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Cyclotomic::zero(self.field); self.cols];
            v[free] = Cyclotomic::one(self.field);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
        let aug = self.hstack(&Matrix::from_columns(self.field, self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Cyclotomic::zero(self.field); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero(self.field);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Characteristic polynomial `det(t - A)`, constant term first, via
    /// Faddeev-LeVerrier.
    pub fn charpoly(&self) -> Vec<Cyclotomic> {
        assert_eq!(self.rows, self.cols, "charpoly needs a square matrix");
        let n = self.rows;
        let field = self.field;
        let mut coeffs = vec![Cyclotomic::zero(field); n + 1];
        coeffs[n] = Cyclotomic::one(field);
        let mut m = Matrix::zeros(field, n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m);
            let c = &coeffs[n - k + 1];
            for i in 0..n {
                let v = next.get(i, i) + c;
                next.set(i, i, v);
            }
            m = next;
            let am = self.mul(&m);
            let ck = -(am.trace().checked_div(&Cyclotomic::from_int(field, k as i64)).expect("k > 0"));
            coeffs[n - k] = ck;
        }
        coeffs
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).to_complex())
    }
}

/// Coordinates of the `i`-th standard basis vector.
pub fn unit_vector(field: &'static CyclotomicField, n: usize, i: usize) -> Vec<Cyclotomic> {
    let mut v = vec![Cyclotomic::zero(field); n];
    v[i] = Cyclotomic::one(field);
    v
}

pub fn vec_is_zero(v: &[Cyclotomic]) -> bool {
    v.iter().all(Cyclotomic::is_zero)
}

pub fn vec_add(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Cyclotomic], s: &Cyclotomic) -> Vec<Cyclotomic> {
    a.iter().map(|x| x * s).collect()
}

/// Rank of the span of a list of vectors of length `n`.
pub fn span_rank(field: &'static CyclotomicField, n: usize, vectors: &[Vec<Cyclotomic>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_columns(field, n, vectors).rank()
}

/// Exact equality of two spans.
pub fn same_span(field: &'static CyclotomicField, n: usize, a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>]) -> bool {
    let ra = span_rank(field, n, a);
    let rb = span_rank(field, n, b);
    let both: Vec<Vec<Cyclotomic>> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(field, n, &both) == ra
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape() && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> &'static CyclotomicField {
        CyclotomicField::get(12).unwrap()
    }

    fn int(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(f(), v)
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(f(), cols, &rows.iter().map(|r| r.iter().map(|v| int(*v)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        assert!(vec_is_zero(&a.apply(&ker[0])));
    }

    #[test]
    fn charpoly_of_companion() {
        // t^2 - 5t + 6
        let a = m(&[&[0, -6], &[1, 5]]);
        assert_eq!(a.charpoly(), vec![int(6), int(-5), int(1)]);
    }

    #[test]
    fn charpoly_with_roots_of_unity() {
        let w = Cyclotomic::root_of_unity(f(), 4);
        let a = Matrix::from_rows(
            f(),
            2,
            &[vec![w.clone(), Cyclotomic::zero(f())], vec![Cyclotomic::zero(f()), w.conj()]],
        );
        // (t - w)(t - w^2) = t^2 + t + 1
        assert_eq!(a.charpoly(), vec![int(1), int(1), int(1)]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[int(3), int(1)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        let singular = m(&[&[1, 1], &[1, 1]]);
        assert!(singular.solve(&[int(1), int(0)]).is_none());
    }

    #[test]
    fn spans() {
        let a = vec![vec![int(1), int(0)], vec![int(1), int(1)]];
        let b = vec![vec![int(0), int(2)], vec![int(3), int(0)]];
        assert!(same_span(f(), 2, &a, &b));
        assert!(!same_span(f(), 2, &a[..1], &b[..1]));
    }
}
