//! Dense exact linear algebra over prime fields `F_p`.
//!
//! Entries are stored as residues in `[0, p)` in row-major order. Every
//! algorithm here is plain Gaussian elimination; nothing is approximate.

use std::fmt;
use std::ops::Mul;

use crate::error::{argument, Error, Result};

/// The prime field `F_p` with `2 <= p <= 251`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=251).contains(&p) {
            return argument(format!("prime {p} outside the supported range 2..=251"));
        }
        if !is_prime(p) {
            return argument(format!("{p} is not prime"));
        }
        Ok(PrimeField { p: p as u8 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p as u32
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u8 {
        v.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.p as u32) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.p as u32 - b as u32) % self.p as u32) as u8
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p as u32) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        // a^(p-2) by square and multiply
        let p = self.p as u32;
        let mut base = a as u32 % p;
        let mut exp = p - 2;
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u8
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// A basis of a null space, in reduced form: column `j` of `basis` has a
/// `1` in row `free_columns[j]` and zeros in every other free row.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub basis: Matrix,
    pub free_columns: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from residues already in `[0, p)`.
    pub fn from_entries(
        field: PrimeField,
        rows: usize,
        cols: usize,
        data: Vec<u8>,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return argument(format!(
                "{} entries do not fill a {rows}x{cols} matrix",
                data.len()
            ));
        }
        if let Some(bad) = data.iter().find(|&&v| v as u32 >= field.p()) {
            return Err(Error::Argument(format!(
                "entry {bad} is not a residue mod {}",
                field.p()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return argument("ragged rows");
        }
        let data = rows.iter().flatten().map(|&v| field.reduce(v)).collect();
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(field.reduce(f(r, c)));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Column matrix holding `v`.
    pub fn column_vector(field: PrimeField, v: &[u8]) -> Self {
        Matrix {
            field,
            rows: v.len(),
            cols: 1,
            data: v.iter().map(|&x| x % field.p).collect(),
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
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
    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!((v as u32) < self.field.p());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return argument("matrices over different fields");
        }
        if self.cols != rhs.rows {
            return argument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            ));
        }
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; rhs.cols];
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (slot, &b) in acc.iter_mut().zip(rrow) {
                    *slot += a * b as u64;
                }
            }
            for (c, &a) in acc.iter().enumerate() {
                out.data[r * rhs.cols + c] = (a % p) as u8;
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field || self.rows != rhs.rows || self.cols != rhs.cols {
            return argument("shape or field mismatch in matrix addition");
        }
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field || self.rows != rhs.rows || self.cols != rhs.cols {
            return argument("shape or field mismatch in matrix subtraction");
        }
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Ok(Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: i64) -> Matrix {
        let f = self.field;
        let s = f.reduce(s);
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// Kronecker product; row `(i, k)` of the result is `i * rhs.rows + k`.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.field, rhs.field,
            "kronecker product over different fields"
        );
        let f = self.field;
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Matrix::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.data[(i * rhs.rows + k) * cols + j * rhs.cols + l] =
                            f.mul(a, rhs.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.data[i * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let all: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &all)
    }

    /// Horizontal concatenation. All blocks must have `rows` rows.
    pub fn hstack(field: PrimeField, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                out.data[r * cols + offset..r * cols + offset + b.cols].copy_from_slice(b.row(r));
            }
            offset += b.cols;
        }
        out
    }

    /// Vertical concatenation. All blocks must have `cols` columns.
    pub fn vstack(field: PrimeField, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&b.data);
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn block_diagonal(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                out.data[(r0 + r) * cols + c0..(r0 + r) * cols + c0 + b.cols]
                    .copy_from_slice(b.row(r));
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.p();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for c in 0..cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if found != pivot_row {
                for k in 0..cols {
                    self.data.swap(found * cols + k, pivot_row * cols + k);
                }
            }
            let inv = f.inv(self.data[pivot_row * cols + c]);
            if inv != 1 {
                for k in c..cols {
                    let v = &mut self.data[pivot_row * cols + k];
                    *v = f.mul(*v, inv);
                }
            }
            let (head, tail) = self.data.split_at_mut(pivot_row * cols);
            let (prow, rest) = tail.split_at_mut(cols);
            let eliminate = |row: &mut [u8]| {
                let factor = row[c] as u32;
                if factor == 0 {
                    return;
                }
                let neg = p - factor;
                for k in c..cols {
                    row[k] = ((row[k] as u32 + neg * prow[k] as u32) % p) as u8;
                }
            };
            head.chunks_mut(cols).for_each(eliminate);
            rest.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            pivot_row += 1;
        }
        pivots
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate on the narrower orientation
        if self.cols > self.rows {
            self.transpose().rref().1.len()
        } else {
            self.rref().1.len()
        }
    }

    pub fn kernel(&self) -> Kernel {
        let (r, pivots) = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            basis.set(fc, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(pc, j, f.neg(r.get(i, fc)));
            }
        }
        Kernel {
            basis,
            free_columns: free,
        }
    }

    /// Columns spanning the right null space.
    pub fn kernel_basis(&self) -> Matrix {
        self.kernel().basis
    }

    /// Solves `self * x = b`. `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return argument(format!(
                "right-hand side has {} rows, matrix has {}",
                b.rows, self.rows
            ));
        }
        if self.field != b.field {
            return argument("matrices over different fields");
        }
        let f = self.field;
        let aug = Matrix::hstack(f, self.rows, &[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(f, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(i, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let x = self.solve(&Matrix::identity(self.field, n)).ok()??;
        // a consistent square system with a non-invertible matrix still has
        // a particular solution; reject those
        if self.rank() == n {
            Some(x)
        } else {
            None
        }
    }

    /// Indices of a maximal independent set of columns, greedily from the left.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().1
    }

    /// Whether every column of `v` lies in the column span of `self`.
    pub fn spans(&self, v: &Matrix) -> bool {
        let r = self.rank();
        Matrix::hstack(self.field, self.rows, &[self, v]).rank() == r
    }

    pub fn pow(&self, mut exp: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs)
            .expect("matrix product shape mismatch")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over {} [",
            self.rows, self.cols, self.field
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn field_rejects_composites_and_range() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(257).is_err());
        assert!(PrimeField::new(251).is_ok());
    }

    #[test]
    fn inverses_mod_251() {
        let f = gf(251);
        for a in 1..251u32 {
            assert_eq!(f.mul(a as u8, f.inv(a as u8)), 1);
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(gf(2), 2).rank(), 2);
        assert_eq!(Matrix::zeros(gf(2), 3, 4).rank(), 0);
        let m = Matrix::from_rows(gf(2), &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(gf(3), 3).kernel_basis().cols(), 0);
        let z = Matrix::zeros(gf(5), 2, 3).kernel_basis();
        assert_eq!(z.cols(), 3);
        assert_eq!(z.rank(), 3);
        let k = Matrix::from_rows(gf(2), &[vec![1, 1]])
            .unwrap()
            .kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![1, 1]);
    }

    #[test]
    fn solve_examples() {
        let f = gf(3);
        let b = Matrix::from_rows(f, &[vec![2], vec![1]]).unwrap();
        assert_eq!(Matrix::identity(f, 2).solve(&b).unwrap().unwrap(), b);
        assert!(Matrix::zeros(f, 2, 2).solve(&b).unwrap().is_none());
        let m = Matrix::from_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(x.column(0), vec![1, 1]);
        let short = Matrix::zeros(f, 3, 1);
        assert!(matches!(m.solve(&short), Err(Error::Argument(_))));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = gf(7);
        let m = Matrix::from_rows(f, &[vec![2, 1, 0], vec![0, 3, 5], vec![1, 0, 4]]).unwrap();
        let inv = m.inverse().expect("invertible");
        assert_eq!(&m * &inv, Matrix::identity(f, 3));
        let singular = Matrix::from_rows(f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn kronecker_shape_and_entries() {
        let f = gf(5);
        let a = Matrix::from_rows(f, &[vec![1, 2], vec![3, 4]]).unwrap();
        let i = Matrix::identity(f, 2);
        let k = a.kronecker(&i);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(1, 3), 2);
        assert_eq!(k.get(2, 0), 3);
        assert_eq!(k.get(2, 1), 0);
    }

    #[test]
    fn stacking() {
        let f = gf(2);
        let a = Matrix::identity(f, 2);
        let b = Matrix::zeros(f, 2, 1);
        let h = Matrix::hstack(f, 2, &[&a, &b]);
        assert_eq!(h.cols(), 3);
        let v = Matrix::vstack(f, 2, &[&a, &a]);
        assert_eq!(v.rows(), 4);
        let d = Matrix::block_diagonal(f, &[&a, &a]);
        assert_eq!(d, Matrix::identity(f, 4));
    }
}
