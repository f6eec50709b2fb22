use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::Int;

/// Dense integer matrix, row-major.
///
/// Vectors are rows throughout the crate; a matrix acts on the right
/// (`v ↦ v·A`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Int::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::ONE;
        }
        m
    }

    pub fn diagonal(entries: &[Int]) -> Self {
        let mut m = IntMat::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds from `i64` rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let int_rows: Vec<Vec<Int>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Int::from(x)).collect())
            .collect();
        let cols = int_rows.first().map_or(0, |r| r.len());
        IntMat::from_int_rows(int_rows, cols)
    }

    /// Builds from rows of `Int`; `cols` fixes the width when `rows` is empty.
    pub fn from_int_rows(rows: Vec<Vec<Int>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        IntMat {
            rows: n,
            cols,
            data,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [Int] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn push_row(&mut self, row: &[Int]) {
        if self.rows == 0 && self.cols == 0 {
            self.cols = row.len();
        }
        assert_eq!(row.len(), self.cols, "row width mismatch");
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Int::is_zero)
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = out.row_mut(i);
                for (d, b) in dst.iter_mut().zip(orow) {
                    if !b.is_zero() {
                        d.add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(v: &[Int], m: &IntMat) -> Vec<Int> {
        assert_eq!(v.len(), m.rows, "vector/matrix shape mismatch");
        let mut out = vec![Int::ZERO; m.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (d, b) in out.iter_mut().zip(m.row(k)) {
                if !b.is_zero() {
                    d.add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> IntMat {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &IntMat) -> IntMat {
        if self.rows == 0 {
            return below.clone();
        }
        if below.rows == 0 {
            return self.clone();
        }
        assert_eq!(self.cols, below.cols, "stack width mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        IntMat {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    /// Horizontal concatenation.
    pub fn concat_cols(&self, right: &IntMat) -> IntMat {
        assert_eq!(self.rows, right.rows, "concat height mismatch");
        let mut out = IntMat::zeros(self.rows, self.cols + right.cols);
        for i in 0..self.rows {
            let dst = out.row_mut(i);
            dst[..self.cols].clone_from_slice(self.row(i));
            dst[self.cols..].clone_from_slice(right.row(i));
        }
        out
    }

    pub fn block_diag(a: &IntMat, b: &IntMat) -> IntMat {
        let mut out = IntMat::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            out.row_mut(i)[..a.cols].clone_from_slice(a.row(i));
        }
        for i in 0..b.rows {
            out.row_mut(a.rows + i)[a.cols..].clone_from_slice(b.row(i));
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMat {
        let rows = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        IntMat::from_int_rows(rows, self.cols)
    }

    pub fn select_cols(&self, idx: &[usize]) -> IntMat {
        let mut out = IntMat::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out[(i, k)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        for j in 0..c {
            self.data.swap(a * c + j, b * c + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += q * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        let c = self.cols;
        for j in 0..c {
            let s = self.data[src * c + j].clone();
            if !s.is_zero() {
                self.data[dst * c + j].add_mul(q, &s);
            }
        }
    }

    /// `col[dst] += q * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        let c = self.cols;
        for i in 0..self.rows {
            let s = self.data[i * c + src].clone();
            if !s.is_zero() {
                self.data[i * c + dst].add_mul(q, &s);
            }
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for x in self.row_mut(i) {
            *x = -&*x;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let x = &mut self.data[i * self.cols + j];
            *x = -&*x;
        }
    }

    /// Replaces rows `(a, b)` by `(x·a + y·b, z·a + w·b)`.
    pub fn combine_rows(&mut self, a: usize, b: usize, coef: [&Int; 4]) {
        let [x, y, z, w] = coef;
        for j in 0..self.cols {
            let ra = self[(a, j)].clone();
            let rb = self[(b, j)].clone();
            if ra.is_zero() && rb.is_zero() {
                continue;
            }
            self[(a, j)] = &(x * &ra) + &(y * &rb);
            self[(b, j)] = &(z * &ra) + &(w * &rb);
        }
    }

    /// Replaces columns `(a, b)` by `(x·a + y·b, z·a + w·b)`.
    pub fn combine_cols(&mut self, a: usize, b: usize, coef: [&Int; 4]) {
        let [x, y, z, w] = coef;
        for i in 0..self.rows {
            let ca = self[(i, a)].clone();
            let cb = self[(i, b)].clone();
            if ca.is_zero() && cb.is_zero() {
                continue;
            }
            self[(i, a)] = &(x * &ca) + &(y * &cb);
            self[(i, b)] = &(z * &ca) + &(w * &cb);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::ONE;
        }
        let mut a = self.clone();
        let mut sign = false;
        let mut prev = Int::ONE;
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Int::ZERO;
                };
                a.swap_rows(k, p);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[(i, j)] * &a[(k, k)]) - &(&a[(i, k)] * &a[(k, j)]);
                    a[(i, j)] = v.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    /// Inverse of a unimodular matrix via its Hermite form.
    pub fn unimodular_inverse(&self) -> Option<IntMat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let hf = super::hnf(self);
        // U·A = H; for unimodular A the canonical H is the identity.
        if hf.rank != n || hf.h != IntMat::identity(n) {
            return None;
        }
        Some(hf.u)
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Int::to_i64).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = Int;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_product() {
        let a = IntMat::from_rows(&[[2, 1, 0], [1, 3, 1], [0, 1, 4]]);
        assert_eq!(a.det(), Int::from(18));
        let id = IntMat::identity(3);
        assert_eq!(a.mul(&id), a);
        assert_eq!(IntMat::from_rows(&[[0, 1], [1, 0]]).det(), Int::from(-1));
        assert_eq!(IntMat::from_rows(&[[1, 2], [2, 4]]).det(), Int::ZERO);
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let a = IntMat::from_rows(&[[2, 1], [1, 1]]);
        let inv = a.unimodular_inverse().unwrap();
        assert_eq!(a.mul(&inv), IntMat::identity(2));
        assert!(IntMat::from_rows(&[[2, 0], [0, 1]]).unimodular_inverse().is_none());
    }
}
