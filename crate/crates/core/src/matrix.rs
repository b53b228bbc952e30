//! Dense integer matrices.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::Integer;

/// Dense row-major matrix of exact integers.
///
/// Zero-sized dimensions are allowed so that empty kernels and empty
/// images can be represented without special cases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Integer>,
}

/// Interchange form: entries as decimal strings, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![Integer::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Integer::ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Integer>) -> Result<IntMatrix> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Build from rows of machine integers. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| Integer::from(v)));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    /// Build from column vectors of equal length.
    pub fn from_columns(height: usize, cols: &[Vec<Integer>]) -> IntMatrix {
        let mut m = IntMatrix::zeros(height, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), height, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn column_vector(v: &[Integer]) -> IntMatrix {
        IntMatrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn diagonal(d: &[Integer]) -> IntMatrix {
        let mut m = IntMatrix::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = v.clone();
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

    pub fn entries(&self) -> &[Integer] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Integer] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Integer] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn column(&self, j: usize) -> Vec<Integer> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Integer>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Integer::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// True when every row and column has exactly one entry equal to 1 and
    /// all other entries are 0.
    pub fn is_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut col_seen = vec![false; self.cols];
        for i in 0..self.rows {
            let mut found = None;
            for j in 0..self.cols {
                let v = &self[(i, j)];
                if v.is_one() {
                    if found.is_some() {
                        return false;
                    }
                    found = Some(j);
                } else if !v.is_zero() {
                    return false;
                }
            }
            match found {
                Some(j) if !col_seen[j] => col_seen[j] = true,
                _ => return false,
            }
        }
        true
    }

    /// For a permutation matrix, the image index of each basis vector.
    pub fn permutation_images(&self) -> Option<Vec<usize>> {
        if !self.is_permutation() {
            return None;
        }
        Some(
            (0..self.cols)
                .map(|j| (0..self.rows).find(|&i| self[(i, j)].is_one()).unwrap())
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
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
        Ok(out)
    }

    /// Matrix product; panics on a dimension mismatch.
    pub fn mm(&self, other: &IntMatrix) -> IntMatrix {
        self.mul(other).expect("dimension mismatch in product")
    }

    pub fn mul_vec(&self, v: &[Integer]) -> Vec<Integer> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Integer::ZERO;
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_mul(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(&Integer, &Integer) -> Integer) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> IntMatrix {
        self.scale(&Integer::from(-1))
    }

    pub fn scale(&self, k: &Integer) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> IntMatrix {
        assert!(self.is_square());
        let mut result = IntMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mm(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mm(&base);
            }
        }
        result
    }

    /// Kronecker product.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = IntMatrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(blocks: &[&IntMatrix]) -> IntMatrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntMatrix::zeros(r, c);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            out.set_block(ro, co, b);
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn hstack(blocks: &[&IntMatrix]) -> Result<IntMatrix> {
        let r = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != r) {
            return Err(Error::Dimension("hstack with unequal row counts".into()));
        }
        let c = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntMatrix::zeros(r, c);
        let mut co = 0;
        for b in blocks {
            out.set_block(0, co, b);
            co += b.cols;
        }
        Ok(out)
    }

    pub fn vstack(blocks: &[&IntMatrix]) -> Result<IntMatrix> {
        let c = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != c) {
            return Err(Error::Dimension("vstack with unequal column counts".into()));
        }
        let r = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(r * c);
        for b in blocks {
            data.extend_from_slice(&b.data);
        }
        Ok(IntMatrix { rows: r, cols: c, data })
    }

    pub fn set_block(&mut self, row: usize, col: usize, b: &IntMatrix) {
        assert!(row + b.rows <= self.rows && col + b.cols <= self.cols);
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(row + i, col + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> IntMatrix {
        let mut out = IntMatrix::zeros(rows.len(), cols.len());
        for (a, i) in rows.clone().enumerate() {
            for (b, j) in cols.clone().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, idx.len());
        for (b, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out[(i, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
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

    /// row[dst] += k * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Integer) {
        if k.is_zero() {
            return;
        }
        let c = self.cols;
        for j in 0..c {
            let (s, d) = (src * c + j, dst * c + j);
            if !self.data[s].is_zero() {
                let v = self.data[s].clone();
                self.data[d].add_mul(k, &v);
            }
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Integer) {
        if k.is_zero() {
            return;
        }
        let c = self.cols;
        for i in 0..self.rows {
            let (s, d) = (i * c + src, i * c + dst);
            if !self.data[s].is_zero() {
                let v = self.data[s].clone();
                self.data[d].add_mul(k, &v);
            }
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for v in self.row_mut(i) {
            *v = -&*v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Replace rows (a, b) by (p*a + q*b, r*a + s*b).
    pub fn combine_rows(&mut self, a: usize, b: usize, p: &Integer, q: &Integer, r: &Integer, s: &Integer) {
        for j in 0..self.cols {
            let x = self[(a, j)].clone();
            let y = self[(b, j)].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            self[(a, j)] = &(p * &x) + &(q * &y);
            self[(b, j)] = &(r * &x) + &(s * &y);
        }
    }

    /// Replace columns (a, b) by (p*a + q*b, r*a + s*b).
    pub fn combine_cols(&mut self, a: usize, b: usize, p: &Integer, q: &Integer, r: &Integer, s: &Integer) {
        for i in 0..self.rows {
            let x = self[(i, a)].clone();
            let y = self[(i, b)].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            self[(i, a)] = &(p * &x) + &(q * &y);
            self[(i, b)] = &(r * &x) + &(s * &y);
        }
    }

    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|v| v.to_string()).collect(),
        }
    }

    pub fn from_doc(doc: &MatrixDoc) -> Result<IntMatrix> {
        let data = doc
            .entries
            .iter()
            .map(|s| s.parse::<Integer>().map_err(|e| Error::Parse(format!("entry {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_vec(doc.rows, doc.cols, data)
    }

    /// Entries as machine integers, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Integer::to_i64).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Integer;
    fn index(&self, (i, j): (usize, usize)) -> &Integer {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Integer {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} ", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.data.iter().map(|v| v.to_string()).collect();
        let w = strs.iter().map(String::len).max().unwrap_or(1);
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "\n ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", strs[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_doc().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = MatrixDoc::deserialize(d)?;
        IntMatrix::from_doc(&doc).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_rows(&[[1, 2], [3, 4]]);
        let b = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(a.mm(&b), IntMatrix::from_rows(&[[2, 1], [4, 3]]));
        assert_eq!(a.transpose(), IntMatrix::from_rows(&[[1, 3], [2, 4]]));
        assert!(a.mul(&IntMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn kron_shape() {
        let a = IntMatrix::from_rows(&[[1, 2]]);
        let b = IntMatrix::from_rows(&[[1], [-1]]);
        assert_eq!(a.kron(&b), IntMatrix::from_rows(&[[1, 2], [-1, -2]]));
    }

    #[test]
    fn doc_round_trip() {
        let mut a = IntMatrix::from_rows(&[[1, -2, 3]]);
        a[(0, 1)] = "-340282366920938463463374607431768211456".parse().unwrap();
        let doc = a.to_doc();
        assert_eq!(doc.entries[1], "-340282366920938463463374607431768211456");
        let json = serde_json::to_string(&a).unwrap();
        let b: IntMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn permutation_detection() {
        assert!(IntMatrix::from_rows(&[[0, 1], [1, 0]]).is_permutation());
        assert!(!IntMatrix::from_rows(&[[0, -1], [1, 0]]).is_permutation());
        assert!(!IntMatrix::from_rows(&[[1, 1], [0, 0]]).is_permutation());
        assert_eq!(
            IntMatrix::from_rows(&[[0, 0, 1], [1, 0, 0], [0, 1, 0]]).permutation_images(),
            Some(vec![1, 2, 0])
        );
    }
}
