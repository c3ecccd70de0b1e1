//! Dense matrices over the rationals.
//!
//! Vectors are rows and linear maps act on the right: a map `V -> W` is a
//! `dim V x dim W` matrix `F`, and `v |-> v F`. Consequently "first `F`, then
//! `G`" is the product `F * G`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// One elementary row operation, as recorded by [`Matrix::rref_with_ops`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    Scale(usize, Scalar),
    /// `row[target] += factor * row[source]`
    AddMultiple { target: usize, source: usize, factor: Scalar },
}

impl RowOp {
    /// The elementary matrix `E` with `E * m` performing this operation.
    pub fn elementary(&self, n: usize) -> Matrix {
        let mut e = Matrix::identity(n);
        match self {
            RowOp::Swap(a, b) => {
                e[(*a, *a)] = Scalar::zero();
                e[(*b, *b)] = Scalar::zero();
                e[(*a, *b)] = Scalar::one();
                e[(*b, *a)] = Scalar::one();
            }
            RowOp::Scale(r, c) => e[(*r, *r)] = c.clone(),
            RowOp::AddMultiple { target, source, factor } => {
                e[(*target, *source)] = factor.clone();
            }
        }
        e
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect(),
        )
    }

    pub fn row_vector(v: Vec<Scalar>) -> Self {
        let n = v.len();
        Matrix { rows: 1, cols: n, data: v }
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

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, other: &Matrix, s: &Scalar) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    /// `v * self` for a row vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![Scalar::zero(); self.cols];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, y) in self.row(r).iter().enumerate() {
                if !y.is_zero() {
                    out[c] += x * y;
                }
            }
        }
        out
    }

    pub fn vstack(cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Matrix { rows, cols, data }
    }

    pub fn hstack(rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut off = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                for c in 0..p.cols {
                    m[(r, off + c)] = p[(r, c)].clone();
                }
            }
            off += p.cols;
        }
        m
    }

    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            m.set_block(r0, c0, p);
            r0 += p.rows;
            c0 += p.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |r, c| self[(idx[r], c)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |r, c| self[(r, idx[c])].clone())
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).map(|i| &self[(i, i)]).sum()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (m, pivots, _) = self.rref_impl(false);
        (m, pivots)
    }

    /// Like [`Matrix::rref`] but also returns the row operations applied, in
    /// order. The product of their elementary matrices (last op leftmost)
    /// times `self` equals the returned echelon form.
    pub fn rref_with_ops(&self) -> (Matrix, Vec<usize>, Vec<RowOp>) {
        self.rref_impl(true)
    }

    fn rref_impl(&self, record: bool) -> (Matrix, Vec<usize>, Vec<RowOp>) {
        let mut rows: Vec<Vec<Scalar>> = self.to_rows();
        let mut ops = Vec::new();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(found) = (pr..self.rows).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            if found != pr {
                rows.swap(found, pr);
                if record {
                    ops.push(RowOp::Swap(found, pr));
                }
            }
            let p = rows[pr][col].clone();
            if !p.is_one() {
                let inv = p.inv().expect("nonzero pivot");
                for x in rows[pr][col..].iter_mut() {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
                if record {
                    ops.push(RowOp::Scale(pr, inv));
                }
            }
            let support: Vec<usize> = (col..self.cols).filter(|&c| !rows[pr][c].is_zero()).collect();
            let pivot_row = rows[pr].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == pr || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for &c in &support {
                    let d = &f * &pivot_row[c];
                    row[c] -= d;
                }
                if record {
                    ops.push(RowOp::AddMultiple { target: r, source: pr, factor: -f });
                }
            }
            pivots.push(col);
            pr += 1;
        }
        let m = Matrix::from_rows(self.cols, rows);
        (m, pivots, ops)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the row space, in reduced echelon form.
    pub fn image_basis(&self) -> Matrix {
        let (r, p) = self.rref();
        r.block(0, 0, p.len(), self.cols)
    }

    /// Basis (as rows) of `{ x : self * x^T = 0 }`.
    pub fn right_kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out[(k, f)] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                let v = &r[(i, f)];
                if !v.is_zero() {
                    out[(k, p)] = -v;
                }
            }
        }
        out
    }

    /// Basis (as rows) of `{ v : v * self = 0 }`; there are `rows - rank` of them.
    pub fn kernel_basis(&self) -> Matrix {
        self.transpose().right_kernel_basis()
    }

    /// Solves `x * a = b`; `None` when inconsistent.
    pub fn solve_left(a: &Matrix, b: &Matrix) -> Option<Matrix> {
        assert_eq!(a.cols, b.cols, "solve_left: column mismatch");
        Some(Matrix::solve_right(&a.transpose(), &b.transpose())?.transpose())
    }

    /// Solves `a * x = b`; `None` when inconsistent.
    pub fn solve_right(a: &Matrix, b: &Matrix) -> Option<Matrix> {
        assert_eq!(a.rows, b.rows, "solve_right: row mismatch");
        let aug = Matrix::hstack(a.rows, &[a, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= a.cols) {
            return None;
        }
        let mut x = Matrix::zeros(a.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = r[(i, a.cols + c)].clone();
            }
        }
        Some(x)
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let piv = a[col][col].clone();
            det *= &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &inv;
                let (top, bottom) = a.split_at_mut(r);
                for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= &f * p;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        Matrix::solve_right(self, &Matrix::identity(self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(r))?;
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

/// Serialized as a list of rows of rational strings. An empty list is a
/// `0 x 0` matrix; use [`Matrix::with_shape`] when the column count of
/// a row-less matrix matters.
impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<Scalar>> = Vec::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows(cols, rows))
    }
}

impl Matrix {
    /// Reattaches the shape of a matrix that may have lost its column count
    /// in serialization (zero rows).
    pub fn with_shape(self, rows: usize, cols: usize) -> Option<Matrix> {
        if self.rows == rows && self.cols == cols {
            Some(self)
        } else if self.rows == 0 && rows == 0 {
            Some(Matrix::zeros(0, cols))
        } else {
            None
        }
    }
}

/// Serde adapter storing only the nonzero entries, as
/// `{rows, cols, entries: [[r, c, "value"], ..]}`.
pub mod sparse {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{Matrix, Scalar};

    #[derive(Serialize, Deserialize)]
    struct Sparse {
        rows: usize,
        cols: usize,
        entries: Vec<(usize, usize, Scalar)>,
    }

    pub fn serialize<S: Serializer>(m: &Matrix, s: S) -> Result<S::Ok, S::Error> {
        let mut entries = Vec::new();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if !m[(r, c)].is_zero() {
                    entries.push((r, c, m[(r, c)].clone()));
                }
            }
        }
        Sparse { rows: m.rows(), cols: m.cols(), entries }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Matrix, D::Error> {
        let sp = Sparse::deserialize(d)?;
        let mut m = Matrix::zeros(sp.rows, sp.cols);
        for (r, c, v) in sp.entries {
            if r >= sp.rows || c >= sp.cols {
                return Err(serde::de::Error::custom(format!("entry ({r}, {c}) out of range")));
            }
            m[(r, c)] = v;
        }
        Ok(m)
    }
}

/// A subspace of `k^n` held as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(spanning: &Matrix) -> Self {
        let (r, pivots) = spanning.rref();
        RowSpace { basis: r.block(0, 0, pivots.len(), spanning.cols()), pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        RowSpace { basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        RowSpace { basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts basis multiples so that `v` vanishes on every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (c, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    v[c] -= &f * b;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.basis.row_iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the space.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Standard basis indices completing this space to the ambient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient()).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        RowSpace::new(&Matrix::vstack(self.ambient(), &[&self.basis, &other.basis]))
    }

    pub fn intersection(&self, other: &RowSpace) -> RowSpace {
        // x*A = y*B  <=>  [x, y] * [A; -B] = 0
        let n = self.ambient();
        let stacked = Matrix::vstack(n, &[&self.basis, &(-&other.basis)]);
        let ker = stacked.kernel_basis();
        let xs = ker.block(0, 0, ker.rows(), self.dim());
        RowSpace::new(&(&xs * &self.basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rref_identity_and_rank_one() {
        let i = Matrix::identity(2);
        let (r, p) = i.rref();
        assert_eq!(r, i);
        assert_eq!(p, vec![0, 1]);

        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(3, 3).kernel_basis().rows(), 3);
        assert_eq!(Matrix::identity(3).kernel_basis().rows(), 0);
        let mut m = Matrix::zeros(3, 3);
        m[(0, 1)] = q(2);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 2);
        assert!((&k * &m).is_zero());
    }

    #[test]
    fn solve_left_examples() {
        let b = Matrix::from_i64(&[&[3, -1, 4]]);
        assert_eq!(Matrix::solve_left(&Matrix::identity(3), &b).unwrap(), b);
        assert!(Matrix::solve_left(&Matrix::zeros(3, 3), &b).is_none());
    }

    #[test]
    fn zero_sized() {
        let m = Matrix::zeros(0, 4);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().rows(), 0);
        assert_eq!(m.right_kernel_basis().rows(), 4);
        let e = Matrix::zeros(3, 0);
        assert_eq!(e.kernel_basis().rows(), 3);
        assert_eq!(Matrix::identity(0).determinant(), Scalar::one());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.determinant(), q(18));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn rowspace_intersection() {
        let a = RowSpace::new(&Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]));
        let b = RowSpace::new(&Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1]]));
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[q(0), q(5), q(0)]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.complement_indices(), vec![2]);
    }
}
