//! Dense exact linear algebra over a [`Field`].
//!
//! Everything here is plain Gauss-Jordan elimination on row-major storage.
//! Matrices in this crate are small (tensor powers of algebras of dimension
//! at most a handful), so there is no sparsity or pivoting strategy beyond
//! "first nonzero entry".

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, len: usize) -> Vector {
    vec![field.zero(); len]
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Standard basis vector `e_i` of length `len`.
pub fn unit_vector(field: Field, len: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, len);
    v[i] = field.one();
    v
}

/// `acc += coeff * v`
pub fn axpy(acc: &mut [Scalar], coeff: &Scalar, v: &[Scalar]) {
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(coeff * x);
        }
    }
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Linear combination `sum_i coeffs[i] * vectors[i]`.
pub fn combine(field: Field, len: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
    let mut acc = zero_vector(field, len);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut acc, c, v);
    }
    acc
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows, checking shape and field of every entry.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: format!("matrix row {i}"),
                    expected: cols,
                    found: row.len(),
                });
            }
            if let Some(bad) = row.iter().find(|s| !field.contains(s)) {
                return Err(Error::FieldMismatch(format!(
                    "entry {bad} in a matrix over {field}"
                )));
            }
            entries.extend(row);
        }
        Ok(Matrix { field, rows: nrows, cols, entries })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    context: format!("matrix column {j}"),
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                if !field.contains(x) {
                    return Err(Error::FieldMismatch(format!(
                        "entry {x} in a matrix over {field}"
                    )));
                }
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    /// Integer entries mapped into `field`; panics on ragged input.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| field.int(x)).collect()
            })
            .collect();
        Matrix::from_rows(field, cols, rows).expect("shape checked")
    }

    pub fn diagonal(field: Field, diag: &[i64]) -> Self {
        let mut m = Matrix::zeros(field, diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, field.int(d));
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        debug_assert!(self.field.contains(&value));
        self.entries[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &Scalar) {
        self.entries[i * self.cols + j] += value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.set(j, i, x.clone());
                }
            }
        }
        t
    }

    /// Matrix product; panics on incompatible shapes.
    #[track_caller]
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    #[track_caller]
    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    #[track_caller]
    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Matrix { entries, ..*self }
    }

    #[track_caller]
    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Matrix { entries, ..*self }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|a| c * a).collect();
        Matrix { entries, ..*self }
    }

    /// Kronecker product `self ⊗ rhs`, with `self`'s index major.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `n`-fold Kronecker power; the 0th power is the 1×1 identity.
    pub fn kron_power(&self, n: usize) -> Matrix {
        (0..n).fold(Matrix::identity(self.field, 1), |acc, _| acc.kron(self))
    }

    pub fn vstack(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            entries.extend(b.entries.iter().cloned());
        }
        Matrix { field, rows, cols, entries }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = reduce_rows(&mut rows, self.cols);
        let m = Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: rows.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_basis(&self) -> Vec<Vector> {
        kernel_basis(self)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vector(self.field, n, i));
                r
            })
            .collect();
        let pivots = reduce_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let inv = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(self.field, n, inv).expect("shape preserved"))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {} [", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// In-place Gauss-Jordan elimination on the first `width` columns.
/// Returns pivot columns; the first `pivots.len()` rows are the nonzero
/// reduced rows, each with a leading one.
fn reduce_rows(rows: &mut [Vector], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            let factor = other[c].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, y) in other.iter_mut().zip(pivot_row.iter()).skip(c) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    // eliminate along the shorter side
    if m.rows > m.cols {
        return rank(&m.transpose());
    }
    let mut rows = m.row_vectors();
    reduce_rows(&mut rows, m.cols).len()
}

/// Basis of `{v : m v = 0}` read off the reduced echelon form: one vector
/// per free column, with a one in that column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    kernel_basis_with_free_columns(m).0
}

/// [`kernel_basis`] plus the free column of each basis vector. Basis vector
/// `k` is one at `free[k]` and zero at every other free column, so the
/// coordinates of a kernel element are its entries at the free columns.
pub fn kernel_basis_with_free_columns(m: &Matrix) -> (Vec<Vector>, Vec<usize>) {
    let field = m.field;
    let mut rows = m.row_vectors();
    let pivots = reduce_rows(&mut rows, m.cols);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..m.cols).filter(|&f| !is_pivot[f]).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = zero_vector(field, m.cols);
            v[f] = field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[i][f];
            }
            v
        })
        .collect();
    (basis, free)
}

/// Decides whether `v` lies in the span of `basis`; on success returns
/// coefficients `c` with `sum c_i basis_i = v`.
pub fn in_span(v: &[Scalar], basis: &[Vector]) -> Result<Option<Vector>> {
    let len = v.len();
    for (i, b) in basis.iter().enumerate() {
        if b.len() != len {
            return Err(Error::DimensionMismatch {
                context: format!("span member {i}"),
                expected: len,
                found: b.len(),
            });
        }
    }
    let Some(field) = v.first().map(Scalar::field) else {
        return Ok(Some(basis.iter().map(|_| Field::Rational.zero()).collect()));
    };
    if is_zero_vector(v) {
        return Ok(Some(zero_vector(field, basis.len())));
    }
    // Solve B c = v on the augmented system [B | v].
    let k = basis.len();
    let mut rows: Vec<Vector> = (0..len)
        .map(|i| {
            let mut r: Vector = basis.iter().map(|b| b[i].clone()).collect();
            r.push(v[i].clone());
            r
        })
        .collect();
    let pivots = reduce_rows(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = zero_vector(field, k);
    for (i, &p) in pivots.iter().enumerate() {
        coeffs[p] = rows[i][k].clone();
    }
    Ok(Some(coeffs))
}

/// Result of [`quotient_dimension`].
#[derive(Debug, Clone)]
pub struct Quotient {
    pub dimension: usize,
    /// Vectors from `sub` that, together with the smaller span, give a basis
    /// of the larger one.
    pub representatives: Vec<Vector>,
}

/// `dim span(sub) / span(ambient_sub)`, checking that the second span is
/// contained in the first.
pub fn quotient_dimension(sub: &[Vector], ambient_sub: &[Vector]) -> Result<Quotient> {
    for w in ambient_sub {
        if in_span(w, sub)?.is_none() {
            return Err(Error::NotContained {
                witness: w.iter().map(|x| x.to_string()).collect(),
            });
        }
    }
    let mut echelon = EchelonBasis::default();
    for w in ambient_sub {
        echelon.insert(w);
    }
    let small = echelon.len();
    let mut representatives = Vec::new();
    for v in sub {
        if echelon.insert(v) {
            representatives.push(v.clone());
        }
    }
    Ok(Quotient {
        dimension: echelon.len() - small,
        representatives,
    })
}

/// Incrementally built echelon basis, used for greedy basis extension.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vector)>,
}

impl EchelonBasis {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Adds `v`; returns whether it was independent of what was there.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("nonzero");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        // keep existing rows reduced at the new pivot
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn qv(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q().int(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(q(), 2).rank(), 2);
        assert_eq!(Matrix::zeros(q(), 3, 4).rank(), 0);
        assert_eq!(Matrix::from_ints(q(), &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(q(), 2).kernel_basis().is_empty());
        let k = Matrix::zeros(q(), 2, 2).kernel_basis();
        assert_eq!(k.len(), 2);
        assert_eq!(Matrix::from_columns(q(), 2, &k).unwrap().rank(), 2);
        let k = Matrix::from_ints(q(), &[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![qv(&[-1, 1])]);
    }

    #[test]
    fn span_examples() {
        assert_eq!(in_span(&qv(&[0, 0]), &[qv(&[4, 5])]).unwrap(), Some(qv(&[0])));
        assert_eq!(in_span(&qv(&[1, 0]), &[qv(&[0, 1])]).unwrap(), None);
        assert_eq!(in_span(&qv(&[3, 6]), &[qv(&[1, 2])]).unwrap(), Some(qv(&[3])));
        assert!(matches!(
            in_span(&qv(&[1, 0]), &[qv(&[1])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let full = vec![qv(&[1, 0]), qv(&[0, 1])];
        assert_eq!(quotient_dimension(&full, &[]).unwrap().dimension, 2);
        assert_eq!(quotient_dimension(&full, &full).unwrap().dimension, 0);
        let quot = quotient_dimension(&full, &[qv(&[1, 1])]).unwrap();
        assert_eq!(quot.dimension, 1);
        assert_eq!(quot.representatives, vec![qv(&[1, 0])]);
        let err = quotient_dimension(&[qv(&[1, 0])], &[qv(&[0, 1])]).unwrap_err();
        assert!(matches!(err, Error::NotContained { witness } if witness == ["0", "1"]));
    }

    #[test]
    fn inverse_and_kron() {
        let m = Matrix::from_ints(q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_ints(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
        let k = Matrix::identity(q(), 2).kron(&m);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(3, 2), &q().int(1));
        assert_eq!(m.kron_power(0), Matrix::identity(q(), 1));
    }

    #[test]
    fn prime_field_elimination() {
        let f2 = Field::prime(2).unwrap();
        // det = 2, singular mod 2
        let m = Matrix::from_ints(f2, &[&[1, 1], &[1, 3]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(Matrix::from_ints(q(), &[&[1, 1], &[1, 3]]).rank(), 2);
    }

    #[test]
    fn from_rows_checks_field() {
        let err = Matrix::from_rows(q(), 1, vec![vec![Field::Prime(3).one()]]).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch(_)));
    }
}
