//! The Leibniz chain complex `(g^{⊗n}, d)` and cochain complex
//! `Hom(g^{⊗n}, A)` with `δc = c ∘ d`.
//!
//! Tensor bases are words `(i_1, …, i_n)` in lexicographic order. A cochain
//! `c ∈ Hom(g^{⊗n}, A)` is stored as a vector indexed by `word * dim A + α`
//! (tensor index major, coefficient index minor).

use crate::algebra::{render, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{axpy, kernel_basis, quotient_dimension, unit_vector, zero_vector, Matrix, Vector};

/// Degrees above this are refused; `3^8` columns is already far past desk scale.
pub const MAX_DEGREE: usize = 8;

/// `g^{⊗n}` with its lexicographic word basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorSpace {
    pub base_dim: usize,
    pub degree: usize,
}

impl TensorSpace {
    pub fn new(base_dim: usize, degree: usize) -> Self {
        TensorSpace { base_dim, degree }
    }

    pub fn dim(&self) -> usize {
        self.base_dim.pow(self.degree as u32)
    }

    pub fn index(&self, word: &[usize]) -> usize {
        debug_assert_eq!(word.len(), self.degree);
        word.iter().fold(0, |acc, &l| acc * self.base_dim + l)
    }

    pub fn word(&self, mut index: usize) -> Vec<usize> {
        let mut w = vec![0; self.degree];
        for slot in w.iter_mut().rev() {
            *slot = index % self.base_dim;
            index /= self.base_dim;
        }
        w
    }

    pub fn words(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.dim()).map(|i| self.word(i))
    }
}

/// `d_n : g^{⊗n} → g^{⊗(n-1)}`,
/// `d(x_1…x_n) = Σ_{i<j} (-1)^j (x_1, …, [x_i, x_j], …, x̂_j, …, x_n)`
/// with `[x_i, x_j]` placed in slot `i` and 1-based `j`.
pub fn boundary_matrix(alg: &LeibnizAlgebra, n: usize) -> Result<Matrix> {
    if n < 2 {
        return Err(Error::DegreeOutOfRange { degree: n, min: 2, max: MAX_DEGREE + 1 });
    }
    let m = alg.dim();
    let src = TensorSpace::new(m, n);
    let dst = TensorSpace::new(m, n - 1);
    let mut d = Matrix::zeros(alg.field(), dst.dim(), src.dim());
    for (col, word) in src.words().enumerate() {
        for i in 0..n {
            for j in i + 1..n {
                let br = alg.basis_bracket(word[i], word[j]);
                // 0-based j is 1-based j+1
                let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
                let mut out = word.clone();
                out.remove(j);
                for (k, c) in br.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    out[i] = k;
                    let row = dst.index(&out);
                    let term = if sign == 1 { c.clone() } else { -c };
                    d.add_to(row, col, &term);
                }
            }
        }
    }
    Ok(d)
}

/// Boundary out of degree `n`, with `d_1 = 0 : g → 0`.
fn outgoing_boundary(alg: &LeibnizAlgebra, n: usize) -> Result<Matrix> {
    if n == 1 {
        Ok(Matrix::zeros(alg.field(), 0, alg.dim()))
    } else {
        boundary_matrix(alg, n)
    }
}

#[derive(Debug, Clone)]
pub struct HomologyResult {
    pub degree: usize,
    pub chain_dim: usize,
    pub cycle_basis: Vec<Vector>,
    pub boundary_basis: Vec<Vector>,
    pub betti: usize,
    pub representatives: Vec<Vector>,
}

/// `HL_n(g) = ker d_n / im d_{n+1}` for `n ≥ 1`.
pub fn homology(alg: &LeibnizAlgebra, n: usize) -> Result<HomologyResult> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: n, min: 1, max: MAX_DEGREE });
    }
    let out = outgoing_boundary(alg, n)?;
    let incoming = boundary_matrix(alg, n + 1)?;
    let cycle_basis = kernel_basis(&out);
    let boundary_basis = column_space_basis(&incoming);
    let quotient = quotient_dimension(&cycle_basis, &boundary_basis)?;
    Ok(HomologyResult {
        degree: n,
        chain_dim: TensorSpace::new(alg.dim(), n).dim(),
        betti: cycle_basis.len() - boundary_basis.len(),
        cycle_basis,
        boundary_basis,
        representatives: quotient.representatives,
    })
}

/// A basis of the column space: the nonzero rows of `rref(mᵀ)`.
pub fn column_space_basis(m: &Matrix) -> Vec<Vector> {
    let (r, pivots) = m.transpose().rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// A finite-dimensional commutative associative unital algebra, the
/// coefficients of a cochain complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientAlgebra {
    field: Field,
    dim: usize,
    // products[i * dim + j] = b_i b_j
    products: Vec<Vector>,
    unit: Vector,
}

impl CoefficientAlgebra {
    pub fn new(field: Field, dim: usize, products: Vec<Vector>, unit: Vector) -> Result<Self> {
        if products.len() != dim * dim || products.iter().any(|p| p.len() != dim) || unit.len() != dim {
            return Err(Error::DimensionMismatch {
                context: "coefficient algebra product table".into(),
                expected: dim * dim,
                found: products.len(),
            });
        }
        if products.iter().flatten().chain(&unit).any(|x| !field.contains(x)) {
            return Err(Error::FieldMismatch(format!("coefficient algebra over {field}")));
        }
        Ok(CoefficientAlgebra { field, dim, products, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        CoefficientAlgebra {
            field,
            dim: 1,
            products: vec![vec![field.one()]],
            unit: vec![field.one()],
        }
    }

    /// `K^n` with the coordinatewise product (functions on an `n`-point set).
    pub fn functions_on(field: Field, points: usize) -> Self {
        let mut products = vec![zero_vector(field, points); points * points];
        for i in 0..points {
            products[i * points + i] = unit_vector(field, points, i);
        }
        CoefficientAlgebra {
            field,
            dim: points,
            products,
            unit: vec![field.one(); points],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.products[i * self.dim + j]
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() {
                    axpy(&mut out, &(a * b), self.basis_product(i, j));
                }
            }
        }
        out
    }

    /// Commutativity, associativity and the unit law on basis elements.
    pub fn check(&self) -> Vec<String> {
        let mut out = Vec::new();
        let e = |i| unit_vector(self.field, self.dim, i);
        for i in 0..self.dim {
            if self.mul(&self.unit, &e(i)) != e(i) {
                out.push(format!("unit law fails on b{}", i + 1));
            }
            for j in 0..self.dim {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    out.push(format!("b{} b{} != b{} b{}", i + 1, j + 1, j + 1, i + 1));
                }
                for k in 0..self.dim {
                    let left = self.mul(self.basis_product(i, j), &e(k));
                    let right = self.mul(&e(i), self.basis_product(j, k));
                    if left != right {
                        out.push(format!(
                            "associativity fails at (b{}, b{}, b{}): [{}] vs [{}]",
                            i + 1,
                            j + 1,
                            k + 1,
                            render(&left),
                            render(&right)
                        ));
                    }
                }
            }
        }
        out
    }
}

/// `δ_n : Hom(g^{⊗n}, A) → Hom(g^{⊗(n+1)}, A)`. Degree 0 is `A` with `δ_0 = 0`.
pub fn coboundary_matrix(alg: &LeibnizAlgebra, coeffs: &CoefficientAlgebra, n: usize) -> Result<Matrix> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: n, min: 0, max: MAX_DEGREE });
    }
    let m = alg.dim();
    let a = coeffs.dim();
    let rows = TensorSpace::new(m, n + 1).dim() * a;
    let cols = TensorSpace::new(m, n).dim() * a;
    if n == 0 {
        return Ok(Matrix::zeros(alg.field(), rows, cols));
    }
    let d = boundary_matrix(alg, n + 1)?;
    let mut delta = Matrix::zeros(alg.field(), rows, cols);
    for u in 0..d.rows() {
        for w in 0..d.cols() {
            let x = d.get(u, w);
            if x.is_zero() {
                continue;
            }
            for alpha in 0..a {
                delta.set(w * a + alpha, u * a + alpha, x.clone());
            }
        }
    }
    Ok(delta)
}

/// Cohomology in one degree of some cochain complex.
#[derive(Debug, Clone)]
pub struct CohomologyResult {
    pub degree: usize,
    pub cochain_dim: usize,
    pub cocycle_basis: Vec<Vector>,
    pub coboundary_basis: Vec<Vector>,
    pub betti: usize,
    /// Cocycles whose classes form a basis of cohomology.
    pub representatives: Vec<Vector>,
}

/// `ker outgoing / im incoming`; `incoming = None` means the zero map.
pub fn cohomology_of(degree: usize, outgoing: &Matrix, incoming: Option<&Matrix>) -> Result<CohomologyResult> {
    let cocycle_basis = kernel_basis(outgoing);
    let coboundary_basis = incoming.map(column_space_basis).unwrap_or_default();
    let quotient = quotient_dimension(&cocycle_basis, &coboundary_basis)?;
    Ok(CohomologyResult {
        degree,
        cochain_dim: outgoing.cols(),
        betti: cocycle_basis.len() - coboundary_basis.len(),
        cocycle_basis,
        coboundary_basis,
        representatives: quotient.representatives,
    })
}

/// `HL^n(g; A)`.
pub fn cohomology(alg: &LeibnizAlgebra, coeffs: &CoefficientAlgebra, n: usize) -> Result<CohomologyResult> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: n, min: 0, max: MAX_DEGREE });
    }
    let outgoing = coboundary_matrix(alg, coeffs, n)?;
    let incoming = if n == 0 { None } else { Some(coboundary_matrix(alg, coeffs, n - 1)?) };
    cohomology_of(n, &outgoing, incoming.as_ref())
}
