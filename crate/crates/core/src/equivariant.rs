//! Equivariant Leibniz cohomology via invariant cochain families.
//!
//! An `n`-cochain of `S^n = ⊕_H Hom((g^H)^{⊗n}, A(G/H))` is invariant when
//! `c_H ∘ ψ_g^{⊗n} = A(ĝ) ∘ c_K` for every orbit-category morphism
//! `ĝ : G/H → G/K`. The invariant cochains form a subcomplex `S•_G` under
//! `δ = ⊕_H δ_H`, whose cohomology is `HL^•_G(g; A)`.
//!
//! Ambient coordinates concatenate the per-subgroup blocks in the order of
//! [`OrbitCategory::subgroups`]; within a block the layout is the one used
//! by [`crate::complexes`].

use std::sync::OnceLock;

use crate::algebra::{render, AlgebraMorphism};
use crate::complexes::{coboundary_matrix, cohomology_of, CoefficientAlgebra, CohomologyResult, TensorSpace, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::group::{fixed_subalgebra, orbit_category, restriction_map, FiniteGroup, FixedSubalgebra, GroupAction, OrbitCategory};
use crate::linalg::{is_zero_vector, kernel_basis_with_free_columns, sub_vectors, unit_vector, Matrix, Vector};

/// An O_G-algebra: a commutative algebra per orbit and an algebra map
/// `A(ĝ) : A(G/K) → A(G/H)` per morphism `ĝ : G/H → G/K`.
#[derive(Debug, Clone)]
pub struct CoefficientSystem {
    pub orbit: OrbitCategory,
    pub algebras: Vec<CoefficientAlgebra>,
    pub maps: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientViolation {
    /// Morphism indices involved (one for local failures, two for functoriality).
    pub morphisms: Vec<usize>,
    pub detail: String,
}

impl CoefficientSystem {
    pub fn new(orbit: OrbitCategory, algebras: Vec<CoefficientAlgebra>, maps: Vec<Matrix>) -> Result<Self> {
        if algebras.len() != orbit.object_count() {
            return Err(Error::DimensionMismatch {
                context: "coefficient algebras per orbit".into(),
                expected: orbit.object_count(),
                found: algebras.len(),
            });
        }
        if maps.len() != orbit.morphisms.len() {
            return Err(Error::DimensionMismatch {
                context: "coefficient maps per morphism".into(),
                expected: orbit.morphisms.len(),
                found: maps.len(),
            });
        }
        for (i, (m, mor)) in maps.iter().zip(&orbit.morphisms).enumerate() {
            let (rows, cols) = (algebras[mor.source].dim(), algebras[mor.target].dim());
            if m.rows() != rows || m.cols() != cols {
                return Err(Error::DimensionMismatch {
                    context: format!("coefficient map of morphism {i}"),
                    expected: rows * cols,
                    found: m.rows() * m.cols(),
                });
            }
        }
        Ok(CoefficientSystem { orbit, algebras, maps })
    }

    pub fn field(&self) -> Field {
        self.algebras[0].field()
    }

    /// Checks each algebra, that each map is a unital algebra map, that
    /// identities go to identities, and contravariant functoriality.
    pub fn check(&self) -> Vec<CoefficientViolation> {
        let mut out = Vec::new();
        for (o, alg) in self.algebras.iter().enumerate() {
            for detail in alg.check() {
                let id = self.orbit.identity(o);
                out.push(CoefficientViolation {
                    morphisms: vec![id],
                    detail: format!("A(G/H{}) : {detail}", o + 1),
                });
            }
        }
        for (i, mor) in self.orbit.morphisms.iter().enumerate() {
            let m = &self.maps[i];
            let (src, dst) = (&self.algebras[mor.target], &self.algebras[mor.source]);
            if self.orbit.is_identity(i) && !m.is_identity() {
                out.push(CoefficientViolation {
                    morphisms: vec![i],
                    detail: "identity morphism not sent to the identity".into(),
                });
            }
            if &m.mul_vec(src.unit()) != dst.unit() {
                out.push(CoefficientViolation {
                    morphisms: vec![i],
                    detail: "unit not preserved".into(),
                });
            }
            'pairs: for a in 0..src.dim() {
                for b in 0..src.dim() {
                    let ea = unit_vector(src.field(), src.dim(), a);
                    let eb = unit_vector(src.field(), src.dim(), b);
                    let lhs = dst.mul(&m.mul_vec(&ea), &m.mul_vec(&eb));
                    let rhs = m.mul_vec(src.basis_product(a, b));
                    if lhs != rhs {
                        out.push(CoefficientViolation {
                            morphisms: vec![i],
                            detail: format!(
                                "not multiplicative on (b{}, b{}): [{}] vs [{}]",
                                a + 1,
                                b + 1,
                                render(&lhs),
                                render(&rhs)
                            ),
                        });
                        break 'pairs;
                    }
                }
            }
        }
        for f in 0..self.orbit.morphisms.len() {
            for s in 0..self.orbit.morphisms.len() {
                if let Some(c) = self.orbit.compose(f, s) {
                    // A(s ∘ f) = A(f) ∘ A(s)
                    if self.maps[c] != self.maps[f].mul(&self.maps[s]) {
                        out.push(CoefficientViolation {
                            morphisms: vec![f, s],
                            detail: format!("functoriality fails for composite {c}"),
                        });
                    }
                }
            }
        }
        out
    }
}

pub fn check_coefficient_system(a: &CoefficientSystem) -> Vec<CoefficientViolation> {
    a.check()
}

/// `A(G/H) = K` with every map the identity.
pub fn constant_coefficients(field: Field, group: &FiniteGroup) -> CoefficientSystem {
    let orbit = orbit_category(group);
    let algebras = vec![CoefficientAlgebra::ground(field); orbit.object_count()];
    let maps = vec![Matrix::identity(field, 1); orbit.morphisms.len()];
    CoefficientSystem { orbit, algebras, maps }
}

/// `A(G/H) = K`-valued functions on `G/H`, maps given by pullback along `ĝ`.
pub fn coset_function_coefficients(field: Field, group: &FiniteGroup) -> CoefficientSystem {
    let orbit = orbit_category(group);
    let cosets: Vec<Vec<Vec<usize>>> = orbit.subgroups.iter().map(|s| group.left_cosets(s)).collect();
    let algebras = cosets
        .iter()
        .map(|c| CoefficientAlgebra::functions_on(field, c.len()))
        .collect();
    let maps = orbit
        .morphisms
        .iter()
        .map(|mor| {
            let (hc, kc) = (&cosets[mor.source], &cosets[mor.target]);
            let mut m = Matrix::zeros(field, hc.len(), kc.len());
            for (row, coset) in hc.iter().enumerate() {
                // aH ↦ agK
                let image = group.mul(coset[0], mor.element);
                let col = kc.iter().position(|c| c.contains(&image)).expect("cosets partition G");
                m.set(row, col, field.one());
            }
            m
        })
        .collect();
    CoefficientSystem { orbit, algebras, maps }
}

/// A cochain family `{c_H}`; `components[h]` is `c_H` in the block layout of
/// [`crate::complexes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantCochain {
    pub degree: usize,
    pub components: Vec<Vector>,
}

/// `S^n_G` as a subspace of the ambient `S^n`.
#[derive(Debug, Clone)]
pub struct InvariantCochainSpace {
    pub degree: usize,
    pub ambient_dim: usize,
    /// Basis columns in ambient coordinates.
    pub basis: Vec<Vector>,
    free_columns: Vec<usize>,
}

impl InvariantCochainSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an ambient vector in [`Self::basis`], `None` if it
    /// does not lie in the space.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coords: Vector = self.free_columns.iter().map(|&f| v[f].clone()).collect();
        let field = v.first().map(Scalar::field)?;
        let rebuilt = crate::linalg::combine(field, self.ambient_dim, &coords, &self.basis);
        (rebuilt == v).then_some(coords)
    }

    pub fn basis_matrix(&self, field: Field) -> Matrix {
        Matrix::from_columns(field, self.ambient_dim, &self.basis).expect("consistent lengths")
    }
}

/// Precomputed data for the complex `S•_G(g; A)`.
#[derive(Debug)]
pub struct EquivariantComplex {
    pub action: GroupAction,
    pub coefficients: CoefficientSystem,
    pub fixed: Vec<FixedSubalgebra>,
    /// `ψ_g : g^K → g^H` for each morphism `ĝ : G/H → G/K`.
    pub restrictions: Vec<AlgebraMorphism>,
    spaces: Vec<OnceLock<InvariantCochainSpace>>,
    coboundaries: Vec<OnceLock<Matrix>>,
}

/// Equivariant cohomology in one degree, with the invariant-space data the
/// reports need.
#[derive(Debug, Clone)]
pub struct EquivariantCohomology {
    /// Bases and representatives in ambient coordinates.
    pub result: CohomologyResult,
    pub invariant_dim: usize,
    pub ambient_dim: usize,
}

impl EquivariantComplex {
    pub fn new(action: &GroupAction, coefficients: &CoefficientSystem) -> Result<Self> {
        let violations = action.validate();
        if let Some(v) = violations.first() {
            return Err(Error::Validation(format!("group action: {v}")));
        }
        if coefficients.orbit.group != action.group {
            return Err(Error::Invalid("coefficient system built for a different group".into()));
        }
        if coefficients.field() != action.algebra.field() {
            return Err(Error::FieldMismatch(format!(
                "coefficients over {}, algebra over {}",
                coefficients.field(),
                action.algebra.field()
            )));
        }
        let orbit = &coefficients.orbit;
        let fixed = orbit
            .subgroups
            .iter()
            .map(|s| fixed_subalgebra(action, s))
            .collect::<Result<Vec<_>>>()?;
        let restrictions = orbit
            .morphisms
            .iter()
            .map(|m| restriction_map(action, &fixed[m.target], &fixed[m.source], m.element))
            .collect::<Result<Vec<_>>>()?;
        Ok(EquivariantComplex {
            action: action.clone(),
            coefficients: coefficients.clone(),
            fixed,
            restrictions,
            spaces: (0..=MAX_DEGREE + 1).map(|_| OnceLock::new()).collect(),
            coboundaries: (0..=MAX_DEGREE).map(|_| OnceLock::new()).collect(),
        })
    }

    /// The trivial group with constant coefficients: `S•_G` is the ordinary
    /// cochain complex with coefficients in `K`.
    pub fn nonequivariant(alg: &crate::algebra::LeibnizAlgebra) -> Result<Self> {
        let action = GroupAction::trivial(alg);
        let coeffs = constant_coefficients(alg.field(), &action.group);
        EquivariantComplex::new(&action, &coeffs)
    }

    pub fn field(&self) -> Field {
        self.action.algebra.field()
    }

    pub fn orbit(&self) -> &OrbitCategory {
        &self.coefficients.orbit
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { degree: n, min: 0, max: MAX_DEGREE });
        }
        Ok(())
    }

    /// Size of `Hom((g^H)^{⊗n}, A(G/H))` for object `h`.
    pub fn block_dim(&self, h: usize, n: usize) -> usize {
        TensorSpace::new(self.fixed[h].dim(), n).dim() * self.coefficients.algebras[h].dim()
    }

    pub fn block_offsets(&self, n: usize) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.fixed.len() + 1);
        let mut acc = 0;
        for h in 0..self.fixed.len() {
            offsets.push(acc);
            acc += self.block_dim(h, n);
        }
        offsets.push(acc);
        offsets
    }

    pub fn ambient_dim(&self, n: usize) -> usize {
        *self.block_offsets(n).last().expect("nonempty")
    }

    pub fn to_ambient(&self, c: &EquivariantCochain) -> Vector {
        c.components.iter().flatten().cloned().collect()
    }

    pub fn from_ambient(&self, n: usize, v: &[Scalar]) -> EquivariantCochain {
        let offsets = self.block_offsets(n);
        EquivariantCochain {
            degree: n,
            components: offsets.windows(2).map(|w| v[w[0]..w[1]].to_vec()).collect(),
        }
    }

    /// Rows expressing `c_H ∘ ψ_g^{⊗n} - A(ĝ) ∘ c_K = 0` for one morphism.
    fn constraint_block(&self, n: usize, morphism: usize, offsets: &[usize]) -> Matrix {
        let field = self.field();
        let mor = self.orbit().morphisms[morphism];
        let (h, k) = (mor.source, mor.target);
        let psi = self.restrictions[morphism].matrix.kron_power(n);
        let coeff_map = &self.coefficients.maps[morphism];
        let (a_h, a_k) = (self.coefficients.algebras[h].dim(), self.coefficients.algebras[k].dim());
        let (t_h, t_k) = (psi.rows(), psi.cols());
        let mut block = Matrix::zeros(field, t_k * a_h, offsets[offsets.len() - 1]);
        for s in 0..t_k {
            for alpha in 0..a_h {
                let row = s * a_h + alpha;
                for t in 0..t_h {
                    let x = psi.get(t, s);
                    if !x.is_zero() {
                        block.add_to(row, offsets[h] + t * a_h + alpha, x);
                    }
                }
                for beta in 0..a_k {
                    let y = coeff_map.get(alpha, beta);
                    if !y.is_zero() {
                        block.add_to(row, offsets[k] + s * a_k + beta, &-y);
                    }
                }
            }
        }
        block
    }

    /// The stacked invariance constraints for the given morphisms.
    pub fn constraint_matrix(&self, n: usize, morphisms: &[usize]) -> Matrix {
        let offsets = self.block_offsets(n);
        let blocks: Vec<Matrix> = morphisms.iter().map(|&m| self.constraint_block(n, m, &offsets)).collect();
        Matrix::vstack(self.field(), offsets[offsets.len() - 1], &blocks)
    }

    /// `S^n_G` computed from the constraints of the given morphisms only.
    pub fn invariant_space_from(&self, n: usize, morphisms: &[usize]) -> InvariantCochainSpace {
        let system = self.constraint_matrix(n, morphisms);
        let (basis, free_columns) = kernel_basis_with_free_columns(&system);
        InvariantCochainSpace {
            degree: n,
            ambient_dim: system.cols(),
            basis,
            free_columns,
        }
    }

    /// `S^n_G`, constrained by every morphism of the orbit category.
    pub fn invariant_cochain_basis(&self, n: usize) -> Result<&InvariantCochainSpace> {
        self.check_degree(n.saturating_sub(1))?;
        Ok(self.spaces[n].get_or_init(|| {
            let all: Vec<usize> = (0..self.orbit().morphisms.len()).collect();
            self.invariant_space_from(n, &all)
        }))
    }

    /// The first morphism whose invariance constraint `v` violates, with the
    /// residual `c_H ∘ ψ_g^{⊗n} - A(ĝ) ∘ c_K`.
    pub fn invariance_violation(&self, n: usize, v: &[Scalar]) -> Option<(usize, Vector)> {
        let offsets = self.block_offsets(n);
        (0..self.orbit().morphisms.len()).find_map(|m| {
            let residual = self.constraint_block(n, m, &offsets).mul_vec(v);
            (!is_zero_vector(&residual)).then_some((m, residual))
        })
    }

    /// `⊕_H δ_H : S^n → S^{n+1}` on ambient coordinates.
    pub fn ambient_coboundary(&self, n: usize) -> Result<Matrix> {
        self.check_degree(n)?;
        let field = self.field();
        let (src, dst) = (self.block_offsets(n), self.block_offsets(n + 1));
        let mut out = Matrix::zeros(field, dst[dst.len() - 1], src[src.len() - 1]);
        for (h, fixed) in self.fixed.iter().enumerate() {
            let delta = coboundary_matrix(&fixed.algebra, &self.coefficients.algebras[h], n)?;
            for i in 0..delta.rows() {
                for j in 0..delta.cols() {
                    let x = delta.get(i, j);
                    if !x.is_zero() {
                        out.set(dst[h] + i, src[h] + j, x.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// `δ : S^n_G → S^{n+1}_G` in the two invariant bases. Fails if some
    /// invariant cochain is sent outside `S^{n+1}_G`.
    pub fn equivariant_coboundary(&self, n: usize) -> Result<&Matrix> {
        self.check_degree(n)?;
        if let Some(m) = self.coboundaries[n].get() {
            return Ok(m);
        }
        let ambient = self.ambient_coboundary(n)?;
        let source = self.invariant_cochain_basis(n)?;
        let target = self.invariant_cochain_basis(n + 1)?;
        let mut columns = Vec::with_capacity(source.dim());
        for (i, b) in source.basis.iter().enumerate() {
            let image = ambient.mul_vec(b);
            let coords = target.coordinates(&image).ok_or_else(|| {
                let (m, _) = self.invariance_violation(n + 1, &image).unwrap_or((usize::MAX, vec![]));
                Error::Internal(format!(
                    "δ of invariant basis cochain {i} in degree {n} is not invariant (morphism {m}): [{}]",
                    render(&image)
                ))
            })?;
            columns.push(coords);
        }
        let matrix = Matrix::from_columns(self.field(), target.dim(), &columns)?;
        Ok(self.coboundaries[n].get_or_init(|| matrix))
    }

    /// `HL^n_G(g; A)` from the complex `S•_G`.
    pub fn equivariant_cohomology(&self, n: usize) -> Result<EquivariantCohomology> {
        self.check_degree(n)?;
        let outgoing = self.equivariant_coboundary(n)?;
        let incoming = if n == 0 { None } else { Some(self.equivariant_coboundary(n - 1)?) };
        let local = cohomology_of(n, outgoing, incoming)?;
        let space = self.invariant_cochain_basis(n)?;
        let field = self.field();
        let lift = |vs: &[Vector]| -> Vec<Vector> {
            vs.iter()
                .map(|c| crate::linalg::combine(field, space.ambient_dim, c, &space.basis))
                .collect()
        };
        Ok(EquivariantCohomology {
            result: CohomologyResult {
                degree: n,
                cochain_dim: space.ambient_dim,
                cocycle_basis: lift(&local.cocycle_basis),
                coboundary_basis: lift(&local.coboundary_basis),
                betti: local.betti,
                representatives: lift(&local.representatives),
            },
            invariant_dim: space.dim(),
            ambient_dim: space.ambient_dim,
        })
    }

    /// Whether an ambient cochain is `δ` of an invariant cochain one degree down.
    pub fn is_coboundary(&self, n: usize, v: &[Scalar]) -> Result<bool> {
        if n == 0 {
            return Ok(is_zero_vector(v));
        }
        Ok(crate::linalg::in_span(v, &self.coboundary_span(n)?)?.is_some())
    }

    /// `δ(S^{n-1}_G)` as ambient degree-`n` vectors, one per invariant basis
    /// cochain of degree `n - 1` (not reduced to a basis).
    pub fn coboundary_span(&self, n: usize) -> Result<Vec<Vector>> {
        if n == 0 {
            return Ok(Vec::new());
        }
        let delta = self.equivariant_coboundary(n - 1)?;
        let space = self.invariant_cochain_basis(n)?;
        let field = self.field();
        Ok(delta
            .columns()
            .iter()
            .map(|c| crate::linalg::combine(field, space.ambient_dim, c, &space.basis))
            .collect())
    }

    /// Residual of `δ(v)` against zero; used to confirm cocycles.
    pub fn is_cocycle(&self, n: usize, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vector(&self.ambient_coboundary(n)?.mul_vec(v)))
    }

    /// Checks invariance and returns a descriptive error for the first violated constraint.
    pub fn require_invariant(&self, c: &EquivariantCochain) -> Result<()> {
        let v = self.to_ambient(c);
        if v.len() != self.ambient_dim(c.degree) {
            return Err(Error::DimensionMismatch {
                context: "equivariant cochain".into(),
                expected: self.ambient_dim(c.degree),
                found: v.len(),
            });
        }
        match self.invariance_violation(c.degree, &v) {
            None => Ok(()),
            Some((m, residual)) => {
                let mor = self.orbit().morphisms[m];
                Err(Error::NotInvariant(format!(
                    "constraint of morphism {m} (H{} -> H{}, g = {}) has residual [{}]",
                    mor.source + 1,
                    mor.target + 1,
                    mor.element,
                    render(&residual)
                )))
            }
        }
    }

    /// Difference of two ambient cochains, a small convenience for checks.
    pub fn difference(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        sub_vectors(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LeibnizAlgebra;
    use crate::complexes::cohomology;

    fn q() -> Field {
        Field::Rational
    }

    fn qv(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q().int(x)).collect()
    }

    fn lambda6() -> LeibnizAlgebra {
        LeibnizAlgebra::from_brackets(q(), 3, &[(0, 2, qv(&[0, 1, 0])), (2, 2, qv(&[1, 0, 0]))]).unwrap()
    }

    fn lambda6_z2() -> GroupAction {
        GroupAction::new(
            FiniteGroup::cyclic(2),
            lambda6(),
            vec![Matrix::identity(q(), 3), Matrix::diagonal(q(), &[1, -1, -1])],
        )
        .unwrap()
    }

    #[test]
    fn constant_coefficients_are_identities() {
        let a = constant_coefficients(q(), &FiniteGroup::cyclic(2));
        assert_eq!(a.algebras.len(), 2);
        assert_eq!(a.maps.len(), 4);
        assert!(a.maps.iter().all(|m| m.is_identity() && m.rows() == 1));
        assert!(a.check().is_empty());
        let t = constant_coefficients(q(), &FiniteGroup::trivial());
        assert_eq!(t.algebras.len(), 1);
    }

    #[test]
    fn coset_functions_on_z2() {
        let g = FiniteGroup::cyclic(2);
        let a = coset_function_coefficients(q(), &g);
        assert_eq!(a.algebras[0].dim(), 2);
        assert_eq!(a.algebras[1].dim(), 1);
        let swap = a.orbit.find(0, 0, 1).unwrap();
        assert_eq!(a.maps[swap], Matrix::from_ints(q(), &[&[0, 1], &[1, 0]]));
        for (m, mor) in a.maps.iter().zip(&a.orbit.morphisms) {
            assert_eq!(&m.mul_vec(a.algebras[mor.target].unit()), a.algebras[mor.source].unit());
        }
        assert!(a.check().is_empty());
    }

    #[test]
    fn coset_functions_on_s3_are_functorial() {
        let (s3, _) = FiniteGroup::symmetric(3);
        assert!(coset_function_coefficients(q(), &s3).check().is_empty());
    }

    #[test]
    fn broken_coefficient_map_is_reported() {
        let g = FiniteGroup::cyclic(2);
        let mut a = coset_function_coefficients(q(), &g);
        let swap = a.orbit.find(0, 0, 1).unwrap();
        // linear but not multiplicative
        a.maps[swap] = Matrix::from_ints(q(), &[&[1, 0], &[1, 1]]);
        let violations = a.check();
        assert!(violations.iter().any(|v| v.morphisms == vec![swap]));
    }

    #[test]
    fn trivial_group_invariants_are_everything() {
        let c = EquivariantComplex::nonequivariant(&lambda6()).unwrap();
        for n in 0..=3 {
            assert_eq!(c.invariant_cochain_basis(n).unwrap().dim(), 3usize.pow(n as u32));
        }
    }

    #[test]
    fn lambda6_z2_degree_one_invariants() {
        let g = FiniteGroup::cyclic(2);
        let c = EquivariantComplex::new(&lambda6_z2(), &constant_coefficients(q(), &g)).unwrap();
        let s1 = c.invariant_cochain_basis(1).unwrap();
        assert_eq!(s1.dim(), 1);
        // c_e = e1^*, c_G = its restriction to span(e1)
        let cochain = c.from_ambient(1, &s1.basis[0]);
        let first = cochain.components[0][0].clone();
        assert!(!first.is_zero());
        assert!(cochain.components[0][1].is_zero() && cochain.components[0][2].is_zero());
        assert_eq!(cochain.components[1], vec![first]);
        assert_eq!(c.invariant_cochain_basis(0).unwrap().dim(), 1);
    }

    #[test]
    fn lambda6_z2_coboundary_of_generator() {
        let g = FiniteGroup::cyclic(2);
        let c = EquivariantComplex::new(&lambda6_z2(), &constant_coefficients(q(), &g)).unwrap();
        let delta = c.equivariant_coboundary(1).unwrap();
        assert_eq!(delta.cols(), 1);
        assert!(!delta.is_zero());
        let s1 = c.invariant_cochain_basis(1).unwrap();
        let image = c.ambient_coboundary(1).unwrap().mul_vec(&s1.basis[0]);
        let comp = c.from_ambient(2, &image);
        // (δc)_e(e3, e3) = c([e3, e3]) = c(e1)
        let idx = TensorSpace::new(3, 2).index(&[2, 2]);
        assert_eq!(comp.components[0][idx], s1.basis[0][0]);
    }

    #[test]
    fn trivial_group_matches_nonequivariant() {
        let g = lambda6();
        let c = EquivariantComplex::nonequivariant(&g).unwrap();
        let k = CoefficientAlgebra::ground(q());
        for n in 0..=3 {
            let e = c.equivariant_cohomology(n).unwrap().result;
            let plain = cohomology(&g, &k, n).unwrap();
            assert_eq!(e.betti, plain.betti);
            assert_eq!(e.cocycle_basis.len(), plain.cocycle_basis.len());
            assert_eq!(e.coboundary_basis.len(), plain.coboundary_basis.len());
            assert_eq!(c.equivariant_coboundary(n).unwrap(), &coboundary_matrix(&g, &k, n).unwrap());
        }
    }

    #[test]
    fn abelian_coboundaries_vanish() {
        let g = LeibnizAlgebra::abelian(q(), 2);
        let act = GroupAction::new(
            FiniteGroup::cyclic(2),
            g,
            vec![Matrix::identity(q(), 2), Matrix::from_ints(q(), &[&[0, 1], &[1, 0]])],
        )
        .unwrap();
        let c = EquivariantComplex::new(&act, &coset_function_coefficients(q(), &act.group)).unwrap();
        for n in 0..=2 {
            assert!(c.equivariant_coboundary(n).unwrap().is_zero());
        }
    }

    #[test]
    fn non_invariant_cochain_rejected() {
        let g = FiniteGroup::cyclic(2);
        let c = EquivariantComplex::new(&lambda6_z2(), &constant_coefficients(q(), &g)).unwrap();
        // e2^* on G/e is not fixed by ψ_σ
        let bad = EquivariantCochain { degree: 1, components: vec![qv(&[0, 1, 0]), qv(&[0])] };
        assert!(matches!(c.require_invariant(&bad), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn invalid_action_rejected() {
        let act = GroupAction::new(
            FiniteGroup::cyclic(2),
            lambda6(),
            vec![Matrix::identity(q(), 3), Matrix::diagonal(q(), &[-1, 1, 1])],
        )
        .unwrap();
        let coeffs = constant_coefficients(q(), &act.group);
        assert!(matches!(EquivariantComplex::new(&act, &coeffs), Err(Error::Validation(_))));
    }
}
