//! Finite groups from multiplication tables, their orbit categories, and
//! actions on Leibniz algebras by automorphisms.
//!
//! Elements are `0..order` with `0` the identity. Left actions and left
//! cosets throughout: the orbit-category morphism `ĝ : G/H → G/K` sends
//! `aH ↦ agK` and exists iff `g⁻¹Hg ⊆ K`.

use std::collections::{BTreeSet, HashMap};

use crate::algebra::{render, AlgebraMorphism, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{in_span, Matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table: entries in range, `0` a two-sided
    /// identity, associativity on all triples, and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("group table is empty".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    context: format!("group table row {}", a + 1),
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::Invalid(format!("group table entry {bad} out of range")));
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::Validation(format!("element 0 is not an identity for {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Validation(format!(
                            "multiplication is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse.push(b),
                None => return Err(Error::Validation(format!("element {a} has no inverse"))),
            }
        }
        Ok(FiniteGroup { table, inverse })
    }

    pub fn trivial() -> Self {
        FiniteGroup { table: vec![vec![0]], inverse: vec![0] }
    }

    /// `Z/n` with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(table).expect("cyclic table is a group")
    }

    /// The group generated by the given permutations of `0..degree`,
    /// together with the permutation of each element. Element 0 is the
    /// identity; the rest follow breadth-first discovery order.
    pub fn generated_by_permutations(degree: usize, generators: &[Vec<usize>]) -> (Self, Vec<Vec<usize>>) {
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(elements[0].clone(), 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let p = compose_perm(g, &elements[i]);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            i += 1;
        }
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose_perm(a, b)]).collect())
            .collect();
        let group = FiniteGroup::from_table(table).expect("permutations form a group");
        (group, elements)
    }

    /// `S_n` acting on `0..n`, elements in lexicographic order of their
    /// one-line notation (so the identity comes first).
    pub fn symmetric(n: usize) -> (Self, Vec<Vec<usize>>) {
        let mut perms = vec![(0..n).collect::<Vec<_>>()];
        while let Some(next) = next_permutation(perms.last().expect("nonempty")) {
            perms.push(next);
        }
        let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index[&compose_perm(a, b)]).collect())
            .collect();
        (FiniteGroup::from_table(table).expect("S_n is a group"), perms)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Smallest subgroup containing `generators`.
    pub fn closure(&self, generators: &[usize]) -> Subgroup {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier: Vec<usize> = generators.to_vec();
        while let Some(g) = frontier.pop() {
            if !set.insert(g) {
                continue;
            }
            let current: Vec<usize> = set.iter().copied().collect();
            for h in current {
                for x in [self.mul(g, h), self.mul(h, g)] {
                    if !set.contains(&x) {
                        frontier.push(x);
                    }
                }
            }
        }
        Subgroup(set.into_iter().collect())
    }

    /// Whether `g⁻¹ H g ⊆ K`.
    pub fn subconjugate(&self, h: &Subgroup, k: &Subgroup, g: usize) -> bool {
        let gi = self.inv(g);
        h.elements().iter().all(|&x| k.contains(self.mul(self.mul(gi, x), g)))
    }

    /// The left coset `gK` as a sorted list.
    pub fn left_coset(&self, g: usize, k: &Subgroup) -> Vec<usize> {
        let mut c: Vec<usize> = k.elements().iter().map(|&x| self.mul(g, x)).collect();
        c.sort_unstable();
        c
    }

    /// Left cosets of `k`, each sorted, ordered by least element.
    pub fn left_cosets(&self, k: &Subgroup) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if !seen[g] {
                let c = self.left_coset(g, k);
                for &x in &c {
                    seen[x] = true;
                }
                out.push(c);
            }
        }
        out
    }
}

// (a ∘ b)(i) = a(b(i))
fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn next_permutation(p: &[usize]) -> Option<Vec<usize>> {
    let mut p = p.to_vec();
    let i = (1..p.len()).rev().find(|&i| p[i - 1] < p[i])? - 1;
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i])?;
    p.swap(i, j);
    p[i + 1..].reverse();
    Some(p)
}

/// A subgroup as a sorted list of elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup(Vec<usize>);

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.0.binary_search(&g).is_ok()
    }

    /// Whether a subset is a subgroup of `group` (contains 0, closed under
    /// products and inverses).
    pub fn is_subgroup_of(elements: &[usize], group: &FiniteGroup) -> bool {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        set.contains(&0)
            && set.iter().all(|&a| set.contains(&group.inv(a)))
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&group.mul(a, b))))
    }
}

/// Every subgroup exactly once, sorted by (order, elements).
pub fn enumerate_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::from([group.closure(&[])]);
    let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
    // every subgroup is reached by adjoining one element at a time
    while let Some(s) = frontier.pop() {
        for g in 0..group.order() {
            if s.contains(g) {
                continue;
            }
            let mut gens = s.elements().to_vec();
            gens.push(g);
            let t = group.closure(&gens);
            if found.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    out
}

/// `ĝ : G/H → G/K`, indices into [`OrbitCategory::subgroups`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitMorphism {
    pub source: usize,
    pub target: usize,
    /// Least element of the coset `gK`.
    pub element: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCategory {
    pub group: FiniteGroup,
    pub subgroups: Vec<Subgroup>,
    pub morphisms: Vec<OrbitMorphism>,
    lookup: HashMap<OrbitMorphism, usize>,
}

impl OrbitCategory {
    pub fn new(group: &FiniteGroup) -> Self {
        let subgroups = enumerate_subgroups(group);
        let mut morphisms = Vec::new();
        for (hi, h) in subgroups.iter().enumerate() {
            for (ki, k) in subgroups.iter().enumerate() {
                let mut reps = BTreeSet::new();
                for g in 0..group.order() {
                    if group.subconjugate(h, k, g) {
                        reps.insert(group.left_coset(g, k)[0]);
                    }
                }
                morphisms.extend(reps.into_iter().map(|element| OrbitMorphism {
                    source: hi,
                    target: ki,
                    element,
                }));
            }
        }
        let lookup = morphisms.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        OrbitCategory {
            group: group.clone(),
            subgroups,
            morphisms,
            lookup,
        }
    }

    pub fn object_count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn index_of_subgroup(&self, s: &Subgroup) -> Option<usize> {
        self.subgroups.iter().position(|t| t == s)
    }

    /// Index of the morphism `(source, target, g)` after canonicalising `g`.
    pub fn find(&self, source: usize, target: usize, g: usize) -> Option<usize> {
        let element = self.group.left_coset(g, &self.subgroups[target])[0];
        self.lookup.get(&OrbitMorphism { source, target, element }).copied()
    }

    pub fn identity(&self, object: usize) -> usize {
        self.find(object, object, 0).expect("identity morphisms are present")
    }

    pub fn is_identity(&self, m: usize) -> bool {
        let m = self.morphisms[m];
        m.source == m.target && m.element == 0
    }

    /// `second ∘ first` for `first : G/H → G/K`, `second : G/K → G/L`:
    /// `aH ↦ a g K ↦ a g k L`.
    pub fn compose(&self, first: usize, second: usize) -> Option<usize> {
        let f = self.morphisms[first];
        let s = self.morphisms[second];
        if f.target != s.source {
            return None;
        }
        let g = self.group.mul(f.element, s.element);
        Some(self.find(f.source, s.target, g).expect("composites are morphisms"))
    }

    /// Greedy generating set: non-identity morphisms not already produced
    /// by composing earlier picks.
    pub fn generating_morphisms(&self) -> Vec<usize> {
        let mut reached: BTreeSet<usize> = (0..self.object_count()).map(|o| self.identity(o)).collect();
        let mut picks = Vec::new();
        for m in 0..self.morphisms.len() {
            if reached.contains(&m) {
                continue;
            }
            picks.push(m);
            reached.insert(m);
            loop {
                let current: Vec<usize> = reached.iter().copied().collect();
                let mut grew = false;
                for &a in &current {
                    for &b in &current {
                        if let Some(c) = self.compose(a, b) {
                            grew |= reached.insert(c);
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
        }
        picks
    }
}

pub fn orbit_category(group: &FiniteGroup) -> OrbitCategory {
    OrbitCategory::new(group)
}

/// `G` acting on a Leibniz algebra; `matrices[g]` has the images of the
/// basis as columns.
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub group: FiniteGroup,
    pub algebra: LeibnizAlgebra,
    pub matrices: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionViolation {
    IdentityNotTrivial,
    NotHomomorphism { left: usize, right: usize },
    NotInvertible { element: usize },
    NotEquivariant { element: usize, pair: (usize, usize) },
}

impl std::fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ActionViolation::IdentityNotTrivial => write!(f, "identity element does not act as the identity"),
            ActionViolation::NotHomomorphism { left, right } => {
                write!(f, "psi_{left} psi_{right} != psi_({left}*{right})")
            }
            ActionViolation::NotInvertible { element } => write!(f, "psi_{element} is not invertible"),
            ActionViolation::NotEquivariant { element, pair } => write!(
                f,
                "psi_{element}[e{}, e{}] != [psi_{element} e{}, psi_{element} e{}]",
                pair.0 + 1,
                pair.1 + 1,
                pair.0 + 1,
                pair.1 + 1
            ),
        }
    }
}

impl GroupAction {
    pub fn new(group: FiniteGroup, algebra: LeibnizAlgebra, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::DimensionMismatch {
                context: "action matrices".into(),
                expected: group.order(),
                found: matrices.len(),
            });
        }
        for (g, m) in matrices.iter().enumerate() {
            if m.rows() != algebra.dim() || m.cols() != algebra.dim() {
                return Err(Error::DimensionMismatch {
                    context: format!("action matrix of element {g}"),
                    expected: algebra.dim(),
                    found: m.rows().max(m.cols()),
                });
            }
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch(format!("action matrix {g} over {}", m.field())));
            }
        }
        Ok(GroupAction { group, algebra, matrices })
    }

    /// The trivial group acting trivially.
    pub fn trivial(algebra: &LeibnizAlgebra) -> Self {
        GroupAction {
            group: FiniteGroup::trivial(),
            algebra: algebra.clone(),
            matrices: vec![Matrix::identity(algebra.field(), algebra.dim())],
        }
    }

    pub fn psi(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    /// Checks the four action axioms; empty means valid.
    pub fn validate(&self) -> Vec<ActionViolation> {
        let mut out = Vec::new();
        if !self.matrices[0].is_identity() {
            out.push(ActionViolation::IdentityNotTrivial);
        }
        let n = self.group.order();
        for a in 0..n {
            for b in 0..n {
                if self.matrices[a].mul(&self.matrices[b]) != self.matrices[self.group.mul(a, b)] {
                    out.push(ActionViolation::NotHomomorphism { left: a, right: b });
                }
            }
        }
        for g in 0..n {
            if self.matrices[g].rank() < self.algebra.dim() {
                out.push(ActionViolation::NotInvertible { element: g });
            }
            let morphism = AlgebraMorphism {
                source: self.algebra.clone(),
                target: self.algebra.clone(),
                matrix: self.matrices[g].clone(),
            };
            for v in morphism.check() {
                out.push(ActionViolation::NotEquivariant { element: g, pair: v.pair });
            }
        }
        out
    }
}

pub fn validate_action(action: &GroupAction) -> Vec<ActionViolation> {
    action.validate()
}

/// `g^H` with its chosen basis and induced bracket.
#[derive(Debug, Clone)]
pub struct FixedSubalgebra {
    pub subgroup: Subgroup,
    /// Basis of `g^H` as columns in the coordinates of `g`.
    pub inclusion: Matrix,
    pub algebra: LeibnizAlgebra,
}

impl FixedSubalgebra {
    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }
}

pub fn fixed_subalgebra(action: &GroupAction, subgroup: &Subgroup) -> Result<FixedSubalgebra> {
    let g = &action.algebra;
    let field = g.field();
    let n = g.dim();
    let id = Matrix::identity(field, n);
    let blocks: Vec<Matrix> = subgroup
        .elements()
        .iter()
        .filter(|&&h| h != 0)
        .map(|&h| action.psi(h).sub(&id))
        .collect();
    let system = Matrix::vstack(field, n, &blocks);
    let basis = system.kernel_basis();
    let inclusion = Matrix::from_columns(field, n, &basis)?;
    let algebra = g.induced_on(&inclusion)?;
    Ok(FixedSubalgebra {
        subgroup: subgroup.clone(),
        inclusion,
        algebra,
    })
}

/// `ψ_g : g^K → g^H` in the chosen bases, for a morphism `ĝ : G/H → G/K`.
pub fn restriction_map(
    action: &GroupAction,
    source_fixed: &FixedSubalgebra,
    target_fixed: &FixedSubalgebra,
    element: usize,
) -> Result<AlgebraMorphism> {
    // source_fixed = g^K (domain of ψ_g), target_fixed = g^H
    let target_basis = target_fixed.inclusion.columns();
    let field = action.algebra.field();
    let mut columns = Vec::with_capacity(source_fixed.dim());
    for v in source_fixed.inclusion.columns() {
        let image = action.psi(element).mul_vec(&v);
        let coords = in_span(&image, &target_basis)?.ok_or_else(|| {
            Error::Internal(format!(
                "psi_{element} maps a fixed vector outside the target fixed subalgebra: [{}]",
                render(&image)
            ))
        })?;
        columns.push(coords);
    }
    let matrix = Matrix::from_columns(field, target_fixed.dim(), &columns)?;
    AlgebraMorphism::new(source_fixed.algebra.clone(), target_fixed.algebra.clone(), matrix)
}
