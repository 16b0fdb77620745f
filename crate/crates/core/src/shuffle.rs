//! Shuffles, the operators ρ and τ, the cup product on invariant cochains,
//! and the free zinbiel algebra.
//!
//! Permutations are 0-based image vectors: `perm[i] = σ(i)`. A permutation
//! acts on tensor words by moving the letter in slot `i` to slot `σ(i)`, so
//! `σ(v_1…v_n) = v_{σ⁻¹(1)}…v_{σ⁻¹(n)}`. This is a left action: acting by
//! `τ` and then by `σ` is acting by `σ∘τ`.

use std::collections::BTreeMap;

use crate::complexes::{CoefficientAlgebra, TensorSpace, MAX_DEGREE};
use crate::equivariant::{EquivariantCochain, EquivariantComplex};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{is_zero_vector, sub_vectors, zero_vector, Matrix, Vector};

pub type Permutation = Vec<usize>;

/// Linear combination of words with scalar coefficients, zero terms dropped.
pub type WordCombination = BTreeMap<Vec<usize>, Scalar>;

fn add_term(map: &mut BTreeMap<Vec<usize>, Scalar>, key: Vec<usize>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(x) => {
            *x += &c;
            if x.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, c);
        }
    }
}

pub fn identity_permutation(n: usize) -> Permutation {
    (0..n).collect()
}

pub fn inverse_permutation(p: &[usize]) -> Permutation {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// `(σ∘τ)(i) = σ(τ(i))`.
pub fn compose_permutations(sigma: &[usize], tau: &[usize]) -> Permutation {
    tau.iter().map(|&t| sigma[t]).collect()
}

/// `+1` or `-1` by inversion count.
pub fn sign(p: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `σ · w`: the letter in slot `i` moves to slot `σ(i)`.
pub fn permute_word(sigma: &[usize], word: &[usize]) -> Vec<usize> {
    let mut out = vec![0; word.len()];
    for (i, &letter) in word.iter().enumerate() {
        out[sigma[i]] = letter;
    }
    out
}

/// The `(p,q)`-shuffles: `σ(0) < … < σ(p-1)` and `σ(p) < … < σ(p+q-1)`,
/// ordered lexicographically by the image of the first block.
pub fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, chosen: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if chosen.len() == p {
            let mut perm = chosen.clone();
            perm.extend((0..n).filter(|x| !chosen.contains(x)));
            out.push(perm);
            return;
        }
        for x in start..n {
            chosen.push(x);
            rec(x + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, p, &mut chosen, &mut out);
    out
}

/// An element of the group algebra `K[S_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSum {
    field: Field,
    degree: usize,
    terms: BTreeMap<Permutation, Scalar>,
}

impl PermutationSum {
    pub fn zero(field: Field, degree: usize) -> Self {
        PermutationSum { field, degree, terms: BTreeMap::new() }
    }

    pub fn identity(field: Field, degree: usize) -> Self {
        Self::single(field, identity_permutation(degree), field.one())
    }

    pub fn single(field: Field, perm: Permutation, coeff: Scalar) -> Self {
        let mut s = Self::zero(field, perm.len());
        add_term(&mut s.terms, perm, coeff);
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, perm: &[usize]) -> Scalar {
        self.terms.get(perm).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &PermutationSum) -> PermutationSum {
        self.add_scaled(other, &self.field.one())
    }

    pub fn add_scaled(&self, other: &PermutationSum, c: &Scalar) -> PermutationSum {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (p, x) in &other.terms {
            add_term(&mut out.terms, p.clone(), c * x);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> PermutationSum {
        let mut out = Self::zero(self.field, self.degree);
        for (p, x) in &self.terms {
            add_term(&mut out.terms, p.clone(), c * x);
        }
        out
    }

    /// Group-algebra product: acting by `other` and then by `self`.
    pub fn compose(&self, other: &PermutationSum) -> PermutationSum {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = Self::zero(self.field, self.degree);
        for (s, x) in &self.terms {
            for (t, y) in &other.terms {
                add_term(&mut out.terms, compose_permutations(s, t), x * y);
            }
        }
        out
    }

    /// `Id_k ⊗ self`.
    pub fn shifted(&self, k: usize) -> PermutationSum {
        let mut out = Self::zero(self.field, self.degree + k);
        for (s, x) in &self.terms {
            let perm = (0..k).chain(s.iter().map(|&i| i + k)).collect();
            add_term(&mut out.terms, perm, x.clone());
        }
        out
    }

    /// `self ⊗ Id_k`.
    pub fn extended(&self, k: usize) -> PermutationSum {
        let n = self.degree;
        let mut out = Self::zero(self.field, n + k);
        for (s, x) in &self.terms {
            let perm = s.iter().copied().chain(n..n + k).collect();
            add_term(&mut out.terms, perm, x.clone());
        }
        out
    }

    pub fn apply_to_word(&self, word: &[usize]) -> WordCombination {
        assert_eq!(word.len(), self.degree, "word length");
        let mut out = WordCombination::new();
        for (s, x) in &self.terms {
            add_term(&mut out, permute_word(s, word), x.clone());
        }
        out
    }
}

/// `sh_{p,q}`: the sum of all `(p,q)`-shuffles.
pub fn shuffle_sum(field: Field, p: usize, q: usize) -> PermutationSum {
    let mut out = PermutationSum::zero(field, p + q);
    for s in shuffles(p, q) {
        add_term(&mut out.terms, s, field.one());
    }
    out
}

/// The anti-homomorphism `σ ↦ sgn(σ) σ⁻¹`.
pub fn tilde(s: &PermutationSum) -> PermutationSum {
    let mut out = PermutationSum::zero(s.field, s.degree);
    for (p, x) in &s.terms {
        add_term(&mut out.terms, inverse_permutation(p), if sign(p) == 1 { x.clone() } else { -x });
    }
    out
}

/// `ρ_{p,q} = Id_1 ⊗ tilde(sh_{p-1,q})`.
pub fn rho(field: Field, p: usize, q: usize) -> Result<PermutationSum> {
    if p == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, min: 1, max: usize::MAX });
    }
    Ok(tilde(&shuffle_sum(field, p - 1, q)).shifted(1))
}

/// `Σ sgn(σ) x_1 x_{σ(2)} … x_{σ(p+q)}` over `(p-1,q)`-shuffles, written
/// out directly as a cross-check of [`rho`].
pub fn rho_explicit(field: Field, p: usize, q: usize, word: &[usize]) -> Result<WordCombination> {
    if p == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, min: 1, max: usize::MAX });
    }
    if word.len() != p + q {
        return Err(Error::DimensionMismatch { context: "rho word".into(), expected: p + q, found: word.len() });
    }
    let mut out = WordCombination::new();
    for s in shuffles(p - 1, q) {
        let mut w = vec![word[0]];
        w.extend(s.iter().map(|&i| word[i + 1]));
        add_term(&mut out, w, field.int(sign(&s)));
    }
    Ok(out)
}

/// `τ_{p,q}(xy) = yx` for `x` of length `p` and `y` of length `q`.
pub fn tau(field: Field, p: usize, q: usize) -> PermutationSum {
    let perm = (0..p).map(|j| q + j).chain(0..q).collect();
    PermutationSum::single(field, perm, field.one())
}

/// A [`PermutationSum`] realized as a matrix on `TensorSpace(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorEndomorphism {
    pub base_dim: usize,
    pub degree: usize,
    pub matrix: Matrix,
}

impl TensorEndomorphism {
    pub fn from_sum(sum: &PermutationSum, base_dim: usize) -> Self {
        let space = TensorSpace::new(base_dim, sum.degree);
        let mut matrix = Matrix::zeros(sum.field, space.dim(), space.dim());
        for (col, word) in space.words().enumerate() {
            for (w, c) in sum.apply_to_word(&word) {
                matrix.add_to(space.index(&w), col, &c);
            }
        }
        TensorEndomorphism { base_dim, degree: sum.degree, matrix }
    }

    pub fn compose(&self, other: &TensorEndomorphism) -> TensorEndomorphism {
        TensorEndomorphism { base_dim: self.base_dim, degree: self.degree, matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }
}

pub fn rho_operator(field: Field, p: usize, q: usize, base_dim: usize) -> Result<TensorEndomorphism> {
    Ok(TensorEndomorphism::from_sum(&rho(field, p, q)?, base_dim))
}

pub fn tau_operator(field: Field, p: usize, q: usize, base_dim: usize) -> TensorEndomorphism {
    TensorEndomorphism::from_sum(&tau(field, p, q), base_dim)
}

/// The two sides of the ρ-identity as group-algebra elements of degree `p+q+r`.
pub fn rho_identity_sides(field: Field, p: usize, q: usize, r: usize, flip_sign: bool) -> Result<(PermutationSum, PermutationSum)> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, min: 1, max: usize::MAX });
    }
    let lhs = rho(field, p, q)?.extended(r).compose(&rho(field, p + q, r)?);
    let outer = rho(field, p, q + r)?;
    let first = rho(field, q, r)?.shifted(p).compose(&outer);
    let second = tau(field, r, q).compose(&rho(field, r, q)?).shifted(p).compose(&outer);
    let mut s = if (r * q).is_multiple_of(2) { 1 } else { -1 };
    if flip_sign {
        s = -s;
    }
    Ok((lhs, first.add_scaled(&second, &field.int(s))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoIdentityVerdict {
    pub degrees: (usize, usize, usize),
    pub ok: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// Input word (distinct letters), output word where the sides differ,
    /// and the two coefficients there.
    pub first_failure: Option<(Vec<usize>, Vec<usize>, Scalar, Scalar)>,
}

/// Checks the ρ-identity on the word `0 1 … n-1` of distinct letters. The
/// symmetric group acts freely on such words, so this decides equality of
/// the operators on every tensor power of dimension at least `n`.
pub fn check_rho_identity(p: usize, q: usize, r: usize) -> Result<RhoIdentityVerdict> {
    check_rho_identity_with(p, q, r, false)
}

pub fn check_rho_identity_with(p: usize, q: usize, r: usize, flip_sign: bool) -> Result<RhoIdentityVerdict> {
    let field = Field::Rational;
    let (lhs, rhs) = rho_identity_sides(field, p, q, r, flip_sign)?;
    let word: Vec<usize> = (0..p + q + r).collect();
    let (l, rr) = (lhs.apply_to_word(&word), rhs.apply_to_word(&word));
    let first_failure = l
        .keys()
        .chain(rr.keys())
        .filter_map(|w| {
            let a = l.get(w).cloned().unwrap_or_else(|| field.zero());
            let b = rr.get(w).cloned().unwrap_or_else(|| field.zero());
            (a != b).then(|| (word.clone(), w.clone(), a, b))
        })
        .min_by(|x, y| x.1.cmp(&y.1));
    Ok(RhoIdentityVerdict {
        degrees: (p, q, r),
        ok: first_failure.is_none(),
        lhs_terms: lhs.support_size(),
        rhs_terms: rhs.support_size(),
        first_failure,
    })
}

/// The ρ-identity as dense matrices on `TensorSpace(m, p+q+r)`.
pub fn check_rho_identity_dense(p: usize, q: usize, r: usize, base_dim: usize, flip_sign: bool) -> Result<bool> {
    let field = Field::Rational;
    let (lhs, rhs) = rho_identity_sides(field, p, q, r, flip_sign)?;
    Ok(TensorEndomorphism::from_sum(&lhs, base_dim) == TensorEndomorphism::from_sum(&rhs, base_dim))
}

/// `μ ∘ (c ⊗ d) ∘ ρ_{p,q}` on one block, `c`, `d` in the layout of
/// [`crate::complexes`] over a base of dimension `base_dim`.
fn cup_block(coeffs: &CoefficientAlgebra, base_dim: usize, p: usize, c: &[Scalar], q: usize, d: &[Scalar]) -> Result<Vector> {
    let field = coeffs.field();
    let a = coeffs.dim();
    let (sp, sq, spq) = (TensorSpace::new(base_dim, p), TensorSpace::new(base_dim, q), TensorSpace::new(base_dim, p + q));
    let r = rho(field, p, q)?;
    let terms: Vec<(&Permutation, &Scalar)> = r.terms().collect();
    let mut out = zero_vector(field, spq.dim() * a);
    for (idx, word) in spq.words().enumerate() {
        let mut acc = zero_vector(field, a);
        for (perm, coeff) in &terms {
            let w = permute_word(perm, &word);
            let (i, j) = (sp.index(&w[..p]), sq.index(&w[p..]));
            let (cv, dv) = (&c[i * a..(i + 1) * a], &d[j * a..(j + 1) * a]);
            if is_zero_vector(cv) || is_zero_vector(dv) {
                continue;
            }
            let prod = coeffs.mul(cv, dv);
            crate::linalg::axpy(&mut acc, coeff, &prod);
        }
        out[idx * a..(idx + 1) * a].clone_from_slice(&acc);
    }
    Ok(out)
}

fn check_cup_degrees(p: usize, q: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::DegreeOutOfRange { degree: p.min(q), min: 1, max: MAX_DEGREE });
    }
    if p + q > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: p + q, min: 2, max: MAX_DEGREE });
    }
    Ok(())
}

/// Cup product of cochains on a single algebra with coefficients in `A`.
pub fn cup_nonequivariant(
    alg: &crate::algebra::LeibnizAlgebra,
    coeffs: &CoefficientAlgebra,
    p: usize,
    c: &[Scalar],
    q: usize,
    d: &[Scalar],
) -> Result<Vector> {
    check_cup_degrees(p, q)?;
    let m = alg.dim();
    for (deg, v) in [(p, c), (q, d)] {
        let expected = TensorSpace::new(m, deg).dim() * coeffs.dim();
        if v.len() != expected {
            return Err(Error::DimensionMismatch { context: format!("degree {deg} cochain"), expected, found: v.len() });
        }
    }
    cup_block(coeffs, m, p, c, q, d)
}

/// `c ∪ d = {μ_H ∘ (c_H ⊗ d_H) ∘ ρ_{p,q}}`. Both inputs must be invariant.
pub fn cup(complex: &EquivariantComplex, c: &EquivariantCochain, d: &EquivariantCochain) -> Result<EquivariantCochain> {
    check_cup_degrees(c.degree, d.degree)?;
    complex.require_invariant(c)?;
    complex.require_invariant(d)?;
    cup_unchecked(complex, c, d)
}

fn cup_unchecked(complex: &EquivariantComplex, c: &EquivariantCochain, d: &EquivariantCochain) -> Result<EquivariantCochain> {
    let components = complex
        .fixed
        .iter()
        .enumerate()
        .map(|(h, fixed)| {
            cup_block(
                &complex.coefficients.algebras[h],
                fixed.dim(),
                c.degree,
                &c.components[h],
                d.degree,
                &d.components[h],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivariantCochain { degree: c.degree + d.degree, components })
}

/// A class `[a] ∈ HL^p_G` given by a cocycle representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: usize,
    pub representative: EquivariantCochain,
}

impl CohomologyClass {
    pub fn new(complex: &EquivariantComplex, representative: EquivariantCochain) -> Result<Self> {
        complex.require_invariant(&representative)?;
        let v = complex.to_ambient(&representative);
        if !complex.is_cocycle(representative.degree, &v)? {
            return Err(Error::Invalid(format!("representative of degree {} is not a cocycle", representative.degree)));
        }
        Ok(CohomologyClass { degree: representative.degree, representative })
    }
}

/// The classes given by the representatives of `HL^n_G`.
pub fn cohomology_classes(complex: &EquivariantComplex, n: usize) -> Result<Vec<CohomologyClass>> {
    let h = complex.equivariant_cohomology(n)?;
    h.result
        .representatives
        .iter()
        .map(|v| CohomologyClass::new(complex, complex.from_ambient(n, v)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZinbielVerdict {
    pub degrees: (usize, usize, usize),
    /// `w` lies in `δ(S^{p+q+r-1}_G)`.
    pub ok: bool,
    /// `w` vanishes already at cochain level.
    pub defect_is_zero: bool,
    pub defect: EquivariantCochain,
}

/// Computes `w = (a∪b)∪c − a∪(b∪c) − (−1)^{qr} a∪(c∪b)` and tests whether
/// it is a coboundary.
pub fn zinbiel_check_on_cohomology(
    complex: &EquivariantComplex,
    a: &CohomologyClass,
    b: &CohomologyClass,
    c: &CohomologyClass,
) -> Result<ZinbielVerdict> {
    let (p, q, r) = (a.degree, b.degree, c.degree);
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, min: 1, max: MAX_DEGREE });
    }
    if p + q + r > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange { degree: p + q + r, min: 3, max: MAX_DEGREE });
    }
    let (ra, rb, rc) = (&a.representative, &b.representative, &c.representative);
    let left = cup_unchecked(complex, &cup_unchecked(complex, ra, rb)?, rc)?;
    let first = cup_unchecked(complex, ra, &cup_unchecked(complex, rb, rc)?)?;
    let second = cup_unchecked(complex, ra, &cup_unchecked(complex, rc, rb)?)?;
    let n = p + q + r;
    let s = complex.field().int(if (q * r) % 2 == 0 { 1 } else { -1 });
    let mut w = sub_vectors(&complex.to_ambient(&left), &complex.to_ambient(&first));
    crate::linalg::axpy(&mut w, &-&s, &complex.to_ambient(&second));
    let defect_is_zero = is_zero_vector(&w);
    let ok = defect_is_zero || complex.is_coboundary(n, &w)?;
    Ok(ZinbielVerdict { degrees: (p, q, r), ok, defect_is_zero, defect: complex.from_ambient(n, &w) })
}

/// An element of the free zinbiel algebra on `alphabet` letters, truncated
/// above word length `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeZinbielElement {
    pub alphabet: usize,
    pub max_degree: usize,
    terms: WordCombination,
}

impl FreeZinbielElement {
    pub fn zero(alphabet: usize, max_degree: usize) -> Self {
        FreeZinbielElement { alphabet, max_degree, terms: WordCombination::new() }
    }

    pub fn word(alphabet: usize, max_degree: usize, word: &[usize]) -> Self {
        let mut x = Self::zero(alphabet, max_degree);
        if !word.is_empty() && word.len() <= max_degree {
            add_term(&mut x.terms, word.to_vec(), Field::Rational.one());
        }
        x
    }

    pub fn terms(&self) -> &WordCombination {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FreeZinbielElement) -> FreeZinbielElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut out.terms, w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreeZinbielElement) -> FreeZinbielElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut out.terms, w.clone(), -c);
        }
        out
    }
}

fn half_shuffle(x: &[usize], y: &[usize], swapped: bool) -> WordCombination {
    let (p, q) = (x.len() - 1, y.len());
    let tail: Vec<usize> = x[1..].iter().chain(y).copied().collect();
    let sh = if swapped { shuffle_sum(Field::Rational, q, p) } else { shuffle_sum(Field::Rational, p, q) };
    sh.apply_to_word(&tail)
        .into_iter()
        .map(|(w, c)| {
            let mut full = vec![x[0]];
            full.extend(w);
            (full, c)
        })
        .collect()
}

fn zinbiel_product_with(x: &FreeZinbielElement, y: &FreeZinbielElement, n: usize, swapped: bool) -> FreeZinbielElement {
    let mut out = FreeZinbielElement::zero(x.alphabet, n);
    for (u, a) in &x.terms {
        for (v, b) in &y.terms {
            if u.len() + v.len() > n {
                continue;
            }
            let ab = a * b;
            for (w, c) in half_shuffle(u, v, swapped) {
                add_term(&mut out.terms, w, &ab * &c);
            }
        }
    }
    out
}

/// `(v_0…v_p)(v_{p+1}…v_{p+q}) = v_0 sh_{p,q}(v_1…v_{p+q})`, truncated above `n`.
pub fn free_zinbiel_product(x: &FreeZinbielElement, y: &FreeZinbielElement, n: usize) -> FreeZinbielElement {
    zinbiel_product_with(x, y, n, false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZinbielAxiomVerdict {
    pub ok: bool,
    pub triples_checked: usize,
    pub first_failure: Option<(Vec<usize>, Vec<usize>, Vec<usize>)>,
}

/// `((rs)t) = (r(st)) + (r(ts))` on all word triples of total length ≤ `n`.
pub fn check_zinbiel_axiom(alphabet: usize, n: usize) -> ZinbielAxiomVerdict {
    check_zinbiel_axiom_with(alphabet, n, false)
}

/// As [`check_zinbiel_axiom`]; with `swapped` the product uses `sh_{q,p}`.
pub fn check_zinbiel_axiom_with(alphabet: usize, n: usize, swapped: bool) -> ZinbielAxiomVerdict {
    let words: Vec<Vec<usize>> = (1..=n)
        .flat_map(|len| TensorSpace::new(alphabet, len).words().collect::<Vec<_>>())
        .collect();
    let el = |w: &[usize]| FreeZinbielElement::word(alphabet, n, w);
    let mul = |x: &FreeZinbielElement, y: &FreeZinbielElement| zinbiel_product_with(x, y, n, swapped);
    let mut checked = 0;
    for r in &words {
        for s in &words {
            for t in &words {
                if r.len() + s.len() + t.len() > n {
                    continue;
                }
                checked += 1;
                let (er, es, et) = (el(r), el(s), el(t));
                let lhs = mul(&mul(&er, &es), &et);
                let rhs = mul(&er, &mul(&es, &et)).add(&mul(&er, &mul(&et, &es)));
                if lhs != rhs {
                    return ZinbielAxiomVerdict {
                        ok: false,
                        triples_checked: checked,
                        first_failure: Some((r.clone(), s.clone(), t.clone())),
                    };
                }
            }
        }
    }
    ZinbielAxiomVerdict { ok: true, triples_checked: checked, first_failure: None }
}
