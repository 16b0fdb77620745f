//! Named example algebras, some with a bundled group action.
//!
//! | name | algebra | action |
//! |---|---|---|
//! | `lambda6` | `[e1,e3]=e2`, `[e3,e3]=e1` over Q | none |
//! | `lambda6_z2` | as above | Z/2 by `diag(1,-1,-1)` |
//! | `abelian_m` | zero bracket, dim `m` | none |
//! | `free_leib(d,N)_perm` | free Leibniz on `d` letters, words up to `N` | `S_d` permuting letters |
//! | `free_leib(d,N)_cyclic` | same | `Z/d` cycling letters |
//! | `derived2_f2_z2` | derived bracket of `[x,y]=y`, `d(x)=y` over F_2 | Z/2 by `x ↦ x+y` |

use crate::algebra::{free_leibniz_truncated, DifferentialLieAlgebra, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{FiniteGroup, GroupAction};
use crate::linalg::Matrix;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LeibnizAlgebra,
    pub action: Option<GroupAction>,
}

impl CatalogEntry {
    /// The bundled action, or the trivial group when there is none.
    pub fn action_or_trivial(&self) -> GroupAction {
        self.action.clone().unwrap_or_else(|| GroupAction::trivial(&self.algebra))
    }
}

/// Entries small enough (dimension ≤ 3) for exhaustive sweeps to degree 4.
pub const STANDARD_ENTRIES: &[&str] = &[
    "lambda6",
    "lambda6_z2",
    "abelian_1",
    "abelian_2",
    "abelian_3",
    "free_leib(1,3)_perm",
    "derived2_f2_z2",
];

pub fn lambda6() -> LeibnizAlgebra {
    let q = Field::Rational;
    let v = |xs: [i64; 3]| xs.iter().map(|&x| q.int(x)).collect::<Vec<_>>();
    LeibnizAlgebra::from_brackets(q, 3, &[(0, 2, v([0, 1, 0])), (2, 2, v([1, 0, 0]))]).expect("valid constants")
}

pub fn lambda6_z2() -> GroupAction {
    let q = Field::Rational;
    GroupAction::new(
        FiniteGroup::cyclic(2),
        lambda6(),
        vec![Matrix::identity(q, 3), Matrix::diagonal(q, &[1, -1, -1])],
    )
    .expect("shapes match")
}

/// The 2-dimensional Lie algebra `[x,y]=y` over F_2 with `d(x)=y`, `d(y)=0`.
pub fn derived2_dgla() -> DifferentialLieAlgebra {
    let f2 = Field::Prime(2);
    let lie = LeibnizAlgebra::from_brackets(
        f2,
        2,
        &[(0, 1, vec![f2.zero(), f2.one()]), (1, 0, vec![f2.zero(), f2.int(-1)])],
    )
    .expect("valid constants");
    let d = Matrix::from_ints(f2, &[&[0, 0], &[1, 0]]);
    DifferentialLieAlgebra::new(lie, d).expect("square differential")
}

pub fn derived2_f2_z2() -> Result<GroupAction> {
    let f2 = Field::Prime(2);
    let alg = derived2_dgla().derived_bracket_algebra()?;
    GroupAction::new(
        FiniteGroup::cyclic(2),
        alg,
        vec![Matrix::identity(f2, 2), Matrix::from_ints(f2, &[&[1, 0], &[1, 1]])],
    )
}

/// Letters permuted by `perms` (element `g` sends letter `i` to `perms[g][i]`),
/// extended letterwise to words.
pub fn free_leib_with_group(dim_v: usize, max_degree: usize, group: FiniteGroup, perms: &[Vec<usize>]) -> Result<GroupAction> {
    let q = Field::Rational;
    let free = free_leibniz_truncated(q, dim_v, max_degree)?;
    let n = free.words.len();
    let matrices = perms
        .iter()
        .map(|p| {
            let mut m = Matrix::zeros(q, n, n);
            for (col, w) in free.words.iter().enumerate() {
                let image: Vec<usize> = w.iter().map(|&l| p[l]).collect();
                let row = free.index_of(&image).expect("words closed under letter maps");
                m.set(row, col, q.one());
            }
            m
        })
        .collect();
    GroupAction::new(group, free.algebra, matrices)
}

fn parse_free(name: &str) -> Option<(usize, usize, &str)> {
    let rest = name.strip_prefix("free_leib(")?;
    let (args, suffix) = rest.split_once(")_")?;
    let (d, n) = args.split_once(',')?;
    Some((d.trim().parse().ok()?, n.trim().parse().ok()?, suffix))
}

pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let entry = |algebra: LeibnizAlgebra, action: Option<GroupAction>| CatalogEntry {
        name: name.to_string(),
        algebra,
        action,
    };
    match name {
        "lambda6" => return Ok(entry(lambda6(), None)),
        "lambda6_z2" => {
            let a = lambda6_z2();
            return Ok(entry(a.algebra.clone(), Some(a)));
        }
        "derived2_f2_z2" => {
            let a = derived2_f2_z2()?;
            return Ok(entry(a.algebra.clone(), Some(a)));
        }
        _ => {}
    }
    if let Some(m) = name.strip_prefix("abelian_").and_then(|m| m.parse::<usize>().ok()) {
        if m >= 1 {
            return Ok(entry(LeibnizAlgebra::abelian(Field::Rational, m), None));
        }
    }
    if let Some((d, n, kind)) = parse_free(name) {
        if d >= 1 && n >= 1 && d <= 4 && n <= 4 {
            let (group, perms) = match kind {
                "perm" => FiniteGroup::symmetric(d),
                "cyclic" => {
                    let cycle: Vec<usize> = (0..d).map(|i| (i + 1) % d).collect();
                    FiniteGroup::generated_by_permutations(d, &[cycle])
                }
                _ => return Err(Error::UnknownCatalog(name.to_string())),
            };
            let a = free_leib_with_group(d, n, group, &perms)?;
            return Ok(entry(a.algebra.clone(), Some(a)));
        }
    }
    Err(Error::UnknownCatalog(name.to_string()))
}
