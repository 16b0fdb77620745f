//! JSON problem files.
//!
//! ```json
//! {
//!   "field": {"type": "rational"},
//!   "algebra": {"dim": 3, "brackets": [{"i": 1, "j": 3, "value": [0, 1, 0]},
//!                                      {"i": 3, "j": 3, "value": [1, 0, 0]}]},
//!   "group": {"order": 2, "table": [[1, 2], [2, 1]]},
//!   "action": {"matrices": [[[1,0,0],[0,1,0],[0,0,1]], [[1,0,0],[0,-1,0],[0,0,-1]]]},
//!   "coefficients": "constant",
//!   "max_degree": 4
//! }
//! ```
//!
//! Indices are 1-based. Group element 1 is the identity and `table[a][b]`
//! is the product `ab`. Matrices are lists of rows and act on column
//! vectors. Scalars are integers or `"num/den"` strings.
//!
//! `coefficients` is `"constant"`, `"coset-functions"`, or an explicit
//! system:
//!
//! ```json
//! {"algebras": [{"dim": 1, "unit": [1], "products": [{"i": 1, "j": 1, "value": [1]}]}, ...],
//!  "maps": [{"source": 1, "target": 2, "element": 1, "matrix": [[1]]}, ...]}
//! ```
//!
//! with one algebra per subgroup, in the order subgroups are enumerated
//! (by order, then by sorted element list), and one map `A(ĝ)` for every
//! morphism `ĝ : G/H_source → G/H_target`. Unlisted products are zero.

use serde::Deserialize;
use serde_json::Value;

use crate::algebra::LeibnizAlgebra;
use crate::catalog::CatalogEntry;
use crate::complexes::CoefficientAlgebra;
use crate::equivariant::{constant_coefficients, coset_function_coefficients, CoefficientSystem};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::group::{orbit_category, FiniteGroup, GroupAction};
use crate::linalg::{zero_vector, Matrix, Vector};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    field: RawField,
    algebra: RawAlgebra,
    group: Option<RawGroup>,
    action: Option<RawAction>,
    coefficients: Option<RawCoefficients>,
    max_degree: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum RawField {
    Rational,
    Prime { p: u64 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    #[serde(default)]
    brackets: Vec<RawEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    i: usize,
    j: usize,
    value: Vec<Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    order: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    matrices: Vec<Vec<Vec<Value>>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawCoefficients {
    Named(String),
    Explicit(RawExplicit),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExplicit {
    algebras: Vec<RawCoefficientAlgebra>,
    maps: Vec<RawMap>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoefficientAlgebra {
    dim: usize,
    unit: Vec<Value>,
    #[serde(default)]
    products: Vec<RawEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    source: usize,
    target: usize,
    element: usize,
    matrix: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientSpec {
    Constant,
    CosetFunctions,
    Explicit,
}

/// A parsed problem file: structurally sound, not yet validated.
#[derive(Debug, Clone)]
pub struct Problem {
    pub field: Field,
    pub algebra: LeibnizAlgebra,
    pub action: Option<GroupAction>,
    pub coefficient_spec: CoefficientSpec,
    explicit: Option<CoefficientSystem>,
    pub max_degree: Option<usize>,
}

fn parse_error(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {msg}"))
}

fn scalar(field: Field, v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| field.int(x))
            .ok_or_else(|| parse_error(path, format!("{n} is not an integer; use a \"num/den\" string"))),
        Value::String(s) => field.parse_scalar(s).map_err(|e| parse_error(path, e)),
        other => Err(parse_error(path, format!("expected a scalar, found {other}"))),
    }
}

fn vector(field: Field, vs: &[Value], len: usize, path: &str) -> Result<Vector> {
    if vs.len() != len {
        return Err(parse_error(path, format!("expected {len} entries, found {}", vs.len())));
    }
    vs.iter()
        .enumerate()
        .map(|(k, v)| scalar(field, v, &format!("{path}[{k}]")))
        .collect()
}

fn matrix(field: Field, rows: &[Vec<Value>], shape: (usize, usize), path: &str) -> Result<Matrix> {
    if rows.len() != shape.0 {
        return Err(parse_error(path, format!("expected {} rows, found {}", shape.0, rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(r, row)| vector(field, row, shape.1, &format!("{path}[{r}]")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, shape.1, rows)
}

fn one_based(i: usize, bound: usize, path: &str) -> Result<usize> {
    if i == 0 || i > bound {
        return Err(parse_error(path, format!("index {i} outside 1..={bound}")));
    }
    Ok(i - 1)
}

fn entries(field: Field, dim: usize, raw: &[RawEntry], path: &str) -> Result<Vec<(usize, usize, Vector)>> {
    let mut seen = std::collections::BTreeSet::new();
    raw.iter()
        .enumerate()
        .map(|(k, e)| {
            let p = format!("{path}[{k}]");
            let (i, j) = (one_based(e.i, dim, &format!("{p}.i"))?, one_based(e.j, dim, &format!("{p}.j"))?);
            if !seen.insert((i, j)) {
                return Err(parse_error(&p, format!("duplicate entry for ({}, {})", e.i, e.j)));
            }
            Ok((i, j, vector(field, &e.value, dim, &format!("{p}.value"))?))
        })
        .collect()
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem> {
        let raw: RawProblem = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
        let field = match raw.field {
            RawField::Rational => Field::Rational,
            RawField::Prime { p } => Field::prime(p).map_err(|e| parse_error("field.p", e))?,
        };
        let dim = raw.algebra.dim;
        if dim == 0 {
            return Err(parse_error("algebra.dim", "must be at least 1"));
        }
        let brackets = entries(field, dim, &raw.algebra.brackets, "algebra.brackets")?;
        let algebra = LeibnizAlgebra::from_brackets(field, dim, &brackets).map_err(|e| parse_error("algebra", e))?;

        let group = match &raw.group {
            None => None,
            Some(g) => {
                if g.table.len() != g.order || g.table.iter().any(|r| r.len() != g.order) {
                    return Err(parse_error("group.table", format!("expected a {0}x{0} table", g.order)));
                }
                let table = g
                    .table
                    .iter()
                    .enumerate()
                    .map(|(a, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(b, &x)| one_based(x, g.order, &format!("group.table[{a}][{b}]")))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Some(FiniteGroup::from_table(table).map_err(|e| parse_error("group.table", e))?)
            }
        };
        let action = match (&raw.action, group) {
            (None, None) => None,
            (Some(_), None) => return Err(parse_error("action", "an action needs a group")),
            (None, Some(_)) => return Err(parse_error("group", "a group needs an action")),
            (Some(a), Some(g)) => {
                if a.matrices.len() != g.order() {
                    return Err(parse_error(
                        "action.matrices",
                        format!("expected {} matrices, found {}", g.order(), a.matrices.len()),
                    ));
                }
                let ms = a
                    .matrices
                    .iter()
                    .enumerate()
                    .map(|(k, m)| matrix(field, m, (dim, dim), &format!("action.matrices[{k}]")))
                    .collect::<Result<Vec<_>>>()?;
                Some(GroupAction::new(g, algebra.clone(), ms).map_err(|e| parse_error("action", e))?)
            }
        };

        let (coefficient_spec, explicit) = match raw.coefficients {
            None => (CoefficientSpec::Constant, None),
            Some(RawCoefficients::Named(s)) => match s.as_str() {
                "constant" => (CoefficientSpec::Constant, None),
                "coset-functions" => (CoefficientSpec::CosetFunctions, None),
                other => return Err(parse_error("coefficients", format!("unknown coefficient system {other:?}"))),
            },
            Some(RawCoefficients::Explicit(e)) => {
                let group = action.as_ref().map(|a| a.group.clone()).unwrap_or_else(FiniteGroup::trivial);
                (CoefficientSpec::Explicit, Some(explicit_system(field, &group, &e)?))
            }
        };
        if let Some(n) = raw.max_degree {
            if n > crate::complexes::MAX_DEGREE {
                return Err(parse_error("max_degree", format!("at most {}", crate::complexes::MAX_DEGREE)));
            }
        }
        Ok(Problem { field, algebra, action, coefficient_spec, explicit, max_degree: raw.max_degree })
    }

    pub fn from_catalog(entry: &CatalogEntry) -> Problem {
        Problem {
            field: entry.algebra.field(),
            algebra: entry.algebra.clone(),
            action: entry.action.clone(),
            coefficient_spec: CoefficientSpec::Constant,
            explicit: None,
            max_degree: None,
        }
    }

    /// The declared action, or the trivial group.
    pub fn action_or_trivial(&self) -> GroupAction {
        self.action.clone().unwrap_or_else(|| GroupAction::trivial(&self.algebra))
    }

    pub fn coefficients(&self) -> CoefficientSystem {
        let group = self.action_or_trivial().group;
        match self.coefficient_spec {
            CoefficientSpec::Constant => constant_coefficients(self.field, &group),
            CoefficientSpec::CosetFunctions => coset_function_coefficients(self.field, &group),
            CoefficientSpec::Explicit => self.explicit.clone().expect("explicit system parsed"),
        }
    }
}

fn explicit_system(field: Field, group: &FiniteGroup, raw: &RawExplicit) -> Result<CoefficientSystem> {
    let orbit = orbit_category(group);
    if raw.algebras.len() != orbit.object_count() {
        return Err(parse_error(
            "coefficients.algebras",
            format!("expected one algebra per subgroup ({}), found {}", orbit.object_count(), raw.algebras.len()),
        ));
    }
    let algebras = raw
        .algebras
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let path = format!("coefficients.algebras[{k}]");
            if a.dim == 0 {
                return Err(parse_error(&path, "dim must be at least 1"));
            }
            let unit = vector(field, &a.unit, a.dim, &format!("{path}.unit"))?;
            let mut products = vec![zero_vector(field, a.dim); a.dim * a.dim];
            for (i, j, v) in entries(field, a.dim, &a.products, &format!("{path}.products"))? {
                products[i * a.dim + j] = v;
            }
            CoefficientAlgebra::new(field, a.dim, products, unit).map_err(|e| parse_error(&path, e))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut maps: Vec<Option<Matrix>> = vec![None; orbit.morphisms.len()];
    let n_obj = orbit.object_count();
    for (k, m) in raw.maps.iter().enumerate() {
        let path = format!("coefficients.maps[{k}]");
        let h = one_based(m.source, n_obj, &format!("{path}.source"))?;
        let kk = one_based(m.target, n_obj, &format!("{path}.target"))?;
        let g = one_based(m.element, group.order(), &format!("{path}.element"))?;
        let idx = orbit
            .find(h, kk, g)
            .ok_or_else(|| parse_error(&path, "no such morphism in the orbit category"))?;
        if maps[idx].is_some() {
            return Err(parse_error(&path, "morphism listed twice"));
        }
        let shape = (algebras[h].dim(), algebras[kk].dim());
        maps[idx] = Some(matrix(field, &m.matrix, shape, &format!("{path}.matrix"))?);
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.ok_or_else(|| {
                let mor = orbit.morphisms[i];
                parse_error(
                    "coefficients.maps",
                    format!(
                        "missing map for morphism source {} target {} element {}",
                        mor.source + 1,
                        mor.target + 1,
                        mor.element + 1
                    ),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    CoefficientSystem::new(orbit, algebras, maps).map_err(|e| parse_error("coefficients", e))
}
