//! The JSON instance format.
//!
//! ```json
//! {
//!   "field": "gf:5",
//!   "dim": 2,
//!   "subspaces": { "V1": [["1", "0"]], "V2": [["0", "1"]] },
//!   "form": { "kind": "symmetric", "gram": [["0", "1"], ["1", "0"]] }
//! }
//! ```
//!
//! Scalars are integers or `"a/b"` strings. Subspaces are lists of spanning
//! rows. When a form is given and `W1`/`W2` are missing they default to the
//! orthogonals of `V1`/`V2`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use sll_core::curvature::CurvatureTensor;
use sll_core::form::reflexive_decomposition;
use sll_core::{BilinearForm, FieldSpec, FormKind, Matrix, Scalar, Subspace, TwoSumDecomposition};

use crate::error::{CliError, Result};

/// A scalar literal, syntax-checked on read and kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry(pub String);

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

struct EntryVisitor;

impl Visitor<'_> for EntryVisitor {
    type Value = Entry;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a string \"a\" or \"a/b\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Entry, E> {
        Ok(Entry(v.to_string()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Entry, E> {
        Ok(Entry(v.to_string()))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Entry, E> {
        Err(E::custom(format!("{v} is not exact; write it as \"a/b\"")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Entry, E> {
        FieldSpec::Rationals
            .parse(v)
            .map_err(|e| E::custom(e.to_string()))?;
        Ok(Entry(v.trim().to_string()))
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Entry, D::Error> {
        d.deserialize_any(EntryVisitor)
    }
}

mod field_name {
    use super::*;

    pub fn serialize<S: Serializer>(f: &FieldSpec, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(f)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<FieldSpec, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|e: sll_core::Error| de::Error::custom(e.to_string()))
    }
}

pub type Rows = Vec<Vec<Entry>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    pub kind: FormKind,
    pub gram: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(with = "field_name")]
    pub field: FieldSpec,
    pub dim: usize,
    pub subspaces: BTreeMap<String, Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormSpec>,
    /// Generator matrices.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub algebra: Vec<Rows>,
    /// Coefficient arrays `c[i][j][k][l]` with `R(e_i, e_j) e_k = Σ_l c e_l`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub curvature: Vec<Vec<Vec<Rows>>>,
}

/// An instance with every entry converted to field elements.
#[derive(Debug, Clone)]
pub struct Instance {
    pub field: FieldSpec,
    pub dim: usize,
    pub subspaces: BTreeMap<String, Subspace>,
    pub form: Option<BilinearForm>,
    pub algebra: Vec<Matrix>,
    pub curvature: Vec<CurvatureTensor>,
}

fn entries<'a>(row: impl IntoIterator<Item = &'a Scalar>) -> Vec<Entry> {
    row.into_iter().map(|s| Entry(s.to_string())).collect()
}

fn matrix_rows(m: &Matrix) -> Rows {
    m.row_vecs().map(entries).collect()
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<InstanceFile> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Parse(format!(
                "line {}, column {}: {}",
                e.line(),
                e.column(),
                strip_position(&e.to_string())
            ))
        })
    }

    pub fn read(path: &Path) -> Result<InstanceFile> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        InstanceFile::parse(&text).map_err(|e| match e {
            CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Pretty JSON with sorted subspace names and a trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn from_parts(
        field: FieldSpec,
        dim: usize,
        subspaces: &[(&str, &Subspace)],
        form: Option<&BilinearForm>,
        algebra: &[Matrix],
        curvature: &[CurvatureTensor],
    ) -> InstanceFile {
        let n = dim;
        InstanceFile {
            field,
            dim,
            subspaces: subspaces
                .iter()
                .map(|(name, s)| (name.to_string(), matrix_rows(s.basis())))
                .collect(),
            form: form.map(|f| FormSpec {
                kind: f.kind(),
                gram: matrix_rows(f.gram()),
            }),
            algebra: algebra.iter().map(matrix_rows).collect(),
            curvature: curvature
                .iter()
                .map(|t| {
                    (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| {
                                    (0..n)
                                        .map(|k| entries((0..n).map(|l| t.coeff(i, j, k, l))))
                                        .collect()
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    fn scalar(&self, e: &Entry, at: impl Fn() -> String) -> Result<Scalar> {
        self.field
            .parse(&e.0)
            .map_err(|err| CliError::Param(format!("{}: {err}", at())))
    }

    fn vector(&self, row: &[Entry], len: usize, at: impl Fn() -> String) -> Result<Vec<Scalar>> {
        if row.len() != len {
            return Err(CliError::Param(format!(
                "{}: expected {len} entries, found {}",
                at(),
                row.len()
            )));
        }
        row.iter()
            .enumerate()
            .map(|(c, e)| self.scalar(e, || format!("{}[{c}]", at())))
            .collect()
    }

    fn square(&self, rows: &Rows, at: &str) -> Result<Matrix> {
        let n = self.dim;
        if rows.len() != n {
            return Err(CliError::Param(format!(
                "{at}: expected {n} rows, found {}",
                rows.len()
            )));
        }
        let data = rows
            .iter()
            .enumerate()
            .map(|(r, row)| self.vector(row, n, || format!("{at}[{r}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(self.field, n, data)?)
    }

    pub fn resolve(&self) -> Result<Instance> {
        let (field, n) = (self.field, self.dim);
        if n == 0 {
            return Err(CliError::Param("dim must be positive".into()));
        }
        let mut subspaces = BTreeMap::new();
        for (name, rows) in &self.subspaces {
            let vectors = rows
                .iter()
                .enumerate()
                .map(|(r, row)| self.vector(row, n, || format!("subspaces.{name}[{r}]")))
                .collect::<Result<Vec<_>>>()?;
            subspaces.insert(name.clone(), Subspace::span(field, n, &vectors)?);
        }
        let form = match &self.form {
            Some(spec) => Some(BilinearForm::new(self.square(&spec.gram, "form.gram")?, spec.kind)?),
            None => None,
        };
        let algebra = self
            .algebra
            .iter()
            .enumerate()
            .map(|(i, rows)| self.square(rows, &format!("algebra[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let mut curvature = Vec::new();
        for (t, arr) in self.curvature.iter().enumerate() {
            let mut coeffs = Vec::with_capacity(n.pow(4));
            let shape = || CliError::Param(format!("curvature[{t}]: expected shape {n}×{n}×{n}×{n}"));
            if arr.len() != n {
                return Err(shape());
            }
            for (i, a) in arr.iter().enumerate() {
                if a.len() != n {
                    return Err(shape());
                }
                for (j, b) in a.iter().enumerate() {
                    if b.len() != n {
                        return Err(shape());
                    }
                    for (k, row) in b.iter().enumerate() {
                        coeffs.extend(self.vector(row, n, || {
                            format!("curvature[{t}][{i}][{j}][{k}]")
                        })?);
                    }
                }
            }
            curvature.push(CurvatureTensor::new(field, n, coeffs)?);
        }
        Ok(Instance {
            field,
            dim: n,
            subspaces,
            form,
            algebra,
            curvature,
        })
    }
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(msg: &str) -> &str {
    msg.rfind(" at line ").map_or(msg, |i| &msg[..i])
}

impl Instance {
    pub fn subspace(&self, name: &str) -> Option<&Subspace> {
        self.subspaces.get(name)
    }

    fn required(&self, name: &str) -> Result<&Subspace> {
        self.subspace(name)
            .ok_or_else(|| CliError::Param(format!("missing subspace {name}")))
    }

    /// Whether the file names enough subspaces for a decomposition.
    pub fn has_decomposition(&self) -> bool {
        let has = |n: &str| self.subspaces.contains_key(n);
        has("V1") && has("V2") && ((has("W1") && has("W2")) || self.form.is_some())
    }

    /// `(V1, V2, W1, W2)`, with missing `W`s taken as orthogonals.
    pub fn decomposition(&self) -> Result<TwoSumDecomposition> {
        let (v1, v2) = (self.required("V1")?, self.required("V2")?);
        match (self.subspace("W1"), self.subspace("W2"), &self.form) {
            (Some(w1), Some(w2), _) => Ok(TwoSumDecomposition::new(
                v1.clone(),
                v2.clone(),
                w1.clone(),
                w2.clone(),
            )?),
            (None, None, Some(form)) => Ok(reflexive_decomposition(form, v1, Some(v2))?.0),
            _ => Err(CliError::Param(
                "need W1 and W2, or a form to derive them from".into(),
            )),
        }
    }
}
