//! The JSON algebra file.
//!
//! ```json
//! {
//!   "schema_version": "a3kit-algebra/1",
//!   "dim": 2,
//!   "basis": ["e1", "e2"],
//!   "products": { "e1,e1": { "e1": "1", "e2": "2" }, "e2,e1": { "e2": "1" } },
//!   "delta": { "e1,e1": { "e1": "1" } },
//!   "tensors": { "r": { "e1,e2": "1", "e2,e1": "-1" } },
//!   "maps": { "T": [["0", "0"], ["1", "0"]] },
//!   "forms": { "B": [["0", "1"], ["1", "0"]] }
//! }
//! ```
//!
//! `products["a,b"][c]` is the coefficient of `c` in `a·b`. `delta["b,c"][a]`
//! is the coefficient of `b⊗c` in `Δ(a)`. Maps and forms are dense row lists.
//! Rationals are strings `"p"` or `"p/q"`; absent products and entries are zero.

use std::collections::BTreeMap;

use a3kit::bialgebra::Comultiplication;
use a3kit::double::BilinearForm;
use a3kit::tensor::{format_scalar, parse_scalar};
use a3kit::{Algebra, Matrix, Scalar, Tensor2};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: &str = "a3kit-algebra/1";

type Sparse = BTreeMap<String, String>;
type Table = BTreeMap<String, Sparse>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub schema_version: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub products: Table,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Table>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tensors: BTreeMap<String, Sparse>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("no {kind} named {name:?}")]
    Missing { kind: &'static str, name: String },
    #[error(transparent)]
    Algebra(#[from] a3kit::Error),
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> FileError {
    FileError::Field {
        field: field.into(),
        message: message.into(),
    }
}

fn scalar(field: &str, s: &str) -> Result<Scalar, FileError> {
    parse_scalar(s).map_err(|e| field_err(field, e.to_string()))
}

fn write_sparse(entries: impl IntoIterator<Item = (String, Scalar)>) -> Sparse {
    entries
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (k, format_scalar(&v)))
        .collect()
}

fn dense(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_scalar(&m[(i, j)])).collect())
        .collect()
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, FileError> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        file.validate()?;
        Ok(file)
    }

    /// Pretty, key-sorted JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("plain data serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        let n = a.dim();
        let labels = a.labels();
        let mut products = Table::new();
        for i in 0..n {
            for j in 0..n {
                let row = write_sparse((0..n).map(|k| (labels[k].clone(), a.sc(i, j, k).clone())));
                if !row.is_empty() {
                    products.insert(format!("{},{}", labels[i], labels[j]), row);
                }
            }
        }
        AlgebraFile {
            schema_version: SCHEMA_VERSION.into(),
            dim: n,
            basis: labels.to_vec(),
            products,
            ..Default::default()
        }
    }

    pub fn with_delta(mut self, delta: &Comultiplication) -> Self {
        let n = self.dim;
        let mut table = Table::new();
        for j in 0..n {
            for k in 0..n {
                let row = write_sparse(
                    (0..n).map(|i| (self.basis[i].clone(), delta.get(i, j, k).clone())),
                );
                if !row.is_empty() {
                    table.insert(format!("{},{}", self.basis[j], self.basis[k]), row);
                }
            }
        }
        self.delta = Some(table);
        self
    }

    pub fn with_tensor(mut self, name: &str, r: &Tensor2) -> Self {
        let n = self.dim;
        let entries = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| {
                (
                    format!("{},{}", self.basis[a], self.basis[b]),
                    r[(a, b)].clone(),
                )
            });
        let sparse = write_sparse(entries.collect::<Vec<_>>());
        self.tensors.insert(name.into(), sparse);
        self
    }

    pub fn with_map(mut self, name: &str, m: &Matrix) -> Self {
        self.maps.insert(name.into(), dense(m));
        self
    }

    pub fn with_form(mut self, name: &str, form: &BilinearForm) -> Self {
        self.forms.insert(name.into(), dense(&form.gram));
        self
    }

    fn validate(&self) -> Result<(), FileError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(field_err(
                "schema_version",
                format!(
                    "expected {SCHEMA_VERSION:?}, found {:?}",
                    self.schema_version
                ),
            ));
        }
        if self.dim == 0 {
            return Err(field_err("dim", "must be positive"));
        }
        if self.basis.len() != self.dim {
            return Err(field_err(
                "basis",
                format!("{} labels for dimension {}", self.basis.len(), self.dim),
            ));
        }
        self.algebra()?;
        self.comultiplication()?;
        for name in self.tensors.keys() {
            self.tensor(name)?;
        }
        for name in self.maps.keys() {
            self.map(name)?;
        }
        for name in self.forms.keys() {
            self.form(name)?;
        }
        Ok(())
    }

    fn label(&self, field: &str, s: &str) -> Result<usize, FileError> {
        self.basis
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| field_err(field, format!("unknown label {s:?}")))
    }

    fn pair(&self, field: &str, key: &str) -> Result<(usize, usize), FileError> {
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| field_err(field, format!("expected \"label,label\", found {key:?}")))?;
        Ok((self.label(field, a.trim())?, self.label(field, b.trim())?))
    }

    /// Reads a `"a,b" -> {c: q}` table into `out[a][b][c]`.
    fn read_table(&self, name: &str, table: &Table) -> Result<Vec<Scalar>, FileError> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n * n * n];
        for (key, row) in table {
            let field = format!("{name}.{key:?}");
            let (a, b) = self.pair(&field, key)?;
            for (c, q) in row {
                let field = format!("{field}.{c}");
                let c = self.label(&field, c)?;
                out[(a * n + b) * n + c] = scalar(&field, q)?;
            }
        }
        Ok(out)
    }

    pub fn algebra(&self) -> Result<Algebra, FileError> {
        let sc = self.read_table("products", &self.products)?;
        Ok(Algebra::new(self.basis.clone(), sc)?)
    }

    pub fn comultiplication(&self) -> Result<Option<Comultiplication>, FileError> {
        let Some(table) = &self.delta else {
            return Ok(None);
        };
        let n = self.dim;
        let flat = self.read_table("delta", table)?;
        let mut delta = Comultiplication::zero(n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    delta.set(i, j, k, flat[(j * n + k) * n + i].clone());
                }
            }
        }
        Ok(Some(delta))
    }

    pub fn tensor(&self, name: &str) -> Result<Tensor2, FileError> {
        let sparse = self.tensors.get(name).ok_or_else(|| FileError::Missing {
            kind: "tensor",
            name: name.into(),
        })?;
        let n = self.dim;
        let mut m = Matrix::zero(n, n);
        for (key, q) in sparse {
            let field = format!("tensors.{name}.{key:?}");
            let (a, b) = self.pair(&field, key)?;
            m[(a, b)] = scalar(&field, q)?;
        }
        Ok(Tensor2::from_matrix(&m)?)
    }

    fn read_dense(&self, field: &str, rows: &[Vec<String>]) -> Result<Matrix, FileError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(field_err(field, "empty matrix"));
        }
        let mut m = Matrix::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(field_err(
                    format!("{field}[{i}]"),
                    format!("{} entries, expected {cols}", row.len()),
                ));
            }
            for (j, q) in row.iter().enumerate() {
                m[(i, j)] = scalar(&format!("{field}[{i}][{j}]"), q)?;
            }
        }
        Ok(m)
    }

    pub fn map(&self, name: &str) -> Result<Matrix, FileError> {
        let rows = self.maps.get(name).ok_or_else(|| FileError::Missing {
            kind: "map",
            name: name.into(),
        })?;
        self.read_dense(&format!("maps.{name}"), rows)
    }

    pub fn form(&self, name: &str) -> Result<BilinearForm, FileError> {
        let rows = self.forms.get(name).ok_or_else(|| FileError::Missing {
            kind: "form",
            name: name.into(),
        })?;
        Ok(BilinearForm::new(
            self.read_dense(&format!("forms.{name}"), rows)?,
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use a3kit::examples::{admissible_plane, idempotent_delta};

    #[test]
    fn admissible_plane_round_trip() {
        let file = AlgebraFile::from_algebra(&admissible_plane()).with_delta(&idempotent_delta());
        let text = file.to_json();
        let back = AlgebraFile::from_json(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.algebra().unwrap(), admissible_plane());
        assert_eq!(
            back.comultiplication().unwrap().unwrap(),
            idempotent_delta()
        );
    }

    #[test]
    fn zero_denominator_names_the_field() {
        let text = r#"{"schema_version":"a3kit-algebra/1","dim":1,"basis":["e1"],"products":{"e1,e1":{"e1":"1/0"}}}"#;
        let err = AlgebraFile::from_json(text).unwrap_err().to_string();
        assert!(err.starts_with("products.\"e1,e1\".e1"), "{err}");
    }

    #[test]
    fn unknown_label_is_rejected() {
        let text = r#"{"schema_version":"a3kit-algebra/1","dim":1,"basis":["e1"],"products":{"e1,x":{"e1":"1"}}}"#;
        assert!(matches!(
            AlgebraFile::from_json(text),
            Err(FileError::Field { .. })
        ));
    }
}
