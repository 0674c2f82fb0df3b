//! JSON documents for algebras and elements.
//!
//! Rationals are always strings (`"3"`, `"-1/2"`, `"0.25"`), so values
//! survive a round trip exactly. Algebra documents:
//!
//! ```json
//! {"kind": "matrix", "k": 2}
//! {"kind": "upper_triangular", "k": 3}
//! {"kind": "structure", "dim": 2, "name": "dual",
//!  "table": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]],
//!  "unit": ["1","0"]}
//! ```
//!
//! Element documents carry either `"coords"` or, for matrix algebras,
//! `"matrix"`. Errors name the offending location, e.g. `table[0][1][1]`.

use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, Algebra, Element};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

fn doc_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Document {
        path: path.into(),
        message: message.into(),
    }
}

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        doc_error(
            if path.is_empty() {
                ".".to_string()
            } else {
                path
            },
            e.into_inner().to_string(),
        )
    })
}

fn parse_at(text: &str, path: impl FnOnce() -> String) -> Result<Rational> {
    rational::parse(text).map_err(|_| doc_error(path(), format!("invalid rational {text:?}")))
}

fn require<T>(value: Option<T>, field: &str, kind: &str) -> Result<T> {
    value.ok_or_else(|| doc_error(field, format!("required for kind {kind:?}")))
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        from_json(text)
    }

    /// Builds and validates the described algebra. Document problems come
    /// back as [`Error::Document`]; a well-formed but invalid table yields
    /// the validation error from the algebra constructor.
    pub fn build(&self) -> Result<Arc<Algebra>> {
        let alg = match self.kind.as_str() {
            "matrix" | "upper_triangular" => {
                for (field, present) in [("dim", self.dim.is_some()), ("table", self.table.is_some()), ("unit", self.unit.is_some())] {
                    if present {
                        return Err(doc_error(field, format!("not allowed for kind {:?}", self.kind)));
                    }
                }
                let k = require(self.k, "k", &self.kind)?;
                if k == 0 {
                    return Err(doc_error("k", "must be positive"));
                }
                if self.kind == "matrix" {
                    algebra::matrix_algebra(k)?
                } else {
                    algebra::upper_triangular_algebra(k)?
                }
            }
            "structure" => {
                if self.k.is_some() {
                    return Err(doc_error("k", "not allowed for kind \"structure\""));
                }
                let dim = require(self.dim, "dim", "structure")?;
                let table = require(self.table.as_ref(), "table", "structure")?;
                let unit = require(self.unit.as_ref(), "unit", "structure")?;
                if dim == 0 {
                    return Err(doc_error("dim", "must be positive"));
                }
                let table = parse_table(dim, table)?;
                if unit.len() != dim {
                    return Err(doc_error("unit", format!("expected {dim} entries, found {}", unit.len())));
                }
                let unit = unit
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_at(s, || format!("unit[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                algebra::structure_algebra(dim, table, unit)?
            }
            other => {
                return Err(doc_error(
                    "kind",
                    format!("unknown kind {other:?}; expected \"matrix\", \"upper_triangular\" or \"structure\""),
                ))
            }
        };
        Ok(match &self.name {
            Some(name) => algebra::rename(alg, name),
            None => alg,
        })
    }

    /// Document describing `alg` by its structure constants.
    pub fn from_algebra(alg: &Algebra) -> Self {
        let d = alg.dim();
        let table = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        (0..d)
                            .map(|k| rational::format(alg.structure_constant(i, j, k)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        AlgebraFile {
            kind: "structure".into(),
            name: alg.name().map(str::to_string),
            k: None,
            dim: Some(d),
            table: Some(table),
            unit: Some(alg.unit_coords().iter().map(rational::format).collect()),
        }
    }
}

fn parse_table(dim: usize, table: &[Vec<Vec<String>>]) -> Result<Vec<Vec<Vec<Rational>>>> {
    if table.len() != dim {
        return Err(doc_error(
            "table",
            format!("expected {dim} rows, found {}", table.len()),
        ));
    }
    table
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != dim {
                return Err(doc_error(
                    format!("table[{i}]"),
                    format!("expected {dim} entries, found {}", row.len()),
                ));
            }
            row.iter()
                .enumerate()
                .map(|(j, entry)| {
                    if entry.len() != dim {
                        return Err(doc_error(
                            format!("table[{i}][{j}]"),
                            format!("expected {dim} coefficients, found {}", entry.len()),
                        ));
                    }
                    entry
                        .iter()
                        .enumerate()
                        .map(|(k, s)| parse_at(s, || format!("table[{i}][{j}][{k}]")))
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub fn parse_algebra(text: &str) -> Result<Arc<Algebra>> {
    AlgebraFile::parse(text)?.build()
}

impl ElementDoc {
    pub fn parse(text: &str) -> Result<Self> {
        from_json(text)
    }

    /// Matrix form when the algebra has a matrix layout, coordinates otherwise.
    pub fn from_element(e: &Element) -> Self {
        match e.to_matrix() {
            Some(m) => ElementDoc {
                coords: None,
                matrix: Some(
                    m.iter()
                        .map(|r| r.iter().map(rational::format).collect())
                        .collect(),
                ),
            },
            None => ElementDoc::coords_of(e),
        }
    }

    pub fn coords_of(e: &Element) -> Self {
        ElementDoc {
            coords: Some(e.coords().iter().map(rational::format).collect()),
            matrix: None,
        }
    }

    pub fn to_element(&self, alg: &Arc<Algebra>) -> Result<Element> {
        match (&self.coords, &self.matrix) {
            (Some(coords), None) => {
                if coords.len() != alg.dim() {
                    return Err(doc_error(
                        "coords",
                        format!("expected {} entries, found {}", alg.dim(), coords.len()),
                    ));
                }
                let v = coords
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_at(s, || format!("coords[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                alg.element(v)
            }
            (None, Some(rows)) => {
                let k = alg
                    .layout()
                    .ok_or_else(|| {
                        doc_error("matrix", "algebra has no matrix layout; use \"coords\"")
                    })?
                    .order;
                if rows.len() != k {
                    return Err(doc_error(
                        "matrix",
                        format!("expected {k} rows, found {}", rows.len()),
                    ));
                }
                let parsed = rows
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        if row.len() != k {
                            return Err(doc_error(
                                format!("matrix[{r}]"),
                                format!("expected {k} entries, found {}", row.len()),
                            ));
                        }
                        row.iter()
                            .enumerate()
                            .map(|(c, s)| parse_at(s, || format!("matrix[{r}][{c}]")))
                            .collect()
                    })
                    .collect::<Result<Vec<Vec<Rational>>>>()?;
                alg.from_matrix(&parsed)
                    .map_err(|e| doc_error("matrix", e.to_string()))
            }
            (Some(_), Some(_)) => Err(doc_error(
                ".",
                "give either \"coords\" or \"matrix\", not both",
            )),
            (None, None) => Err(doc_error(".", "missing \"coords\" or \"matrix\"")),
        }
    }
}

pub fn parse_element(alg: &Arc<Algebra>, text: &str) -> Result<Element> {
    ElementDoc::parse(text)?.to_element(alg)
}

pub fn element_json(e: &Element) -> serde_json::Value {
    serde_json::to_value(ElementDoc::from_element(e)).expect("element documents serialize")
}
