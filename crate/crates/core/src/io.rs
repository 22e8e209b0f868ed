//! Versioned JSON documents for functions and function classes.
//!
//! One document holds one function. Fuzzy values are stored per domain point
//! as `[lo, hi]` pairs, one pair per level. Floats are written in shortest
//! round-trip form, so `load(save(x)) == x` bit for bit. Every structural
//! invariant is re-validated on load.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conv::{FunctionClass, Membership};
use crate::error::Error;
use crate::fuzzy::{FuzzyNumber, LevelGrid};
use crate::space::{DomainGrid, FuzzyFunction, ScalarFunction};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{context}: {source}")]
    Validation {
        context: String,
        #[source]
        source: Error,
    },

    #[error("unsupported document: {0}")]
    Unsupported(String),
}

impl DocumentError {
    pub fn kind(&self) -> &'static str {
        match self {
            DocumentError::Io { .. } => "IoError",
            DocumentError::Parse { .. } => "ParseError",
            DocumentError::Validation { .. } => "ValidationError",
            DocumentError::Unsupported(_) => "UnsupportedDocument",
        }
    }
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

fn invalid(context: impl Into<String>) -> impl FnOnce(Error) -> DocumentError {
    let context = context.into();
    move |source| DocumentError::Validation { context, source }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionKind {
    Fuzzy,
    Scalar,
}

/// Per-point payload: `[lo, hi]` pairs per level for fuzzy functions, one
/// real per point for scalar functions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FunctionValues {
    Fuzzy(Vec<Vec<[f64; 2]>>),
    Scalar(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionDocument {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level_grid: Option<Vec<f64>>,
    pub domain_grid: Vec<f64>,
    pub kind: FunctionKind,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub unit_range: bool,
    pub values: FunctionValues,
}

/// A function decoded from a document.
#[derive(Debug, Clone, PartialEq)]
pub enum LoadedFunction {
    Fuzzy(FuzzyFunction),
    Scalar(ScalarFunction),
}

impl FunctionDocument {
    pub fn from_fuzzy(f: &FuzzyFunction) -> Self {
        let values = f
            .values()
            .iter()
            .map(|u| {
                u.lower()
                    .iter()
                    .zip(u.upper())
                    .map(|(&lo, &hi)| [lo, hi])
                    .collect()
            })
            .collect();
        FunctionDocument {
            schema: SCHEMA_VERSION,
            level_grid: Some(f.levels().levels().to_vec()),
            domain_grid: f.domain().points().to_vec(),
            kind: FunctionKind::Fuzzy,
            unit_range: false,
            values: FunctionValues::Fuzzy(values),
        }
    }

    pub fn from_scalar(s: &ScalarFunction) -> Self {
        FunctionDocument {
            schema: SCHEMA_VERSION,
            level_grid: None,
            domain_grid: s.domain().points().to_vec(),
            kind: FunctionKind::Scalar,
            unit_range: s.is_unit_range(),
            values: FunctionValues::Scalar(s.values().to_vec()),
        }
    }

    pub fn to_function(&self) -> Result<LoadedFunction, DocumentError> {
        check_schema(self.schema)?;
        let domain = DomainGrid::new(self.domain_grid.clone()).map_err(invalid("domain_grid"))?;
        match (&self.kind, &self.values) {
            (FunctionKind::Fuzzy, FunctionValues::Fuzzy(points)) => {
                let levels = self.level_grid.clone().ok_or_else(|| {
                    DocumentError::Unsupported("fuzzy document without level_grid".into())
                })?;
                let levels = LevelGrid::new(levels).map_err(invalid("level_grid"))?;
                if points.len() != domain.len() {
                    return Err(DocumentError::Validation {
                        context: "values".into(),
                        source: Error::LengthMismatch {
                            expected: domain.len(),
                            found: points.len(),
                        },
                    });
                }
                let values = points
                    .iter()
                    .enumerate()
                    .map(|(i, pairs)| {
                        let (lo, hi) = pairs.iter().map(|&[l, h]| (l, h)).unzip();
                        FuzzyNumber::new(levels.clone(), lo, hi)
                            .map_err(invalid(format!("values at domain index {i}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let f = FuzzyFunction::new(domain, values).map_err(invalid("values"))?;
                Ok(LoadedFunction::Fuzzy(f))
            }
            // an empty list decodes as the fuzzy variant
            (FunctionKind::Scalar, FunctionValues::Scalar(values)) => {
                self.scalar_from(domain, values.clone())
            }
            (FunctionKind::Scalar, FunctionValues::Fuzzy(v)) if v.is_empty() => {
                self.scalar_from(domain, Vec::new())
            }
            (kind, _) => Err(DocumentError::Unsupported(format!(
                "values do not match kind {kind:?}"
            ))),
        }
    }

    fn scalar_from(
        &self,
        domain: DomainGrid,
        values: Vec<f64>,
    ) -> Result<LoadedFunction, DocumentError> {
        let s = if self.unit_range {
            ScalarFunction::unit(domain, values)
        } else {
            ScalarFunction::new(domain, values)
        }
        .map_err(invalid("values"))?;
        Ok(LoadedFunction::Scalar(s))
    }

    pub fn to_fuzzy(&self) -> Result<FuzzyFunction, DocumentError> {
        match self.to_function()? {
            LoadedFunction::Fuzzy(f) => Ok(f),
            LoadedFunction::Scalar(_) => Err(DocumentError::Unsupported(
                "expected a fuzzy function, found a scalar one".into(),
            )),
        }
    }

    pub fn to_scalar(&self) -> Result<ScalarFunction, DocumentError> {
        match self.to_function()? {
            LoadedFunction::Scalar(s) => Ok(s),
            LoadedFunction::Fuzzy(_) => Err(DocumentError::Unsupported(
                "expected a scalar function, found a fuzzy one".into(),
            )),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        to_pretty_json(self)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, DocumentError> {
        Self::from_json(&read(path.as_ref())?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), DocumentError> {
        write(path.as_ref(), &self.to_json())
    }
}

/// Serializable membership rules.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MembershipRule {
    Enumerated,
    CrispConstantRange { lo: f64, hi: f64 },
    PointwiseCrispRange { lo: f64, hi: f64 },
}

impl From<&MembershipRule> for Membership {
    fn from(rule: &MembershipRule) -> Self {
        match *rule {
            MembershipRule::Enumerated => Membership::Enumerated,
            MembershipRule::CrispConstantRange { lo, hi } => {
                Membership::CrispConstantRange { lo, hi }
            }
            MembershipRule::PointwiseCrispRange { lo, hi } => {
                Membership::PointwiseCrispRange { lo, hi }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedFunction {
    pub name: String,
    pub function: FunctionDocument,
}

/// A function class: shared grids, the enumeration (every entry is a
/// generator), the membership rule and the multiplier family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDocument {
    pub schema: u32,
    pub level_grid: Vec<f64>,
    pub domain_grid: Vec<f64>,
    pub membership: MembershipRule,
    pub enumeration: Vec<NamedFunction>,
    #[serde(default)]
    pub multipliers: Vec<FunctionDocument>,
}

impl ClassDocument {
    /// Serializes a class whose rule is one of the document rules. Entries
    /// are named `names[i]`, falling back to `g{i}`.
    pub fn from_class(class: &FunctionClass, names: &[&str]) -> Result<Self, DocumentError> {
        let membership = match class.rule() {
            Membership::Enumerated => MembershipRule::Enumerated,
            Membership::CrispConstantRange { lo, hi } => {
                MembershipRule::CrispConstantRange { lo: *lo, hi: *hi }
            }
            Membership::PointwiseCrispRange { lo, hi } => {
                MembershipRule::PointwiseCrispRange { lo: *lo, hi: *hi }
            }
            Membership::Custom { label, .. } => {
                return Err(DocumentError::Unsupported(format!(
                    "custom membership rule `{label}` cannot be serialized"
                )))
            }
        };
        let enumeration = class
            .enumeration()
            .iter()
            .enumerate()
            .map(|(i, f)| NamedFunction {
                name: names
                    .get(i)
                    .map_or_else(|| format!("g{i}"), |n| n.to_string()),
                function: FunctionDocument::from_fuzzy(f),
            })
            .collect();
        Ok(ClassDocument {
            schema: SCHEMA_VERSION,
            level_grid: class.levels().levels().to_vec(),
            domain_grid: class.domain().points().to_vec(),
            membership,
            enumeration,
            multipliers: class
                .multipliers()
                .iter()
                .map(FunctionDocument::from_scalar)
                .collect(),
        })
    }

    pub fn names(&self) -> Vec<&str> {
        self.enumeration.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn to_class(&self) -> Result<FunctionClass, DocumentError> {
        check_schema(self.schema)?;
        let levels = LevelGrid::new(self.level_grid.clone()).map_err(invalid("level_grid"))?;
        let domain = DomainGrid::new(self.domain_grid.clone()).map_err(invalid("domain_grid"))?;
        let functions = self
            .enumeration
            .iter()
            .map(|entry| {
                let f = entry.function.to_fuzzy()?;
                if f.domain() != &domain || f.levels() != &levels {
                    return Err(DocumentError::Validation {
                        context: format!("enumeration entry `{}`", entry.name),
                        source: Error::GridMismatch,
                    });
                }
                Ok(f)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let multipliers = self
            .multipliers
            .iter()
            .enumerate()
            .map(|(i, doc)| {
                let phi = doc.to_scalar()?;
                if phi.domain() != &domain {
                    return Err(DocumentError::Validation {
                        context: format!("multiplier {i}"),
                        source: Error::GridMismatch,
                    });
                }
                ScalarFunction::unit(domain.clone(), phi.values().to_vec())
                    .map_err(invalid(format!("multiplier {i}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        FunctionClass::new((&self.membership).into(), functions)
            .map_err(invalid("enumeration"))?
            .with_multipliers(multipliers)
            .map_err(invalid("multipliers"))
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        to_pretty_json(self)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, DocumentError> {
        Self::from_json(&read(path.as_ref())?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), DocumentError> {
        write(path.as_ref(), &self.to_json())
    }
}

/// Either kind of document, told apart by the presence of `enumeration`.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyDocument {
    Function(FunctionDocument),
    Class(ClassDocument),
}

impl AnyDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("enumeration").is_some() {
            Ok(AnyDocument::Class(ClassDocument::from_json(text)?))
        } else {
            Ok(AnyDocument::Function(FunctionDocument::from_json(text)?))
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, DocumentError> {
        Self::from_json(&read(path.as_ref())?)
    }
}

fn check_schema(schema: u32) -> Result<(), DocumentError> {
    if schema != SCHEMA_VERSION {
        return Err(DocumentError::Unsupported(format!(
            "schema version {schema}, expected {SCHEMA_VERSION}"
        )));
    }
    Ok(())
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents always serialize");
    text.push('\n');
    text
}

fn read(path: &Path) -> Result<String, DocumentError> {
    fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), DocumentError> {
    fs::write(path, text).map_err(|source| DocumentError::Io {
        path: path.to_path_buf(),
        source,
    })
}
