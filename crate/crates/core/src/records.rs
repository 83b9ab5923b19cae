//! JSON records for groups, quadratic forms and morphisms.
//!
//! A group record is a [`GroupSpec`]. A form record is
//!
//! ```json
//! { "group": <group record or path>, "values": { "<label>": "a/b", ... } }
//! ```
//!
//! with an optional `"bicharacter": { "<g>": { "<h>": "a/b" } }`
//! annotation. A morphism record is
//!
//! ```json
//! { "source": <group>, "target": <group>, "map": { "<label>": "<label>" } }
//! ```
//!
//! where each group may also be given as the path of a form record, in
//! which case its group is used. Relative paths resolve against the
//! directory of the referring file.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::group::{build_group, BuildOptions, FiniteGroup, GroupError, GroupHom, GroupSpec};
use crate::phase::Phase;
use crate::premetric::{FormError, PreMetricGroup, QuadraticForm};

#[derive(Debug, Error)]
pub enum RecordError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    #[error("{path}: {source}")]
    Group {
        path: String,
        #[source]
        source: GroupError,
    },
    #[error("{path}: {source}")]
    Form {
        path: String,
        #[source]
        source: FormError,
    },
}

impl RecordError {
    /// The form-validation failure, if that is what this error is.
    pub fn form_error(&self) -> Option<&FormError> {
        match self {
            RecordError::Form { source, .. } => Some(source),
            _ => None,
        }
    }
}

fn read(path: &Path) -> Result<String, RecordError> {
    fs::read_to_string(path).map_err(|e| RecordError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, RecordError> {
    serde_json::from_str(text).map_err(|e| RecordError::Parse {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn from_value<T: for<'de> Deserialize<'de>>(path: &Path, value: Value) -> Result<T, RecordError> {
    serde_json::from_value(value).map_err(|e| RecordError::Invalid {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn resolve(base: &Path, reference: &str) -> PathBuf {
    let p = Path::new(reference);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.parent().unwrap_or(Path::new("")).join(p)
    }
}

fn group_error(path: &Path) -> impl Fn(GroupError) -> RecordError + '_ {
    move |source| RecordError::Group {
        path: path.display().to_string(),
        source,
    }
}

/// Raw bytes of every file read while loading, in load order, for digests.
pub type Sources = Vec<(PathBuf, Vec<u8>)>;

pub struct Loader {
    pub options: BuildOptions,
    pub sources: Sources,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FormRecord {
    group: Value,
    values: BTreeMap<String, String>,
    #[serde(default)]
    bicharacter: Option<BTreeMap<String, BTreeMap<String, String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismRecord {
    source: Value,
    target: Value,
    map: BTreeMap<String, String>,
}

fn parse_phase(path: &Path, label: &str, text: &str) -> Result<Phase, RecordError> {
    text.parse().map_err(|e| RecordError::Invalid {
        path: path.display().to_string(),
        message: format!("value for {label:?}: {e}"),
    })
}

impl Loader {
    pub fn new(options: BuildOptions) -> Loader {
        Loader {
            options,
            sources: Vec::new(),
        }
    }

    fn read_json(&mut self, path: &Path) -> Result<(String, Value), RecordError> {
        let text = read(path)?;
        self.sources.push((path.to_path_buf(), text.clone().into_bytes()));
        let value = parse(path, &text)?;
        Ok((text, value))
    }

    /// Loads a group record, or the group of a form record.
    pub fn group(&mut self, path: &Path) -> Result<Arc<FiniteGroup>, RecordError> {
        let (text, value) = self.read_json(path)?;
        if value.get("values").is_some() {
            return Ok(Arc::clone(self.form_from_value(path, value)?.group()));
        }
        let spec: GroupSpec = parse(path, &text)?;
        Ok(Arc::new(build_group(&spec, &self.options).map_err(group_error(path))?))
    }

    fn group_ref(&mut self, base: &Path, value: Value) -> Result<Arc<FiniteGroup>, RecordError> {
        match value {
            Value::String(reference) => self.group(&resolve(base, &reference)),
            other => {
                let spec: GroupSpec = from_value(base, other)?;
                Ok(Arc::new(build_group(&spec, &self.options).map_err(group_error(base))?))
            }
        }
    }

    pub fn form(&mut self, path: &Path) -> Result<PreMetricGroup, RecordError> {
        let (_, value) = self.read_json(path)?;
        self.form_from_value(path, value)
    }

    fn form_from_value(&mut self, path: &Path, value: Value) -> Result<PreMetricGroup, RecordError> {
        let record: FormRecord = from_value(path, value)?;
        let group = self.group_ref(path, record.group)?;
        let mut values = vec![None; group.order()];
        for (label, text) in &record.values {
            let g = group.index_of(label).map_err(group_error(path))?;
            values[g] = Some(parse_phase(path, label, text)?);
        }
        if let Some(g) = values.iter().position(Option::is_none) {
            return Err(RecordError::Invalid {
                path: path.display().to_string(),
                message: format!("no value given for element {:?}", group.label(g)),
            });
        }
        let values: Vec<Phase> = values.into_iter().flatten().collect();
        let form_error = |source| RecordError::Form {
            path: path.display().to_string(),
            source,
        };
        let mut form = QuadraticForm::from_fn(&group, |g| values[g]).map_err(form_error)?;
        if let Some(beta) = record.bicharacter {
            let n = group.order();
            let mut table = vec![Phase::ZERO; n * n];
            for (g_label, row) in &beta {
                let g = group.index_of(g_label).map_err(group_error(path))?;
                for (h_label, text) in row {
                    let h = group.index_of(h_label).map_err(group_error(path))?;
                    table[g * n + h] = parse_phase(path, h_label, text)?;
                }
            }
            form = form.with_bicharacter(table);
        }
        Ok(PreMetricGroup::from_form(form))
    }

    pub fn morphism(&mut self, path: &Path) -> Result<GroupHom, RecordError> {
        let (_, value) = self.read_json(path)?;
        let record: MorphismRecord = from_value(path, value)?;
        let source = self.group_ref(path, record.source)?;
        let target = self.group_ref(path, record.target)?;
        GroupHom::from_labels(
            source,
            target,
            record.map.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .map_err(group_error(path))
    }
}
