use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::contextuality::ContextFamily;
use crate::error::{Error, Result};
use crate::measure::{Assignment, Context, Event, SampleSpace, SignedMeasure};
use crate::rational::{parse_rational, Rational};
use crate::scenarios::{self, ScenarioBundle};
use crate::solver::ConstraintSystem;

/// JSON scenario description. Exactly one of `contexts`, `constraints` and
/// `builtin` must be present.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default)]
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contexts: Option<Vec<ContextSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraints: Option<Vec<ConstraintSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<BuiltinSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextSpec {
    pub variables: Vec<String>,
    /// `"+-"` keys in the context's variable order; missing keys have mass zero.
    pub distribution: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintSpec {
    pub event: BTreeMap<String, i64>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuiltinSpec {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

/// Why a scenario file could not be used.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Model(#[from] Error),
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// File describing every context of `f` over its global variables.
    pub fn from_family(f: &ContextFamily) -> Self {
        let contexts = f
            .contexts()
            .iter()
            .map(|c| {
                let d = c.distribution();
                let distribution = d
                    .masses()
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| !num_traits::Zero::is_zero(*m))
                    .map(|(atom, m)| (c.space().atom_label(atom), m.to_string()))
                    .collect();
                ContextSpec {
                    variables: c.variables().to_vec(),
                    distribution,
                }
            })
            .collect();
        Self {
            variables: f.global_variables().to_vec(),
            contexts: Some(contexts),
            ..Self::default()
        }
    }

    pub fn to_bundle(&self) -> Result<ScenarioBundle, FileError> {
        let present = [
            self.contexts.is_some(),
            self.constraints.is_some(),
            self.builtin.is_some(),
        ];
        if present.iter().filter(|&&p| p).count() != 1 {
            return Err(FileError::Shape(
                "a scenario needs exactly one of `contexts`, `constraints`, `builtin`".into(),
            ));
        }
        if let Some(b) = &self.builtin {
            let bundle = scenarios::builtin(&b.name, &b.params)?;
            let vars = bundle.constraint_system().space().variables().to_vec();
            if !self.variables.is_empty() && self.variables != vars {
                return Err(FileError::Shape(format!(
                    "builtin `{}` has variables {vars:?}, file lists {:?}",
                    b.name, self.variables
                )));
            }
            return Ok(bundle);
        }
        if let Some(contexts) = &self.contexts {
            let contexts = contexts
                .iter()
                .map(context_of)
                .collect::<Result<Vec<_>>>()?;
            return Ok(ScenarioBundle::family(
                "contexts",
                ContextFamily::new(&self.variables, contexts)?,
            ));
        }
        let space = SampleSpace::new(&self.variables)?;
        let rows = self
            .constraints
            .iter()
            .flatten()
            .map(|c| {
                let pairs: Vec<(&str, i64)> =
                    c.event.iter().map(|(k, &v)| (k.as_str(), v)).collect();
                let event = Event::cylinder(&space, &Assignment::try_from_signs(&pairs)?)?;
                Ok((event, parse_rational(&c.value)?))
            })
            .collect::<Result<Vec<(Event, Rational)>>>()?;
        // Conflicting rows are kept; the solver reports them as infeasible.
        Ok(ScenarioBundle::system(
            "constraints",
            ConstraintSystem::from_rows(&space, rows)?,
        ))
    }
}

fn context_of(spec: &ContextSpec) -> Result<Context> {
    let space = SampleSpace::new(&spec.variables)?;
    let mut mass = vec![Rational::default(); space.atom_count()];
    for (key, value) in &spec.distribution {
        mass[space.parse_atom_label(key)?] = parse_rational(value)?;
    }
    Context::new(SignedMeasure::new(&space, mass)?)
}
