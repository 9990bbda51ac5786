use std::fmt::Write as _;

use serde::Serialize;

use crate::contextuality::BiasWitness;
use crate::measure::SignedMeasure;
use crate::solver::SolveResult;

/// Output of one subcommand. Field order is the JSON key order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub scenario: String,
    pub variables: Vec<String>,
    pub status: String,
    pub mstar: Option<String>,
    pub witness: Option<Vec<AtomMass>>,
    pub bias: Option<BiasReport>,
    pub rank: Option<usize>,
    pub nullity: Option<usize>,
    pub conditionals: Vec<ConditionalReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomMass {
    /// One `+`/`-` per variable, in variable order.
    pub atom: String,
    pub mass: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiasReport {
    pub event: String,
    pub context_i: usize,
    pub context_j: usize,
    pub value_i: String,
    pub value_j: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionalReport {
    pub target: String,
    pub given: String,
    /// Absent when the conditioning event has zero mass.
    pub value: Option<String>,
    pub proper_range: Option<bool>,
}

pub(crate) fn witness_rows(m: &SignedMeasure) -> Vec<AtomMass> {
    m.masses()
        .iter()
        .enumerate()
        .map(|(atom, mass)| AtomMass {
            atom: m.space().atom_label(atom),
            mass: mass.to_string(),
        })
        .collect()
}

impl Report {
    pub(crate) fn with_solve(mut self, r: &SolveResult) -> Self {
        self.status = r.status.as_str().to_string();
        self.mstar = r.mstar.as_ref().map(|m| m.to_string());
        self.witness = r.witness.as_ref().map(witness_rows);
        self.rank = Some(r.rank);
        self.nullity = Some(r.nullity);
        self
    }

    pub(crate) fn with_bias(mut self, w: &BiasWitness) -> Self {
        self.bias = Some(BiasReport {
            event: w.event.to_string(),
            context_i: w.context_i,
            context_j: w.context_j,
            value_i: w.value_i.to_string(),
            value_j: w.value_j.to_string(),
        });
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario:  {}", self.scenario);
        let _ = writeln!(out, "variables: {}", self.variables.join(" "));
        let _ = writeln!(out, "status:    {}", self.status);
        if let Some(m) = &self.mstar {
            let _ = writeln!(out, "M* = {m}");
        }
        if let (Some(r), Some(n)) = (self.rank, self.nullity) {
            let _ = writeln!(out, "rank = {r}, nullity = {n}");
        }
        if let Some(b) = &self.bias {
            let _ = writeln!(
                out,
                "bias on {}: context {} gives {}, context {} gives {}",
                b.event, b.context_i, b.value_i, b.context_j, b.value_j
            );
        }
        for c in &self.conditionals {
            match &c.value {
                Some(v) => {
                    let note = if c.proper_range == Some(false) {
                        "  (outside [0, 1])"
                    } else {
                        ""
                    };
                    let _ = writeln!(out, "P({} | {}) = {v}{note}", c.target, c.given);
                }
                None => {
                    let _ = writeln!(
                        out,
                        "P({} | {}) undefined: conditioning event has mass 0",
                        c.target, c.given
                    );
                }
            }
        }
        if let Some(rows) = &self.witness {
            let width = rows
                .iter()
                .map(|r| r.atom.len())
                .max()
                .unwrap_or(0)
                .max("atom".len());
            let _ = writeln!(out, "witness:");
            let _ = writeln!(out, "  {:<width$}  mass", "atom");
            for r in rows {
                let _ = writeln!(out, "  {:<width$}  {}", r.atom, r.mass);
            }
        }
        out
    }
}
