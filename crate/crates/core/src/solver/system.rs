use std::collections::HashMap;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::measure::{Assignment, Event, SampleSpace, SignedMeasure};
use crate::rational::{int, Rational};

/// One equality constraint: the measure of `event` equals `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub event: Event,
    pub value: Rational,
}

/// Linear equalities on the atom masses of a sample space, always including
/// the normalization row (the whole space has mass one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    space: SampleSpace,
    rows: Vec<Row>,
}

const VALUE_BOUND: i64 = 1_000_000_000;

fn check_bound(value: &Rational) -> Result<()> {
    if value.abs() > int(VALUE_BOUND) {
        return Err(Error::ValueOutOfBounds(value.clone()));
    }
    Ok(())
}

impl ConstraintSystem {
    /// One cylinder row per constraint plus normalization.
    ///
    /// Repeated constraints on the same event are merged; two different values
    /// for the same event are rejected.
    pub fn assemble(space: &SampleSpace, constraints: &[(Assignment, Rational)]) -> Result<Self> {
        let mut rows: Vec<Row> = Vec::with_capacity(constraints.len() + 1);
        let mut seen: HashMap<Event, usize> = HashMap::new();
        let normalization = (Event::full(space), Rational::one());
        let cylinders = constraints
            .iter()
            .map(|(partial, value)| Ok((Event::cylinder(space, partial)?, value.clone())))
            .collect::<Result<Vec<_>>>()?;
        for (event, value) in cylinders.into_iter().chain(std::iter::once(normalization)) {
            check_bound(&value)?;
            match seen.get(&event) {
                Some(&i) if rows[i].value == value => {}
                Some(&i) => {
                    return Err(Error::ContradictoryRows {
                        event: format!("{event}"),
                        first: Box::new(rows[i].value.clone()),
                        second: Box::new(value),
                    })
                }
                None => {
                    seen.insert(event.clone(), rows.len());
                    rows.push(Row { event, value });
                }
            }
        }
        Ok(Self {
            space: space.clone(),
            rows,
        })
    }

    /// Arbitrary event rows. Exact duplicates are dropped; conflicting rows are
    /// kept so the solver can report infeasibility. Normalization is appended
    /// when no row already fixes the whole space to one.
    pub fn from_rows(space: &SampleSpace, rows: Vec<(Event, Rational)>) -> Result<Self> {
        let mut out: Vec<Row> = Vec::with_capacity(rows.len() + 1);
        for (event, value) in rows {
            if event.space() != space {
                return Err(Error::SpaceMismatch);
            }
            check_bound(&value)?;
            let row = Row { event, value };
            if !out.contains(&row) {
                out.push(row);
            }
        }
        let normalization = Row {
            event: Event::full(space),
            value: Rational::one(),
        };
        if !out.contains(&normalization) {
            out.push(normalization);
        }
        Ok(Self {
            space: space.clone(),
            rows: out,
        })
    }

    pub fn space(&self) -> &SampleSpace {
        &self.space
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn includes_normalization(&self) -> bool {
        self.rows
            .iter()
            .any(|r| r.value.is_one() && r.event.len() == self.space.atom_count())
    }

    /// Row-by-atom 0/1 indicator matrix and the right-hand side.
    pub fn matrix(&self) -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let n = self.space.atom_count();
        let a = self
            .rows
            .iter()
            .map(|r| {
                (0..n)
                    .map(|atom| {
                        if r.event.contains(atom) {
                            int(1)
                        } else {
                            int(0)
                        }
                    })
                    .collect()
            })
            .collect();
        let b = self.rows.iter().map(|r| r.value.clone()).collect();
        (a, b)
    }

    /// Whether `m` meets every row exactly.
    pub fn is_satisfied_by(&self, m: &SignedMeasure) -> Result<bool> {
        if m.space() != &self.space {
            return Err(Error::SpaceMismatch);
        }
        for r in &self.rows {
            if m.event_mass(&r.event)? != r.value {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Union of two systems' rows over the same space.
    pub fn join(&self, other: &ConstraintSystem) -> Result<ConstraintSystem> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let rows = self
            .rows
            .iter()
            .chain(&other.rows)
            .map(|r| (r.event.clone(), r.value.clone()))
            .collect();
        Self::from_rows(&self.space, rows)
    }
}
