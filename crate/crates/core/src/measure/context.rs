use num_traits::{One, Signed, Zero};

use super::signed::SignedMeasure;
use super::space::{Assignment, SampleSpace};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A proper probability distribution over a subset of the variables: one
/// experimental configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    distribution: SignedMeasure,
}

impl Context {
    /// Fails unless every mass is nonnegative and the masses sum to exactly one.
    pub fn new(distribution: SignedMeasure) -> Result<Self> {
        let improper = |reason: String| Error::ImproperContext {
            variables: distribution.space().variables().to_vec(),
            reason,
        };
        if let Some((atom, m)) = distribution
            .masses()
            .iter()
            .enumerate()
            .find(|(_, m)| m.is_negative())
        {
            return Err(improper(format!(
                "atom {} has mass {m}",
                distribution.space().atom_label(atom)
            )));
        }
        let total = distribution.total();
        if !total.is_one() {
            return Err(improper(format!("masses sum to {total}")));
        }
        Ok(Self { distribution })
    }

    /// Context over `vars` whose listed atoms carry the given masses; the rest are zero.
    pub fn from_entries<S: AsRef<str>>(
        vars: &[S],
        entries: &[(Assignment, Rational)],
    ) -> Result<Self> {
        let space = SampleSpace::new(vars)?;
        Self::new(SignedMeasure::from_assignments(&space, entries)?)
    }

    /// Context over `vars` with masses keyed by `"+-"` labels in variable order.
    pub fn from_labels<S: AsRef<str>>(vars: &[S], entries: &[(&str, Rational)]) -> Result<Self> {
        let space = SampleSpace::new(vars)?;
        let mut mass = vec![Rational::zero(); space.atom_count()];
        for (label, value) in entries {
            mass[space.parse_atom_label(label)?] += value;
        }
        Self::new(SignedMeasure::new(&space, mass)?)
    }

    pub fn variables(&self) -> &[String] {
        self.distribution.space().variables()
    }

    pub fn space(&self) -> &SampleSpace {
        self.distribution.space()
    }

    pub fn distribution(&self) -> &SignedMeasure {
        &self.distribution
    }

    /// Probability of a partial assignment over this context's variables.
    pub fn probability(&self, partial: &Assignment) -> Result<Rational> {
        self.distribution.cylinder_mass(partial)
    }

    /// `E(xy) = Σ x·y·p(x, y)` for two variables of the context.
    pub fn correlation(&self, x: &str, y: &str) -> Result<Rational> {
        let space = self.space();
        let (i, j) = (space.index_of(x)?, space.index_of(y)?);
        let mut e = Rational::zero();
        for (atom, m) in self.distribution.masses().iter().enumerate() {
            if space.outcome(atom, i) == space.outcome(atom, j) {
                e += m;
            } else {
                e -= m;
            }
        }
        Ok(e)
    }
}
