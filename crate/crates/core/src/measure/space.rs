use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard cap on the number of variables, so that `2^n` atoms stay enumerable.
pub const MAX_VARIABLES: usize = 24;

/// Outcome of a single ±1-valued variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub fn from_sign(value: i64) -> Option<Self> {
        match value {
            1 => Some(Outcome::Plus),
            -1 => Some(Outcome::Minus),
            _ => None,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Outcome::Plus => 1,
            Outcome::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Outcome::Plus => '+',
            Outcome::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '+' => Some(Outcome::Plus),
            '-' => Some(Outcome::Minus),
            _ => None,
        }
    }

    fn from_bit(bit: bool) -> Self {
        if bit {
            Outcome::Plus
        } else {
            Outcome::Minus
        }
    }
}

/// Ordered list of named ±1 variables.
///
/// Atoms are the `2^n` full assignments, indexed so that bit `i` of the
/// atom index is set exactly when variable `i` takes the value `+1`. The
/// first variable is the least significant bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SampleSpace {
    variables: Arc<[String]>,
}

impl SampleSpace {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::NoVariables);
        }
        if names.len() > MAX_VARIABLES {
            return Err(Error::TooManyVariables(names.len()));
        }
        let mut seen = HashSet::new();
        for name in names {
            let name = name.as_ref();
            if name.is_empty() {
                return Err(Error::EmptyName);
            }
            if !seen.insert(name) {
                return Err(Error::DuplicateName(name.to_string()));
            }
        }
        Ok(Self {
            variables: names.iter().map(|n| n.as_ref().to_string()).collect(),
        })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn atom_count(&self) -> usize {
        1 << self.variables.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.variables.iter().any(|v| v == name)
    }

    /// Value of variable `var` in `atom`.
    pub fn outcome(&self, atom: usize, var: usize) -> Outcome {
        Outcome::from_bit(atom >> var & 1 == 1)
    }

    /// Atom index of a full assignment. Fails unless every variable is set.
    pub fn atom_of(&self, assignment: &Assignment) -> Result<usize> {
        let (mask, bits) = self.mask_bits(assignment)?;
        if mask != self.atom_count() - 1 {
            let missing = self
                .variables
                .iter()
                .enumerate()
                .find(|(i, _)| mask >> i & 1 == 0)
                .map(|(_, v)| v.clone())
                .unwrap_or_default();
            return Err(Error::InvalidAssignment(format!(
                "missing value for `{missing}`"
            )));
        }
        Ok(bits)
    }

    /// The full assignment encoded by `atom`.
    pub fn assignment_of(&self, atom: usize) -> Assignment {
        let mut a = Assignment::new();
        for (i, name) in self.variables.iter().enumerate() {
            a.entries.push((name.clone(), self.outcome(atom, i)));
        }
        a
    }

    /// `"+-+-"`-style label: one symbol per variable, in variable order.
    pub fn atom_label(&self, atom: usize) -> String {
        (0..self.variable_count())
            .map(|i| self.outcome(atom, i).symbol())
            .collect()
    }

    pub fn parse_atom_label(&self, label: &str) -> Result<usize> {
        let bad = || Error::InvalidAssignment(label.to_string());
        if label.chars().count() != self.variable_count() {
            return Err(bad());
        }
        label.chars().enumerate().try_fold(0usize, |acc, (i, c)| {
            match Outcome::from_symbol(c).ok_or_else(bad)? {
                Outcome::Plus => Ok(acc | 1 << i),
                Outcome::Minus => Ok(acc),
            }
        })
    }

    /// Bit mask of the assigned variables and the bits they must take.
    pub(crate) fn mask_bits(&self, assignment: &Assignment) -> Result<(usize, usize)> {
        let mut mask = 0usize;
        let mut bits = 0usize;
        for (name, outcome) in assignment.iter() {
            let i = self.index_of(name)?;
            mask |= 1 << i;
            if *outcome == Outcome::Plus {
                bits |= 1 << i;
            }
        }
        Ok((mask, bits))
    }
}

impl fmt::Debug for SampleSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("SampleSpace").field(&self.variables).finish()
    }
}

/// A partial assignment of ±1 outcomes to named variables.
///
/// Keeps insertion order; each variable appears at most once.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assignment {
    entries: Vec<(String, Outcome)>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an assignment from `(name, ±1)` pairs.
    ///
    /// Panics on a value other than `±1` or a repeated name; use
    /// [`Assignment::try_from_signs`] for untrusted input.
    pub fn of(pairs: &[(&str, i64)]) -> Self {
        Self::try_from_signs(pairs).expect("valid ±1 assignment")
    }

    pub fn try_from_signs(pairs: &[(&str, i64)]) -> Result<Self> {
        let mut a = Self::new();
        for &(name, sign) in pairs {
            let outcome =
                Outcome::from_sign(sign).ok_or_else(|| Error::InvalidOutcome(name.to_string()))?;
            a.insert(name, outcome)?;
        }
        Ok(a)
    }

    /// Parses `"Da=+1,D1=-1"`; values may be written `+1`, `1`, `-1`, `+` or `-`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidAssignment(text.to_string());
        let mut a = Self::new();
        if text.trim().is_empty() {
            return Ok(a);
        }
        for part in text.split(',') {
            let (name, value) = part.split_once('=').ok_or_else(bad)?;
            let outcome = match value.trim() {
                "+1" | "1" | "+" => Outcome::Plus,
                "-1" | "-" => Outcome::Minus,
                _ => return Err(bad()),
            };
            a.insert(name.trim(), outcome)?;
        }
        Ok(a)
    }

    pub fn insert(&mut self, name: &str, outcome: Outcome) -> Result<()> {
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        if self.get(name).is_some() {
            return Err(Error::DuplicateName(name.to_string()));
        }
        self.entries.push((name.to_string(), outcome));
        Ok(())
    }

    pub fn with(mut self, name: &str, outcome: Outcome) -> Self {
        self.insert(name, outcome).expect("fresh variable");
        self
    }

    pub fn get(&self, name: &str) -> Option<Outcome> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, o)| *o)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(String, Outcome)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(n, o)| format!("{n}={}1", o.symbol()))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_counts() {
        assert_eq!(
            SampleSpace::new(&["Da", "Db", "D1", "D2"])
                .unwrap()
                .atom_count(),
            16
        );
        assert_eq!(SampleSpace::new(&["X"]).unwrap().atom_count(), 2);
    }

    #[test]
    fn rejects_bad_names() {
        assert_eq!(
            SampleSpace::new(&["A", "A"]),
            Err(Error::DuplicateName("A".into()))
        );
        assert_eq!(SampleSpace::new::<&str>(&[]), Err(Error::NoVariables));
        assert_eq!(SampleSpace::new(&["A", ""]), Err(Error::EmptyName));
        let names: Vec<String> = (0..25).map(|i| format!("v{i}")).collect();
        assert_eq!(SampleSpace::new(&names), Err(Error::TooManyVariables(25)));
        let names: Vec<String> = (0..24).map(|i| format!("v{i}")).collect();
        assert!(SampleSpace::new(&names).is_ok());
    }

    #[test]
    fn bit_encoding_first_variable_is_lsb() {
        let s = SampleSpace::new(&["Da", "Db", "D1", "D2"]).unwrap();
        let a = Assignment::of(&[("Da", 1), ("Db", -1), ("D1", 1), ("D2", -1)]);
        assert_eq!(s.atom_of(&a).unwrap(), 0b0101);
        assert_eq!(s.atom_label(0b0101), "+-+-");
        assert_eq!(s.parse_atom_label("+-+-").unwrap(), 0b0101);
        assert_eq!(s.assignment_of(0b0101), a);
        assert!(s.atom_of(&Assignment::of(&[("Da", 1)])).is_err());
    }

    #[test]
    fn assignment_parsing() {
        let a = Assignment::parse("Da=+1, D1=-1").unwrap();
        assert_eq!(a, Assignment::of(&[("Da", 1), ("D1", -1)]));
        assert_eq!(a.to_string(), "Da=+1,D1=-1");
        assert!(Assignment::parse("Da=2").is_err());
        assert!(Assignment::parse("Da=1,Da=-1").is_err());
        assert!(Assignment::parse("").unwrap().is_empty());
        assert!(Assignment::try_from_signs(&[("X", 0)]).is_err());
    }
}
