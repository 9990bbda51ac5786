use std::fmt;

use super::space::{Assignment, SampleSpace};
use crate::error::{Error, Result};

const WORD: usize = 64;

/// A set of atoms of one sample space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Event {
    space: SampleSpace,
    words: Vec<u64>,
}

impl Event {
    pub fn empty(space: &SampleSpace) -> Self {
        Self {
            space: space.clone(),
            words: vec![0; space.atom_count().div_ceil(WORD)],
        }
    }

    pub fn full(space: &SampleSpace) -> Self {
        Self::empty(space).complement()
    }

    /// Event made of the listed atoms. Fails on an index past the last atom.
    pub fn from_atoms<I: IntoIterator<Item = usize>>(
        space: &SampleSpace,
        atoms: I,
    ) -> Result<Self> {
        let mut e = Self::empty(space);
        for atom in atoms {
            if atom >= space.atom_count() {
                return Err(Error::InvalidAssignment(format!(
                    "atom {atom} out of range"
                )));
            }
            e.words[atom / WORD] |= 1 << (atom % WORD);
        }
        Ok(e)
    }

    /// All atoms agreeing with `partial` on every listed variable.
    pub fn cylinder(space: &SampleSpace, partial: &Assignment) -> Result<Self> {
        let (mask, bits) = space.mask_bits(partial)?;
        let mut e = Self::empty(space);
        for atom in (0..space.atom_count()).filter(|a| a & mask == bits) {
            e.words[atom / WORD] |= 1 << (atom % WORD);
        }
        Ok(e)
    }

    pub fn singleton(space: &SampleSpace, atom: usize) -> Result<Self> {
        Self::from_atoms(space, [atom])
    }

    pub fn space(&self) -> &SampleSpace {
        &self.space
    }

    pub fn contains(&self, atom: usize) -> bool {
        atom < self.space.atom_count() && self.words[atom / WORD] >> (atom % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Atom indices in increasing order.
    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.space.atom_count()).filter(move |&a| self.contains(a))
    }

    pub fn complement(&self) -> Self {
        let n = self.space.atom_count();
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        if !n.is_multiple_of(WORD) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (n % WORD)) - 1;
            }
        }
        Self {
            space: self.space.clone(),
            words,
        }
    }

    pub fn union(&self, other: &Event) -> Result<Self> {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Event) -> Result<Self> {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Event) -> Result<Self> {
        self.zip(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Event) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn with_atom(&self, atom: usize) -> Result<Self> {
        self.union(&Event::singleton(&self.space, atom)?)
    }

    fn zip(&self, other: &Event, op: impl Fn(u64, u64) -> u64) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(Self {
            space: self.space.clone(),
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.atoms().map(|a| self.space.atom_label(a)).collect();
        write!(f, "Event{{{}}}", labels.join(","))
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
