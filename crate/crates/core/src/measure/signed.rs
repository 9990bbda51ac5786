use std::collections::HashSet;
use std::fmt;

use num_traits::{Signed, Zero};

use super::event::Event;
use super::space::{Assignment, SampleSpace};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Exact rational mass on every atom of a sample space. Masses may be negative.
///
/// The measure of an event is the sum of its atom masses, so finite
/// additivity holds by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct SignedMeasure {
    space: SampleSpace,
    mass: Vec<Rational>,
}

impl SignedMeasure {
    pub fn new(space: &SampleSpace, mass: Vec<Rational>) -> Result<Self> {
        if mass.len() != space.atom_count() {
            return Err(Error::WrongAtomCount {
                expected: space.atom_count(),
                got: mass.len(),
            });
        }
        Ok(Self {
            space: space.clone(),
            mass,
        })
    }

    pub fn zero(space: &SampleSpace) -> Self {
        Self {
            space: space.clone(),
            mass: vec![Rational::zero(); space.atom_count()],
        }
    }

    /// Builds a measure from `(full assignment, mass)` entries; other atoms get zero.
    /// Repeated atoms accumulate.
    pub fn from_assignments(
        space: &SampleSpace,
        entries: &[(Assignment, Rational)],
    ) -> Result<Self> {
        let mut m = Self::zero(space);
        for (assignment, value) in entries {
            let atom = space.atom_of(assignment)?;
            m.mass[atom] += value;
        }
        Ok(m)
    }

    pub fn space(&self) -> &SampleSpace {
        &self.space
    }

    pub fn masses(&self) -> &[Rational] {
        &self.mass
    }

    pub fn atom_mass(&self, atom: usize) -> &Rational {
        &self.mass[atom]
    }

    /// Mass of the atom given by a full assignment.
    pub fn mass_of(&self, assignment: &Assignment) -> Result<&Rational> {
        Ok(&self.mass[self.space.atom_of(assignment)?])
    }

    pub fn total(&self) -> Rational {
        self.mass.iter().sum()
    }

    pub fn event_mass(&self, event: &Event) -> Result<Rational> {
        if event.space() != &self.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(event.atoms().map(|a| &self.mass[a]).sum())
    }

    /// Mass of the cylinder of `partial`.
    pub fn cylinder_mass(&self, partial: &Assignment) -> Result<Rational> {
        self.event_mass(&Event::cylinder(&self.space, partial)?)
    }

    pub fn l1_norm(&self) -> Rational {
        self.mass.iter().map(|m| m.abs()).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mass.iter().all(|m| !m.is_negative())
    }

    pub fn support(&self) -> Event {
        Event::from_atoms(
            &self.space,
            (0..self.mass.len()).filter(|&a| !self.mass[a].is_zero()),
        )
        .expect("atoms in range")
    }

    /// Splits the measure into its positive and negative parts.
    ///
    /// `pos(ω) = max(m(ω), 0)` and `neg(ω) = max(−m(ω), 0)`: the supports are
    /// disjoint, `m = pos − neg`, and `total(pos) + total(neg) = l1_norm(m)`.
    pub fn jordan_decompose(&self) -> (SignedMeasure, SignedMeasure) {
        let zero = Rational::zero();
        let pos = self
            .mass
            .iter()
            .map(|m| if m > &zero { m.clone() } else { zero.clone() });
        let neg = self
            .mass
            .iter()
            .map(|m| if m < &zero { -m } else { zero.clone() });
        (
            SignedMeasure {
                space: self.space.clone(),
                mass: pos.collect(),
            },
            SignedMeasure {
                space: self.space.clone(),
                mass: neg.collect(),
            },
        )
    }

    /// Pushes the measure forward onto the sub-space over `vars`, summing each
    /// sub-atom's extensions. The sub-space keeps the caller's variable order.
    pub fn marginalize<S: AsRef<str>>(&self, vars: &[S]) -> Result<SignedMeasure> {
        let mut seen = HashSet::new();
        let mut positions = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if !seen.insert(v) {
                return Err(Error::DuplicateName(v.to_string()));
            }
            positions.push(self.space.index_of(v)?);
        }
        let sub = SampleSpace::new(vars)?;
        let mut mass = vec![Rational::zero(); sub.atom_count()];
        for (atom, m) in self.mass.iter().enumerate() {
            let sub_atom = positions
                .iter()
                .enumerate()
                .fold(0usize, |acc, (j, &i)| acc | (atom >> i & 1) << j);
            mass[sub_atom] += m;
        }
        Ok(SignedMeasure { space: sub, mass })
    }

    /// `m(a ∩ b) / m(b)`, returned as-is even when it falls outside `[0, 1]`.
    pub fn signed_conditional(&self, a: &Event, b: &Event) -> Result<Rational> {
        let denominator = self.event_mass(b)?;
        if denominator.is_zero() {
            return Err(Error::UndefinedConditional);
        }
        Ok(self.event_mass(&a.intersection(b)?)? / denominator)
    }

    /// Nested events `s1 ⊆ s2` with `m(s1) > m(s2)`, if the measure has a negative atom.
    ///
    /// Takes the first negative atom `ω`, lets `s1` be every positive atom other
    /// than `ω` (an event of maximal mass avoiding `ω`) and `s2 = s1 ∪ {ω}`.
    pub fn nonmonotonicity_witness(&self) -> Option<(Event, Event)> {
        let negative = self.mass.iter().position(|m| m.is_negative())?;
        let s1 = Event::from_atoms(
            &self.space,
            (0..self.mass.len()).filter(|&a| a != negative && self.mass[a].is_positive()),
        )
        .expect("atoms in range");
        let s2 = s1.with_atom(negative).expect("same space");
        Some((s1, s2))
    }

    /// True when `s1 ⊆ s2` and `m(s1) > m(s2)`.
    pub fn is_nonmonotone_pair(&self, s1: &Event, s2: &Event) -> Result<bool> {
        Ok(s1.is_subset(s2)? && self.event_mass(s1)? > self.event_mass(s2)?)
    }

    pub fn checked_sub(&self, other: &SignedMeasure) -> Result<SignedMeasure> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(SignedMeasure {
            space: self.space.clone(),
            mass: self
                .mass
                .iter()
                .zip(&other.mass)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

impl fmt::Debug for SignedMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (atom, m) in self.mass.iter().enumerate() {
            if !m.is_zero() {
                map.entry(&self.space.atom_label(atom), &m.to_string());
            }
        }
        map.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn two_atoms() -> SignedMeasure {
        let s = SampleSpace::new(&["X"]).unwrap();
        SignedMeasure::new(&s, vec![ratio(3, 2), ratio(-1, 2)]).unwrap()
    }

    #[test]
    fn jordan_splits_two_atom_measure() {
        let m = two_atoms();
        let (pos, neg) = m.jordan_decompose();
        assert_eq!(pos.masses(), &[ratio(3, 2), int(0)]);
        assert_eq!(neg.masses(), &[int(0), ratio(1, 2)]);
        assert_eq!(pos.checked_sub(&neg).unwrap(), m);
        assert_eq!(pos.total() + neg.total(), m.l1_norm());
    }

    #[test]
    fn jordan_of_nonnegative_is_identity() {
        let s = SampleSpace::new(&["X", "Y"]).unwrap();
        let m = SignedMeasure::new(&s, vec![ratio(1, 4); 4]).unwrap();
        let (pos, neg) = m.jordan_decompose();
        assert_eq!(pos, m);
        assert_eq!(neg, SignedMeasure::zero(&s));
    }

    #[test]
    fn basic_masses() {
        let m = two_atoms();
        assert_eq!(m.event_mass(&Event::empty(m.space())).unwrap(), int(0));
        assert_eq!(m.total(), int(1));
        assert_eq!(m.l1_norm(), int(2));
        assert_eq!(SignedMeasure::zero(m.space()).l1_norm(), int(0));
        let other = SampleSpace::new(&["Y"]).unwrap();
        assert_eq!(
            m.event_mass(&Event::full(&other)),
            Err(Error::SpaceMismatch)
        );
        assert!(SignedMeasure::new(m.space(), vec![int(1)]).is_err());
    }

    #[test]
    fn nonmonotone_two_atom_measure() {
        let m = two_atoms();
        let (s1, s2) = m.nonmonotonicity_witness().unwrap();
        assert_eq!(s1.atoms().collect::<Vec<_>>(), vec![0]);
        assert_eq!(s2.atoms().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(m.event_mass(&s1).unwrap(), ratio(3, 2));
        assert_eq!(m.event_mass(&s2).unwrap(), int(1));
        assert!(m.is_nonmonotone_pair(&s1, &s2).unwrap());
    }

    #[test]
    fn proper_distribution_has_no_witness() {
        let s = SampleSpace::new(&["X", "Y"]).unwrap();
        let m =
            SignedMeasure::new(&s, vec![ratio(1, 2), int(0), ratio(1, 4), ratio(1, 4)]).unwrap();
        assert!(m.nonmonotonicity_witness().is_none());
    }

    #[test]
    fn marginalize_keeps_caller_order() {
        let s = SampleSpace::new(&["X", "Y"]).unwrap();
        // atoms: 0 = (-,-), 1 = (+,-), 2 = (-,+), 3 = (+,+)
        let m = SignedMeasure::new(&s, vec![ratio(1, 8), ratio(1, 4), ratio(1, 8), ratio(1, 2)])
            .unwrap();
        let y = m.marginalize(&["Y"]).unwrap();
        assert_eq!(y.masses(), &[ratio(3, 8), ratio(5, 8)]);
        let yx = m.marginalize(&["Y", "X"]).unwrap();
        assert_eq!(
            yx.masses(),
            &[ratio(1, 8), ratio(1, 8), ratio(1, 4), ratio(1, 2)]
        );
        assert_eq!(m.marginalize(&["X", "Y"]).unwrap(), m);
        assert_eq!(
            m.marginalize(&["Z"]),
            Err(Error::UnknownVariable("Z".into()))
        );
        assert_eq!(
            m.marginalize(&["X", "X"]),
            Err(Error::DuplicateName("X".into()))
        );
    }

    #[test]
    fn conditional_on_null_event_is_undefined() {
        let s = SampleSpace::new(&["X"]).unwrap();
        let m = SignedMeasure::new(&s, vec![int(1), int(0)]).unwrap();
        let plus = Event::cylinder(&s, &Assignment::of(&[("X", 1)])).unwrap();
        assert_eq!(
            m.signed_conditional(&plus, &plus),
            Err(Error::UndefinedConditional)
        );
        let minus = plus.complement();
        assert_eq!(m.signed_conditional(&plus, &minus).unwrap(), int(0));
    }
}
