//! Checks for the Kolmogorov and upper-probability axiom systems on finite spaces.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::signed::SignedMeasure;
use crate::rational::Rational;

/// One failed axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// K1: an elementary event has negative mass.
    NegativeAtom { atom: usize, mass: Rational },
    /// K1: an elementary event has mass above one.
    AtomAboveOne { atom: usize, mass: Rational },
    /// K2: the whole space does not have mass one.
    TotalMass { total: Rational },
    /// U1: an elementary event's upper value lies outside `[0, 1]`.
    UpperAtomRange { atom: usize, value: Rational },
    /// U2: the value on the whole space is missing or differs from one.
    UpperTotal { value: Option<Rational> },
    /// U3: a pair value exceeds the sum of its two atoms' values.
    Superadditive {
        pair: (usize, usize),
        value: Rational,
        bound: Rational,
    },
    /// U3 refers to an atom without a value.
    MissingAtom { atom: usize },
    /// A pair must name two distinct atoms.
    DegeneratePair { atom: usize },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::NegativeAtom { .. } | Violation::AtomAboveOne { .. } => "K1",
            Violation::TotalMass { .. } => "K2",
            Violation::UpperAtomRange { .. } => "U1",
            Violation::UpperTotal { .. } => "U2",
            Violation::Superadditive { .. }
            | Violation::MissingAtom { .. }
            | Violation::DegeneratePair { .. } => "U3",
        }
    }

    pub fn is_k1(&self) -> bool {
        self.axiom() == "K1"
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NegativeAtom { atom, mass } => {
                write!(f, "K1: atom {atom} has negative mass {mass}")
            }
            Violation::AtomAboveOne { atom, mass } => {
                write!(f, "K1: atom {atom} has mass {mass} > 1")
            }
            Violation::TotalMass { total } => write!(f, "K2: total mass is {total}, not 1"),
            Violation::UpperAtomRange { atom, value } => {
                write!(f, "U1: atom {atom} has value {value} outside [0,1]")
            }
            Violation::UpperTotal { value: Some(v) } => {
                write!(f, "U2: value on the whole space is {v}, not 1")
            }
            Violation::UpperTotal { value: None } => {
                write!(f, "U2: no value given for the whole space")
            }
            Violation::Superadditive { pair, value, bound } => {
                write!(f, "U3: pair {pair:?} has value {value} > {bound}")
            }
            Violation::MissingAtom { atom } => write!(f, "U3: atom {atom} has no value"),
            Violation::DegeneratePair { atom } => write!(f, "U3: pair repeats atom {atom}"),
        }
    }
}

/// K1 and K2 violations of `m`. K3 holds by construction for [`SignedMeasure`].
pub fn validate_kolmogorov(m: &SignedMeasure) -> Vec<Violation> {
    let one = Rational::one();
    let mut out = Vec::new();
    for (atom, mass) in m.masses().iter().enumerate() {
        if mass.is_negative() {
            out.push(Violation::NegativeAtom {
                atom,
                mass: mass.clone(),
            });
        } else if mass > &one {
            out.push(Violation::AtomAboveOne {
                atom,
                mass: mass.clone(),
            });
        }
    }
    let total = m.total();
    if total != one {
        out.push(Violation::TotalMass { total });
    }
    out
}

/// Upper-probability values on elementary events, on pairs of them and on the whole space.
#[derive(Clone, Debug, Default)]
pub struct UpperTable {
    pub atoms: BTreeMap<usize, Rational>,
    /// Keys are unordered pairs; `(i, j)` and `(j, i)` name the same pair.
    pub pairs: BTreeMap<(usize, usize), Rational>,
    pub whole: Option<Rational>,
}

/// U1–U3 violations of an upper-probability table.
///
/// Only what the axioms constrain is checked: atom values, the value on the
/// whole space, and subadditivity on pairs.
pub fn validate_upper(table: &UpperTable) -> Vec<Violation> {
    let (zero, one) = (Rational::zero(), Rational::one());
    let mut out = Vec::new();
    for (&atom, value) in &table.atoms {
        if value < &zero || value > &one {
            out.push(Violation::UpperAtomRange {
                atom,
                value: value.clone(),
            });
        }
    }
    match &table.whole {
        Some(v) if v == &one => {}
        other => out.push(Violation::UpperTotal {
            value: other.clone(),
        }),
    }
    for (&(i, j), value) in &table.pairs {
        if i == j {
            out.push(Violation::DegeneratePair { atom: i });
            continue;
        }
        let (Some(a), Some(b)) = (table.atoms.get(&i), table.atoms.get(&j)) else {
            let atom = if table.atoms.contains_key(&i) { j } else { i };
            out.push(Violation::MissingAtom { atom });
            continue;
        };
        let bound = a + b;
        if value > &bound {
            out.push(Violation::Superadditive {
                pair: (i.min(j), i.max(j)),
                value: value.clone(),
                bound,
            });
        }
    }
    out
}
