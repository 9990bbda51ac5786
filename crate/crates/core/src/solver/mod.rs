//! Exact feasibility and minimum-L1 solving for constraint systems.
//!
//! A proper joint is a nonnegative solution of the rows. When none exists, the
//! signed joint of least total variation is found by splitting every atom mass
//! as `x = x⁺ − x⁻` and minimizing `Σ (x⁺ + x⁻)` with the exact simplex.

mod linalg;
mod simplex;
mod system;

use num_traits::One;

pub use linalg::rank;
pub use system::{ConstraintSystem, Row};

use crate::error::{Error, Result};
use crate::measure::SignedMeasure;
use crate::rational::Rational;
use simplex::LpOutcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolveStatus {
    /// A nonnegative joint exists; `M* = 1`.
    ProperFeasible,
    /// Only signed joints exist; `M* > 1`.
    SignedFeasibleOnly,
    /// No signed measure satisfies the rows.
    Infeasible,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::ProperFeasible => "ProperFeasible",
            SolveStatus::SignedFeasibleOnly => "SignedFeasibleOnly",
            SolveStatus::Infeasible => "Infeasible",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Minimum L1 norm over all signed solutions.
    pub mstar: Option<Rational>,
    /// A signed solution attaining `mstar`.
    pub witness: Option<SignedMeasure>,
    pub rank: usize,
    pub nullity: usize,
}

/// Rank of the row matrix and the dimension of the solution set's direction space.
pub fn rank_nullity(cs: &ConstraintSystem) -> (usize, usize) {
    let (a, _) = cs.matrix();
    let r = rank(&a);
    (r, cs.space().atom_count() - r)
}

/// A proper joint distribution satisfying every row, if one exists.
pub fn feasible_proper(cs: &ConstraintSystem) -> Option<SignedMeasure> {
    let (a, b) = cs.matrix();
    let n = cs.space().atom_count();
    let x = simplex::find_feasible(&a, &b, n)?;
    Some(SignedMeasure::new(cs.space(), x).expect("one mass per atom"))
}

/// Minimum-L1 signed joint of the system, with status and rank information.
pub fn minimize_l1(cs: &ConstraintSystem) -> SolveResult {
    let (rank, nullity) = rank_nullity(cs);
    let (a, b) = cs.matrix();
    let n = cs.space().atom_count();
    let split: Vec<Vec<Rational>> = a
        .iter()
        .map(|row| row.iter().cloned().chain(row.iter().map(|v| -v)).collect())
        .collect();
    let cost = vec![Rational::one(); 2 * n];
    match simplex::minimize(&split, &b, &cost) {
        LpOutcome::Optimal { y, value } => {
            let x: Vec<Rational> = (0..n).map(|i| &y[i] - &y[n + i]).collect();
            let witness = SignedMeasure::new(cs.space(), x).expect("one mass per atom");
            debug_assert_eq!(witness.l1_norm(), value);
            let status = if value.is_one() {
                SolveStatus::ProperFeasible
            } else {
                SolveStatus::SignedFeasibleOnly
            };
            SolveResult {
                status,
                mstar: Some(value),
                witness: Some(witness),
                rank,
                nullity,
            }
        }
        LpOutcome::Infeasible => SolveResult {
            status: SolveStatus::Infeasible,
            mstar: None,
            witness: None,
            rank,
            nullity,
        },
        LpOutcome::Unbounded => unreachable!("an L1 objective is bounded below by zero"),
    }
}

/// Whether `m` satisfies every row exactly and has L1 norm `claimed_mstar`.
///
/// Pass the system's optimum to check membership in the set of minimizers.
pub fn verify_member(
    cs: &ConstraintSystem,
    m: &SignedMeasure,
    claimed_mstar: &Rational,
) -> Result<bool> {
    if m.space() != cs.space() {
        return Err(Error::SpaceMismatch);
    }
    Ok(cs.is_satisfied_by(m)? && &m.l1_norm() == claimed_mstar)
}

/// `M*` of a system, treating infeasibility as an error.
pub fn mstar(cs: &ConstraintSystem) -> Result<Rational> {
    minimize_l1(cs).mstar.ok_or(Error::NoSignedJoint)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{validate_kolmogorov, Assignment, Event, SampleSpace};
    use crate::rational::{half, int, ratio};

    fn mz_space() -> SampleSpace {
        SampleSpace::new(&["Da", "Db", "D1", "D2"]).unwrap()
    }

    fn case_one() -> ConstraintSystem {
        let rows = [
            (Assignment::of(&[("D1", 1), ("D2", -1)]), int(1)),
            (Assignment::of(&[("D1", 1), ("D2", 1)]), int(0)),
            (Assignment::of(&[("D1", -1), ("D2", 1)]), int(0)),
            (Assignment::of(&[("D1", -1), ("D2", -1)]), int(0)),
        ];
        ConstraintSystem::assemble(&mz_space(), &rows).unwrap()
    }

    #[test]
    fn normalization_only_rank() {
        let cs = ConstraintSystem::assemble(&mz_space(), &[]).unwrap();
        assert_eq!(rank_nullity(&cs), (1, 15));
    }

    #[test]
    fn fully_pinned_system_has_no_freedom() {
        let s = mz_space();
        let rows = (0..16)
            .map(|a| (s.assignment_of(a), if a == 0 { int(1) } else { int(0) }))
            .collect::<Vec<_>>();
        let cs = ConstraintSystem::assemble(&s, &rows).unwrap();
        assert_eq!(rank_nullity(&cs).1, 0);
        let r = minimize_l1(&cs);
        assert_eq!(r.status, SolveStatus::ProperFeasible);
    }

    #[test]
    fn case_one_is_proper() {
        let cs = case_one();
        let p = feasible_proper(&cs).unwrap();
        assert!(validate_kolmogorov(&p).is_empty());
        let r = minimize_l1(&cs);
        assert_eq!(r.status, SolveStatus::ProperFeasible);
        assert_eq!(r.mstar, Some(int(1)));
        assert!(validate_kolmogorov(r.witness.as_ref().unwrap()).is_empty());
    }

    #[test]
    fn overweight_event_is_infeasible() {
        let s = mz_space();
        let cs = ConstraintSystem::assemble(&s, &[(Assignment::of(&[("Da", 1)]), int(2))]).unwrap();
        assert!(feasible_proper(&cs).is_none());
        // Infeasible only for proper joints; a signed joint still exists.
        assert_eq!(minimize_l1(&cs).mstar, Some(int(3)));
    }

    #[test]
    fn conflicting_marginals_are_infeasible() {
        let s = mz_space();
        let d1 = Event::cylinder(&s, &Assignment::of(&[("D1", 1)])).unwrap();
        let cs = ConstraintSystem::from_rows(&s, vec![(d1.clone(), int(1)), (d1, int(0))]).unwrap();
        let r = minimize_l1(&cs);
        assert_eq!(r.status, SolveStatus::Infeasible);
        assert!(r.mstar.is_none() && r.witness.is_none());
    }

    #[test]
    fn verify_member_checks_rows_and_norm() {
        let cs = case_one();
        assert!(!verify_member(&cs, &SignedMeasure::zero(cs.space()), &int(0)).unwrap());
        let w = minimize_l1(&cs).witness.unwrap();
        assert!(verify_member(&cs, &w, &int(1)).unwrap());
        assert!(!verify_member(&cs, &w, &half()).unwrap());
        let other = SampleSpace::new(&["X"]).unwrap();
        assert_eq!(
            verify_member(&cs, &SignedMeasure::zero(&other), &int(1)),
            Err(Error::SpaceMismatch)
        );
    }

    #[test]
    fn signed_two_point_system() {
        // One variable, X=+1 pinned to 3/2: the only solution is (−1/2, 3/2).
        let s = SampleSpace::new(&["X"]).unwrap();
        let cs =
            ConstraintSystem::assemble(&s, &[(Assignment::of(&[("X", 1)]), ratio(3, 2))]).unwrap();
        let r = minimize_l1(&cs);
        assert_eq!(r.status, SolveStatus::SignedFeasibleOnly);
        assert_eq!(r.mstar, Some(int(2)));
        assert_eq!(r.witness.unwrap().masses(), &[ratio(-1, 2), ratio(3, 2)]);
    }
}
