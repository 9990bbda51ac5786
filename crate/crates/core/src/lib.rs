//! Signed joint distributions for finite families of ±1 random variables.
//!
//! Given marginals observed in several experimental contexts, this crate
//! decides whether a proper joint exists, and otherwise finds the signed joint
//! of least total variation `M*` exactly over the rationals.
//!
//! ```
//! use quasiprob::scenarios::mz_counterfactual;
//! use quasiprob::solver::{minimize_l1, SolveStatus};
//! use quasiprob::rational::int;
//!
//! let r = minimize_l1(&mz_counterfactual());
//! assert_eq!(r.status, SolveStatus::SignedFeasibleOnly);
//! assert_eq!(r.mstar, Some(int(3)));
//! ```

pub mod cli;
pub mod contextuality;
pub mod error;
pub mod measure;
pub mod rational;
pub mod scenarios;
pub mod solver;

pub use contextuality::{detect_bias, family_mstar, BiasWitness, ContextFamily};
pub use error::{Error, Result};
pub use measure::{Assignment, Context, Event, Outcome, SampleSpace, SignedMeasure};
pub use rational::Rational;
pub use solver::{ConstraintSystem, SolveResult, SolveStatus};
