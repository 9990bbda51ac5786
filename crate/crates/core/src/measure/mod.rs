//! Finite sample spaces of ±1 variables, events, and exact signed measures.

mod axioms;
mod context;
mod event;
mod signed;
mod space;

pub use axioms::{validate_kolmogorov, validate_upper, UpperTable, Violation};
pub use context::Context;
pub use event::Event;
pub use signed::SignedMeasure;
pub use space::{Assignment, Outcome, SampleSpace, MAX_VARIABLES};
