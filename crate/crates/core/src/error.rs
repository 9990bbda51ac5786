use thiserror::Error;

use crate::rational::Rational;

/// Errors raised by the measure, solver, contextuality and scenario layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a sample space needs at least one variable")]
    NoVariables,
    #[error("variable names must be nonempty")]
    EmptyName,
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("{0} variables requested, at most {max} are enumerable", max = crate::measure::MAX_VARIABLES)]
    TooManyVariables(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("outcome for `{0}` must be +1 or -1")]
    InvalidOutcome(String),
    #[error("operands belong to different sample spaces")]
    SpaceMismatch,
    #[error("expected {expected} atom masses, got {got}")]
    WrongAtomCount { expected: usize, got: usize },
    #[error("conditioning event has zero mass")]
    UndefinedConditional,
    #[error("contradictory rows for event {event}: {first} vs {second}")]
    ContradictoryRows {
        event: String,
        first: Box<Rational>,
        second: Box<Rational>,
    },
    #[error("constraint value {0} outside the accepted range [-10^9, 10^9]")]
    ValueOutOfBounds(Rational),
    #[error("context over {variables:?} is not a proper distribution: {reason}")]
    ImproperContext {
        variables: Vec<String>,
        reason: String,
    },
    #[error("context variable `{0}` is not among the family's global variables")]
    ContextOutsideFamily(String),
    #[error("no context covers the pair ({0}, {1})")]
    MissingPairContext(String, String),
    #[error("no signed joint distribution is compatible with the family")]
    NoSignedJoint,
    #[error("Mach-Zehnder case must be in 1..=8, got {0}")]
    InvalidCase(u8),
    #[error("alpha must lie in [0, 1/2], got {0}")]
    AlphaOutOfRange(Rational),
    #[error("eps must lie in [0, 1/2), got {0}")]
    EpsOutOfRange(Rational),
    #[error("correlation must lie in [-1, 1], got {0}")]
    CorrelationOutOfRange(Rational),
    #[error("invalid wave configuration: {0}")]
    InvalidWaveConfig(String),
    #[error("detector intensities sum to zero")]
    DegenerateGeometry,
    #[error("cannot parse `{0}` as a rational")]
    InvalidRational(String),
    #[error("cannot parse assignment `{0}`")]
    InvalidAssignment(String),
    #[error("unknown builtin scenario `{0}`")]
    UnknownBuiltin(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
