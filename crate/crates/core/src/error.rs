use thiserror::Error;

use crate::lattice::LatticeId;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice mismatch: {0} combined with {1}")]
    LatticeMismatch(LatticeId, LatticeId),
    #[error("operands live over different state spaces")]
    SpaceMismatch,
    #[error("a state space must contain at least one state")]
    EmptySpace,
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown lattice `{0}` (expected bool2, lukasiewicz3 or godel)")]
    UnknownLattice(String),
    #[error("value `{value}` is outside the {lattice} carrier")]
    OutsideCarrier { lattice: LatticeId, value: String },
    #[error("not a test: entry ({0}, {1}) is off the diagonal")]
    NotSubidentity(String, String),
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),
    #[error("unknown program `{0}`")]
    UnknownProgram(String),
    #[error("name `{0}` is declared both as a program and as a test")]
    AmbiguousName(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared atom `{0}`")]
    UndeclaredAtom(String),
    #[error("complement applied to program-sorted term `{0}`")]
    ComplementOfProgram(String),
    #[error("condition `{0}` is not a test")]
    ConditionNotTest(String),
    #[error("exhaustive search needs {size} instantiations, above the bound of {bound}")]
    SpaceTooLarge { size: u128, bound: u128 },
    #[error("star iteration did not stabilize within {0} steps")]
    StarDiverged(usize),
}

impl Error {
    /// True for errors caused by malformed terms or arguments rather than by model data.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UndeclaredAtom(_)
                | Error::ComplementOfProgram(_)
                | Error::ConditionNotTest(_)
                | Error::SpaceTooLarge { .. }
                | Error::UnknownLattice(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
