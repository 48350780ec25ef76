use thiserror::Error;

/// Errors produced by function parsing, lattice construction, synthesis,
/// simulation and mapping.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("too many variables: {0} (limit is 16)")]
    TooManyVariables(usize),

    #[error("variable names must be unique and non-empty")]
    BadVariableSet,

    #[error("symmetry index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("expected {expected} leaf constants, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("lattice did not reach constant leaves within {budget} levels")]
    LevelBudgetExceeded { budget: usize },

    #[error("exhaustive ordering search supports at most 6 distinct variables, got {0}")]
    TooManyVariablesForSearch(usize),

    #[error("lattice has {levels} levels; synthesis supports at most 12")]
    QubitBudgetExceeded { levels: usize },

    #[error("expected a {expected} gate, found {found}")]
    WrongGateKind { expected: String, found: String },

    #[error("circuit contains non-permutation gate `{0}`")]
    NonPermutationGate(String),

    #[error("unitary simulation supports at most 10 qubits, got {0}")]
    DimensionLimit(usize),

    #[error("unknown node id {0}")]
    UnknownNodeId(usize),

    #[error("mapping report does not match the circuit: {0}")]
    InconsistentReport(String),

    #[error("no placement with the required connectivity exists: {0}")]
    PlacementInfeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
