use thiserror::Error;

/// Errors produced by the workbench.
///
/// Machine indices and job positions carried in variants are 1-based, the
/// same way they appear in schedules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("schedule has {actual} entries but the instance has {expected} jobs")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("job {job} is assigned to machine {machine}, valid machines are 1..={machine_count}")]
    InvalidMachineIndex {
        job: usize,
        machine: u32,
        machine_count: u32,
    },

    #[error("node at level {level} is a leaf and has no children")]
    LeafHasNoChildren { level: usize },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("tree rendering needs {requested} nodes on the deepest level, cap is {cap}")]
    TooLarge { requested: String, cap: u64 },

    #[error("exploration needs {requested} units of work, budget is {budget}")]
    BudgetExceeded { requested: String, budget: u64 },

    #[error("operation requires exactly 2 machines, instance has {0}")]
    NotTwoMachines(u32),

    #[error("element {0} has zero weight")]
    ZeroWeight(usize),

    #[error("ordered schedule does not cover the instance: {0}")]
    CoverageMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
