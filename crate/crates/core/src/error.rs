use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed group spec, word, pattern, or out-of-range letter.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Generator closure grew past the configured group-order cap.
    #[error("group order cap exceeded: cap {cap}, closure reached {reached}")]
    OrderCapExceeded { cap: u64, reached: u64 },

    /// An enumeration or oracle run exceeded its step budget.
    #[error("enumeration budget exceeded: budget {budget}")]
    BudgetExceeded { budget: u64 },

    /// Two patterns from different groups were combined.
    #[error("patterns belong to different groups")]
    GroupMismatch,

    /// A word/pattern set is not reduced: `contained` occurs inside `container`.
    #[error("set not reduced: {container} contains (an equivalent of) {contained}")]
    NotReduced {
        container: String,
        contained: String,
    },

    /// The generating-function system has no unique solution.
    #[error("singular linear system")]
    SingularSystem,

    /// Series expansion requested for a function with a pole at z = 0.
    #[error("denominator vanishes at z = 0")]
    PoleAtZero,

    /// Evaluation requested at a pole.
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,

    /// Odds formula denominator vanished for a matchup.
    #[error("degenerate matchup: odds denominator is zero")]
    DegenerateMatchup,

    /// An exhaustive advantage check found a counterexample.
    #[error("hypothesis violated by {counterexample} (odds {odds})")]
    HypothesisViolated {
        counterexample: String,
        odds: String,
    },

    /// Operation requires a specific group kind (e.g. cyclic).
    #[error("wrong group kind: {0}")]
    WrongGroup(String),

    /// Operation requires a longer word or pattern.
    #[error("input too short: minimum length {min}")]
    LengthTooShort { min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
