use thiserror::Error;

use crate::formula::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("formula is not negation-reduced (negation must apply only to letters)")]
    NotNegReduced,

    #[error("formula is outside {language}: {detail}")]
    WrongLanguage {
        language: &'static str,
        detail: String,
    },

    #[error("{found} distinct letters exceed the cap of {cap}")]
    LetterCap { found: usize, cap: usize },

    #[error("valuation has no value for letter `{0}`")]
    MissingLetter(String),

    #[error("formula is not diversified: letter `{0}` occurs more than once")]
    NotDiversified(String),

    #[error("no subformula at position {0}")]
    InvalidPath(String),

    #[error("occurrence {index} out of range (formula has {len} letter occurrences)")]
    InvalidOccurrence { index: usize, len: usize },

    #[error("letter `{0}` does not occur in the formula")]
    AbsentLetter(String),

    #[error("occurrence letters differ: `{left}` vs `{right}`")]
    LetterMismatch { left: String, right: String },

    #[error("not a theorem: canonical forms differ ({left} vs {right})")]
    NotATheorem { left: String, right: String },

    #[error("replay failed at step {index}: {step} does not match")]
    ReplayMismatch { index: usize, step: String },

    #[error("implication is not a tautology: {0}")]
    NotAnImplication(String),

    #[error("formulas are not equivalent")]
    NotEquivalent,

    #[error("formulas are not letter-homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("equivalence depends on complementation between signed atoms: {0}")]
    ComplementDependent(String),

    #[error("invalid occurrence bijection: {0}")]
    BadBijection(String),

    #[error("arrow types do not match: {0}")]
    TypeMismatch(String),

    #[error("invalid linking: {0}")]
    InvalidLinking(String),

    #[error("size guard exceeded: {0}")]
    Guard(String),

    #[error("{0}")]
    Usage(String),

    #[error("internal verification failed: {0}")]
    Verification(String),
}
