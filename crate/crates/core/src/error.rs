use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("fold count mismatch: {0} vs {1}")]
    FoldMismatch(usize, usize),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("element is not a decomposable extensor")]
    NotDecomposable,
    #[error("zero input where a nonzero extensor is required")]
    ZeroInput,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element does not lie in the {0} span")]
    NotInSpan(&'static str),
    #[error("geometric product is not proportional to the reference tensor")]
    NotProportional,
    #[error("straightening exceeded the step budget of {0}")]
    BudgetExceeded(u64),
    #[error("component too large: {0} monomials exceeds the limit {1}")]
    ComponentTooLarge(usize, usize),
    #[error("word {0} is dependent")]
    DependentWord(String),
    #[error("map is not a representation: {0}")]
    NotARepresentation(String),
    #[error("malformed matroid: {0}")]
    MalformedMatroid(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("evaluation error: {0}")]
    Eval(String),
}

pub type Result<T> = std::result::Result<T, Error>;
