use thiserror::Error;

/// Failures of the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined on a constant polynomial")]
    ConstantPolynomial,
    #[error("values come from different coefficient universes")]
    UniverseMismatch,
    #[error("constant and leading coefficients must both be nonzero")]
    ZeroEndCoefficient,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("expected degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinpoly(String),
    #[error("unsupported finite field p={p}, k={k}: {reason}")]
    UnsupportedField { p: u64, k: u32, reason: String },
    #[error("no shift with squarefree norm found among the scanned values")]
    ShiftSearchExhausted,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Rule violations and engine failures, each with a stable machine code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("coefficient a{index} is already assigned")]
    IndexTaken { index: usize },
    #[error("coefficient a{index} must be nonzero")]
    ZeroForbidden { index: usize },
    #[error("{value} is not in {domain}")]
    NotInDomain { value: String, domain: String },
    #[error("the game is over")]
    GameOver,
    #[error("index {index} is outside 0..={degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("the game is not complete")]
    IncompleteGame,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("more than one coefficient remains open")]
    NotLastMove,
    #[error("policy does not apply: {0}")]
    Inapplicable(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("instance too large: about {bound} positions")]
    TooLarge { bound: u128 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl GameError {
    pub fn code(&self) -> &'static str {
        match self {
            GameError::IndexTaken { .. } => "IndexTaken",
            GameError::ZeroForbidden { .. } => "ZeroForbidden",
            GameError::NotInDomain { .. } => "NotInDomain",
            GameError::GameOver => "GameOver",
            GameError::IndexOutOfRange { .. } => "IndexOutOfRange",
            GameError::IncompleteGame => "IncompleteGame",
            GameError::InvalidConfig(_) => "InvalidConfig",
            GameError::NotLastMove => "NotLastMove",
            GameError::Inapplicable(_) => "Inapplicable",
            GameError::SearchExhausted(_) => "SearchExhausted",
            GameError::TooLarge { .. } => "TooLarge",
            GameError::Algebra(_) => "AlgebraError",
        }
    }
}
