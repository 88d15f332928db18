use thiserror::Error;

/// Every failure the engine can report.
///
/// Variant names double as the machine-readable error codes emitted by the
/// command line and the session server (see [`Error::code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{0}` is a loop")]
    Loop(String),
    #[error("an oriented 2-cycle passes through vertex `{0}`")]
    TwoCycleAtVertex(String),
    #[error("quiver has an oriented 2-cycle between `{0}` and `{1}`")]
    TwoCycle(String, String),
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("operands live over different quivers")]
    QuiverMismatch,
    #[error("term `{0}` is not a cyclic path of degree at least 2")]
    NonCyclicTerm(String),
    #[error("path is not composable: {0}")]
    NotComposable(String),
    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),
    #[error("potential has a quadratic part; reduce it first")]
    NotReduced,
    #[error("potential is a truncated series and cannot be lifted to order {0}")]
    NotExact(usize),
    #[error("truncation order {have} is too low, need at least {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("second mutation at `{0}` is obstructed by an oriented 2-cycle")]
    ObstructedSecondMutation(String),
    #[error("vertex `{0}` is not a sink")]
    NotASink(String),
    #[error("vertex `{0}` is not a source")]
    NotASource(String),
    #[error(
        "vertex `{0}` is neither a sink nor a source; mutation of decorated \
         representations at a general vertex is not implemented"
    )]
    NotSinkOrSource(String),
    #[error("representation does not satisfy the Jacobian relations or is not nilpotent")]
    NotAModule,
    #[error("unknown session `{0}`")]
    UnknownSession(String),
    #[error("unknown history node `{0}`")]
    UnknownNode(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable error code, e.g. `"TwoCycleAtVertex"`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::UnknownArrow(_) => "UnknownArrow",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::DuplicateArrow(_) => "DuplicateArrow",
            Error::Loop(_) => "LoopError",
            Error::TwoCycleAtVertex(_) => "TwoCycleAtVertex",
            Error::TwoCycle(_, _) => "TwoCycleError",
            Error::NotSkewSymmetric => "NotSkewSymmetric",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::QuiverMismatch => "QuiverMismatch",
            Error::NonCyclicTerm(_) => "NonCyclicTerm",
            Error::NotComposable(_) => "NotComposable",
            Error::InvalidSubstitution(_) => "InvalidSubstitution",
            Error::NotReduced => "NotReduced",
            Error::NotExact(_) => "NotExact",
            Error::InsufficientOrder { .. } => "InsufficientOrder",
            Error::ObstructedSecondMutation(_) => "ObstructedSecondMutation",
            Error::NotASink(_) => "NotASink",
            Error::NotASource(_) => "NotASource",
            Error::NotSinkOrSource(_) => "NotSinkOrSource",
            Error::NotAModule => "NotAModule",
            Error::UnknownSession(_) => "UnknownSession",
            Error::UnknownNode(_) => "UnknownNode",
            Error::Parse(_) => "ParseError",
        }
    }

    /// True for violations of a mathematical precondition, as opposed to
    /// malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::TwoCycleAtVertex(_)
                | Error::TwoCycle(_, _)
                | Error::NotReduced
                | Error::NotExact(_)
                | Error::InsufficientOrder { .. }
                | Error::ObstructedSecondMutation(_)
                | Error::NotASink(_)
                | Error::NotASource(_)
                | Error::NotSinkOrSource(_)
                | Error::NotAModule
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
