use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two members of a would-be vertex have intersecting supports. The
    /// indices refer to the caller's input order.
    #[error("elements {0} and {1} have overlapping supports")]
    OverlappingSupports(usize, usize),

    #[error("elements {0} and {1} are equal")]
    DuplicateElement(usize, usize),

    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),

    #[error("domain words do not form a complete prefix code")]
    IncompleteDomainCode,

    #[error("image words are not pairwise incomparable")]
    OverlappingImages,

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("tail piece changes branch ({from} -> {to})")]
    CrossBranchTail { from: u32, to: u32 },

    #[error("point classes have no proper expansion")]
    NoExpansion,

    #[error("no transfer exists between the given elements")]
    NoTransfer,

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("vertex does not have full support")]
    NotFullSupport,

    #[error("invalid cube: {0}")]
    InvalidCube(String),

    #[error("exploration stopped at the cap of {0} vertices")]
    CapExceeded(usize),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
