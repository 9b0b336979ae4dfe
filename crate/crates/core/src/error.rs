use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("unsupported group kind `{0}` (expected `cyclic` or `dihedral`)")]
    UnsupportedKind(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("character domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("character is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("orbit character does not live on the stabilizer: {0}")]
    CharacterDomainMismatch(String),
    #[error("bad transversal: {0}")]
    BadTransversal(String),
    #[error("negative weight {0}")]
    NegativeWeight(i64),
    #[error("infinite weight; such curvettes contribute zero and must be omitted")]
    InfiniteWeight,
    #[error("weight vector has length {found}, expected r = {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("orbits belong to different groups")]
    GroupMismatch,
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("geometric series of an element with a zero-weight point does not terminate")]
    NonPositiveWeights,
    #[error("stratum `{0}` has positive Euler characteristic but a zero-weight curvette point")]
    ZeroWeightWithPositiveEuler(String),
    #[error("duplicate stratum name `{0}`")]
    DuplicateStratum(String),
    #[error("invalid monomial action: {0}")]
    InvalidAction(String),
    #[error("the equivariant jet oracle only handles abelian actions")]
    NonAbelianAction,
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Parse failures are input-format problems; everything else is semantic.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
