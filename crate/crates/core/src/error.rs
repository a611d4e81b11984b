use thiserror::Error;

/// Errors raised by the workbench. Mathematical outcomes (a failed
/// verification, a split extension) are values, not errors; these variants
/// signal bad input or a broken internal invariant.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate identifier `{0}`")]
    Duplicate(String),
    #[error("non-composable path: {0}")]
    NonComposable(String),
    #[error("relation `{0}` must have length at least 2")]
    ShortRelation(String),
    #[error("field order {0} is not a supported prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("walk endpoints do not match: {0}")]
    EndpointMismatch(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("word is not cyclic: {0}")]
    NotCyclic(String),
    #[error("cyclic word is not primitive (root `{root}` to the power {exponent})")]
    NotPrimitive { root: String, exponent: usize },
    #[error("band parameter must be nonzero")]
    ZeroParameter,
    #[error("relation {0} does not act as zero")]
    RelationViolated(String),
    #[error("modules are defined over different presentations")]
    PresentationMismatch,
    #[error("map is not a module homomorphism: {0}")]
    NotMorphism(String),
    #[error("zero module not allowed here")]
    ZeroModule,
    #[error("presentation is not finite dimensional; free cycle {0}")]
    InfiniteDimensional(String),
    #[error("presentation is not a string presentation: {0}")]
    NotString(String),
    #[error("presentation has bands (e.g. `{0}`); finite-type enumeration refused")]
    HasBands(String),
    #[error("catalog is incomplete: {0}")]
    IncompleteCatalog(String),
    #[error("module is projective; no almost split sequence ends at it")]
    Projective,
    #[error("census too large: {0}")]
    CensusTooLarge(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no witness found within search bound {0}")]
    WitnessNotFound(usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
