use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid root system: {0}")]
    Construction(String),

    #[error("reflection in the zero vector")]
    ZeroRoot,

    #[error("orbit exceeded the cap of {cap} elements")]
    OrbitCap { cap: usize },

    #[error("group enumeration exceeded the cap of {cap} elements")]
    GroupCap { cap: usize },

    #[error("iteration cap of {cap} steps exceeded while computing a dominant representative")]
    IterationCap { cap: usize },

    #[error("vector {0} is not dominant; call dominant_rep first")]
    NotDominant(String),

    #[error("set is not stable under the generators: {0} leaves it")]
    NotStable(String),

    #[error("empty group")]
    EmptyGroup,

    #[error("unknown coweight {0:?}")]
    UnknownCoweight(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("polynomials support at most {max} variables, got {found}")]
    TooManyVariables { max: usize, found: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("no witness possible: {0}")]
    NoWitness(String),

    #[error("witness search exhausted the stabilizer orbit: {0}")]
    SearchExhausted(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
