use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed network document: {0}")]
    Document(String),

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("edge {a} - {b} has non-positive distance {miles}")]
    NonPositiveDistance { a: String, b: String, miles: f64 },

    #[error("self-loop on node `{0}`")]
    SelfLoop(String),

    #[error("duplicate edge {0} - {1}")]
    DuplicateEdge(String, String),

    #[error("range must be a positive number of miles, got {0}")]
    InvalidRange(f64),

    #[error("no route from `{origin}` to `{destination}`")]
    Unreachable { origin: String, destination: String },

    #[error("invalid route for trip {origin} -> {destination}: {reason}")]
    InvalidRoute {
        origin: String,
        destination: String,
        reason: String,
    },

    #[error("expected {expected} station bits, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("qubit {qubit} out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("gate uses qubit {0} more than once")]
    OverlappingQubits(usize),

    #[error("qubit count mismatch: state has {state}, circuit has {circuit}")]
    QubitCountMismatch { state: usize, circuit: usize },

    #[error("cannot measure a zero-norm state")]
    ZeroNorm,

    #[error("threshold {tau} outside [0, {max}]")]
    InvalidThreshold { tau: u32, max: u64 },

    #[error("register too narrow: {width} qubits, need {needed}")]
    RegisterTooNarrow { width: usize, needed: usize },

    #[error("ancilla qubits are not clean (residual mass {0:.3e})")]
    DirtyAncilla(f64),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
