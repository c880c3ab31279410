use thiserror::Error;

/// Errors surfaced by the library.
///
/// Resource-cap rejections ([`Error::StatevectorCap`], [`Error::EnumerationCap`],
/// [`Error::BondCap`]) are kept distinct from plain invalid-input errors so that
/// callers (notably the CLI) can map them to a dedicated exit code.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("bitstring length mismatch: {a} vs {b}")]
    LengthMismatch { a: usize, b: usize },

    #[error("qubit count must be at least 1")]
    EmptyRegister,

    #[error("gate {gate} targets qubit {q} outside register of {n} qubits")]
    TargetOutOfRange { gate: String, q: usize, n: usize },

    #[error("two-qubit gate {gate} must act on distinct qubits (got {q})")]
    DuplicateTargets { gate: String, q: usize },

    #[error("unknown gate {0}")]
    UnknownGate(String),

    #[error("single-qubit Clifford index {index} out of range (24 elements)")]
    Cl1IndexOutOfRange { index: usize },

    #[error("two-qubit Clifford index {index} out of range (11520 elements)")]
    Cl2IndexOutOfRange { index: usize },

    #[error("statevector backend limited to {cap} qubits, requested {n}")]
    StatevectorCap { n: usize, cap: usize },

    #[error("{what} limited to {cap} qubits, requested {n}")]
    EnumerationCap {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("brickwork depth {d} exceeds the exact-contraction bond cap (depth {cap})")]
    BondCap { d: usize, cap: usize },

    #[error("state is not representable on the stabilizer backend: {0}")]
    NonStabilizer(String),

    #[error("brickwork ensemble requires an even qubit count, got {n}")]
    OddQubitCount { n: usize },

    #[error("brickwork depth must be at least 1 (depth 0 is the local Clifford ensemble)")]
    ZeroDepth,

    #[error("k = {k} out of range for {n} qubits")]
    KOutOfRange { k: usize, n: usize },

    #[error("parameter {name} = {value} outside {range}")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("invalid {what}: {text}")]
    Parse { what: &'static str, text: String },
}

impl Error {
    /// True for errors that reject a request because it exceeds a resource cap
    /// rather than because it is malformed.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::StatevectorCap { .. } | Error::EnumerationCap { .. } | Error::BondCap { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
