use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed codeword at column {column}: {reason}")]
    MalformedText { column: usize, reason: String },

    #[error("neuron {index} is out of range 1..={n}")]
    NeuronOutOfRange { index: usize, n: usize },

    #[error("width mismatch: expected {expected} neurons, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("word form cannot represent codewords on {n} > 9 neurons")]
    UnrepresentableForm { n: usize },

    #[error("neuron count {n} is not in 1..=64")]
    InvalidNeuronCount { n: usize },

    #[error("face {face} is not in the complex")]
    FaceNotInComplex { face: String },

    #[error("vertex {vertex} is already a vertex of the complex")]
    VertexAlreadyPresent { vertex: usize },

    #[error("operation is undefined on the void complex")]
    VoidComplex,

    #[error("degree {degree} is outside -1..={max}")]
    DegreeOutOfRange { degree: i32, max: i32 },

    #[error("({sigma}, {tau}) is not a free face pair")]
    NotAFreeFacePair { sigma: String, tau: String },

    #[error("Alexander dual of the zero ideal is degenerate")]
    DegenerateDual,

    #[error("not a permutation of 1..={n}: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("codeword {word} is not in the domain code")]
    NotInDomain { word: String },

    #[error("inclusion target does not contain the code")]
    IncludeTargetTooSmall,

    #[error("cannot project away the only neuron")]
    EmptyProjection,

    #[error("density {density} is not in (0, 1]")]
    BadDensity { density: f64 },

    #[error("{what} is limited to {max} neurons, got {n}")]
    TooManyNeurons { what: &'static str, n: usize, max: usize },

    #[error("map step {step} is not allowed here: {reason}")]
    UnsupportedStep { step: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
