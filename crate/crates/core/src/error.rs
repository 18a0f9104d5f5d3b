use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeqError {
    #[error("cannot parse entry {position} (`{token}`) as an exact rational")]
    Parse { position: usize, token: String },
    #[error("degree {n} exceeds the truncation degree {len}")]
    DegreeOutOfRange { n: usize, len: usize },
    #[error("entry {index} = {value} of an integral transform is not an integer")]
    NonIntegralResult { index: usize, value: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("InvalidDimensionSequence: {argument} has non-integral entry {value} at index {index}")]
    InvalidDimensionSequence {
        argument: &'static str,
        index: usize,
        value: String,
    },
    #[error("NotAnFGCCHA: {argument} has generator count {value} at index {index}")]
    NotAnFGCCHA {
        argument: &'static str,
        index: usize,
        value: String,
    },
    #[error("DegreeOutOfRange: max degree {requested} exceeds the truncation degree {available}")]
    DegreeOutOfRange { requested: usize, available: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LyndonError {
    #[error("empty word")]
    EmptyWord,
    #[error("`{0}` is not a Lyndon word")]
    NotLyndon(String),
    #[error("`{0}` has fewer than two letters")]
    TooShort(String),
    #[error("letter g{degree}_{index} is not in the alphabet")]
    UnknownLetter { degree: usize, index: usize },
    #[error("cannot parse `{0}` as a word")]
    Parse(String),
    #[error("alphabet counts must be nonnegative integers: {0}")]
    InvalidAlphabet(String),
    #[error("degree {n} exceeds the alphabet's truncation degree {len}")]
    DegreeOutOfRange { n: usize, len: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeAlgError {
    #[error("AlphabetMismatch: operands live over different alphabets")]
    AlphabetMismatch,
    #[error("NotHomogeneous: element mixes degrees {0:?}")]
    NotHomogeneous(Vec<usize>),
    #[error("DegreeZeroComponent: the Eulerian idempotent is undefined on constants")]
    DegreeZeroComponent,
    #[error("NotAGeneratingSet: leading block is singular in degree {degree}")]
    NotAGeneratingSet { degree: usize },
    #[error("ShapeMismatch in degree {degree}: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    ShapeMismatch {
        degree: usize,
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("NoSurjectionExists: {host} generators < {target} in degree {degree}")]
    NoSurjectionExists {
        degree: usize,
        host: usize,
        target: usize,
    },
    #[error("NoEmbeddingExists: target primitives {target} exceed host primitives {host} in degree {degree}")]
    NoEmbeddingExists {
        degree: usize,
        host: String,
        target: String,
    },
    #[error("DegreeOutOfRange: degree {degree} exceeds the working degree {max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("InvalidSequence: {0}")]
    InvalidSequence(String),
    #[error("Parse: {0}")]
    Parse(String),
    #[error("invariant failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Lyndon(#[from] LyndonError),
}

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("InvalidId: `{0}` is not of the form A followed by six digits")]
    InvalidId(String),
    #[error("NotFound: {0} has no b-file on the server")]
    NotFound(String),
    #[error("Unavailable: {a_number} could not be fetched and is not cached ({reason})")]
    Unavailable { a_number: String, reason: String },
    #[error("ParseError at line {line}: `{content}`")]
    Parse { line: usize, content: String },
    #[error("InvalidQuery: {0}")]
    InvalidQuery(String),
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
}
