//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unterminated {kind} starting at byte {offset}")]
    Unterminated { kind: &'static str, offset: usize },

    #[error("unterminated triple-quoted string starting at line {line}")]
    UnterminatedDocstring { line: usize },

    #[error("malformed Tonel header: {reason}")]
    MalformedTonel { reason: String },

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("unsupported confidence level {0}; supported: 0.90, 0.95, 0.99")]
    UnsupportedConfidence(f64),

    #[error("invalid margin of error {0}; must lie in (0, 1)")]
    InvalidMargin(f64),

    #[error("quota {quota} exceeds population {population}")]
    QuotaExceedsPopulation { quota: usize, population: usize },

    #[error("cannot allocate a sample: all project counts are zero")]
    EmptyAllocation,

    #[error("line {line}: unknown category {name:?} for language {language}")]
    UnknownCategory {
        line: usize,
        name: String,
        language: String,
    },

    #[error("line {line}: duplicate sentence for comment {comment_id:?}")]
    DuplicateSentence { line: usize, comment_id: String },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("taxonomy error: {0}")]
    Taxonomy(String),

    #[error("pattern catalog error: {0}")]
    Catalog(String),

    #[error("matrix format error at line {line}: {reason}")]
    MatrixFormat { line: usize, reason: String },

    #[error("all documents are empty; nothing to weight")]
    EmptyCorpus,

    #[error("degenerate task: training set contains a single label value")]
    DegenerateTask,

    #[error("feature manifest mismatch: missing {missing:?}, extra {extra:?}")]
    ManifestMismatch {
        missing: Vec<String>,
        extra: Vec<String>,
    },

    #[error("{k} folds requested but only {n} rows available")]
    TooManyFolds { k: usize, n: usize },

    #[error("{0} treatments outside the supported range 2..=5")]
    UnsupportedTreatments(usize),

    #[error("unsupported significance level {0}; supported: 0.05")]
    UnsupportedAlpha(f64),

    #[error("need at least 2 blocks for a rank test, got {0}")]
    TooFewBlocks(usize),

    #[error("{0}")]
    InvalidInput(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Attach a file path to an error produced while processing that file.
    pub fn in_file(self, path: impl Into<PathBuf>) -> Self {
        Error::File {
            path: path.into(),
            source: Box::new(self),
        }
    }
}
