use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OntologyError {
    #[error("unknown class `{0}`")]
    UnknownClass(String),
}

/// A malformed COT statement. Line and column are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{source_name}:{line}:{column}: {message}")]
pub struct ParseError {
    pub source_name: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum ImportError {
    #[error("malformed XML: {0}")]
    Xml(#[from] roxmltree::Error),
    #[error("{location}: {message}")]
    Unsupported { location: String, message: String },
    #[error("input is not valid UTF-8: {0}")]
    Encoding(std::str::Utf8Error),
    #[error("imported ontology has {count} defect(s), first: {first}")]
    Invalid { count: usize, first: String },
}
