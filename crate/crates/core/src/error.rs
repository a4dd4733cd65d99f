use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter out of range for {family}: {bound}")]
    ParamOutOfRange { family: String, bound: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("operation not supported for {0}")]
    Unsupported(String),
    #[error("subset P equals all of the root system (improper)")]
    Improper,
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("cannot parse weight `{0}`")]
    Parse(String),
    #[error("root index {0} out of bounds")]
    Index(usize),
    #[error("weight {0} is not a root")]
    NotARoot(String),
    #[error("group element maps root {0} outside the root system")]
    RootEscape(String),
    #[error("elements from different realizations: {0}")]
    MixedRealization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
