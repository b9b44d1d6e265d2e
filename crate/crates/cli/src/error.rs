use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("unknown construction kind {0:?}")]
    UnknownKind(String),

    #[error("invalid spec: {0}")]
    Invalid(String),

    #[error("construction {name:?} failed: {source}")]
    Construction {
        name: String,
        #[source]
        source: coalg_core::Error,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}
