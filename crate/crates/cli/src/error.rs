use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, std::io::Error),

    #[error("{0}: {1}")]
    Json(String, serde_json::Error),

    #[error("{0}")]
    Spec(String),

    #[error("{0}: {1}")]
    Core(String, coxgor_core::Error),
}

impl CliError {
    pub fn core(location: &str, e: coxgor_core::Error) -> Self {
        CliError::Core(location.to_string(), e)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_, e) if e.is_mathematical() => 2,
            _ => 1,
        }
    }
}
