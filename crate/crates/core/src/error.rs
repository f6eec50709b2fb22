use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{what} exceeds the {budget} budget ({needed} > {limit})")]
    Budget {
        what: String,
        budget: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("unknown group label {label:?}{}", suggest(.nearest))]
    UnknownLabel { label: String, nearest: Vec<String> },
    #[error("invalid input: {0}")]
    Invalid(String),
}

fn suggest(nearest: &[String]) -> String {
    if nearest.is_empty() {
        String::new()
    } else {
        format!("; nearest: {}", nearest.join(", "))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
