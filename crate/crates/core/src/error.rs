use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A configured size bound was exceeded.
    #[error("capacity exceeded: {what} is {actual}, bound is {bound}{hint}")]
    Capacity {
        what: &'static str,
        actual: usize,
        bound: usize,
        hint: &'static str,
    },

    /// A structure failed validation; `law` names the violated axiom.
    #[error("validation failed: {law}{}", witness_suffix(.witness))]
    Validation {
        law: String,
        witness: Option<(u32, u32)>,
    },

    #[error("objects belong to different hosts")]
    HostMismatch,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An internal check that should hold by construction failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

fn witness_suffix(w: &Option<(u32, u32)>) -> String {
    match w {
        Some((a, b)) => format!(" (witness pair {a}, {b})"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn capacity(what: &'static str, actual: usize, bound: usize) -> Self {
        Error::Capacity {
            what,
            actual,
            bound,
            hint: "",
        }
    }

    pub(crate) fn validation(law: impl Into<String>, witness: Option<(u32, u32)>) -> Self {
        Error::Validation {
            law: law.into(),
            witness,
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity { .. } => 3,
            Error::Invariant(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
