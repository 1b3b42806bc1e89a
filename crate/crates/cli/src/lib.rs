//! Command implementations behind the `superschur` binary.
//!
//! Every command returns its report as text so it can be tested without a
//! subprocess. Exit codes: 0 success, 1 axiom or check failure, 2 rejected
//! input, 3 the two multiplier engines disagree.

use std::fmt;

pub mod commands;
pub mod file;
pub mod verify;

pub use file::AlgebraFile;

#[derive(Debug)]
pub enum Failure {
    /// Unreadable, malformed or rejected input.
    Parse(String),
    /// The algebra fails the superalgebra axioms.
    Axioms(String),
    /// Chain engine and cochain oracle disagree.
    Engines(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Axioms(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Engines(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(m) | Failure::Axioms(m) | Failure::Engines(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for Failure {}

impl From<superschur_core::Error> for Failure {
    fn from(e: superschur_core::Error) -> Self {
        match e {
            superschur_core::Error::Internal(m) => Failure::Engines(m),
            other => Failure::Parse(other.to_string()),
        }
    }
}

/// Text to print and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}
