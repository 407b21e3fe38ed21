//! Text front end for the `katdec-core` decision procedures: goal-file
//! parsing, pretty-printing and the checks behind the `katdec` binary.

pub mod goal;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod run;

use katdec_core::SignatureError;
use thiserror::Error;

pub use goal::{Assumption, GoalFile, Show};
pub use parser::{
    parse_bool, parse_equation, parse_expr, parse_goal, parse_guarded_string, parse_prog, parse_triple,
};
pub use run::{run_source, Options, Report, Status};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn at(pos: lexer::Pos, message: impl Into<String>) -> Self {
        ParseError { line: pos.line, col: pos.col, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GoalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("bad signature: {0}")]
    Signature(#[from] SignatureError),
}
