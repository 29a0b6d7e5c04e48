//! The `.exf` command language: parser, canonical printer and executor.

pub mod ast;
pub mod corpus;
pub mod exec;
pub mod parse;

pub use ast::Program;
pub use exec::{execute, Options, Report, Status};
pub use parse::{parse_program, ParseError};
