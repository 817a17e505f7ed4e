//! Command-line front end for the `lattice-threshold` library.

pub mod commands;
pub mod parse;

pub use commands::{run, Cli, CliError, CommonArgs, Format, Output, Verb};
pub use parse::{parse_expression, parse_truth_table, Expression, ParseError, ParseErrorKind};
