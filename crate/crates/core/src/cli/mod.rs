//! Command-line front end: expression grammar, file formats and the
//! subcommand drivers behind the `upper-cluster` binary.

mod commands;
mod expr;
mod files;

pub use commands::{
    cmd_check, cmd_laurent_fuzz, cmd_mutate, cmd_present, cmd_verify, CheckReport, CommandOutput, FuzzReport,
    PresentArgs, EXIT_INCOMPLETE, EXIT_INPUT_ERROR, EXIT_OK,
};
pub use expr::{parse_expression, parse_expression_with, parse_polynomial, parse_polynomial_with, parse_relation};
pub use files::{GeneratorEntry, GeneratorFile, RelationsFile, SeedFile};
