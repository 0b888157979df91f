//! Command line front end for `suq2-core`.

pub mod commands;
pub mod parse;
pub mod suites;

pub use commands::{run_command, Outcome};
