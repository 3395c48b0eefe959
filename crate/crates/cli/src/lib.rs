//! Library half of the `jcoef` command-line tool: ideal-file parsing and
//! the subcommands, kept out of `main` so they can be tested directly.

pub mod commands;
pub mod idealfile;
