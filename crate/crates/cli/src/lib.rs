//! File format and commands for the `a3kit` binary.

pub mod commands;
pub mod file;

pub use commands::{Format, Outcome, SearchKind};
pub use file::AlgebraFile;
