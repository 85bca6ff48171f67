//! Library surface of the `spectral-kit` command-line tool, split out so the
//! integration tests can drive commands in-process.

pub mod commands;
pub mod format;
pub mod report;
