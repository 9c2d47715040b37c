//! File formats, command implementations and the benchmark harness behind
//! the `newtonbez` binary.

pub mod bench;
pub mod commands;
pub mod error;
pub mod io;
pub mod verify;

pub use error::CliError;
