//! Text formats, generators and the command-line surface over `dclat-core`.

pub mod commands;
pub mod dcp;
pub mod dot;
pub mod error;
pub mod generate;
pub mod registry;

pub use commands::run;
pub use error::{CliError, Result};
