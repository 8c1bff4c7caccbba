//! Library surface of the `ringlocal` binary, split out so integration tests
//! can drive commands in-process.

pub mod args;
pub mod run;

pub use args::{Cli, Command, ModeArg, ObjectiveArg};
pub use run::{execute, output_path, CliError, CAP_ENV_VAR, MAX_CAP};
