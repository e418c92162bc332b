//! Command-line harness for `crimp-core`: instance and report files, seeded
//! random instances, benchmarks and the subcommands of the `crimp` binary.

pub mod bench;
pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod graph6;
pub mod random;
pub mod report;

pub use cli::Cli;
pub use commands::run;
pub use error::CliError;
