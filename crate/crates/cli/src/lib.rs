//! Command-line front end: graph documents, reports and the `spectrum`,
//! `check`, `double`, `census` and `search` commands.

pub mod app;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod report;

pub use app::{execute, run, write_files, Cli, Command, Outcome};
pub use document::{EdgeDocument, GainDocument, GraphDocument};
pub use error::CliError;
pub use fixtures::Fixture;
pub use report::Report;
