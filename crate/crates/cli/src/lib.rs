//! Library half of the `calibra` command-line tool: JSON documents,
//! reports and the commands themselves.

pub mod commands;
pub mod doc;
pub mod error;
pub mod report;

pub use commands::{Standard, Structure};
pub use doc::{Convention, FormDocument, Term, VectorsDocument};
pub use error::CliError;
pub use report::{Report, Status};
