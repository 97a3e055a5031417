//! Instance files, reports and the subcommands behind the `sll` binary.

pub mod commands;
pub mod error;
pub mod instance;
pub mod output;

pub use commands::{Kind, ReportDocument, Suite};
pub use error::{CliError, Result};
pub use instance::{Instance, InstanceFile};
