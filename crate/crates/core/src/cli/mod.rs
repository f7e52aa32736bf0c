//! JSON documents, workspaces, commands and reports.

pub mod document;
pub mod report;
pub mod run;
pub mod workspace;

pub use document::{Document, Kind, SCHEMA};
pub use report::{Report, Status};
pub use run::{run, Command, Format, RunOptions};
pub use workspace::{Entry, HomotopyEntry, LoadError, Workspace};
