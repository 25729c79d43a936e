//! Structure files, the built-in corpus, verification jobs and reports.

pub mod corpus;
pub mod error;
pub mod ingest;
pub mod job;
pub mod report;
pub mod suites;

pub use error::{Result, WorkbenchError};
pub use job::{execute, Command, Job, Parameters, Settings};
pub use report::Report;
