//! Catalog, theorem registry, JSON formats and the parallel scan driver
//! behind the `ringlab` command.

pub mod catalog;
pub mod error;
pub mod format;
pub mod parallel;
pub mod registry;
pub mod report;
pub mod search;

pub use error::{LabError, LabResult};
