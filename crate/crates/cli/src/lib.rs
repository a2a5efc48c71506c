//! Command-line workbench over `foxhom-core`: JSON file formats, bundled
//! example data, parallel sweeps and deterministic reports.

pub mod cli;
pub mod commands;
pub mod data;
pub mod error;
pub mod formats;
pub mod report;
pub mod verify;

pub use cli::run;
pub use error::{CliError, Result};
