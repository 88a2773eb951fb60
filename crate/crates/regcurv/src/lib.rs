//! File formats, parallel drivers and the command-line front end for
//! `regcurv-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod parallel;
pub mod records;

pub use error::{CliError, Result};
