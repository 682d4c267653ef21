//! Command-line front end for `gpav-core`: argument handling, JSON and CSV
//! output, parallel brute-force sweeps and the verification suites.

pub mod cli;
pub mod error;
pub mod family;
pub mod methods;
pub mod output;
pub mod report;
pub mod sweep;
pub mod verify;

pub use error::{CliError, Result};
