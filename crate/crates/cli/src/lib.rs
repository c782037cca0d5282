//! Batch front-end: reads JSON torus and family configurations, runs the
//! computations of the `torusdisc` crate and renders JSON or CSV reports.

pub mod commands;
pub mod config;
pub mod error;
pub mod family;
pub mod report;

pub use commands::{execute, Command, Format, Options, Outcome};
pub use config::{parse_config, Config, SCHEMA};
pub use error::{CliError, CliResult};
