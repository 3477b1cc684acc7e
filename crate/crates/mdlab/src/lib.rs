//! Command-line runner for the `mdlab-core` check suites: configuration
//! layering, parallel execution and JSON reports.

pub mod config;
pub mod report;
pub mod runner;

pub use config::{parse_config, resolve, Cli, ConfigError, RunConfig};
pub use report::RunReport;
pub use runner::run;
