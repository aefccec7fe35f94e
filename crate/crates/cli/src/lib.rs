//! Command-line harness around `ringshift-core`: argument parsing, layered
//! configuration, deterministic run manifests, canonical JSON / CSV reports,
//! DIMACS import/export, and a worker pool for the avoidability search.

pub mod args;
pub mod config;
pub mod encode;
pub mod format;
pub mod parallel;
pub mod report;
pub mod run;
pub mod verify;

pub use run::{run, ExitCode};
