//! Command-line front end for the `triharm` engine: argument parsing, the
//! JSON/text report, and parameter sweeps.

pub mod args;
pub mod commands;
pub mod report;

pub use commands::{run, sweep, Failure, Outcome, SweepRow};
