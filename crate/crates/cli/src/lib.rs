//! Library half of the slope-lab binary: argument definitions, command
//! execution with captured output, and the worked-example tables.

pub mod args;
pub mod exec;
pub mod report;

pub use exec::{execute, Outcome};
