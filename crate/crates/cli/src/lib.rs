//! Command-line front end for `irregwalk`: graph input, solver dispatch,
//! reports and the bound benchmark.

pub mod bench;
pub mod commands;
pub mod source;

pub use commands::{run, Cli, Outcome};
