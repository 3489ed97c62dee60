//! Command-line front end for the `proximity` library: single queries, the
//! pairwise benchmark, the DyOP verification sweep and plot data export.

pub mod cli;
pub mod commands;
pub mod error;
pub mod scene_file;

pub use cli::run;
pub use error::CliError;
