//! Command-line front end for `mixbound`: report serialization, figure
//! rendering and the example replay behind `verify-paper`.

pub mod cli;
pub mod commands;
pub mod render;
pub mod report;
pub mod verify;

pub use cli::run;
