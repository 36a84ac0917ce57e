//! Command-line front end for `legvar-core`: input file formats, structured
//! reports, the subcommands and the acceptance suite.

pub mod acceptance;
pub mod commands;
pub mod formats;
pub mod report;
