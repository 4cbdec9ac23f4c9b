//! Command-line front end and the verification sweeps behind `verify` and the acceptance suite.

pub mod checks;
pub mod commands;
