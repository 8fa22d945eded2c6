//! Exploration layer over `energy-core`: value parsing, candidate tables,
//! published reference data, sessions, background jobs, the REST service
//! and the `energy` command line.

pub mod api;
pub mod cli;
pub mod jobs;
pub mod reference;
pub mod session;
pub mod table;
pub mod values;
