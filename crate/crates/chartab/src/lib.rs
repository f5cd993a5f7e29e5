//! Command-line front end for the unipotent character engine: tables,
//! verification suites and a persistent memo cache.

pub mod cache;
pub mod cli;
pub mod record;
pub mod verify;
