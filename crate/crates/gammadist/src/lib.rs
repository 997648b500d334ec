//! JSON batch front end for `gammadist-core`.

pub mod cli;
pub mod convert;
pub mod error;
pub mod job;
