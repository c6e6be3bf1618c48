//! Verification suites, report rendering and the command-line front end
//! for `minreal-core`.

pub mod cli;
pub mod config;
pub mod export;
pub mod report;
pub mod suites;
