//! Library side of the command-line harness: verification runs, attainment
//! reporting and fixture management.

pub mod check;
pub mod fixtures_cmd;
pub mod report;
