//! IO companion to `hyperspec-core`: the `.hg` file format, deterministic
//! JSON reports, and the theorem verification suites behind the CLI.

pub mod hg;
pub mod json;
pub mod report;
pub mod verify;
