//! Library side of the `ellipfn` command: number formatting, the elastica
//! and cantilever demos, and the acceptance checks run by `selftest`.

pub mod acceptance;
pub mod demos;
pub mod format;
