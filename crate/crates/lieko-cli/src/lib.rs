//! Library surface of the CLI crate: the `.lie` file format and the
//! verify-paper sections, shared between the binary and the test suites.

pub mod commands;
pub mod liefile;
pub mod verify;
