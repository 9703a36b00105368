//! Scenario loading, experiment orchestration, and dataset emission for
//! the `fpi` binary.  Exposed as a library so integration tests can drive
//! the same code paths the executable uses.

pub mod emit;
pub mod runner;
pub mod scenario;
