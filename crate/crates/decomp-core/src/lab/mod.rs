//! Ground truth and test instances: exact (exponential) solvers for the
//! minimum path/cycle decomposition size, and seeded deterministic graph
//! generators for every family the test suites use.

pub mod gen;
pub mod oracle;
