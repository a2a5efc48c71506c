//! Test support for the foxhom workspace: reference fixtures, brute-force
//! oracles and seeded property suites shared by the core tests and the
//! acceptance gate.

pub mod fixtures;
pub mod oracle;
pub mod random;
pub mod suites;
