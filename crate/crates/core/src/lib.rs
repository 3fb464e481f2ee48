//! Desk-scale laboratory for two secret-sharing schemes: Latin-square
//! critical sets and threshold RSA signatures.
//!
//! * [`latin`]: squares, partial squares and the exact completion solver.
//! * [`critical`]: critical-set verification, search and strength classes.
//! * [`access`]: threshold and general monotone access structures.
//! * [`lsss`]: dealing, reconstruction and attacks for the Latin-square scheme.
//! * [`rsa`]: threshold RSA signatures with verifiable signature shares.
//! * [`analysis`]: security metrics for both schemes and their comparison.
//! * [`document`]: the text formats used by the command-line tool.

pub mod access;
pub mod analysis;
pub mod critical;
pub mod document;
pub mod latin;
pub mod lsss;
pub mod rsa;
