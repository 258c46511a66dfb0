//! Exact-arithmetic verification of Delannoy-type polynomial identities,
//! integer-valuedness results, cyclotomic q-analogues and supercongruences.

pub mod cli;
pub mod exact;
pub mod poly;
pub mod qstruct;
pub mod sequences;
pub mod verifier;
