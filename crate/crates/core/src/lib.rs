pub mod corpus;
pub mod input;
pub mod invariants;
pub mod liealg;
pub mod linalg;
pub mod pvscore;
pub mod ratpoly;
pub mod report;
pub mod verifier;
