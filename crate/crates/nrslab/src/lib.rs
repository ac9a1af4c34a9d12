//! Exact verification engine for the higher-order Newton-type root iteration
//! NRS(m): attractor construction, Jacobian factorization, the elimination
//! polynomial built from lattice-path determinants, directed simple graph
//! identities, and the supporting symmetric-function toolkit.

pub mod attractor;
pub mod comb;
pub mod dsg;
pub mod error;
pub mod laurent;
pub mod lgv;
pub mod jacobian;
pub mod matrix;
pub mod newton_series;
pub mod nrs2;
pub mod polyspec;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod symfunc;
