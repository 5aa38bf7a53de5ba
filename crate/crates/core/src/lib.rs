//! Degree theory for tame automorphisms of the polynomial ring in three
//! variables: exact degree arithmetic in `Z^k`, polynomial maps, the
//! exclusion criteria with certificates and a search harness.

pub mod automorphism;
pub mod degree;
pub mod classify;
pub mod poly;
pub mod search;
