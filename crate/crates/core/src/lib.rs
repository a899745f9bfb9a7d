//! Entanglement entropy of translation-invariant quadratic fermionic chains.

pub mod quad;
pub mod chain;
pub mod entropy;
pub mod special;
pub mod symbol;
