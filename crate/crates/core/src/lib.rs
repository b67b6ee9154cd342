//! Gruenberg-Kegel prime graphs, cocliques and factored orders of finite
//! simple groups, together with a replayable ledger of the computational
//! steps in the recognition argument for `E6(3)` and `2E6(3)`.

pub mod arith;
pub mod catalog;
pub mod coclique;
pub mod error;
pub mod gkgraph;
pub mod ledger;
pub mod oracle;
pub mod search;

pub use error::{Error, Result};

use num_bigint::BigUint;

/// Factored group order with arbitrary-precision primes.
pub type Order = arith::Factorization<BigUint>;
/// Factorization of a machine-word integer.
pub type Factorization64 = arith::Factorization<u64>;
/// Factorization of a double-word integer.
pub type Factorization128 = arith::Factorization<u128>;
