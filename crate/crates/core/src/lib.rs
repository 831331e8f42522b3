//! Irreducible cyclic codes of length `n` over `F_q` when every prime
//! divisor of `n` divides `q - 1`: closed-form factorization of `x^n - 1`,
//! weight enumerators of every minimal code, and brute-force oracles that
//! check them.

pub mod catalog;
pub mod error;
pub mod factorizer;
pub mod gfield;
pub mod numth;
pub mod oracle;
pub mod polyring;
pub mod wdist;

pub use error::{Error, Result};
