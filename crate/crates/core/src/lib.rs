//! Exact pointed braided categories and the word calculus of categorical
//! extensions on the circle.
//!
//! Every phase lives in a cyclotomic field, so each identity is decided by
//! exact equality. The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod catext;
pub mod circle;
pub mod dhr;
pub mod error;
pub mod fusion;
pub mod lattice;
pub mod models;
pub mod scalar;

pub use error::Error;
pub use scalar::{root_of_unity, Cyc, CycField};
