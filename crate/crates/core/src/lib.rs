//! Certified arbitrary-precision evaluation of zeta-series identities for
//! `ln 2` and the odd zeta values.
//!
//! * [`numkernel`]: exact rationals, ball arithmetic, constants, elementary
//!   functions.
//! * [`ratseq`]: Bernoulli numbers, Euler-polynomial endpoints, the
//!   on-disk Bernoulli cache.
//! * [`zetacore`]: Riemann and Hurwitz zeta (with `s`-derivative) by
//!   Euler-Maclaurin, `zeta(2n)` in closed form, rational Gamma.
//! * [`identities`]: series summation with rigorous tails and identity
//!   reports.
//! * [`cli`]: the command-line front end behind the `zetaforge` binary.

pub mod cli;
pub mod error;
pub mod identities;
pub mod numkernel;
pub mod ratseq;
pub mod zetacore;

pub use error::{Error, Result};
