//! Exact local-view linear programming for the antiferromagnetic Potts model
//! on regular graphs.
//!
//! Everything in this crate is exact: coefficients are arbitrary-precision
//! rationals and the temperature is carried as `lam = e^{-beta}` so that no
//! transcendental function is ever evaluated. The crate is `no_std` and only
//! needs `alloc`; file formats, reports and the command line live in the
//! `potts` companion crate.
//!
//! Module map:
//!
//! * [`polynomial`]: sparse multivariate polynomials over `lam, t, q, r, s`
//!   and unreduced rational functions.
//! * [`graphs`]: small simple graphs, generators, graph6 / edge-list parsing,
//!   the brute-force Potts oracle and the cycle closed forms.
//! * [`localview`]: canonical local views and their enumeration.
//! * [`localstats`]: local partition functions, local energies and
//!   neighbourhood-histogram probabilities per local view.
//! * [`certificate`]: the dual certificates for cubic graphs.
//! * [`lp`]: exact simplex and the local-view linear programs.
#![no_std]

extern crate alloc;

pub mod certificate;
mod error;
pub mod graphs;
pub mod localstats;
pub mod localview;
pub mod lp;
pub mod polynomial;
pub mod rational;

pub use error::Error;
pub use graphs::Graph;
pub use localview::{LocalView, ViewTable};
pub use polynomial::{Monomial, Polynomial, RationalFunction, Var};
pub use rational::Rational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
