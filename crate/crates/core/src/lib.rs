//! Exact intersection theory on products of projective spaces, applied to
//! complete-intersection Calabi-Yau threefolds.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`chow`]: the truncated polynomial ring `A*(P^{n_1} x ... x P^{n_k})`,
//!   Chern and Segre classes of split bundles, and line-bundle Euler
//!   characteristics;
//! * [`config`] and [`canon`]: configuration matrices, their validity checks
//!   and canonical forms;
//! * [`invariants`]: Euler numbers, second Betti numbers, Hodge numbers and
//!   Hilbert polynomials of general members;
//! * [`transitions`]: determinantal contractions and splittings, ODP counts
//!   and the Euler-number bookkeeping of conifold transitions;
//! * [`web`]: chains of splittings and contractions joining any
//!   configuration to the four-`P^1` terminal configuration.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod chow;
pub mod config;
mod error;
pub mod invariants;
pub mod transitions;
pub mod web;

pub use canon::CanonicalKey;
pub use chow::{AmbientSpace, ChowClass, Monomial, MultiDegree};
pub use config::{ConfigurationMatrix, ValidationReport};
pub use error::{Error, Result};
pub use invariants::{HilbertPolynomial, HodgePair};
pub use transitions::{ContractionSite, TransitionReport};
pub use web::{ChainFailure, ChainReport, ChainStep, StepKind, TransitionChain};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
