//! Finite multiplicative Lie algebras and their extension theory.
//!
//! Everything is tabulated: elements are dense indices with 0 the identity,
//! maps are index tables, and every law is checked by exhaustive scan. The
//! crate covers
//!
//! * groups and multiplicative Lie algebras ([`algebra`]),
//! * extensions, sections and equivalences ([`extensions`]),
//! * center and Lie-center factor systems ([`factor_systems`]),
//! * second cohomology and classification ([`cohomology`]),
//! * a text format and a result catalog ([`io`], [`catalog`]).

pub mod acceptance;
pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod diagnostics;
pub mod error;
pub mod extensions;
pub mod factor_systems;
pub mod io;
pub mod samples;

pub use algebra::{EndMla, FiniteGroup, GroupMap, MultLieAlgebra};
pub use diagnostics::{Law, Report, Violation};
pub use error::{Error, Result};
