//! Exact fusion-rule algebra for anyon models.
//!
//! A [`FusionRule`] holds integer structure constants `N_{ij}^k`. On top of
//! it the crate decides acyclicity of the adjoint graph ([`is_acyclic`]) and
//! nilpotency via the descending central series ([`central_series`]), and
//! checks that the two verdicts coincide ([`check_theorem`]). Rules come from
//! files, from the [`generators`] (groups, SU(2)_k, fixtures, Drinfeld
//! doubles) or from exhaustive enumeration in [`explorer`].

pub mod acyclicity;
pub mod cli;
pub mod error;
pub mod explorer;
pub mod fpdim;
pub mod generators;
pub mod io;
pub mod nilpotency;
pub mod rule;

pub use acyclicity::{adjoint_graph, check_theorem, is_acyclic, AdjointGraph, CycleWitness, TheoremCheck};
pub use error::{Error, Result};
pub use fpdim::{fp_dimensions, FpDimData, DEFAULT_TOLERANCE};
pub use nilpotency::{adjoint_subrule, central_series, closure, restrict, CentralSeries, LabelSet};
pub use rule::{product, Axiom, AxiomSet, FusionRule, ValidationReport, Violation};
