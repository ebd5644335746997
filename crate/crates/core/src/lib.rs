//! Combinatorial invariants of degenerating curves.
//!
//! A degenerating curve is described here by its *reduction type*: the
//! multiplicities, component genera and intersection matrix of the special
//! fiber of an snc-model. From that data the crate computes the index, the
//! ν-invariant, the specialization index, the set of realizable degrees and
//! the genus, checks Winters realizability, transforms models by blow-ups,
//! and enumerates bounded spaces of reduction types with prescribed
//! invariants.
//!
//! The main entry points:
//!
//! * [`ReductionType`] — the `(N, G, C)` data and its validation, strata,
//!   invariants and blow-ups.
//! * [`ShiftedSemigroup`] — realizable-degree semigroups with all-positive
//!   coefficients, stability thresholds and gcd certificates.
//! * [`search::enumerate`] — exhaustive bounded enumeration of
//!   Winters-realizable types up to graph isomorphism.
//! * [`io`] / [`dot`] — the JSON file format and DOT export used by the
//!   `spindex` command-line tool.

pub mod canonical;
pub mod dot;
pub mod error;
pub mod families;
pub mod invariants;
pub mod io;
pub mod modelops;
pub mod reduction;
pub mod search;
pub mod semigroup;

pub use canonical::{canonical_form, is_isomorphic};
pub use error::{Error, Result};
pub use invariants::{BoundReport, DegreeSet, InvariantSummary};
pub use modelops::{BlowupCenter, BlowupChain, BlowupStep, Realization};
pub use reduction::{AbstractSncFiber, ReductionType, Stratum, ValidationReport};
pub use search::{
    enumerate, strict_family, verify_example, ExampleId, ExampleReport, SearchConstraints,
    SearchResult, SearchStats,
};
pub use semigroup::{check_stability, min_gcd_of_union, GcdCertificate, ShiftedSemigroup, StabilityReport};

/// Exact rational arithmetic for genus computations.
pub type Rational = num_rational::Ratio<i128>;
