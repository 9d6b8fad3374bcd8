//! Toolkit for numerical semigroups and their lattice generalizations:
//! cofinite submonoids of the naturals and of d-dimensional lattice points.
//!
//! The crate computes the standard invariants (gaps, Frobenius data, Apéry
//! sets, minimal generators, pseudo-Frobenius elements, genus and the
//! sporadic-element counts), checks the Wilf inequality and its
//! d-dimensional generalization, builds three families of lattice
//! semigroups with closed-form invariants (stripe, graded, axis), and
//! enumerates numerical semigroups by genus along the standard tree of
//! effective-generator removals.
//!
//! Two computation paths are kept deliberately separate so they can audit
//! each other: [`gns::Gns`] derives everything from the raw gap set by
//! bounded search, while [`constructions`] produces the same data from
//! formulas attached to each construction.

pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod gns;
pub mod ns;
pub mod point;
pub mod wilf;

pub use constructions::{AxisSpec, ClosedForms, GradedSpec, StripeClosedForms, StripeSpec};
pub use enumeration::{EnumFrame, EnumOptions, GmScanResult, MetScanReport, ProgressEvent};
pub use error::Error;
pub use gns::{Gns, QuasiFlags};
pub use ns::{Classification, InvariantRecord, NumericalSemigroup};
pub use point::Point;
pub use wilf::{GeneralizedWilfReport, WilfReport, WilfVariant};
