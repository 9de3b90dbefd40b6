//! Enumeration and q-series verification workbench for Schur-type
//! overpartition families.
//!
//! The crate has two halves that check each other. The combinatorial half
//! enumerates six partition families by brute-force backtracking and maps
//! overpartitions to and from their d-modular diagram form, including the
//! insertion bijection and the bounded-triple construction that explain the
//! family equalities. The analytic half expands the corresponding
//! generating functions as truncated integer series. The identity layer
//! compares the two coefficientwise.

pub mod bijection;
pub mod construction;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod identities;
pub mod partition;
pub mod qseries;
pub mod series;

pub use bijection::{decompose, insert, invert, PartitionTriple};
pub use construction::{cbar_table_formula, construct, deconstruct, BoundedTriple};
pub use error::Error;
pub use family::{check_family, check_family_modular, FamilyId};
pub use identities::{
    identity_sides, verify, verify_with_corruption, IdentityId, IdentitySides, VerificationReport,
    VerificationStatus, IDENTITIES,
};
pub use partition::{
    from_dmodular, to_dmodular, DModularOverpartition, DModularPart, Label, Overpartition, Params,
    Part,
};
pub use qseries::{
    g2_special, g3_special, inv_poch_infinite, poch_finite, poch_infinite, Monomial,
};
pub use series::{BivariateTable, SeriesComparison, TableComparison, TruncatedSeries};
