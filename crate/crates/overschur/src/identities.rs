//! The coefficientwise identities tying the two halves together.
//!
//! Each identity pits an enumerated counting series against an analytic
//! expansion, truncated at the same order:
//!
//!   schur-product   b counted by weight against (-q^r; q^d)oo (-q^(d-r); q^d)oo
//!   c-g3            c against that product times g3(-q^r; q^d)
//!   bbar-product    bbar against the product divided by (q^(2d); q^(2d))oo
//!   cbar-g2         cbar against the bbar product times g2(-q^r; q^d)
//!   cbar-sum-eq     the column-count formula rows summed against the
//!                   cbar-g2 right side, a purely analytic cross-check
//!   cbar-bivariate  cbar counted by columns and weight against the
//!                   column-count formula table
//!
//! Verification reports the first differing coefficient. The corruption
//! hook adds one to a single left-side coefficient first; a healthy
//! comparison must then fail at exactly that exponent, which is how the
//! test suite convinces itself the comparisons can fail at all.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::construction::cbar_table_formula;
use crate::enumerate::{count_parts_table, counting_series};
use crate::error::Error;
use crate::family::FamilyId;
use crate::partition::Params;
use crate::qseries::{g2_special, g3_special, inv_poch_infinite, poch_infinite, Monomial};
use crate::series::{BivariateTable, SeriesComparison, TableComparison, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "schur-product")]
    SchurProduct,
    #[serde(rename = "c-g3")]
    CG3,
    #[serde(rename = "bbar-product")]
    BbarProduct,
    #[serde(rename = "cbar-g2")]
    CbarG2,
    #[serde(rename = "cbar-sum-eq")]
    CbarSumEq,
    #[serde(rename = "cbar-bivariate")]
    CbarBivariate,
}

pub const IDENTITIES: [IdentityId; 6] = [
    IdentityId::SchurProduct,
    IdentityId::CG3,
    IdentityId::BbarProduct,
    IdentityId::CbarG2,
    IdentityId::CbarSumEq,
    IdentityId::CbarBivariate,
];

impl IdentityId {
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::SchurProduct => "schur-product",
            IdentityId::CG3 => "c-g3",
            IdentityId::BbarProduct => "bbar-product",
            IdentityId::CbarG2 => "cbar-g2",
            IdentityId::CbarSumEq => "cbar-sum-eq",
            IdentityId::CbarBivariate => "cbar-bivariate",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IDENTITIES
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Both sides of an identity, fully expanded. Series identities compare
/// one coefficient per weight, table identities one per column count and
/// weight.
pub enum IdentitySides {
    Series {
        lhs: TruncatedSeries,
        rhs: TruncatedSeries,
    },
    Tables {
        lhs: BivariateTable,
        rhs: BivariateTable,
    },
}

/// (-q^r; q^d)oo (-q^(d-r); q^d)oo, the right side shared by the four
/// product identities.
fn base_product(params: Params, order: usize) -> TruncatedSeries {
    let (d, r) = (params.d() as usize, params.r() as usize);
    poch_infinite(&[Monomial::minus(r), Monomial::minus(d - r)], d, order)
        .expect("exponents are positive")
}

fn bbar_product(params: Params, order: usize) -> TruncatedSeries {
    let d = params.d() as usize;
    base_product(params, order)
        .mul(&inv_poch_infinite(2 * d, order))
        .expect("orders match")
}

/// Expand both sides of an identity at the given truncation order. A
/// diagram with m columns weighs at least md, so the tables go up to
/// order / d columns.
pub fn identity_sides(id: IdentityId, params: Params, order: usize) -> IdentitySides {
    let (d, r) = (params.d(), params.r());
    let max_m = (order as u64 / d) as usize;
    match id {
        IdentityId::SchurProduct => IdentitySides::Series {
            lhs: counting_series(FamilyId::B, params, order as u64),
            rhs: base_product(params, order),
        },
        IdentityId::CG3 => IdentitySides::Series {
            lhs: counting_series(FamilyId::C, params, order as u64),
            rhs: base_product(params, order)
                .mul(&g3_special(d, r, order).expect("params are valid"))
                .expect("orders match"),
        },
        IdentityId::BbarProduct => IdentitySides::Series {
            lhs: counting_series(FamilyId::Bbar, params, order as u64),
            rhs: bbar_product(params, order),
        },
        IdentityId::CbarG2 => IdentitySides::Series {
            lhs: counting_series(FamilyId::Cbar, params, order as u64),
            rhs: bbar_product(params, order)
                .mul(&g2_special(d, r, order).expect("params are valid"))
                .expect("orders match"),
        },
        IdentityId::CbarSumEq => IdentitySides::Series {
            lhs: cbar_table_formula(params, max_m, order).row_sum(),
            rhs: bbar_product(params, order)
                .mul(&g2_special(d, r, order).expect("params are valid"))
                .expect("orders match"),
        },
        IdentityId::CbarBivariate => IdentitySides::Tables {
            lhs: count_parts_table(FamilyId::Cbar, params, max_m, order as u64),
            rhs: cbar_table_formula(params, max_m, order),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerificationStatus {
    Equal,
    Mismatch,
}

/// Outcome of one identity check. On a mismatch, `at` holds the first
/// differing weight, `at_parts` the column count for table identities,
/// and the coefficients come along as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub d: u64,
    pub r: u64,
    pub order: usize,
    pub status: VerificationStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at_parts: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs_coeff: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_coeff: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == VerificationStatus::Equal
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} d={} r={} order={}: ",
            self.identity, self.d, self.r, self.order
        )?;
        match self.status {
            VerificationStatus::Equal => write!(f, "equal"),
            VerificationStatus::Mismatch => {
                write!(f, "mismatch at weight {}", self.at.unwrap_or(0))?;
                if let Some(m) = self.at_parts {
                    write!(f, ", {m} columns")?;
                }
                write!(
                    f,
                    " ({} against {})",
                    self.lhs_coeff.as_deref().unwrap_or("?"),
                    self.rhs_coeff.as_deref().unwrap_or("?")
                )
            }
        }
    }
}

/// Check one identity coefficient by coefficient up to the order.
pub fn verify(id: IdentityId, params: Params, order: usize) -> VerificationReport {
    verify_with_corruption(id, params, order, None)
}

/// verify, with an optional fault: adding one to the left side's
/// coefficient at the given weight (for table identities, in the
/// zero-column row) before comparing. A comparison that cannot detect
/// that is broken, so the test suite runs every identity both ways.
pub fn verify_with_corruption(
    id: IdentityId,
    params: Params,
    order: usize,
    corrupt: Option<usize>,
) -> VerificationReport {
    let mut report = VerificationReport {
        identity: id,
        d: params.d(),
        r: params.r(),
        order,
        status: VerificationStatus::Equal,
        at: None,
        at_parts: None,
        lhs_coeff: None,
        rhs_coeff: None,
    };
    match identity_sides(id, params, order) {
        IdentitySides::Series { mut lhs, rhs } => {
            if let Some(e) = corrupt {
                lhs = lhs
                    .add(&TruncatedSeries::monomial(BigInt::one(), e, order))
                    .expect("orders match");
            }
            if let SeriesComparison::Mismatch {
                exponent,
                left,
                right,
            } = lhs.compare(&rhs).expect("orders match")
            {
                report.status = VerificationStatus::Mismatch;
                report.at = Some(exponent);
                report.lhs_coeff = Some(left.to_string());
                report.rhs_coeff = Some(right.to_string());
            }
        }
        IdentitySides::Tables { mut lhs, rhs } => {
            if let Some(e) = corrupt {
                let bumped = lhs.get(0, e) + BigInt::one();
                lhs.set(0, e, bumped);
            }
            if let TableComparison::Mismatch {
                parts,
                exponent,
                left,
                right,
            } = lhs.compare(&rhs).expect("shapes match")
            {
                report.status = VerificationStatus::Mismatch;
                report.at = Some(exponent);
                report.at_parts = Some(parts);
                report.lhs_coeff = Some(left.to_string());
                report.rhs_coeff = Some(right.to_string());
            }
        }
    }
    report
}
