//! The bounded-triple construction for the family cbar.
//!
//! A cbar diagram with m columns is assembled from three partitions whose
//! parts are bounded in terms of m. Alpha has parts that are even
//! multiples of d, none exceeding 2md; beta has distinct parts congruent
//! to r mod d, none exceeding (m - 1)d + r; gamma has distinct parts
//! congruent to d - r mod d, none exceeding md - r.
//!
//! The assembly starts from m columns of length two labelled d, the
//! shortest diagram with m columns and an even smallest length. An alpha
//! part 2jd deepens the first j columns by two boxes. A beta part
//! (k - 1)d + r and a gamma part kd - r are lifted into column k exactly
//! as in the insertion bijection, beta before gamma. The bounds keep
//! every mark inside the m columns, so unlike the insertion the order of
//! the two phases is fixed and the assembly is undone by a single
//! unwinding. Summing over m, cbar members with m columns and weight n
//! are counted by the coefficient of q^n in
//!
//!   q^(dm) (-q^r; q^d)_m (-q^(d-r); q^d)_m / (q^(2d); q^(2d))_m,
//!
//! which cbar_table_formula tabulates.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bijection::{lift, mark_beta, mark_gamma, unmark_gamma, unmark_r_only, unwind_phase};
use crate::error::Error;
use crate::family::{explain_modular_with, FamilyId, SmallestLength};
use crate::partition::{matrix_a_prime, DModularOverpartition, DModularPart, Label, Params};
use crate::qseries::{factor, Monomial};
use crate::series::{BivariateTable, TruncatedSeries};

/// The bounded-partition form of a cbar member with m columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BoundedTriple {
    m: u64,
    alpha: Vec<u64>,
    beta: Vec<u64>,
    gamma: Vec<u64>,
}

impl BoundedTriple {
    pub fn new(
        m: u64,
        alpha: Vec<u64>,
        beta: Vec<u64>,
        gamma: Vec<u64>,
        params: Params,
    ) -> Result<Self, Error> {
        let (d, r) = (params.d(), params.r());
        if m == 0 {
            return if alpha.is_empty() && beta.is_empty() && gamma.is_empty() {
                Ok(BoundedTriple::empty())
            } else {
                Err(Error::InvalidTriple {
                    reason: "a triple with no columns must have empty parts".to_string(),
                })
            };
        }
        for pair in alpha.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::InvalidTriple {
                    reason: format!("alpha parts {}, {} out of order", pair[0], pair[1]),
                });
            }
        }
        for &a in &alpha {
            if a == 0 || a % (2 * d) != 0 {
                return Err(Error::InvalidTriple {
                    reason: format!("alpha part {a} is not a positive even multiple of {d}"),
                });
            }
            if a > 2 * m * d {
                return Err(Error::InvalidTriple {
                    reason: format!("alpha part {a} exceeds the bound {}", 2 * m * d),
                });
            }
        }
        for (name, parts, residue, bound) in [
            ("beta", &beta, r, (m - 1) * d + r),
            ("gamma", &gamma, d - r, m * d - r),
        ] {
            for pair in parts.windows(2) {
                if pair[0] <= pair[1] {
                    return Err(Error::InvalidTriple {
                        reason: format!(
                            "{name} parts {}, {} are not strictly decreasing",
                            pair[0], pair[1]
                        ),
                    });
                }
            }
            for &v in parts {
                if v % d != residue {
                    return Err(Error::InvalidTriple {
                        reason: format!("{name} part {v} is not congruent to {residue} mod {d}"),
                    });
                }
                if v > bound {
                    return Err(Error::InvalidTriple {
                        reason: format!("{name} part {v} exceeds the bound {bound}"),
                    });
                }
            }
        }
        Ok(BoundedTriple {
            m,
            alpha,
            beta,
            gamma,
        })
    }

    pub fn empty() -> Self {
        BoundedTriple {
            m: 0,
            alpha: Vec::new(),
            beta: Vec::new(),
            gamma: Vec::new(),
        }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u64] {
        &self.beta
    }

    pub fn gamma(&self) -> &[u64] {
        &self.gamma
    }

    /// md + sum alpha + sum beta + sum gamma: the m starting columns each
    /// weigh d, and every later step adds its part value in boxes times d
    /// or its mark weight.
    pub fn weight(&self, params: Params) -> u64 {
        let parts: u64 = self.alpha.iter().chain(&self.beta).chain(&self.gamma).sum();
        self.m * params.d() + parts
    }
}

impl fmt::Display for BoundedTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, parts: &[u64]| -> fmt::Result {
            write!(f, "(")?;
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")
        };
        write!(f, "m {}, alpha ", self.m)?;
        list(f, &self.alpha)?;
        write!(f, ", beta ")?;
        list(f, &self.beta)?;
        write!(f, ", gamma ")?;
        list(f, &self.gamma)
    }
}

/// Assemble the cbar diagram of a bounded triple.
pub fn construct(t: &BoundedTriple, params: Params) -> DModularOverpartition {
    let (d, r) = (params.d(), params.r());
    let mut cols = vec![
        DModularPart {
            length: 2,
            label: Label::D,
        };
        t.m as usize
    ];
    for &a in &t.alpha {
        let j = (a / (2 * d)) as usize;
        for col in &mut cols[..j] {
            col.length += 2;
        }
    }
    // The bounds keep every mark inside the m columns, so lift never pads.
    for &b in &t.beta {
        lift(&mut cols, (b - r) / d + 1, mark_beta);
    }
    for &g in &t.gamma {
        lift(&mut cols, (g + r) / d, mark_gamma);
    }
    DModularOverpartition::new(cols).expect("lifting keeps the columns sorted")
}

/// Recover the bounded triple of a cbar diagram by unwinding the gamma
/// marks, then the beta marks, then reading alpha off the residual
/// columns by conjugation.
pub fn deconstruct(mu: &DModularOverpartition, params: Params) -> Result<BoundedTriple, Error> {
    if let Some(reason) = explain_modular_with(mu, SmallestLength::Even, matrix_a_prime) {
        return Err(Error::NotInFamily {
            family: FamilyId::Cbar,
            reason,
        });
    }
    let (d, r) = (params.d(), params.r());
    let mut cols = mu.parts().to_vec();
    let gamma_rows = unwind_phase(&mut cols, unmark_gamma).ok_or(Error::Inconsistent {
        reason: "unwinding a gamma mark emptied a column",
    })?;
    let beta_rows = unwind_phase(&mut cols, unmark_r_only).ok_or(Error::Inconsistent {
        reason: "unwinding a beta mark emptied a column",
    })?;
    let gamma: Vec<u64> = gamma_rows.iter().rev().map(|&k| k * d - r).collect();
    let beta: Vec<u64> = beta_rows.iter().rev().map(|&k| (k - 1) * d + r).collect();
    debug_assert!(cols.iter().all(|c| c.label == Label::D));
    if cols.iter().any(|c| c.length % 2 != 0) {
        return Err(Error::Inconsistent {
            reason: "residual columns are not all even",
        });
    }
    let m = cols.len() as u64;
    // Each residual column splits as two starting boxes plus pairs added
    // by alpha; conjugating the pair counts recovers alpha largest first.
    let mut alpha = Vec::new();
    for j in 1.. {
        let tall = cols.iter().filter(|c| (c.length - 2) / 2 >= j).count();
        if tall == 0 {
            break;
        }
        alpha.push(2 * tall as u64 * d);
    }
    let t = BoundedTriple::new(m, alpha, beta, gamma, params).map_err(|_| Error::Inconsistent {
        reason: "unwinding produced an out-of-bounds triple",
    })?;
    if construct(&t, params) != *mu {
        return Err(Error::Inconsistent {
            reason: "reassembling the unwound triple gives a different diagram",
        });
    }
    Ok(t)
}

/// The two-variable count of cbar members: entry (m, n) is the number
/// with m columns and weight n, computed from the series
///
///   q^(dm) (-q^r; q^d)_m (-q^(d-r); q^d)_m / (q^(2d); q^(2d))_m
///
/// for each m up to max_m, truncated at max_n.
pub fn cbar_table_formula(params: Params, max_m: usize, max_n: usize) -> BivariateTable {
    let (d, r) = (params.d() as usize, params.r() as usize);
    let mut table = BivariateTable::zero(max_m, max_n);
    // Running value of the m-dependent product at the current m.
    let mut product = TruncatedSeries::one(max_n);
    for m in 0..=max_m {
        if m > 0 {
            let over_r = factor(Monomial::minus(r), d, m - 1, max_n);
            let over_dr = factor(Monomial::minus(d - r), d, m - 1, max_n);
            let even_inv = factor(Monomial::plus(2 * d), 2 * d, m - 1, max_n)
                .invert()
                .expect("constant term 1");
            product = product
                .mul(&over_r)
                .expect("orders match")
                .mul(&over_dr)
                .expect("orders match")
                .mul(&even_inv)
                .expect("orders match");
        }
        let row = product.shift_up(d * m);
        for n in 0..=max_n {
            if row.coeff(n) != &BigInt::from(0) {
                table.set(m, n, row.coeff(n).clone());
            }
        }
    }
    table
}
