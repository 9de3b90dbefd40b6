//! The triple correspondence between the families ebar and bbar.
//!
//! A member of ebar splits by congruence class into three ordinary
//! partitions. Rescaled, these become a triple (alpha, beta, gamma):
//! a plain part 2dt turns into the odd number 2t + 1, an overlined part
//! (k - 1)d + r into the index k, an overlined part kd - r likewise into
//! k. So alpha has odd parts of size at least 3, while beta and gamma
//! have distinct positive parts.
//!
//! Inserting the triple into a diagram rebuilds a member of bbar of the
//! same weight. The parts of alpha are column lengths of an initial
//! diagram in which every column carries the label d. Each part k of
//! beta then lengthens the first k - 1 columns by one box and marks
//! column k, and each part of gamma does the same with its own marks;
//! beta goes first when its largest part is at least gamma's, otherwise
//! gamma goes first. Unwinding the insertions recovers the triple, so
//! ebar and bbar are equinumerous weight by weight, and the composite
//! map realizes the bijection between them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::family::{explain_family, explain_modular_with, FamilyId, SmallestLength};
use crate::partition::{
    matrix_a_prime, DModularOverpartition, DModularPart, Label, Overpartition, Params,
};

/// The three-partition form of an ebar member: alpha has odd parts of
/// size at least 3 in non-increasing order, beta and gamma are strictly
/// decreasing sequences of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTriple", into = "RawTriple")]
pub struct PartitionTriple {
    alpha: Vec<u64>,
    beta: Vec<u64>,
    gamma: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawTriple {
    alpha: Vec<u64>,
    beta: Vec<u64>,
    gamma: Vec<u64>,
}

impl From<PartitionTriple> for RawTriple {
    fn from(t: PartitionTriple) -> Self {
        RawTriple {
            alpha: t.alpha,
            beta: t.beta,
            gamma: t.gamma,
        }
    }
}

impl TryFrom<RawTriple> for PartitionTriple {
    type Error = Error;

    fn try_from(raw: RawTriple) -> Result<Self, Error> {
        PartitionTriple::new(raw.alpha, raw.beta, raw.gamma)
    }
}

impl PartitionTriple {
    pub fn new(alpha: Vec<u64>, beta: Vec<u64>, gamma: Vec<u64>) -> Result<Self, Error> {
        for pair in alpha.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::InvalidTriple {
                    reason: format!("alpha parts {}, {} out of order", pair[0], pair[1]),
                });
            }
        }
        for &a in &alpha {
            if a < 3 || a % 2 == 0 {
                return Err(Error::InvalidTriple {
                    reason: format!("alpha part {a} is not an odd number of size at least 3"),
                });
            }
        }
        for (name, parts) in [("beta", &beta), ("gamma", &gamma)] {
            if parts.contains(&0) {
                return Err(Error::InvalidTriple {
                    reason: format!("{name} contains a zero part"),
                });
            }
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
        }
        Ok(PartitionTriple { alpha, beta, gamma })
    }

    pub fn empty() -> Self {
        PartitionTriple {
            alpha: Vec::new(),
            beta: Vec::new(),
            gamma: Vec::new(),
        }
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

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty() && self.beta.is_empty() && self.gamma.is_empty()
    }

    /// sum (a_i - 1)d + sum ((b_j - 1)d + r) + sum (c_j d - r), the weight
    /// of the ebar member the triple encodes, and equally of its image in
    /// bbar.
    pub fn weight(&self, params: Params) -> u64 {
        let (d, r) = (params.d(), params.r());
        let a: u64 = self.alpha.iter().map(|&n| (n - 1) * d).sum();
        let b: u64 = self.beta.iter().map(|&k| (k - 1) * d + r).sum();
        let c: u64 = self.gamma.iter().map(|&k| k * d - r).sum();
        a + b + c
    }
}

impl fmt::Display for PartitionTriple {
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
        write!(f, "alpha ")?;
        list(f, &self.alpha)?;
        write!(f, ", beta ")?;
        list(f, &self.beta)?;
        write!(f, ", gamma ")?;
        list(f, &self.gamma)
    }
}

fn leading(parts: &[u64]) -> u64 {
    parts.first().copied().unwrap_or(0)
}

/// Split an ebar member into its triple. Plain parts feed alpha,
/// overlined parts congruent to r feed beta, the rest feed gamma.
pub fn decompose(lambda: &Overpartition, params: Params) -> Result<PartitionTriple, Error> {
    if let Some(reason) = explain_family(lambda, FamilyId::Ebar, params)? {
        return Err(Error::NotInFamily {
            family: FamilyId::Ebar,
            reason,
        });
    }
    let (d, r) = (params.d(), params.r());
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut gamma = Vec::new();
    for part in lambda.parts() {
        let v = part.value;
        if !part.overlined {
            // v = 2dt maps to 2t + 1, odd and at least 3.
            alpha.push(v / d + 1);
        } else if v % d == r {
            beta.push((v - r) / d + 1);
        } else {
            // v = kd - r, so v + r is divisible by d.
            gamma.push((v + r) / d);
        }
    }
    // lambda is sorted by value and each rescaling is monotone within its
    // class, so the three lists come out already ordered.
    PartitionTriple::new(alpha, beta, gamma)
}

pub(crate) fn mark_beta(label: Label) -> Label {
    match label {
        Label::D => Label::R,
        Label::DmR => Label::Dbar,
        other => unreachable!("a beta mark cannot land on label {other}"),
    }
}

pub(crate) fn mark_gamma(label: Label) -> Label {
    match label {
        Label::D => Label::DmR,
        Label::R => Label::Dbar,
        other => unreachable!("a gamma mark cannot land on label {other}"),
    }
}

/// Lengthen the first row - 1 columns by one box and relabel column row,
/// growing the diagram with weight-zero columns when it is too short.
pub(crate) fn lift(cols: &mut Vec<DModularPart>, row: u64, relabel: fn(Label) -> Label) {
    let row = row as usize;
    while cols.len() < row {
        cols.push(DModularPart {
            length: 1,
            label: Label::D,
        });
    }
    for col in &mut cols[..row - 1] {
        col.length += 1;
    }
    let col = &mut cols[row - 1];
    col.label = relabel(col.label);
}

/// Build the bbar diagram of a triple. Alpha gives the starting columns,
/// then the parts of beta and gamma are lifted in, larger parts first,
/// beta before gamma exactly when beta's largest part is at least
/// gamma's.
pub fn insert(t: &PartitionTriple) -> DModularOverpartition {
    let mut cols: Vec<DModularPart> = t
        .alpha
        .iter()
        .map(|&n| DModularPart {
            length: n,
            label: Label::D,
        })
        .collect();
    if leading(&t.beta) >= leading(&t.gamma) {
        for &k in &t.beta {
            lift(&mut cols, k, mark_beta);
        }
        for &k in &t.gamma {
            lift(&mut cols, k, mark_gamma);
        }
    } else {
        for &k in &t.gamma {
            lift(&mut cols, k, mark_gamma);
        }
        for &k in &t.beta {
            lift(&mut cols, k, mark_beta);
        }
    }
    cols.retain(|c| !(c.length == 1 && c.label == Label::D));
    // A marked column is strictly shorter than the column above it, since
    // the lift that marked it lengthened everything above, so the columns
    // stay in part order throughout.
    DModularOverpartition::new(cols).expect("lifting keeps the columns sorted")
}

/// Shorten the first row - 1 columns by one box, refusing when a column
/// would vanish.
fn lower(cols: &mut [DModularPart], row: usize) -> bool {
    for col in &mut cols[..row - 1] {
        if col.length == 1 {
            return false;
        }
        col.length -= 1;
    }
    true
}

/// Undo the lifts whose marks match `unmark`, smallest row first, which
/// reverses the order they were applied in. Emits the removed parts in
/// increasing order; the caller reverses them. Row indices stay fixed for
/// the whole unwinding, so columns that shrink to weight zero are kept in
/// place and dropped only at the end.
pub(crate) fn unwind_phase(
    cols: &mut [DModularPart],
    unmark: fn(Label) -> Option<Label>,
) -> Option<Vec<u64>> {
    let rows: Vec<usize> = cols
        .iter()
        .enumerate()
        .filter(|(_, c)| unmark(c.label).is_some())
        .map(|(i, _)| i + 1)
        .collect();
    let mut emitted = Vec::with_capacity(rows.len());
    for row in rows {
        let restored = unmark(cols[row - 1].label).expect("row was selected by its mark");
        if !lower(cols, row) {
            return None;
        }
        cols[row - 1].label = restored;
        emitted.push(row as u64);
    }
    Some(emitted)
}

pub(crate) fn unmark_gamma(label: Label) -> Option<Label> {
    match label {
        Label::DmR => Some(Label::D),
        Label::Dbar => Some(Label::R),
        _ => None,
    }
}

fn unmark_beta(label: Label) -> Option<Label> {
    match label {
        Label::R => Some(Label::D),
        Label::Dbar => Some(Label::DmR),
        _ => None,
    }
}

pub(crate) fn unmark_r_only(label: Label) -> Option<Label> {
    match label {
        Label::R => Some(Label::D),
        _ => None,
    }
}

fn unmark_dmr_only(label: Label) -> Option<Label> {
    match label {
        Label::DmR => Some(Label::D),
        _ => None,
    }
}

/// Read the starting alpha off a fully unwound diagram: every column is
/// back to label d, and length-one columns are the padding introduced by
/// lifts past the edge of the diagram.
fn residual_alpha(cols: &[DModularPart]) -> Vec<u64> {
    debug_assert!(cols.iter().all(|c| c.label == Label::D));
    cols.iter()
        .map(|c| c.length)
        .filter(|&len| len > 1)
        .collect()
}

/// Hypothesis: the diagram was built beta first. Peel gamma marks, then
/// beta marks, and accept only if the result is a valid triple with
/// beta's largest part at least gamma's that rebuilds the same diagram.
fn unwind_beta_first(mu: &DModularOverpartition) -> Option<PartitionTriple> {
    let mut cols = mu.parts().to_vec();
    let mut gamma = unwind_phase(&mut cols, unmark_gamma)?;
    let mut beta = unwind_phase(&mut cols, unmark_r_only)?;
    beta.reverse();
    gamma.reverse();
    let t = PartitionTriple::new(residual_alpha(&cols), beta, gamma).ok()?;
    if leading(t.beta()) < leading(t.gamma()) {
        return None;
    }
    (insert(&t) == *mu).then_some(t)
}

/// Hypothesis: the diagram was built gamma first, so gamma's largest part
/// strictly exceeds beta's.
fn unwind_gamma_first(mu: &DModularOverpartition) -> Option<PartitionTriple> {
    let mut cols = mu.parts().to_vec();
    let mut beta = unwind_phase(&mut cols, unmark_beta)?;
    let mut gamma = unwind_phase(&mut cols, unmark_dmr_only)?;
    beta.reverse();
    gamma.reverse();
    let t = PartitionTriple::new(residual_alpha(&cols), beta, gamma).ok()?;
    if leading(t.gamma()) <= leading(t.beta()) {
        return None;
    }
    (insert(&t) == *mu).then_some(t)
}

/// Recover the unique triple whose insertion gives this bbar diagram.
/// Exactly one of the two unwinding orders succeeds; anything else would
/// contradict the correspondence being one to one and is reported as
/// such.
pub fn invert(mu: &DModularOverpartition) -> Result<PartitionTriple, Error> {
    if let Some(reason) = explain_modular_with(mu, SmallestLength::Odd, matrix_a_prime) {
        return Err(Error::NotInFamily {
            family: FamilyId::Bbar,
            reason,
        });
    }
    match (unwind_beta_first(mu), unwind_gamma_first(mu)) {
        (Some(t), None) | (None, Some(t)) => Ok(t),
        (Some(_), Some(_)) => Err(Error::Inconsistent {
            reason: "both unwinding orders produced a preimage",
        }),
        (None, None) => Err(Error::Inconsistent {
            reason: "no unwinding order produced a preimage",
        }),
    }
}
