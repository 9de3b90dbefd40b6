//! Membership tests for the six partition families.
//!
//! Three classical families contain plain partitions: the gap family b
//! (parts congruent to r, d - r, or 0 mod d, consecutive parts differing
//! by at least d, strictly more when the smaller part is divisible by d),
//! the distinct family e (distinct parts congruent to r or d - r mod d),
//! and c, which is b with smallest part larger than d.
//!
//! Their overpartition counterparts: ebar takes overlined distinct parts
//! congruent to r or d - r mod d together with unrestricted non-overlined
//! multiples of 2d. bbar and cbar are defined on the d-modular diagram:
//! adjacent column lengths must differ by at least the entry of a minimal
//! difference matrix keyed by the smaller column's label, with the same
//! parity as that entry; bbar requires the smallest column length odd,
//! cbar even. The weight-zero column is excluded.
//!
//! bbar and cbar have an equivalent formulation directly on part values:
//! adjacent values differ by at least a matrix entry keyed by both
//! congruence classes, congruent to that entry mod 2d, and the smallest
//! part lies in a fixed set of classes mod 2d. Both routes are implemented
//! here, deliberately sharing no code, so each can certify the other.
//!
//! The checkers that take a matrix as a closure exist so tests can inject
//! a corrupted entry and confirm the suite notices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::{
    from_dmodular, matrix_a, matrix_a_prime, to_dmodular, DModularOverpartition, Label,
    Overpartition, Params,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    #[serde(rename = "b")]
    B,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "bbar")]
    Bbar,
    #[serde(rename = "ebar")]
    Ebar,
    #[serde(rename = "cbar")]
    Cbar,
}

pub const FAMILIES: [FamilyId; 6] = [
    FamilyId::B,
    FamilyId::E,
    FamilyId::C,
    FamilyId::Bbar,
    FamilyId::Ebar,
    FamilyId::Cbar,
];

impl FamilyId {
    /// The families whose members are plain partitions.
    pub fn classical(self) -> bool {
        matches!(self, FamilyId::B | FamilyId::E | FamilyId::C)
    }

    /// The families defined through d-modular diagram conditions.
    pub fn barred_gap(self) -> bool {
        matches!(self, FamilyId::Bbar | FamilyId::Cbar)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyId::B => "b",
            FamilyId::E => "e",
            FamilyId::C => "c",
            FamilyId::Bbar => "bbar",
            FamilyId::Ebar => "ebar",
            FamilyId::Cbar => "cbar",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "b" => Ok(FamilyId::B),
            "e" => Ok(FamilyId::E),
            "c" => Ok(FamilyId::C),
            "bbar" => Ok(FamilyId::Bbar),
            "ebar" => Ok(FamilyId::Ebar),
            "cbar" => Ok(FamilyId::Cbar),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// Required parity of the smallest column's length in the diagram
/// conditions: odd selects bbar-shaped objects, even cbar-shaped ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallestLength {
    Odd,
    Even,
}

// ---------------------------------------------------------------------------
// d-modular route
// ---------------------------------------------------------------------------

/// First violated diagram condition, or None for a member. diff_min gives
/// the minimal length difference for a (larger, smaller) label pair; its
/// parity is also the required parity of the difference.
pub fn explain_modular_with(
    mu: &DModularOverpartition,
    smallest: SmallestLength,
    diff_min: impl Fn(Label, Label) -> u64,
) -> Option<String> {
    for pair in mu.parts().windows(2) {
        let (hi, lo) = (pair[0], pair[1]);
        let gap = hi.length - lo.length;
        let need = diff_min(hi.label, lo.label);
        if gap < need {
            return Some(format!(
                "columns ({hi}) over ({lo}): length difference {gap} is below {need}"
            ));
        }
        if gap % 2 != need % 2 {
            return Some(format!(
                "columns ({hi}) over ({lo}): length difference {gap} has the wrong parity, expected that of {need}"
            ));
        }
    }
    // A weight-zero column is minimal in the part order, so if one occurs
    // at all the last column is one.
    if let Some(&last) = mu.parts().last() {
        if last.length == 1 && last.label == Label::D {
            return Some("contains the weight-zero column (1 d)".to_string());
        }
        let odd = last.length % 2 == 1;
        match smallest {
            SmallestLength::Odd if !odd => {
                return Some(format!("smallest column ({last}) must have odd length"));
            }
            SmallestLength::Even if odd => {
                return Some(format!("smallest column ({last}) must have even length"));
            }
            _ => {}
        }
    }
    None
}

pub fn check_modular_with(
    mu: &DModularOverpartition,
    smallest: SmallestLength,
    diff_min: impl Fn(Label, Label) -> u64,
) -> bool {
    explain_modular_with(mu, smallest, diff_min).is_none()
}

// ---------------------------------------------------------------------------
// value route
// ---------------------------------------------------------------------------

/// Congruence class of a part value, determined by residue mod d and the
/// overline alone.
fn value_class(value: u64, overlined: bool, params: Params) -> Option<Label> {
    let (d, r) = (params.d(), params.r());
    match (overlined, value % d) {
        (true, m) if m == r => Some(Label::R),
        (true, m) if m == d - r => Some(Label::DmR),
        (true, 0) => Some(Label::Dbar),
        (false, 0) => Some(Label::D),
        _ => None,
    }
}

/// First violated value-level condition for the barred gap families, or
/// None for a member. gap gives the minimal difference of adjacent part
/// values for a (larger, smaller) class pair; the difference must also be
/// congruent to that entry mod 2d. Works directly on values and never
/// consults the diagram form.
pub fn explain_value_with(
    lambda: &Overpartition,
    family: FamilyId,
    params: Params,
    gap: impl Fn(Label, Label) -> u64,
) -> Option<String> {
    assert!(
        family.barred_gap(),
        "value-level gap conditions are defined for bbar and cbar only"
    );
    let (d, r) = (params.d(), params.r());
    let two_d = 2 * d;
    let mut classes = Vec::with_capacity(lambda.len());
    for p in lambda.parts() {
        match value_class(p.value, p.overlined, params) {
            Some(c) => classes.push(c),
            None => {
                return Some(format!("part {p} is in no admissible congruence class"));
            }
        }
    }
    for (i, pair) in lambda.parts().windows(2).enumerate() {
        let (hi, lo) = (pair[0], pair[1]);
        let diff = hi.value - lo.value;
        let need = gap(classes[i], classes[i + 1]);
        if diff < need {
            return Some(format!(
                "parts {hi} over {lo}: difference {diff} is below {need}"
            ));
        }
        if (diff - need) % two_d != 0 {
            return Some(format!(
                "parts {hi} over {lo}: difference {diff} is not congruent to {need} mod {two_d}"
            ));
        }
    }
    if let Some(&last) = lambda.parts().last() {
        let cls = (last.overlined, last.value % two_d);
        let ok = match family {
            FamilyId::Bbar => {
                cls == (true, r) || cls == (true, d - r) || cls == (true, d) || cls == (false, 0)
            }
            FamilyId::Cbar => {
                cls == (false, d)
                    || cls == (true, d + r)
                    || cls == (true, two_d - r)
                    || cls == (true, 0)
            }
            _ => unreachable!(),
        };
        if !ok {
            return Some(format!(
                "smallest part {last} is in no admissible class mod {two_d}"
            ));
        }
    }
    None
}

/// Value-level membership for bbar and cbar with the standard matrix.
/// This is the cross-check route; `check_family` goes through the diagram.
pub fn check_value_conditions(lambda: &Overpartition, family: FamilyId, params: Params) -> bool {
    explain_value_with(lambda, family, params, |u, v| matrix_a(params, u, v)).is_none()
}

// ---------------------------------------------------------------------------
// family membership
// ---------------------------------------------------------------------------

fn explain_classical(
    lambda: &Overpartition,
    family: FamilyId,
    params: Params,
) -> Result<Option<String>, Error> {
    if lambda.parts().iter().any(|p| p.overlined) {
        return Err(Error::OverlinedClassical { family });
    }
    let (d, r) = (params.d(), params.r());
    match family {
        FamilyId::E => {
            for p in lambda.parts() {
                let m = p.value % d;
                if m != r && m != d - r {
                    return Ok(Some(format!(
                        "part {p} is not congruent to {r} or {} mod {d}",
                        d - r
                    )));
                }
            }
            for pair in lambda.parts().windows(2) {
                if pair[0].value == pair[1].value {
                    return Ok(Some(format!("part {} repeats", pair[0])));
                }
            }
        }
        FamilyId::B | FamilyId::C => {
            for p in lambda.parts() {
                let m = p.value % d;
                if m != r && m != d - r && m != 0 {
                    return Ok(Some(format!(
                        "part {p} is not congruent to {r}, {}, or 0 mod {d}",
                        d - r
                    )));
                }
            }
            for pair in lambda.parts().windows(2) {
                let (hi, lo) = (pair[0].value, pair[1].value);
                let need = if lo % d == 0 { d + 1 } else { d };
                if hi - lo < need {
                    return Ok(Some(format!(
                        "parts {hi} over {lo}: difference {} is below {need}",
                        hi - lo
                    )));
                }
            }
            if family == FamilyId::C {
                if let Some(last) = lambda.parts().last() {
                    if last.value <= d {
                        return Ok(Some(format!("smallest part {last} is not larger than {d}")));
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(None)
}

fn explain_ebar(lambda: &Overpartition, params: Params) -> Option<String> {
    let (d, r) = (params.d(), params.r());
    for p in lambda.parts() {
        if p.overlined {
            let m = p.value % d;
            if m != r && m != d - r {
                return Some(format!(
                    "overlined part {p} is not congruent to {r} or {} mod {d}",
                    d - r
                ));
            }
        } else if p.value % (2 * d) != 0 {
            return Some(format!(
                "non-overlined part {p} is not a multiple of {}",
                2 * d
            ));
        }
    }
    None
}

fn barred_parity(family: FamilyId) -> SmallestLength {
    match family {
        FamilyId::Bbar => SmallestLength::Odd,
        FamilyId::Cbar => SmallestLength::Even,
        _ => unreachable!(),
    }
}

/// First violated membership condition of an overpartition for a family,
/// or None for a member. Classical families reject overlined input as an
/// error rather than a non-member.
pub fn explain_family(
    lambda: &Overpartition,
    family: FamilyId,
    params: Params,
) -> Result<Option<String>, Error> {
    match family {
        FamilyId::B | FamilyId::E | FamilyId::C => explain_classical(lambda, family, params),
        FamilyId::Ebar => Ok(explain_ebar(lambda, params)),
        FamilyId::Bbar | FamilyId::Cbar => match to_dmodular(lambda, params) {
            Ok(mu) => Ok(explain_modular_with(
                &mu,
                barred_parity(family),
                matrix_a_prime,
            )),
            Err(Error::NotRepresentable { value, overlined }) => {
                let p = crate::partition::Part { value, overlined };
                Ok(Some(format!("part {p} has no d-modular encoding")))
            }
            Err(e) => Err(e),
        },
    }
}

pub fn check_family(
    lambda: &Overpartition,
    family: FamilyId,
    params: Params,
) -> Result<bool, Error> {
    Ok(explain_family(lambda, family, params)?.is_none())
}

/// Membership of a d-modular object. For bbar and cbar this is the native
/// form; other families are checked on the decoded value form.
pub fn explain_family_modular(
    mu: &DModularOverpartition,
    family: FamilyId,
    params: Params,
) -> Result<Option<String>, Error> {
    match family {
        FamilyId::Bbar | FamilyId::Cbar => Ok(explain_modular_with(
            mu,
            barred_parity(family),
            matrix_a_prime,
        )),
        _ => match from_dmodular(mu, params) {
            Ok(lambda) => explain_family(&lambda, family, params),
            Err(Error::DegeneratePart) => {
                Ok(Some("contains the weight-zero column (1 d)".to_string()))
            }
            Err(Error::DuplicateOverline { value }) => Ok(Some(format!(
                "decodes to a repeated overlined part {value}"
            ))),
            Err(e) => Err(e),
        },
    }
}

pub fn check_family_modular(
    mu: &DModularOverpartition,
    family: FamilyId,
    params: Params,
) -> Result<bool, Error> {
    Ok(explain_family_modular(mu, family, params)?.is_none())
}
