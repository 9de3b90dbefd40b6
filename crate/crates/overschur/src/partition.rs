//! Overpartitions and their d-modular diagram form.
//!
//! An overpartition is a non-increasing sequence of positive parts in which
//! the first occurrence of a value may be overlined. For a modulus pair
//! (d, r) the parts relevant here fall into four congruence classes:
//! overlined parts congruent to r, to d - r, or to 0 mod d, and
//! non-overlined multiples of d. Such a part is stored compactly as a
//! column of its d-modular diagram: a length together with a class label.
//!
//! Weights of the encoded part by label, at length n:
//!
//!   d:    (n - 1) d        (non-overlined multiple of d)
//!   r:    (n - 1) d + r    (overlined, congruent to r)
//!   d-r:  n d - r          (overlined, congruent to d - r)
//!   dbar: n d              (overlined multiple of d)
//!
//! Columns are ordered by length first; at equal length the weights above
//! induce the label order d < r < d-r < dbar. The length-1 column with
//! label d has weight zero. It is a useful padding device inside the
//! insertion procedure but never appears in a finished object.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Modulus pair with d >= 3 and 1 <= r < d/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    d: u64,
    r: u64,
}

impl Params {
    pub fn new(d: u64, r: u64) -> Result<Self, Error> {
        if d >= 3 && r >= 1 && 2 * r < d {
            Ok(Params { d, r })
        } else {
            Err(Error::InvalidParameters { d, r })
        }
    }

    pub fn d(self) -> u64 {
        self.d
    }

    pub fn r(self) -> u64 {
        self.r
    }
}

/// Congruence class of an encoded part. Variants are declared in
/// increasing order of part weight at fixed length, so the derived `Ord`
/// is the label order used when comparing columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    #[serde(rename = "d")]
    D,
    #[serde(rename = "r")]
    R,
    #[serde(rename = "d-r")]
    DmR,
    #[serde(rename = "dbar")]
    Dbar,
}

pub const LABELS: [Label; 4] = [Label::D, Label::R, Label::DmR, Label::Dbar];

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::D => "d",
            Label::R => "r",
            Label::DmR => "d-r",
            Label::Dbar => "dbar",
        };
        f.write_str(s)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "d" => Ok(Label::D),
            "r" => Ok(Label::R),
            "d-r" => Ok(Label::DmR),
            "dbar" => Ok(Label::Dbar),
            _ => Err(Error::UnknownLabel(s.to_string())),
        }
    }
}

/// One column of a d-modular diagram. The derived `Ord` compares length
/// first, then label, which is exactly the part order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DModularPart {
    pub length: u64,
    pub label: Label,
}

impl DModularPart {
    pub fn new(length: u64, label: Label) -> Result<Self, Error> {
        if length == 0 {
            return Err(Error::ZeroPart);
        }
        Ok(DModularPart { length, label })
    }

    /// Value of the part this column encodes.
    pub fn weight(self, params: Params) -> u64 {
        let (d, r) = (params.d, params.r);
        match self.label {
            Label::D => (self.length - 1) * d,
            Label::R => (self.length - 1) * d + r,
            Label::DmR => self.length * d - r,
            Label::Dbar => self.length * d,
        }
    }

    /// Whether the encoded part carries an overline.
    pub fn overlined(self) -> bool {
        self.label != Label::D
    }
}

impl fmt::Display for DModularPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.length, self.label)
    }
}

/// An overpartition in d-modular form: columns in non-increasing part
/// order, lengths all positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<DModularPart>", into = "Vec<DModularPart>")]
pub struct DModularOverpartition {
    parts: Vec<DModularPart>,
}

impl DModularOverpartition {
    pub fn new(parts: Vec<DModularPart>) -> Result<Self, Error> {
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::UnsortedParts);
            }
        }
        if parts.iter().any(|p| p.length == 0) {
            return Err(Error::ZeroPart);
        }
        Ok(DModularOverpartition { parts })
    }

    pub fn empty() -> Self {
        DModularOverpartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[DModularPart] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self, params: Params) -> u64 {
        self.parts.iter().map(|p| p.weight(params)).sum()
    }
}

impl TryFrom<Vec<DModularPart>> for DModularOverpartition {
    type Error = Error;

    fn try_from(parts: Vec<DModularPart>) -> Result<Self, Error> {
        DModularOverpartition::new(parts)
    }
}

impl From<DModularOverpartition> for Vec<DModularPart> {
    fn from(mu: DModularOverpartition) -> Self {
        mu.parts
    }
}

impl fmt::Display for DModularOverpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("(empty)");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// One part of an overpartition in value form. The derived `Ord` compares
/// value first; at equal value the overlined copy sorts above the plain
/// ones, matching the convention that only the first occurrence of a value
/// may be overlined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Part {
    pub value: u64,
    pub overlined: bool,
}

impl Part {
    pub fn plain(value: u64) -> Self {
        Part {
            value,
            overlined: false,
        }
    }

    pub fn overlined(value: u64) -> Self {
        Part {
            value,
            overlined: true,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overlined {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// A non-increasing sequence of positive parts, at most one overline per
/// value, overlined copy first among equals. The derived `Ord` is
/// lexicographic on the part list, the order enumeration output uses.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Part>", into = "Vec<Part>")]
pub struct Overpartition {
    parts: Vec<Part>,
}

impl Overpartition {
    pub fn new(parts: Vec<Part>) -> Result<Self, Error> {
        if parts.iter().any(|p| p.value == 0) {
            return Err(Error::ZeroPart);
        }
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::UnsortedParts);
            }
            if pair[0] == pair[1] && pair[0].overlined {
                return Err(Error::DuplicateOverline {
                    value: pair[0].value,
                });
            }
        }
        Ok(Overpartition { parts })
    }

    /// Sorts into canonical order first, then validates.
    pub fn from_unsorted(mut parts: Vec<Part>) -> Result<Self, Error> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Overpartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.value).sum()
    }
}

impl TryFrom<Vec<Part>> for Overpartition {
    type Error = Error;

    fn try_from(parts: Vec<Part>) -> Result<Self, Error> {
        Overpartition::new(parts)
    }
}

impl From<Overpartition> for Vec<Part> {
    fn from(lambda: Overpartition) -> Self {
        lambda.parts
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("(empty)");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Encodes a single part value as a diagram column, if its congruence
/// class admits one.
pub fn encode_part(value: u64, overlined: bool, params: Params) -> Result<DModularPart, Error> {
    let (d, r) = (params.d, params.r);
    let residue = value % d;
    let (length, label) = if overlined && residue == r {
        ((value - r) / d + 1, Label::R)
    } else if overlined && residue == d - r {
        ((value + r) / d, Label::DmR)
    } else if overlined && residue == 0 {
        (value / d, Label::Dbar)
    } else if !overlined && residue == 0 {
        (value / d + 1, Label::D)
    } else {
        return Err(Error::NotRepresentable { value, overlined });
    };
    DModularPart::new(length, label)
}

/// Converts value form to d-modular form. Fails if any part's congruence
/// class has no column encoding.
pub fn to_dmodular(lambda: &Overpartition, params: Params) -> Result<DModularOverpartition, Error> {
    let mut cols: Vec<DModularPart> = lambda
        .parts()
        .iter()
        .map(|p| encode_part(p.value, p.overlined, params))
        .collect::<Result<_, _>>()?;
    // Equal values can encode to differently ordered columns (overlined d
    // sorts above plain d by value, but its column sorts below), so re-sort.
    cols.sort_unstable_by(|a, b| b.cmp(a));
    DModularOverpartition::new(cols)
}

/// Converts d-modular form back to value form. The weight-zero column
/// (length 1, label d) has no part to decode and is rejected.
pub fn from_dmodular(mu: &DModularOverpartition, params: Params) -> Result<Overpartition, Error> {
    let mut parts = Vec::with_capacity(mu.len());
    for col in mu.parts() {
        if col.length == 1 && col.label == Label::D {
            return Err(Error::DegeneratePart);
        }
        parts.push(Part {
            value: col.weight(params),
            overlined: col.overlined(),
        });
    }
    Overpartition::from_unsorted(parts)
}

/// Minimal difference between adjacent part values, indexed by the class
/// labels of the larger and the smaller part. The same entry also fixes
/// the difference's congruence class mod 2d.
pub fn matrix_a(params: Params, larger: Label, smaller: Label) -> u64 {
    let (d, r) = (params.d, params.r);
    use Label::*;
    match (larger, smaller) {
        (R, R) => d,
        (R, DmR) => 2 * r,
        (R, Dbar) => d + r,
        (R, D) => r,
        (DmR, R) => 2 * d - 2 * r,
        (DmR, DmR) => d,
        (DmR, Dbar) => 2 * d - r,
        (DmR, D) => d - r,
        (Dbar, R) => 2 * d - r,
        (Dbar, DmR) => d + r,
        (Dbar, Dbar) => 2 * d,
        (Dbar, D) => d,
        (D, R) => d - r,
        (D, DmR) => r,
        (D, Dbar) => d,
        (D, D) => 0,
    }
}

/// Minimal difference between adjacent column lengths. Only the smaller
/// part's label matters; the larger one is accepted for symmetry with
/// `matrix_a`. The entry's parity is also the required parity of the
/// length difference.
pub fn matrix_a_prime(_larger: Label, smaller: Label) -> u64 {
    match smaller {
        Label::D => 0,
        Label::R | Label::DmR => 1,
        Label::Dbar => 2,
    }
}
