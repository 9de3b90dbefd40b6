use std::fmt;

/// Everything that can go wrong in this crate.
///
/// Series arithmetic is strict about truncation depth: combining two series
/// of different orders silently loses coefficients, so it is rejected rather
/// than coerced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Binary series operation on operands with different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// Bivariate tables with different dimensions cannot be compared.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Series inversion requires constant term +1 or -1; anything else does
    /// not invert exactly over the integers.
    NonUnitConstant,
    /// An infinite product argument with exponent 0 contributes the factor
    /// (1 - a) infinitely often, so the product does not converge termwise.
    DivergentProduct,
    /// Parameters outside the admissible range (d >= 3 and 1 <= r < d/2
    /// where both are required; the q-series specializations only need
    /// 1 <= r < d/2).
    InvalidParameters { d: u64, r: u64 },
    /// A label string other than "d", "r", "d-r", "dbar".
    UnknownLabel(String),
    /// A family name other than b, e, c, bbar, ebar, cbar.
    UnknownFamily(String),
    /// An identity name outside the six known ones.
    UnknownIdentity(String),
    /// Parts and column lengths must be positive.
    ZeroPart,
    /// Parts not in non-increasing canonical order.
    UnsortedParts,
    /// An overpartition may overline at most one copy of each value.
    DuplicateOverline { value: u64 },
    /// The value's congruence class has no d-modular column encoding.
    NotRepresentable { value: u64, overlined: bool },
    /// The weight-zero column (length 1, label d) decodes to no part.
    DegeneratePart,
    /// The classical families contain plain partitions only.
    OverlinedClassical { family: crate::family::FamilyId },
    /// An input that must belong to a family does not; the reason names
    /// the first violated condition.
    NotInFamily {
        family: crate::family::FamilyId,
        reason: String,
    },
    /// A triple violates its shape invariants.
    InvalidTriple { reason: String },
    /// An inverse procedure found no consistent preimage. On inputs
    /// satisfying their preconditions this indicates a bug.
    Inconsistent { reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            Error::ShapeMismatch { left, right } => write!(
                f,
                "table shape mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NonUnitConstant => {
                write!(f, "cannot invert series: constant term is not +1 or -1")
            }
            Error::DivergentProduct => {
                write!(f, "infinite product argument must have exponent >= 1")
            }
            Error::InvalidParameters { d, r } => {
                write!(
                    f,
                    "invalid parameters d={d}, r={r}: need d >= 3 and 1 <= r < d/2"
                )
            }
            Error::UnknownLabel(s) => {
                write!(f, "unknown label {s:?}: expected d, r, d-r, or dbar")
            }
            Error::UnknownFamily(s) => {
                write!(
                    f,
                    "unknown family {s:?}: expected b, e, c, bbar, ebar, or cbar"
                )
            }
            Error::UnknownIdentity(s) => {
                write!(f, "unknown identity {s:?}")
            }
            Error::ZeroPart => write!(f, "parts must be positive"),
            Error::UnsortedParts => write!(f, "parts must be in non-increasing order"),
            Error::DuplicateOverline { value } => {
                write!(f, "value {value} is overlined more than once")
            }
            Error::NotRepresentable { value, overlined } => {
                let kind = if *overlined {
                    "overlined"
                } else {
                    "non-overlined"
                };
                write!(f, "{kind} part {value} has no d-modular encoding")
            }
            Error::DegeneratePart => {
                write!(f, "column of length 1 with label d encodes no part")
            }
            Error::OverlinedClassical { family } => {
                write!(f, "family {family} does not admit overlined parts")
            }
            Error::NotInFamily { family, reason } => {
                write!(f, "not in family {family}: {reason}")
            }
            Error::InvalidTriple { reason } => write!(f, "invalid triple: {reason}"),
            Error::Inconsistent { reason } => {
                write!(f, "no consistent preimage: {reason}")
            }
        }
    }
}

impl std::error::Error for Error {}
