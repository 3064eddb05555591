use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `make_zmod(0)` and friends.
    ZeroOrder,
    /// A table has the wrong length or an entry outside the carrier.
    MalformedTable(String),
    /// A construction would exceed a size cap.
    SizeCap {
        what: String,
        requested: u128,
        cap: u128,
    },
    /// Ideal enumeration requested past [`crate::IDEAL_ENUMERATION_CAP`].
    IdealCap { order: usize, cap: usize },
    /// An element set that was expected to be a two-sided ideal is not one.
    NotAnIdeal(String),
    /// Element index outside the ring.
    ElementOutOfRange { index: usize, order: usize },
    /// Map fails to preserve the ring operations or the identity.
    NotAHomomorphism(String),
    /// Localization denominators violate a hypothesis.
    BadDenominators(String),
    /// Search exhausted its budget without deciding.
    Budget { what: String, spent: u64 },
    /// Monoid-level failures: foreign element, non-finite monoid, bad grading.
    Monoid(String),
    /// Literal could not be parsed.
    Parse(String),
    /// A shape that should be closed under the construction's operations is not.
    ClosureFailure(String),
    /// A direct system whose maps do not compose.
    Chain(String),
    /// Catch-all for violated preconditions.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroOrder => write!(f, "ring order must be at least 1"),
            Error::MalformedTable(s) => write!(f, "malformed table: {s}"),
            Error::SizeCap { what, requested, cap } => {
                write!(f, "{what}: size {requested} exceeds cap {cap}")
            }
            Error::IdealCap { order, cap } => write!(
                f,
                "ideal enumeration is limited to order {cap} (got {order}); use the m-sequence radical instead"
            ),
            Error::NotAnIdeal(s) => write!(f, "not a two-sided ideal: {s}"),
            Error::ElementOutOfRange { index, order } => {
                write!(f, "element {index} outside ring of order {order}")
            }
            Error::NotAHomomorphism(s) => write!(f, "not a unital ring homomorphism: {s}"),
            Error::BadDenominators(s) => write!(f, "invalid denominator set: {s}"),
            Error::Budget { what, spent } => write!(f, "{what}: budget exhausted after {spent} steps"),
            Error::Monoid(s) => write!(f, "monoid: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::ClosureFailure(s) => write!(f, "construction not closed: {s}"),
            Error::Chain(s) => write!(f, "direct system: {s}"),
            Error::Invalid(s) => write!(f, "{s}"),
        }
    }
}

pub(crate) fn size_check(what: &str, requested: u128, cap: u128) -> Result<()> {
    if requested > cap {
        return Err(Error::SizeCap {
            what: what.into(),
            requested,
            cap,
        });
    }
    Ok(())
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_sat(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
