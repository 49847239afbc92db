use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the library layer.
///
/// Variants split into usage errors (bad arguments) and capacity errors
/// (instance too large for the requested routine); see [`Error::is_capacity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Dimension outside `1..=3`.
    InvalidDimension(usize),
    /// Two operands live in different dimensions.
    DimensionMismatch { left: usize, right: usize },
    /// A box extent coordinate was below 1.
    NonPositiveExtent,
    /// `k` must be at least 2.
    InvalidK(u32),
    /// A point set and an instance refer to different boxes.
    BoxMismatch,
    /// A point lies outside the box it was used with.
    OutOfBox,
    /// The target must be coordinate-wise at most the box extent.
    TargetOutsideBox,
    /// An input set was required to be free but contains a solution.
    NotFree,
    /// A generated construction failed its size or freeness self-check.
    ConstructionCheck(&'static str),
    /// The triangle has zero area.
    DegenerateTriangle,
    /// Exact rational arithmetic left the 64-bit range.
    Overflow,
    /// The routine refuses an instance this large.
    Capacity { size: u64, limit: u64 },
    /// The solver does not handle this kind of instance.
    Unsupported(&'static str),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDimension(d) => write!(f, "dimension {d} is not in 1..=3"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NonPositiveExtent => f.write_str("box extents must be positive"),
            Error::InvalidK(k) => write!(f, "k must be at least 2, got {k}"),
            Error::BoxMismatch => f.write_str("point set and instance use different boxes"),
            Error::OutOfBox => f.write_str("point lies outside the box"),
            Error::TargetOutsideBox => f.write_str("target is not contained in the box"),
            Error::NotFree => f.write_str("set is not free for the instance"),
            Error::ConstructionCheck(name) => {
                write!(f, "construction `{name}` failed its self-check")
            }
            Error::DegenerateTriangle => f.write_str("triangle is degenerate"),
            Error::Overflow => f.write_str("rational arithmetic overflowed 64 bits"),
            Error::Capacity { size, limit } => {
                write!(f, "instance size {size} exceeds the limit of {limit}")
            }
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
        }
    }
}

impl core::error::Error for Error {}
