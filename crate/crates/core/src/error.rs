use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vector or matrix had the wrong length for the ambient rank.
    DimensionMismatch { expected: usize, found: usize },
    /// Two objects live over tori of different ranks.
    AmbientRankMismatch { left: usize, right: usize },
    /// The requested sheaf has infinite rank (affine weight zero).
    InfiniteRank,
    /// A point was supplied that does not lie on the subgroup scheme.
    PointNotInSubgroup,
    /// A cone was supplied that is not a face of the fan.
    NotAFace,
    /// The fan failed validation; the report lists the violations.
    InvalidFan(String),
    /// A maximal cone refers to a ray index that does not exist.
    BadRayIndex { cone: usize, index: usize },
    /// A ray is the zero vector.
    ZeroRay { ray: usize },
    /// A ray has the wrong number of coordinates.
    RayLength { ray: usize, expected: usize, found: usize },
    /// A maximal cone lists the same ray twice.
    DuplicateIndexInCone { cone: usize },
    /// The fan lists no maximal cones at all.
    NoMaxCones,
    /// The operation needs a complete fan (wall check + explicit flag).
    NotComplete,
    /// The nerve would exceed the configured maximal-cone cap.
    NerveCapExceeded { cones: usize, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::AmbientRankMismatch { left, right } => {
                write!(f, "ambient rank mismatch: {left} vs {right}")
            }
            Error::InfiniteRank => {
                write!(f, "affine factor of weight zero has infinite rank")
            }
            Error::PointNotInSubgroup => write!(f, "point does not lie on the subgroup scheme"),
            Error::NotAFace => write!(f, "cone is not a face of the fan"),
            Error::InvalidFan(why) => write!(f, "invalid fan: {why}"),
            Error::BadRayIndex { cone, index } => {
                write!(f, "maximal cone {cone} refers to missing ray {index}")
            }
            Error::ZeroRay { ray } => write!(f, "ray {ray} is the zero vector"),
            Error::RayLength { ray, expected, found } => {
                write!(f, "ray {ray} has {found} coordinates, expected {expected}")
            }
            Error::DuplicateIndexInCone { cone } => {
                write!(f, "maximal cone {cone} lists a ray twice")
            }
            Error::NoMaxCones => write!(f, "fan lists no maximal cones"),
            Error::NotComplete => {
                write!(f, "operation requires a complete fan (wall check and assume_complete)")
            }
            Error::NerveCapExceeded { cones, cap } => {
                write!(f, "fan has {cones} maximal cones, exceeding the nerve cap {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}
