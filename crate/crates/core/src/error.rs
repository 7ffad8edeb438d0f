use core::fmt;

/// Errors raised by geometric operations.
///
/// Failures that are *verdicts* (a hypothesis that does not hold, a defect
/// that exceeds a tolerance) are reported through result types, not through
/// this enum; `GeomError` is reserved for inputs or states on which an
/// operation is not defined at all.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum GeomError {
    /// Malformed input: zero direction, empty set, out-of-range parameter.
    InvalidInput(&'static str),
    /// Direction sample does not span the space; least squares is singular.
    DegenerateSamples,
    /// The queried apex lies inside (or on) the body.
    ApexInsideBody,
    /// The configuration violates an assumption the algorithm relies on
    /// (lost sign bracket, section missing the surface, ...).
    GeometryInconsistent(&'static str),
    /// Cone pair is not translation-congruent within the given tolerance;
    /// carries the measured distance.
    NotCongruent { distance: f64 },
    /// Chord endpoints coincide; its direction is undefined.
    DegenerateChord,
    /// Fitted map has ratio 1: a translation, which has no homothety center.
    TranslationNotHomothety,
    /// Point set is too small or too flat to determine a homothety.
    DegenerateConfiguration,
    /// Reflected point coincides with the radial center of the surface.
    DegenerateReflection,
    /// Isoptic angle outside (0, pi).
    InvalidAngle,
    /// Operation is only defined in a specific dimension.
    UnsupportedDimension(usize),
    /// Support series fails the convexity test.
    NotConvex,
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::InvalidInput(what) => write!(f, "invalid input: {what}"),
            GeomError::DegenerateSamples => write!(f, "degenerate samples: directions do not span the space"),
            GeomError::ApexInsideBody => write!(f, "apex lies inside the body"),
            GeomError::GeometryInconsistent(what) => write!(f, "geometry inconsistent: {what}"),
            GeomError::NotCongruent { distance } => {
                write!(f, "cones are not translation-congruent (distance {distance:e})")
            }
            GeomError::DegenerateChord => write!(f, "degenerate chord: endpoints coincide"),
            GeomError::TranslationNotHomothety => {
                write!(f, "ratio 1 is a translation, not a homothety")
            }
            GeomError::DegenerateConfiguration => write!(f, "degenerate point configuration"),
            GeomError::DegenerateReflection => write!(f, "reflected point coincides with the radial center"),
            GeomError::InvalidAngle => write!(f, "angle must lie strictly between 0 and pi"),
            GeomError::UnsupportedDimension(n) => write!(f, "operation not supported in dimension {n}"),
            GeomError::NotConvex => write!(f, "support series is not convex"),
        }
    }
}

pub type Result<T> = core::result::Result<T, GeomError>;
