//! Membership triples and the admissibility checks applied to them.

use std::fmt;

use crate::degree::{write_scaled, Degree};

/// Which admissibility condition a triple must satisfy.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ConstraintMode {
    /// `min(T, I, F) <= 0.5`, the default.
    #[default]
    GnsMin,
    /// `T + I + F <= 0.5`, taken literally.
    GnsSumLiteral,
    /// No condition beyond each component lying in `[0, 1]`.
    NeutrosophicOnly,
}

/// A truth / indeterminacy / falsity triple with exact components.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple {
    pub t: Degree,
    pub i: Degree,
    pub f: Degree,
}

/// A triple together with the admissibility condition it failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstraintViolation {
    pub triple: Triple,
    pub mode: ConstraintMode,
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            ConstraintMode::GnsMin => {
                write!(f, "min(T, I, F) = {} exceeds 0.5 for {}", self.triple.min_component(), self.triple)
            }
            ConstraintMode::GnsSumLiteral => {
                let Triple { t, i, f: fa } = self.triple;
                write!(f, "T + I + F = ")?;
                write_scaled(f, u32::from(t.scaled()) + u32::from(i.scaled()) + u32::from(fa.scaled()))?;
                write!(f, " exceeds 0.5 for {}", self.triple)
            }
            ConstraintMode::NeutrosophicOnly => {
                write!(f, "components outside [0, 1] in {}", self.triple)
            }
        }
    }
}

impl std::error::Error for ConstraintViolation {}

impl Triple {
    pub const ZERO: Triple = Triple {
        t: Degree::ZERO,
        i: Degree::ZERO,
        f: Degree::ZERO,
    };

    /// Assembles a triple without an admissibility check; the component type
    /// already guarantees each degree lies in `[0, 1]`.
    #[inline]
    pub const fn new(t: Degree, i: Degree, f: Degree) -> Triple {
        Triple { t, i, f }
    }

    /// Assembles a triple and checks it under `mode`.
    pub fn checked(t: Degree, i: Degree, f: Degree, mode: ConstraintMode) -> Result<Triple, ConstraintViolation> {
        let triple = Triple { t, i, f };
        match triple.violation(mode) {
            None => Ok(triple),
            Some(violation) => Err(violation),
        }
    }

    /// Reports how this triple violates `mode`, if it does.
    #[inline]
    pub fn violation(self, mode: ConstraintMode) -> Option<ConstraintViolation> {
        let admissible = match mode {
            ConstraintMode::GnsMin => self.min_component() <= Degree::HALF,
            ConstraintMode::GnsSumLiteral => {
                let sum = u32::from(self.t.scaled()) + u32::from(self.i.scaled()) + u32::from(self.f.scaled());
                sum <= u32::from(Degree::HALF.scaled())
            }
            ConstraintMode::NeutrosophicOnly => true,
        };
        if admissible {
            None
        } else {
            Some(ConstraintViolation { triple: self, mode })
        }
    }

    /// The smallest of the three components.
    #[inline]
    pub fn min_component(self) -> Degree {
        self.t.min(self.i).min(self.f)
    }

    /// Componentwise `(max T, min I, min F)`.
    #[inline]
    pub fn union(self, other: Triple) -> Triple {
        Triple {
            t: self.t.max(other.t),
            i: self.i.min(other.i),
            f: self.f.min(other.f),
        }
    }

    /// Componentwise `(min T, min I, max F)`.
    #[inline]
    pub fn intersection(self, other: Triple) -> Triple {
        Triple {
            t: self.t.min(other.t),
            i: self.i.min(other.i),
            f: self.f.max(other.f),
        }
    }

    /// Swaps truth and falsity, keeping indeterminacy.
    #[inline]
    pub fn complement(self) -> Triple {
        Triple {
            t: self.f,
            i: self.i,
            f: self.t,
        }
    }

    /// Containment: truth no larger, indeterminacy and falsity no smaller.
    #[inline]
    pub fn is_contained_in(self, other: Triple) -> bool {
        self.t <= other.t && self.i >= other.i && self.f >= other.f
    }
}

impl PartialOrd for Triple {
    /// The containment order; incomparable pairs yield `None`.
    fn partial_cmp(&self, other: &Triple) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering;
        match (self.is_contained_in(*other), other.is_contained_in(*self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
