//! Fixed-point membership degrees on a 1/10000 scale.

use std::fmt;
use std::str::FromStr;

/// Number of steps between 0 and 1; every degree is an integer multiple of `1/SCALE`.
pub const SCALE: u16 = 10_000;

/// A membership degree in `[0, 1]`, stored as an exact multiple of 1/10000.
///
/// All comparisons and arithmetic are integer operations on the scaled value;
/// no floating point is involved anywhere, so equality is exact and total
/// ordering is well defined.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(u16);

impl Degree {
    pub const ZERO: Degree = Degree(0);
    pub const HALF: Degree = Degree(SCALE / 2);
    pub const ONE: Degree = Degree(SCALE);

    /// Builds a degree from a scaled value; `None` above `SCALE`.
    #[inline]
    pub const fn from_scaled(value: u16) -> Option<Degree> {
        if value <= SCALE {
            Some(Degree(value))
        } else {
            None
        }
    }

    /// The underlying multiple of 1/10000.
    #[inline]
    pub const fn scaled(self) -> u16 {
        self.0
    }
}

/// Why a decimal literal failed to become a [`Degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeParseError {
    /// Not of the form `digits[.digits]` with one to four fractional digits.
    Malformed,
    /// Syntactically a decimal but outside `[0, 1]`.
    OutOfRange,
}

impl fmt::Display for DegreeParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeParseError::Malformed => {
                write!(f, "expected a decimal with at most four fractional digits")
            }
            DegreeParseError::OutOfRange => write!(f, "value lies outside [0, 1]"),
        }
    }
}

impl std::error::Error for DegreeParseError {}

impl FromStr for Degree {
    type Err = DegreeParseError;

    /// Parses `digits[.digits]`, at most four fractional digits, value in `[0, 1]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, fr)) => (i, fr),
            None => (s, ""),
        };
        let digits_only = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
        if !digits_only(int_part) {
            return Err(DegreeParseError::Malformed);
        }
        if s.contains('.') && (!digits_only(frac_part) || frac_part.len() > 4) {
            return Err(DegreeParseError::Malformed);
        }
        let int: u64 = int_part.parse().map_err(|_| DegreeParseError::OutOfRange)?;
        let mut frac: u64 = 0;
        for (pos, b) in frac_part.bytes().enumerate() {
            frac += u64::from(b - b'0') * 10u64.pow(3 - pos as u32);
        }
        let value = int
            .checked_mul(u64::from(SCALE))
            .and_then(|v| v.checked_add(frac))
            .ok_or(DegreeParseError::OutOfRange)?;
        if value > u64::from(SCALE) {
            return Err(DegreeParseError::OutOfRange);
        }
        Ok(Degree(value as u16))
    }
}

/// Writes a scaled value (possibly above `SCALE`, e.g. a component sum) with
/// minimal decimals: `0`, `1`, `0.5`, `1.3`, `0.0025`.
pub(crate) fn write_scaled(f: &mut fmt::Formatter<'_>, value: u32) -> fmt::Result {
    let int = value / u32::from(SCALE);
    let frac = value % u32::from(SCALE);
    if frac == 0 {
        write!(f, "{int}")
    } else {
        let digits = format!("{frac:04}");
        write!(f, "{int}.{}", digits.trim_end_matches('0'))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_scaled(f, u32::from(self.0))
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: u16) -> Degree {
        Degree::from_scaled(v).unwrap()
    }

    #[test]
    fn parses_minimal_and_padded_forms() {
        for (text, scaled) in [
            ("0", 0),
            ("0.0", 0),
            ("0.0000", 0),
            ("1", 10_000),
            ("1.0", 10_000),
            ("0.5", 5_000),
            ("0.25", 2_500),
            ("0.1234", 1_234),
            ("0.0025", 25),
            ("00.5", 5_000),
        ] {
            assert_eq!(text.parse::<Degree>(), Ok(d(scaled)), "{text}");
        }
    }

    #[test]
    fn rejects_malformed_literals() {
        for text in ["", ".", ".5", "0.", "0..5", "0.12345", "-0.1", "0,5", "x", "1e-1", " 0.5"] {
            assert_eq!(text.parse::<Degree>(), Err(DegreeParseError::Malformed), "{text:?}");
        }
    }

    #[test]
    fn rejects_out_of_range_literals() {
        for text in ["1.0001", "1.2", "2", "10000", "99999999999999999999"] {
            assert_eq!(text.parse::<Degree>(), Err(DegreeParseError::OutOfRange), "{text:?}");
        }
    }

    #[test]
    fn display_is_minimal() {
        for (scaled, text) in [
            (0, "0"),
            (10_000, "1"),
            (5_000, "0.5"),
            (2_500, "0.25"),
            (1_234, "0.1234"),
            (25, "0.0025"),
            (9_999, "0.9999"),
        ] {
            assert_eq!(d(scaled).to_string(), text);
        }
    }

    #[test]
    fn display_then_parse_is_identity_on_every_degree() {
        for v in 0..=SCALE {
            let deg = d(v);
            assert_eq!(deg.to_string().parse::<Degree>(), Ok(deg));
        }
    }

    #[test]
    fn from_scaled_rejects_above_one() {
        assert_eq!(Degree::from_scaled(10_001), None);
        assert_eq!(Degree::from_scaled(10_000), Some(Degree::ONE));
    }

    #[test]
    fn ordering_follows_scaled_value() {
        assert!(d(0) < d(1));
        assert!(d(4_999) < Degree::HALF);
        assert!(Degree::HALF < d(5_001));
        assert_eq!(Degree::ZERO.max(Degree::ONE), Degree::ONE);
    }
}
