//! Error types. Every message starts with the variant name so callers and
//! command-line users can match on the class without inspecting the type.

use thiserror::Error;

use crate::triple::ConstraintViolation;

/// Domain failures: operations applied to incompatible or malformed operands.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GnssError {
    #[error("UniverseMismatch: the operands are defined over different universes")]
    UniverseMismatch,

    #[error("EmptyUniverse: the operation needs at least one object")]
    EmptyUniverse,

    #[error("EmptyParameterSet: the operation needs at least one parameter")]
    EmptyParameterSet,

    #[error("EmptyParameterOverlap: the operands share no parameters, so their intersection is undefined")]
    EmptyParameterOverlap,

    #[error("UnknownParameter: `{key}` does not occur in the set")]
    UnknownParameter { key: String },

    #[error("DuplicateParameter: `{key}` occurs more than once")]
    DuplicateParameter { key: String },

    #[error("DuplicateObjectId: `{id}` occurs more than once")]
    DuplicateObjectId { id: String },

    #[error("InvalidObjectId: `{text}`: {reason}")]
    InvalidObjectId { text: String, reason: &'static str },

    #[error("InvalidParameterName: `{text}`: {reason}")]
    InvalidParameterName { text: String, reason: &'static str },

    #[error("InvalidParameterKey: `{text}`: {reason}")]
    InvalidParameterKey { text: String, reason: String },

    #[error("WrongColumnLength: column `{param}` has {found} values but the universe has {expected} objects")]
    WrongColumnLength {
        param: String,
        expected: usize,
        found: usize,
    },

    #[error("ShapeMismatch: {detail}")]
    ShapeMismatch { detail: String },

    #[error("UnknownFixture: `{name}` is not a built-in fixture")]
    UnknownFixture { name: String },
}

/// Failures while reading a table from text. Rows and columns are 1-based
/// logical coordinates: the header is row 1, the object-id column is column 1,
/// and the first parameter column is column 2, in both supported formats.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("EmptyTable: the input contains no data rows")]
    EmptyTable,

    #[error("MalformedHeader: column {col}: {reason}")]
    MalformedHeader { col: usize, reason: String },

    #[error("RaggedRow: row {row} has {found} fields, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("MalformedCell: row {row}, column {col}: {reason}")]
    MalformedCell {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("DegreeOutOfRange: row {row}, column {col}: `{text}` lies outside [0, 1]")]
    DegreeOutOfRange {
        row: usize,
        col: usize,
        text: String,
    },

    #[error("DuplicateObjectId: row {row}: `{id}` already appeared")]
    DuplicateObjectId { row: usize, id: String },

    #[error("DuplicateParameter: column {col}: `{key}` already appeared")]
    DuplicateParameter { col: usize, key: String },

    #[error("ConstraintViolation: row {row}, column {col}: {violation}")]
    Constraint {
        row: usize,
        col: usize,
        violation: ConstraintViolation,
    },

    #[error("MalformedDocument: {reason}")]
    MalformedDocument { reason: String },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::Degree;
    use crate::triple::{ConstraintMode, Triple};

    #[test]
    fn messages_start_with_the_variant_name() {
        assert!(GnssError::EmptyParameterOverlap.to_string().starts_with("EmptyParameterOverlap:"));
        assert!(GnssError::UniverseMismatch.to_string().starts_with("UniverseMismatch:"));
        let err = ParseError::DegreeOutOfRange {
            row: 2,
            col: 2,
            text: "1.2".into(),
        };
        assert_eq!(err.to_string(), "DegreeOutOfRange: row 2, column 2: `1.2` lies outside [0, 1]");
    }

    #[test]
    fn constraint_errors_carry_the_violation() {
        let triple = Triple::new(
            Degree::from_scaled(6000).unwrap(),
            Degree::from_scaled(3000).unwrap(),
            Degree::from_scaled(4000).unwrap(),
        );
        let violation = triple.violation(ConstraintMode::GnsSumLiteral).unwrap();
        let err = ParseError::Constraint {
            row: 2,
            col: 2,
            violation,
        };
        assert_eq!(
            err.to_string(),
            "ConstraintViolation: row 2, column 2: T + I + F = 1.3 exceeds 0.5 for (0.6, 0.3, 0.4)"
        );
    }
}
