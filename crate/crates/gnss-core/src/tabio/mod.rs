//! Reading, writing, diffing, and bundled tables.
//!
//! Both formats share one coordinate convention for parse errors: the header
//! (or, for the structured format, the parameter list) is row 1, data rows
//! follow in universe order, the object-id column is column 1, and parameter
//! columns start at column 2. Blank lines in the CSV shape are insignificant
//! and do not shift coordinates.

pub mod csv;
pub mod diff;
pub mod fixtures;
pub mod structured;

use crate::error::ParseError;
use crate::soft_set::GnSoftSet;
use crate::triple::ConstraintMode;

/// Which textual shape a table uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Structured,
}

impl TableFormat {
    /// The format a file name implies: `.json` means structured, anything
    /// else the CSV shape.
    pub fn detect(path: &str) -> TableFormat {
        if path.ends_with(".json") {
            TableFormat::Structured
        } else {
            TableFormat::Csv
        }
    }
}

/// Parses `text` in the given format, checking every cell under `mode`.
pub fn parse_str(text: &str, format: TableFormat, mode: ConstraintMode) -> Result<GnSoftSet, ParseError> {
    match format {
        TableFormat::Csv => csv::parse(text, mode),
        TableFormat::Structured => structured::parse(text, mode),
    }
}

/// Writes `set` in the given format's canonical form. Serializing, parsing,
/// and serializing again always reproduces the same bytes.
pub fn serialize(set: &GnSoftSet, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => csv::serialize(set),
        TableFormat::Structured => structured::serialize(set),
    }
}

/// A parsed table together with the name it is known by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDocument {
    pub name: String,
    pub set: GnSoftSet,
}
