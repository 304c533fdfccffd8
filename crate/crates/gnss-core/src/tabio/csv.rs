//! The CSV table shape.
//!
//! The header row is `U` followed by one parameter key per column; each data
//! row is an object id followed by one `(T, I, F)` cell per parameter. Cells
//! contain commas, so the canonical form always double-quotes them:
//!
//! ```text
//! U,bright,cheap
//! b1,"(0.5, 0.6, 0.3)","(0.6, 0.3, 0.5)"
//! ```
//!
//! The parser also accepts unquoted spacing variants and blank lines; the
//! serializer emits exactly the canonical form above.

use crate::degree::{Degree, DegreeParseError};
use crate::error::ParseError;
use crate::param::ParamKey;
use crate::soft_set::GnSoftSet;
use crate::triple::{ConstraintMode, Triple};
use crate::universe::{ObjectId, Universe};

fn split_line(line: &str, row: usize) -> Result<Vec<String>, ParseError> {
    let mut fields = Vec::new();
    let mut rest = line;
    loop {
        rest = rest.trim_start_matches(' ');
        if let Some(mut quoted) = rest.strip_prefix('"') {
            let mut field = String::new();
            loop {
                let Some(end) = quoted.find('"') else {
                    return Err(ParseError::MalformedCell {
                        row,
                        col: fields.len() + 1,
                        reason: "unterminated quoted field".into(),
                    });
                };
                field.push_str(&quoted[..end]);
                quoted = &quoted[end + 1..];
                if let Some(after) = quoted.strip_prefix('"') {
                    field.push('"');
                    quoted = after;
                } else {
                    break;
                }
            }
            fields.push(field);
            rest = quoted.trim_start_matches(' ');
            match rest.strip_prefix(',') {
                Some(after) => rest = after,
                None if rest.is_empty() => return Ok(fields),
                None => {
                    return Err(ParseError::MalformedCell {
                        row,
                        col: fields.len(),
                        reason: "unexpected text after a closing quote".into(),
                    })
                }
            }
        } else {
            match rest.split_once(',') {
                Some((field, after)) => {
                    fields.push(field.trim().to_owned());
                    rest = after;
                }
                None => {
                    fields.push(rest.trim().to_owned());
                    return Ok(fields);
                }
            }
        }
    }
}

fn parse_component(text: &str, row: usize, col: usize) -> Result<Degree, ParseError> {
    let text = text.trim();
    text.parse().map_err(|e| match e {
        DegreeParseError::Malformed => ParseError::MalformedCell {
            row,
            col,
            reason: format!("component `{text}` is not a decimal with at most four fractional digits"),
        },
        DegreeParseError::OutOfRange => ParseError::DegreeOutOfRange {
            row,
            col,
            text: text.to_owned(),
        },
    })
}

pub(crate) fn parse_cell(text: &str, row: usize, col: usize, mode: ConstraintMode) -> Result<Triple, ParseError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| ParseError::MalformedCell {
            row,
            col,
            reason: format!("cell `{trimmed}` is not of the form `(T, I, F)`"),
        })?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 3 {
        return Err(ParseError::MalformedCell {
            row,
            col,
            reason: format!("cell `{trimmed}` has {} components, expected 3", parts.len()),
        });
    }
    let t = parse_component(parts[0], row, col)?;
    let i = parse_component(parts[1], row, col)?;
    let f = parse_component(parts[2], row, col)?;
    Triple::checked(t, i, f, mode).map_err(|violation| ParseError::Constraint { row, col, violation })
}

/// Parses a whole CSV table, checking every cell under `mode`.
pub fn parse(text: &str, mode: ConstraintMode) -> Result<GnSoftSet, ParseError> {
    let mut lines = text
        .lines()
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .filter(|l| !l.trim().is_empty());

    let header = lines.next().ok_or(ParseError::EmptyTable)?;
    let fields = split_line(header, 1)?;
    if fields[0] != "U" && fields[0] != "u" {
        return Err(ParseError::MalformedHeader {
            col: 1,
            reason: format!("first column must be `U`, found `{}`", fields[0]),
        });
    }
    if fields.len() == 1 {
        return Err(ParseError::MalformedHeader {
            col: 1,
            reason: "the header names no parameters".into(),
        });
    }
    let mut params: Vec<ParamKey> = Vec::with_capacity(fields.len() - 1);
    for (n, field) in fields[1..].iter().enumerate() {
        let key: ParamKey = field.parse().map_err(|e: crate::error::GnssError| ParseError::MalformedHeader {
            col: n + 2,
            reason: e.to_string(),
        })?;
        if params.contains(&key) {
            return Err(ParseError::DuplicateParameter {
                col: n + 2,
                key: key.canonical(),
            });
        }
        params.push(key);
    }

    let mut ids: Vec<ObjectId> = Vec::new();
    let mut columns: Vec<Vec<Triple>> = vec![Vec::new(); params.len()];
    for (n, line) in lines.enumerate() {
        let row = n + 2;
        let fields = split_line(line, row)?;
        if fields.len() != params.len() + 1 {
            return Err(ParseError::RaggedRow {
                row,
                expected: params.len() + 1,
                found: fields.len(),
            });
        }
        let id = ObjectId::new(fields[0].as_str()).map_err(|e| ParseError::MalformedCell {
            row,
            col: 1,
            reason: e.to_string(),
        })?;
        if ids.contains(&id) {
            return Err(ParseError::DuplicateObjectId {
                row,
                id: id.as_str().to_owned(),
            });
        }
        ids.push(id);
        for (j, cell) in fields[1..].iter().enumerate() {
            columns[j].push(parse_cell(cell, row, j + 2, mode)?);
        }
    }
    if ids.is_empty() {
        return Err(ParseError::EmptyTable);
    }

    let universe = Universe::new(ids).expect("duplicates were rejected row by row");
    let columns = params.into_iter().zip(columns).collect();
    Ok(GnSoftSet::new(universe, columns).expect("shape and uniqueness were checked during parsing"))
}

/// Writes the canonical CSV form: quoted cells, one space after each comma
/// inside a cell, minimal decimal digits, and a trailing newline.
pub fn serialize(set: &GnSoftSet) -> String {
    let mut out = String::from("U");
    for param in set.params() {
        out.push(',');
        out.push_str(&param.to_string());
    }
    out.push('\n');
    for (n, id) in set.universe().iter().enumerate() {
        out.push_str(id.as_str());
        for table in set.tables() {
            out.push_str(",\"");
            out.push_str(&table.values()[n].to_string());
            out.push('"');
        }
        out.push('\n');
    }
    out
}
