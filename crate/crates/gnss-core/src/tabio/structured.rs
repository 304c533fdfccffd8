//! The JSON-shaped table format.
//!
//! A document has three fields: `universe` (object ids in order),
//! `parameters` (objects with either `name` plus optional `negated`, or a
//! two-element `pair` of nested parameters, in column order), and `cells`
//! (parameter key, in its canonical textual form, to object id to a
//! three-element array of decimal strings). Unknown fields are rejected, and
//! the cell map must cover exactly the declared parameters and objects.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::degree::{Degree, DegreeParseError};
use crate::error::ParseError;
use crate::param::ParamKey;
use crate::soft_set::GnSoftSet;
use crate::triple::{ConstraintMode, Triple};
use crate::universe::{ObjectId, Universe};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    universe: Vec<String>,
    parameters: Vec<RawParam>,
    cells: BTreeMap<String, BTreeMap<String, Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParam {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    negated: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pair: Option<Vec<RawParam>>,
}

fn param_from_raw(raw: &RawParam) -> Result<ParamKey, String> {
    match (&raw.name, &raw.pair) {
        (Some(name), None) => {
            let key = ParamKey::atom(name.clone()).map_err(|e| e.to_string())?;
            Ok(if raw.negated.unwrap_or(false) { key.negate() } else { key })
        }
        (None, Some(children)) => {
            if raw.negated.is_some() {
                return Err("`negated` applies only to named parameters".into());
            }
            if children.len() != 2 {
                return Err(format!("`pair` must have exactly 2 entries, found {}", children.len()));
            }
            Ok(ParamKey::pair(param_from_raw(&children[0])?, param_from_raw(&children[1])?))
        }
        _ => Err("a parameter needs exactly one of `name` or `pair`".into()),
    }
}

fn raw_from_param(key: &ParamKey) -> RawParam {
    match key {
        ParamKey::Atom { name, negated } => RawParam {
            name: Some(name.clone()),
            negated: Some(*negated),
            pair: None,
        },
        ParamKey::Pair(left, right) => RawParam {
            name: None,
            negated: None,
            pair: Some(vec![raw_from_param(left), raw_from_param(right)]),
        },
    }
}

fn parse_component(text: &str, row: usize, col: usize, place: &str) -> Result<Degree, ParseError> {
    text.parse().map_err(|e| match e {
        DegreeParseError::Malformed => ParseError::MalformedCell {
            row,
            col,
            reason: format!("{place}: component `{text}` is not a decimal with at most four fractional digits"),
        },
        DegreeParseError::OutOfRange => ParseError::DegreeOutOfRange {
            row,
            col,
            text: text.to_owned(),
        },
    })
}

/// Parses a structured document, checking every cell under `mode`.
pub fn parse(text: &str, mode: ConstraintMode) -> Result<GnSoftSet, ParseError> {
    let doc: RawDoc = serde_json::from_str(text).map_err(|e| ParseError::MalformedDocument { reason: e.to_string() })?;

    if doc.universe.is_empty() {
        return Err(ParseError::EmptyTable);
    }
    let mut ids: Vec<ObjectId> = Vec::with_capacity(doc.universe.len());
    for (n, raw) in doc.universe.iter().enumerate() {
        let id = ObjectId::new(raw.as_str()).map_err(|e| ParseError::MalformedCell {
            row: n + 2,
            col: 1,
            reason: e.to_string(),
        })?;
        if ids.contains(&id) {
            return Err(ParseError::DuplicateObjectId { row: n + 2, id: raw.clone() });
        }
        ids.push(id);
    }

    if doc.parameters.is_empty() {
        return Err(ParseError::MalformedHeader {
            col: 1,
            reason: "the parameter list is empty".into(),
        });
    }
    let mut params: Vec<ParamKey> = Vec::with_capacity(doc.parameters.len());
    for (n, raw) in doc.parameters.iter().enumerate() {
        let key = param_from_raw(raw).map_err(|reason| ParseError::MalformedHeader { col: n + 2, reason })?;
        if params.contains(&key) {
            return Err(ParseError::DuplicateParameter {
                col: n + 2,
                key: key.canonical(),
            });
        }
        params.push(key);
    }

    let canonical: Vec<String> = params.iter().map(ParamKey::canonical).collect();
    for key in doc.cells.keys() {
        if !canonical.contains(key) {
            return Err(ParseError::MalformedDocument {
                reason: format!("cells name an undeclared parameter `{key}`"),
            });
        }
    }

    let mut columns: Vec<(ParamKey, Vec<Triple>)> = Vec::with_capacity(params.len());
    for (j, (param, name)) in params.iter().zip(&canonical).enumerate() {
        let col = j + 2;
        let Some(cells) = doc.cells.get(name) else {
            return Err(ParseError::MalformedDocument {
                reason: format!("cells are missing parameter `{name}`"),
            });
        };
        for id in cells.keys() {
            if !ids.iter().any(|known| known == id.as_str()) {
                return Err(ParseError::MalformedDocument {
                    reason: format!("cells under `{name}` name an unknown object `{id}`"),
                });
            }
        }
        let mut values = Vec::with_capacity(ids.len());
        for (n, id) in ids.iter().enumerate() {
            let row = n + 2;
            let Some(components) = cells.get(id.as_str()) else {
                return Err(ParseError::MalformedDocument {
                    reason: format!("cells under `{name}` are missing object `{id}`"),
                });
            };
            if components.len() != 3 {
                return Err(ParseError::MalformedCell {
                    row,
                    col,
                    reason: format!("`{name}` / `{id}`: expected 3 components, found {}", components.len()),
                });
            }
            let place = format!("`{name}` / `{id}`");
            let t = parse_component(&components[0], row, col, &place)?;
            let i = parse_component(&components[1], row, col, &place)?;
            let f = parse_component(&components[2], row, col, &place)?;
            let triple = Triple::checked(t, i, f, mode)
                .map_err(|violation| ParseError::Constraint { row, col, violation })?;
            values.push(triple);
        }
        columns.push((param.clone(), values));
    }

    let universe = Universe::new(ids).expect("duplicates were rejected element by element");
    Ok(GnSoftSet::new(universe, columns).expect("shape and uniqueness were checked during parsing"))
}

/// Writes the canonical structured form: pretty-printed, cells keyed by the
/// canonical parameter text, object maps sorted, and a trailing newline.
pub fn serialize(set: &GnSoftSet) -> String {
    let cells = set
        .params()
        .iter()
        .zip(set.tables())
        .map(|(param, table)| {
            let column = table
                .iter()
                .map(|(id, v)| {
                    (id.as_str().to_owned(), vec![v.t.to_string(), v.i.to_string(), v.f.to_string()])
                })
                .collect();
            (param.canonical(), column)
        })
        .collect();
    let doc = RawDoc {
        universe: set.universe().iter().map(|id| id.as_str().to_owned()).collect(),
        parameters: set.params().iter().map(raw_from_param).collect(),
        cells,
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("table documents always serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_set() -> GnSoftSet {
        crate::tabio::csv::parse(
            "U,bright,not cheap,a|b\nb1,\"(0.5, 0.6, 0.3)\",\"(0.6, 0.3, 0.5)\",\"(0.1, 0.2, 0.3)\"\nb2,\"(0.4, 0.7, 0.2)\",\"(0.7, 0.4, 0.3)\",\"(0.2, 0.3, 0.4)\"\n",
            ConstraintMode::GnsMin,
        )
        .unwrap()
    }

    #[test]
    fn serialization_round_trips_and_is_a_fixed_point() {
        let set = sample_set();
        let text = serialize(&set);
        let reparsed = parse(&text, ConstraintMode::GnsMin).unwrap();
        assert_eq!(reparsed, set);
        assert_eq!(serialize(&reparsed), text);
    }

    #[test]
    fn accepts_omitted_negated_and_reordered_keys() {
        let text = r#"{
            "cells": {
                "bright": { "b1": ["0.50", "0.6", "0.3"] }
            },
            "universe": ["b1"],
            "parameters": [ { "name": "bright" } ]
        }"#;
        let set = parse(text, ConstraintMode::GnsMin).unwrap();
        assert_eq!(set.params()[0].to_string(), "bright");
        assert_eq!(set.tables()[0].values()[0].to_string(), "(0.5, 0.6, 0.3)");
    }

    #[test]
    fn rejects_unknown_fields() {
        let text = r#"{ "universe": ["b1"], "parameters": [{"name": "a"}], "cells": {"a": {"b1": ["0","0","0"]}}, "extra": 1 }"#;
        assert!(matches!(parse(text, ConstraintMode::GnsMin).unwrap_err(), ParseError::MalformedDocument { .. }));
    }

    #[test]
    fn rejects_non_json_input() {
        assert!(matches!(
            parse("U,bright\n", ConstraintMode::GnsMin).unwrap_err(),
            ParseError::MalformedDocument { .. }
        ));
    }

    #[test]
    fn cell_map_must_match_declared_parameters_and_objects() {
        let missing_param = r#"{ "universe": ["b1"], "parameters": [{"name": "a"}, {"name": "b"}], "cells": {"a": {"b1": ["0","0","0"]}} }"#;
        let err = parse(missing_param, ConstraintMode::GnsMin).unwrap_err();
        assert!(err.to_string().contains("missing parameter `b`"), "{err}");

        let undeclared = r#"{ "universe": ["b1"], "parameters": [{"name": "a"}], "cells": {"a": {"b1": ["0","0","0"]}, "z": {"b1": ["0","0","0"]}} }"#;
        let err = parse(undeclared, ConstraintMode::GnsMin).unwrap_err();
        assert!(err.to_string().contains("undeclared parameter `z`"), "{err}");

        let missing_object = r#"{ "universe": ["b1", "b2"], "parameters": [{"name": "a"}], "cells": {"a": {"b1": ["0","0","0"]}} }"#;
        let err = parse(missing_object, ConstraintMode::GnsMin).unwrap_err();
        assert!(err.to_string().contains("missing object `b2`"), "{err}");

        let unknown_object = r#"{ "universe": ["b1"], "parameters": [{"name": "a"}], "cells": {"a": {"b1": ["0","0","0"], "b9": ["0","0","0"]}} }"#;
        let err = parse(unknown_object, ConstraintMode::GnsMin).unwrap_err();
        assert!(err.to_string().contains("unknown object `b9`"), "{err}");
    }

    #[test]
    fn wrong_arity_cells_are_malformed_with_position() {
        let text = r#"{ "universe": ["b1", "b2"], "parameters": [{"name": "a"}, {"name": "b"}],
            "cells": {"a": {"b1": ["0","0","0"], "b2": ["0","0","0"]},
                      "b": {"b1": ["0","0","0"], "b2": ["0","0"]}} }"#;
        let err = parse(text, ConstraintMode::GnsMin).unwrap_err();
        assert!(matches!(err, ParseError::MalformedCell { row: 3, col: 3, .. }), "{err}");
    }

    #[test]
    fn degree_errors_match_the_csv_convention() {
        let text = r#"{ "universe": ["b1"], "parameters": [{"name": "a"}], "cells": {"a": {"b1": ["1.2","0","0"]}} }"#;
        assert_eq!(
            parse(text, ConstraintMode::GnsMin).unwrap_err(),
            ParseError::DegreeOutOfRange { row: 2, col: 2, text: "1.2".into() }
        );
        let text = r#"{ "universe": ["b1"], "parameters": [{"name": "a"}], "cells": {"a": {"b1": ["0.123456","0","0"]}} }"#;
        assert!(matches!(
            parse(text, ConstraintMode::GnsMin).unwrap_err(),
            ParseError::MalformedCell { row: 2, col: 2, .. }
        ));
    }

    #[test]
    fn constraints_apply_per_mode() {
        let text = r#"{ "universe": ["b1"], "parameters": [{"name": "a"}], "cells": {"a": {"b1": ["0.6","0.7","0.8"]}} }"#;
        assert!(matches!(
            parse(text, ConstraintMode::GnsMin).unwrap_err(),
            ParseError::Constraint { row: 2, col: 2, .. }
        ));
        assert!(parse(text, ConstraintMode::NeutrosophicOnly).is_ok());
    }

    #[test]
    fn pair_parameters_nest() {
        let text = r#"{ "universe": ["b1"], "parameters": [ { "pair": [ {"name": "a"}, {"pair": [{"name": "b"}, {"name": "c", "negated": true}]} ] } ],
                       "cells": {"a|(b|not c)": {"b1": ["0.1","0.2","0.3"]}} }"#;
        let set = parse(text, ConstraintMode::GnsMin).unwrap();
        assert_eq!(set.params()[0].to_string(), "a|(b|not c)");
    }

    #[test]
    fn bad_parameter_objects_are_header_errors() {
        for bad in [
            r#"{ "universe": ["b1"], "parameters": [ {} ], "cells": {} }"#,
            r#"{ "universe": ["b1"], "parameters": [ {"name": "a", "pair": []} ], "cells": {} }"#,
            r#"{ "universe": ["b1"], "parameters": [ {"pair": [{"name":"a"}]} ], "cells": {} }"#,
            r#"{ "universe": ["b1"], "parameters": [ {"pair": [{"name":"a"},{"name":"b"}], "negated": true} ], "cells": {} }"#,
        ] {
            assert!(
                matches!(parse(bad, ConstraintMode::GnsMin).unwrap_err(), ParseError::MalformedHeader { col: 2, .. }),
                "{bad}"
            );
        }
    }

    #[test]
    fn empty_universe_and_parameters_are_rejected() {
        let no_objects = r#"{ "universe": [], "parameters": [{"name": "a"}], "cells": {"a": {}} }"#;
        assert_eq!(parse(no_objects, ConstraintMode::GnsMin).unwrap_err(), ParseError::EmptyTable);
        let no_params = r#"{ "universe": ["b1"], "parameters": [], "cells": {} }"#;
        assert!(matches!(
            parse(no_params, ConstraintMode::GnsMin).unwrap_err(),
            ParseError::MalformedHeader { col: 1, .. }
        ));
    }
}
