//! Parameter keys: plain or negated names, and `|`-joined pairs produced by
//! the product operations.
//!
//! Textual syntax: `name`, `not name`, `a|b`, with parentheses for grouping.
//! `|` associates to the left, so `a|b|c` reads as `(a|b)|c`; the canonical
//! rendering parenthesizes only right-nested pairs.

use std::fmt;
use std::str::FromStr;

use crate::error::GnssError;
use crate::universe::validate_token;

/// A parameter under which a table column is filed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamKey {
    Atom { name: String, negated: bool },
    Pair(Box<ParamKey>, Box<ParamKey>),
}

fn check_name(name: &str) -> Result<(), GnssError> {
    let reason = if let Err(reason) = validate_token(name) {
        reason
    } else if name.contains('|') {
        "must not contain '|'"
    } else if name.starts_with("not ") {
        "must not start with the negation prefix `not `"
    } else {
        return Ok(());
    };
    Err(GnssError::InvalidParameterName {
        text: name.to_owned(),
        reason,
    })
}

impl ParamKey {
    /// A plain named parameter.
    pub fn atom(name: impl Into<String>) -> Result<ParamKey, GnssError> {
        let name = name.into();
        check_name(&name)?;
        Ok(ParamKey::Atom { name, negated: false })
    }

    /// Joins two keys into a product key.
    pub fn pair(left: ParamKey, right: ParamKey) -> ParamKey {
        ParamKey::Pair(Box::new(left), Box::new(right))
    }

    /// Pointwise negation: flips an atom, negates both halves of a pair.
    /// Applying it twice gives back the original key.
    pub fn negate(&self) -> ParamKey {
        match self {
            ParamKey::Atom { name, negated } => ParamKey::Atom {
                name: name.clone(),
                negated: !negated,
            },
            ParamKey::Pair(left, right) => ParamKey::pair(left.negate(), right.negate()),
        }
    }

    /// The canonical rendering, identical to `Display`.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ParamKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamKey::Atom { name, negated } => {
                if *negated {
                    write!(f, "not {name}")
                } else {
                    f.write_str(name)
                }
            }
            ParamKey::Pair(left, right) => {
                write!(f, "{left}|")?;
                if matches!(**right, ParamKey::Pair(..)) {
                    write!(f, "({right})")
                } else {
                    write!(f, "{right}")
                }
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    rest: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, reason: impl Into<String>) -> GnssError {
        GnssError::InvalidParameterKey {
            text: self.src.to_owned(),
            reason: reason.into(),
        }
    }

    fn skip_spaces(&mut self) {
        self.rest = self.rest.trim_start_matches(' ');
    }

    fn eat(&mut self, c: char) -> bool {
        if let Some(stripped) = self.rest.strip_prefix(c) {
            self.rest = stripped;
            true
        } else {
            false
        }
    }

    fn key(&mut self) -> Result<ParamKey, GnssError> {
        let mut acc = self.element()?;
        loop {
            self.skip_spaces();
            if self.eat('|') {
                acc = ParamKey::pair(acc, self.element()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn element(&mut self) -> Result<ParamKey, GnssError> {
        self.skip_spaces();
        if self.eat('(') {
            let key = self.key()?;
            self.skip_spaces();
            if !self.eat(')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(key);
        }
        let end = self.rest.find(['|', '(', ')']).unwrap_or(self.rest.len());
        let raw = self.rest[..end].trim();
        self.rest = &self.rest[end..];
        let (name, negated) = match raw.strip_prefix("not ") {
            Some(stripped) => (stripped, true),
            None => (raw, false),
        };
        check_name(name).map_err(|e| self.error(e.to_string()))?;
        Ok(ParamKey::Atom {
            name: name.to_owned(),
            negated,
        })
    }
}

impl FromStr for ParamKey {
    type Err = GnssError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { src: s, rest: s };
        let key = parser.key()?;
        parser.skip_spaces();
        if !parser.rest.is_empty() {
            return Err(parser.error(format!("unexpected `{}`", parser.rest)));
        }
        Ok(key)
    }
}
