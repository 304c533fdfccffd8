//! Object identifiers and the ordered universe they live in.

use std::fmt;
use std::sync::Arc;

use crate::error::GnssError;

fn check_token(text: &str) -> Option<&'static str> {
    if text.is_empty() {
        return Some("must not be empty");
    }
    if text.trim() != text {
        return Some("must not start or end with whitespace");
    }
    if text.chars().any(|c| c.is_control()) {
        return Some("must not contain control characters");
    }
    if text.contains([',', '"', '(', ')']) {
        return Some("must not contain ',', '\"', '(' or ')'");
    }
    None
}

/// Shared validity rules for object ids and parameter names.
pub(crate) fn validate_token(text: &str) -> Result<(), &'static str> {
    match check_token(text) {
        None => Ok(()),
        Some(reason) => Err(reason),
    }
}

/// A name for one object of the universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectId(String);

impl ObjectId {
    /// Accepts any non-empty token without commas, quotes, parentheses,
    /// control characters, or surrounding whitespace.
    pub fn new(text: impl Into<String>) -> Result<ObjectId, GnssError> {
        let text = text.into();
        match validate_token(&text) {
            Ok(()) => Ok(ObjectId(text)),
            Err(reason) => Err(GnssError::InvalidObjectId { text, reason }),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for ObjectId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl PartialEq<str> for ObjectId {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for ObjectId {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

/// The ordered, duplicate-free list of objects a table speaks about.
///
/// Order is significant: tables, matrices, and rankings all report objects in
/// universe order, and two universes are equal only if they list the same ids
/// in the same order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    objects: Vec<ObjectId>,
}

impl Universe {
    pub fn new(objects: Vec<ObjectId>) -> Result<Universe, GnssError> {
        for (n, id) in objects.iter().enumerate() {
            if objects[..n].contains(id) {
                return Err(GnssError::DuplicateObjectId { id: id.as_str().to_owned() });
            }
        }
        Ok(Universe { objects })
    }

    /// Convenience constructor from string literals.
    pub fn from_ids<S: AsRef<str>>(ids: &[S]) -> Result<Universe, GnssError> {
        let objects = ids
            .iter()
            .map(|s| ObjectId::new(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Universe::new(objects)
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[ObjectId] {
        &self.objects
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ObjectId> {
        self.objects.iter()
    }

    /// Position of `id` in universe order.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.objects.iter().position(|o| o.as_str() == id)
    }

    pub fn into_arc(self) -> Arc<Universe> {
        Arc::new(self)
    }
}

impl<'a> IntoIterator for &'a Universe {
    type Item = &'a ObjectId;
    type IntoIter = std::slice::Iter<'a, ObjectId>;

    fn into_iter(self) -> Self::IntoIter {
        self.objects.iter()
    }
}
