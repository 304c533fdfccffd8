//! The two set containers: a single membership table over a universe, and the
//! parameterized family of such tables.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::GnssError;
use crate::param::ParamKey;
use crate::triple::Triple;
use crate::universe::{ObjectId, Universe};

/// One membership table: a triple for every object of a shared universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnSet {
    universe: Arc<Universe>,
    values: Vec<Triple>,
}

impl GnSet {
    pub fn new(universe: Arc<Universe>, values: Vec<Triple>) -> Result<GnSet, GnssError> {
        if values.len() != universe.len() {
            return Err(GnssError::ShapeMismatch {
                detail: format!(
                    "{} values for a universe of {} objects",
                    values.len(),
                    universe.len()
                ),
            });
        }
        Ok(GnSet { universe, values })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Triples in universe order.
    pub fn values(&self) -> &[Triple] {
        &self.values
    }

    pub fn get(&self, id: &str) -> Option<Triple> {
        self.universe.index_of(id).map(|n| self.values[n])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ObjectId, Triple)> + '_ {
        self.universe.iter().zip(self.values.iter().copied())
    }
}

/// A family of membership tables, one per parameter, all over one universe.
///
/// Parameter order is the column order of the table a set was read from or
/// the order an operation produced, and it is significant for (structural)
/// equality; the order-insensitive comparison is [`GnSoftSet::soft_eq`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnSoftSet {
    universe: Arc<Universe>,
    params: Vec<ParamKey>,
    tables: Vec<GnSet>,
}

impl GnSoftSet {
    /// Builds a set from `(parameter, column)` pairs over `universe`.
    pub fn new(universe: Universe, columns: Vec<(ParamKey, Vec<Triple>)>) -> Result<GnSoftSet, GnssError> {
        let universe = universe.into_arc();
        GnSoftSet::over_arc(universe, columns)
    }

    pub(crate) fn over_arc(
        universe: Arc<Universe>,
        columns: Vec<(ParamKey, Vec<Triple>)>,
    ) -> Result<GnSoftSet, GnssError> {
        let mut seen = HashSet::new();
        let mut params = Vec::with_capacity(columns.len());
        let mut tables = Vec::with_capacity(columns.len());
        for (param, values) in columns {
            if !seen.insert(param.clone()) {
                return Err(GnssError::DuplicateParameter { key: param.canonical() });
            }
            if values.len() != universe.len() {
                return Err(GnssError::WrongColumnLength {
                    param: param.canonical(),
                    expected: universe.len(),
                    found: values.len(),
                });
            }
            tables.push(GnSet::new(Arc::clone(&universe), values)?);
            params.push(param);
        }
        Ok(GnSoftSet { universe, params, tables })
    }

    /// The set that maps every listed parameter to the all-zero table.
    pub fn null(universe: Universe, params: Vec<ParamKey>) -> Result<GnSoftSet, GnssError> {
        if params.is_empty() {
            return Err(GnssError::EmptyParameterSet);
        }
        let zeros = vec![Triple::ZERO; universe.len()];
        GnSoftSet::new(universe, params.into_iter().map(|p| (p, zeros.clone())).collect())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub(crate) fn universe_arc(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn params(&self) -> &[ParamKey] {
        &self.params
    }

    pub fn tables(&self) -> &[GnSet] {
        &self.tables
    }

    /// The table filed under `key`, if any.
    pub fn approximation(&self, key: &ParamKey) -> Option<&GnSet> {
        self.index_of(key).map(|n| &self.tables[n])
    }

    pub fn index_of(&self, key: &ParamKey) -> Option<usize> {
        self.params.iter().position(|p| p == key)
    }

    pub fn triple(&self, key: &ParamKey, id: &str) -> Option<Triple> {
        self.approximation(key).and_then(|t| t.get(id))
    }

    /// All cells, parameter-major: every object of the first column, then the
    /// second, and so on.
    pub fn cells(&self) -> impl Iterator<Item = (&ParamKey, &ObjectId, Triple)> + '_ {
        self.params
            .iter()
            .zip(&self.tables)
            .flat_map(|(param, table)| table.iter().map(move |(id, triple)| (param, id, triple)))
    }

    /// True when every cell is the zero triple.
    pub fn is_null(&self) -> bool {
        self.tables.iter().all(|t| t.values().iter().all(|v| *v == Triple::ZERO))
    }
}
