//! Set-level operations: comparison, combination, relabeling, and the two
//! pairwise products.
//!
//! The products fan out over every parameter pair, so with the `parallel`
//! feature their columns are computed on a rayon pool; the `*_seq` twins
//! always run sequentially and produce identical results.

use std::sync::Arc;

use crate::error::GnssError;
use crate::param::ParamKey;
use crate::soft_set::{GnSet, GnSoftSet};
use crate::triple::Triple;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Negates every key in a list, preserving order.
pub fn negate_params(keys: &[ParamKey]) -> Vec<ParamKey> {
    keys.iter().map(ParamKey::negate).collect()
}

fn combine_columns(left: &GnSet, right: &GnSet, combine: fn(Triple, Triple) -> Triple) -> Vec<Triple> {
    left.values()
        .iter()
        .zip(right.values())
        .map(|(a, b)| combine(*a, *b))
        .collect()
}

impl GnSoftSet {
    fn same_universe(&self, other: &GnSoftSet) -> Result<(), GnssError> {
        if self.universe() == other.universe() {
            Ok(())
        } else {
            Err(GnssError::UniverseMismatch)
        }
    }

    /// True when every parameter of `self` occurs in `other` and each cell of
    /// `self` is contained in the matching cell.
    pub fn is_subset_of(&self, other: &GnSoftSet) -> Result<bool, GnssError> {
        self.same_universe(other)?;
        for (param, table) in self.params().iter().zip(self.tables()) {
            let Some(theirs) = other.approximation(param) else {
                return Ok(false);
            };
            let contained = table
                .values()
                .iter()
                .zip(theirs.values())
                .all(|(a, b)| a.is_contained_in(*b));
            if !contained {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mutual containment; insensitive to parameter order.
    pub fn soft_eq(&self, other: &GnSoftSet) -> Result<bool, GnssError> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Relabels every parameter with its negation, leaving cells unchanged.
    pub fn not_params(&self) -> GnSoftSet {
        self.map_columns(|param| param.negate(), |v| v)
    }

    /// Negates every parameter and swaps truth with falsity in every cell.
    /// Applying it twice gives back the original set.
    pub fn complement(&self) -> GnSoftSet {
        self.map_columns(|param| param.negate(), Triple::complement)
    }

    fn map_columns(&self, key: impl Fn(&ParamKey) -> ParamKey, cell: fn(Triple) -> Triple) -> GnSoftSet {
        let columns = self
            .params()
            .iter()
            .zip(self.tables())
            .map(|(param, table)| (key(param), table.values().iter().map(|v| cell(*v)).collect()))
            .collect();
        GnSoftSet::over_arc(Arc::clone(self.universe_arc()), columns)
            .expect("relabeling keeps parameters distinct and columns full length")
    }

    /// Parameters of `self` first (shared cells joined with the componentwise
    /// union), then the parameters only `other` has.
    pub fn union(&self, other: &GnSoftSet) -> Result<GnSoftSet, GnssError> {
        self.same_universe(other)?;
        let mut columns: Vec<(ParamKey, Vec<Triple>)> = Vec::new();
        for (param, table) in self.params().iter().zip(self.tables()) {
            let values = match other.approximation(param) {
                Some(theirs) => combine_columns(table, theirs, Triple::union),
                None => table.values().to_vec(),
            };
            columns.push((param.clone(), values));
        }
        for (param, table) in other.params().iter().zip(other.tables()) {
            if self.approximation(param).is_none() {
                columns.push((param.clone(), table.values().to_vec()));
            }
        }
        GnSoftSet::over_arc(Arc::clone(self.universe_arc()), columns)
    }

    /// The shared parameters in `self`'s order, cells joined with the
    /// componentwise intersection; sharing nothing is an error.
    pub fn intersection(&self, other: &GnSoftSet) -> Result<GnSoftSet, GnssError> {
        self.same_universe(other)?;
        let mut columns: Vec<(ParamKey, Vec<Triple>)> = Vec::new();
        for (param, table) in self.params().iter().zip(self.tables()) {
            if let Some(theirs) = other.approximation(param) {
                columns.push((param.clone(), combine_columns(table, theirs, Triple::intersection)));
            }
        }
        if columns.is_empty() {
            return Err(GnssError::EmptyParameterOverlap);
        }
        GnSoftSet::over_arc(Arc::clone(self.universe_arc()), columns)
    }

    /// One column per `left|right` parameter pair (left-major order), cells
    /// joined with the componentwise intersection.
    pub fn and(&self, other: &GnSoftSet) -> Result<GnSoftSet, GnssError> {
        let pairs = self.product_pairs(other)?;
        let cols = self.product_columns(other, &pairs, Triple::intersection);
        self.finish_product(other, pairs, cols)
    }

    /// Sequential twin of [`GnSoftSet::and`]; identical output.
    pub fn and_seq(&self, other: &GnSoftSet) -> Result<GnSoftSet, GnssError> {
        let pairs = self.product_pairs(other)?;
        let cols = self.product_columns_seq(other, &pairs, Triple::intersection);
        self.finish_product(other, pairs, cols)
    }

    /// One column per `left|right` parameter pair (left-major order), cells
    /// joined with the componentwise union.
    pub fn or(&self, other: &GnSoftSet) -> Result<GnSoftSet, GnssError> {
        let pairs = self.product_pairs(other)?;
        let cols = self.product_columns(other, &pairs, Triple::union);
        self.finish_product(other, pairs, cols)
    }

    /// Sequential twin of [`GnSoftSet::or`]; identical output.
    pub fn or_seq(&self, other: &GnSoftSet) -> Result<GnSoftSet, GnssError> {
        let pairs = self.product_pairs(other)?;
        let cols = self.product_columns_seq(other, &pairs, Triple::union);
        self.finish_product(other, pairs, cols)
    }

    fn product_pairs(&self, other: &GnSoftSet) -> Result<Vec<(usize, usize)>, GnssError> {
        self.same_universe(other)?;
        Ok((0..self.params().len())
            .flat_map(|a| (0..other.params().len()).map(move |b| (a, b)))
            .collect())
    }

    #[cfg(feature = "parallel")]
    fn product_columns(
        &self,
        other: &GnSoftSet,
        pairs: &[(usize, usize)],
        combine: fn(Triple, Triple) -> Triple,
    ) -> Vec<Vec<Triple>> {
        pairs
            .par_iter()
            .map(|&(a, b)| combine_columns(&self.tables()[a], &other.tables()[b], combine))
            .collect()
    }

    #[cfg(not(feature = "parallel"))]
    fn product_columns(
        &self,
        other: &GnSoftSet,
        pairs: &[(usize, usize)],
        combine: fn(Triple, Triple) -> Triple,
    ) -> Vec<Vec<Triple>> {
        self.product_columns_seq(other, pairs, combine)
    }

    fn product_columns_seq(
        &self,
        other: &GnSoftSet,
        pairs: &[(usize, usize)],
        combine: fn(Triple, Triple) -> Triple,
    ) -> Vec<Vec<Triple>> {
        pairs
            .iter()
            .map(|&(a, b)| combine_columns(&self.tables()[a], &other.tables()[b], combine))
            .collect()
    }

    fn finish_product(
        &self,
        other: &GnSoftSet,
        pairs: Vec<(usize, usize)>,
        cols: Vec<Vec<Triple>>,
    ) -> Result<GnSoftSet, GnssError> {
        let columns = pairs
            .into_iter()
            .zip(cols)
            .map(|((a, b), values)| {
                let key = ParamKey::pair(self.params()[a].clone(), other.params()[b].clone());
                (key, values)
            })
            .collect();
        GnSoftSet::over_arc(Arc::clone(self.universe_arc()), columns)
    }

    /// Keeps only the requested parameters, in the requested order.
    pub fn restrict(&self, keys: &[ParamKey]) -> Result<GnSoftSet, GnssError> {
        if keys.is_empty() {
            return Err(GnssError::EmptyParameterSet);
        }
        let mut columns = Vec::with_capacity(keys.len());
        for key in keys {
            let Some(table) = self.approximation(key) else {
                return Err(GnssError::UnknownParameter { key: key.canonical() });
            };
            columns.push((key.clone(), table.values().to_vec()));
        }
        GnSoftSet::over_arc(Arc::clone(self.universe_arc()), columns)
    }
}
