//! Cell-level comparison of two tables, matrices, or score vectors that share
//! a shape.

use crate::decision::{ComparisonMatrix, ScoreVector};
use crate::error::GnssError;
use crate::param::ParamKey;
use crate::soft_set::GnSoftSet;
use crate::triple::Triple;
use crate::universe::ObjectId;

/// One differing position. `param` is `None` for score vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffEntry<V> {
    pub object: ObjectId,
    pub param: Option<ParamKey>,
    pub expected: V,
    pub actual: V,
}

/// All differing positions, parameter-major, plus the number of cells compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffReport<V> {
    pub cells: usize,
    pub entries: Vec<DiffEntry<V>>,
}

impl<V> DiffReport<V> {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn same_shape<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, actual: T) -> Result<(), GnssError> {
    if expected == actual {
        Ok(())
    } else {
        Err(GnssError::ShapeMismatch {
            detail: format!("{what} differ: expected {expected:?}, found {actual:?}"),
        })
    }
}

/// Compares two tables cell by cell; they must agree on universe and
/// parameter list, order included.
pub fn diff_tables(expected: &GnSoftSet, actual: &GnSoftSet) -> Result<DiffReport<Triple>, GnssError> {
    same_shape("universes", expected.universe(), actual.universe())?;
    same_shape("parameter lists", expected.params(), actual.params())?;
    let mut entries = Vec::new();
    for (param, exp_table) in expected.params().iter().zip(expected.tables()) {
        let act_table = actual.approximation(param).expect("parameter lists were checked equal");
        for ((id, exp), act) in exp_table.iter().zip(act_table.values()) {
            if exp != *act {
                entries.push(DiffEntry {
                    object: id.clone(),
                    param: Some(param.clone()),
                    expected: exp,
                    actual: *act,
                });
            }
        }
    }
    Ok(DiffReport {
        cells: expected.params().len() * expected.universe().len(),
        entries,
    })
}

/// Compares two comparison matrices cell by cell, parameter-major.
pub fn diff_matrices(expected: &ComparisonMatrix, actual: &ComparisonMatrix) -> Result<DiffReport<i32>, GnssError> {
    same_shape("universes", expected.universe(), actual.universe())?;
    same_shape("parameter lists", expected.params(), actual.params())?;
    let mut entries = Vec::new();
    for (j, param) in expected.params().iter().enumerate() {
        for (i, id) in expected.universe().iter().enumerate() {
            let (exp, act) = (expected.cell(i, j), actual.cell(i, j));
            if exp != act {
                entries.push(DiffEntry {
                    object: id.clone(),
                    param: Some(param.clone()),
                    expected: exp,
                    actual: act,
                });
            }
        }
    }
    Ok(DiffReport {
        cells: expected.params().len() * expected.universe().len(),
        entries,
    })
}

/// Compares two score vectors object by object.
pub fn diff_scores(expected: &ScoreVector, actual: &ScoreVector) -> Result<DiffReport<i64>, GnssError> {
    same_shape("universes", expected.universe(), actual.universe())?;
    let mut entries = Vec::new();
    for ((id, exp), act) in expected.iter().zip(actual.scores()) {
        if exp != *act {
            entries.push(DiffEntry {
                object: id.clone(),
                param: None,
                expected: exp,
                actual: *act,
            });
        }
    }
    Ok(DiffReport {
        cells: expected.universe().len(),
        entries,
    })
}
