//! The comparison-matrix ranking procedure.
//!
//! For each parameter column, an object is credited once for every *other*
//! object whose truth it meets or exceeds, once more for indeterminacy, and
//! debited once for falsity; the matrix collects these per-column balances,
//! row sums give scores, and the highest score wins. Columns are independent,
//! so the `parallel` feature computes them on a rayon pool; the `*_seq` twin
//! always runs sequentially and produces identical results.

use std::sync::Arc;

use crate::error::GnssError;
use crate::param::ParamKey;
use crate::soft_set::GnSoftSet;
use crate::triple::Triple;
use crate::universe::{ObjectId, Universe};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Per-object, per-parameter comparison balances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonMatrix {
    universe: Arc<Universe>,
    params: Vec<ParamKey>,
    rows: Vec<Vec<i32>>,
}

impl ComparisonMatrix {
    /// Builds a matrix from already-computed rows, one per object.
    pub fn from_parts(
        universe: Universe,
        params: Vec<ParamKey>,
        rows: Vec<Vec<i32>>,
    ) -> Result<ComparisonMatrix, GnssError> {
        for (n, param) in params.iter().enumerate() {
            if params[..n].contains(param) {
                return Err(GnssError::DuplicateParameter { key: param.canonical() });
            }
        }
        if rows.len() != universe.len() {
            return Err(GnssError::ShapeMismatch {
                detail: format!("{} rows for a universe of {} objects", rows.len(), universe.len()),
            });
        }
        if let Some(row) = rows.iter().find(|r| r.len() != params.len()) {
            return Err(GnssError::ShapeMismatch {
                detail: format!("a row has {} cells but there are {} parameters", row.len(), params.len()),
            });
        }
        Ok(ComparisonMatrix {
            universe: universe.into_arc(),
            params,
            rows,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn params(&self) -> &[ParamKey] {
        &self.params
    }

    /// Rows in universe order, one balance per parameter.
    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    pub fn cell(&self, object: usize, param: usize) -> i32 {
        self.rows[object][param]
    }

    /// Row sums in universe order.
    pub fn scores(&self) -> ScoreVector {
        ScoreVector {
            universe: Arc::clone(&self.universe),
            scores: self.rows.iter().map(|row| row.iter().map(|&c| i64::from(c)).sum()).collect(),
        }
    }
}

/// One aggregate score per object, in universe order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreVector {
    universe: Arc<Universe>,
    scores: Vec<i64>,
}

impl ScoreVector {
    pub fn from_parts(universe: Universe, scores: Vec<i64>) -> Result<ScoreVector, GnssError> {
        if scores.len() != universe.len() {
            return Err(GnssError::ShapeMismatch {
                detail: format!("{} scores for a universe of {} objects", scores.len(), universe.len()),
            });
        }
        Ok(ScoreVector {
            universe: universe.into_arc(),
            scores,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn scores(&self) -> &[i64] {
        &self.scores
    }

    pub fn get(&self, id: &str) -> Option<i64> {
        self.universe.index_of(id).map(|n| self.scores[n])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ObjectId, i64)> + '_ {
        self.universe.iter().zip(self.scores.iter().copied())
    }

    /// Orders objects by score, ties broken by universe order.
    pub fn ranking(&self) -> Ranking {
        let mut entries: Vec<(ObjectId, i64)> = self.iter().map(|(id, s)| (id.clone(), s)).collect();
        entries.sort_by_key(|(_, s)| std::cmp::Reverse(*s));
        let winners = match entries.first() {
            None => Vec::new(),
            Some((_, best)) => entries.iter().take_while(|(_, s)| s == best).map(|(id, _)| id.clone()).collect(),
        };
        Ranking { entries, winners }
    }
}

/// Scores sorted best-first. Equal scores keep universe order, and every
/// object sharing the best score is reported as a winner rather than being
/// silently dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranking {
    entries: Vec<(ObjectId, i64)>,
    winners: Vec<ObjectId>,
}

impl Ranking {
    /// `(object, score)` pairs, best first.
    pub fn entries(&self) -> &[(ObjectId, i64)] {
        &self.entries
    }

    /// Every object attaining the best score, in universe order.
    pub fn winners(&self) -> &[ObjectId] {
        &self.winners
    }

    /// The deterministic single choice: the first winner in universe order.
    pub fn choice(&self) -> Option<&ObjectId> {
        self.winners.first()
    }

    pub fn is_tie(&self) -> bool {
        self.winners.len() > 1
    }
}

/// The matrix, its row sums, and the resulting ranking in one bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub matrix: ComparisonMatrix,
    pub scores: ScoreVector,
    pub ranking: Ranking,
}

fn column_counts(values: &[Triple]) -> Vec<i32> {
    let n = values.len();
    (0..n)
        .map(|i| {
            let mut balance = 0i32;
            for k in 0..n {
                if k == i {
                    continue;
                }
                balance += i32::from(values[i].t >= values[k].t);
                balance += i32::from(values[i].i >= values[k].i);
                balance -= i32::from(values[i].f >= values[k].f);
            }
            balance
        })
        .collect()
}

fn assemble(set: &GnSoftSet, columns: Vec<Vec<i32>>) -> ComparisonMatrix {
    let rows = (0..set.universe().len())
        .map(|i| columns.iter().map(|col| col[i]).collect())
        .collect();
    ComparisonMatrix {
        universe: Arc::clone(set.universe_arc()),
        params: set.params().to_vec(),
        rows,
    }
}

fn check_nonempty(set: &GnSoftSet) -> Result<(), GnssError> {
    if set.universe().is_empty() {
        return Err(GnssError::EmptyUniverse);
    }
    Ok(())
}

/// Computes the comparison matrix of `set`, one column per parameter.
#[cfg(feature = "parallel")]
pub fn comparison_matrix(set: &GnSoftSet) -> Result<ComparisonMatrix, GnssError> {
    check_nonempty(set)?;
    let columns = set.tables().par_iter().map(|t| column_counts(t.values())).collect();
    Ok(assemble(set, columns))
}

/// Computes the comparison matrix of `set`, one column per parameter.
#[cfg(not(feature = "parallel"))]
pub fn comparison_matrix(set: &GnSoftSet) -> Result<ComparisonMatrix, GnssError> {
    comparison_matrix_seq(set)
}

/// Sequential twin of [`comparison_matrix`]; identical output.
pub fn comparison_matrix_seq(set: &GnSoftSet) -> Result<ComparisonMatrix, GnssError> {
    check_nonempty(set)?;
    let columns = set.tables().iter().map(|t| column_counts(t.values())).collect();
    Ok(assemble(set, columns))
}

/// Restricts `set` to `keys`, then runs the whole procedure.
pub fn decide(set: &GnSoftSet, keys: &[ParamKey]) -> Result<Decision, GnssError> {
    let narrowed = set.restrict(keys)?;
    let matrix = comparison_matrix(&narrowed)?;
    let scores = matrix.scores();
    let ranking = scores.ranking();
    Ok(Decision { matrix, scores, ranking })
}
