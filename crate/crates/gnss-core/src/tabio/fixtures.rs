//! Bundled reference tables.
//!
//! The table fixtures are the published worked example this crate reproduces:
//! `table1` through `table5` and `table10` are inputs, `table6` through
//! `table9` and `ex3_11` are published operation results, `table11` and
//! `scores` are the published comparison matrix and its row sums, `ex3_13` is
//! the all-zero set, and `ex3_20_F/G/K` are the three one-column sets of the
//! distributivity example. Where the published results disagree with what the
//! operations actually produce, the fixture keeps the published value and the
//! position is listed in [`KNOWN_ERRATA`].

use crate::decision::{ComparisonMatrix, ScoreVector};
use crate::error::GnssError;
use crate::param::ParamKey;
use crate::soft_set::GnSoftSet;
use crate::tabio::csv;
use crate::tabio::TableDocument;
use crate::triple::ConstraintMode;
use crate::universe::Universe;

/// Every fixture name, tables first, in publication order.
pub const NAMES: &[&str] = &[
    "table1", "table2", "table3", "table4", "table5", "table6", "table7", "table8", "table9",
    "table10", "table11", "ex3_11", "ex3_13", "ex3_20_F", "ex3_20_G", "ex3_20_K", "scores",
];

const TABLE_SOURCES: &[(&str, &str)] = &[
    ("table1", include_str!("../../fixtures/table1.gnss.csv")),
    ("table2", include_str!("../../fixtures/table2.gnss.csv")),
    ("table3", include_str!("../../fixtures/table3.gnss.csv")),
    ("table4", include_str!("../../fixtures/table4.gnss.csv")),
    ("table5", include_str!("../../fixtures/table5.gnss.csv")),
    ("table6", include_str!("../../fixtures/table6.gnss.csv")),
    ("table7", include_str!("../../fixtures/table7.gnss.csv")),
    ("table8", include_str!("../../fixtures/table8.gnss.csv")),
    ("table9", include_str!("../../fixtures/table9.gnss.csv")),
    ("table10", include_str!("../../fixtures/table10.gnss.csv")),
    ("ex3_11", include_str!("../../fixtures/ex3_11.gnss.csv")),
    ("ex3_13", include_str!("../../fixtures/ex3_13.gnss.csv")),
    ("ex3_20_F", include_str!("../../fixtures/ex3_20_F.gnss.csv")),
    ("ex3_20_G", include_str!("../../fixtures/ex3_20_G.gnss.csv")),
    ("ex3_20_K", include_str!("../../fixtures/ex3_20_K.gnss.csv")),
];

/// A fixture is a table, a comparison matrix, or a score vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Table(TableDocument),
    Matrix(ComparisonMatrix),
    Scores(ScoreVector),
}

/// A published cell known to disagree with what the operations produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ErrataCell {
    pub fixture: &'static str,
    pub object: &'static str,
    /// `None` for score entries, which have no parameter.
    pub param: Option<&'static str>,
}

/// The four published cells and two propagated score entries that differ from
/// the recomputed values, in report order.
pub const KNOWN_ERRATA: &[ErrataCell] = &[
    ErrataCell { fixture: "table7", object: "b3", param: Some("colorful") },
    ErrataCell { fixture: "table7", object: "b4", param: Some("colorful") },
    ErrataCell { fixture: "table11", object: "b5", param: Some("cheap") },
    ErrataCell { fixture: "table11", object: "b1", param: Some("costly") },
    ErrataCell { fixture: "scores", object: "b1", param: None },
    ErrataCell { fixture: "scores", object: "b5", param: None },
];

/// The raw CSV text of a table fixture, exactly as bundled.
pub fn source(name: &str) -> Option<&'static str> {
    TABLE_SOURCES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Looks a fixture up by name.
pub fn fixture(name: &str) -> Result<Fixture, GnssError> {
    if let Some(text) = source(name) {
        let set = csv::parse(text, ConstraintMode::GnsMin).expect("bundled fixtures parse");
        return Ok(Fixture::Table(TableDocument { name: name.to_owned(), set }));
    }
    match name {
        "table11" => Ok(Fixture::Matrix(printed_matrix())),
        "scores" => Ok(Fixture::Scores(printed_scores())),
        _ => Err(GnssError::UnknownFixture { name: name.to_owned() }),
    }
}

/// Looks up a fixture that is a plain table.
pub fn table(name: &str) -> Result<GnSoftSet, GnssError> {
    match fixture(name)? {
        Fixture::Table(doc) => Ok(doc.set),
        _ => Err(GnssError::UnknownFixture { name: name.to_owned() }),
    }
}

fn five_blouses() -> Universe {
    Universe::from_ids(&["b1", "b2", "b3", "b4", "b5"]).unwrap()
}

fn wish_params() -> Vec<ParamKey> {
    ["cheap", "colorful", "polystyreneing", "costly", "bright"]
        .iter()
        .map(|name| ParamKey::atom(*name).unwrap())
        .collect()
}

/// The published comparison matrix, including its two known-bad cells.
pub fn printed_matrix() -> ComparisonMatrix {
    ComparisonMatrix::from_parts(
        five_blouses(),
        wish_params(),
        vec![
            vec![0, -2, 3, 0, 2],
            vec![-1, 1, -2, 2, 2],
            vec![3, 5, 0, 4, -1],
            vec![6, 3, 3, 3, 4],
            vec![7, 2, 6, -1, 3],
        ],
    )
    .unwrap()
}

/// The published score column, the row sums of [`printed_matrix`].
pub fn printed_scores() -> ScoreVector {
    ScoreVector::from_parts(five_blouses(), vec![3, 2, 11, 19, 17]).unwrap()
}
