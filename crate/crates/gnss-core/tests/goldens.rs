//! The bundled tables reproduce each other under the operations, up to the
//! known published errata.

use gnss_core::decision::{comparison_matrix, comparison_matrix_seq, decide};
use gnss_core::tabio::diff::{diff_matrices, diff_scores, diff_tables};
use gnss_core::tabio::fixtures::{self, printed_matrix, printed_scores, ErrataCell, KNOWN_ERRATA};
use gnss_core::{GnSoftSet, ParamKey, Triple};

fn table(name: &str) -> GnSoftSet {
    fixtures::table(name).unwrap()
}

fn key(text: &str) -> ParamKey {
    text.parse().unwrap()
}

fn cell(text: &str) -> Triple {
    let set = gnss_core::tabio::csv::parse(
        &format!("U,x\no,\"{text}\"\n"),
        gnss_core::ConstraintMode::NeutrosophicOnly,
    )
    .unwrap();
    set.tables()[0].values()[0]
}

#[test]
fn union_reproduces_its_published_table() {
    let joined = table("table4").union(&table("table5")).unwrap();
    assert_eq!(joined, table("table6"));
    let report = diff_tables(&table("table6"), &joined).unwrap();
    assert_eq!(report.cells, 20);
    assert!(report.is_empty());
}

#[test]
fn intersection_differs_from_its_published_table_at_the_two_known_cells() {
    let met = table("table4").intersection(&table("table5")).unwrap();
    assert_eq!(met.params(), &[key("colorful")]);
    let report = diff_tables(&table("table7"), &met).unwrap();
    assert_eq!(report.cells, 5);
    assert_eq!(report.entries.len(), 2);

    assert_eq!(report.entries[0].object, "b3");
    assert_eq!(report.entries[0].expected, cell("(0.6, 0.3, 0.4)"));
    assert_eq!(report.entries[0].actual, cell("(0.5, 0.3, 0.4)"));
    assert_eq!(report.entries[1].object, "b4");
    assert_eq!(report.entries[1].expected, cell("(0.8, 0.2, 0.3)"));
    assert_eq!(report.entries[1].actual, cell("(0.2, 0.2, 0.3)"));

    for id in ["b1", "b2", "b5"] {
        assert_eq!(met.triple(&key("colorful"), id), table("table7").triple(&key("colorful"), id), "{id}");
    }
}

#[test]
fn the_and_product_reproduces_its_published_table() {
    let grid = table("table4").and(&table("table5")).unwrap();
    assert_eq!(grid, table("table8"));
    let report = diff_tables(&table("table8"), &grid).unwrap();
    assert_eq!(report.cells, 30);
    assert!(report.is_empty());
    assert_eq!(grid, table("table4").and_seq(&table("table5")).unwrap());
}

#[test]
fn the_or_product_reproduces_its_published_table() {
    let grid = table("table4").or(&table("table5")).unwrap();
    assert_eq!(grid, table("table9"));
    let report = diff_tables(&table("table9"), &grid).unwrap();
    assert_eq!(report.cells, 30);
    assert!(report.is_empty());
    assert_eq!(grid, table("table4").or_seq(&table("table5")).unwrap());
}

#[test]
fn complement_reproduces_its_published_table_and_is_involutive() {
    let complement = table("table1").complement();
    assert_eq!(complement, table("ex3_11"));
    assert!(diff_tables(&table("ex3_11"), &complement).unwrap().is_empty());
    assert_eq!(complement.complement(), table("table1"));
}

#[test]
fn not_params_negates_the_published_parameter_list() {
    let relabeled = table("table1").not_params();
    assert_eq!(relabeled.params(), table("ex3_11").params());
    assert_eq!(
        relabeled.tables()[0].values(),
        table("table1").tables()[0].values(),
        "cells must be untouched"
    );
}

#[test]
fn the_published_subset_pair_is_ordered_one_way() {
    let small = table("table2");
    let large = table("table3");
    assert!(small.is_subset_of(&large).unwrap());
    assert!(!large.is_subset_of(&small).unwrap());
    assert!(!small.soft_eq(&large).unwrap());
    for name in ["table1", "table2", "table3", "table10"] {
        assert!(table(name).is_subset_of(&table(name)).unwrap(), "{name}");
        assert!(table(name).soft_eq(&table(name)).unwrap(), "{name}");
    }
}

#[test]
fn the_all_zero_fixture_is_the_null_set() {
    let zero = table("ex3_13");
    assert!(zero.is_null());
    let built = GnSoftSet::null(zero.universe().clone(), zero.params().to_vec()).unwrap();
    assert_eq!(built, zero);
    assert!(!table("table1").is_null());
}

#[test]
fn the_distributivity_example_holds_and_matches_its_published_cells() {
    let (f, g, k) = (table("ex3_20_F"), table("ex3_20_G"), table("ex3_20_K"));
    let joined = f.union(&g).unwrap();
    assert_eq!(
        joined.tables()[0].values(),
        &[cell("(0.6, 0.2, 0.1)"), cell("(0.7, 0.2, 0.4)"), cell("(0.4, 0.1, 0.7)")]
    );
    let lhs = f.union(&g.intersection(&k).unwrap()).unwrap();
    let rhs = f.union(&g).unwrap().intersection(&f.union(&k).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(
        lhs.tables()[0].values(),
        &[cell("(0.6, 0.2, 0.1)"), cell("(0.4, 0.1, 0.5)"), cell("(0.4, 0.1, 0.7)")]
    );
}

#[test]
fn the_comparison_matrix_differs_from_the_published_one_at_the_two_known_cells() {
    let derived = comparison_matrix(&table("table10")).unwrap();
    assert_eq!(derived.rows()[0], vec![0, -2, 3, 4, 2]);
    assert_eq!(derived.rows()[1], vec![-1, 1, -2, 2, 2]);
    assert_eq!(derived.rows()[2], vec![3, 5, 0, 4, -1]);
    assert_eq!(derived.rows()[3], vec![6, 3, 3, 3, 4]);
    assert_eq!(derived.rows()[4], vec![1, 2, 6, -1, 3]);
    assert_eq!(derived, comparison_matrix_seq(&table("table10")).unwrap());

    let report = diff_matrices(&printed_matrix(), &derived).unwrap();
    assert_eq!(report.cells, 25);
    assert_eq!(report.entries.len(), 2);
    assert_eq!(report.entries[0].object, "b5");
    assert_eq!(report.entries[0].param.as_ref().unwrap().to_string(), "cheap");
    assert_eq!((report.entries[0].expected, report.entries[0].actual), (7, 1));
    assert_eq!(report.entries[1].object, "b1");
    assert_eq!(report.entries[1].param.as_ref().unwrap().to_string(), "costly");
    assert_eq!((report.entries[1].expected, report.entries[1].actual), (0, 4));
}

#[test]
fn derived_scores_differ_from_the_published_ones_only_where_the_matrix_does() {
    let derived = comparison_matrix(&table("table10")).unwrap().scores();
    assert_eq!(derived.scores(), &[7, 2, 11, 19, 11]);
    let report = diff_scores(&printed_scores(), &derived).unwrap();
    assert_eq!(report.entries.len(), 2);
    assert_eq!(report.entries[0].object, "b1");
    assert_eq!((report.entries[0].expected, report.entries[0].actual), (3, 7));
    assert_eq!(report.entries[1].object, "b5");
    assert_eq!((report.entries[1].expected, report.entries[1].actual), (17, 11));
}

#[test]
fn the_full_procedure_picks_the_published_winner() {
    let table10 = table("table10");
    let decision = decide(&table10, table10.params()).unwrap();
    assert_eq!(decision.scores.get("b4"), Some(19));
    assert_eq!(decision.ranking.winners().len(), 1);
    assert_eq!(decision.ranking.choice().unwrap(), "b4");
    assert!(!decision.ranking.is_tie());
    let order: Vec<_> = decision.ranking.entries().iter().map(|(id, s)| (id.as_str(), *s)).collect();
    assert_eq!(order, [("b4", 19), ("b3", 11), ("b5", 11), ("b1", 7), ("b2", 2)]);
}

#[test]
fn restricting_to_all_parameters_is_the_identity() {
    for name in ["table1", "table10", "table8"] {
        let set = table(name);
        assert_eq!(set.restrict(set.params()).unwrap(), set, "{name}");
    }
    let narrowed = table("table10").restrict(&[key("costly"), key("cheap")]).unwrap();
    assert_eq!(narrowed.params(), &[key("costly"), key("cheap")]);
    assert_eq!(
        narrowed.triple(&key("cheap"), "b1"),
        table("table10").triple(&key("cheap"), "b1")
    );
}

#[test]
fn the_errata_list_matches_what_recomputation_actually_finds() {
    let mut found: Vec<ErrataCell> = Vec::new();
    let met = table("table4").intersection(&table("table5")).unwrap();
    for entry in diff_tables(&table("table7"), &met).unwrap().entries {
        found.push(ErrataCell {
            fixture: "table7",
            object: ["b1", "b2", "b3", "b4", "b5"]
                .into_iter()
                .find(|id| entry.object == *id)
                .unwrap(),
            param: Some("colorful"),
        });
    }
    let derived = comparison_matrix(&table("table10")).unwrap();
    for entry in diff_matrices(&printed_matrix(), &derived).unwrap().entries {
        let object = ["b1", "b5"].into_iter().find(|id| entry.object == *id).unwrap();
        let param = ["cheap", "costly"]
            .into_iter()
            .find(|p| entry.param.as_ref().unwrap().to_string() == *p)
            .unwrap();
        found.push(ErrataCell { fixture: "table11", object, param: Some(param) });
    }
    for entry in diff_scores(&printed_scores(), &derived.scores()).unwrap().entries {
        let object = ["b1", "b5"].into_iter().find(|id| entry.object == *id).unwrap();
        found.push(ErrataCell { fixture: "scores", object, param: None });
    }
    assert_eq!(found, KNOWN_ERRATA);
}
