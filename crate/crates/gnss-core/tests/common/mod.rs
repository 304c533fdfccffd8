//! Shared proptest strategies for the integration suites.
#![allow(dead_code)]

use gnss_core::{ConstraintMode, Degree, GnSoftSet, ParamKey, Triple, Universe};
use proptest::prelude::*;

pub fn arb_degree() -> impl Strategy<Value = Degree> + Clone {
    prop_oneof![
        4 => 0u16..=10_000,
        1 => proptest::sample::select(vec![0u16, 1, 4_999, 5_000, 5_001, 9_999, 10_000]),
    ]
    .prop_map(|v| Degree::from_scaled(v).unwrap())
}

/// Any triple at all, including ones outside the default constraint.
pub fn arb_free_triple() -> impl Strategy<Value = Triple> + Clone {
    (arb_degree(), arb_degree(), arb_degree()).prop_map(|(t, i, f)| Triple::new(t, i, f))
}

/// A triple satisfying the default constraint.
pub fn arb_triple() -> impl Strategy<Value = Triple> + Clone {
    arb_free_triple().prop_filter("within the default bound", |v| {
        v.violation(ConstraintMode::GnsMin).is_none()
    })
}

pub fn universe(n_objects: usize) -> Universe {
    let ids: Vec<String> = (0..n_objects).map(|k| format!("o{k}")).collect();
    Universe::from_ids(&ids).unwrap()
}

fn build(n_objects: usize, picks: Vec<(usize, Vec<Triple>)>) -> GnSoftSet {
    let columns = picks
        .into_iter()
        .map(|(k, cells)| (ParamKey::atom(format!("p{k}")).unwrap(), cells))
        .collect();
    GnSoftSet::new(universe(n_objects), columns).unwrap()
}

/// `count` sets over one shared universe. Every set carries parameter `p0`,
/// so pairwise intersections are never empty; the rest of the parameter pool
/// is sampled and shuffled per set.
pub fn arb_shared_sets(count: usize) -> impl Strategy<Value = Vec<GnSoftSet>> {
    (1usize..=4, 0usize..=4).prop_flat_map(move |(n_objects, extra)| {
        let column = || proptest::collection::vec(arb_triple(), n_objects);
        let one = (
            column(),
            proptest::collection::vec(proptest::option::weighted(0.6, column()), extra),
        )
            .prop_map(|(first, rest)| {
                let mut picks = vec![(0usize, first)];
                picks.extend(
                    rest.into_iter()
                        .enumerate()
                        .filter_map(|(k, cells)| cells.map(|cells| (k + 1, cells))),
                );
                picks
            })
            .prop_shuffle()
            .prop_map(move |picks| build(n_objects, picks));
        proptest::collection::vec(one, count)
    })
}

/// `count` sets over one shared universe with identical parameter lists.
pub fn arb_same_domain_sets(count: usize) -> impl Strategy<Value = Vec<GnSoftSet>> {
    (1usize..=4, 1usize..=4).prop_flat_map(move |(n_objects, n_params)| {
        let grid = proptest::collection::vec(
            proptest::collection::vec(arb_triple(), n_objects),
            n_params,
        );
        proptest::collection::vec(grid, count).prop_map(move |sets| {
            sets.into_iter()
                .map(|columns| build(n_objects, columns.into_iter().enumerate().collect()))
                .collect()
        })
    })
}

/// A single set with free-form cells (no constraint), for machinery that
/// never inspects constraint validity.
pub fn arb_free_set() -> impl Strategy<Value = GnSoftSet> {
    (1usize..=5, 1usize..=4).prop_flat_map(move |(n_objects, n_params)| {
        proptest::collection::vec(
            proptest::collection::vec(arb_free_triple(), n_objects),
            n_params,
        )
        .prop_map(move |columns| build(n_objects, columns.into_iter().enumerate().collect()))
    })
}

/// Arbitrary parameter keys: possibly negated atoms nested into pairs.
pub fn arb_param() -> impl Strategy<Value = ParamKey> {
    let leaf = ("[a-z]{1,6}", any::<bool>()).prop_map(|(name, negated)| {
        let atom = ParamKey::atom(name).unwrap();
        if negated { atom.negate() } else { atom }
    });
    leaf.prop_recursive(3, 8, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| ParamKey::pair(a, b))
    })
}
