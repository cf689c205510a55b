//! Explicit resolving sets for products, assembled from factor data instead
//! of searched for.
//!
//! Both constructions check their inputs and verify the assembled set in
//! debug builds. They give proven upper bounds; the result is not minimum in
//! general.

use crate::graph::{all_pairs_distances, Graph, VertexSet};
use crate::product::ProductLabeling;
use crate::resolve::{doubly_resolves, resolves};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

fn fail(detail: impl Into<String>) -> ConstructError {
    ConstructError::PreconditionFailed(detail.into())
}

/// Resolving set of `G` box `H` from a resolving set `S` of `G` and a doubly
/// resolving set `T` of `H`: the cross consisting of `T` inside the column of
/// the least `s` in `S` and `S` inside the row of the least `t` in `T`,
/// `|S| + |T| - 1` vertices in total.
pub fn construct_product_resolving(
    g: &Graph,
    h: &Graph,
    basis_g: &VertexSet,
    drs_h: &VertexSet,
) -> Result<VertexSet, ConstructError> {
    let dg = all_pairs_distances(g);
    let dh = all_pairs_distances(h);
    if !resolves(g, &dg, basis_g) {
        return Err(fail(format!("{basis_g} does not resolve the left factor")));
    }
    match doubly_resolves(h, &dh, drs_h) {
        Ok(true) => {}
        Ok(false) => {
            return Err(fail(format!(
                "{drs_h} does not doubly resolve the right factor"
            )));
        }
        Err(e) => return Err(fail(e.to_string())),
    }
    // The cross pivots on a vertex of each set, so a one-vertex left factor
    // (empty basis) has no construction; its product is plain H anyway.
    let Some(&s) = basis_g.iter().next() else {
        return Err(fail("the left resolving set must be non-empty"));
    };
    let labeling = ProductLabeling::new(g.n(), h.n());
    let t = *drs_h.iter().next().expect("doubly resolving sets are non-empty");
    let x: VertexSet = drs_h
        .iter()
        .map(|&v| labeling.index(s, v))
        .chain(basis_g.iter().map(|&a| labeling.index(a, t)))
        .collect();
    debug_assert_eq!(x.len(), basis_g.len() + drs_h.len() - 1);
    debug_assert!(verify_product_set(g, h, &x));
    Ok(x)
}

/// Resolving set of `K_n` box `G` from a resolving set `S` of `G`:
/// `max(n - 1, 2 |S|)` vertices arranged so that every clique row except a
/// fixed one holds a chosen vertex and every column of `S` holds at least two.
///
/// Rows are the clique factor (the left, major side of the labeling). With an
/// empty `S` the graph `G` is a single vertex and the product is the clique
/// itself, where the rows other than the fixed one do the resolving.
pub fn construct_clique_product_resolving(
    n_clique: usize,
    g: &Graph,
    basis_g: &VertexSet,
) -> Result<VertexSet, ConstructError> {
    if n_clique < 1 {
        return Err(fail("clique needs at least one vertex"));
    }
    let dg = all_pairs_distances(g);
    if !resolves(g, &dg, basis_g) {
        return Err(fail(format!("{basis_g} does not resolve the factor")));
    }
    let labeling = ProductLabeling::new(n_clique, g.n());
    let b = basis_g.len();
    if b == 0 {
        // Only a one-vertex graph has an empty resolving set.
        let t: VertexSet = (1..n_clique).map(|a| labeling.index(a, 0)).collect();
        debug_assert!(verify_clique_product_set(n_clique, g, &t));
        return Ok(t);
    }
    if n_clique == 1 {
        return Err(fail(
            "a one-row layout cannot put two rows in each column; use the basis itself",
        ));
    }
    let cols = basis_g.as_slice();
    let t: VertexSet = if n_clique - 1 >= 2 * b {
        // One vertex per non-fixed row, cycling through the columns, so each
        // column gets at least two.
        (1..n_clique)
            .map(|row| labeling.index(row, cols[(row - 1) % b]))
            .collect()
    } else if n_clique == 2 {
        // Both rows in every column; the fixed row 0 may be used since only
        // the other rows need coverage.
        (0..2 * b)
            .map(|i| labeling.index(i % 2, cols[i / 2]))
            .collect()
    } else {
        // Two cells per column on rows 1..n, consecutive rows mod n - 1, so
        // the pair in a column is always distinct and the first n - 1 cells
        // cover every non-fixed row.
        (0..2 * b)
            .map(|i| labeling.index(1 + i % (n_clique - 1), cols[i / 2]))
            .collect()
    };
    debug_assert_eq!(t.len(), (n_clique - 1).max(2 * b));
    debug_assert!(verify_clique_product_set(n_clique, g, &t));
    Ok(t)
}

#[cfg(debug_assertions)]
fn verify_product_set(g: &Graph, h: &Graph, x: &VertexSet) -> bool {
    use crate::product::cartesian_product;
    let (p, _) = cartesian_product(g, h).expect("factors fit the vertex limit");
    resolves(&p, &all_pairs_distances(&p), x)
}

#[cfg(debug_assertions)]
fn verify_clique_product_set(n_clique: usize, g: &Graph, t: &VertexSet) -> bool {
    use crate::generate::{generate, FamilySpec};
    use crate::product::cartesian_product;
    let clique = generate(&FamilySpec::Complete { n: n_clique }).expect("valid clique");
    let (p, _) = cartesian_product(&clique, g).expect("factors fit the vertex limit");
    resolves(&p, &all_pairs_distances(&p), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};
    use crate::product::cartesian_product;
    use crate::solver::{metric_dimension, SolveOptions};

    fn family(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn cross_construction_sizes_and_resolution() {
        let p3 = family(FamilySpec::Path { n: 3 });
        let c5 = family(FamilySpec::Cycle { n: 5 });
        let x = construct_product_resolving(
            &p3,
            &c5,
            &VertexSet::new(vec![0]),
            &VertexSet::new(vec![0, 2]),
        )
        .unwrap();
        assert_eq!(x.len(), 2);
        let (prod, _) = cartesian_product(&p3, &c5).unwrap();
        let dm = all_pairs_distances(&prod);
        assert!(resolves(&prod, &dm, &x));

        let k4 = family(FamilySpec::Complete { n: 4 });
        let p2 = family(FamilySpec::Path { n: 2 });
        let x = construct_product_resolving(
            &k4,
            &p2,
            &VertexSet::new(vec![0, 1, 2]),
            &VertexSet::new(vec![0, 1]),
        )
        .unwrap();
        // Size |S| + |T| - 1; the true dimension of K_4 box P_2 is 3, so the
        // construction is an upper bound, not a minimum.
        assert_eq!(x.len(), 4);
        let (prod, _) = cartesian_product(&k4, &p2).unwrap();
        let dm = all_pairs_distances(&prod);
        assert!(resolves(&prod, &dm, &x));
        let exact = metric_dimension(&prod, &dm, &SolveOptions::default());
        assert_eq!(exact.value, Some(3));

        let k2 = family(FamilySpec::Complete { n: 2 });
        let x = construct_product_resolving(
            &k2,
            &k2,
            &VertexSet::new(vec![0]),
            &VertexSet::new(vec![0, 1]),
        )
        .unwrap();
        assert_eq!(x.len(), 2);
    }

    #[test]
    fn cross_construction_rejects_bad_inputs() {
        let p3 = family(FamilySpec::Path { n: 3 });
        let c6 = family(FamilySpec::Cycle { n: 6 });
        // The middle of a path resolves nothing.
        assert!(construct_product_resolving(
            &p3,
            &c6,
            &VertexSet::new(vec![1]),
            &VertexSet::new(vec![0, 1, 3])
        )
        .is_err());
        // Two vertices never doubly resolve an even cycle.
        assert!(construct_product_resolving(
            &p3,
            &c6,
            &VertexSet::new(vec![0]),
            &VertexSet::new(vec![0, 3])
        )
        .is_err());
    }

    #[test]
    fn clique_layout_sizes_and_resolution() {
        // Wide clique: n - 1 cells, one per non-fixed row.
        let c5 = family(FamilySpec::Cycle { n: 5 });
        let t = construct_clique_product_resolving(7, &c5, &VertexSet::new(vec![0, 1])).unwrap();
        assert_eq!(t.len(), 6);

        // Narrow clique: two cells per column.
        let t = construct_clique_product_resolving(3, &c5, &VertexSet::new(vec![0, 1])).unwrap();
        assert_eq!(t.len(), 4);

        // Two-row product uses the fixed row as well.
        let p3 = family(FamilySpec::Path { n: 3 });
        let t = construct_clique_product_resolving(2, &p3, &VertexSet::new(vec![0])).unwrap();
        assert_eq!(t.len(), 2);

        // K_3 box P_2 hits its exact dimension.
        let p2 = family(FamilySpec::Path { n: 2 });
        let t = construct_clique_product_resolving(3, &p2, &VertexSet::new(vec![0])).unwrap();
        assert_eq!(t.len(), 2);
        let k3 = family(FamilySpec::Complete { n: 3 });
        let (prod, _) = cartesian_product(&k3, &p2).unwrap();
        let dm = all_pairs_distances(&prod);
        assert!(resolves(&prod, &dm, &t));
        assert_eq!(
            metric_dimension(&prod, &dm, &SolveOptions::default()).value,
            Some(2)
        );

        // Degenerate factor: the product is the clique itself.
        let k1 = family(FamilySpec::Path { n: 1 });
        let t = construct_clique_product_resolving(5, &k1, &VertexSet::empty()).unwrap();
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn clique_layout_conditions_hold() {
        use crate::product::{project, Side};
        for (n, g, basis) in [
            (9, family(FamilySpec::Cycle { n: 4 }), vec![0, 1]),
            (4, family(FamilySpec::Cycle { n: 4 }), vec![0, 1]),
            (5, family(FamilySpec::Path { n: 4 }), vec![0]),
        ] {
            let basis = VertexSet::new(basis);
            let t = construct_clique_product_resolving(n, &g, &basis).unwrap();
            assert_eq!(t.len(), (n - 1).max(2 * basis.len()));
            let labeling = ProductLabeling::new(n, g.n());
            // Every non-fixed clique row appears.
            let rows = project(&t, &labeling, Side::Left);
            assert!((1..n).all(|row| rows.contains(row)));
            // Every basis column holds at least two chosen vertices.
            for &x in &basis {
                let count = t
                    .iter()
                    .filter(|&&idx| labeling.factors(idx).1 == x)
                    .count();
                assert!(count >= 2, "column {x} holds {count}");
            }
        }
    }

    #[test]
    fn clique_layout_rejects_bad_inputs() {
        let c6 = family(FamilySpec::Cycle { n: 6 });
        // Antipodal pair does not resolve an even cycle.
        assert!(
            construct_clique_product_resolving(4, &c6, &VertexSet::new(vec![0, 3])).is_err()
        );
        let p3 = family(FamilySpec::Path { n: 3 });
        assert!(construct_clique_product_resolving(0, &p3, &VertexSet::new(vec![0])).is_err());
        assert!(construct_clique_product_resolving(1, &p3, &VertexSet::new(vec![0])).is_err());
    }
}
