//! Cartesian products with a fixed row-major vertex order.
//!
//! The product of `G` (n_g vertices) and `H` (n_h vertices) has vertex
//! `(a, v)` at index `a * n_h + v` and label `"a:v"`. Distances add
//! coordinatewise: `d((a, v), (b, w)) = d_G(a, b) + d_H(v, w)`.

use crate::graph::{build_graph, Graph, GraphError, VertexSet};
use crate::VERTEX_LIMIT;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProductError {
    #[error("product would have {0} vertices, over the {1} limit")]
    SizeOverflow(usize, usize),
}

/// Row-major index bookkeeping for a two-factor product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductLabeling {
    n_g: usize,
    n_h: usize,
}

/// Which factor to keep when projecting a product vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl ProductLabeling {
    pub fn new(n_g: usize, n_h: usize) -> Self {
        ProductLabeling { n_g, n_h }
    }

    pub fn n_g(&self) -> usize {
        self.n_g
    }

    pub fn n_h(&self) -> usize {
        self.n_h
    }

    #[inline]
    pub fn index(&self, a: usize, v: usize) -> usize {
        debug_assert!(a < self.n_g && v < self.n_h);
        a * self.n_h + v
    }

    #[inline]
    pub fn factors(&self, idx: usize) -> (usize, usize) {
        debug_assert!(idx < self.n_g * self.n_h);
        (idx / self.n_h, idx % self.n_h)
    }

    pub fn label(&self, idx: usize) -> String {
        let (a, v) = self.factors(idx);
        format!("{a}:{v}")
    }
}

/// Builds `g` box `h`. Fails when the product would exceed [`VERTEX_LIMIT`].
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductLabeling), ProductError> {
    let n = g
        .n()
        .checked_mul(h.n())
        .filter(|&n| n <= VERTEX_LIMIT)
        .ok_or(ProductError::SizeOverflow(
            g.n().saturating_mul(h.n()),
            VERTEX_LIMIT,
        ))?;
    let labeling = ProductLabeling::new(g.n(), h.n());
    let mut edges = Vec::with_capacity(g.n() * h.num_edges() + h.n() * g.num_edges());
    for a in 0..g.n() {
        for (v, w) in h.edges() {
            edges.push((labeling.index(a, v), labeling.index(a, w)));
        }
    }
    for (a, b) in g.edges() {
        for v in 0..h.n() {
            edges.push((labeling.index(a, v), labeling.index(b, v)));
        }
    }
    let labels = (0..n).map(|i| labeling.label(i)).collect();
    let product = build_graph(n, &edges, Some(labels)).unwrap_or_else(|e: GraphError| {
        // Factors are connected graphs, so the product is a valid connected graph.
        unreachable!("product construction broke its own invariant: {e}")
    });
    Ok((product, labeling))
}

/// Left-associated iterated product `f_0 box f_1 box ...`.
pub fn product_many(factors: &[&Graph]) -> Result<Graph, ProductError> {
    let (first, rest) = factors.split_first().expect("at least one factor");
    let mut acc = (*first).clone();
    for f in rest {
        acc = cartesian_product(&acc, f)?.0;
    }
    Ok(acc)
}

/// Projects product vertices onto one factor, deduplicating.
pub fn project(s: &VertexSet, labeling: &ProductLabeling, side: Side) -> VertexSet {
    s.iter()
        .map(|&idx| {
            let (a, v) = labeling.factors(idx);
            match side {
                Side::Left => a,
                Side::Right => v,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;
    use crate::generate::{generate, FamilySpec};

    #[test]
    fn grid_2x3_shape_and_labels() {
        let p2 = generate(&FamilySpec::Path { n: 2 }).unwrap();
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let (g, lab) = cartesian_product(&p2, &p3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.num_edges(), 7);
        assert_eq!(lab.index(1, 2), 5);
        assert_eq!(lab.factors(5), (1, 2));
        assert_eq!(g.label(5), Some("1:2"));
    }

    #[test]
    fn product_distances_add() {
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let dg = all_pairs_distances(&c5);
        let dh = all_pairs_distances(&p3);
        let (g, lab) = cartesian_product(&c5, &p3).unwrap();
        let dp = all_pairs_distances(&g);
        for a in 0..5 {
            for v in 0..3 {
                for b in 0..5 {
                    for w in 0..3 {
                        assert_eq!(
                            dp.get(lab.index(a, v), lab.index(b, w)),
                            dg.get(a, b) + dh.get(v, w)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn projection_dedups() {
        let lab = ProductLabeling::new(4, 5);
        let s = VertexSet::new(vec![lab.index(0, 1), lab.index(0, 3), lab.index(2, 3)]);
        assert_eq!(project(&s, &lab, Side::Left).as_slice(), &[0, 2]);
        assert_eq!(project(&s, &lab, Side::Right).as_slice(), &[1, 3]);
    }

    #[test]
    fn overflow_is_reported() {
        let big = generate(&FamilySpec::Path { n: 400 }).unwrap();
        let err = cartesian_product(&big, &big).unwrap_err();
        assert_eq!(err, ProductError::SizeOverflow(160_000, VERTEX_LIMIT));
    }
}
