//! Definitional checks for resolving and doubly resolving sets, plus the
//! pair-coverage table the exact solver searches over.
//!
//! The checks compare raw distance vectors and stay deliberately independent
//! of the solver's bitset machinery, so they can serve as its oracle.

use crate::bitset::Bitset;
use crate::graph::{DistanceMatrix, Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolveError {
    #[error("doubly resolving needs at least two vertices, got {0}")]
    TooSmall(usize),
}

/// True when every vertex has a distinct vector of distances to `s`.
/// The empty set resolves only the single-vertex graph.
pub fn resolves(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> bool {
    debug_assert_eq!(g.n(), dm.n());
    let n = g.n();
    if s.is_empty() {
        return n == 1;
    }
    let mut keys: Vec<Vec<u32>> = (0..n)
        .map(|v| s.iter().map(|&x| dm.get(v, x)).collect())
        .collect();
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

/// All unordered pairs `s` fails to separate, ascending.
pub fn unresolved_pairs(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> Vec<(usize, usize)> {
    debug_assert_eq!(g.n(), dm.n());
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    let key = |v: usize| -> Vec<u32> { s.iter().map(|&x| dm.get(v, x)).collect() };
    order.sort_by_key(|&v| key(v));
    let mut pairs = Vec::new();
    let mut run_start = 0;
    for i in 1..=n {
        if i == n || key(order[i]) != key(order[run_start]) {
            for a in run_start..i {
                for b in a + 1..i {
                    let (v, w) = (order[a], order[b]);
                    pairs.push((v.min(w), v.max(w)));
                }
            }
            run_start = i;
        }
    }
    pairs.sort_unstable();
    pairs
}

/// True when for every vertex pair `(v, w)` the gap `d(v, x) - d(w, x)` is
/// not constant over `x` in `s`. Needs `|s| >= 2`.
pub fn doubly_resolves(g: &Graph, dm: &DistanceMatrix, s: &VertexSet) -> Result<bool, ResolveError> {
    debug_assert_eq!(g.n(), dm.n());
    if s.len() < 2 {
        return Err(ResolveError::TooSmall(s.len()));
    }
    let n = g.n();
    for v in 0..n {
        for w in v + 1..n {
            let gap = |x: usize| dm.get(v, x) as i64 - dm.get(w, x) as i64;
            let first = gap(*s.iter().next().unwrap());
            if s.iter().skip(1).all(|&x| gap(x) == first) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For every unordered vertex pair, the set of vertices whose distance to the
/// two ends differs. Resolving-set search is exactly set cover over these.
pub struct PairCoverTable {
    n: usize,
    pairs: Vec<(u32, u32)>,
    cover: Vec<Bitset>,
}

impl PairCoverTable {
    pub fn build(g: &Graph, dm: &DistanceMatrix) -> Self {
        let n = g.n();
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        let mut cover = Vec::with_capacity(pairs.capacity());
        for v in 0..n {
            for w in v + 1..n {
                let mut c = Bitset::new(n);
                let (rv, rw) = (dm.row(v), dm.row(w));
                for x in 0..n {
                    if rv[x] != rw[x] {
                        c.set(x);
                    }
                }
                // v itself always separates the pair, so no cover is empty.
                debug_assert!(c.get(v) && c.get(w));
                pairs.push((v as u32, w as u32));
                cover.push(c);
            }
        }
        PairCoverTable { n, pairs, cover }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_pairs(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, p: usize) -> (usize, usize) {
        let (v, w) = self.pairs[p];
        (v as usize, w as usize)
    }

    #[inline]
    pub fn pair_index(&self, v: usize, w: usize) -> usize {
        debug_assert!(v < w && w < self.n);
        v * (2 * self.n - v - 1) / 2 + (w - v - 1)
    }

    pub fn cover(&self, p: usize) -> &Bitset {
        &self.cover[p]
    }

    /// Transposed view: for each vertex, the set of pairs it separates.
    pub fn vertex_masks(&self) -> Vec<Bitset> {
        let mut masks = vec![Bitset::new(self.num_pairs()); self.n];
        for (p, c) in self.cover.iter().enumerate() {
            for x in c.iter_ones() {
                masks[x].set(p);
            }
        }
        masks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};
    use crate::graph::all_pairs_distances;

    fn dist(spec: &FamilySpec) -> (Graph, DistanceMatrix) {
        let g = generate(spec).unwrap();
        let dm = all_pairs_distances(&g);
        (g, dm)
    }

    #[test]
    fn single_vertex_resolved_by_empty_set() {
        let (g, dm) = dist(&FamilySpec::Path { n: 1 });
        assert!(resolves(&g, &dm, &VertexSet::empty()));
        let (g2, dm2) = dist(&FamilySpec::Path { n: 2 });
        assert!(!resolves(&g2, &dm2, &VertexSet::empty()));
    }

    #[test]
    fn c4_single_vertex_leaves_one_pair() {
        let (g, dm) = dist(&FamilySpec::Cycle { n: 4 });
        let s = VertexSet::new(vec![0]);
        assert!(!resolves(&g, &dm, &s));
        assert_eq!(unresolved_pairs(&g, &dm, &s), vec![(1, 3)]);
    }

    #[test]
    fn cycle_pair_resolves_iff_not_antipodal() {
        let (g, dm) = dist(&FamilySpec::Cycle { n: 8 });
        for i in 1..8 {
            let s = VertexSet::new(vec![0, i]);
            assert_eq!(resolves(&g, &dm, &s), i != 4, "offset {i}");
        }
        // Odd cycle: every pair of distinct vertices resolves.
        let (g5, dm5) = dist(&FamilySpec::Cycle { n: 5 });
        for i in 1..5 {
            assert!(resolves(&g5, &dm5, &VertexSet::new(vec![0, i])));
        }
    }

    #[test]
    fn antipodal_pair_does_not_doubly_resolve() {
        let (g, dm) = dist(&FamilySpec::Cycle { n: 8 });
        let anti = VertexSet::new(vec![0, 4]);
        assert_eq!(doubly_resolves(&g, &dm, &anti), Ok(false));
        // psi(C_8) = 3: some triple works.
        assert_eq!(
            doubly_resolves(&g, &dm, &VertexSet::new(vec![0, 1, 4])),
            Ok(true)
        );
        // psi(C_5) = 2 via the first and third vertex.
        let (g5, dm5) = dist(&FamilySpec::Cycle { n: 5 });
        assert_eq!(
            doubly_resolves(&g5, &dm5, &VertexSet::new(vec![0, 2])),
            Ok(true)
        );
    }

    #[test]
    fn doubly_needs_two_vertices() {
        let (g, dm) = dist(&FamilySpec::Path { n: 3 });
        assert_eq!(
            doubly_resolves(&g, &dm, &VertexSet::new(vec![0])),
            Err(ResolveError::TooSmall(1))
        );
    }

    #[test]
    fn doubly_implies_singly() {
        let (g, dm) = dist(&FamilySpec::Cycle { n: 7 });
        for a in 0..7 {
            for b in a + 1..7 {
                let s = VertexSet::new(vec![a, b]);
                if doubly_resolves(&g, &dm, &s).unwrap() {
                    assert!(resolves(&g, &dm, &s));
                }
            }
        }
    }

    #[test]
    fn cover_table_matches_definition() {
        let (g, dm) = dist(&FamilySpec::Cycle { n: 6 });
        let table = PairCoverTable::build(&g, &dm);
        assert_eq!(table.num_pairs(), 15);
        for p in 0..table.num_pairs() {
            let (v, w) = table.pair(p);
            assert_eq!(table.pair_index(v, w), p);
            for x in 0..6 {
                assert_eq!(table.cover(p).get(x), dm.get(v, x) != dm.get(w, x));
            }
            assert!(!table.cover(p).is_empty());
        }
        // Transpose agrees with the direct table.
        let masks = table.vertex_masks();
        for p in 0..table.num_pairs() {
            for x in 0..6 {
                assert_eq!(masks[x].get(p), table.cover(p).get(x));
            }
        }
    }

    #[test]
    fn unresolved_pairs_empty_iff_resolves() {
        let (g, dm) = dist(&FamilySpec::Hypercube { n: 3 });
        let good = VertexSet::new(vec![0, 1, 2]);
        assert_eq!(
            resolves(&g, &dm, &good),
            unresolved_pairs(&g, &dm, &good).is_empty()
        );
        let bad = VertexSet::new(vec![0, 7]);
        let pairs = unresolved_pairs(&g, &dm, &bad);
        assert!(!resolves(&g, &dm, &bad));
        assert!(!pairs.is_empty());
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
    }
}
