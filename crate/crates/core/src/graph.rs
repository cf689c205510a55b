//! Immutable simple graphs with BFS all-pairs distances.
//!
//! Vertices are `0..n`. Construction validates the edge list and rejects
//! disconnected input, so every downstream distance is a finite hop count.

use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph needs at least one vertex")]
    Empty,
    #[error("edge ({0}, {1}) is invalid for {2} vertices")]
    InvalidEdge(usize, usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// Finite connected simple graph. Neighbor lists are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Validates and assembles a graph: indices in range, no loops or duplicate
/// edges, connected, and label count (when given) matching `n`.
pub fn build_graph(
    n: usize,
    edges: &[(usize, usize)],
    labels: Option<Vec<String>>,
) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if let Some(ref l) = labels {
        if l.len() != n {
            return Err(GraphError::LabelCount {
                expected: n,
                got: l.len(),
            });
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n || u == v {
            return Err(GraphError::InvalidEdge(u, v, n));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    for (u, list) in adj.iter_mut().enumerate() {
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            let v = list.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
    }
    let g = Graph { n, adj, labels };
    if g.bfs_from(0).iter().any(|&d| d == u32::MAX) {
        return Err(GraphError::Disconnected);
    }
    Ok(g)
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) -> Result<(), GraphError> {
        if let Some(ref l) = labels {
            if l.len() != self.n {
                return Err(GraphError::LabelCount {
                    expected: self.n,
                    got: l.len(),
                });
            }
        }
        self.labels = labels;
        Ok(())
    }

    /// Vertex index carrying `label`, scanning in index order.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l == label)
    }

    fn bfs_from(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_tree(&self) -> bool {
        self.num_edges() == self.n - 1
    }

    /// A path graph: a tree with maximum degree at most 2 (includes `P_1`).
    pub fn is_path_graph(&self) -> bool {
        self.is_tree() && self.adj.iter().all(|l| l.len() <= 2)
    }

    /// Degree-1 vertices, ascending.
    pub fn leaves(&self) -> VertexSet {
        VertexSet::from_sorted(
            (0..self.n).filter(|&v| self.degree(v) == 1).collect(),
        )
    }
}

/// Dense all-pairs hop distances, one BFS per source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for src in 0..n {
        d.extend(g.bfs_from(src));
    }
    DistanceMatrix { n, d }
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u32] {
        &self.d[v * self.n..(v + 1) * self.n]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        *self.row(v).iter().max().unwrap()
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap()
    }
}

/// Sorted duplicate-free vertex list. Ordering is lexicographic on the sorted
/// contents, which is exactly the certificate canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    /// Wraps a list that is already sorted and duplicate free.
    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut merged = self.0.clone();
        merged.extend_from_slice(&other.0);
        VertexSet::new(merged)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build_graph(n, &edges, None).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(build_graph(0, &[], None), Err(GraphError::Empty));
        assert_eq!(
            build_graph(2, &[(0, 2)], None),
            Err(GraphError::InvalidEdge(0, 2, 2))
        );
        assert_eq!(
            build_graph(2, &[(1, 1)], None),
            Err(GraphError::InvalidEdge(1, 1, 2))
        );
        assert_eq!(
            build_graph(2, &[(0, 1), (1, 0)], None),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            build_graph(3, &[(0, 1)], None),
            Err(GraphError::Disconnected)
        );
        assert_eq!(
            build_graph(2, &[(0, 1)], Some(vec!["a".into()])),
            Err(GraphError::LabelCount {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn single_vertex_is_fine() {
        let g = build_graph(1, &[], None).unwrap();
        assert_eq!(g.n(), 1);
        assert!(g.is_path_graph());
        let dm = all_pairs_distances(&g);
        assert_eq!(dm.get(0, 0), 0);
    }

    #[test]
    fn cycle_distances_match_closed_form() {
        let n = 8;
        let dm = all_pairs_distances(&cycle(n));
        for u in 0..n {
            for v in 0..n {
                let around = (u as i64 - v as i64).unsigned_abs() as usize;
                assert_eq!(dm.get(u, v) as usize, around.min(n - around));
                assert_eq!(dm.get(u, v), dm.get(v, u));
            }
        }
        assert_eq!(dm.diameter(), 4);
    }

    #[test]
    fn distance_one_iff_edge() {
        let g = cycle(5);
        let dm = all_pairs_distances(&g);
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn tree_and_leaf_helpers() {
        // Star K_{1,3}: center 0.
        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)], None).unwrap();
        assert!(star.is_tree());
        assert!(!star.is_path_graph());
        assert_eq!(star.leaves().as_slice(), &[1, 2, 3]);

        let path = build_graph(4, &[(0, 1), (1, 2), (2, 3)], None).unwrap();
        assert!(path.is_path_graph());
        assert!(!cycle(4).is_tree());
    }

    #[test]
    fn vertex_set_order_is_lexicographic() {
        let a = VertexSet::new(vec![9, 3, 0]);
        let b = VertexSet::new(vec![0, 4, 5]);
        assert_eq!(a.as_slice(), &[0, 3, 9]);
        assert!(a < b);
        assert!(a.contains(3) && !a.contains(1));
    }
}
