//! Exhaustive catalogs of small graphs, used as ground truth by the
//! verification suites.
//!
//! Two independent enumerations are kept deliberately separate: connected
//! graphs are canonicalized by minimizing the adjacency bitstring over all
//! vertex permutations, trees by a center-rooted subtree encoding. Each
//! catalog is checked against its known count sequence, so a bug in either
//! canonical form shows up as a count mismatch rather than silent duplicates.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::graph::{build_graph, Graph};

/// Largest vertex count covered by [`connected_graphs`].
pub const MAX_CONNECTED_N: usize = 7;
/// Largest vertex count covered by [`trees`].
pub const MAX_TREE_N: usize = 10;

/// Number of connected graphs on 1..=7 vertices, up to isomorphism.
pub const CONNECTED_COUNTS: [usize; MAX_CONNECTED_N] = [1, 1, 2, 6, 21, 112, 853];
/// Number of trees on 1..=10 vertices, up to isomorphism.
pub const TREE_COUNTS: [usize; MAX_TREE_N] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

/// All connected graphs on `n` vertices up to isomorphism, in a fixed
/// deterministic order.
///
/// Panics if `n` is 0 or exceeds [`MAX_CONNECTED_N`]; the enumeration cost
/// grows too fast to go further.
pub fn connected_graphs(n: usize) -> &'static [Graph] {
    assert!(
        (1..=MAX_CONNECTED_N).contains(&n),
        "connected-graph catalog covers 1..={MAX_CONNECTED_N} vertices, got {n}"
    );
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    &LEVELS.get_or_init(build_connected_levels)[n - 1]
}

/// All trees on `n` vertices up to isomorphism, in a fixed deterministic
/// order.
///
/// Panics if `n` is 0 or exceeds [`MAX_TREE_N`].
pub fn trees(n: usize) -> &'static [Graph] {
    assert!(
        (1..=MAX_TREE_N).contains(&n),
        "tree catalog covers 1..={MAX_TREE_N} vertices, got {n}"
    );
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    &LEVELS.get_or_init(build_tree_levels)[n - 1]
}

// Connected graphs are grown one vertex at a time: every connected graph has
// a vertex whose removal leaves it connected (any leaf of a spanning tree),
// so attaching a new vertex to every nonempty neighborhood of every smaller
// catalog entry reaches everything. Candidates are deduplicated through the
// canonical bitmask.
fn build_connected_levels() -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(MAX_CONNECTED_N);
    let mut masks: Vec<u32> = vec![0];
    levels.push(masks_to_graphs(1, &masks));
    for n in 2..=MAX_CONNECTED_N {
        let mut seen: BTreeMap<u32, ()> = BTreeMap::new();
        for &prev in &masks {
            // The triangular bit layout depends on n, so re-encode the
            // smaller graph's edges before adding the new vertex.
            let mut base = 0u32;
            for (i, j) in mask_edges(n - 1, prev) {
                base |= 1 << pair_bit(i, j, n);
            }
            for neighborhood in 1u32..(1 << (n - 1)) {
                let mut mask = base;
                for u in 0..n - 1 {
                    if neighborhood & (1 << u) != 0 {
                        mask |= 1 << pair_bit(u, n - 1, n);
                    }
                }
                seen.entry(canonical_mask(n, mask)).or_insert(());
            }
        }
        masks = seen.into_keys().collect();
        levels.push(masks_to_graphs(n, &masks));
    }
    levels
}

// Bit position of the edge {i, j} (i < j) in the packed upper triangle.
fn pair_bit(i: usize, j: usize, n: usize) -> u32 {
    debug_assert!(i < j && j < n);
    (i * (2 * n - i - 1) / 2 + (j - i - 1)) as u32
}

// Minimum of the adjacency bitmask over all vertex permutations. n <= 7
// keeps this at no more than 5040 relabelings per graph.
fn canonical_mask(n: usize, mask: u32) -> u32 {
    let edges = mask_edges(n, mask);
    let mut perm: [usize; MAX_CONNECTED_N] = [0; MAX_CONNECTED_N];
    for (v, slot) in perm.iter_mut().enumerate().take(n) {
        *slot = v;
    }
    let mut best = relabeled_mask(n, &edges, &perm);
    // Heap's algorithm, iterative form.
    let mut stack = [0usize; MAX_CONNECTED_N];
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            best = best.min(relabeled_mask(n, &edges, &perm));
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    best
}

fn relabeled_mask(n: usize, edges: &[(usize, usize)], perm: &[usize]) -> u32 {
    let mut mask = 0u32;
    for &(u, v) in edges {
        let (a, b) = (perm[u], perm[v]);
        mask |= 1 << pair_bit(a.min(b), a.max(b), n);
    }
    mask
}

fn mask_edges(n: usize, mask: u32) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    for i in 0..n {
        for j in i + 1..n {
            if mask & (1 << pair_bit(i, j, n)) != 0 {
                edges.push((i, j));
            }
        }
    }
    edges
}

fn masks_to_graphs(n: usize, masks: &[u32]) -> Vec<Graph> {
    masks
        .iter()
        .map(|&mask| {
            build_graph(n, &mask_edges(n, mask), None)
                .expect("catalog entries are connected by construction")
        })
        .collect()
}

// Trees are grown by leaf addition: every tree with at least two vertices
// has a leaf, so attaching a new leaf to every vertex of every smaller tree
// reaches everything. Deduplication goes through the rooted encoding below,
// which is a different canonical form than the one for general graphs.
fn build_tree_levels() -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(MAX_TREE_N);
    let mut edge_lists: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    levels.push(edge_lists_to_graphs(1, &edge_lists));
    for n in 2..=MAX_TREE_N {
        let mut seen: BTreeMap<Vec<u8>, Vec<(usize, usize)>> = BTreeMap::new();
        for prev in &edge_lists {
            for attach in 0..n - 1 {
                let mut edges = prev.clone();
                edges.push((attach, n - 1));
                seen.entry(tree_code(n, &edges)).or_insert(edges);
            }
        }
        edge_lists = seen.into_values().collect();
        levels.push(edge_lists_to_graphs(n, &edge_lists));
    }
    levels
}

// Canonical code of a free tree: root at each center, encode subtrees
// bottom-up with sorted child codes, and keep the smaller of the at most
// two center encodings.
fn tree_code(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    centers(n, &adj)
        .into_iter()
        .map(|c| rooted_code(c, usize::MAX, &adj))
        .min()
        .expect("every tree has a center")
}

// Peel leaves layer by layer; the last one or two vertices standing are the
// centers.
fn centers(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    if n == 1 {
        return vec![0];
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &u in &adj[v] {
                if degree[u] > 0 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

fn rooted_code(v: usize, parent: usize, adj: &[Vec<usize>]) -> Vec<u8> {
    let mut child_codes: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted_code(u, v, adj))
        .collect();
    child_codes.sort();
    let mut code = Vec::with_capacity(2 + child_codes.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    for child in child_codes {
        code.extend_from_slice(&child);
    }
    code.push(b')');
    code
}

fn edge_lists_to_graphs(n: usize, edge_lists: &[Vec<(usize, usize)>]) -> Vec<Graph> {
    edge_lists
        .iter()
        .map(|edges| build_graph(n, edges, None).expect("catalog entries are trees by construction"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts_match_known_sequence() {
        for n in 1..=MAX_CONNECTED_N {
            assert_eq!(
                connected_graphs(n).len(),
                CONNECTED_COUNTS[n - 1],
                "connected graphs on {n} vertices"
            );
        }
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        for n in 1..=MAX_TREE_N {
            assert_eq!(trees(n).len(), TREE_COUNTS[n - 1], "trees on {n} vertices");
        }
    }

    #[test]
    fn four_vertex_graphs_have_the_known_edge_counts() {
        let mut edge_counts: Vec<usize> =
            connected_graphs(4).iter().map(Graph::num_edges).collect();
        edge_counts.sort_unstable();
        // Path, star, cycle, paw, diamond, K_4.
        assert_eq!(edge_counts, [3, 3, 4, 4, 5, 6]);
    }

    #[test]
    fn tree_entries_in_the_graph_catalog_agree_with_the_tree_catalog() {
        // The two canonical forms are independent, so agreement of the two
        // tree counts cross-checks both enumerations.
        for n in 1..=MAX_CONNECTED_N {
            let from_graphs = connected_graphs(n).iter().filter(|g| g.is_tree()).count();
            assert_eq!(from_graphs, trees(n).len(), "trees on {n} vertices");
        }
    }

    #[test]
    fn every_tree_level_has_one_path_and_one_star() {
        for n in 2..=MAX_TREE_N {
            let paths = trees(n).iter().filter(|t| t.is_path_graph()).count();
            assert_eq!(paths, 1, "paths on {n} vertices");
            let stars = trees(n)
                .iter()
                .filter(|t| (0..t.n()).any(|v| t.degree(v) == n - 1))
                .count();
            assert_eq!(stars, 1, "stars on {n} vertices");
        }
    }

    #[test]
    fn catalog_order_is_deterministic() {
        let first: Vec<Vec<(usize, usize)>> = trees(6)
            .iter()
            .map(|t| t.edges().collect::<Vec<_>>())
            .collect();
        let again: Vec<Vec<(usize, usize)>> = trees(6)
            .iter()
            .map(|t| t.edges().collect::<Vec<_>>())
            .collect();
        assert_eq!(first, again);
    }
}
