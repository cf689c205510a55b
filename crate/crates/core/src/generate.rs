//! Parametric family generators with pinned vertex orders.
//!
//! Orders are part of the contract so that certificates and labels are stable:
//! paths and cycles use walk order, hypercube and Hamming graphs list vectors
//! lexicographically (most significant coordinate first), the comb puts its
//! spine at `0..n` and the tooth of spine vertex `i` at `n + i`, and the
//! highly connected family lists all `v_i` before all `w_i` (the paper's
//! 1-based subscripts shifted down by one).

use crate::graph::{build_graph, Graph, GraphError};
use crate::product::product_many;
use crate::VERTEX_LIMIT;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("{family}: {reason}")]
    InvalidParams {
        family: &'static str,
        reason: String,
    },
    #[error("{family} instance would have {size} vertices, over the {limit} limit")]
    TooLarge {
        family: &'static str,
        size: usize,
        limit: usize,
    },
}

/// A graph family plus parameters, as accepted by `gen` on the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path `P_n`, `n >= 1`.
    Path { n: usize },
    /// Cycle `C_n`, `n >= 3`.
    Cycle { n: usize },
    /// Complete graph `K_n`, `n >= 1`.
    Complete { n: usize },
    /// Hypercube `Q_n`: binary vectors of length `n`, edges at Hamming
    /// distance 1. Vertex `i` is the big-endian binary expansion of `i`.
    Hypercube { n: usize },
    /// Hamming graph `H_{n,k}`: vectors in `{1..k}^n`, edges where exactly
    /// one coordinate differs. `H_{n,2}` is `Q_n` up to relabeling.
    Hamming { n: usize, k: usize },
    /// Grid: iterated product of paths, row-major vertex order.
    Grid { dims: Vec<usize> },
    /// Uniform random labeled tree on `n` vertices (Pruefer decode).
    TreeRandom { n: usize, seed: u64 },
    /// Comb `B_n`: path spine `0..n`, tooth `n + i` hanging off spine `i`.
    Comb { n: usize },
    /// Highly connected family `G_{n,k}` on `4kn` vertices: `v_i` at index
    /// `i - 1` and `w_i` at `2kn + i - 1` for `1 <= i <= 2kn`; edges
    /// `v_i w_i`, `v_i v_j` iff `|i - j| <= k`, and `w_i w_j` iff both sit in
    /// the same block of `k` consecutive subscripts. `G_{n,1}` is `B_{2n}`.
    Gnk { n: usize, k: usize },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Hypercube { .. } => "hypercube",
            FamilySpec::Hamming { .. } => "hamming",
            FamilySpec::Grid { .. } => "grid",
            FamilySpec::TreeRandom { .. } => "tree_random",
            FamilySpec::Comb { .. } => "comb",
            FamilySpec::Gnk { .. } => "gnk",
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Hypercube { n }
            | FamilySpec::Comb { n } => write!(f, "{} n={n}", self.family_name()),
            FamilySpec::Hamming { n, k } | FamilySpec::Gnk { n, k } => {
                write!(f, "{} n={n} k={k}", self.family_name())
            }
            FamilySpec::Grid { dims } => {
                let dims: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                write!(f, "grid dims={}", dims.join("x"))
            }
            FamilySpec::TreeRandom { n, seed } => write!(f, "tree_random n={n} seed={seed}"),
        }
    }
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GenerateError {
    GenerateError::InvalidParams {
        family,
        reason: reason.into(),
    }
}

fn check_size(family: &'static str, size: Option<usize>) -> Result<usize, GenerateError> {
    match size {
        Some(s) if s <= VERTEX_LIMIT => Ok(s),
        s => Err(GenerateError::TooLarge {
            family,
            size: s.unwrap_or(usize::MAX),
            limit: VERTEX_LIMIT,
        }),
    }
}

fn finish(n: usize, edges: Vec<(usize, usize)>, labels: Option<Vec<String>>) -> Graph {
    build_graph(n, &edges, labels).unwrap_or_else(|e: GraphError| {
        unreachable!("generator produced an invalid graph: {e}")
    })
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GenerateError> {
    match *spec {
        FamilySpec::Path { n } => {
            if n < 1 {
                return Err(invalid("path", "need n >= 1"));
            }
            check_size("path", Some(n))?;
            Ok(finish(n, (1..n).map(|i| (i - 1, i)).collect(), None))
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(invalid("cycle", "need n >= 3"));
            }
            check_size("cycle", Some(n))?;
            Ok(finish(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), None))
        }
        FamilySpec::Complete { n } => {
            if n < 1 {
                return Err(invalid("complete", "need n >= 1"));
            }
            check_size("complete", Some(n))?;
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Ok(finish(n, edges, None))
        }
        FamilySpec::Hypercube { n } => {
            if n < 1 {
                return Err(invalid("hypercube", "need n >= 1"));
            }
            let size = check_size("hypercube", 1usize.checked_shl(n as u32))?;
            let mut edges = Vec::with_capacity(size / 2 * n);
            for v in 0..size {
                for b in 0..n {
                    let w = v ^ (1 << b);
                    if v < w {
                        edges.push((v, w));
                    }
                }
            }
            let labels = (0..size)
                .map(|v| {
                    (0..n)
                        .rev()
                        .map(|b| if v >> b & 1 == 1 { '1' } else { '0' })
                        .collect()
                })
                .collect();
            Ok(finish(size, edges, Some(labels)))
        }
        FamilySpec::Hamming { n, k } => {
            if n < 1 || k < 1 {
                return Err(invalid("hamming", "need n >= 1 and k >= 1"));
            }
            let size = check_size("hamming", k.checked_pow(n as u32))?;
            let digits = |mut v: usize| -> Vec<usize> {
                let mut out = vec![0; n];
                for d in out.iter_mut().rev() {
                    *d = v % k + 1;
                    v /= k;
                }
                out
            };
            let mut edges = Vec::new();
            for v in 0..size {
                // Bump one coordinate to a larger symbol; covers each edge once.
                let mut pow = 1;
                for _ in 0..n {
                    let sym = v / pow % k;
                    for other in sym + 1..k {
                        edges.push((v, v + (other - sym) * pow));
                    }
                    pow *= k;
                }
            }
            let labels = (0..size)
                .map(|v| {
                    digits(v)
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            Ok(finish(size, edges, Some(labels)))
        }
        FamilySpec::Grid { ref dims } => {
            if dims.is_empty() || dims.iter().any(|&d| d < 1) {
                return Err(invalid("grid", "need at least one dimension, all >= 1"));
            }
            let size = dims
                .iter()
                .try_fold(1usize, |acc, &d| acc.checked_mul(d));
            check_size("grid", size)?;
            let paths: Vec<Graph> = dims
                .iter()
                .map(|&d| generate(&FamilySpec::Path { n: d }))
                .collect::<Result<_, _>>()?;
            let refs: Vec<&Graph> = paths.iter().collect();
            let mut g = product_many(&refs).expect("size checked above");
            g.set_labels(None).unwrap();
            Ok(g)
        }
        FamilySpec::TreeRandom { n, seed } => {
            if n < 1 {
                return Err(invalid("tree_random", "need n >= 1"));
            }
            check_size("tree_random", Some(n))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let edges = if n <= 2 {
                (1..n).map(|i| (i - 1, i)).collect()
            } else {
                let pruefer: Vec<usize> =
                    (0..n - 2).map(|_| rng.random_range(0..n)).collect();
                decode_pruefer(n, &pruefer)
            };
            Ok(finish(n, edges, None))
        }
        FamilySpec::Comb { n } => {
            if n < 1 {
                return Err(invalid("comb", "need n >= 1"));
            }
            check_size("comb", n.checked_mul(2))?;
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.extend((0..n).map(|i| (i, n + i)));
            Ok(finish(2 * n, edges, None))
        }
        FamilySpec::Gnk { n, k } => {
            if n < 1 || k < 1 {
                return Err(invalid("gnk", "need n >= 1 and k >= 1"));
            }
            let half = k
                .checked_mul(n)
                .and_then(|kn| kn.checked_mul(2));
            let size = check_size("gnk", half.and_then(|h| h.checked_mul(2)))?;
            let half = size / 2;
            let mut edges = Vec::new();
            for i in 1..=half {
                edges.push((i - 1, half + i - 1));
                for j in i + 1..=half.min(i + k) {
                    edges.push((i - 1, j - 1));
                }
                // Same block of k consecutive subscripts.
                let block_end = i.div_ceil(k) * k;
                for j in i + 1..=block_end.min(half) {
                    edges.push((half + i - 1, half + j - 1));
                }
            }
            Ok(finish(size, edges, None))
        }
    }
}

/// Standard Pruefer decode; the sequence addresses vertices `0..n`.
fn decode_pruefer(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Smallest-leaf-first decode, kept deterministic with a sorted candidate set.
    let mut leaves: std::collections::BTreeSet<usize> = (0..n)
        .filter(|&v| degree[v] == 1)
        .collect();
    for &s in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut rest = leaves.into_iter();
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u.min(v), u.max(v)));
    edges
}

/// Uniform connected Erdos-Renyi-style graph used by randomized suites:
/// sample edge sets at density `p` until the result is connected.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 1);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if let Ok(g) = build_graph(n, &edges, None) {
            return g;
        }
    }
}

/// Random tree by uniform Pruefer sequence; convenience over `FamilySpec`.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let seed = rng.random::<u64>();
    generate(&FamilySpec::TreeRandom { n, seed }).expect("valid params")
}

/// Picks a uniformly random element, used by seeded suite samplers.
pub fn choose<'a, T>(items: &'a [T], rng: &mut ChaCha8Rng) -> &'a T {
    items.choose(rng).expect("non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;
    use crate::product::cartesian_product;

    #[test]
    fn path_cycle_complete_shapes() {
        let p5 = generate(&FamilySpec::Path { n: 5 }).unwrap();
        assert_eq!((p5.n(), p5.num_edges()), (5, 4));
        let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        assert_eq!((c6.n(), c6.num_edges()), (6, 6));
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        assert_eq!((k4.n(), k4.num_edges()), (4, 6));
        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
    }

    #[test]
    fn hypercube_is_binary_lexicographic() {
        let q3 = generate(&FamilySpec::Hypercube { n: 3 }).unwrap();
        assert_eq!(q3.n(), 8);
        assert!((0..8).all(|v| q3.degree(v) == 3));
        assert_eq!(q3.label(0), Some("000"));
        assert_eq!(q3.label(5), Some("101"));
        // Distance equals Hamming weight of the XOR.
        let dm = all_pairs_distances(&q3);
        for u in 0..8usize {
            for v in 0..8usize {
                assert_eq!(dm.get(u, v), (u ^ v).count_ones());
            }
        }
    }

    #[test]
    fn hypercube_matches_iterated_k2_product() {
        // Q_4 as ((K_2 box K_2) box K_2) box K_2 in the row-major order.
        let k2 = generate(&FamilySpec::Complete { n: 2 }).unwrap();
        let mut acc = k2.clone();
        for _ in 0..3 {
            acc = cartesian_product(&acc, &k2).unwrap().0;
        }
        let q4 = generate(&FamilySpec::Hypercube { n: 4 }).unwrap();
        assert_eq!(acc.n(), q4.n());
        assert_eq!(
            acc.edges().collect::<Vec<_>>(),
            q4.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn hamming_2_3_is_k3_box_k3() {
        let h = generate(&FamilySpec::Hamming { n: 2, k: 3 }).unwrap();
        assert_eq!(h.n(), 9);
        assert!((0..9).all(|v| h.degree(v) == 4));
        assert_eq!(h.label(0), Some("1,1"));
        assert_eq!(h.label(5), Some("2,3"));
        let k3 = generate(&FamilySpec::Complete { n: 3 }).unwrap();
        let (prod, _) = cartesian_product(&k3, &k3).unwrap();
        assert_eq!(
            h.edges().collect::<Vec<_>>(),
            prod.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn grid_is_product_of_paths() {
        let g = generate(&FamilySpec::Grid {
            dims: vec![2, 3, 4],
        })
        .unwrap();
        assert_eq!(g.n(), 24);
        assert_eq!(g.num_edges(), 2 * 3 * 4 * 3 - (12 + 8 + 6));
        assert!(g.labels().is_none());
    }

    #[test]
    fn comb_shape() {
        let b10 = generate(&FamilySpec::Comb { n: 10 }).unwrap();
        assert_eq!((b10.n(), b10.num_edges()), (20, 19));
        assert!(b10.is_tree());
        assert_eq!(b10.leaves().len(), 10);
        // B_1 degenerates to an edge.
        let b1 = generate(&FamilySpec::Comb { n: 1 }).unwrap();
        assert_eq!((b1.n(), b1.num_edges()), (2, 1));
    }

    #[test]
    fn gnk_shape_and_matching() {
        let g = generate(&FamilySpec::Gnk { n: 2, k: 3 }).unwrap();
        assert_eq!(g.n(), 24);
        let half = 12;
        for i in 0..half {
            assert!(g.has_edge(i, half + i));
        }
        // v_1 sees v_2..v_4, w-side blocks are triangles.
        assert_eq!(g.degree(0), 4);
        assert!(g.has_edge(half, half + 1) && g.has_edge(half, half + 2));
        assert!(!g.has_edge(half, half + 3));
    }

    #[test]
    fn gnk_with_k1_is_the_comb() {
        let g = generate(&FamilySpec::Gnk { n: 2, k: 1 }).unwrap();
        let b4 = generate(&FamilySpec::Comb { n: 4 }).unwrap();
        assert_eq!(g.n(), b4.n());
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            b4.edges().collect::<Vec<_>>()
        );
    }

    #[test]
    fn random_tree_is_deterministic_per_seed() {
        let a = generate(&FamilySpec::TreeRandom { n: 9, seed: 7 }).unwrap();
        let b = generate(&FamilySpec::TreeRandom { n: 9, seed: 7 }).unwrap();
        assert_eq!(a, b);
        assert!(a.is_tree());
        let c = generate(&FamilySpec::TreeRandom { n: 9, seed: 8 }).unwrap();
        assert!(c.is_tree());
    }

    #[test]
    fn size_limit_enforced() {
        assert!(matches!(
            generate(&FamilySpec::Hypercube { n: 40 }),
            Err(GenerateError::TooLarge { .. })
        ));
        assert!(matches!(
            generate(&FamilySpec::Hamming { n: 30, k: 30 }),
            Err(GenerateError::TooLarge { .. })
        ));
    }
}
