//! Exact workbench for resolving sets and doubly resolving sets on finite
//! connected graphs.
//!
//! A set `S` of vertices *resolves* a graph when every vertex is identified by
//! its vector of hop distances to `S`; the minimum size of such a set is the
//! metric dimension `beta`. A set *doubly resolves* when for every vertex pair
//! `(v, w)` some two members see a different distance gap `d(v, x) - d(w, x)`;
//! the minimum size is `psi`. The crate provides:
//!
//! * graph construction, BFS all-pairs distances, cartesian products with a
//!   row-major labeling, family generators, and a plain-text graph format
//!   ([`graph`], [`product`], [`generate`], [`io`]);
//! * definitional checks plus exact branch-and-bound minimisation with
//!   budgets, certificates, and a subset-enumeration cross-check oracle
//!   ([`resolve`], [`solver`]);
//! * closed-form family oracles and certificate constructions for products
//!   ([`formulas`], [`construct`]);
//! * static Mastermind and coin-weighing reductions ([`games`]);
//! * named verification suites used by the CLI and the acceptance tests
//!   ([`suites`]).
//!
//! Conventions used throughout: vertices are `0..n`, graphs are connected,
//! `beta(K_1) = 0` (the empty set resolves a single vertex), and `psi` is
//! defined only for `n >= 2`. Certificates are sorted vertex lists; exact
//! solves return the lexicographically least minimum certificate.

pub mod bitset;
pub mod catalog;
pub mod construct;
pub mod formulas;
pub mod games;
pub mod generate;
pub mod graph;
pub mod io;
pub mod product;
pub mod resolve;
pub mod solver;
pub mod suites;

pub use graph::{all_pairs_distances, build_graph, DistanceMatrix, Graph, GraphError, VertexSet};
pub use product::{cartesian_product, product_many, project, ProductError, ProductLabeling, Side};
pub use resolve::{doubly_resolves, resolves, unresolved_pairs, PairCoverTable, ResolveError};
pub use solver::{
    brute_force_invariant, metric_dimension, min_doubly_resolving, InvariantKind, SolveOptions,
    SolveStatus, SolverError, SolverResult,
};

/// Hard cap on product sizes built by [`cartesian_product`]; the whole crate
/// works with dense distance matrices, so anything larger is out of scope.
pub const VERTEX_LIMIT: usize = 100_000;
