//! Closed-form values of the two invariants on families where exact formulas
//! are proven, plus the structural helpers those proofs lean on: the row and
//! column characterisation for products of two cliques, the recursion it
//! yields, per-vertex leg counts for trees, and the explicit witness set for
//! the highly connected family.
//!
//! These functions never fall back to search. A parameter outside a formula's
//! proven range is reported as [`FormulaError::OutOfProvenRange`] so callers
//! can decide whether to run the solver instead.

use crate::generate::{generate, FamilySpec};
use crate::graph::{all_pairs_distances, Graph, VertexSet};
use crate::resolve::resolves;
use crate::solver::InvariantKind;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    /// The family is fine but no exact value is proven at these parameters.
    #[error("no proven {target} formula for {family} at {detail}")]
    OutOfProvenRange {
        family: &'static str,
        target: &'static str,
        detail: String,
    },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("not a tree: {0}")]
    NotATree(String),
}

/// Family selector for formula queries. Parameters mirror each formula's
/// statement; range checks live in [`beta_formula`] and [`psi_formula`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaFamily {
    /// Complete graph `K_n`.
    Complete { n: u64 },
    /// Path `P_n`.
    Path { n: u64 },
    /// Cycle `C_n`.
    Cycle { n: u64 },
    /// Trees carry structure, not just a size; use [`tree_beta`] and
    /// [`tree_psi`], which take the graph itself.
    Tree,
    /// Computed table of `beta(Q_n)`, exact for `2 <= n <= 8`. Larger entries
    /// are upper bounds only; see [`hypercube_beta_upper`].
    HypercubeTable { n: u64 },
    /// `K_n` box `K_m`.
    Knkm { n: u64, m: u64 },
    /// `C_m` box `C_n`.
    CmCn { m: u64, n: u64 },
    /// `K_n` box `C_m`.
    KnCm { n: u64, m: u64 },
    /// `P_m` box `C_n`.
    PmCn { m: u64, n: u64 },
    /// Hamming graph `H_{2,k}`, the product of two `K_k`.
    Hamming2K { k: u64 },
    /// Comb `B_n`.
    Comb { n: u64 },
    /// `G_{n,k}` has proven bounds, not exact values; see
    /// [`gnk_certificates`].
    GnkBounds { k: u64, n: u64 },
}

impl FormulaFamily {
    pub fn name(&self) -> &'static str {
        match self {
            FormulaFamily::Complete { .. } => "complete",
            FormulaFamily::Path { .. } => "path",
            FormulaFamily::Cycle { .. } => "cycle",
            FormulaFamily::Tree => "tree",
            FormulaFamily::HypercubeTable { .. } => "hypercube_table",
            FormulaFamily::Knkm { .. } => "knkm",
            FormulaFamily::CmCn { .. } => "cmcn",
            FormulaFamily::KnCm { .. } => "kncm",
            FormulaFamily::PmCn { .. } => "pmcn",
            FormulaFamily::Hamming2K { .. } => "hamming2k",
            FormulaFamily::Comb { .. } => "comb",
            FormulaFamily::GnkBounds { .. } => "gnk_bounds",
        }
    }
}

/// One closed-form request: which invariant on which family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaQuery {
    pub target: InvariantKind,
    pub family: FormulaFamily,
}

impl FormulaQuery {
    pub fn beta(family: FormulaFamily) -> Self {
        FormulaQuery {
            target: InvariantKind::Beta,
            family,
        }
    }

    pub fn psi(family: FormulaFamily) -> Self {
        FormulaQuery {
            target: InvariantKind::Psi,
            family,
        }
    }
}

fn out_of_range(family: &'static str, target: InvariantKind, detail: String) -> FormulaError {
    FormulaError::OutOfProvenRange {
        family,
        target: target.as_str(),
        detail,
    }
}

fn invalid(detail: impl Into<String>) -> FormulaError {
    FormulaError::InvalidParams(detail.into())
}

/// Exact metric dimension by closed formula.
///
/// Covered: complete graphs, paths, cycles, the hypercube table for
/// `2 <= n <= 8`, products of two cliques and of two cycles, clique times
/// cycle, path times cycle, `H_{2,k}`, and combs `B_n` for `n >= 4`.
pub fn beta_formula(q: &FormulaQuery) -> Result<u64, FormulaError> {
    if q.target != InvariantKind::Beta {
        return Err(invalid(format!(
            "beta_formula got a {} query",
            q.target.as_str()
        )));
    }
    let target = q.target;
    match q.family {
        FormulaFamily::Complete { n } => match n {
            0 => Err(invalid("complete needs n >= 1")),
            // The empty set resolves a one-vertex graph, so K_1 gives 0 and
            // n - 1 covers every n >= 1.
            n => Ok(n - 1),
        },
        FormulaFamily::Path { n } => match n {
            0 => Err(invalid("path needs n >= 1")),
            1 => Ok(0),
            _ => Ok(1),
        },
        FormulaFamily::Cycle { n } => match n {
            0..=2 => Err(invalid("cycle needs n >= 3")),
            _ => Ok(2),
        },
        FormulaFamily::Tree => Err(invalid(
            "tree queries take the graph itself; call tree_beta",
        )),
        FormulaFamily::HypercubeTable { n } => match n {
            2..=8 => Ok([2, 3, 4, 4, 5, 6, 6][(n - 2) as usize]),
            n => Err(out_of_range(
                "hypercube_table",
                target,
                format!("n={n}; exact entries stop at n=8"),
            )),
        },
        FormulaFamily::Knkm { n, m } => {
            if n < 1 || m < 1 {
                return Err(invalid("knkm needs n, m >= 1"));
            }
            let (hi, lo) = (n.max(m), n.min(m));
            // The two branches agree at hi = 2 lo - 1.
            if hi <= 2 * lo - 1 {
                Ok(2 * (hi + lo - 1) / 3)
            } else {
                Ok(hi - 1)
            }
        }
        FormulaFamily::CmCn { m, n } => {
            if m < 3 || n < 3 {
                return Err(invalid("cmcn needs m, n >= 3"));
            }
            if m % 2 == 1 || n % 2 == 1 {
                Ok(3)
            } else {
                Ok(4)
            }
        }
        FormulaFamily::KnCm { n, m } => {
            if n < 1 {
                return Err(invalid("kncm needs n >= 1"));
            }
            if m < 3 {
                return Err(invalid("kncm needs m >= 3"));
            }
            Ok(match n {
                1 => 2,
                2 if m % 2 == 1 => 2,
                2 => 3,
                3 => 3,
                4 if m % 2 == 0 => 3,
                4 => 4,
                n => n - 1,
            })
        }
        FormulaFamily::PmCn { m, n } => {
            if m < 1 {
                return Err(invalid("pmcn needs m >= 1"));
            }
            if n < 3 {
                return Err(invalid("pmcn needs n >= 3"));
            }
            if m == 1 {
                // The product degenerates to the cycle, where the even case
                // drops to 2; the path times cycle formula starts at m = 2.
                return Err(out_of_range(
                    "pmcn",
                    target,
                    "m=1; use the cycle formula".into(),
                ));
            }
            if n % 2 == 1 {
                Ok(2)
            } else {
                Ok(3)
            }
        }
        FormulaFamily::Hamming2K { k } => match k {
            0 => Err(invalid("hamming2k needs k >= 1")),
            k => Ok(2 * (2 * k - 1) / 3),
        },
        FormulaFamily::Comb { n } => match n {
            0 => Err(invalid("comb needs n >= 1")),
            1..=3 => Err(out_of_range(
                "comb",
                target,
                format!("n={n}; the comb statement starts at n=4"),
            )),
            _ => Ok(2),
        },
        FormulaFamily::GnkBounds { k, n } => Err(out_of_range(
            "gnk_bounds",
            target,
            format!("k={k} n={n}; only bounds are proven, see gnk_certificates"),
        )),
    }
}

/// Exact minimum doubly resolving set size by closed formula.
///
/// Covered: complete graphs (`max(n-1, 2)`), paths (always 2), cycles
/// (2 odd, 3 even), and combs (`B_n` has `n` leaves for `n >= 2`, and the
/// leaf set is the unique minimum).
pub fn psi_formula(q: &FormulaQuery) -> Result<u64, FormulaError> {
    if q.target != InvariantKind::Psi {
        return Err(invalid(format!(
            "psi_formula got a {} query",
            q.target.as_str()
        )));
    }
    let target = q.target;
    match q.family {
        FormulaFamily::Complete { n } => match n {
            0..=1 => Err(invalid("psi needs at least two vertices")),
            n => Ok((n - 1).max(2)),
        },
        FormulaFamily::Path { n } => match n {
            0..=1 => Err(invalid("psi needs at least two vertices")),
            _ => Ok(2),
        },
        FormulaFamily::Cycle { n } => match n {
            0..=2 => Err(invalid("cycle needs n >= 3")),
            n if n % 2 == 1 => Ok(2),
            _ => Ok(3),
        },
        FormulaFamily::Comb { n } => match n {
            0 => Err(invalid("comb needs n >= 1")),
            // B_1 is a single edge with two leaves.
            1 => Ok(2),
            n => Ok(n),
        },
        FormulaFamily::Tree => Err(invalid(
            "tree queries take the graph itself; call tree_psi",
        )),
        family => Err(out_of_range(
            family.name(),
            target,
            "no proven closed form".into(),
        )),
    }
}

/// Published upper bounds on `beta(Q_n)`: the exact table entries for
/// `2 <= n <= 8` and the bound-only entries at `n = 10` and `n = 15`.
pub fn hypercube_beta_upper(n: u64) -> Option<u64> {
    match n {
        2..=8 => Some([2, 3, 4, 4, 5, 6, 6][(n - 2) as usize]),
        10 => Some(7),
        15 => Some(10),
        _ => None,
    }
}

/// Per-vertex leg counts and the leaf set of a tree.
///
/// `ell[v]` counts the components of the forest left by deleting `v` that are
/// paths dangling from `v` by an endpoint, or equivalently the components in
/// which every vertex has degree at most 2 in the whole tree. Counting every
/// path-shaped component regardless of where it attaches would overcount: a
/// long comb has spine vertices whose removal leaves a path-shaped component
/// hanging by its middle, and those contribute nothing to the dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecoration {
    pub ell: Vec<u64>,
    pub leaves: VertexSet,
}

fn require_tree(t: &Graph) -> Result<(), FormulaError> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(FormulaError::NotATree(format!(
            "{} vertices, {} edges",
            t.n(),
            t.num_edges()
        )))
    }
}

fn decorate_tree(t: &Graph) -> TreeDecoration {
    let n = t.n();
    let mut ell = vec![0u64; n];
    let mut stack = Vec::new();
    let mut seen = vec![false; n];
    for v in 0..n {
        for &u in t.neighbors(v) {
            // Walk the component of u in the tree minus v, failing fast on a
            // vertex of degree 3 or more.
            stack.clear();
            seen.fill(false);
            stack.push(u);
            seen[v] = true;
            seen[u] = true;
            let mut is_leg = true;
            while let Some(x) = stack.pop() {
                if t.degree(x) > 2 {
                    is_leg = false;
                    break;
                }
                for &y in t.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if is_leg {
                ell[v] += 1;
            }
        }
    }
    TreeDecoration {
        ell,
        leaves: t.leaves(),
    }
}

/// Metric dimension of a tree: the sum over vertices of `max(ell_v - 1, 0)`,
/// except that paths are handled directly (0 for a single vertex, else 1)
/// because the leg-count sum is stated only for non-paths.
pub fn tree_beta(t: &Graph) -> Result<(u64, TreeDecoration), FormulaError> {
    require_tree(t)?;
    let decoration = decorate_tree(t);
    let value = if t.is_path_graph() {
        u64::from(t.n() > 1)
    } else {
        decoration.ell.iter().map(|&l| l.saturating_sub(1)).sum()
    };
    Ok((value, decoration))
}

/// Minimum doubly resolving set of a tree: exactly the leaf set, which is the
/// unique minimum.
pub fn tree_psi(t: &Graph) -> Result<(u64, VertexSet), FormulaError> {
    require_tree(t)?;
    if t.n() < 2 {
        return Err(invalid("psi needs at least two vertices"));
    }
    let leaves = t.leaves();
    Ok((leaves.len() as u64, leaves))
}

/// Structural test for resolving sets of `K_n` box `K_m`, `n, m >= 2`, with
/// the set given as (row, column) pairs. A row or column is empty when no
/// chosen vertex lies in it; a chosen vertex is lonely when it is alone both
/// in its row and in its column. The set resolves the product exactly when
/// there is at most one empty row, at most one empty column, at most one
/// lonely vertex, and an empty row, an empty column, and a lonely vertex do
/// not occur all together.
pub fn knkm_resolving_check(n: usize, m: usize, s: &[(usize, usize)]) -> bool {
    debug_assert!(n >= 2 && m >= 2);
    debug_assert!(s.iter().all(|&(r, c)| r < n && c < m));
    let mut row_count = vec![0usize; n];
    let mut col_count = vec![0usize; m];
    let mut cells: Vec<(usize, usize)> = s.to_vec();
    cells.sort_unstable();
    cells.dedup();
    for &(r, c) in &cells {
        row_count[r] += 1;
        col_count[c] += 1;
    }
    let empty_rows = row_count.iter().filter(|&&k| k == 0).count();
    let empty_cols = col_count.iter().filter(|&&k| k == 0).count();
    let lonely = cells
        .iter()
        .filter(|&&(r, c)| row_count[r] == 1 && col_count[c] == 1)
        .count();
    empty_rows <= 1
        && empty_cols <= 1
        && lonely <= 1
        && !(empty_rows == 1 && empty_cols == 1 && lonely == 1)
}

/// A resolving set of `K_n` box `K_m` of exactly the formula size, as grid
/// cells (row, column).
///
/// The layout unwinds the recursion: a shared-column pair in two fresh rows,
/// then the smaller instance shifted out of their way. Bases: a one-column
/// factor keeps rows 1.. of column 0, and the 2 by 2 grid needs the pair
/// itself.
pub fn knkm_basis(n: u64, m: u64) -> Vec<(usize, usize)> {
    if n < m {
        return knkm_basis(m, n).into_iter().map(|(r, c)| (c, r)).collect();
    }
    let rows = n as usize;
    if m <= 1 || (m == 2 && n > 2) {
        return (1..rows).map(|r| (r, 0)).collect();
    }
    if m == 2 {
        return vec![(0, 0), (1, 0)];
    }
    let mut cells = vec![(0, 0), (1, 0)];
    cells.extend(
        knkm_basis(n - 2, m - 1)
            .into_iter()
            .map(|(r, c)| (r + 2, c + 1)),
    );
    cells
}

/// Dimension of `K_n` box `K_m` by the two-row recursion instead of the
/// closed form: delete one occupied row and the two columns of its pair of
/// chosen vertices, or symmetrically, and add the pair back.
///
/// Base cases: `K_n` box `K_1` is `K_n`; with a factor `K_2` the value is 2
/// for n = 2 and n - 1 beyond.
pub fn knkm_recursion(n: u64, m: u64) -> Result<u64, FormulaError> {
    if n < 1 || m < 1 {
        return Err(invalid("knkm needs n, m >= 1"));
    }
    fn rec(n: u64, m: u64, memo: &mut HashMap<(u64, u64), u64>) -> u64 {
        let (hi, lo) = (n.max(m), n.min(m));
        if lo == 1 {
            return hi - 1;
        }
        if lo == 2 {
            return if hi == 2 { 2 } else { hi - 1 };
        }
        if let Some(&v) = memo.get(&(hi, lo)) {
            return v;
        }
        let v = 2 + rec(hi - 2, lo - 1, memo).min(rec(hi - 1, lo - 2, memo));
        memo.insert((hi, lo), v);
        v
    }
    Ok(rec(n, m, &mut HashMap::new()))
}

/// The explicit witnesses for the highly connected family `G_{n,k}`: the
/// 2k antipodal `v`-vertices resolve the graph, and any doubly resolving set
/// must meet each of the 2n blocks of `w`-vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnkCertificates {
    pub resolving_set: VertexSet,
    pub psi_lower: u64,
}

/// Builds `G_{n,k}`, returns the first and last `k` of its `v`-vertices as a
/// resolving set (checked), and the lower bound `2n` on psi.
pub fn gnk_certificates(k: usize, n: usize) -> Result<GnkCertificates, FormulaError> {
    if k < 1 || n < 2 {
        return Err(invalid("gnk needs k >= 1 and n >= 2"));
    }
    let g = generate(&FamilySpec::Gnk { n, k })
        .map_err(|e| invalid(format!("cannot build gnk: {e}")))?;
    let half = 2 * k * n;
    let resolving_set: VertexSet = (0..k).chain(half - k..half).collect();
    let dm = all_pairs_distances(&g);
    assert!(
        resolves(&g, &dm, &resolving_set),
        "antipodal v-set must resolve gnk k={k} n={n}"
    );
    Ok(GnkCertificates {
        resolving_set,
        psi_lower: 2 * n as u64,
    })
}
