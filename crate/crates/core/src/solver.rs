//! Exact minimisation of resolving and doubly resolving sets.
//!
//! Both problems are monotone covering problems over unordered vertex pairs:
//! a resolving set must hit, for every pair, the set of vertices separating
//! it, and a doubly resolving set must collect two distinct gap values per
//! pair. The search is iterative deepening on cardinality with branch and
//! bound:
//!
//! * branch on an unfinished pair with the fewest usable candidates, trying
//!   candidates under inclusion/exclusion so the space is partitioned;
//! * propagate pairs left with a single candidate;
//! * prune with the coverage ratio bound (outstanding units over the best
//!   single-vertex progress among still-allowed candidates);
//! * preprocess twins (vertices with identical distance rows off the
//!   diagonal force all but one class member) and, for the doubly resolving
//!   problem, vertices that alone can finish some pair.
//!
//! Exhausting cardinality `k - 1` certifies the lower bound `k`, so a found
//! cover is optimal and budget exhaustion still yields honest bounds. Exact
//! solves finish with a second pass that walks the certificate down to the
//! lexicographically least minimum set. Large instances additionally run a
//! seeded focused-walk improver to pull the incumbent down before deepening;
//! its step counts are fixed, so results are reproducible.

use crate::bitset::Bitset;
use crate::graph::{DistanceMatrix, Graph, VertexSet};
use crate::resolve::{doubly_resolves, resolves, PairCoverTable};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Subset enumeration cap for [`brute_force_invariant`].
pub const BRUTE_FORCE_MAX_N: usize = 16;

/// Instances at least this large run the incumbent improver before deepening.
const IMPROVE_MIN_N: usize = 96;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("doubly resolving sets need at least 2 vertices, graph has {0}")]
    TooSmall(usize),
    #[error("brute force is capped at {cap} vertices, graph has {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("brute force handles beta and psi only")]
    UnsupportedKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    Beta,
    Psi,
    Weighings,
}

impl InvariantKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InvariantKind::Beta => "beta",
            InvariantKind::Psi => "psi",
            InvariantKind::Weighings => "weighings",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Exact,
    Bounds,
}

/// Outcome of a minimisation run.
///
/// When `status` is `Exact`, `value` is set, `lower == upper == value`, and
/// the certificate is an optimal set (the lexicographically least one unless
/// the tail pass ran out of budget). When `Bounds`, `lower` comes from the
/// deepest exhausted cardinality and the certificate is the incumbent
/// witnessing `upper`. For `Weighings` results the certificate entries are
/// subset bitmasks rather than vertex indices; see `games::min_weighings`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverResult {
    pub kind: InvariantKind,
    pub status: SolveStatus,
    pub value: Option<u64>,
    pub lower: u64,
    pub upper: u64,
    pub certificate: VertexSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    kind: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<u64>,
    certificate: &'a VertexSet,
    nodes_explored: u64,
    elapsed_ms: u64,
}

impl SolverResult {
    pub fn is_exact(&self) -> bool {
        self.status == SolveStatus::Exact
    }

    /// Stable-order JSON: kind, status, value or lower/upper, certificate,
    /// nodes_explored, elapsed_ms.
    pub fn to_json(&self) -> serde_json::Value {
        let exact = self.is_exact();
        serde_json::to_value(ResultJson {
            kind: self.kind.as_str(),
            status: match self.status {
                SolveStatus::Exact => "exact",
                SolveStatus::Bounds => "bounds",
            },
            value: if exact { self.value } else { None },
            lower: (!exact).then_some(self.lower),
            upper: (!exact).then_some(self.upper),
            certificate: &self.certificate,
            nodes_explored: self.nodes_explored,
            elapsed_ms: self.elapsed.as_millis() as u64,
        })
        .expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Wall-clock budget; `None` removes the limit.
    pub budget: Option<Duration>,
    /// Twin preprocessing (identical distance rows off the diagonal).
    pub twin_reduction: bool,
    /// Seed for the incumbent improver on large instances.
    pub seed: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Some(Duration::from_secs(60)),
            twin_reduction: true,
            seed: 0xD1CE,
        }
    }
}

impl SolveOptions {
    pub fn with_budget(budget: Option<Duration>) -> Self {
        SolveOptions {
            budget,
            ..Default::default()
        }
    }
}

/// Minimum resolving set (metric dimension). Always returns a result:
/// budget exhaustion downgrades the status to bounds, never errors.
pub fn metric_dimension(g: &Graph, dm: &DistanceMatrix, opts: &SolveOptions) -> SolverResult {
    let start = Instant::now();
    let deadline = opts.budget.map(|b| start + b);
    let model = BetaModel::build(g, dm);
    let forced = if opts.twin_reduction {
        twin_forced(g)
    } else {
        Vec::new()
    };
    let out = minimize(&model, &forced, deadline, opts.seed);
    let result = finish_result(InvariantKind::Beta, out, start);
    debug_assert!(resolves(g, dm, &result.certificate));
    result
}

/// Minimum doubly resolving set. Defined for graphs with at least two
/// vertices.
pub fn min_doubly_resolving(
    g: &Graph,
    dm: &DistanceMatrix,
    opts: &SolveOptions,
) -> Result<SolverResult, SolverError> {
    if g.n() < 2 {
        return Err(SolverError::TooSmall(g.n()));
    }
    let start = Instant::now();
    let deadline = opts.budget.map(|b| start + b);
    let model = PsiModel::build(g, dm);
    let mut forced = psi_forced(dm);
    if opts.twin_reduction {
        forced.extend(twin_forced(g));
        forced.sort_unstable();
        forced.dedup();
    }
    let out = minimize(&model, &forced, deadline, opts.seed);
    let result = finish_result(InvariantKind::Psi, out, start);
    debug_assert_eq!(doubly_resolves(g, dm, &result.certificate), Ok(true));
    Ok(result)
}

/// Independent oracle: enumerate subsets in size-then-lexicographic order
/// and return the first that passes the definitional check. Intentionally
/// avoids the cover table and the search engine.
pub fn brute_force_invariant(
    g: &Graph,
    dm: &DistanceMatrix,
    kind: InvariantKind,
) -> Result<SolverResult, SolverError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(SolverError::TooLarge {
            n,
            cap: BRUTE_FORCE_MAX_N,
        });
    }
    let start_size = match kind {
        InvariantKind::Beta => 0,
        InvariantKind::Psi => {
            if n < 2 {
                return Err(SolverError::TooSmall(n));
            }
            2
        }
        InvariantKind::Weighings => return Err(SolverError::UnsupportedKind),
    };
    let start = Instant::now();
    let mut nodes = 0u64;
    for size in start_size..=n {
        for subset in (0..n).combinations(size) {
            nodes += 1;
            let s = VertexSet::from_sorted(subset);
            let ok = match kind {
                InvariantKind::Beta => resolves(g, dm, &s),
                InvariantKind::Psi => doubly_resolves(g, dm, &s).expect("size >= 2"),
                InvariantKind::Weighings => unreachable!(),
            };
            if ok {
                let value = s.len() as u64;
                return Ok(SolverResult {
                    kind,
                    status: SolveStatus::Exact,
                    value: Some(value),
                    lower: value,
                    upper: value,
                    certificate: s,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    unreachable!("the full vertex set always passes either check");
}

// ---------------------------------------------------------------------------
// Cover models

/// A monotone covering problem over vertices `0..n`: chosen vertices make
/// progress on per-pair obligations, and supersets of solutions stay
/// solutions. Implementations supply branching, propagation and bound data.
trait CoverModel {
    type State;

    fn n(&self) -> usize;
    fn initial(&self) -> Self::State;
    fn complete(&self, s: &Self::State) -> bool;
    /// Applies a chosen vertex; undone by `pop`.
    fn push(&self, s: &mut Self::State, x: usize);
    fn pop(&self, s: &mut Self::State);
    /// Progress a single added vertex would make now; used for candidate
    /// ordering and the ratio bound.
    fn marginal(&self, s: &Self::State, x: usize) -> usize;
    /// Outstanding work units. Each added vertex reduces this by at most its
    /// marginal, which keeps the ratio bound sound.
    fn units(&self, s: &Self::State) -> usize;
    /// Candidates of an unfinished pair with the fewest allowed candidates,
    /// ascending. `None` when complete; empty when some pair is dead.
    fn most_constrained(&self, s: &Self::State, allowed: &Bitset) -> Option<Vec<usize>>;
    /// Set-cover view for the incumbent improver, if this model has one.
    fn as_beta(&self) -> Option<&BetaModel>;
}

/// Resolving sets as plain set cover: pair `p` is finished once some chosen
/// vertex separates it.
struct BetaModel {
    n: usize,
    num_pairs: usize,
    /// Per pair: vertices separating it.
    pair_covers: Vec<Bitset>,
    /// Per vertex: pairs it separates.
    vertex_masks: Vec<Bitset>,
}

struct BetaState {
    uncovered: Bitset,
    stack: Vec<Bitset>,
}

impl BetaModel {
    fn build(g: &Graph, dm: &DistanceMatrix) -> Self {
        let table = PairCoverTable::build(g, dm);
        let vertex_masks = table.vertex_masks();
        let num_pairs = table.num_pairs();
        let pair_covers = (0..num_pairs).map(|p| table.cover(p).clone()).collect();
        BetaModel {
            n: g.n(),
            num_pairs,
            pair_covers,
            vertex_masks,
        }
    }
}

impl CoverModel for BetaModel {
    type State = BetaState;

    fn n(&self) -> usize {
        self.n
    }

    fn initial(&self) -> BetaState {
        BetaState {
            uncovered: Bitset::full(self.num_pairs),
            stack: Vec::new(),
        }
    }

    fn complete(&self, s: &BetaState) -> bool {
        s.uncovered.is_empty()
    }

    fn push(&self, s: &mut BetaState, x: usize) {
        s.stack.push(s.uncovered.clone());
        s.uncovered.subtract(&self.vertex_masks[x]);
    }

    fn pop(&self, s: &mut BetaState) {
        s.uncovered = s.stack.pop().expect("push/pop balanced");
    }

    fn marginal(&self, s: &BetaState, x: usize) -> usize {
        s.uncovered.and_count(&self.vertex_masks[x])
    }

    fn units(&self, s: &BetaState) -> usize {
        s.uncovered.count()
    }

    fn most_constrained(&self, s: &BetaState, allowed: &Bitset) -> Option<Vec<usize>> {
        let mut best: Option<(usize, usize)> = None; // (candidate count, pair)
        for p in s.uncovered.iter_ones() {
            let cnt = self.pair_covers[p].and_count(allowed);
            if best.is_none_or(|(c, _)| cnt < c) {
                best = Some((cnt, p));
                if cnt == 0 {
                    break;
                }
            }
        }
        best.map(|(_, p)| {
            self.pair_covers[p]
                .iter_ones()
                .filter(|&x| allowed.get(x))
                .collect()
        })
    }

    fn as_beta(&self) -> Option<&BetaModel> {
        Some(self)
    }
}

/// Doubly resolving sets: pair `p` carries the gap `d(v, x) - d(w, x)` per
/// vertex `x` and is finished once two chosen vertices disagree on it.
struct PsiModel {
    n: usize,
    num_pairs: usize,
    /// Flattened gap values, indexed `p * n + x`.
    gap: Vec<i32>,
}

struct PsiState {
    chosen: usize,
    /// Gap value shared by every chosen vertex on a still-open pair; valid
    /// once `chosen > 0`.
    class: Vec<i32>,
    unresolved: Bitset,
    stack: Vec<(usize, Vec<i32>, Bitset)>,
}

impl PsiModel {
    fn build(g: &Graph, dm: &DistanceMatrix) -> Self {
        let n = g.n();
        let num_pairs = n * (n - 1) / 2;
        let mut gap = Vec::with_capacity(num_pairs * n);
        for v in 0..n {
            for w in v + 1..n {
                let (rv, rw) = (dm.row(v), dm.row(w));
                gap.extend((0..n).map(|x| rv[x] as i32 - rw[x] as i32));
            }
        }
        PsiModel { n, num_pairs, gap }
    }

    #[inline]
    fn gap_at(&self, p: usize, x: usize) -> i32 {
        self.gap[p * self.n + x]
    }
}

impl CoverModel for PsiModel {
    type State = PsiState;

    fn n(&self) -> usize {
        self.n
    }

    fn initial(&self) -> PsiState {
        PsiState {
            chosen: 0,
            class: vec![0; self.num_pairs],
            unresolved: Bitset::full(self.num_pairs),
            stack: Vec::new(),
        }
    }

    fn complete(&self, s: &PsiState) -> bool {
        s.chosen > 0 && s.unresolved.is_empty()
    }

    fn push(&self, s: &mut PsiState, x: usize) {
        s.stack
            .push((s.chosen, s.class.clone(), s.unresolved.clone()));
        if s.chosen == 0 {
            for p in 0..self.num_pairs {
                s.class[p] = self.gap_at(p, x);
            }
        } else {
            let hit: Vec<usize> = s
                .unresolved
                .iter_ones()
                .filter(|&p| self.gap_at(p, x) != s.class[p])
                .collect();
            for p in hit {
                s.unresolved.clear(p);
            }
        }
        s.chosen += 1;
    }

    fn pop(&self, s: &mut PsiState) {
        let (chosen, class, unresolved) = s.stack.pop().expect("push/pop balanced");
        s.chosen = chosen;
        s.class = class;
        s.unresolved = unresolved;
    }

    fn marginal(&self, s: &PsiState, x: usize) -> usize {
        if s.chosen == 0 {
            self.num_pairs
        } else {
            s.unresolved
                .iter_ones()
                .filter(|&p| self.gap_at(p, x) != s.class[p])
                .count()
        }
    }

    fn units(&self, s: &PsiState) -> usize {
        if s.chosen == 0 {
            2 * self.num_pairs
        } else {
            s.unresolved.count()
        }
    }

    fn most_constrained(&self, s: &PsiState, allowed: &Bitset) -> Option<Vec<usize>> {
        if s.chosen == 0 {
            // The first choice progresses every pair equally; branch over
            // everything still allowed.
            return Some(allowed.iter_ones().collect());
        }
        if s.unresolved.is_empty() {
            return None;
        }
        let mut best: Option<(usize, usize)> = None;
        for p in s.unresolved.iter_ones() {
            let cnt = allowed
                .iter_ones()
                .filter(|&x| self.gap_at(p, x) != s.class[p])
                .count();
            if best.is_none_or(|(c, _)| cnt < c) {
                best = Some((cnt, p));
                if cnt == 0 {
                    break;
                }
            }
        }
        best.map(|(_, p)| {
            allowed
                .iter_ones()
                .filter(|&x| self.gap_at(p, x) != s.class[p])
                .collect()
        })
    }

    fn as_beta(&self) -> Option<&BetaModel> {
        None
    }
}

// ---------------------------------------------------------------------------
// Search engine

enum Outcome {
    Found,
    Exhausted,
    Timeout,
}

struct Search<'m, M: CoverModel> {
    model: &'m M,
    state: M::State,
    allowed: Bitset,
    chosen: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
}

impl<'m, M: CoverModel> Search<'m, M> {
    fn new(model: &'m M, deadline: Option<Instant>) -> Self {
        Search {
            model,
            state: model.initial(),
            allowed: Bitset::full(model.n()),
            chosen: Vec::new(),
            nodes: 0,
            deadline,
        }
    }

    fn push_vertex(&mut self, x: usize) {
        self.model.push(&mut self.state, x);
        self.allowed.clear(x);
        self.chosen.push(x);
    }

    fn pop_vertex(&mut self) {
        let x = self.chosen.pop().expect("push/pop balanced");
        self.model.pop(&mut self.state);
        self.allowed.set(x);
    }

    fn out_of_time(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// Outstanding units over the best single-vertex progress; a sound lower
    /// bound on how many more vertices any completion needs.
    fn ratio_bound(&self) -> usize {
        let units = self.model.units(&self.state);
        if units == 0 {
            return 0;
        }
        let best = self
            .allowed
            .iter_ones()
            .map(|x| self.model.marginal(&self.state, x))
            .max()
            .unwrap_or(0);
        if best == 0 {
            usize::MAX / 2
        } else {
            units.div_ceil(best)
        }
    }

    /// Is there a completion using at most `budget` more vertices from
    /// `allowed`? On `Found` the solution is left in `self.chosen`; on the
    /// other outcomes the entry state is restored.
    fn decide(&mut self, mut budget: usize) -> Outcome {
        self.nodes += 1;
        if self.nodes & 0x3FF == 0 && self.out_of_time() {
            return Outcome::Timeout;
        }
        let mut propagated = 0usize;
        // Unit propagation: a pair with one usable candidate forces it.
        let cands = loop {
            match self.model.most_constrained(&self.state, &self.allowed) {
                None => return Outcome::Found,
                Some(c) if c.is_empty() => {
                    self.unwind(propagated);
                    return Outcome::Exhausted;
                }
                Some(c) if c.len() == 1 => {
                    if budget == 0 {
                        self.unwind(propagated);
                        return Outcome::Exhausted;
                    }
                    self.push_vertex(c[0]);
                    propagated += 1;
                    budget -= 1;
                }
                Some(c) => break c,
            }
        };
        if budget == 0 || self.ratio_bound() > budget {
            self.unwind(propagated);
            return Outcome::Exhausted;
        }
        // Strong candidates first; ties stay in index order.
        let mut ordered: Vec<(usize, usize)> = cands
            .into_iter()
            .map(|x| (self.model.marginal(&self.state, x), x))
            .collect();
        ordered.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut excluded: Vec<usize> = Vec::new();
        let mut result = Outcome::Exhausted;
        for &(_, x) in &ordered {
            self.push_vertex(x);
            match self.decide(budget - 1) {
                Outcome::Found => return Outcome::Found,
                Outcome::Timeout => {
                    self.pop_vertex();
                    result = Outcome::Timeout;
                    break;
                }
                Outcome::Exhausted => {
                    self.pop_vertex();
                    // Partition: later branches must avoid x.
                    self.allowed.clear(x);
                    excluded.push(x);
                }
            }
        }
        for &x in &excluded {
            self.allowed.set(x);
        }
        self.unwind(propagated);
        result
    }

    fn unwind(&mut self, count: usize) {
        for _ in 0..count {
            self.pop_vertex();
        }
    }

    /// Completes the current state greedily: maximum progress, ties to the
    /// smallest index. Terminates because an unfinished pair always retains
    /// a usable candidate outside the chosen set.
    fn greedy_complete(&mut self) {
        while !self.model.complete(&self.state) {
            let x = self
                .allowed
                .iter_ones()
                .map(|x| (self.model.marginal(&self.state, x), x))
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
                .map(|(_, x)| x)
                .expect("incomplete state keeps candidates");
            self.push_vertex(x);
        }
    }
}

// ---------------------------------------------------------------------------
// Orchestration

struct Minimized {
    exact: bool,
    lower: usize,
    upper: usize,
    certificate: Vec<usize>,
    nodes: u64,
}

fn finish_result(kind: InvariantKind, m: Minimized, start: Instant) -> SolverResult {
    SolverResult {
        kind,
        status: if m.exact {
            SolveStatus::Exact
        } else {
            SolveStatus::Bounds
        },
        value: m.exact.then_some(m.upper as u64),
        lower: m.lower as u64,
        upper: m.upper as u64,
        certificate: VertexSet::new(m.certificate),
        nodes_explored: m.nodes,
        elapsed: start.elapsed(),
    }
}

fn minimize<M: CoverModel>(
    model: &M,
    forced: &[usize],
    deadline: Option<Instant>,
    seed: u64,
) -> Minimized {
    let mut nodes = 0u64;

    // Greedy incumbent on top of the forced prefix.
    let mut greedy = Search::new(model, deadline);
    for &x in forced {
        greedy.push_vertex(x);
    }
    greedy.greedy_complete();
    let mut incumbent = greedy.chosen.clone();
    let mut upper = incumbent.len();

    // Initial lower bound: forced prefix plus the ratio bound above it.
    let mut probe = Search::new(model, deadline);
    for &x in forced {
        probe.push_vertex(x);
    }
    let mut lower = (forced.len() + probe.ratio_bound()).min(upper);

    // Pull the incumbent down with focused walks before deepening.
    if model.n() >= IMPROVE_MIN_N {
        if let Some(beta) = model.as_beta() {
            while upper > lower {
                match improve(beta, forced, upper - 1, seed, deadline) {
                    Some(sol) => {
                        incumbent = sol;
                        upper -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    // Iterative deepening: exhausting depth k certifies the bound k + 1.
    let mut timed_out = false;
    while lower < upper {
        let mut engine = Search::new(model, deadline);
        for &x in forced {
            engine.push_vertex(x);
        }
        let outcome = engine.decide(lower - forced.len());
        nodes += engine.nodes;
        match outcome {
            Outcome::Found => {
                incumbent = engine.chosen.clone();
                upper = incumbent.len();
                lower = upper;
            }
            Outcome::Exhausted => lower += 1,
            Outcome::Timeout => {
                timed_out = true;
                break;
            }
        }
    }

    if timed_out {
        incumbent.sort_unstable();
        return Minimized {
            exact: false,
            lower,
            upper,
            certificate: incumbent,
            nodes,
        };
    }

    // Exact value settled; walk down to the lexicographically least optimum.
    let value = upper;
    if let Some(best) = lex_minimum(model, forced, value, deadline, &mut nodes) {
        incumbent = best;
    } else {
        incumbent.sort_unstable();
    }
    Minimized {
        exact: true,
        lower: value,
        upper: value,
        certificate: incumbent,
        nodes,
    }
}

/// Lexicographically least completion of `forced` with `value` vertices:
/// each free slot takes the smallest index that still leaves a feasible
/// completion among strictly larger indices. Certificates compare as sorted
/// sets, so fixing the smallest feasible element first is optimal. Returns
/// `None` on timeout.
fn lex_minimum<M: CoverModel>(
    model: &M,
    forced: &[usize],
    value: usize,
    deadline: Option<Instant>,
    nodes: &mut u64,
) -> Option<Vec<usize>> {
    let free = value - forced.len();
    let mut prefix: Vec<usize> = Vec::new();
    let mut lo = 0usize;
    for slot in 0..free {
        let mut advanced = false;
        for x in lo..model.n() {
            if forced.contains(&x) {
                continue;
            }
            let mut engine = Search::new(model, deadline);
            for &f in forced {
                engine.push_vertex(f);
            }
            for &p in &prefix {
                engine.push_vertex(p);
            }
            engine.push_vertex(x);
            for y in 0..x {
                if engine.allowed.get(y) {
                    engine.allowed.clear(y);
                }
            }
            let outcome = engine.decide(free - slot - 1);
            *nodes += engine.nodes;
            match outcome {
                Outcome::Found => {
                    prefix.push(x);
                    lo = x + 1;
                    advanced = true;
                    break;
                }
                Outcome::Timeout => return None,
                Outcome::Exhausted => {}
            }
        }
        if !advanced {
            // A completion of this size is known to exist.
            debug_assert!(false, "lex walk lost a known-feasible completion");
            return None;
        }
    }
    let mut best = forced.to_vec();
    best.extend(prefix);
    best.sort_unstable();
    Some(best)
}

// ---------------------------------------------------------------------------
// Preprocessing

/// Vertices forced by twin classes. Vertices with the same neighbourhood
/// (open twins, never adjacent) or the same closed neighbourhood (adjacent
/// twins) are separated only by themselves, and their gap on every other
/// vertex is zero, so any resolving or doubly resolving set misses at most
/// one member of each class. Swapping two twins is an automorphism, so
/// keeping the smallest members preserves the lexicographically least
/// optimum.
fn twin_forced(g: &Graph) -> Vec<usize> {
    use std::collections::HashMap;
    let n = g.n();
    let mut forced = Vec::new();
    // The two partitions are built separately; a vertex cannot sit in a
    // non-trivial class of both kinds at once.
    for closed in [false, true] {
        let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for v in 0..n {
            let mut key: Vec<usize> = g.neighbors(v).to_vec();
            if closed {
                key.push(v);
                key.sort_unstable();
            }
            groups.entry(key).or_default().push(v);
        }
        for (_, mut class) in groups {
            if class.len() >= 2 {
                class.sort_unstable();
                forced.extend_from_slice(&class[..class.len() - 1]);
            }
        }
    }
    forced.sort_unstable();
    forced.dedup();
    forced
}

/// Vertices in every doubly resolving set: if the gap of pair `(v, w)` is
/// constant across all vertices except `v`, only `v` can finish that pair.
/// Only pair endpoints can be forced this way because `v` and `w` always
/// disagree with each other.
fn psi_forced(dm: &DistanceMatrix) -> Vec<usize> {
    let n = dm.n();
    let mut forced = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            let gap = |x: usize| dm.get(v, x) as i64 - dm.get(w, x) as i64;
            let others = || (0..n).filter(|&x| x != v && x != w);
            if others().all(|x| gap(x) == gap(w)) {
                forced.push(v);
            }
            if others().all(|x| gap(x) == gap(v)) {
                forced.push(w);
            }
        }
    }
    forced.sort_unstable();
    forced.dedup();
    forced
}

// ---------------------------------------------------------------------------
// Incumbent improver

/// Word-parallel per-pair coverage counter. Four bit planes, so counts must
/// stay below 16; the improver keeps its sets under that size.
struct PlaneCounts {
    planes: [Vec<u64>; 4],
    bits: usize,
}

impl PlaneCounts {
    fn new(bits: usize) -> Self {
        PlaneCounts {
            planes: std::array::from_fn(|_| vec![0; bits.div_ceil(64)]),
            bits,
        }
    }

    fn add(&mut self, mask: &Bitset) {
        let mut carry: Vec<u64> = mask.words().to_vec();
        for plane in &mut self.planes {
            for (w, c) in plane.iter_mut().zip(&mut carry) {
                let sum = *w ^ *c;
                *c &= *w;
                *w = sum;
            }
        }
        debug_assert!(carry.iter().all(|&w| w == 0), "count overflow");
    }

    fn sub(&mut self, mask: &Bitset) {
        let mut borrow: Vec<u64> = mask.words().to_vec();
        for plane in &mut self.planes {
            for (w, b) in plane.iter_mut().zip(&mut borrow) {
                let diff = *w ^ *b;
                *b &= !*w;
                *w = diff;
            }
        }
        debug_assert!(borrow.iter().all(|&w| w == 0), "count underflow");
    }

    /// Pairs with count zero.
    fn zeros(&self) -> Bitset {
        let mut out = Bitset::full(self.bits);
        for (i, w) in out.words_mut().iter_mut().enumerate() {
            *w &= !(self.planes[0][i] | self.planes[1][i] | self.planes[2][i] | self.planes[3][i]);
        }
        out
    }

    /// Pairs with count exactly one. Plane padding stays zero, so no trim is
    /// needed.
    fn ones(&self) -> Bitset {
        let mut out = Bitset::new(self.bits);
        for (i, w) in out.words_mut().iter_mut().enumerate() {
            *w = self.planes[0][i] & !self.planes[1][i] & !self.planes[2][i] & !self.planes[3][i];
        }
        out
    }
}

/// Focused random walk looking for a covering set of exactly `target`
/// vertices: pick an uncovered pair, bring in one of its separators, drop
/// the member whose uniquely covered pairs lose least. Step and restart
/// counts are fixed for reproducibility; the deadline only aborts early.
fn improve(
    beta: &BetaModel,
    forced: &[usize],
    target: usize,
    seed: u64,
    deadline: Option<Instant>,
) -> Option<Vec<usize>> {
    if target < forced.len() || target >= 15 {
        return None;
    }
    let free_target = target - forced.len();
    let candidates: Vec<usize> = (0..beta.n).filter(|x| !forced.contains(x)).collect();
    if candidates.len() < free_target {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (target as u64).wrapping_mul(0x9E37_79B9));
    const RESTARTS: usize = 12;
    const STEPS: usize = 40_000;
    const NOISE_PERCENT: u32 = 30;
    for _restart in 0..RESTARTS {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return None;
        }
        let mut pool = candidates.clone();
        for i in 0..free_target {
            let j = rng.random_range(i..pool.len());
            pool.swap(i, j);
        }
        let mut members: Vec<usize> = forced.to_vec();
        members.extend_from_slice(&pool[..free_target]);
        let mut in_set = vec![false; beta.n];
        let mut counts = PlaneCounts::new(beta.num_pairs);
        for &x in &members {
            in_set[x] = true;
            counts.add(&beta.vertex_masks[x]);
        }
        for step in 0..STEPS {
            let uncovered = counts.zeros();
            let missing = uncovered.count();
            if missing == 0 {
                members.sort_unstable();
                return Some(members);
            }
            if step % 256 == 0 && deadline.is_some_and(|d| Instant::now() >= d) {
                return None;
            }
            // Random uncovered pair, random separator to bring in.
            let pick = rng.random_range(0..missing);
            let p = uncovered.iter_ones().nth(pick).expect("count checked");
            let entering: Vec<usize> = beta.pair_covers[p]
                .iter_ones()
                .filter(|&x| !in_set[x])
                .collect();
            if entering.is_empty() {
                break;
            }
            let y = entering[rng.random_range(0..entering.len())];
            let removable: Vec<usize> = members
                .iter()
                .copied()
                .filter(|x| !forced.contains(x))
                .collect();
            if removable.is_empty() {
                break;
            }
            let x = if rng.random_range(0..100) < NOISE_PERCENT {
                removable[rng.random_range(0..removable.len())]
            } else {
                let crit = counts.ones();
                removable
                    .iter()
                    .copied()
                    .map(|x| {
                        let mut lost = crit.clone();
                        lost.intersect_with(&beta.vertex_masks[x]);
                        let kept = lost.and_count(&beta.vertex_masks[y]);
                        (lost.count() - kept, x)
                    })
                    .min()
                    .map(|(_, x)| x)
                    .expect("removable is non-empty")
            };
            counts.sub(&beta.vertex_masks[x]);
            counts.add(&beta.vertex_masks[y]);
            in_set[x] = false;
            in_set[y] = true;
            let pos = members.iter().position(|&m| m == x).expect("member");
            members[pos] = y;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};
    use crate::graph::{all_pairs_distances, build_graph};

    fn solve_beta(spec: &FamilySpec) -> SolverResult {
        let g = generate(spec).unwrap();
        let dm = all_pairs_distances(&g);
        metric_dimension(&g, &dm, &SolveOptions::default())
    }

    fn solve_psi(spec: &FamilySpec) -> SolverResult {
        let g = generate(spec).unwrap();
        let dm = all_pairs_distances(&g);
        min_doubly_resolving(&g, &dm, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn beta_of_basic_families() {
        let r = solve_beta(&FamilySpec::Path { n: 1 });
        assert_eq!((r.value, r.certificate.len()), (Some(0), 0));
        let r = solve_beta(&FamilySpec::Path { n: 5 });
        assert_eq!(r.value, Some(1));
        assert_eq!(r.certificate.as_slice(), &[0]);
        let r = solve_beta(&FamilySpec::Cycle { n: 6 });
        assert_eq!(r.value, Some(2));
        assert_eq!(r.certificate.as_slice(), &[0, 1]);
        let r = solve_beta(&FamilySpec::Complete { n: 4 });
        assert_eq!(r.value, Some(3));
        assert_eq!(r.certificate.as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn beta_star_and_hypercubes() {
        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)], None).unwrap();
        let dm = all_pairs_distances(&star);
        let r = metric_dimension(&star, &dm, &SolveOptions::default());
        assert_eq!(r.value, Some(2));
        assert_eq!(r.certificate.as_slice(), &[1, 2]);
        assert_eq!(solve_beta(&FamilySpec::Hypercube { n: 3 }).value, Some(3));
        assert_eq!(solve_beta(&FamilySpec::Hypercube { n: 4 }).value, Some(4));
    }

    #[test]
    fn petersen_beta_matches_brute_force() {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ];
        let g = build_graph(10, &edges, None).unwrap();
        let dm = all_pairs_distances(&g);
        let oracle = brute_force_invariant(&g, &dm, InvariantKind::Beta).unwrap();
        assert_eq!(oracle.value, Some(3));
        let solved = metric_dimension(&g, &dm, &SolveOptions::default());
        assert_eq!(solved.value, Some(3));
        assert_eq!(solved.certificate, oracle.certificate);
    }

    #[test]
    fn psi_of_basic_families() {
        let r = solve_psi(&FamilySpec::Path { n: 6 });
        assert_eq!(r.value, Some(2));
        assert_eq!(r.certificate.as_slice(), &[0, 5], "both endpoints forced");
        assert_eq!(solve_psi(&FamilySpec::Complete { n: 5 }).value, Some(4));
        assert_eq!(solve_psi(&FamilySpec::Cycle { n: 5 }).value, Some(2));
        assert_eq!(solve_psi(&FamilySpec::Cycle { n: 6 }).value, Some(3));
        assert_eq!(solve_psi(&FamilySpec::Complete { n: 2 }).value, Some(2));
    }

    #[test]
    fn psi_certificates_match_brute_force() {
        for spec in [
            FamilySpec::Cycle { n: 5 },
            FamilySpec::Cycle { n: 8 },
            FamilySpec::Comb { n: 4 },
        ] {
            let g = generate(&spec).unwrap();
            let dm = all_pairs_distances(&g);
            let oracle = brute_force_invariant(&g, &dm, InvariantKind::Psi).unwrap();
            let solved = min_doubly_resolving(&g, &dm, &SolveOptions::default()).unwrap();
            assert_eq!(solved.value, oracle.value, "{spec}");
            assert_eq!(solved.certificate, oracle.certificate, "{spec}");
        }
    }

    #[test]
    fn tree_psi_is_leaf_set() {
        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)], None).unwrap();
        let dm = all_pairs_distances(&star);
        let r = min_doubly_resolving(&star, &dm, &SolveOptions::default()).unwrap();
        assert_eq!(r.value, Some(3));
        assert_eq!(r.certificate, star.leaves());
    }

    #[test]
    fn psi_rejects_single_vertex() {
        let g = build_graph(1, &[], None).unwrap();
        let dm = all_pairs_distances(&g);
        assert_eq!(
            min_doubly_resolving(&g, &dm, &SolveOptions::default()).unwrap_err(),
            SolverError::TooSmall(1)
        );
    }

    #[test]
    fn brute_force_caps_and_kinds() {
        let g = generate(&FamilySpec::Path { n: 17 }).unwrap();
        let dm = all_pairs_distances(&g);
        assert_eq!(
            brute_force_invariant(&g, &dm, InvariantKind::Beta).unwrap_err(),
            SolverError::TooLarge { n: 17, cap: 16 }
        );
        let g = generate(&FamilySpec::Path { n: 4 }).unwrap();
        let dm = all_pairs_distances(&g);
        assert_eq!(
            brute_force_invariant(&g, &dm, InvariantKind::Weighings).unwrap_err(),
            SolverError::UnsupportedKind
        );
    }

    #[test]
    fn twin_reduction_toggle_agrees() {
        for spec in [
            FamilySpec::Complete { n: 6 },
            FamilySpec::Comb { n: 3 },
            FamilySpec::Hamming { n: 2, k: 3 },
        ] {
            let g = generate(&spec).unwrap();
            let dm = all_pairs_distances(&g);
            let with = metric_dimension(&g, &dm, &SolveOptions::default());
            let without = metric_dimension(
                &g,
                &dm,
                &SolveOptions {
                    twin_reduction: false,
                    ..Default::default()
                },
            );
            assert_eq!(with.value, without.value, "{spec}");
            assert_eq!(with.certificate, without.certificate, "{spec}");
        }
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        let g = generate(&FamilySpec::Hypercube { n: 6 }).unwrap();
        let dm = all_pairs_distances(&g);
        let r = metric_dimension(
            &g,
            &dm,
            &SolveOptions {
                budget: Some(Duration::from_millis(1)),
                ..Default::default()
            },
        );
        assert_eq!(r.status, SolveStatus::Bounds);
        assert!(r.lower >= 2);
        assert!(r.lower <= r.upper);
        assert!(resolves(&g, &dm, &r.certificate));
        assert_eq!(r.value, None);
    }

    #[test]
    fn results_are_deterministic() {
        let g = generate(&FamilySpec::Hypercube { n: 4 }).unwrap();
        let dm = all_pairs_distances(&g);
        let a = metric_dimension(&g, &dm, &SolveOptions::default());
        let b = metric_dimension(&g, &dm, &SolveOptions::default());
        assert_eq!(a.value, b.value);
        assert_eq!(a.certificate, b.certificate);
    }

    #[test]
    fn json_shape_is_stable() {
        let g = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        let dm = all_pairs_distances(&g);
        let r = metric_dimension(&g, &dm, &SolveOptions::default());
        let json = r.to_json_string();
        assert!(json.starts_with("{\"kind\":\"beta\",\"status\":\"exact\",\"value\":2"));
        assert!(json.contains("\"certificate\":[0,1]"));
        assert!(json.contains("\"nodes_explored\":"));
        assert!(json.contains("\"elapsed_ms\":"));
    }
}
