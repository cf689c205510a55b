//! Static guessing games that reduce to graph resolution: Mastermind played
//! with agreement counts only, and coin weighing with counted outcomes.
//!
//! A static Mastermind question set pins down every secret exactly when it
//! resolves the Hamming graph on the code space, because the agreement count
//! is the code length minus the Hamming distance. Coin weighing is the same
//! story on the hypercube, except the answer is a subset count rather than a
//! distance, which shifts the minimum by at most one.

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::VertexSet;
use crate::solver::{InvariantKind, SolveStatus, SolverResult};

/// Enumeration cap for secret spaces (`k^n`).
pub const SECRET_CAP: u64 = 10_000_000;
/// Coin count cap for scheme verification (`2^n` assignments).
pub const WEIGHING_VERIFY_MAX_N: usize = 24;
/// Coin count cap for exact minimum-scheme search.
pub const MIN_WEIGHINGS_MAX_N: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GamesError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("{size} exceeds the enumeration cap of {cap}")]
    TooLarge { size: u64, cap: u64 },
    #[error("symbol {value} outside the alphabet 1..={k}")]
    SymbolRange { value: u32, k: u32 },
    #[error("{0}")]
    Parse(String),
    #[error("a weighing scheme needs at least one weighing")]
    EmptyScheme,
    #[error("coin {index} outside 0..{n}")]
    CoinRange { index: usize, n: usize },
}

fn parse_err(msg: impl Into<String>) -> GamesError {
    GamesError::Parse(msg.into())
}

/// A secret or question vector over the alphabet `{1..k}`.
///
/// Binary vectors keep their conventional 0/1 spelling at the boundary:
/// parsing `00101` or `0 0 1 0 1` maps bit b to symbol b+1, and such a
/// vector displays as a 0/1 string again. Equality looks only at the
/// symbols, never at the spelling.
#[derive(Debug, Clone, Eq)]
pub struct CodeVector {
    symbols: Vec<u32>,
    binary_form: bool,
}

impl PartialEq for CodeVector {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl CodeVector {
    pub fn new(symbols: Vec<u32>, k: u32) -> Result<Self, GamesError> {
        for &s in &symbols {
            if s < 1 || s > k {
                return Err(GamesError::SymbolRange { value: s, k });
            }
        }
        Ok(Self {
            symbols,
            binary_form: false,
        })
    }

    /// Builds a vector from 0/1 bits, remembering the binary spelling.
    pub fn from_bits(bits: &[u8]) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Self {
            symbols: bits.iter().map(|&b| u32::from(b) + 1).collect(),
            binary_form: true,
        }
    }

    /// Parses one whitespace-separated vector.
    ///
    /// Entries are symbols in `1..=k`. Two binary spellings are also
    /// accepted when `k = 2`: a single compact 0/1 token such as `00101`,
    /// and a separated list containing a 0 (a 0 cannot be a symbol, so the
    /// whole line must then be bits).
    pub fn parse(text: &str, k: u32) -> Result<Self, GamesError> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(parse_err("empty vector"));
        }
        if k == 2
            && tokens.len() == 1
            && tokens[0].len() > 1
            && tokens[0].bytes().all(|b| b == b'0' || b == b'1')
        {
            let bits: Vec<u8> = tokens[0].bytes().map(|b| b - b'0').collect();
            return Ok(Self::from_bits(&bits));
        }
        let mut values = Vec::with_capacity(tokens.len());
        for token in tokens {
            let value: u32 = token
                .parse()
                .map_err(|_| parse_err(format!("bad symbol '{token}'")))?;
            values.push(value);
        }
        if values.contains(&0) {
            if k != 2 || values.iter().any(|&v| v > 1) {
                return Err(parse_err(
                    "a 0 entry means 0/1 form, which needs alphabet size 2 and only 0/1 entries",
                ));
            }
            let bits: Vec<u8> = values.iter().map(|&v| v as u8).collect();
            return Ok(Self::from_bits(&bits));
        }
        Self::new(values, k)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// Index of this vector in the generated Hamming graph `H_{n,k}`:
    /// big-endian mixed radix over symbol−1 digits, matching the generator's
    /// vertex labels.
    pub fn hamming_index(&self, k: u32) -> usize {
        self.symbols
            .iter()
            .fold(0usize, |acc, &s| acc * k as usize + (s as usize - 1))
    }

    /// Inverse of [`hamming_index`](Self::hamming_index). Binary vectors
    /// come back in 0/1 spelling.
    pub fn from_hamming_index(index: usize, n: usize, k: u32) -> Self {
        let mut symbols = vec![0u32; n];
        let mut rest = index;
        for slot in symbols.iter_mut().rev() {
            *slot = (rest % k as usize) as u32 + 1;
            rest /= k as usize;
        }
        Self {
            symbols,
            binary_form: k == 2,
        }
    }
}

impl fmt::Display for CodeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.binary_form {
            for &s in &self.symbols {
                write!(f, "{}", s - 1)?;
            }
            Ok(())
        } else {
            let mut first = true;
            for &s in &self.symbols {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{s}")?;
                first = false;
            }
            Ok(())
        }
    }
}

/// Number of positions where the vectors agree.
pub fn agree_count(s: &CodeVector, t: &CodeVector) -> Result<u64, GamesError> {
    if s.len() != t.len() {
        return Err(GamesError::LengthMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    Ok(s.symbols
        .iter()
        .zip(&t.symbols)
        .filter(|(a, b)| a == b)
        .count() as u64)
}

fn secret_space(n: usize, k: u32) -> Result<u64, GamesError> {
    let total = (k as u64)
        .checked_pow(n as u32)
        .ok_or(GamesError::TooLarge {
            size: u64::MAX,
            cap: SECRET_CAP,
        })?;
    if total > SECRET_CAP {
        return Err(GamesError::TooLarge {
            size: total,
            cap: SECRET_CAP,
        });
    }
    Ok(total)
}

fn check_questions(n: usize, k: u32, questions: &[CodeVector]) -> Result<(), GamesError> {
    for q in questions {
        if q.len() != n {
            return Err(GamesError::LengthMismatch {
                left: n,
                right: q.len(),
            });
        }
        for &s in q.symbols() {
            if s < 1 || s > k {
                return Err(GamesError::SymbolRange { value: s, k });
            }
        }
    }
    Ok(())
}

// Walks all k^n secrets as 1-based digit vectors, calling the visitor with
// each one. The odometer bumps the last digit first.
fn for_each_secret(n: usize, k: u32, mut visit: impl FnMut(&[u32])) {
    let mut digits = vec![1u32; n];
    loop {
        visit(&digits);
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if digits[pos] < k {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 1;
        }
    }
}

fn agreements(secret: &[u32], question: &CodeVector) -> u64 {
    secret
        .iter()
        .zip(question.symbols())
        .filter(|(a, b)| a == b)
        .count() as u64
}

/// True iff the answer vector `(a(secret, t))_t` is distinct for every
/// secret, i.e. the questions pin down any secret without adaptivity.
///
/// Enumerates all `k^n` secrets, so the space is capped at [`SECRET_CAP`].
pub fn static_questions_verify(
    n: usize,
    k: u32,
    questions: &[CodeVector],
) -> Result<bool, GamesError> {
    check_questions(n, k, questions)?;
    let total = secret_space(n, k)?;
    if total <= 1 {
        return Ok(true);
    }
    if questions.is_empty() {
        return Ok(false);
    }
    let bits = usize::BITS - n.leading_zeros();
    if questions.len() as u32 * bits <= 128 {
        let mut signatures: Vec<u128> = Vec::with_capacity(total as usize);
        for_each_secret(n, k, |secret| {
            let sig = questions
                .iter()
                .fold(0u128, |acc, q| acc << bits | u128::from(agreements(secret, q)));
            signatures.push(sig);
        });
        signatures.sort_unstable();
        Ok(signatures.windows(2).all(|w| w[0] != w[1]))
    } else {
        // Unusually many questions; fall back to unpacked signatures.
        let mut signatures: Vec<Vec<u16>> = Vec::with_capacity(total as usize);
        for_each_secret(n, k, |secret| {
            signatures.push(questions.iter().map(|q| agreements(secret, q) as u16).collect());
        });
        signatures.sort_unstable();
        Ok(signatures.windows(2).all(|w| w[0] != w[1]))
    }
}

/// Outcome of inverting a set of answered questions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inference {
    /// Exactly one secret matches every answer.
    Unique(CodeVector),
    /// At least two secrets match; two witnesses are returned.
    Ambiguous(CodeVector, CodeVector),
    /// No secret matches.
    Inconsistent,
}

/// Enumerates the secret space and keeps every vector consistent with all
/// `(question, answer)` pairs, stopping at the second witness.
pub fn infer_secret(
    n: usize,
    k: u32,
    questions: &[CodeVector],
    answers: &[u64],
) -> Result<Inference, GamesError> {
    if questions.len() != answers.len() {
        return Err(GamesError::LengthMismatch {
            left: questions.len(),
            right: answers.len(),
        });
    }
    check_questions(n, k, questions)?;
    secret_space(n, k)?;
    let mut witnesses: Vec<CodeVector> = Vec::new();
    for_each_secret(n, k, |secret| {
        if witnesses.len() >= 2 {
            return;
        }
        let consistent = questions
            .iter()
            .zip(answers)
            .all(|(q, &a)| agreements(secret, q) == a);
        if consistent {
            witnesses.push(CodeVector {
                symbols: secret.to_vec(),
                binary_form: k == 2,
            });
        }
    });
    let mut it = witnesses.into_iter();
    Ok(match (it.next(), it.next()) {
        (None, _) => Inference::Inconsistent,
        (Some(only), None) => Inference::Unique(only),
        (Some(first), Some(second)) => Inference::Ambiguous(first, second),
    })
}

/// A fixed plan of weighings over `n` coins, each weighing a subset of coin
/// indices stored as a bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeighingScheme {
    n: usize,
    weighings: Vec<u32>,
}

impl WeighingScheme {
    pub fn new(n: usize, subsets: &[Vec<usize>]) -> Result<Self, GamesError> {
        if n == 0 || n > 32 {
            return Err(parse_err(format!("coin count {n} outside 1..=32")));
        }
        if subsets.is_empty() {
            return Err(GamesError::EmptyScheme);
        }
        let mut weighings = Vec::with_capacity(subsets.len());
        for subset in subsets {
            let mut mask = 0u32;
            for &coin in subset {
                if coin >= n {
                    return Err(GamesError::CoinRange { index: coin, n });
                }
                mask |= 1 << coin;
            }
            weighings.push(mask);
        }
        Ok(Self { n, weighings })
    }

    pub fn from_masks(n: usize, weighings: Vec<u32>) -> Result<Self, GamesError> {
        if n == 0 || n > 32 {
            return Err(parse_err(format!("coin count {n} outside 1..=32")));
        }
        if weighings.is_empty() {
            return Err(GamesError::EmptyScheme);
        }
        let valid = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        for &mask in &weighings {
            if mask & !valid != 0 {
                return Err(GamesError::CoinRange {
                    index: 31 - (mask & !valid).leading_zeros() as usize,
                    n,
                });
            }
        }
        Ok(Self { n, weighings })
    }

    /// Parses one weighing per line as space-separated coin indices. Blank
    /// lines and `#` comments are skipped.
    pub fn parse(text: &str, n: usize) -> Result<Self, GamesError> {
        let mut subsets = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut subset = Vec::new();
            for token in line.split_whitespace() {
                let coin: usize = token.parse().map_err(|_| {
                    parse_err(format!("line {}: bad coin index '{token}'", lineno + 1))
                })?;
                subset.push(coin);
            }
            subsets.push(subset);
        }
        Self::new(n, &subsets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weighings(&self) -> &[u32] {
        &self.weighings
    }

    pub fn len(&self) -> usize {
        self.weighings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weighings.is_empty()
    }
}

impl fmt::Display for WeighingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &mask in &self.weighings {
            let mut first = true;
            for coin in 0..self.n {
                if mask & (1 << coin) != 0 {
                    if !first {
                        write!(f, " ")?;
                    }
                    write!(f, "{coin}")?;
                    first = false;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// True iff distinct light/heavy assignments always produce distinct
/// per-weighing heavy-coin counts.
///
/// Enumerates all `2^n` assignments; capped at [`WEIGHING_VERIFY_MAX_N`]
/// coins. The packed path holds one word per assignment, about 270 MB at
/// the cap.
pub fn weighing_scheme_verify(scheme: &WeighingScheme) -> Result<bool, GamesError> {
    if scheme.n > WEIGHING_VERIFY_MAX_N {
        return Err(GamesError::TooLarge {
            size: 1u64 << scheme.n,
            cap: 1u64 << WEIGHING_VERIFY_MAX_N,
        });
    }
    let total = 1u32 << scheme.n;
    let bits = usize::BITS - scheme.n.leading_zeros();
    if scheme.len() as u32 * bits <= 128 {
        let mut signatures: Vec<u128> = Vec::with_capacity(total as usize);
        for assignment in 0..total {
            let sig = scheme
                .weighings
                .iter()
                .fold(0u128, |acc, &m| acc << bits | u128::from((assignment & m).count_ones()));
            signatures.push(sig);
        }
        signatures.sort_unstable();
        Ok(signatures.windows(2).all(|w| w[0] != w[1]))
    } else {
        let mut signatures: Vec<Vec<u16>> = Vec::with_capacity(total as usize);
        for assignment in 0..total {
            signatures.push(
                scheme
                    .weighings
                    .iter()
                    .map(|&m| (assignment & m).count_ones() as u16)
                    .collect(),
            );
        }
        signatures.sort_unstable();
        Ok(signatures.windows(2).all(|w| w[0] != w[1]))
    }
}

/// Smallest number of weighings that identifies every light/heavy assignment
/// of `n` coins, by iterative deepening over subset families in ascending
/// mask order.
///
/// Any scheme can relabel its fewest-coin weighing onto a prefix of the
/// coins, which makes that mask numerically least, so the search only seeds
/// the first slot with prefix blocks. The certificate lists the chosen
/// subsets as bitmasks and is the first scheme found in that canonical
/// order, hence deterministic. On budget exhaustion the result degrades to
/// bounds, with the singleton scheme as the upper witness.
pub fn min_weighings(n: usize, budget: Option<Duration>) -> Result<SolverResult, GamesError> {
    if n < 1 {
        return Err(parse_err("need at least one coin"));
    }
    if n > MIN_WEIGHINGS_MAX_N {
        return Err(GamesError::TooLarge {
            size: n as u64,
            cap: MIN_WEIGHINGS_MAX_N as u64,
        });
    }
    let start = Instant::now();
    let assignments = 1u32 << n;
    let mut nodes = 0u64;
    let mut sig_buf: Vec<u32> = Vec::with_capacity(assignments as usize);
    let singletons: Vec<usize> = (0..n).map(|c| 1usize << c).collect();
    for depth in 1..=n {
        let mut chosen: Vec<u32> = Vec::with_capacity(depth);
        match search(
            n,
            depth,
            1,
            1,
            &mut chosen,
            &mut nodes,
            &mut sig_buf,
            start,
            budget,
        ) {
            SearchOutcome::Found => {
                let certificate: VertexSet =
                    chosen.iter().map(|&m| m as usize).collect();
                return Ok(SolverResult {
                    kind: InvariantKind::Weighings,
                    status: SolveStatus::Exact,
                    value: Some(depth as u64),
                    lower: depth as u64,
                    upper: depth as u64,
                    certificate,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                });
            }
            SearchOutcome::Exhausted => {}
            SearchOutcome::OutOfTime => {
                return Ok(SolverResult {
                    kind: InvariantKind::Weighings,
                    status: SolveStatus::Bounds,
                    value: None,
                    lower: depth as u64,
                    upper: n as u64,
                    certificate: singletons.iter().copied().collect(),
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    unreachable!("the singleton scheme always succeeds at depth n");
}

enum SearchOutcome {
    Found,
    Exhausted,
    OutOfTime,
}

// Depth-first extension of `chosen` with masks in strictly ascending order.
// `capacity` is the product of (weighing size + 1) so far: each weighing
// takes at most size+1 distinct values, so the products must reach 2^n.
#[allow(clippy::too_many_arguments)]
fn search(
    n: usize,
    depth: usize,
    min_mask: u32,
    capacity: u64,
    chosen: &mut Vec<u32>,
    nodes: &mut u64,
    sig_buf: &mut Vec<u32>,
    start: Instant,
    budget: Option<Duration>,
) -> SearchOutcome {
    if chosen.len() == depth {
        return if injective(n, chosen, sig_buf) {
            SearchOutcome::Found
        } else {
            SearchOutcome::Exhausted
        };
    }
    let remaining = depth - chosen.len();
    let assignments = 1u64 << n;
    let candidates: Vec<u32> = if chosen.is_empty() {
        // Prefix blocks only; see the canonicalization note above.
        (1..=n as u32).map(|w| (1u32 << w) - 1).collect()
    } else {
        (min_mask..1u32 << n).collect()
    };
    for mask in candidates {
        *nodes += 1;
        if *nodes % 4096 == 0 {
            if let Some(limit) = budget {
                if start.elapsed() > limit {
                    return SearchOutcome::OutOfTime;
                }
            }
        }
        let weight = u64::from(mask.count_ones()) + 1;
        let best_future = (n as u64 + 1).pow(remaining as u32 - 1);
        if capacity * weight * best_future < assignments {
            continue;
        }
        chosen.push(mask);
        match search(
            n,
            depth,
            mask + 1,
            capacity * weight,
            chosen,
            nodes,
            sig_buf,
            start,
            budget,
        ) {
            SearchOutcome::Found => return SearchOutcome::Found,
            SearchOutcome::Exhausted => {}
            SearchOutcome::OutOfTime => return SearchOutcome::OutOfTime,
        }
        chosen.pop();
    }
    SearchOutcome::Exhausted
}

fn injective(n: usize, weighings: &[u32], sig_buf: &mut Vec<u32>) -> bool {
    // Counts fit in 3 bits for n <= 6 weighings of n <= 6 coins.
    sig_buf.clear();
    for assignment in 0..1u32 << n {
        let sig = weighings
            .iter()
            .fold(0u32, |acc, &m| acc << 3 | (assignment & m).count_ones());
        sig_buf.push(sig);
    }
    sig_buf.sort_unstable();
    sig_buf.windows(2).all(|w| w[0] != w[1])
}

/// Parses one vector per line, each of length `n` over `{1..k}`. Blank
/// lines and `#` comments are skipped.
pub fn parse_code_vectors(text: &str, n: usize, k: u32) -> Result<Vec<CodeVector>, GamesError> {
    let mut vectors = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let vector = CodeVector::parse(line, k)
            .map_err(|e| parse_err(format!("line {}: {e}", lineno + 1)))?;
        if vector.len() != n {
            return Err(parse_err(format!(
                "line {}: expected {} entries, got {}",
                lineno + 1,
                n,
                vector.len()
            )));
        }
        vectors.push(vector);
    }
    Ok(vectors)
}

/// Parses whitespace-separated answer values, one or more per line, in
/// question order. Blank lines and `#` comments are skipped.
pub fn parse_answers(text: &str) -> Result<Vec<u64>, GamesError> {
    let mut answers = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for token in line.split_whitespace() {
            let value: u64 = token.parse().map_err(|_| {
                parse_err(format!("line {}: bad answer '{token}'", lineno + 1))
            })?;
            answers.push(value);
        }
    }
    Ok(answers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};
    use crate::graph::all_pairs_distances;
    use crate::resolve::resolves;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn vector(symbols: &[u32], k: u32) -> CodeVector {
        CodeVector::new(symbols.to_vec(), k).unwrap()
    }

    #[test]
    fn agreement_counts() {
        let s = vector(&[1, 2, 3, 4], 6);
        let t = vector(&[1, 3, 3, 5], 6);
        assert_eq!(agree_count(&s, &t), Ok(2));
        assert_eq!(agree_count(&s, &s), Ok(4));
        let short = vector(&[1], 6);
        assert_eq!(
            agree_count(&s, &short),
            Err(GamesError::LengthMismatch { left: 4, right: 1 })
        );
    }

    #[test]
    fn agreement_complements_hamming_distance() {
        let h = generate(&FamilySpec::Hamming { n: 3, k: 3 }).unwrap();
        let dm = all_pairs_distances(&h);
        for v in 0..h.n() {
            for w in 0..h.n() {
                let cv = CodeVector::from_hamming_index(v, 3, 3);
                let cw = CodeVector::from_hamming_index(w, 3, 3);
                let a = agree_count(&cv, &cw).unwrap();
                assert_eq!(dm.get(v, w) as u64, 3 - a);
            }
        }
    }

    #[test]
    fn hamming_index_round_trips_and_matches_labels() {
        let h = generate(&FamilySpec::Hamming { n: 2, k: 3 }).unwrap();
        for v in 0..h.n() {
            let cv = CodeVector::from_hamming_index(v, 2, 3);
            assert_eq!(cv.hamming_index(3), v);
            let label: String = cv
                .symbols()
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",");
            assert_eq!(h.label(v), Some(label.as_str()));
        }
        assert_eq!(
            CodeVector::from_hamming_index(5, 2, 3).symbols(),
            &[2, 3]
        );
    }

    #[test]
    fn parsing_accepts_binary_and_symbol_forms() {
        let compact = CodeVector::parse("00101", 2).unwrap();
        assert_eq!(compact.symbols(), &[1, 1, 2, 1, 2]);
        assert_eq!(compact.to_string(), "00101");
        let separated = CodeVector::parse("0 0 1 0 1", 2).unwrap();
        assert_eq!(separated, compact);
        let symbols = CodeVector::parse("2 1 2", 2).unwrap();
        assert_eq!(symbols.symbols(), &[2, 1, 2]);
        assert_eq!(symbols.to_string(), "2 1 2");
        // No zero entry, so this is the all-ones symbol vector.
        let ones = CodeVector::parse("1 1", 2).unwrap();
        assert_eq!(ones.symbols(), &[1, 1]);
        assert!(CodeVector::parse("1 0 1", 3).is_err());
        assert!(CodeVector::parse("", 2).is_err());
        assert!(CodeVector::parse("4 1", 3).is_err());
    }

    #[test]
    fn question_verification_matches_known_cases() {
        let questions = parse_code_vectors("00000\n00011\n00101\n01001\n", 5, 2).unwrap();
        assert_eq!(static_questions_verify(5, 2, &questions), Ok(true));
        // beta(H_{2,3}) = 3, so no two questions can work.
        let all: Vec<CodeVector> = (0..9)
            .map(|v| CodeVector::from_hamming_index(v, 2, 3))
            .collect();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let pair = vec![all[i].clone(), all[j].clone()];
                assert_eq!(static_questions_verify(2, 3, &pair), Ok(false));
            }
        }
        let single = vec![vector(&[1], 2)];
        assert_eq!(static_questions_verify(1, 2, &single), Ok(true));
        assert!(matches!(
            static_questions_verify(30, 2, &[]),
            Err(GamesError::TooLarge { .. })
        ));
    }

    #[test]
    fn question_verification_agrees_with_graph_resolution() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for &(n, k) in &[(2usize, 3u32), (3, 2), (2, 4), (3, 3)] {
            let h = generate(&FamilySpec::Hamming {
                n,
                k: k as usize,
            })
            .unwrap();
            let dm = all_pairs_distances(&h);
            for _ in 0..40 {
                let size = rng.random_range(1..=4usize);
                let mut set: Vec<usize> = Vec::new();
                while set.len() < size {
                    let v = rng.random_range(0..h.n());
                    if !set.contains(&v) {
                        set.push(v);
                    }
                }
                let questions: Vec<CodeVector> = set
                    .iter()
                    .map(|&v| CodeVector::from_hamming_index(v, n, k))
                    .collect();
                let by_questions = static_questions_verify(n, k, &questions).unwrap();
                let by_graph = resolves(&h, &dm, &set.iter().copied().collect());
                assert_eq!(by_questions, by_graph, "n={n} k={k} set={set:?}");
            }
        }
    }

    #[test]
    fn inference_round_trips_and_detects_failure_modes() {
        let questions = parse_code_vectors("00000\n00011\n00101\n01001\n", 5, 2).unwrap();
        let secret = CodeVector::parse("10110", 2).unwrap();
        let answers: Vec<u64> = questions
            .iter()
            .map(|q| agree_count(&secret, q).unwrap())
            .collect();
        match infer_secret(5, 2, &questions, &answers).unwrap() {
            Inference::Unique(found) => {
                assert_eq!(found, secret);
                assert_eq!(found.to_string(), "10110");
            }
            other => panic!("expected unique secret, got {other:?}"),
        }
        let impossible = vec![99u64; questions.len()];
        assert_eq!(
            infer_secret(5, 2, &questions, &impossible),
            Ok(Inference::Inconsistent)
        );
        // One question cannot separate the eight secrets agreeing with it
        // exactly once.
        let one = vec![vector(&[1, 1], 3)];
        match infer_secret(2, 3, &one, &[1]).unwrap() {
            Inference::Ambiguous(a, b) => assert_ne!(a, b),
            other => panic!("expected ambiguity, got {other:?}"),
        }
        assert_eq!(
            infer_secret(2, 3, &one, &[2]).unwrap(),
            Inference::Unique(vector(&[1, 1], 3))
        );
        assert_eq!(
            infer_secret(2, 3, &one, &[1, 1]),
            Err(GamesError::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn weighing_verification_matches_known_cases() {
        let singletons = WeighingScheme::new(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(weighing_scheme_verify(&singletons), Ok(true));
        // LH and HL both put one heavy coin on the scale.
        let joint = WeighingScheme::new(2, &[vec![0, 1]]).unwrap();
        assert_eq!(weighing_scheme_verify(&joint), Ok(false));
        let three = WeighingScheme::new(3, &[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(weighing_scheme_verify(&three), Ok(true));
        let big = WeighingScheme::new(25, &[vec![0]]).unwrap();
        assert!(matches!(
            weighing_scheme_verify(&big),
            Err(GamesError::TooLarge { .. })
        ));
    }

    #[test]
    fn scheme_construction_and_parsing() {
        assert_eq!(
            WeighingScheme::new(3, &[]),
            Err(GamesError::EmptyScheme)
        );
        assert_eq!(
            WeighingScheme::new(3, &[vec![3]]),
            Err(GamesError::CoinRange { index: 3, n: 3 })
        );
        let parsed = WeighingScheme::parse("# plan\n0 2\n1\n", 3).unwrap();
        assert_eq!(parsed.weighings(), &[0b101, 0b010]);
        assert_eq!(parsed.to_string(), "0 2\n1\n");
        assert_eq!(WeighingScheme::parse(parsed.to_string().as_str(), 3), Ok(parsed));
        assert!(WeighingScheme::parse("0 x\n", 3).is_err());
    }

    #[test]
    fn minimum_weighings_small_values() {
        let one = min_weighings(1, None).unwrap();
        assert_eq!(one.value, Some(1));
        let two = min_weighings(2, None).unwrap();
        assert_eq!(two.value, Some(2));
        assert_eq!(two.certificate.as_slice(), &[0b01, 0b10]);
        let three = min_weighings(3, None).unwrap();
        assert_eq!(three.value, Some(3));
        let again = min_weighings(3, None).unwrap();
        assert_eq!(three.certificate, again.certificate);
        assert!(matches!(
            min_weighings(7, None),
            Err(GamesError::TooLarge { .. })
        ));
        // Every certificate must verify as a scheme.
        for n in 1..=4 {
            let result = min_weighings(n, None).unwrap();
            let masks: Vec<u32> = result
                .certificate
                .iter()
                .map(|&m| m as u32)
                .collect();
            let scheme = WeighingScheme::from_masks(n, masks).unwrap();
            assert_eq!(weighing_scheme_verify(&scheme), Ok(true));
        }
    }

    #[test]
    fn answer_file_parsing() {
        assert_eq!(parse_answers("3\n1 4\n# note\n2\n").unwrap(), vec![3, 1, 4, 2]);
        assert!(parse_answers("3\nx\n").is_err());
    }
}
