//! Critical sets: uniquely completable partial squares that are minimal.
//!
//! Unique completability is monotone (adding a triple from the completion
//! keeps it unique), so a uniquely completable set is critical exactly when
//! each of its one-element-removed subsets has at least two completions.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::latin::{
    completions, count_completions_capped, Budget, Count, LatinError, LatinSquare,
    PartialLatinSquare, Triple,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalError {
    #[error(transparent)]
    Latin(#[from] LatinError),
    #[error("input is not a critical set: {0}")]
    NotCriticalInput(NotCritical),
}

/// Why a partial square failed the critical-set test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotCritical {
    Inconsistent,
    NoCompletion,
    MultipleCompletions,
    /// Removing this triple leaves a set that still completes uniquely.
    NotMinimal(Triple),
}

impl fmt::Display for NotCritical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotCritical::Inconsistent => f.write_str("inconsistent"),
            NotCritical::NoCompletion => f.write_str("no completion"),
            NotCritical::MultipleCompletions => f.write_str("not uniquely completable"),
            NotCritical::NotMinimal(t) => write!(f, "not minimal ({t} is redundant)"),
        }
    }
}

/// Two distinct completions of `base` with `removed` taken out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityWitness {
    pub removed: Triple,
    pub first: LatinSquare,
    pub second: LatinSquare,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalSetCertificate {
    pub base: PartialLatinSquare,
    pub square: LatinSquare,
    pub witnesses: Vec<MinimalityWitness>,
}

impl CriticalSetCertificate {
    /// Re-checks the certificate against the solver and its own witnesses.
    pub fn verify(&self, budget: Budget) -> Result<bool, LatinError> {
        if !self.square.extends(&self.base) {
            return Ok(false);
        }
        if count_completions_capped(&self.base, 2, budget)? != Count::Exact(1) {
            return Ok(false);
        }
        if self.witnesses.len() != self.base.len() {
            return Ok(false);
        }
        for (w, t) in self.witnesses.iter().zip(self.base.iter()) {
            let reduced = self.base.without(t);
            if w.removed != *t
                || w.first == w.second
                || !w.first.extends(&reduced)
                || !w.second.extends(&reduced)
            {
                return Ok(false);
            }
            if count_completions_capped(&reduced, 2, budget)?.value() < 2 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn size(&self) -> usize {
        self.base.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Criticality {
    Critical(CriticalSetCertificate),
    NotCritical(NotCritical),
}

impl Criticality {
    pub fn certificate(self) -> Option<CriticalSetCertificate> {
        match self {
            Criticality::Critical(c) => Some(c),
            Criticality::NotCritical(_) => None,
        }
    }
}

/// Exactly one completion exists. Inconsistent input has none.
pub fn is_uniquely_completable(p: &PartialLatinSquare, budget: Budget) -> Result<bool, LatinError> {
    if !p.is_consistent() {
        return Ok(false);
    }
    Ok(count_completions_capped(p, 2, budget)? == Count::Exact(1))
}

pub fn is_critical_set(p: &PartialLatinSquare, budget: Budget) -> Result<Criticality, LatinError> {
    if !p.is_consistent() {
        return Ok(Criticality::NotCritical(NotCritical::Inconsistent));
    }
    let mut found = completions(p, 2, budget)?;
    let square = match found.len() {
        0 => return Ok(Criticality::NotCritical(NotCritical::NoCompletion)),
        1 => found.remove(0),
        _ => return Ok(Criticality::NotCritical(NotCritical::MultipleCompletions)),
    };
    let mut witnesses = Vec::with_capacity(p.len());
    for t in p.iter() {
        let mut pair = completions(&p.without(t), 2, budget)?;
        if pair.len() < 2 {
            return Ok(Criticality::NotCritical(NotCritical::NotMinimal(*t)));
        }
        let second = pair.pop().expect("two completions");
        let first = pair.pop().expect("two completions");
        witnesses.push(MinimalityWitness {
            removed: *t,
            first,
            second,
        });
    }
    Ok(Criticality::Critical(CriticalSetCertificate {
        base: p.clone(),
        square,
        witnesses,
    }))
}

/// The sense in which an added entry was forced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Forcing {
    /// The only symbol admissible in its cell.
    Cell,
    /// The only cell in its row that admits the symbol.
    Row,
    /// The only cell in its column that admits the symbol.
    Column,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForcingMode {
    CellOnly,
    CellRowColumn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForcedStep {
    pub triple: Triple,
    pub forcing: Forcing,
}

/// A chain of forced additions from `base` up to a full square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingChain {
    pub base: PartialLatinSquare,
    pub steps: Vec<ForcedStep>,
    pub mode: ForcingMode,
}

impl ForcingChain {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The partial squares before each step, starting from `base`.
    pub fn partials(&self) -> Vec<PartialLatinSquare> {
        let mut current = self.base.clone();
        let mut out = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            out.push(current.clone());
            current
                .insert(step.triple)
                .expect("forced triples stay in range");
        }
        out
    }

    /// The full square the chain ends in.
    pub fn result(&self) -> PartialLatinSquare {
        let mut p = self.base.clone();
        for step in &self.steps {
            p.insert(step.triple).expect("forced triples stay in range");
        }
        p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strength {
    Strong(ForcingChain),
    SemiStrong(ForcingChain),
    NeitherOrUnknown,
}

impl Strength {
    pub fn label(&self) -> &'static str {
        match self {
            Strength::Strong(_) => "strong",
            Strength::SemiStrong(_) => "semi-strong",
            Strength::NeitherOrUnknown => "neither",
        }
    }

    /// Strong or semi-strong.
    pub fn is_forcing(&self) -> bool {
        !matches!(self, Strength::NeitherOrUnknown)
    }
}

struct Board {
    n: usize,
    cells: Vec<usize>,
    rows: Vec<u64>,
    cols: Vec<u64>,
}

impl Board {
    fn new(p: &PartialLatinSquare) -> Self {
        let n = p.order();
        let mut b = Board {
            n,
            cells: vec![0; n * n],
            rows: vec![0; n],
            cols: vec![0; n],
        };
        for t in p.iter() {
            b.place(t.row - 1, t.col - 1, t.symbol);
        }
        b
    }

    fn place(&mut self, r: usize, c: usize, symbol: usize) {
        self.cells[r * self.n + c] = symbol;
        self.rows[r] |= 1 << (symbol - 1);
        self.cols[c] |= 1 << (symbol - 1);
    }

    fn admits(&self, r: usize, c: usize, symbol: usize) -> bool {
        self.cells[r * self.n + c] == 0 && (self.rows[r] | self.cols[c]) & (1 << (symbol - 1)) == 0
    }

    fn cell_forced(&self) -> Option<Triple> {
        let n = self.n;
        let full = (1u64 << n) - 1;
        (0..n * n).find_map(|idx| {
            let (r, c) = (idx / n, idx % n);
            if self.cells[idx] != 0 {
                return None;
            }
            let cand = full & !(self.rows[r] | self.cols[c]);
            (cand.count_ones() == 1)
                .then(|| Triple::new(r + 1, c + 1, cand.trailing_zeros() as usize + 1))
        })
    }

    fn line_forced(&self, by_row: bool) -> Option<Triple> {
        let n = self.n;
        for line in 0..n {
            let used = if by_row { self.rows[line] } else { self.cols[line] };
            for symbol in 1..=n {
                if used & (1 << (symbol - 1)) != 0 {
                    continue;
                }
                let mut spots = (0..n).filter(|&k| {
                    let (r, c) = if by_row { (line, k) } else { (k, line) };
                    self.admits(r, c, symbol)
                });
                if let (Some(k), None) = (spots.next(), spots.next()) {
                    let (r, c) = if by_row { (line, k) } else { (k, line) };
                    return Some(Triple::new(r + 1, c + 1, symbol));
                }
            }
        }
        None
    }
}

/// Applies forced moves greedily until the square is full or nothing is
/// forced. Returns the chain only when it reaches a full square.
///
/// A forced move never stops another move from being forced, so the greedy
/// order finds a chain whenever one exists.
pub fn forcing_chain(p: &PartialLatinSquare, mode: ForcingMode) -> Option<ForcingChain> {
    if !p.is_consistent() {
        return None;
    }
    let n = p.order();
    let mut board = Board::new(p);
    let mut steps = Vec::with_capacity(n * n - p.len());
    while steps.len() + p.len() < n * n {
        let next = board
            .cell_forced()
            .map(|t| (t, Forcing::Cell))
            .or_else(|| match mode {
                ForcingMode::CellOnly => None,
                ForcingMode::CellRowColumn => board
                    .line_forced(true)
                    .map(|t| (t, Forcing::Row))
                    .or_else(|| board.line_forced(false).map(|t| (t, Forcing::Column))),
            });
        let (triple, forcing) = next?;
        board.place(triple.row - 1, triple.col - 1, triple.symbol);
        steps.push(ForcedStep { triple, forcing });
    }
    Some(ForcingChain {
        base: p.clone(),
        steps,
        mode,
    })
}

/// Strong if cell forcing alone completes `p`, semi-strong if cell, row and
/// column forcing together do. The stronger label wins.
pub fn classify_strength(p: &PartialLatinSquare, budget: Budget) -> Result<Strength, CriticalError> {
    if let Criticality::NotCritical(why) = is_critical_set(p, budget)? {
        return Err(CriticalError::NotCriticalInput(why));
    }
    Ok(classify_forcing(p))
}

/// [`classify_strength`] without the critical-set check, for sets that are
/// already certified.
pub fn classify_forcing(p: &PartialLatinSquare) -> Strength {
    if let Some(chain) = forcing_chain(p, ForcingMode::CellOnly) {
        return Strength::Strong(chain);
    }
    if let Some(chain) = forcing_chain(p, ForcingMode::CellRowColumn) {
        return Strength::SemiStrong(chain);
    }
    Strength::NeitherOrUnknown
}

/// Limits for [`find_critical_sets`].
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Per solver call.
    pub budget: Budget,
    /// Largest number of subsets an exhaustive scan may visit.
    pub subset_budget: u64,
    /// Greedy reductions to try when the scan is too large.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            budget: Budget::default(),
            subset_budget: 200_000,
            samples: 32,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriticalSearch {
    /// Sorted by size, then lexicographically by triples.
    pub sets: Vec<CriticalSetCertificate>,
    pub exhaustive: bool,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn subset_count(n: u64, max: u64) -> u64 {
    (0..=max).fold(0u64, |acc, k| acc.saturating_add(binomial(n, k)))
}

/// Visits every `k`-subset of `0..n` as a bitmask, in lexicographic order.
fn for_each_combination<F>(n: usize, k: usize, mut f: F) -> Result<(), LatinError>
where
    F: FnMut(u64) -> Result<(), LatinError>,
{
    if k > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(idx.iter().fold(0u64, |m, &i| m | 1 << i))?;
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return Ok(());
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Critical sets of `square` with at most `max_size` entries.
///
/// When the subset lattice fits in `limits.subset_budget` every subset is
/// scanned in increasing size and lexicographic order, and the result is
/// complete. Otherwise critical sets are sampled by greedy reduction from
/// the full square along seeded random orders, and the result is flagged
/// non-exhaustive.
pub fn find_critical_sets(
    square: &LatinSquare,
    max_size: usize,
    limits: &SearchLimits,
) -> Result<CriticalSearch, LatinError> {
    let n = square.order();
    let triples: Vec<Triple> = square.triples().collect();
    let max_size = max_size.min(triples.len());
    let order_sets = |sets: &mut Vec<CriticalSetCertificate>| {
        sets.sort_by(|a, b| (a.size(), &a.base).cmp(&(b.size(), &b.base)));
    };

    if triples.len() <= 64 && subset_count(triples.len() as u64, max_size as u64) <= limits.subset_budget {
        let mut found_masks: Vec<u64> = Vec::new();
        let mut sets = Vec::new();
        for k in 0..=max_size {
            for_each_combination(triples.len(), k, |mask| {
                if found_masks.iter().any(|&m| m & !mask == 0) {
                    return Ok(());
                }
                let p = PartialLatinSquare::from_triples(
                    n,
                    (0..triples.len()).filter(|i| mask >> i & 1 == 1).map(|i| triples[i]),
                )?;
                if let Criticality::Critical(cert) = is_critical_set(&p, limits.budget)? {
                    found_masks.push(mask);
                    sets.push(cert);
                }
                Ok(())
            })?;
        }
        order_sets(&mut sets);
        return Ok(CriticalSearch {
            sets,
            exhaustive: true,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    let mut seen = BTreeSet::new();
    let mut sets = Vec::new();
    for _ in 0..limits.samples {
        let reduced = greedy_critical_set(square, &mut rng, limits.budget)?;
        if reduced.len() > max_size || !seen.insert(reduced.clone()) {
            continue;
        }
        if let Criticality::Critical(cert) = is_critical_set(&reduced, limits.budget)? {
            sets.push(cert);
        }
    }
    order_sets(&mut sets);
    Ok(CriticalSearch {
        sets,
        exhaustive: false,
    })
}

/// Removes triples of `square` in a random order whenever the remainder still
/// completes uniquely. The result is a critical set.
pub fn greedy_critical_set<R: rand::Rng>(
    square: &LatinSquare,
    rng: &mut R,
    budget: Budget,
) -> Result<PartialLatinSquare, LatinError> {
    let mut current = square.to_partial();
    let mut order: Vec<Triple> = square.triples().collect();
    order.shuffle(rng);
    for t in order {
        let candidate = current.without(&t);
        if is_uniquely_completable(&candidate, budget)? {
            current = candidate;
        }
    }
    Ok(current)
}

/// Up to `count` distinct greedy critical sets, deterministic in `seed`.
///
/// Gives up after `4 * count` attempts, so small squares with few critical
/// sets may return fewer.
pub fn greedy_critical_sets(
    square: &LatinSquare,
    count: usize,
    seed: u64,
    budget: Budget,
) -> Result<Vec<PartialLatinSquare>, LatinError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets: Vec<PartialLatinSquare> = Vec::new();
    for _ in 0..4 * count {
        if sets.len() == count {
            break;
        }
        let set = greedy_critical_set(square, &mut rng, budget)?;
        if !sets.contains(&set) {
            sets.push(set);
        }
    }
    Ok(sets)
}
