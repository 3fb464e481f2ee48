//! Latin squares, partial Latin squares and the exact completion solver.
//!
//! Coordinates and symbols are 1-based throughout: an order-`n` square uses
//! rows, columns and symbols drawn from `{1..n}`.
//!
//! The solver is a cell-by-cell backtracking search. At every node it picks
//! the empty cell with the fewest admissible symbols (row and column usage
//! are kept as bitsets), so forced cells are filled before any branching
//! happens. Every search is bounded by a [`Budget`] counted in search-tree
//! nodes; running out is reported as a lower bound rather than a failure.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest order the bitset solver supports.
pub const MAX_ORDER: usize = 32;

/// Node budget used when the caller does not pick one.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// One filled cell: `symbol` sits in cell (`row`, `col`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub row: usize,
    pub col: usize,
    pub symbol: usize,
}

impl Triple {
    pub const fn new(row: usize, col: usize, symbol: usize) -> Self {
        Self { row, col, symbol }
    }

    fn fits(&self, order: usize) -> bool {
        (1..=order).contains(&self.row)
            && (1..=order).contains(&self.col)
            && (1..=order).contains(&self.symbol)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.row, self.col, self.symbol)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatinError {
    #[error("order {0} is outside 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("array is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("symbol {symbol} in cell ({row},{col}) is outside 1..={order}")]
    SymbolOutOfRange {
        row: usize,
        col: usize,
        symbol: usize,
        order: usize,
    },
    #[error("row {row} repeats symbol {symbol}")]
    RowDuplicate { row: usize, symbol: usize },
    #[error("column {col} repeats symbol {symbol}")]
    ColDuplicate { col: usize, symbol: usize },
    #[error("triple {triple} lies outside order {order}")]
    TripleOutOfRange { triple: Triple, order: usize },
    #[error("partial square has a row, column or cell clash")]
    InconsistentInput,
    #[error("search budget of {budget} nodes exhausted after {found} completion(s)")]
    BudgetExceeded { budget: u64, found: u64 },
}

fn check_order(order: usize) -> Result<(), LatinError> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(LatinError::OrderOutOfRange(order))
    }
}

/// A completed order-`n` Latin square.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatinSquare {
    order: usize,
    // row-major
    cells: Vec<usize>,
}

impl LatinSquare {
    /// The back-circulant square: cell (i, j) holds `((i + j - 2) mod n) + 1`.
    pub fn back_circulant(order: usize) -> Result<Self, LatinError> {
        check_order(order)?;
        let cells = (0..order * order)
            .map(|idx| (idx / order + idx % order) % order + 1)
            .collect();
        Ok(Self { order, cells })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, LatinError> {
        validate_square(rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Symbol in the 1-based cell (`row`, `col`).
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[(row - 1) * self.order + (col - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        let n = self.order;
        self.cells
            .iter()
            .enumerate()
            .map(move |(idx, &s)| Triple::new(idx / n + 1, idx % n + 1, s))
    }

    pub fn contains(&self, t: &Triple) -> bool {
        t.fits(self.order) && self.get(t.row, t.col) == t.symbol
    }

    /// True when every entry of `p` agrees with this square.
    pub fn extends(&self, p: &PartialLatinSquare) -> bool {
        p.order() == self.order && p.iter().all(|t| self.contains(t))
    }

    pub fn to_partial(&self) -> PartialLatinSquare {
        PartialLatinSquare {
            order: self.order,
            entries: self.triples().collect(),
        }
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Checks that `rows` is an order-`n` Latin square.
///
/// Shape and symbol ranges are checked first, then rows top to bottom, then
/// columns left to right; the first violation found is returned.
pub fn validate_square(rows: &[Vec<usize>]) -> Result<LatinSquare, LatinError> {
    let order = rows.len();
    check_order(order)?;
    for (r, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(LatinError::NotSquare {
                row: r + 1,
                len: row.len(),
                order,
            });
        }
        for (c, &symbol) in row.iter().enumerate() {
            if !(1..=order).contains(&symbol) {
                return Err(LatinError::SymbolOutOfRange {
                    row: r + 1,
                    col: c + 1,
                    symbol,
                    order,
                });
            }
        }
    }
    for (r, row) in rows.iter().enumerate() {
        let mut seen = 0u64;
        for &symbol in row {
            let bit = 1u64 << (symbol - 1);
            if seen & bit != 0 {
                return Err(LatinError::RowDuplicate { row: r + 1, symbol });
            }
            seen |= bit;
        }
    }
    for c in 0..order {
        let mut seen = 0u64;
        for row in rows {
            let symbol = row[c];
            let bit = 1u64 << (symbol - 1);
            if seen & bit != 0 {
                return Err(LatinError::ColDuplicate { col: c + 1, symbol });
            }
            seen |= bit;
        }
    }
    Ok(LatinSquare {
        order,
        cells: rows.iter().flatten().copied().collect(),
    })
}

/// A set of triples over a fixed order.
///
/// Coordinates are range-checked on insertion. Row, column and cell clashes
/// are representable so that inconsistent pools (for example a guessed share
/// that contradicts a known one) can be reasoned about; use
/// [`PartialLatinSquare::is_consistent`] to test for them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialLatinSquare {
    order: usize,
    entries: BTreeSet<Triple>,
}

impl PartialLatinSquare {
    pub fn new(order: usize) -> Result<Self, LatinError> {
        check_order(order)?;
        Ok(Self {
            order,
            entries: BTreeSet::new(),
        })
    }

    pub fn from_triples<I>(order: usize, triples: I) -> Result<Self, LatinError>
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut p = Self::new(order)?;
        for t in triples {
            p.insert(t)?;
        }
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &BTreeSet<Triple> {
        &self.entries
    }

    /// Entries in lexicographic (row, col, symbol) order.
    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.entries.iter()
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.entries.contains(t)
    }

    /// Adds `t`, returning whether it was new.
    pub fn insert(&mut self, t: Triple) -> Result<bool, LatinError> {
        if !t.fits(self.order) {
            return Err(LatinError::TripleOutOfRange {
                triple: t,
                order: self.order,
            });
        }
        Ok(self.entries.insert(t))
    }

    pub fn remove(&mut self, t: &Triple) -> bool {
        self.entries.remove(t)
    }

    /// Copy of `self` with `t` removed.
    pub fn without(&self, t: &Triple) -> Self {
        let mut p = self.clone();
        p.entries.remove(t);
        p
    }

    pub fn is_subset(&self, other: &PartialLatinSquare) -> bool {
        self.order == other.order && self.entries.is_subset(&other.entries)
    }

    /// No symbol twice in a row or column and at most one symbol per cell.
    pub fn is_consistent(&self) -> bool {
        let n = self.order;
        let mut rows = vec![0u64; n];
        let mut cols = vec![0u64; n];
        let mut cells = vec![false; n * n];
        for t in &self.entries {
            let bit = 1u64 << (t.symbol - 1);
            let cell = (t.row - 1) * n + (t.col - 1);
            if cells[cell] || rows[t.row - 1] & bit != 0 || cols[t.col - 1] & bit != 0 {
                return false;
            }
            cells[cell] = true;
            rows[t.row - 1] |= bit;
            cols[t.col - 1] |= bit;
        }
        true
    }
}

impl fmt::Display for PartialLatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(Triple::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Total function form of [`PartialLatinSquare::is_consistent`].
pub fn check_consistent(p: &PartialLatinSquare) -> bool {
    p.is_consistent()
}

/// Cap on the number of search-tree nodes a solver call may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    nodes: Option<u64>,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Self { nodes: None }
    }

    pub const fn nodes(limit: u64) -> Self {
        Self { nodes: Some(limit) }
    }

    pub fn limit(&self) -> Option<u64> {
        self.nodes
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::nodes(DEFAULT_NODE_BUDGET)
    }
}

/// A completion count, exact or a lower bound from an exhausted budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Count {
    Exact(u64),
    AtLeast(u64),
}

impl Count {
    pub fn value(&self) -> u64 {
        match *self {
            Count::Exact(v) | Count::AtLeast(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Count::Exact(_))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Exact(v) => write!(f, "{v}"),
            Count::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletionResult {
    Unique(LatinSquare),
    Multiple(Count),
    None,
}

enum Stop {
    Visitor,
    Budget,
}

struct Search {
    order: usize,
    full: u64,
    cells: Vec<usize>,
    rows: Vec<u64>,
    cols: Vec<u64>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search {
    /// `None` when `p` has a clash.
    fn new(p: &PartialLatinSquare, budget: Budget) -> Option<Self> {
        if !p.is_consistent() {
            return None;
        }
        let n = p.order();
        let mut s = Search {
            order: n,
            full: (1u64 << n) - 1,
            cells: vec![0; n * n],
            rows: vec![0; n],
            cols: vec![0; n],
            nodes: 0,
            budget: budget.limit(),
        };
        for t in p.iter() {
            s.place((t.row - 1) * n + (t.col - 1), t.symbol);
        }
        Some(s)
    }

    fn place(&mut self, cell: usize, symbol: usize) {
        let bit = 1u64 << (symbol - 1);
        self.cells[cell] = symbol;
        self.rows[cell / self.order] |= bit;
        self.cols[cell % self.order] |= bit;
    }

    fn clear(&mut self, cell: usize) {
        let bit = 1u64 << (self.cells[cell] - 1);
        self.cells[cell] = 0;
        self.rows[cell / self.order] &= !bit;
        self.cols[cell % self.order] &= !bit;
    }

    fn candidates(&self, cell: usize) -> u64 {
        self.full & !(self.rows[cell / self.order] | self.cols[cell % self.order])
    }

    fn run<F>(&mut self, visit: &mut F) -> Result<(), Stop>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.nodes += 1;
        if let Some(limit) = self.budget {
            if self.nodes > limit {
                return Err(Stop::Budget);
            }
        }
        let mut best: Option<(usize, u64)> = None;
        for cell in 0..self.cells.len() {
            if self.cells[cell] != 0 {
                continue;
            }
            let cand = self.candidates(cell);
            let k = cand.count_ones();
            if k == 0 {
                return Ok(());
            }
            if best.is_none_or(|(_, b)| k < b.count_ones()) {
                best = Some((cell, cand));
                if k == 1 {
                    break;
                }
            }
        }
        let Some((cell, mut cand)) = best else {
            return match visit(&self.cells) {
                ControlFlow::Continue(()) => Ok(()),
                ControlFlow::Break(()) => Err(Stop::Visitor),
            };
        };
        while cand != 0 {
            let symbol = cand.trailing_zeros() as usize + 1;
            cand &= cand - 1;
            self.place(cell, symbol);
            let r = self.run(visit);
            self.clear(cell);
            r?;
        }
        Ok(())
    }
}

fn square_from_cells(order: usize, cells: &[usize]) -> LatinSquare {
    LatinSquare {
        order,
        cells: cells.to_vec(),
    }
}

/// Number of Latin squares extending `p`.
///
/// An exhausted budget yields [`Count::AtLeast`] with the completions found
/// so far.
pub fn count_completions(p: &PartialLatinSquare, budget: Budget) -> Result<Count, LatinError> {
    let mut search = Search::new(p, budget).ok_or(LatinError::InconsistentInput)?;
    let mut found = 0u64;
    match search.run(&mut |_| {
        found += 1;
        ControlFlow::Continue(())
    }) {
        Ok(()) => Ok(Count::Exact(found)),
        Err(Stop::Budget) => Ok(Count::AtLeast(found)),
        Err(Stop::Visitor) => unreachable!("counting visitor never stops"),
    }
}

/// Counts completions but stops as soon as `cap` of them have been seen.
///
/// Returns `Count::Exact(k)` with `k < cap` when the search finished, and
/// `Count::AtLeast(cap)` once the cap is reached.
pub fn count_completions_capped(
    p: &PartialLatinSquare,
    cap: u64,
    budget: Budget,
) -> Result<Count, LatinError> {
    let mut search = Search::new(p, budget).ok_or(LatinError::InconsistentInput)?;
    let mut found = 0u64;
    let limit = budget.limit().unwrap_or(u64::MAX);
    match search.run(&mut |_| {
        found += 1;
        if found >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }) {
        Ok(()) => Ok(Count::Exact(found)),
        Err(Stop::Visitor) => Ok(Count::AtLeast(found)),
        Err(Stop::Budget) => Err(LatinError::BudgetExceeded {
            budget: limit,
            found,
        }),
    }
}

/// Up to `max` completions of `p`, in search order. Inconsistent input has
/// none.
pub fn completions(
    p: &PartialLatinSquare,
    max: usize,
    budget: Budget,
) -> Result<Vec<LatinSquare>, LatinError> {
    let Some(mut search) = Search::new(p, budget) else {
        return Ok(Vec::new());
    };
    if max == 0 {
        return Ok(Vec::new());
    }
    let order = p.order();
    let mut out = Vec::new();
    match search.run(&mut |cells| {
        out.push(square_from_cells(order, cells));
        if out.len() >= max {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }) {
        Ok(()) | Err(Stop::Visitor) => Ok(out),
        Err(Stop::Budget) => Err(LatinError::BudgetExceeded {
            budget: budget.limit().unwrap_or(u64::MAX),
            found: out.len() as u64,
        }),
    }
}

/// Completes `p`, reporting whether the completion is unique.
///
/// Multiple completions are counted in full within `budget`. Running out of
/// budget before uniqueness is decided is an error.
pub fn complete(p: &PartialLatinSquare, budget: Budget) -> Result<CompletionResult, LatinError> {
    let Some(mut search) = Search::new(p, budget) else {
        return Ok(CompletionResult::None);
    };
    let order = p.order();
    let mut first: Option<LatinSquare> = None;
    let mut found = 0u64;
    let outcome = search.run(&mut |cells| {
        found += 1;
        if first.is_none() {
            first = Some(square_from_cells(order, cells));
        }
        ControlFlow::Continue(())
    });
    match outcome {
        Ok(()) => Ok(match (found, first) {
            (0, _) => CompletionResult::None,
            (1, Some(square)) => CompletionResult::Unique(square),
            (k, _) => CompletionResult::Multiple(Count::Exact(k)),
        }),
        Err(Stop::Budget) if found >= 2 => Ok(CompletionResult::Multiple(Count::AtLeast(found))),
        Err(Stop::Budget) => Err(LatinError::BudgetExceeded {
            budget: budget.limit().unwrap_or(u64::MAX),
            found,
        }),
        Err(Stop::Visitor) => unreachable!("completion visitor never stops"),
    }
}

/// A pseudo-random order-`n` square, deterministic in `seed`.
///
/// Starts from the back-circulant square and applies seeded row, column and
/// symbol permutations. The result is not uniform over all Latin squares.
pub fn random_latin_square(order: usize, seed: u64) -> Result<LatinSquare, LatinError> {
    let base = LatinSquare::back_circulant(order)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<usize> = (0..order).collect();
    let mut cols: Vec<usize> = (0..order).collect();
    let mut symbols: Vec<usize> = (1..=order).collect();
    rows.shuffle(&mut rng);
    cols.shuffle(&mut rng);
    symbols.shuffle(&mut rng);
    let cells = (0..order * order)
        .map(|idx| symbols[base.cells[rows[idx / order] * order + cols[idx % order]] - 1])
        .collect();
    Ok(LatinSquare { order, cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partial(order: usize, triples: &[(usize, usize, usize)]) -> PartialLatinSquare {
        PartialLatinSquare::from_triples(order, triples.iter().map(|&(r, c, s)| Triple::new(r, c, s)))
            .unwrap()
    }

    #[test]
    fn validates_small_squares() {
        let sq = validate_square(&[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(sq.order(), 2);
        let sq = validate_square(&[vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]).unwrap();
        assert_eq!(sq, LatinSquare::back_circulant(3).unwrap());
    }

    #[test]
    fn reports_first_violation() {
        assert_eq!(
            validate_square(&[vec![1, 1], vec![2, 2]]),
            Err(LatinError::RowDuplicate { row: 1, symbol: 1 })
        );
        assert_eq!(
            validate_square(&[vec![1, 2], vec![1, 2]]),
            Err(LatinError::ColDuplicate { col: 1, symbol: 1 })
        );
        assert!(matches!(
            validate_square(&[vec![1, 3], vec![2, 1]]),
            Err(LatinError::SymbolOutOfRange { row: 1, col: 2, symbol: 3, .. })
        ));
        assert!(matches!(
            validate_square(&[vec![1, 2], vec![2]]),
            Err(LatinError::NotSquare { row: 2, .. })
        ));
        assert_eq!(validate_square(&[]), Err(LatinError::OrderOutOfRange(0)));
    }

    #[test]
    fn consistency() {
        assert!(check_consistent(&partial(2, &[(1, 1, 1), (2, 2, 1)])));
        assert!(!check_consistent(&partial(2, &[(1, 1, 1), (1, 2, 1)])));
        assert!(!check_consistent(&partial(2, &[(1, 1, 1), (2, 1, 1)])));
        assert!(!check_consistent(&partial(2, &[(1, 1, 1), (1, 1, 2)])));
        for n in 1..5 {
            assert!(check_consistent(&PartialLatinSquare::new(n).unwrap()));
        }
    }

    #[test]
    fn out_of_range_triples_rejected() {
        let mut p = PartialLatinSquare::new(3).unwrap();
        assert!(matches!(p.insert(Triple::new(4, 1, 1)), Err(LatinError::TripleOutOfRange { .. })));
        assert!(matches!(p.insert(Triple::new(1, 1, 0)), Err(LatinError::TripleOutOfRange { .. })));
    }

    #[test]
    fn empty_counts() {
        // 1, 2 by inspection; 12 and 576 frozen from the brute-force oracle
        // in tests/oracle.
        let expected = [1u64, 2, 12, 576];
        for (i, &want) in expected.iter().enumerate() {
            let p = PartialLatinSquare::new(i + 1).unwrap();
            assert_eq!(count_completions(&p, Budget::unlimited()), Ok(Count::Exact(want)));
        }
    }

    #[test]
    fn fixture_counts() {
        let p = partial(3, &[(1, 1, 1), (2, 2, 3)]);
        assert_eq!(count_completions(&p, Budget::unlimited()), Ok(Count::Exact(1)));
        let p = partial(3, &[(1, 1, 1)]);
        assert_eq!(count_completions(&p, Budget::unlimited()), Ok(Count::Exact(4)));
        let bad = partial(2, &[(1, 1, 1), (1, 2, 1)]);
        assert_eq!(count_completions(&bad, Budget::unlimited()), Err(LatinError::InconsistentInput));
    }

    #[test]
    fn budget_gives_lower_bound() {
        let p = PartialLatinSquare::new(5).unwrap();
        match count_completions(&p, Budget::nodes(200)).unwrap() {
            Count::AtLeast(k) => assert!(k < 161_280),
            other => panic!("expected a lower bound, got {other:?}"),
        }
    }

    #[test]
    fn capped_count_stops_early() {
        let p = PartialLatinSquare::new(4).unwrap();
        assert_eq!(count_completions_capped(&p, 2, Budget::unlimited()), Ok(Count::AtLeast(2)));
        let p = partial(2, &[(1, 1, 1)]);
        assert_eq!(count_completions_capped(&p, 2, Budget::unlimited()), Ok(Count::Exact(1)));
    }

    #[test]
    fn complete_examples() {
        let unique = complete(&partial(2, &[(1, 1, 1)]), Budget::unlimited()).unwrap();
        assert_eq!(
            unique,
            CompletionResult::Unique(LatinSquare::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap())
        );
        assert_eq!(
            complete(&PartialLatinSquare::new(2).unwrap(), Budget::unlimited()),
            Ok(CompletionResult::Multiple(Count::Exact(2)))
        );
        assert_eq!(
            complete(&partial(2, &[(1, 1, 1), (1, 2, 1)]), Budget::unlimited()),
            Ok(CompletionResult::None)
        );
        // a dead end that is consistent but has no completion
        assert_eq!(
            complete(&partial(3, &[(1, 1, 1), (2, 2, 1), (3, 3, 2)]), Budget::unlimited()),
            Ok(CompletionResult::None)
        );
    }

    #[test]
    fn complete_out_of_budget() {
        let p = partial(6, &[(1, 1, 1)]);
        assert!(matches!(
            complete(&p, Budget::nodes(10)),
            Err(LatinError::BudgetExceeded { .. }) | Ok(CompletionResult::Multiple(Count::AtLeast(_)))
        ));
        let p = partial(6, &[(1, 1, 1)]);
        assert_eq!(
            complete(&p, Budget::nodes(1)),
            Err(LatinError::BudgetExceeded { budget: 1, found: 0 })
        );
    }

    #[test]
    fn completions_lists_distinct_squares() {
        let sqs = completions(&PartialLatinSquare::new(3).unwrap(), 3, Budget::unlimited()).unwrap();
        assert_eq!(sqs.len(), 3);
        assert_ne!(sqs[0], sqs[1]);
        assert!(completions(&partial(2, &[(1, 1, 1), (1, 1, 2)]), 2, Budget::unlimited())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn random_squares() {
        assert_eq!(random_latin_square(1, 99).unwrap().to_rows(), vec![vec![1]]);
        let a = random_latin_square(5, 42).unwrap();
        validate_square(&a.to_rows()).unwrap();
        assert_eq!(a, random_latin_square(5, 42).unwrap());
        assert!(random_latin_square(0, 1).is_err());
    }

    #[test]
    fn square_helpers() {
        let sq = LatinSquare::back_circulant(3).unwrap();
        assert_eq!(sq.get(2, 2), 3);
        assert!(sq.contains(&Triple::new(1, 1, 1)));
        assert!(sq.extends(&partial(3, &[(1, 1, 1), (2, 2, 3)])));
        assert_eq!(sq.triples().count(), 9);
        assert_eq!(sq.to_string(), "1 2 3\n2 3 1\n3 1 2");
        assert_eq!(partial(3, &[(2, 2, 3), (1, 1, 1)]).to_string(), "{(1,1;1),(2,2;3)}");
    }
}
