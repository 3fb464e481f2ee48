//! Brute-force reference enumeration of Latin squares.
//!
//! Deliberately naive and independent of the library solver: squares are
//! found by filtering complete arrays, and completions of a partial square
//! are counted by scanning that list.

#![allow(dead_code)]

/// A square of order `n` as a row-major array of 1-based symbols.
pub type Flat = Vec<usize>;

pub fn is_latin(cells: &[usize], n: usize) -> bool {
    for i in 0..n {
        let mut row = vec![false; n + 1];
        let mut col = vec![false; n + 1];
        for j in 0..n {
            let (r, c) = (cells[i * n + j], cells[j * n + i]);
            if r == 0 || r > n || c == 0 || c > n || row[r] || col[c] {
                return false;
            }
            row[r] = true;
            col[c] = true;
        }
    }
    true
}

/// Every Latin square of order `n` by filtering all `n^(n²)` arrays.
/// Feasible for `n <= 3`.
pub fn squares_by_filter(n: usize) -> Vec<Flat> {
    assert!(n <= 3, "n^(n^2) arrays is too many above order 3");
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut x = code;
        let mut a = vec![0; cells];
        for slot in a.iter_mut() {
            *slot = x % n + 1;
            x /= n;
        }
        if is_latin(&a, n) {
            out.push(a);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// Every Latin square of order `n`, filtering arrays whose rows are
/// permutations (`(n!)^n` candidates). Used at order 4.
pub fn squares_by_rows(n: usize) -> Vec<Flat> {
    let perms = permutations(n);
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let a: Flat = idx.iter().flat_map(|&i| perms[i].iter().copied()).collect();
        if is_latin(&a, n) {
            out.push(a);
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            idx[k] += 1;
            if idx[k] < perms.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub fn all_squares(n: usize) -> Vec<Flat> {
    if n <= 3 {
        squares_by_filter(n)
    } else {
        squares_by_rows(n)
    }
}

/// Square contains every `(row, col, symbol)`; 1-based.
pub fn contains(square: &[usize], n: usize, triples: &[(usize, usize, usize)]) -> bool {
    triples.iter().all(|&(r, c, s)| square[(r - 1) * n + (c - 1)] == s)
}

pub fn count_containing(squares: &[Flat], n: usize, triples: &[(usize, usize, usize)]) -> u64 {
    squares.iter().filter(|sq| contains(sq, n, triples)).count() as u64
}

/// No cell holds two symbols and no symbol repeats in a row or column.
pub fn consistent(triples: &[(usize, usize, usize)]) -> bool {
    for (i, a) in triples.iter().enumerate() {
        for b in &triples[i + 1..] {
            let same_cell = a.0 == b.0 && a.1 == b.1;
            let row_clash = a.0 == b.0 && a.2 == b.2;
            let col_clash = a.1 == b.1 && a.2 == b.2;
            if same_cell || row_clash || col_clash {
                return false;
            }
        }
    }
    true
}

/// Every consistent partial square of order `n`, each cell empty or filled.
/// `(n+1)^(n²)` arrays; feasible for `n <= 3`.
pub fn all_consistent_partials(n: usize) -> Vec<Vec<(usize, usize, usize)>> {
    assert!(n <= 3);
    let cells = n * n;
    let total = (n + 1).pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut x = code;
        let mut triples = Vec::new();
        for cell in 0..cells {
            let v = x % (n + 1);
            x /= n + 1;
            if v > 0 {
                triples.push((cell / n + 1, cell % n + 1, v));
            }
        }
        if consistent(&triples) {
            out.push(triples);
        }
    }
    out
}

/// Critical-set test straight from the definition: one completion, and
/// more than one after removing any single entry.
pub fn is_critical(squares: &[Flat], n: usize, triples: &[(usize, usize, usize)]) -> bool {
    if count_containing(squares, n, triples) != 1 {
        return false;
    }
    (0..triples.len()).all(|i| {
        let mut rest = triples.to_vec();
        rest.remove(i);
        count_containing(squares, n, &rest) > 1
    })
}
