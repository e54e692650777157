//! Concrete squares and partial squares: the back-circulant square, the
//! upper-left triangle critical set, the order-5 critical set of size 11 and
//! the "everything but the first row and column" set.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::square::{bit, full_mask, LatinSquare, Mask, PartialLatinSquare, MAX_ORDER};

fn check_range(n: usize, min: usize) -> Result<()> {
    if (min..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(n))
    }
}

/// The cyclic group table: entry `(i, j)` is `((i + j - 2) mod n) + 1`.
pub fn back_circulant(n: usize) -> Result<LatinSquare> {
    check_range(n, 1)?;
    let cells = (0..n * n)
        .map(|idx| ((idx / n + idx % n) % n + 1) as u8)
        .collect();
    Ok(LatinSquare::from_cells_unchecked(n, cells))
}

/// The back-circulant square restricted to the cells strictly above the back
/// diagonal, i.e. `(i - 1) + (j - 1) <= n - 2`. Size `n(n - 1)/2`.
pub fn nelder_triangle(n: usize) -> Result<PartialLatinSquare> {
    check_range(n, 2)?;
    Ok(back_circulant(n)?.restrict(|i, j| i + j <= n))
}

/// A critical set of size 11 in an order-5 square, larger than the triangle
/// construction gives for that order.
pub fn five_by_five_critical() -> PartialLatinSquare {
    "5\n\
     2 . 4 3 .\n\
     . . 1 2 .\n\
     . 2 3 1 .\n\
     3 1 2 . .\n\
     . . . . .\n"
        .parse()
        .expect("fixed grid is a valid partial Latin square")
}

/// `l` with its first row and first column emptied. Always uniquely
/// completable: each missing first-row entry is the symbol absent from its
/// column, and likewise for the first column.
pub fn all_but_first_row_col(l: &LatinSquare) -> PartialLatinSquare {
    l.restrict(|i, j| i >= 2 && j >= 2)
}

/// A Latin square built by randomized backtracking (row-major fill with a
/// shuffled symbol order per cell). Reproducible for a seeded `rng`; the
/// distribution is not uniform over all Latin squares.
pub fn random_latin_square<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<LatinSquare> {
    check_range(n, 1)?;
    let full = full_mask(n);
    let mut cells = vec![0u8; n * n];
    let mut rows: Vec<Mask> = vec![0; n];
    let mut cols: Vec<Mask> = vec![0; n];
    // per cell: the shuffled candidate list and the next index to try
    let mut options: Vec<(Vec<u8>, usize)> = Vec::with_capacity(n * n);

    let fresh = |idx: usize, rows: &[Mask], cols: &[Mask], rng: &mut R| {
        let (r, c) = (idx / n, idx % n);
        let cand = full & !(rows[r] | cols[c]);
        let mut syms: Vec<u8> = (1..=n as u8).filter(|&s| cand & bit(s) != 0).collect();
        syms.shuffle(rng);
        (syms, 0)
    };

    options.push(fresh(0, &rows, &cols, rng));
    while let Some(top) = options.len().checked_sub(1) {
        let idx = top;
        let (r, c) = (idx / n, idx % n);
        if cells[idx] != 0 {
            let s = cells[idx];
            rows[r] &= !bit(s);
            cols[c] &= !bit(s);
            cells[idx] = 0;
        }
        let (syms, next) = &mut options[idx];
        if *next == syms.len() {
            options.pop();
            continue;
        }
        let s = syms[*next];
        *next += 1;
        cells[idx] = s;
        rows[r] |= bit(s);
        cols[c] |= bit(s);
        if idx + 1 == n * n {
            return Ok(LatinSquare::from_cells_unchecked(n, cells));
        }
        let child = fresh(idx + 1, &rows, &cols, rng);
        options.push(child);
    }
    unreachable!("every partial row-major fill of a Latin square extends")
}
