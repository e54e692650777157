//! Exhaustive enumeration of reduced Latin squares and exact counts `L(n)`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::square::{bit, full_mask, LatinSquare, Mask};

/// How far exhaustive routines may go.
///
/// `Standard` is the default, fast limit; `Extended` opts into one more order
/// with no runtime promise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderLimit {
    #[default]
    Standard,
    Extended,
}

impl OrderLimit {
    pub(crate) fn check(self, order: usize, standard: usize, what: &'static str) -> Result<()> {
        let limit = match self {
            OrderLimit::Standard => standard,
            OrderLimit::Extended => standard + 1,
        };
        if order == 0 {
            return Err(Error::OrderOutOfRange(0));
        }
        if order > limit {
            return Err(Error::OrderTooLarge { order, limit, what });
        }
        Ok(())
    }
}

/// Largest order enumerated under [`OrderLimit::Standard`].
pub const ENUMERATION_LIMIT: usize = 5;

/// Iterator over the reduced Latin squares of one order, in lexicographic
/// row-major order.
pub struct ReducedSquares {
    n: usize,
    full: Mask,
    cells: Vec<u8>,
    rows: Vec<Mask>,
    cols: Vec<Mask>,
    /// Free cells (rows and columns 2..=n), row-major.
    free: Vec<usize>,
    /// Number of free cells currently assigned; `None` once exhausted.
    depth: Option<usize>,
    started: bool,
}

impl ReducedSquares {
    fn new(n: usize) -> Self {
        let mut cells = vec![0u8; n * n];
        let mut rows = vec![0; n];
        let mut cols = vec![0; n];
        for i in 0..n {
            let s = (i + 1) as u8;
            for idx in [i, i * n] {
                cells[idx] = s;
            }
            rows[0] |= bit(s);
            cols[i] |= bit(s);
            rows[i] |= bit(s);
            cols[0] |= bit(s);
        }
        let free = (1..n)
            .flat_map(|r| (1..n).map(move |c| r * n + c))
            .collect();
        Self {
            n,
            full: full_mask(n),
            cells,
            rows,
            cols,
            free,
            depth: Some(0),
            started: false,
        }
    }

    fn unset(&mut self, idx: usize) -> u8 {
        let s = self.cells[idx];
        let (r, c) = (idx / self.n, idx % self.n);
        self.rows[r] &= !bit(s);
        self.cols[c] &= !bit(s);
        self.cells[idx] = 0;
        s
    }

    /// Moves the free cell at `pos` to its next admissible symbol above
    /// `after`; false when none is left.
    fn advance(&mut self, pos: usize, after: u8) -> bool {
        let idx = self.free[pos];
        let (r, c) = (idx / self.n, idx % self.n);
        let mut cand = self.full & !(self.rows[r] | self.cols[c]);
        cand &= !((1u32 << after) - 1);
        if cand == 0 {
            return false;
        }
        let s = cand.trailing_zeros() as u8 + 1;
        self.cells[idx] = s;
        self.rows[r] |= bit(s);
        self.cols[c] |= bit(s);
        true
    }
}

impl Iterator for ReducedSquares {
    type Item = LatinSquare;

    fn next(&mut self) -> Option<LatinSquare> {
        let mut depth = self.depth?;
        let total = self.free.len();
        // resume: after a yield, retreat from the last filled cell
        let mut after = 0u8;
        if self.started {
            if total == 0 {
                self.depth = None;
                return None;
            }
            depth = total - 1;
            after = self.unset(self.free[depth]);
        }
        self.started = true;

        loop {
            if depth == total {
                self.depth = Some(depth);
                return Some(LatinSquare::from_cells_unchecked(
                    self.n,
                    self.cells.clone(),
                ));
            }
            if self.advance(depth, after) {
                depth += 1;
                after = 0;
            } else {
                if depth == 0 {
                    self.depth = None;
                    return None;
                }
                depth -= 1;
                after = self.unset(self.free[depth]);
            }
        }
    }
}

/// Reduced Latin squares of order `n`: first row and first column `1..=n`.
pub fn iter_reduced(n: usize, limit: OrderLimit) -> Result<ReducedSquares> {
    limit.check(n, ENUMERATION_LIMIT, "reduced-square enumeration")?;
    Ok(ReducedSquares::new(n))
}

/// Exact counts for one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub order: usize,
    /// R(n), the number of reduced squares.
    pub reduced_count: u64,
    /// L(n) = n! (n-1)! R(n).
    pub total_count: BigUint,
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

/// Counts all Latin squares of order `n` through reduced enumeration.
pub fn count_all(n: usize, limit: OrderLimit) -> Result<EnumerationResult> {
    let reduced_count = iter_reduced(n, limit)?.count() as u64;
    let total_count = factorial(n) * factorial(n - 1) * BigUint::from(reduced_count);
    Ok(EnumerationResult {
        order: n,
        reduced_count,
        total_count,
    })
}
