//! Completion counting for partial Latin squares.
//!
//! The search is a bitmask backtracker. Before every branch the state is
//! closed under forced moves (naked singles and hidden singles in rows and
//! columns); the branch cell is the empty cell with the fewest candidates,
//! ties going to the first cell in row-major order, and candidate symbols are
//! tried in ascending order.
//!
//! Near the root, sibling subtrees may be counted on the rayon pool. Each
//! subtree is counted against the same cap and the partial results are
//! merged in branch order, so the count, the capped flag and the witnesses
//! never depend on the number of worker threads.

use std::num::NonZeroU64;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::square::{bit, full_mask, LatinSquare, Mask, PartialLatinSquare};

/// Subtrees are only farmed out while at most this many branches deep.
const PARALLEL_DEPTH: usize = 2;
/// ...and only when this many cells are still empty after propagation.
const PARALLEL_MIN_EMPTY: usize = 20;

/// Maximum number of completions kept as witnesses.
pub const MAX_WITNESSES: usize = 2;

/// Counting cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    At(NonZeroU64),
    Unbounded,
}

impl Cap {
    /// Panics if `k` is zero.
    pub fn at(k: u64) -> Self {
        Cap::At(NonZeroU64::new(k).expect("completion cap must be positive"))
    }

    fn limit(self) -> u64 {
        match self {
            Cap::At(k) => k.get(),
            Cap::Unbounded => u64::MAX,
        }
    }
}

/// Cap used for unique-completability decisions.
pub const UC_CAP: Cap = Cap::At(match NonZeroU64::new(2) {
    Some(k) => k,
    None => unreachable!(),
});

/// Outcome of [`propagate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Propagation {
    FixedPoint,
    Contradiction,
}

/// Result of [`count_completions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionReport {
    /// Exact number of completions unless `capped`, in which case it equals the cap.
    pub count: u64,
    pub capped: bool,
    /// The first (up to two) completions in search order.
    pub witnesses: Vec<LatinSquare>,
}

impl CompletionReport {
    pub fn is_unique(&self) -> bool {
        self.count == 1 && !self.capped
    }
}

/// Mutable search state with per-row and per-column used-symbol masks.
#[derive(Clone)]
struct State {
    n: usize,
    full: Mask,
    cells: Vec<u8>,
    rows: Vec<Mask>,
    cols: Vec<Mask>,
    empty: usize,
}

impl State {
    fn new(p: &PartialLatinSquare) -> Self {
        let n = p.order();
        let cells = p.cells().to_vec();
        let empty = cells.iter().filter(|&&s| s == 0).count();
        Self {
            n,
            full: full_mask(n),
            rows: (0..n).map(|r| p.row_mask(r)).collect(),
            cols: (0..n).map(|c| p.col_mask(c)).collect(),
            cells,
            empty,
        }
    }

    #[inline]
    fn candidates(&self, r: usize, c: usize) -> Mask {
        self.full & !(self.rows[r] | self.cols[c])
    }

    #[inline]
    fn place(&mut self, r: usize, c: usize, sym: u8) {
        debug_assert_eq!(self.cells[r * self.n + c], 0);
        debug_assert!(self.candidates(r, c) & bit(sym) != 0);
        self.cells[r * self.n + c] = sym;
        self.rows[r] |= bit(sym);
        self.cols[c] |= bit(sym);
        self.empty -= 1;
    }

    /// Applies naked and hidden singles until nothing changes.
    fn propagate(&mut self) -> Propagation {
        let n = self.n;
        loop {
            let mut changed = false;

            for r in 0..n {
                for c in 0..n {
                    if self.cells[r * n + c] != 0 {
                        continue;
                    }
                    let cand = self.candidates(r, c);
                    if cand == 0 {
                        return Propagation::Contradiction;
                    }
                    if cand.is_power_of_two() {
                        self.place(r, c, cand.trailing_zeros() as u8 + 1);
                        changed = true;
                    }
                }
            }

            // hidden singles along rows, then along columns
            for line in 0..n {
                match self.hidden_singles(line, true) {
                    None => return Propagation::Contradiction,
                    Some(true) => changed = true,
                    Some(false) => {}
                }
            }
            for line in 0..n {
                match self.hidden_singles(line, false) {
                    None => return Propagation::Contradiction,
                    Some(true) => changed = true,
                    Some(false) => {}
                }
            }

            if !changed {
                return Propagation::FixedPoint;
            }
        }
    }

    /// Places every missing symbol of a row (or column) that fits exactly one
    /// empty cell. `None` if some missing symbol fits nowhere.
    fn hidden_singles(&mut self, line: usize, is_row: bool) -> Option<bool> {
        let n = self.n;
        let cell = |i: usize| if is_row { (line, i) } else { (i, line) };
        let used = if is_row {
            self.rows[line]
        } else {
            self.cols[line]
        };
        let missing = self.full & !used;
        if missing == 0 {
            return Some(false);
        }
        let (mut once, mut twice) = (0 as Mask, 0 as Mask);
        for i in 0..n {
            let (r, c) = cell(i);
            if self.cells[r * n + c] == 0 {
                let cand = self.candidates(r, c);
                twice |= once & cand;
                once |= cand;
            }
        }
        if missing & !once != 0 {
            return None;
        }
        let mut singles = once & !twice;
        if singles == 0 {
            return Some(false);
        }
        let mut placed = false;
        for i in 0..n {
            let (r, c) = cell(i);
            if self.cells[r * n + c] != 0 {
                continue;
            }
            let hit = self.candidates(r, c) & singles;
            if hit != 0 {
                // two singles landing in one cell cannot both be satisfied
                if !hit.is_power_of_two() {
                    return None;
                }
                self.place(r, c, hit.trailing_zeros() as u8 + 1);
                singles &= !hit;
                placed = true;
            }
        }
        Some(placed)
    }

    /// Empty cell with the fewest candidates, first in row-major order on ties.
    fn branch_cell(&self) -> Option<(usize, usize, Mask)> {
        let n = self.n;
        let mut best: Option<(usize, usize, Mask)> = None;
        let mut best_count = u32::MAX;
        for r in 0..n {
            for c in 0..n {
                if self.cells[r * n + c] != 0 {
                    continue;
                }
                let cand = self.candidates(r, c);
                let k = cand.count_ones();
                if k < best_count {
                    best = Some((r, c, cand));
                    best_count = k;
                    if k <= 2 {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn into_partial(self) -> PartialLatinSquare {
        PartialLatinSquare::from_cells(self.n, self.cells)
            .expect("solver states respect the Latin property")
    }
}

#[derive(Default)]
struct Tally {
    count: u64,
    witnesses: Vec<LatinSquare>,
}

impl Tally {
    /// Appends a later subtree's tally, saturating at `cap`.
    fn absorb(&mut self, other: Tally, cap: u64) {
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        self.count = self.count.saturating_add(other.count).min(cap);
    }
}

fn search(mut state: State, cap: u64, depth: usize, tally: &mut Tally) {
    if state.propagate() == Propagation::Contradiction {
        return;
    }
    let Some((r, c, cand)) = state.branch_cell() else {
        tally.count += 1;
        if tally.witnesses.len() < MAX_WITNESSES {
            tally
                .witnesses
                .push(LatinSquare::from_cells_unchecked(state.n, state.cells));
        }
        return;
    };

    let symbols: Vec<u8> = (0..state.n as u8)
        .filter(|s| cand & (1 << s) != 0)
        .map(|s| s + 1)
        .collect();

    if depth < PARALLEL_DEPTH && state.empty >= PARALLEL_MIN_EMPTY && symbols.len() > 1 {
        let parts: Vec<Tally> = symbols
            .par_iter()
            .map(|&sym| {
                let mut child = state.clone();
                child.place(r, c, sym);
                let mut t = Tally::default();
                search(child, cap, depth + 1, &mut t);
                t
            })
            .collect();
        for part in parts {
            tally.absorb(part, cap);
            if tally.count >= cap {
                return;
            }
        }
        return;
    }

    for sym in symbols {
        let mut child = state.clone();
        child.place(r, c, sym);
        search(child, cap, depth + 1, tally);
        if tally.count >= cap {
            return;
        }
    }
}

/// Closes `p` under forced moves.
///
/// The returned square has the same set of completions as `p`. On
/// contradiction it is the state reached when the contradiction was detected.
pub fn propagate(p: &PartialLatinSquare) -> (PartialLatinSquare, Propagation) {
    let mut state = State::new(p);
    let status = state.propagate();
    (state.into_partial(), status)
}

/// Counts the Latin squares extending `p`, stopping at `cap`.
pub fn count_completions(p: &PartialLatinSquare, cap: Cap) -> CompletionReport {
    let limit = cap.limit();
    let mut tally = Tally::default();
    search(State::new(p), limit, 0, &mut tally);
    CompletionReport {
        count: tally.count,
        capped: matches!(cap, Cap::At(_)) && tally.count >= limit,
        witnesses: tally.witnesses,
    }
}

pub fn is_uniquely_completable(p: &PartialLatinSquare) -> bool {
    count_completions(p, UC_CAP).is_unique()
}

/// The only Latin square extending `p`, or [`Error::NotUnique`].
pub fn unique_completion(p: &PartialLatinSquare) -> Result<LatinSquare> {
    let mut report = count_completions(p, UC_CAP);
    if report.is_unique() {
        Ok(report.witnesses.remove(0))
    } else {
        Err(Error::NotUnique {
            count: report.count,
            capped: report.capped,
        })
    }
}
