//! Critical sets: verification, greedy extraction and exhaustive search for
//! the largest critical set at small orders.
//!
//! Everything here leans on one monotonicity fact: deleting entries from a
//! partial square can only enlarge its set of completions. Minimality
//! therefore only needs single-entry deletions, and any superset (inside the
//! same square) of a uniquely completable set is uniquely completable.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::{back_circulant, random_latin_square};
use crate::enumeration::{iter_reduced, OrderLimit};
use crate::error::{Error, Result};
use crate::solver::{count_completions, is_uniquely_completable, UC_CAP};
use crate::square::{LatinSquare, PartialLatinSquare, Triple};

/// Largest order for exhaustive critical-set search under [`OrderLimit::Standard`].
pub const EXHAUSTIVE_LIMIT: usize = 4;

/// Default number of seeded starts in the heuristic portfolio.
pub const DEFAULT_PORTFOLIO: usize = 32;

/// What happened when one entry was deleted from the candidate set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCheck {
    pub entry: Triple,
    /// Completions after deleting `entry`, capped at 2.
    pub completions: u64,
    /// A completion of the reduced set that differs from the completion of
    /// the full set (or any second completion if the full set had none).
    pub alternative: Option<LatinSquare>,
}

impl EntryCheck {
    /// The entry can go without losing unique completability.
    pub fn is_removable(&self) -> bool {
        self.completions < 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityReport {
    pub size: usize,
    pub uniquely_completable: bool,
    /// Every single-entry deletion has at least two completions.
    pub minimal: bool,
    /// The unique completion, present iff `uniquely_completable`.
    pub completion: Option<LatinSquare>,
    /// Up to two completions of the set itself.
    pub witnesses: Vec<LatinSquare>,
    /// One check per filled entry, row-major.
    pub entries: Vec<EntryCheck>,
}

impl CriticalityReport {
    pub fn is_critical(&self) -> bool {
        self.uniquely_completable && self.minimal
    }

    /// Entries whose deletion leaves fewer than two completions.
    pub fn violations(&self) -> Vec<Triple> {
        self.entries
            .iter()
            .filter(|e| e.is_removable())
            .map(|e| e.entry)
            .collect()
    }
}

/// Checks unique completability and minimality of `c`.
pub fn verify_critical(c: &PartialLatinSquare) -> CriticalityReport {
    let report = count_completions(c, UC_CAP);
    let uniquely_completable = report.is_unique();
    let completion = uniquely_completable.then(|| report.witnesses[0].clone());

    let triples: Vec<Triple> = c.triples().collect();
    let entries: Vec<EntryCheck> = triples
        .par_iter()
        .map(|&t| {
            let smaller = c.remove_entry(t.row, t.col).expect("entry is filled");
            let r = count_completions(&smaller, UC_CAP);
            let alternative = r
                .witnesses
                .into_iter()
                .find(|w| Some(w) != completion.as_ref())
                .filter(|_| r.count >= 2);
            EntryCheck {
                entry: t,
                completions: r.count,
                alternative,
            }
        })
        .collect();

    CriticalityReport {
        size: triples.len(),
        uniquely_completable,
        minimal: entries.iter().all(|e| !e.is_removable()),
        completion,
        witnesses: report.witnesses,
        entries,
    }
}

/// Order in which [`minimize_uc`] tries to delete entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RemovalOrder {
    #[default]
    RowMajor,
    /// A seeded shuffle of the row-major order.
    Shuffled(u64),
}

/// Greedily deletes entries from a uniquely completable set while it stays
/// uniquely completable, until a full pass deletes nothing.
pub fn minimize_uc(p: &PartialLatinSquare, order: RemovalOrder) -> Result<PartialLatinSquare> {
    let report = count_completions(p, UC_CAP);
    if !report.is_unique() {
        return Err(Error::NotUnique {
            count: report.count,
            capped: report.capped,
        });
    }
    let mut cells: Vec<(usize, usize)> = p.shape();
    if let RemovalOrder::Shuffled(seed) = order {
        cells.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }

    let mut current = p.clone();
    loop {
        let mut removed_any = false;
        for &(r, c) in &cells {
            if current.get(r, c).is_none() {
                continue;
            }
            let candidate = current.remove_entry(r, c)?;
            if is_uniquely_completable(&candidate) {
                current = candidate;
                removed_any = true;
            }
        }
        if !removed_any {
            return Ok(current);
        }
    }
}

/// How [`largest_critical_in`] searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every subset of the square's cells; exact.
    Exhaustive(OrderLimit),
    /// Best of `starts` seeded greedy minimizations from the full square; a
    /// lower bound only.
    Heuristic { seed: u64, starts: usize },
}

impl Default for SearchMode {
    fn default() -> Self {
        SearchMode::Exhaustive(OrderLimit::Standard)
    }
}

/// Largest critical set found inside one square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargestCritical {
    pub size: usize,
    pub witness: PartialLatinSquare,
    /// True for exhaustive search, false when `size` is only a lower bound.
    pub exact: bool,
}

/// Prefers larger sets, then the lexicographically smaller row-major triple list.
fn better(a: &PartialLatinSquare, b: &PartialLatinSquare) -> bool {
    match a.size().cmp(&b.size()) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => a.triples().lt(b.triples()),
    }
}

pub fn largest_critical_in(l: &LatinSquare, mode: SearchMode) -> Result<LargestCritical> {
    match mode {
        SearchMode::Exhaustive(limit) => {
            limit.check(
                l.order(),
                EXHAUSTIVE_LIMIT,
                "exhaustive critical-set search",
            )?;
            let witness = exhaustive_largest(l);
            Ok(LargestCritical {
                size: witness.size(),
                witness,
                exact: true,
            })
        }
        SearchMode::Heuristic { seed, starts } => {
            if starts == 0 {
                return Err(Error::InvalidArgument(
                    "heuristic portfolio needs at least one start".into(),
                ));
            }
            let full = l.to_partial();
            let found: Vec<PartialLatinSquare> = (0..starts as u64)
                .into_par_iter()
                .map(|i| {
                    minimize_uc(&full, RemovalOrder::Shuffled(seed.wrapping_add(i)))
                        .expect("a full square is uniquely completable")
                })
                .collect();
            let witness = found
                .into_iter()
                .reduce(|best, c| if better(&c, &best) { c } else { best })
                .expect("at least one start");
            Ok(LargestCritical {
                size: witness.size(),
                witness,
                exact: false,
            })
        }
    }
}

/// Scans all `2^(n^2)` subsets of `l` in increasing bitmask order.
///
/// A subset with some one-smaller uniquely completable subset is uniquely
/// completable by monotonicity and cannot be critical, so no solver call is
/// needed. Every other subset gets a solver call, and when it comes back
/// uniquely completable the subset is critical: all its one-smaller subsets
/// are known not to be.
fn exhaustive_largest(l: &LatinSquare) -> PartialLatinSquare {
    let n = l.order();
    let cells = n * n;
    assert!(cells < 64, "exhaustive search limited to order 7");
    let total = 1u64 << cells;
    let mut uc = vec![0u64; total.div_ceil(64) as usize];
    let is_uc = |uc: &[u64], m: u64| uc[(m / 64) as usize] >> (m % 64) & 1 == 1;

    let mut best: Option<PartialLatinSquare> = None;
    for mask in 0..total {
        let mut bits = mask;
        let mut implied = false;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if is_uc(&uc, mask ^ low) {
                implied = true;
                break;
            }
            bits ^= low;
        }
        let uniquely = implied || {
            let p = subset(l, mask);
            let u = is_uniquely_completable(&p);
            if u && best.as_ref().is_none_or(|b| better(&p, b)) {
                best = Some(p);
            }
            u
        };
        if uniquely {
            uc[(mask / 64) as usize] |= 1 << (mask % 64);
        }
    }
    best.expect("the full square is uniquely completable, so some subset is critical")
}

fn subset(l: &LatinSquare, mask: u64) -> PartialLatinSquare {
    let n = l.order();
    l.restrict(|r, c| mask >> ((r - 1) * n + (c - 1)) & 1 == 1)
}

/// The largest critical set size for one order, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcsRecord {
    pub order: usize,
    pub value: usize,
    pub witness_square: LatinSquare,
    pub witness_set: PartialLatinSquare,
}

/// Exact `lcs(n)`: the maximum over reduced squares of the largest critical
/// set inside each. Row, column and symbol relabelings map critical sets to
/// critical sets of the same size, and every square relabels to a reduced
/// one, so reduced squares suffice.
pub fn lcs_exhaustive(n: usize, limit: OrderLimit) -> Result<LcsRecord> {
    limit.check(n, EXHAUSTIVE_LIMIT, "exhaustive lcs")?;
    let squares: Vec<LatinSquare> = iter_reduced(n, OrderLimit::Extended)?.collect();
    let per_square: Vec<(LatinSquare, PartialLatinSquare)> = squares
        .into_par_iter()
        .map(|l| {
            let w = exhaustive_largest(&l);
            (l, w)
        })
        .collect();
    let (witness_square, witness_set) = per_square
        .into_iter()
        .reduce(|best, cand| if better(&cand.1, &best.1) { cand } else { best })
        .expect("at least one reduced square");
    Ok(LcsRecord {
        order: n,
        value: witness_set.size(),
        witness_square,
        witness_set,
    })
}

/// Number of random squares added to the back-circulant square by [`lcs_heuristic`].
pub const HEURISTIC_RANDOM_SQUARES: usize = 8;

/// Lower bound on `lcs(n)` from the heuristic portfolio, run on the
/// back-circulant square and on [`HEURISTIC_RANDOM_SQUARES`] seeded random squares.
pub fn lcs_heuristic(n: usize, seed: u64, starts: usize) -> Result<LcsRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut squares = vec![back_circulant(n)?];
    for _ in 0..HEURISTIC_RANDOM_SQUARES {
        squares.push(random_latin_square(n, &mut rng)?);
    }
    let mut best: Option<(LatinSquare, PartialLatinSquare)> = None;
    for (i, l) in squares.into_iter().enumerate() {
        let found = largest_critical_in(
            &l,
            SearchMode::Heuristic {
                seed: seed.wrapping_add((i * starts) as u64),
                starts,
            },
        )?;
        if best.as_ref().is_none_or(|(_, b)| better(&found.witness, b)) {
            best = Some((l, found.witness));
        }
    }
    let (witness_square, witness_set) = best.expect("at least one square");
    Ok(LcsRecord {
        order: n,
        value: witness_set.size(),
        witness_square,
        witness_set,
    })
}
