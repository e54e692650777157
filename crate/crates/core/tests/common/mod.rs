#![allow(dead_code)]

use critset::{LatinSquare, PartialLatinSquare};
use proptest::prelude::*;

/// Naive completion counter: tries every symbol in every empty cell,
/// row-major, with only the row/column clash test. Shares no code with the
/// library solver.
pub fn naive_completions(p: &PartialLatinSquare) -> Vec<Vec<u8>> {
    let n = p.order();
    let mut cells = p.cells().to_vec();
    let mut out = Vec::new();
    fn rec(n: usize, idx: usize, cells: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if idx == n * n {
            out.push(cells.clone());
            return;
        }
        if cells[idx] != 0 {
            return rec(n, idx + 1, cells, out);
        }
        let (r, c) = (idx / n, idx % n);
        for s in 1..=n as u8 {
            let clash =
                (0..n).any(|j| cells[r * n + j] == s) || (0..n).any(|i| cells[i * n + c] == s);
            if !clash {
                cells[idx] = s;
                rec(n, idx + 1, cells, out);
                cells[idx] = 0;
            }
        }
    }
    rec(n, 0, &mut cells, &mut out);
    out
}

/// Partial squares of order 1..=max_order built by random legal insertions;
/// many of them have no completion at all.
pub fn arb_partial(max_order: usize) -> impl Strategy<Value = PartialLatinSquare> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec((1..=n, 1..=n, 1..=n as u8), 0..=n * n).prop_map(move |ins| {
            let mut p = PartialLatinSquare::empty(n).unwrap();
            for (r, c, s) in ins {
                let _ = p.insert(r, c, s);
            }
            p
        })
    })
}

/// A row, column and symbol permutation of `l` (0-based permutations).
pub fn relabel(cells: &[u8], n: usize, rows: &[usize], cols: &[usize], syms: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; n * n];
    for r in 0..n {
        for c in 0..n {
            let s = cells[r * n + c];
            out[rows[r] * n + cols[c]] = if s == 0 { 0 } else { syms[s as usize - 1] };
        }
    }
    out
}

pub fn is_latin(order: usize, cells: &[u8]) -> bool {
    LatinSquare::from_cells(order, cells.to_vec()).is_ok()
}
