//! Latin squares, partial Latin squares and the grid text format.
//!
//! Coordinates and symbols are 1-indexed in every public method, matching the
//! `(row, col; sym)` triple notation. Storage is a flat row-major vector where
//! `0` marks an empty cell.
//!
//! Grid text format:
//!
//! ```text
//! 3
//! 1 . 3
//! . . 1
//! 3 1 .
//! ```
//!
//! The first line is the order `n`, followed by `n` rows of `n` whitespace
//! separated tokens. A token is `.` (or `0`) for an empty cell, or a symbol in
//! `1..=n`. The canonical form written by [`fmt::Display`] uses single spaces,
//! `.` for empty cells and a trailing newline.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest order supported by the combinatorial types (one `u32` mask per line).
pub const MAX_ORDER: usize = 31;

/// Bitmask of symbols: bit `s - 1` stands for symbol `s`.
pub(crate) type Mask = u32;

#[inline]
pub(crate) fn full_mask(order: usize) -> Mask {
    if order >= 32 {
        Mask::MAX
    } else {
        (1 << order) - 1
    }
}

#[inline]
pub(crate) fn bit(sym: u8) -> Mask {
    1 << (sym - 1)
}

fn check_order(order: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(order))
    }
}

/// A filled cell: symbol `sym` in cell `(row, col)`, all 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub row: usize,
    pub col: usize,
    pub sym: u8,
}

impl Triple {
    pub fn new(row: usize, col: usize, sym: u8) -> Self {
        Self { row, col, sym }
    }

    pub fn cell(&self) -> (usize, usize) {
        (self.row, self.col)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.row, self.col, self.sym)
    }
}

/// An `n x n` array with optional entries, no symbol repeated in a row or
/// column.
///
/// Every value of this type satisfies the Latin property; all mutating entry
/// points check it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialLatinSquare {
    order: usize,
    cells: Vec<u8>,
    rows: Vec<Mask>,
    cols: Vec<Mask>,
}

impl PartialLatinSquare {
    /// The empty partial square of the given order.
    pub fn empty(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(Self {
            order,
            cells: vec![0; order * order],
            rows: vec![0; order],
            cols: vec![0; order],
        })
    }

    /// Builds a partial square from row-major cells, `0` meaning empty.
    pub fn from_cells(order: usize, cells: Vec<u8>) -> Result<Self> {
        check_order(order)?;
        if cells.len() != order * order {
            return Err(Error::RowCount {
                expected: order * order,
                found: cells.len(),
            });
        }
        let mut p = Self::empty(order)?;
        for (idx, &sym) in cells.iter().enumerate() {
            if sym != 0 {
                p.insert(idx / order + 1, idx % order + 1, sym)?;
            }
        }
        Ok(p)
    }

    /// Builds a partial square from a list of triples.
    pub fn from_triples(order: usize, triples: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let mut p = Self::empty(order)?;
        for t in triples {
            p.insert(t.row, t.col, t.sym)?;
        }
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Row-major cells, `0` for empty.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub(crate) fn row_mask(&self, r: usize) -> Mask {
        self.rows[r]
    }

    pub(crate) fn col_mask(&self, c: usize) -> Mask {
        self.cols[c]
    }

    fn check_cell(&self, row: usize, col: usize) -> Result<usize> {
        if row == 0 || col == 0 || row > self.order || col > self.order {
            return Err(Error::CellOutOfRange {
                row,
                col,
                order: self.order,
            });
        }
        Ok((row - 1) * self.order + (col - 1))
    }

    /// The symbol in cell `(row, col)`, if any. Panics on out-of-range cells.
    pub fn get(&self, row: usize, col: usize) -> Option<u8> {
        let idx = self
            .check_cell(row, col)
            .expect("cell coordinates out of range");
        match self.cells[idx] {
            0 => None,
            s => Some(s),
        }
    }

    /// Places `sym` in the empty cell `(row, col)`, enforcing the Latin property.
    pub fn insert(&mut self, row: usize, col: usize, sym: u8) -> Result<()> {
        let idx = self.check_cell(row, col)?;
        if sym == 0 || sym as usize > self.order {
            return Err(Error::SymbolOutOfRange {
                row,
                col,
                sym: sym as usize,
                order: self.order,
            });
        }
        if self.cells[idx] != 0 {
            return Err(Error::CellFilled { row, col });
        }
        let b = bit(sym);
        if self.rows[row - 1] & b != 0 {
            return Err(Error::DuplicateInRow {
                row,
                sym: sym as usize,
            });
        }
        if self.cols[col - 1] & b != 0 {
            return Err(Error::DuplicateInColumn {
                col,
                sym: sym as usize,
            });
        }
        self.cells[idx] = sym;
        self.rows[row - 1] |= b;
        self.cols[col - 1] |= b;
        Ok(())
    }

    /// Empties cell `(row, col)` in place and returns the symbol it held.
    pub fn clear(&mut self, row: usize, col: usize) -> Result<u8> {
        let idx = self.check_cell(row, col)?;
        let sym = self.cells[idx];
        if sym == 0 {
            return Err(Error::CellEmpty { row, col });
        }
        self.cells[idx] = 0;
        self.rows[row - 1] &= !bit(sym);
        self.cols[col - 1] &= !bit(sym);
        Ok(sym)
    }

    /// A copy of `self` with cell `(row, col)` emptied.
    pub fn remove_entry(&self, row: usize, col: usize) -> Result<Self> {
        let mut out = self.clone();
        out.clear(row, col)?;
        Ok(out)
    }

    /// A copy of `self` with `t` added.
    pub fn with_entry(&self, t: Triple) -> Result<Self> {
        let mut out = self.clone();
        out.insert(t.row, t.col, t.sym)?;
        Ok(out)
    }

    /// Number of filled cells.
    pub fn size(&self) -> usize {
        self.cells.iter().filter(|&&s| s != 0).count()
    }

    /// Filled cell coordinates in row-major order.
    pub fn shape(&self) -> Vec<(usize, usize)> {
        self.triples().map(|t| t.cell()).collect()
    }

    /// Filled cells as triples, row-major.
    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        let n = self.order;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(move |(idx, &s)| Triple::new(idx / n + 1, idx % n + 1, s))
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(|&s| s != 0)
    }

    /// True when every filled cell of `self` agrees with `square`.
    pub fn is_contained_in(&self, square: &LatinSquare) -> bool {
        self.order == square.order
            && self
                .cells
                .iter()
                .zip(&square.cells)
                .all(|(&p, &l)| p == 0 || p == l)
    }

    /// True when every filled cell of `self` is filled identically in `other`.
    pub fn is_subset_of(&self, other: &PartialLatinSquare) -> bool {
        self.order == other.order
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(&p, &q)| p == 0 || p == q)
    }

    /// Converts a full partial square into a [`LatinSquare`].
    pub fn to_latin(&self) -> Result<LatinSquare> {
        let empty = self.cells.iter().filter(|&&s| s == 0).count();
        if empty > 0 {
            return Err(Error::Incomplete { empty });
        }
        Ok(LatinSquare {
            order: self.order,
            cells: self.cells.clone(),
        })
    }
}

impl fmt::Debug for PartialLatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialLatinSquare(\n{self})")
    }
}

fn write_grid(f: &mut fmt::Formatter<'_>, order: usize, cells: &[u8]) -> fmt::Result {
    writeln!(f, "{order}")?;
    for row in cells.chunks(order) {
        for (c, &s) in row.iter().enumerate() {
            if c > 0 {
                f.write_str(" ")?;
            }
            if s == 0 {
                f.write_str(".")?;
            } else {
                write!(f, "{s}")?;
            }
        }
        f.write_str("\n")?;
    }
    Ok(())
}

impl fmt::Display for PartialLatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.order, &self.cells)
    }
}

impl FromStr for PartialLatinSquare {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).skip_while(|l| l.is_empty());
        let header = lines.next().ok_or(Error::EmptyInput)?;
        let order: usize = header
            .parse()
            .map_err(|_| Error::BadOrderLine(header.to_string()))?;
        check_order(order)?;

        let rows: Vec<&str> = lines.collect();
        // trailing blank lines are tolerated, anything else must be a grid row
        let used = rows
            .iter()
            .rposition(|l| !l.is_empty())
            .map_or(0, |i| i + 1);
        if used != order {
            return Err(Error::RowCount {
                expected: order,
                found: used,
            });
        }

        let mut p = Self::empty(order)?;
        for (r, line) in rows[..used].iter().enumerate() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != order {
                return Err(Error::RowLength {
                    row: r + 1,
                    expected: order,
                    found: tokens.len(),
                });
            }
            for (c, tok) in tokens.iter().enumerate() {
                if *tok == "." {
                    continue;
                }
                let sym: usize = tok.parse().map_err(|_| Error::BadToken {
                    row: r + 1,
                    col: c + 1,
                    token: tok.to_string(),
                })?;
                if sym == 0 {
                    continue;
                }
                if sym > order {
                    return Err(Error::SymbolOutOfRange {
                        row: r + 1,
                        col: c + 1,
                        sym,
                        order,
                    });
                }
                p.insert(r + 1, c + 1, sym as u8)?;
            }
        }
        Ok(p)
    }
}

/// A complete Latin square: every row and column is a permutation of `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<u8>,
}

impl LatinSquare {
    /// Validates row-major cells as a Latin square.
    pub fn from_cells(order: usize, cells: Vec<u8>) -> Result<Self> {
        PartialLatinSquare::from_cells(order, cells)?.to_latin()
    }

    /// Validates a list of rows as a Latin square.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut cells = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::RowLength {
                    row: r + 1,
                    expected: order,
                    found: row.len(),
                });
            }
            cells.extend_from_slice(row);
        }
        Self::from_cells(order, cells)
    }

    /// Skips validation; callers guarantee the Latin property.
    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<u8>) -> Self {
        debug_assert!(PartialLatinSquare::from_cells(order, cells.clone())
            .map(|p| p.is_complete())
            .unwrap_or(false));
        Self { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// Symbol at `(row, col)`, 1-indexed. Panics on out-of-range cells.
    pub fn get(&self, row: usize, col: usize) -> u8 {
        assert!(
            (1..=self.order).contains(&row) && (1..=self.order).contains(&col),
            "cell coordinates out of range"
        );
        self.cells[(row - 1) * self.order + (col - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.cells.chunks(self.order)
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        let n = self.order;
        self.cells
            .iter()
            .enumerate()
            .map(move |(idx, &s)| Triple::new(idx / n + 1, idx % n + 1, s))
    }

    pub fn transpose(&self) -> Self {
        let n = self.order;
        let cells = (0..n * n)
            .map(|idx| self.cells[(idx % n) * n + idx / n])
            .collect();
        Self { order: n, cells }
    }

    /// First row and first column both read `1, 2, ..., n`.
    pub fn is_reduced(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| self.cells[i] as usize == i + 1 && self.cells[i * n] as usize == i + 1)
    }

    pub fn to_partial(&self) -> PartialLatinSquare {
        let n = self.order;
        let mut rows = vec![0; n];
        let mut cols = vec![0; n];
        for (idx, &s) in self.cells.iter().enumerate() {
            rows[idx / n] |= bit(s);
            cols[idx % n] |= bit(s);
        }
        PartialLatinSquare {
            order: n,
            cells: self.cells.clone(),
            rows,
            cols,
        }
    }

    /// The partial square keeping only the cells selected by `keep`
    /// (1-indexed `(row, col)`).
    pub fn restrict(&self, mut keep: impl FnMut(usize, usize) -> bool) -> PartialLatinSquare {
        let n = self.order;
        let cells = self
            .cells
            .iter()
            .enumerate()
            .map(|(idx, &s)| if keep(idx / n + 1, idx % n + 1) { s } else { 0 })
            .collect();
        PartialLatinSquare::from_cells(n, cells).expect("restriction of a Latin square is Latin")
    }
}

impl fmt::Debug for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatinSquare(\n{self})")
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, self.order, &self.cells)
    }
}

impl FromStr for LatinSquare {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.parse::<PartialLatinSquare>()?.to_latin()
    }
}

impl From<&LatinSquare> for PartialLatinSquare {
    fn from(l: &LatinSquare) -> Self {
        l.to_partial()
    }
}
