//! Critical sets of Latin squares.
//!
//! - [`square`]: Latin and partial Latin squares, the grid text format.
//! - [`solver`]: completion counting with forced-move propagation.
//! - [`criticality`]: critical-set verification, greedy minimization and
//!   exhaustive largest-critical-set search at small orders.
//! - [`constructions`]: back-circulant squares, the triangle critical set,
//!   the order-5 critical set of size 11, first-row/column deletion.
//! - [`enumeration`]: reduced Latin squares and exact counts `L(n)`.
//! - [`bounds`]: lower and upper bounds on critical set sizes in log space.
//! - [`cli`]: the `critset` command line.
//!
//! ```
//! use critset::{constructions, criticality};
//!
//! let c = constructions::five_by_five_critical();
//! let report = criticality::verify_critical(&c);
//! assert!(report.is_critical());
//! assert_eq!(report.size, 11);
//! ```

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod criticality;
pub mod enumeration;
pub mod error;
pub mod solver;
pub mod square;

pub use crate::error::{Error, Result};
pub use crate::square::{LatinSquare, PartialLatinSquare, Triple, MAX_ORDER};
