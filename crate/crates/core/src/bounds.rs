//! Bounds on the largest critical set size and the counting chain behind the
//! asymptotic lower bound.
//!
//! All large quantities stay in natural-log space; `(n!)^(2n) / n^(n^2)` and
//! friends are never materialized. `ln n!` is always an exact sum of `ln k`
//! so comparisons against the Stirling substitute are honest. Integer bounds
//! use arbitrary precision.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use std::f64::consts::{LN_2, PI};

use crate::enumeration::{count_all, OrderLimit};
use crate::error::{Error, Result};

/// Absolute slack for inequalities between log values.
pub const LOG_TOLERANCE: f64 = 1e-9;

/// Known values of lcs(n) for n = 1..=6.
pub const KNOWN_LCS: [(usize, usize); 6] = [(1, 0), (2, 1), (3, 3), (4, 7), (5, 11), (6, 18)];

/// Known lower bounds on lcs(n) for n = 7..=10.
pub const KNOWN_LCS_LOWER: [(usize, usize); 4] = [(7, 25), (8, 37), (9, 44), (10, 57)];

pub fn known_lcs(n: usize) -> Option<usize> {
    KNOWN_LCS.iter().find(|&&(k, _)| k == n).map(|&(_, v)| v)
}

/// `ln n!` by direct summation.
pub fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

fn need_two(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "the bound divides by ln n and is undefined for n = {n}"
        )));
    }
    Ok((n as f64).ln())
}

/// `n^2 (1 - (2 + ln 2)/ln n) + n (1 + ln(8 pi)/ln n) - ln 2 / ln n`.
pub fn theorem1_lower(n: u64) -> Result<f64> {
    let ln_n = need_two(n)?;
    let n = n as f64;
    Ok(n * n * (1.0 - (2.0 + LN_2) / ln_n) + n * (1.0 + (8.0 * PI).ln() / ln_n) - LN_2 / ln_n)
}

/// Same bound with the linear coefficient written `1 + (2 ln 2 + ln 2 pi)/ln n`.
pub fn theorem1_lower_proof_form(n: u64) -> Result<f64> {
    let ln_n = need_two(n)?;
    let n = n as f64;
    Ok(
        n * n * (1.0 - (2.0 + LN_2) / ln_n) + n * (1.0 + (2.0 * LN_2 + (2.0 * PI).ln()) / ln_n)
            - LN_2 / ln_n,
    )
}

/// The lower bound obtained from the counting chain with exact `ln n!`
/// instead of the Stirling substitute:
/// `(2n ln n! - n^2 ln n - (n^2 - 2n + 1) ln 2) / ln n`.
pub fn exact_counting_lower(n: u64) -> Result<f64> {
    let ln_n = need_two(n)?;
    let nf = n as f64;
    Ok((log_latin_lower(n) - (nf * nf - 2.0 * nf + 1.0) * LN_2) / ln_n)
}

/// `(n^2 - n)/2`, the size of the triangle construction.
pub fn nelder_bound(n: u64) -> BigUint {
    let n = BigUint::from(n);
    (&n * &n - &n) / 2u32
}

/// `n^2 - 3n + 3`, an upper bound on lcs(n).
pub fn bm_upper(n: u64) -> BigUint {
    let n = BigUint::from(n);
    &n * &n + 3u32 - &n * 3u32
}

/// `4^m - 3^m`, a lower bound on lcs(2^m).
pub fn svr_bound(m: u32) -> BigUint {
    BigUint::from(4u32).pow(m) - BigUint::from(3u32).pow(m)
}

/// `ln((n!)^(2n) / n^(n^2)) = 2n ln n! - n^2 ln n`.
pub fn log_latin_lower(n: u64) -> f64 {
    let nf = n as f64;
    2.0 * nf * ln_factorial(n) - nf * nf * nf.ln()
}

/// `ln sqrt(2 pi n) + n ln n - n <= ln n!`.
pub fn stirling_check(n: u64) -> bool {
    let nf = n as f64;
    let stirling = 0.5 * (2.0 * PI * nf).ln() + nf * nf.ln() - nf;
    stirling <= ln_factorial(n)
}

/// Smallest `n >= 2` with `theorem1_lower(k) > nelder_bound(k)` for every
/// `k` in `[n, 10 n]`.
pub fn crossover() -> u64 {
    let beats =
        |k: u64| theorem1_lower(k).expect("k >= 2") > nelder_bound(k).to_f64().expect("finite");
    (2u64..)
        .find(|&n| (n..=10 * n).all(beats))
        .expect("the quadratic coefficients guarantee a crossover")
}

/// The three log terms of `(n!)^(2n)/n^(n^2) <= L(n) <= 2^((n-1)^2) n^lcs(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainCheck {
    pub order: usize,
    pub lcs: usize,
    pub lhs_log: f64,
    pub mid_log: f64,
    pub rhs_log: f64,
    pub holds: bool,
}

/// Evaluates the counting chain with the exact `L(n)` from enumeration.
pub fn check_chain(n: usize, lcs_value: usize) -> Result<ChainCheck> {
    let counts = count_all(n, OrderLimit::Standard)?;
    let nf = n as f64;
    let lhs_log = log_latin_lower(n as u64);
    let mid_log = counts.total_count.to_f64().expect("L(n) fits in f64").ln();
    let rhs_log = (nf * nf - 2.0 * nf + 1.0) * LN_2 + lcs_value as f64 * nf.ln();
    Ok(ChainCheck {
        order: n,
        lcs: lcs_value,
        lhs_log,
        mid_log,
        rhs_log,
        holds: lhs_log <= mid_log + LOG_TOLERANCE && mid_log <= rhs_log + LOG_TOLERANCE,
    })
}

/// Every bound for one order.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsRow {
    pub order: u64,
    pub nelder: BigUint,
    pub bm_upper: BigUint,
    /// `None` at n = 1, where the bound is undefined.
    pub theorem1: Option<f64>,
    pub exact_counting_lower: Option<f64>,
    /// Present iff the order is a power of two `2^m` with `m >= 1`.
    pub svr: Option<BigUint>,
    pub log_latin_lower: f64,
    /// `((n^2 - 2n + 1) ln 2, ln n)`: the upper count is
    /// `shape_log + lcs(n) * entry_log`.
    pub log_cs_count_upper_coeffs: (f64, f64),
}

pub fn bounds_row(n: u64) -> BoundsRow {
    let nf = n as f64;
    let svr = (n >= 2 && n.is_power_of_two()).then(|| svr_bound(n.trailing_zeros()));
    BoundsRow {
        order: n,
        nelder: nelder_bound(n),
        bm_upper: bm_upper(n),
        theorem1: theorem1_lower(n).ok(),
        exact_counting_lower: exact_counting_lower(n).ok(),
        svr,
        log_latin_lower: log_latin_lower(n),
        log_cs_count_upper_coeffs: ((nf * nf - 2.0 * nf + 1.0) * LN_2, nf.ln()),
    }
}

/// One row per order in `n_from..=n_to`. Order 1 is allowed; its real-valued
/// lower bounds are `None`.
pub fn bounds_table(n_from: u64, n_to: u64) -> Result<Vec<BoundsRow>> {
    if n_from < 1 || n_from > n_to {
        return Err(Error::InvalidArgument(format!(
            "invalid order range {n_from}..{n_to}"
        )));
    }
    Ok((n_from..=n_to).map(bounds_row).collect())
}

impl BoundsRow {
    /// True when the asymptotic bound beats the triangle construction.
    pub fn theorem1_beats_nelder(&self) -> bool {
        match self.theorem1 {
            Some(t) => t > self.nelder.to_f64().unwrap_or(f64::INFINITY),
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_bounds() {
        assert_eq!(nelder_bound(1), BigUint::from(0u32));
        assert_eq!(nelder_bound(5), BigUint::from(10u32));
        assert_eq!(nelder_bound(195), BigUint::from(18915u32));
        assert_eq!(bm_upper(1), BigUint::from(1u32));
        assert_eq!(bm_upper(4), BigUint::from(7u32));
        assert_eq!(bm_upper(5), BigUint::from(13u32));
        assert_eq!(svr_bound(1), BigUint::from(1u32));
        assert_eq!(svr_bound(2), BigUint::from(7u32));
        assert_eq!(svr_bound(3), BigUint::from(37u32));
        // stays exact far beyond u64
        assert_eq!(svr_bound(40).to_string(), "1208913661949170117777375");
    }

    #[test]
    fn theorem1_values() {
        // reference values from an independent double-precision evaluation
        assert!((theorem1_lower(195).unwrap() - 18918.101691605923).abs() < 1e-6);
        assert!((theorem1_lower(194).unwrap() - 18707.52400764992).abs() < 1e-6);
        assert!((theorem1_lower(6).unwrap() - -1.7008529662060194).abs() < 1e-9);
        assert!(theorem1_lower(1).is_err());
        assert!(theorem1_lower(0).is_err());
    }

    #[test]
    fn log_latin_lower_small() {
        assert_eq!(log_latin_lower(1), 0.0);
        assert!(log_latin_lower(2).abs() < 1e-12);
        assert!((log_latin_lower(5) - 7.638969616967948).abs() < 1e-9);
    }

    #[test]
    fn stirling_small_and_large() {
        assert!(stirling_check(1));
        assert!(stirling_check(10));
        assert!(stirling_check(300));
        assert!(ln_factorial(300).is_finite());
    }

    #[test]
    fn crossover_is_195() {
        assert_eq!(crossover(), 195);
    }

    #[test]
    fn chain_small_orders() {
        let c = check_chain(1, 0).unwrap();
        assert!(c.holds);
        assert_eq!((c.lhs_log, c.mid_log, c.rhs_log), (0.0, 0.0, 0.0));
        let c = check_chain(5, 11).unwrap();
        assert!(c.holds);
        assert!((c.mid_log - 11.990897263865142).abs() < 1e-9);
        assert!((c.rhs_log - 28.794171925734226).abs() < 1e-9);
        assert!(check_chain(6, 18).is_err());
        // an lcs value that is far too small breaks the upper end
        assert!(!check_chain(5, 0).unwrap().holds);
    }

    #[test]
    fn table_rows() {
        let rows = bounds_table(4, 4).unwrap();
        assert_eq!(rows[0].nelder, BigUint::from(6u32));
        assert_eq!(rows[0].bm_upper, BigUint::from(7u32));
        assert_eq!(rows[0].svr, Some(BigUint::from(7u32)));
        let rows = bounds_table(2, 3).unwrap();
        assert_eq!(rows[0].nelder, BigUint::from(1u32));
        assert_eq!(rows[1].svr, None);
        assert!(bounds_table(195, 195).unwrap()[0].theorem1_beats_nelder());
        assert!(!bounds_table(194, 194).unwrap()[0].theorem1_beats_nelder());
        assert_eq!(bounds_table(1, 1).unwrap()[0].theorem1, None);
        assert!(bounds_table(5, 4).is_err());
        assert!(bounds_table(0, 4).is_err());
    }
}
