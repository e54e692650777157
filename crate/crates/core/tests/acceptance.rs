//! Acceptance suite: one check per exit criterion, each with its time budget.
//!
//! Run with `cargo test -p critset --test acceptance -- --nocapture` to see
//! the PASS/FAIL lines.

use std::time::{Duration, Instant};

use critset::bounds::{
    check_chain, crossover, exact_counting_lower, nelder_bound, stirling_check, svr_bound,
    theorem1_lower, theorem1_lower_proof_form, LOG_TOLERANCE,
};
use critset::cli::{run, EXIT_OK};
use critset::constructions::{
    all_but_first_row_col, five_by_five_critical, nelder_triangle, random_latin_square,
};
use critset::criticality::{minimize_uc, verify_critical, RemovalOrder};
use critset::enumeration::{count_all, OrderLimit};
use critset::solver::{count_completions, is_uniquely_completable, propagate, Cap, Propagation};
use critset::PartialLatinSquare;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Relative agreement required between the two written forms of the bound.
const FORM_REL_TOLERANCE: f64 = 1e-9;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    check: fn() -> Result<(), String>,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lcs_reproduction() -> Result<(), String> {
    for (n, want) in [(1, 0), (2, 1), (3, 3), (4, 7)] {
        let out = run(["critset", "lcs", &n.to_string(), "--exhaustive"]);
        ensure(out.code == EXIT_OK, || {
            format!("lcs {n}: exit {}", out.code)
        })?;
        let first = out.stdout.lines().next().unwrap_or_default().to_string();
        ensure(first == format!("lcs({n}) = {want}"), || {
            format!("lcs {n}: got {first:?}")
        })?;
    }
    Ok(())
}

fn five_by_five() -> Result<(), String> {
    let ex = five_by_five_critical();
    let report = verify_critical(&ex);
    ensure(report.is_critical() && report.size == 11, || {
        format!("critical={} size={}", report.is_critical(), report.size)
    })?;
    let (filled, status) = propagate(&ex);
    ensure(
        status == Propagation::FixedPoint && filled.is_complete(),
        || "forced moves do not complete the square".into(),
    )?;
    ensure(
        report.completion.as_ref().map(|l| l.to_partial()) == Some(filled),
        || "propagated grid differs from the unique completion".into(),
    )?;
    for t in ex.triples() {
        let r = count_completions(&ex.remove_entry(t.row, t.col).unwrap(), Cap::at(2));
        ensure(r.count >= 2, || {
            format!("removing {t} leaves {} completions", r.count)
        })?;
    }
    Ok(())
}

fn triangle() -> Result<(), String> {
    for n in 2..=8 {
        let t = nelder_triangle(n).map_err(|e| e.to_string())?;
        ensure(t.size() == n * (n - 1) / 2, || {
            format!("order {n}: size {}", t.size())
        })?;
        ensure(verify_critical(&t).is_critical(), || {
            format!("order {n}: not critical")
        })?;
    }
    Ok(())
}

fn proof_premise() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for i in 0..200 {
        let n = 4 + i % 4;
        let l = random_latin_square(n, &mut rng).map_err(|e| e.to_string())?;
        let p = all_but_first_row_col(&l);
        ensure(is_uniquely_completable(&p), || {
            format!("square {i} (order {n}): not UC")
        })?;
        let c = minimize_uc(&p, RemovalOrder::RowMajor).map_err(|e| e.to_string())?;
        ensure(verify_critical(&c).is_critical(), || {
            format!("square {i}: minimized set not critical")
        })?;
        ensure(c.shape().iter().all(|&(r, col)| r > 1 && col > 1), || {
            format!("square {i}: critical set meets row 1 or column 1")
        })?;
    }
    Ok(())
}

fn enumeration() -> Result<(), String> {
    let want: [u64; 5] = [1, 2, 12, 576, 161_280];
    for (n, &l) in (1..=5).zip(&want) {
        let got = count_all(n, OrderLimit::Standard).map_err(|e| e.to_string())?;
        ensure(got.total_count == BigUint::from(l), || {
            format!("L({n}) = {}", got.total_count)
        })?;
        if n <= 4 {
            let solver = count_completions(&PartialLatinSquare::empty(n).unwrap(), Cap::Unbounded);
            ensure(BigUint::from(solver.count) == got.total_count, || {
                format!(
                    "solver gives {} completions of the empty order-{n} square",
                    solver.count
                )
            })?;
        }
    }
    let r5 = count_all(5, OrderLimit::Standard).unwrap().reduced_count;
    ensure(r5 == 56, || format!("R(5) = {r5}"))
}

fn chain() -> Result<(), String> {
    for (n, lcs) in [(1, 0), (2, 1), (3, 3), (4, 7), (5, 11)] {
        let c = check_chain(n, lcs).map_err(|e| e.to_string())?;
        ensure(
            c.holds
                && c.lhs_log <= c.mid_log + LOG_TOLERANCE
                && c.mid_log <= c.rhs_log + LOG_TOLERANCE,
            || format!("n = {n}: {c:?}"),
        )?;
    }
    Ok(())
}

fn stirling() -> Result<(), String> {
    match (1..=300).find(|&n| !stirling_check(n)) {
        None => Ok(()),
        Some(n) => Err(format!("fails at n = {n}")),
    }
}

fn crossover_at_195() -> Result<(), String> {
    let c = crossover();
    ensure(c == 195, || format!("crossover = {c}"))?;
    let t194 = theorem1_lower(194).unwrap();
    let t195 = theorem1_lower(195).unwrap();
    ensure(t194 < nelder_bound(194).to_f64().unwrap(), || {
        format!("t(194) = {t194}")
    })?;
    ensure(t195 > nelder_bound(195).to_f64().unwrap(), || {
        format!("t(195) = {t195}")
    })
}

fn coherence() -> Result<(), String> {
    for n in 2..=100_000u64 {
        let a = theorem1_lower(n).unwrap();
        let b = theorem1_lower_proof_form(n).unwrap();
        ensure(
            (a - b).abs() <= FORM_REL_TOLERANCE * a.abs().max(1.0),
            || format!("forms differ at n = {n}: {a} vs {b}"),
        )?;
    }
    for n in 2..=10_000u64 {
        let exact = exact_counting_lower(n).unwrap();
        let t = theorem1_lower(n).unwrap();
        ensure(exact >= t, || {
            format!("n = {n}: exact counting bound {exact} below {t}")
        })?;
    }
    for m in 2..=20u32 {
        let svr = svr_bound(m).to_f64().unwrap();
        let t = theorem1_lower(1 << m).unwrap();
        ensure(svr > t, || format!("m = {m}: {svr} <= {t}"))?;
    }
    Ok(())
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        name: "exhaustive lcs(1..4) = 0, 1, 3, 7",
        budget: Duration::from_secs(300),
        check: lcs_reproduction,
    },
    Criterion {
        id: 2,
        name: "order-5 critical set of size 11",
        budget: Duration::from_secs(1),
        check: five_by_five,
    },
    Criterion {
        id: 3,
        name: "triangle construction critical for n = 2..8",
        budget: Duration::from_secs(120),
        check: triangle,
    },
    Criterion {
        id: 4,
        name: "first row/column premise on 200 random squares",
        budget: Duration::from_secs(300),
        check: proof_premise,
    },
    Criterion {
        id: 5,
        name: "L(1..5) and R(5) by enumeration",
        budget: Duration::from_secs(60),
        check: enumeration,
    },
    Criterion {
        id: 6,
        name: "counting chain for n = 1..5",
        budget: Duration::from_secs(60),
        check: chain,
    },
    Criterion {
        id: 7,
        name: "Stirling dominance for n = 1..300",
        budget: Duration::from_secs(1),
        check: stirling,
    },
    Criterion {
        id: 8,
        name: "crossover at 195",
        budget: Duration::from_secs(1),
        check: crossover_at_195,
    },
    Criterion {
        id: 9,
        name: "bound formula coherence",
        budget: Duration::from_secs(10),
        check: coherence,
    },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= c.budget => Ok(()),
            Ok(()) => Err(format!("over budget ({elapsed:?} > {:?})", c.budget)),
            Err(e) => Err(e),
        };
        match &verdict {
            Ok(()) => println!("PASS {}: {} [{elapsed:.2?}]", c.id, c.name),
            Err(e) => {
                println!("FAIL {}: {} [{elapsed:.2?}]: {e}", c.id, c.name);
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
