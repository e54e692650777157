mod common;

use critset::constructions::{all_but_first_row_col, back_circulant, five_by_five_critical};
use critset::enumeration::{count_all, OrderLimit};
use critset::solver::{
    count_completions, is_uniquely_completable, propagate, unique_completion, Cap, Propagation,
};
use critset::{LatinSquare, PartialLatinSquare};
use num_bigint::BigUint;
use proptest::prelude::*;

use common::{arb_partial, naive_completions};

const FIVE_BY_FIVE_COMPLETION: &str = "5\n2 5 4 3 1\n5 4 1 2 3\n4 2 3 1 5\n3 1 2 5 4\n1 3 5 4 2\n";

#[test]
fn five_by_five_completes_by_forced_moves() {
    let (filled, status) = propagate(&five_by_five_critical());
    assert_eq!(status, Propagation::FixedPoint);
    assert!(filled.is_complete());
    assert_eq!(filled.to_string(), FIVE_BY_FIVE_COMPLETION);
    // independent check of the expected grid
    let naive = naive_completions(&five_by_five_critical());
    assert_eq!(naive.len(), 1);
    assert_eq!(
        LatinSquare::from_cells(5, naive[0].clone())
            .unwrap()
            .to_string(),
        FIVE_BY_FIVE_COMPLETION
    );
}

#[test]
fn five_by_five_is_unique_and_each_deletion_is_not() {
    let ex = five_by_five_critical();
    let r = count_completions(&ex, Cap::at(2));
    assert_eq!((r.count, r.capped), (1, false));
    assert_eq!(
        unique_completion(&ex).unwrap().to_string(),
        FIVE_BY_FIVE_COMPLETION
    );
    for t in ex.triples() {
        let r = count_completions(&ex.remove_entry(t.row, t.col).unwrap(), Cap::at(2));
        assert_eq!((r.count, r.capped), (2, true), "entry {t}");
        assert_eq!(r.witnesses.len(), 2);
        assert_ne!(r.witnesses[0], r.witnesses[1]);
    }
}

#[test]
fn empty_squares_match_enumeration() {
    for n in 1..=4 {
        let r = count_completions(&PartialLatinSquare::empty(n).unwrap(), Cap::Unbounded);
        assert!(!r.capped);
        assert_eq!(
            BigUint::from(r.count),
            count_all(n, OrderLimit::Standard).unwrap().total_count,
            "order {n}"
        );
    }
}

#[test]
fn all_but_first_row_col_of_order_five_is_unique() {
    for l in critset::enumeration::iter_reduced(5, OrderLimit::Standard).unwrap() {
        assert!(is_uniquely_completable(&all_but_first_row_col(&l)));
    }
    assert!(is_uniquely_completable(&all_but_first_row_col(
        &back_circulant(5).unwrap()
    )));
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let inputs = [
        PartialLatinSquare::empty(5).unwrap(),
        PartialLatinSquare::empty(6).unwrap(),
        "6\n1 . . . . .\n. 2 . . . .\n. . 3 . . .\n. . . . . .\n. . . . . .\n. . . . . 6\n"
            .parse()
            .unwrap(),
    ];
    let caps = [Cap::Unbounded, Cap::at(20_000), Cap::at(7)];
    for (p, cap) in inputs.iter().zip(caps) {
        let run = |threads: usize| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| count_completions(p, cap))
        };
        let one = run(1);
        assert_eq!(one, run(4));
        assert_eq!(one, run(3));
    }
    assert_eq!(count_completions(&inputs[0], Cap::Unbounded).count, 161_280);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn count_matches_naive_enumerator(p in arb_partial(4)) {
        let naive = naive_completions(&p);
        let r = count_completions(&p, Cap::Unbounded);
        prop_assert_eq!(r.count as usize, naive.len());
        prop_assert!(!r.capped);
        prop_assert_eq!(r.witnesses.len(), naive.len().min(2));
        for w in &r.witnesses {
            prop_assert!(p.is_contained_in(w));
            prop_assert!(naive.contains(&w.cells().to_vec()));
        }
        if r.witnesses.len() == 2 {
            prop_assert_ne!(&r.witnesses[0], &r.witnesses[1]);
        }
    }

    #[test]
    fn propagation_preserves_completions(p in arb_partial(4)) {
        let before = naive_completions(&p);
        let (after, status) = propagate(&p);
        prop_assert!(p.is_subset_of(&after));
        match status {
            Propagation::FixedPoint => {
                let mut got = naive_completions(&after);
                let mut want = before.clone();
                got.sort();
                want.sort();
                prop_assert_eq!(got, want);
            }
            Propagation::Contradiction => prop_assert!(before.is_empty()),
        }
    }

    #[test]
    fn cap_two_decides_uniqueness(p in arb_partial(4)) {
        let exact = naive_completions(&p).len();
        prop_assert_eq!(is_uniquely_completable(&p), exact == 1);
        let r = count_completions(&p, Cap::at(2));
        prop_assert_eq!(r.count as usize, exact.min(2));
        prop_assert_eq!(r.capped, exact >= 2);
    }
}
