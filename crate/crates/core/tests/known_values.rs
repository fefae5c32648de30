//! Values checked against an independent exact computation outside this
//! crate (Python `fractions`), frozen here.

use hgc_core::errata;
use hgc_core::higher::{weight_d_brute_force, weight_display_matches};
use hgc_core::relations::chain_examples;
use hgc_core::{
    c_via_recurrence, c_via_series, chor_via_recurrence, classical_bernoulli_det, classical_euler_det,
    cross_order_step, enumerate_chains, q, ratio_inversion, weight_d, Caps, ExactRational,
};

fn qs(v: &[(i64, i64)]) -> Vec<ExactRational> {
    v.iter().map(|&(a, b)| q(a, b)).collect()
}

#[test]
fn classical_cauchy_numbers() {
    let expected = qs(&[(1, 1), (1, 2), (-1, 6), (1, 4), (-19, 30), (9, 4), (-863, 84)]);
    assert_eq!(c_via_series(1, 6).values, expected);
    let b = qs(&[
        (1, 1),
        (1, 2),
        (-1, 12),
        (1, 24),
        (-19, 720),
        (3, 160),
        (-863, 60480),
    ]);
    assert_eq!(c_via_recurrence(1, 6).normalized(), b);
}

#[test]
fn hypergeometric_cauchy_numbers() {
    let n2 = qs(&[(1, 1), (2, 3), (-1, 9), (8, 45), (-62, 135), (932, 567)]);
    assert_eq!(c_via_series(2, 5).values, n2);
    let b3 = qs(&[(1, 1), (3, 4), (-3, 80), (7, 320), (-657, 44800)]);
    assert_eq!(c_via_series(3, 4).normalized(), b3);
}

#[test]
fn bernoulli_and_euler() {
    let bernoulli = qs(&[
        (1, 1),
        (-1, 2),
        (1, 6),
        (0, 1),
        (-1, 30),
        (0, 1),
        (1, 42),
        (0, 1),
        (-1, 30),
        (0, 1),
        (5, 66),
        (0, 1),
        (-691, 2730),
    ]);
    assert_eq!(classical_bernoulli_det(12), bernoulli);
    let euler = qs(&[
        (1, 1),
        (-1, 1),
        (5, 1),
        (-61, 1),
        (1385, 1),
        (-50521, 1),
        (2702765, 1),
    ]);
    assert_eq!(classical_euler_det(6), euler);
}

#[test]
fn higher_order_values() {
    assert_eq!(weight_d(1, 2, 2).values[2], q(11, 12));
    assert_eq!(
        weight_d(2, 2, 4).values,
        qs(&[(1, 1), (4, 3), (13, 9), (22, 15), (29, 20)])
    );
    assert_eq!(chor_via_recurrence(1, 2, 2).values[2], q(1, 6));
    assert_eq!(chor_via_recurrence(2, 3, 5).values[5], q(8, 189));
    assert_eq!(chor_via_recurrence(1, 2, 4).values[4], q(-1, 10));
    assert_eq!(chor_via_recurrence(1, 3, 6).values[6], q(16, 21));
    for e in 0..=6 {
        assert_eq!(weight_d_brute_force(3, 4, e), weight_d(3, 4, 6).values[e]);
    }
}

#[test]
fn printed_weight_displays() {
    assert_eq!(
        weight_display_matches(1, 1),
        vec![(1, true), (2, true), (3, true), (4, true)]
    );
    for r in 2..=4 {
        assert_eq!(
            weight_display_matches(1, r),
            vec![(1, true), (2, true), (3, true), (4, false)],
            "r={r}"
        );
    }
}

#[test]
fn inversions() {
    let report = ratio_inversion(5, 10);
    assert!(report.passed());
    assert_eq!(report.records.len(), 10);
    assert!(cross_order_step(2, 15).passed());
    for big_n in 2..=5 {
        assert!(chain_examples(big_n).passed());
    }
}

#[test]
fn chains_are_subsets_below_n() {
    for n in 0..=10usize {
        let mut from_subsets: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|mask| {
                let mut chain = vec![n];
                chain.extend((0..n).rev().filter(|i| mask >> i & 1 == 1));
                chain
            })
            .collect();
        from_subsets.sort();
        let chains: Vec<Vec<usize>> = enumerate_chains(n, &Caps::default())
            .unwrap()
            .iter()
            .map(|c| c.indices().to_vec())
            .collect();
        assert_eq!(chains, from_subsets, "n={n}");
    }
}

#[test]
fn printed_statements() {
    let (printed, actual) = errata::first_order_partition_sums(1, 4, &Caps::default()).unwrap();
    assert_eq!(printed, qs(&[(-1, 2), (-5, 12), (-17, 8), (-5057, 240)]));
    assert_eq!(actual, qs(&[(1, 2), (-1, 6), (1, 4), (-19, 30)]));

    let (printed, actual) = errata::cameron_as_printed(1, 4);
    assert_eq!(printed, qs(&[(1, 2), (-1, 3), (1, 4), (-1, 5)]));
    assert_eq!(actual, qs(&[(1, 2), (1, 6), (1, 12), (1, 45)]));
}
