//! Printed statements that do not hold as written, each evaluated literally
//! next to its corrected form.
//!
//! Every function here returns `(printed, actual)` pairs so the identity
//! suites can record the discrepancy with both values.

use crate::caps::Caps;
use crate::cauchy::{c_via_series, factorial_q, ratio};
use crate::combinatorics::{enumerate_partition_multiplicities, factorial};
use crate::error::Result;
use crate::hessenberg::determinant_inversion_roundtrip;
use crate::rational::ExactRational;
use crate::series::cameron_transform;

/// First index `n` (1-based) where two sequences differ.
pub fn first_mismatch(printed: &[ExactRational], actual: &[ExactRational]) -> Option<usize> {
    printed
        .iter()
        .zip(actual)
        .position(|(p, a)| p != a)
        .map(|i| i + 1)
}

/// The inverse of the unit triangular Toeplitz matrix with bands
/// `α_n = det(R(1..n))`, as printed: bands `R(k)`. Returns
/// `(printed, actual)` band sequences; the actual bands are `(-1)^k R(k)`.
pub fn inverse_bands_as_printed(rule: &[ExactRational]) -> (Vec<ExactRational>, Vec<ExactRational>) {
    let rt = determinant_inversion_roundtrip(rule);
    (rule.to_vec(), rt.inverse_bands)
}

/// The printed partition expansion of `c_{N,n}` with multinomial
/// `(n - Σt)! / (t_1! .. t_n!)` and sign `(-1)^(Σt)`.
pub fn first_order_partition_sum_as_printed(big_n: u32, n: usize, caps: &Caps) -> Result<ExactRational> {
    let mut total = ExactRational::zero();
    for p in enumerate_partition_multiplicities(n, caps)?.iter() {
        let parts = p.part_count();
        let denom: ExactRational = p
            .multiplicities()
            .iter()
            .map(|&t| ExactRational::from(factorial(t as usize)))
            .product();
        let mut term = ExactRational::from(factorial(n - parts)) / denom * ExactRational::sign_power(parts);
        for (k, t) in p.parts() {
            term *= ratio(big_n, k).pow(t as i32);
        }
        total += term;
    }
    Ok(total * factorial_q(n))
}

/// `(printed, actual)` for `c_{N,1..=n_max}`.
pub fn first_order_partition_sums(
    big_n: u32,
    n_max: usize,
    caps: &Caps,
) -> Result<(Vec<ExactRational>, Vec<ExactRational>)> {
    let actual = c_via_series(big_n, n_max).values[1..].to_vec();
    let printed = (1..=n_max)
        .map(|n| first_order_partition_sum_as_printed(big_n, n, caps))
        .collect::<Result<Vec<_>>>()?;
    Ok((printed, actual))
}

/// The three worked cases of the `r`-fold convolution, evaluated on an
/// arbitrary sequence `s_0, s_1, s_2` standing in for `c_{N,0..2}`:
///
/// - printed: `s_0^(r+1)`, `r s_1`, `r s_2 s_0^(N-1) + r(r-1) s_1^2 s_0^(r-2)`
/// - convolution: `s_0^r`, `r s_1 s_0^(r-1)`, `r s_2 s_0^(r-1) + r(r-1) s_1^2 s_0^(r-2)`
///
/// The two agree whenever `s_0 = 1`, as it is for `c_{N,0}`, but the printed
/// exponents are wrong as polynomial identities.
pub fn convolution_examples(
    big_n: u32,
    r: u32,
    s: [&ExactRational; 3],
) -> [(ExactRational, ExactRational); 3] {
    assert!(r >= 2, "the convolution examples are stated for r >= 2");
    let [s0, s1, s2] = s;
    let rq = ExactRational::from(r);
    let pair_weight = &rq * (&rq - ExactRational::one());
    let r = r as i32;
    let second_tail = &pair_weight * s1.pow(2) * s0.pow(r - 2);
    [
        (s0.pow(r + 1), s0.pow(r)),
        (&rq * s1, &rq * s1 * s0.pow(r - 1)),
        (
            &rq * s2 * s0.pow(big_n as i32 - 1) + &second_tail,
            &rq * s2 * s0.pow(r - 1) + second_tail,
        ),
    ]
}

/// The Cameron correspondence as printed: `x_n = c_{N,n}/n!` is claimed to
/// map to `z_n = (-1)^(n-1) N/(N+n)`. Returns `(printed z, actual z)`.
pub fn cameron_as_printed(big_n: u32, order: usize) -> (Vec<ExactRational>, Vec<ExactRational>) {
    let b = c_via_series(big_n, order).normalized();
    let actual = cameron_transform(&b[1..]);
    let printed = (1..=order)
        .map(|n| ExactRational::sign_power(n - 1) * ratio(big_n, n))
        .collect();
    (printed, actual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn printed_inverse_has_wrong_signs() {
        let rule: Vec<_> = (1..=4).map(|k| q(1, k + 1)).collect();
        let (printed, actual) = inverse_bands_as_printed(&rule);
        assert_eq!(first_mismatch(&printed, &actual), Some(1));
        assert_eq!((&printed[0], &actual[0]), (&q(1, 2), &q(-1, 2)));
        assert_eq!(actual[1], q(1, 3));
    }

    #[test]
    fn printed_partition_sum_disagrees() {
        let (printed, actual) = first_order_partition_sums(1, 4, &Caps::default()).unwrap();
        assert_eq!(printed, vec![q(-1, 2), q(-5, 12), q(-17, 8), q(-5057, 240)]);
        assert_eq!(actual[1], q(-1, 6));
        assert_eq!(first_mismatch(&printed, &actual), Some(1));
    }

    #[test]
    fn convolution_examples_hold_only_at_unit_constant() {
        let c = c_via_series(2, 2).values;
        for (printed, lemma) in convolution_examples(2, 3, [&c[0], &c[1], &c[2]]) {
            assert_eq!(printed, lemma);
        }
        let two = q(2, 1);
        let [(p0, l0), _, _] = convolution_examples(1, 2, [&two, &c[1], &c[2]]);
        assert_eq!((p0, l0), (q(8, 1), q(4, 1)));
    }

    #[test]
    fn cameron_printed_direction_fails_at_two() {
        let (printed, actual) = cameron_as_printed(1, 4);
        assert_eq!(first_mismatch(&printed, &actual), Some(2));
        assert_eq!(actual, vec![q(1, 2), q(1, 6), q(1, 12), q(1, 45)]);
    }
}
