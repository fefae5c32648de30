//! Higher-order numbers `c^{(r)}_{N,n}`: `n!` times the coefficients of
//! `2F1(1, N; N+1; -x)^(-r)`.
//!
//! Every method routes through the weights
//! `D_r(e) = Σ_{i_1+..+i_r=e, i_j≥0} N^r / ((N+i_1)..(N+i_r))`,
//! the Hessenberg bands of the higher-order determinant, except
//! [`chor_via_convolution`] and [`chor_via_series`], which work directly
//! on generating functions.

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::cauchy::{
    assert_positive, c_via_series, factorial_q, hgc_generating_series, ratio, CauchyTable, Method,
};
use crate::combinatorics::{binomial, composition_multiplicity_counts, WeakCompositions};
use crate::error::{CapKind, Result};
use crate::hessenberg::{trudi_sum, unit_lower_toeplitz_inverse, HessenbergSpec};
use crate::rational::ExactRational;
use crate::report::{ParameterPoint, VerificationReport};
use crate::series::TruncatedSeries;

/// `D_r(0..=e_max)` for fixed `(N, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTable {
    #[serde(rename = "N")]
    pub big_n: u32,
    pub r: u32,
    pub values: Vec<ExactRational>,
}

impl WeightTable {
    pub fn e_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `D_r(1..=n)`, the band sequence.
    pub fn bands(&self, n: usize) -> Vec<ExactRational> {
        self.values[1..=n].to_vec()
    }
}

/// `D_r(e)` as the `r`-fold Cauchy self-convolution of `g_j = N/(N+j)`.
pub fn weight_d(big_n: u32, r: u32, e_max: usize) -> WeightTable {
    assert_positive("N", big_n);
    assert_positive("r", r);
    let g = TruncatedSeries::new((0..=e_max).map(|j| ratio(big_n, j)).collect());
    WeightTable {
        big_n,
        r,
        values: g.pow(r).into_coefficients(),
    }
}

/// `D_r(e)` by enumerating every weak composition of `e` into `r` parts.
pub fn weight_d_brute_force(big_n: u32, r: u32, e: usize) -> ExactRational {
    let numer = ExactRational::from(big_n).pow(r as i32);
    WeakCompositions::new(e, r as usize)
        .map(|comp| {
            let denom: ExactRational = comp
                .iter()
                .map(|&i| ExactRational::from(big_n as u64 + i as u64))
                .product();
            &numer / denom
        })
        .sum()
}

fn table(big_n: u32, r: u32, method: Method, values: Vec<ExactRational>) -> CauchyTable {
    CauchyTable {
        big_n,
        r,
        method,
        values,
    }
}

fn scale_by_factorials(b: Vec<ExactRational>) -> Vec<ExactRational> {
    b.into_iter()
        .enumerate()
        .map(|(n, v)| v * factorial_q(n))
        .collect()
}

/// `b_n = Σ_{l=1..n} (-1)^(l-1) D_r(l) b_{n-l}`, `b_0 = 1`, with
/// `c^{(r)}_{N,n} = n! b_n`.
pub fn chor_via_recurrence(big_n: u32, r: u32, n_max: usize) -> CauchyTable {
    let d = weight_d(big_n, r, n_max).values;
    let mut b: Vec<ExactRational> = vec![ExactRational::one()];
    for n in 1..=n_max {
        let acc = (1..=n)
            .map(|l| ExactRational::sign_power(l - 1) * &d[l] * &b[n - l])
            .sum();
        b.push(acc);
    }
    table(big_n, r, Method::Recurrence, scale_by_factorials(b))
}

/// `n!` times the Hessenberg determinant with bands `D_r(k)`.
pub fn chor_via_determinant(big_n: u32, r: u32, n_max: usize) -> CauchyTable {
    let d = weight_d(big_n, r, n_max);
    let minors = HessenbergSpec::unit(d.bands(n_max)).leading_minors();
    table(big_n, r, Method::Determinant, scale_by_factorials(minors))
}

/// `n! Σ_k (-1)^(n-k) Σ_{e_1+..+e_k=n, e_j≥1} D_r(e_1)..D_r(e_k)` by exhaustive
/// enumeration of strict compositions.
pub fn chor_via_explicit(big_n: u32, r: u32, n_max: usize, caps: &Caps) -> Result<CauchyTable> {
    caps.check(CapKind::Compositions, n_max)?;
    let d = weight_d(big_n, r, n_max).values;
    let mut values = vec![ExactRational::one()];
    for n in 1..=n_max {
        let mut sum = ExactRational::zero();
        for (p, count) in composition_multiplicity_counts(n, caps)?.iter() {
            let k = p.part_count();
            let mut term = ExactRational::sign_power(n - k) * ExactRational::from(*count);
            for (part, t) in p.parts() {
                term *= d[part].pow(t as i32);
            }
            sum += term;
        }
        values.push(sum * factorial_q(n));
    }
    Ok(table(big_n, r, Method::Explicit, values))
}

/// `n!` times the partition expansion of the `D_r` determinant.
pub fn chor_via_trudi(big_n: u32, r: u32, n_max: usize, caps: &Caps) -> Result<CauchyTable> {
    caps.check(CapKind::Partitions, n_max)?;
    let spec = HessenbergSpec::unit(weight_d(big_n, r, n_max).bands(n_max));
    let values = (0..=n_max)
        .map(|n| Ok(trudi_sum(&spec.leading(n), caps)? * factorial_q(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(table(big_n, r, Method::Trudi, values))
}

/// The `r`-th power of `Σ c_{N,n} x^n / n!`, i.e. the multinomial
/// convolution of `r` copies of the first-order table.
pub fn chor_via_convolution(big_n: u32, r: u32, n_max: usize) -> CauchyTable {
    assert_positive("r", r);
    let base = TruncatedSeries::new(c_via_series(big_n, n_max).normalized());
    let b = base.pow(r).into_coefficients();
    table(big_n, r, Method::Convolution, scale_by_factorials(b))
}

/// Straight from the generating function: the reciprocal of
/// `2F1(1, N; N+1; -x)^r`.
pub fn chor_via_series(big_n: u32, r: u32, n_max: usize) -> CauchyTable {
    assert_positive("r", r);
    let b = hgc_generating_series(big_n, n_max)
        .pow(r)
        .reciprocal()
        .expect("constant term is one")
        .into_coefficients();
    table(big_n, r, Method::Series, scale_by_factorials(b))
}

/// Checks that the determinant with bands `c^{(r)}_{N,k}/k!` returns
/// `D_r(n)`, and that the unit triangular Toeplitz matrix with those bands
/// inverts to the one with bands `(-1)^k D_r(k)`.
pub fn d_inversion(big_n: u32, r: u32, n_max: usize) -> VerificationReport {
    let b = chor_via_recurrence(big_n, r, n_max).normalized();
    let d = weight_d(big_n, r, n_max).values;
    let minors = HessenbergSpec::unit(b[1..].to_vec()).leading_minors();
    let inverse = unit_lower_toeplitz_inverse(&b[1..]);
    let mut report = VerificationReport::new();
    for n in 1..=n_max {
        let point = ParameterPoint::new(big_n, r, n);
        report.check("weight-inversion/determinant", point, &d[n], &minors[n]);
        report.check(
            "weight-inversion/inverse-bands",
            point,
            &(ExactRational::sign_power(n) * &d[n]),
            &inverse[n - 1],
        );
    }
    report
}

/// Residuals of
/// `Σ_{m=0..n} Σ_{i_1+..+i_r=n-m} (-1)^(n-m) c_m / (m! (N+i_1)..(N+i_r))`
/// for `n = 1..=n_max`, summed by brute-force weak-composition enumeration.
pub fn weak_composition_residuals(table: &CauchyTable) -> Vec<ExactRational> {
    let (big_n, r) = (table.big_n, table.r as usize);
    (1..=table.n_max())
        .map(|n| {
            let mut acc = ExactRational::zero();
            for m in 0..=n {
                let lead = ExactRational::sign_power(n - m) * &table.values[m] / factorial_q(m);
                for comp in WeakCompositions::new(n - m, r) {
                    let denom: ExactRational = comp
                        .iter()
                        .map(|&i| ExactRational::from(big_n as u64 + i as u64))
                        .product();
                    acc += &lead / denom;
                }
            }
            acc
        })
        .collect()
}

/// The published polynomial-in-`r` forms of `c^{(r)}_{N,0}` through
/// `c^{(r)}_{N,4}`.
pub fn closed_form(big_n: u32, r: u32, n: usize) -> Option<ExactRational> {
    let x = ExactRational::from(big_n);
    let r = ExactRational::from(r);
    let p = |k: i64| &x + ExactRational::from(k);
    let rising = |k: i64| -> ExactRational { (0..k).map(|i| &r + ExactRational::from(i)).product() };
    let int = |k: i64| ExactRational::from(k);
    let value = match n {
        0 => ExactRational::one(),
        1 => &r * &x / p(1),
        2 => rising(2) * x.pow(2) / p(1).pow(2) - int(2) * &r * &x / p(2),
        3 => {
            rising(3) * x.pow(3) / p(1).pow(3) - int(6) * rising(2) * x.pow(2) / (p(1) * p(2))
                + int(6) * &r * &x / p(3)
        }
        4 => {
            rising(4) * x.pow(4) / p(1).pow(4) - int(12) * rising(3) * x.pow(3) / (p(1).pow(2) * p(2))
                + int(24) * rising(2) * x.pow(2) / (p(1) * p(3))
                + int(12) * rising(2) * x.pow(2) / p(2).pow(2)
                - int(24) * &r * &x / p(4)
        }
        _ => return None,
    };
    Some(value)
}

/// The published forms of `D_r(1)` through `D_r(4)`, transcribed as printed.
pub fn weight_display(big_n: u32, r: u32, e: usize) -> Option<ExactRational> {
    let x = ExactRational::from(big_n);
    let rq = ExactRational::from(r);
    let p = |k: i64| &x + ExactRational::from(k);
    let choose = |k: usize| ExactRational::from(binomial(r as usize, k));
    let value = match e {
        1 => &rq * &x / p(1),
        2 => {
            &rq * &x / p(2)
                + &rq * (&rq - ExactRational::one()) * x.pow(2) / (ExactRational::from(2) * p(1).pow(2))
        }
        3 => {
            &rq * &x / p(3)
                + &rq * (&rq - ExactRational::one()) * x.pow(2) / (p(1) * p(2))
                + choose(3) * x.pow(3) / p(1).pow(3)
        }
        4 => {
            &rq * &x / p(4)
                + &rq * (&rq - ExactRational::one()) * x.pow(2) / (p(1) * p(3))
                + choose(2) * x.pow(2) / p(1).pow(2)
                + &rq * ExactRational::from(binomial(r as usize - 1, 2)) * x.pow(3) / (p(1).pow(2) * p(2))
                + choose(4) * x.pow(4) / p(1).pow(4)
        }
        _ => return None,
    };
    Some(value)
}

/// For each printed `D_r(e)`, `e = 1..=4`, whether it equals the
/// definitional weight.
pub fn weight_display_matches(big_n: u32, r: u32) -> Vec<(usize, bool)> {
    let d = weight_d(big_n, r, 4).values;
    (1..=4)
        .map(|e| (e, weight_display(big_n, r, e).as_ref() == Some(&d[e])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cauchy::c_via_recurrence;
    use crate::rational::q;

    #[test]
    fn weights_at_r1_are_ratios() {
        let w = weight_d(3, 1, 6);
        for e in 0..=6 {
            assert_eq!(w.values[e], ratio(3, e));
        }
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_d(1, 2, 2).values[2], q(11, 12));
        for r in 1..=5 {
            let w = weight_d(2, r, 3);
            assert_eq!(w.values[0], q(1, 1));
            assert_eq!(w.values[1], ExactRational::from(r) * ratio(2, 1));
        }
    }

    #[test]
    fn weights_match_enumeration() {
        for big_n in 1..=3 {
            for r in 1..=4 {
                let w = weight_d(big_n, r, 8);
                for e in 0..=8 {
                    assert_eq!(
                        w.values[e],
                        weight_d_brute_force(big_n, r, e),
                        "N={big_n} r={r} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        for r in 1..=4 {
            assert_eq!(
                chor_via_recurrence(3, r, 1).values[1],
                ExactRational::from(r) * ratio(3, 1)
            );
        }
        assert_eq!(chor_via_recurrence(1, 2, 2).values[2], q(1, 6));
        assert!(chor_via_recurrence(4, 1, 10).same_values(&c_via_recurrence(4, 10)));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(chor_via_determinant(1, 2, 2).values[2], q(1, 6));
        assert!(chor_via_determinant(2, 1, 8).same_values(&crate::cauchy::c_via_determinant(2, 8)));
    }

    #[test]
    fn explicit_and_trudi_small_cases() {
        let caps = Caps::default();
        let d = weight_d(2, 3, 2).values;
        let two = d[1].pow(2) - &d[2];
        let ex = chor_via_explicit(2, 3, 2, &caps).unwrap();
        let tr = chor_via_trudi(2, 3, 2, &caps).unwrap();
        assert_eq!(ex.values[1], d[1]);
        assert_eq!(tr.values[1], d[1]);
        assert_eq!(ex.values[2], &two * q(2, 1));
        assert_eq!(tr.values[2], two * q(2, 1));
    }

    #[test]
    fn frozen_cross_method_values() {
        let caps = Caps::default();
        assert_eq!(chor_via_explicit(2, 3, 5, &caps).unwrap().values[5], q(8, 189));
        assert_eq!(chor_via_trudi(1, 2, 4, &caps).unwrap().values[4], q(-1, 10));
        assert_eq!(chor_via_convolution(1, 3, 6).values[6], q(16, 21));
        assert_eq!(chor_via_recurrence(2, 3, 5).values[5], q(8, 189));
    }

    #[test]
    fn convolution_edge_cases() {
        assert!(chor_via_convolution(3, 1, 9).same_values(&c_via_series(3, 9)));
        for r in 1..=4 {
            assert_eq!(chor_via_convolution(2, r, 0).values, vec![q(1, 1)]);
        }
    }

    #[test]
    fn series_definition_matches_recurrence() {
        for r in 1..=3 {
            assert!(chor_via_series(2, r, 10).same_values(&chor_via_recurrence(2, r, 10)));
        }
    }

    #[test]
    fn inversion_pair() {
        assert!(d_inversion(2, 2, 10).passed());
        assert!(d_inversion(1, 1, 6).passed());
    }

    #[test]
    fn residuals_vanish() {
        let t = chor_via_recurrence(2, 3, 8);
        assert!(weak_composition_residuals(&t).iter().all(ExactRational::is_zero));
    }

    #[test]
    fn closed_forms_match() {
        for big_n in 1..=4 {
            for r in 1..=5 {
                let t = chor_via_recurrence(big_n, r, 4);
                for n in 0..=4 {
                    assert_eq!(closed_form(big_n, r, n).unwrap(), t.values[n]);
                }
            }
        }
    }

    #[test]
    fn printed_weight_of_order_four_is_off_for_r_above_one() {
        assert_eq!(
            weight_display_matches(1, 1),
            vec![(1, true), (2, true), (3, true), (4, true)]
        );
        assert_eq!(
            weight_display_matches(1, 2),
            vec![(1, true), (2, true), (3, true), (4, false)]
        );
        assert_eq!(weight_display(1, 2, 4).unwrap(), q(9, 10));
        assert_eq!(weight_d(1, 2, 4).values[4], q(137, 180));
    }
}
