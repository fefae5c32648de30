//! Hypergeometric Cauchy numbers `c_{N,n}`.
//!
//! They are `n!` times the coefficients of `1 / 2F1(1, N; N+1; -x)`, where
//! `2F1(1, N; N+1; -x) = Σ_j (-1)^j N/(N+j) x^j`. At `N = 1` they are the
//! classical Cauchy numbers, and `c_n / n!` are the Bernoulli numbers of the
//! second kind.
//!
//! Each method below computes the same table by an independent route; the
//! series reciprocal is the reference.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::combinatorics::{composition_multiplicity_counts, factorial};
use crate::error::{CapKind, Error, Result};
use crate::hessenberg::{trudi_sum, HessenbergSpec};
use crate::rational::ExactRational;
use crate::report::{ParameterPoint, VerificationReport};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Series,
    Recurrence,
    Determinant,
    Compositions,
    Trudi,
    Explicit,
    Convolution,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Series,
        Method::Recurrence,
        Method::Determinant,
        Method::Compositions,
        Method::Trudi,
        Method::Explicit,
        Method::Convolution,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Recurrence => "recurrence",
            Method::Determinant => "determinant",
            Method::Compositions => "compositions",
            Method::Trudi => "trudi",
            Method::Explicit => "explicit",
            Method::Convolution => "convolution",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown method {s:?}")))
    }
}

/// `c^{(r)}_{N,0..=n_max}` together with how it was computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CauchyTable {
    #[serde(rename = "N")]
    pub big_n: u32,
    pub r: u32,
    pub method: Method,
    pub values: Vec<ExactRational>,
}

impl CauchyTable {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `c_n / n!`, the ordinary generating-function coefficients.
    pub fn normalized(&self) -> Vec<ExactRational> {
        self.values
            .iter()
            .enumerate()
            .map(|(n, c)| c / factorial_q(n))
            .collect()
    }

    /// Entry-wise equality of the values, ignoring the method tag.
    pub fn same_values(&self, other: &CauchyTable) -> bool {
        self.values == other.values
    }
}

pub(crate) fn factorial_q(n: usize) -> ExactRational {
    ExactRational::from(factorial(n))
}

pub(crate) fn assert_positive(name: &str, value: u32) {
    assert!(value >= 1, "{name} must be at least 1, got {value}");
}

/// `N / (N + k)`
pub fn ratio(big_n: u32, k: usize) -> ExactRational {
    ExactRational::new(big_n, big_n as u64 + k as u64)
}

/// `2F1(1, N; N+1; -x) = Σ_j (-1)^j N/(N+j) x^j` through `x^order`.
pub fn hgc_generating_series(big_n: u32, order: usize) -> TruncatedSeries {
    assert_positive("N", big_n);
    let coeffs = (0..=order)
        .map(|j| ExactRational::sign_power(j) * ratio(big_n, j))
        .collect();
    TruncatedSeries::new(coeffs)
}

/// Reference method: `n!` times the coefficients of the reciprocal series.
pub fn c_via_series(big_n: u32, n_max: usize) -> CauchyTable {
    let b = hgc_generating_series(big_n, n_max)
        .reciprocal()
        .expect("constant term is one");
    CauchyTable {
        big_n,
        r: 1,
        method: Method::Series,
        values: b
            .coefficients()
            .iter()
            .enumerate()
            .map(|(n, b)| b * factorial_q(n))
            .collect(),
    }
}

/// Bottom-up from `c_{N,0} = 1` via
/// `c_{N,n} = Σ_{i<n} (-1)^(n-i-1) (n!/i!) N/(N+n-i) c_{N,i}`.
pub fn c_via_recurrence(big_n: u32, n_max: usize) -> CauchyTable {
    assert_positive("N", big_n);
    let mut values: Vec<ExactRational> = Vec::with_capacity(n_max + 1);
    values.push(ExactRational::one());
    for n in 1..=n_max {
        let mut acc = ExactRational::zero();
        // n!/i! built downward from i = n-1
        let mut falling = ExactRational::one();
        for i in (0..n).rev() {
            falling *= ExactRational::from(i + 1);
            acc += ExactRational::sign_power(n - i - 1) * &falling * ratio(big_n, n - i) * &values[i];
        }
        values.push(acc);
    }
    CauchyTable {
        big_n,
        r: 1,
        method: Method::Recurrence,
        values,
    }
}

/// The unit-superdiagonal Toeplitz Hessenberg spec with bands `N/(N+k)`.
pub fn hgc_spec(big_n: u32, n: usize) -> HessenbergSpec {
    HessenbergSpec::unit((1..=n).map(|k| ratio(big_n, k)).collect())
}

/// `c_{N,n} = n! det(bands N/(N+k))`.
pub fn c_via_determinant(big_n: u32, n_max: usize) -> CauchyTable {
    assert_positive("N", big_n);
    let minors = hgc_spec(big_n, n_max).leading_minors();
    CauchyTable {
        big_n,
        r: 1,
        method: Method::Determinant,
        values: minors
            .into_iter()
            .enumerate()
            .map(|(n, d)| d * factorial_q(n))
            .collect(),
    }
}

/// `c_{N,n} = (-1)^n n! Σ_r (-N)^r Σ_{i_1+..+i_r=n, i_j≥1} 1/((N+i_1)..(N+i_r))`
/// by exhaustive enumeration of the strict compositions of each `n`.
pub fn c_via_compositions(big_n: u32, n_max: usize, caps: &Caps) -> Result<CauchyTable> {
    assert_positive("N", big_n);
    caps.check(CapKind::Compositions, n_max)?;
    let neg_n = -ExactRational::from(big_n);
    let mut values = vec![ExactRational::one()];
    for n in 1..=n_max {
        let mut sum = ExactRational::zero();
        for (p, count) in composition_multiplicity_counts(n, caps)?.iter() {
            let mut term = ExactRational::from(*count) * neg_n.pow(p.part_count() as i32);
            for (part, t) in p.parts() {
                term /= ExactRational::from(big_n as u64 + part as u64).pow(t as i32);
            }
            sum += term;
        }
        values.push(ExactRational::sign_power(n) * factorial_q(n) * sum);
    }
    Ok(CauchyTable {
        big_n,
        r: 1,
        method: Method::Compositions,
        values,
    })
}

/// `n!` times the partition (Trudi) expansion of the determinant.
pub fn c_via_trudi(big_n: u32, n_max: usize, caps: &Caps) -> Result<CauchyTable> {
    assert_positive("N", big_n);
    caps.check(CapKind::Partitions, n_max)?;
    let spec = hgc_spec(big_n, n_max);
    let values = (0..=n_max)
        .map(|n| Ok(trudi_sum(&spec.leading(n), caps)? * factorial_q(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CauchyTable {
        big_n,
        r: 1,
        method: Method::Trudi,
        values,
    })
}

/// Residuals `Σ_{i=0..n} (-1)^i c_i / ((N+n-i) i!)` for `n = 1..=n_max`;
/// all zero for a correct table.
pub fn recurrence_residuals(table: &CauchyTable) -> Vec<ExactRational> {
    let big_n = table.big_n;
    (1..=table.n_max())
        .map(|n| {
            (0..=n)
                .map(|i| {
                    ExactRational::sign_power(i) * &table.values[i]
                        / (ExactRational::from(big_n as u64 + (n - i) as u64) * factorial_q(i))
                })
                .sum()
        })
        .collect()
}

/// Checks that the determinant with bands `c_{N,k}/k!` returns `N/(N+n)`.
pub fn ratio_inversion(big_n: u32, n_max: usize) -> VerificationReport {
    let b = c_via_series(big_n, n_max).normalized();
    let minors = HessenbergSpec::unit(b[1..].to_vec()).leading_minors();
    let mut report = VerificationReport::new();
    for (n, minor) in minors.iter().enumerate().skip(1) {
        report.check(
            "ratio-inversion",
            ParameterPoint::new(big_n, 1, n),
            &ratio(big_n, n),
            minor,
        );
    }
    report
}

/// Classical Bernoulli numbers `B_0..=B_{n_max}` from
/// `B_n = (-1)^n n! det(bands 1/(k+1)!)`.
pub fn classical_bernoulli_det(n_max: usize) -> Vec<ExactRational> {
    let band = (1..=n_max).map(|k| factorial_q(k + 1).recip()).collect();
    HessenbergSpec::unit(band)
        .leading_minors()
        .into_iter()
        .enumerate()
        .map(|(n, d)| ExactRational::sign_power(n) * factorial_q(n) * d)
        .collect()
}

/// Classical Euler numbers `E_0, E_2, ..., E_{2 n_max}` from
/// `E_{2n} = (-1)^n (2n)! det(bands 1/(2k)!)`.
pub fn classical_euler_det(n_max: usize) -> Vec<ExactRational> {
    let band = (1..=n_max).map(|k| factorial_q(2 * k).recip()).collect();
    HessenbergSpec::unit(band)
        .leading_minors()
        .into_iter()
        .enumerate()
        .map(|(n, d)| ExactRational::sign_power(n) * factorial_q(2 * n) * d)
        .collect()
}

/// The published rational-function forms of `c_{N,0}` through `c_{N,5}`.
pub fn closed_form(big_n: u32, n: usize) -> Option<ExactRational> {
    let x = ExactRational::from(big_n);
    let p = |k: i64| &x + ExactRational::from(k);
    let poly = |coeffs: &[i64]| {
        coeffs
            .iter()
            .fold(ExactRational::zero(), |acc, &c| acc * &x + ExactRational::from(c))
    };
    let value = match n {
        0 => ExactRational::one(),
        1 => &x / p(1),
        2 => -(ExactRational::from(2) * &x) / (p(1).pow(2) * p(2)),
        3 => ExactRational::from(6) * &x * poly(&[1, 1, 2]) / (p(1).pow(3) * p(2) * p(3)),
        4 => {
            -(ExactRational::from(24) * &x * poly(&[1, 5, 14, 24, 20, 12]))
                / (p(1).pow(4) * p(2).pow(2) * p(3) * p(4))
        }
        5 => {
            ExactRational::from(120) * &x * poly(&[1, 8, 35, 96, 160, 184, 116, 48])
                / (p(1).pow(5) * p(2).pow(2) * p(3) * p(4) * p(5))
        }
        _ => return None,
    };
    Some(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn qs(v: &[(i64, i64)]) -> Vec<ExactRational> {
        v.iter().map(|&(a, b)| q(a, b)).collect()
    }

    #[test]
    fn generating_series_coefficients() {
        assert_eq!(
            hgc_generating_series(1, 2).coefficients(),
            qs(&[(1, 1), (-1, 2), (1, 3)])
        );
        assert_eq!(hgc_generating_series(3, 2).coeff(2), &q(3, 5));
        assert_eq!(hgc_generating_series(7, 0).coeff(0), &q(1, 1));
    }

    #[test]
    fn series_method_examples() {
        assert_eq!(c_via_series(1, 3).values, qs(&[(1, 1), (1, 2), (-1, 6), (1, 4)]));
        assert_eq!(c_via_series(2, 2).values[2], q(-1, 9));
        assert_eq!(c_via_series(5, 0).values, qs(&[(1, 1)]));
    }

    #[test]
    fn recurrence_method_examples() {
        assert_eq!(c_via_recurrence(1, 1).values[1], q(1, 2));
        assert_eq!(c_via_recurrence(2, 3).values[3], q(8, 45));
        assert_eq!(c_via_recurrence(4, 0).values, qs(&[(1, 1)]));
    }

    #[test]
    fn determinant_method_examples() {
        assert_eq!(c_via_determinant(1, 2).values[2], q(-1, 6));
        assert_eq!(c_via_determinant(3, 0).values, qs(&[(1, 1)]));
        assert_eq!(c_via_determinant(3, 1).values[1], q(3, 4));
    }

    #[test]
    fn composition_method_examples() {
        let caps = Caps::default();
        assert_eq!(c_via_compositions(1, 1, &caps).unwrap().values[1], q(1, 2));
        assert_eq!(c_via_compositions(1, 3, &caps).unwrap().values[3], q(1, 4));
        assert_eq!(c_via_compositions(2, 2, &caps).unwrap().values[2], q(-1, 9));
    }

    #[test]
    fn composition_cap() {
        let err = c_via_compositions(1, 23, &Caps::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::CapExceeded {
                what: CapKind::Compositions,
                requested: 23,
                cap: 22
            }
        ));
    }

    #[test]
    fn trudi_method_examples() {
        let caps = Caps::default();
        assert_eq!(c_via_trudi(1, 2, &caps).unwrap().values[2], q(-1, 6));
        for big_n in 1..=4 {
            assert_eq!(c_via_trudi(big_n, 1, &caps).unwrap().values[1], ratio(big_n, 1));
        }
        assert_eq!(c_via_trudi(1, 4, &caps).unwrap().values[4], q(-19, 30));
    }

    #[test]
    fn second_kind_bernoulli_values() {
        assert_eq!(
            c_via_recurrence(1, 5).normalized(),
            qs(&[(1, 1), (1, 2), (-1, 12), (1, 24), (-19, 720), (3, 160)])
        );
    }

    #[test]
    fn residuals_vanish() {
        let table = c_via_recurrence(3, 8);
        assert!(recurrence_residuals(&table).iter().all(ExactRational::is_zero));
        let mut broken = table.clone();
        broken.values[4] += q(1, 1);
        assert!(!recurrence_residuals(&broken)[3].is_zero());
    }

    #[test]
    fn ratio_inversion_examples() {
        assert!(ratio_inversion(1, 6).passed());
        let report = ratio_inversion(5, 10);
        assert!(report.passed());
        assert_eq!(report.records.len(), 10);
    }

    #[test]
    fn bernoulli_and_euler_determinants() {
        let b = classical_bernoulli_det(4);
        assert_eq!(b, qs(&[(1, 1), (-1, 2), (1, 6), (0, 1), (-1, 30)]));
        let e = classical_euler_det(2);
        assert_eq!(e, qs(&[(1, 1), (-1, 1), (5, 1)]));
    }

    #[test]
    fn closed_forms_match_reference() {
        for big_n in 1..=6 {
            let table = c_via_series(big_n, 5);
            for n in 0..=5 {
                assert_eq!(closed_form(big_n, n).unwrap(), table.values[n], "N={big_n} n={n}");
            }
        }
        assert!(closed_form(1, 6).is_none());
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("lu".parse::<Method>().is_err());
    }
}
