//! Exact computation of hypergeometric Cauchy numbers `c_{N,n}` and their
//! higher-order counterparts `c^{(r)}_{N,n}`, by several independent
//! algorithms, plus machine checks of the determinant, inversion,
//! convolution and cross-order identities they satisfy.
//!
//! All arithmetic is over [`ExactRational`]; there are no floating-point
//! code paths.
//!
//! ```
//! use hgc_core::{c_via_series, c_via_determinant, q};
//!
//! let table = c_via_series(1, 3);
//! assert_eq!(table.values, vec![q(1, 1), q(1, 2), q(-1, 6), q(1, 4)]);
//! assert!(table.same_values(&c_via_determinant(1, 3)));
//! ```

pub mod caps;
pub mod cauchy;
pub mod combinatorics;
pub mod errata;
pub mod error;
pub mod hessenberg;
pub mod higher;
pub mod ht_rules;
pub mod rational;
pub mod relations;
pub mod report;
pub mod sample;
pub mod series;
pub mod verify;

pub use caps::Caps;
pub use cauchy::{
    c_via_compositions, c_via_determinant, c_via_recurrence, c_via_series, c_via_trudi,
    classical_bernoulli_det, classical_euler_det, hgc_generating_series, ratio, ratio_inversion,
    recurrence_residuals, CauchyTable, Method,
};
pub use combinatorics::{binomial, factorial, StrictCompositions, WeakCompositions};
pub use error::{CapKind, Error, ParseRationalError, Result};
pub use hessenberg::{
    determinant_inversion_roundtrip, enumerate_partition_multiplicities, hessenberg_det, trudi_sum,
    unit_lower_toeplitz_inverse, unit_lower_toeplitz_product, HessenbergSpec, InversionRoundtrip,
    PartitionMultiset,
};
pub use higher::{
    chor_via_convolution, chor_via_determinant, chor_via_explicit, chor_via_recurrence, chor_via_series,
    chor_via_trudi, d_inversion, weight_d, WeightTable,
};
pub use rational::{q, ExactRational};
pub use relations::{chain_sum, cross_order_step, enumerate_chains, ChainIndex};
pub use report::{Detail, ParameterPoint, Status, VerificationRecord, VerificationReport};
pub use series::{
    cameron_inverse, cameron_transform, ht_derivative, log1p_series, series_mul, series_reciprocal,
    TruncatedSeries,
};
pub use verify::{Suite, VerifyConfig};

/// Computes `c^{(r)}_{N,0..=n_max}` by the named method.
///
/// At `r = 1` the first-order routines are used; above that, the
/// higher-order ones. The compositions method is first-order only.
pub fn compute(big_n: u32, r: u32, n_max: usize, method: Method, caps: &Caps) -> Result<CauchyTable> {
    if big_n == 0 || r == 0 {
        return Err(Error::InvalidParameter("N and r must be at least 1".into()));
    }
    let table = match (method, r) {
        (Method::Series, 1) => c_via_series(big_n, n_max),
        (Method::Recurrence, 1) => c_via_recurrence(big_n, n_max),
        (Method::Determinant, 1) => c_via_determinant(big_n, n_max),
        (Method::Compositions, 1) => c_via_compositions(big_n, n_max, caps)?,
        (Method::Trudi, 1) => c_via_trudi(big_n, n_max, caps)?,
        (Method::Compositions, _) => {
            return Err(Error::InvalidParameter(
                "the compositions method computes first-order numbers only; use explicit for r > 1".into(),
            ))
        }
        (Method::Series, _) => chor_via_series(big_n, r, n_max),
        (Method::Recurrence, _) => chor_via_recurrence(big_n, r, n_max),
        (Method::Determinant, _) => chor_via_determinant(big_n, r, n_max),
        (Method::Trudi, _) => chor_via_trudi(big_n, r, n_max, caps)?,
        (Method::Explicit, _) => chor_via_explicit(big_n, r, n_max, caps)?,
        (Method::Convolution, _) => chor_via_convolution(big_n, r, n_max),
    };
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compute_dispatch() {
        let caps = Caps::default();
        for method in Method::ALL {
            let t = compute(2, 1, 6, method, &caps).unwrap();
            assert_eq!(t.method, method);
            assert_eq!(t.values, c_via_series(2, 6).values);
        }
        for method in Method::ALL.into_iter().filter(|m| *m != Method::Compositions) {
            let t = compute(2, 3, 6, method, &caps).unwrap();
            assert_eq!(t.values, chor_via_recurrence(2, 3, 6).values, "{method}");
        }
        assert!(compute(2, 2, 4, Method::Compositions, &caps).is_err());
        assert!(compute(0, 1, 4, Method::Series, &caps).is_err());
    }
}
