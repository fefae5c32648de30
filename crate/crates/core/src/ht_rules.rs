//! Both sides of the Hasse–Teichmüller product and quotient rules.
//!
//! Each function returns `(lhs, rhs)`, the left side computed directly from
//! the definition and the right side from the rule's expansion.

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::rational::ExactRational;
use crate::series::TruncatedSeries;

/// `H^(n)(f_1 .. f_k)` against `Σ_{i_1+..+i_k=n, i_j≥0} H^(i_1)(f_1) .. H^(i_k)(f_k)`.
///
/// Both sides are series at order `min(order(f_j)) - n`.
pub fn product_rule(factors: &[TruncatedSeries], n: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let order = factors
        .iter()
        .map(TruncatedSeries::order)
        .min()
        .ok_or_else(|| Error::InvalidParameter("product rule needs at least one factor".into()))?;
    if n > order {
        return Err(Error::OrderExceeded { requested: n, order });
    }
    let out_order = order - n;
    let product = factors[1..]
        .iter()
        .fold(factors[0].truncate(order), |acc, f| &acc * f);
    let lhs = product.ht_derivative(n)?;

    // partial[m] = Σ over derivative orders summing to m of the products so far
    let mut partial: Vec<TruncatedSeries> = (0..=n)
        .map(|m| {
            if m == 0 {
                TruncatedSeries::one(out_order)
            } else {
                TruncatedSeries::zero(out_order)
            }
        })
        .collect();
    for f in factors {
        let derivs = (0..=n)
            .map(|i| Ok(f.ht_derivative(i)?.truncate(out_order)))
            .collect::<Result<Vec<_>>>()?;
        partial = (0..=n)
            .map(|m| {
                (0..=m).fold(TruncatedSeries::zero(out_order), |acc, i| {
                    &acc + &(&partial[m - i] * &derivs[i])
                })
            })
            .collect();
    }
    Ok((lhs, partial.swap_remove(n)))
}

fn check_quotient(f: &TruncatedSeries, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "the quotient rules start at n = 1".into(),
        ));
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if n > f.order() {
        return Err(Error::OrderExceeded {
            requested: n,
            order: f.order(),
        });
    }
    Ok(())
}

/// `H^(n)(1/f)|_0` against
/// `Σ_{k=1..n} (-1)^k / f_0^(k+1) Σ_{i_1+..+i_k=n, i_j≥1} H^(i_1)(f)|_0 .. H^(i_k)(f)|_0`
/// for `n ≥ 1`.
pub fn quotient_rule_strict(f: &TruncatedSeries, n: usize) -> Result<(ExactRational, ExactRational)> {
    check_quotient(f, n)?;
    let f = f.truncate(n);
    let lhs = f.reciprocal()?.ht_derivative(n)?.constant_term().clone();
    // H^(i)(f)|_0 = f_i, so the inner sum is [x^n] (f - f_0)^k
    let tail = &f - &TruncatedSeries::with_order(vec![f.constant_term().clone()], n);
    let f0 = f.constant_term();
    let mut rhs = ExactRational::zero();
    let mut power = TruncatedSeries::one(n);
    for k in 1..=n {
        power = &power * &tail;
        rhs += ExactRational::sign_power(k) / f0.pow(k as i32 + 1) * power.coeff(n);
    }
    Ok((lhs, rhs))
}

/// `H^(n)(1/f)|_0` against
/// `Σ_{k=1..n} C(n+1, k+1) (-1)^k / f_0^(k+1) Σ_{i_1+..+i_k=n, i_j≥0} H^(i_1)(f)|_0 .. H^(i_k)(f)|_0`
/// for `n ≥ 1`.
pub fn quotient_rule_weak(f: &TruncatedSeries, n: usize) -> Result<(ExactRational, ExactRational)> {
    check_quotient(f, n)?;
    let f = f.truncate(n);
    let lhs = f.reciprocal()?.ht_derivative(n)?.constant_term().clone();
    let f0 = f.constant_term();
    let mut rhs = ExactRational::zero();
    let mut power = TruncatedSeries::one(n);
    for k in 1..=n {
        power = &power * &f;
        rhs += ExactRational::from(binomial(n + 1, k + 1)) * ExactRational::sign_power(k)
            / f0.pow(k as i32 + 1)
            * power.coeff(n);
    }
    Ok((lhs, rhs))
}
