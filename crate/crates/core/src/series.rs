//! Truncated formal power series over exact rationals.
//!
//! A series carries its truncation order explicitly: coefficients `0..=order`
//! are exact, everything above is unknown. Binary operations produce a result
//! at the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::rational::ExactRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Series whose order is `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<ExactRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least a constant term"
        );
        TruncatedSeries { coeffs }
    }

    /// Pads with zeros or drops trailing coefficients to land on `order`.
    pub fn with_order(mut coeffs: Vec<ExactRational>, order: usize) -> Self {
        coeffs.resize(order + 1, ExactRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::with_order(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::with_order(vec![ExactRational::one()], order)
    }

    /// `1 - Σ_{n≥1} seq[n-1] t^n`, the input side of the Cameron operator.
    fn one_minus(seq: &[ExactRational]) -> Self {
        let mut coeffs = Vec::with_capacity(seq.len() + 1);
        coeffs.push(ExactRational::one());
        coeffs.extend(seq.iter().map(|x| -x));
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`; panics when `k` is beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &ExactRational {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<ExactRational> {
        self.coeffs
    }

    /// Value at `x = 0`.
    pub fn constant_term(&self) -> &ExactRational {
        &self.coeffs[0]
    }

    /// Lowers the truncation order; never raises it.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_unit_series(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(ExactRational::is_zero)
    }

    pub fn scale(&self, factor: &ExactRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// `self^exp` at the same order; `exp = 0` gives the unit series.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse. Requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv_a0 = a0.recip();
        let mut out: Vec<ExactRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_a0.clone());
        for k in 1..self.coeffs.len() {
            let acc: ExactRational = (1..=k).map(|j| &self.coeffs[j] * &out[k - j]).sum();
            out.push(-(acc * &inv_a0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Hasse–Teichmüller derivative: `x^m ↦ C(m, n) x^(m-n)`. The result has
    /// order `order - n`.
    pub fn ht_derivative(&self, n: usize) -> Result<Self> {
        let order = self.order();
        if n > order {
            return Err(Error::OrderExceeded { requested: n, order });
        }
        let coeffs = (n..=order)
            .map(|m| &self.coeffs[m] * ExactRational::from(binomial(m, n)))
            .collect();
        Ok(TruncatedSeries { coeffs })
    }
}

/// Cauchy product truncated to the smaller order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let order = a.order().min(b.order());
    let coeffs = (0..=order)
        .map(|k| (0..=k).map(|j| &a.coeffs[j] * &b.coeffs[k - j]).sum())
        .collect();
    TruncatedSeries { coeffs }
}

pub fn series_reciprocal(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.reciprocal()
}

pub fn ht_derivative(a: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    a.ht_derivative(n)
}

/// `log(1 + x) = Σ_{k≥1} (-1)^(k-1) x^k / k`, truncated at `order`.
pub fn log1p_series(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|k| {
            if k == 0 {
                ExactRational::zero()
            } else {
                ExactRational::sign_power(k - 1) * ExactRational::new(1, k as i64)
            }
        })
        .collect();
    TruncatedSeries { coeffs }
}

/// Cameron's operator: given `x_1..x_m`, returns `z_1..z_m` with
/// `1 + Σ z_n t^n = (1 - Σ x_n t^n)^(-1)` through order `m`.
pub fn cameron_transform(x: &[ExactRational]) -> Vec<ExactRational> {
    let inverse = TruncatedSeries::one_minus(x)
        .reciprocal()
        .expect("constant term is one");
    inverse.coeffs[1..].to_vec()
}

/// Inverse of [`cameron_transform`]: recovers `x` from `z`.
pub fn cameron_inverse(z: &[ExactRational]) -> Vec<ExactRational> {
    let mut coeffs = Vec::with_capacity(z.len() + 1);
    coeffs.push(ExactRational::one());
    coeffs.extend(z.iter().cloned());
    let inverse = TruncatedSeries { coeffs }
        .reciprocal()
        .expect("constant term is one");
    inverse.coeffs[1..].iter().map(|c| -c).collect()
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        series_mul(self, rhs)
    }
}

impl Mul for TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: TruncatedSeries) -> TruncatedSeries {
        series_mul(&self, &rhs)
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*x")?,
                _ => write!(f, "{mag}*x^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn s(c: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(c.iter().map(|&(p, d)| q(p, d)).collect())
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = s(&[(1, 1), (1, 1), (0, 1)]);
        let b = s(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(&a * &b, s(&[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn mul_by_unit_is_identity() {
        let a = s(&[(3, 7), (-2, 5), (1, 9)]);
        assert_eq!(&a * &TruncatedSeries::one(2), a);
    }

    #[test]
    fn mul_direct_expansion() {
        let a = s(&[(1, 1), (1, 2), (0, 1)]);
        let b = s(&[(1, 1), (1, 3), (0, 1)]);
        assert_eq!(&a * &b, s(&[(1, 1), (5, 6), (1, 6)]));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = s(&[(1, 1), (1, 1), (1, 1), (1, 1)]);
        let b = s(&[(1, 1), (1, 1)]);
        let p = &a * &b;
        assert_eq!(p.order(), 1);
        assert_eq!(p, s(&[(1, 1), (2, 1)]));
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn reciprocal_of_one_minus_x_is_geometric() {
        let a = s(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        assert_eq!(a.reciprocal().unwrap(), s(&[(1, 1), (1, 1), (1, 1), (1, 1)]));
        assert_eq!(
            TruncatedSeries::one(0).reciprocal().unwrap(),
            TruncatedSeries::one(0)
        );
    }

    #[test]
    fn reciprocal_of_log_ratio_gives_second_kind_bernoulli() {
        // 2F1(1,1;2;-x) = 1 - x/2 + x^2/3 - ...
        let a = s(&[(1, 1), (-1, 2), (1, 3)]);
        assert_eq!(a.reciprocal().unwrap(), s(&[(1, 1), (1, 2), (-1, 12)]));
    }

    #[test]
    fn reciprocal_rejects_zero_constant() {
        assert_eq!(s(&[(0, 1), (1, 1)]).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn log1p_coefficients() {
        assert_eq!(log1p_series(3), s(&[(0, 1), (1, 1), (-1, 2), (1, 3)]));
        assert!(log1p_series(0).coeff(0).is_zero());
        assert_eq!(log1p_series(5).coeff(4), &q(-1, 4));
    }

    #[test]
    fn ht_derivative_examples() {
        let a = s(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(a.ht_derivative(0).unwrap(), a);
        assert_eq!(a.ht_derivative(1).unwrap(), s(&[(2, 1), (6, 1)]));
        let cube = s(&[(0, 1), (0, 1), (0, 1), (1, 1)]);
        assert_eq!(cube.ht_derivative(2).unwrap(), s(&[(0, 1), (3, 1)]));
        assert_eq!(
            a.ht_derivative(3),
            Err(Error::OrderExceeded {
                requested: 3,
                order: 2
            })
        );
    }

    #[test]
    fn cameron_examples() {
        let zeros = vec![ExactRational::zero(); 4];
        assert_eq!(cameron_transform(&zeros), zeros);
        let x = vec![q(1, 1), q(0, 1), q(0, 1)];
        assert_eq!(cameron_transform(&x), vec![q(1, 1), q(1, 1), q(1, 1)]);
        // x_n = (-1)^(n-1)/(n+1) at N = 1
        let x = vec![q(1, 2), q(-1, 3), q(1, 4)];
        let z = cameron_transform(&x);
        assert_eq!(z, vec![q(1, 2), q(-1, 12), q(1, 24)]);
        assert_eq!(cameron_inverse(&z), x);
    }

    #[test]
    fn display_is_readable() {
        let a = s(&[(1, 1), (0, 1), (-1, 12)]);
        assert_eq!(a.to_string(), "1 - 1/12*x^2 + O(x^3)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(x^2)");
    }
}
