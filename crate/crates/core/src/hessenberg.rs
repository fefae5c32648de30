//! Toeplitz lower-Hessenberg determinants.
//!
//! The matrix of dimension `n` has the constant `a_0` on the superdiagonal,
//! `a_1` on the main diagonal and `a_k` on the `(k-1)`-th subdiagonal:
//!
//! ```text
//! | a_1  a_0              |
//! | a_2  a_1  a_0         |
//! |  :         .    a_0   |
//! | a_n  ...  a_2   a_1   |
//! ```
//!
//! Its transpose (the row-oriented display) has the same determinant, so the
//! one type covers both layouts. Expanding along the last column gives the
//! division-free recurrence
//! `d_k = Σ_{l=1..k} (-1)^(l-1) a_0^(l-1) a_l d_{k-l}` with `d_0 = 1`.

use crate::caps::Caps;
use crate::error::Result;
use crate::rational::ExactRational;
use crate::report::{ParameterPoint, VerificationReport};

pub use crate::combinatorics::{enumerate_partition_multiplicities, PartitionMultiset};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HessenbergSpec {
    superdiagonal: ExactRational,
    band: Vec<ExactRational>,
}

impl HessenbergSpec {
    /// `band[k-1]` is `a_k`; the dimension is `band.len()`.
    pub fn new(superdiagonal: ExactRational, band: Vec<ExactRational>) -> Self {
        HessenbergSpec { superdiagonal, band }
    }

    /// Unit superdiagonal (Brioschi's case).
    pub fn unit(band: Vec<ExactRational>) -> Self {
        Self::new(ExactRational::one(), band)
    }

    pub fn dimension(&self) -> usize {
        self.band.len()
    }

    pub fn superdiagonal(&self) -> &ExactRational {
        &self.superdiagonal
    }

    pub fn band(&self) -> &[ExactRational] {
        &self.band
    }

    /// Leading `n x n` block, which is again Toeplitz Hessenberg.
    pub fn leading(&self, n: usize) -> HessenbergSpec {
        HessenbergSpec {
            superdiagonal: self.superdiagonal.clone(),
            band: self.band[..n.min(self.band.len())].to_vec(),
        }
    }

    /// Entry at 0-indexed `(row, col)` of the implied matrix.
    pub fn entry(&self, row: usize, col: usize) -> ExactRational {
        if col > row + 1 {
            return ExactRational::zero();
        }
        match row + 1 - col {
            0 => self.superdiagonal.clone(),
            k => self.band[k - 1].clone(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<ExactRational>> {
        let n = self.dimension();
        (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Determinants of the leading `k x k` blocks for `k = 0..=n`.
    pub fn leading_minors(&self) -> Vec<ExactRational> {
        let n = self.dimension();
        // (-a_0)^(l-1) for l = 1..=n
        let mut neg_super_pow = Vec::with_capacity(n);
        let neg_super = -&self.superdiagonal;
        let mut p = ExactRational::one();
        for _ in 0..n {
            neg_super_pow.push(p.clone());
            p *= &neg_super;
        }
        let mut d = Vec::with_capacity(n + 1);
        d.push(ExactRational::one());
        for k in 1..=n {
            let mut acc = ExactRational::zero();
            for l in 1..=k {
                if self.band[l - 1].is_zero() || neg_super_pow[l - 1].is_zero() {
                    continue;
                }
                acc += &neg_super_pow[l - 1] * &self.band[l - 1] * &d[k - l];
            }
            d.push(acc);
        }
        d
    }

    pub fn determinant(&self) -> ExactRational {
        self.leading_minors().pop().expect("minors start with d_0")
    }
}

pub fn hessenberg_det(spec: &HessenbergSpec) -> ExactRational {
    spec.determinant()
}

/// The determinant as the signed multinomial sum over partitions of `n`:
/// `Σ C(t_1+..+t_n; t_1..t_n) (-a_0)^(n - Σt) a_1^t_1 ... a_n^t_n`.
pub fn trudi_sum(spec: &HessenbergSpec, caps: &Caps) -> Result<ExactRational> {
    let n = spec.dimension();
    let partitions = enumerate_partition_multiplicities(n, caps)?;
    let neg_super = -spec.superdiagonal();
    let mut total = ExactRational::zero();
    for p in partitions.iter() {
        let parts = p.part_count();
        let mut term = ExactRational::from(p.multinomial()) * neg_super.pow((n - parts) as i32);
        for (k, t) in p.parts() {
            term *= spec.band()[k - 1].pow(t as i32);
        }
        total += term;
    }
    Ok(total)
}

/// Bands `γ_1..γ_n` of the inverse of the unit lower-triangular Toeplitz
/// matrix with bands `α_1..α_n`: `γ_k = -Σ_{j=1..k} α_j γ_{k-j}`, `γ_0 = 1`.
pub fn unit_lower_toeplitz_inverse(alpha: &[ExactRational]) -> Vec<ExactRational> {
    let mut gamma: Vec<ExactRational> = Vec::with_capacity(alpha.len() + 1);
    gamma.push(ExactRational::one());
    for k in 1..=alpha.len() {
        let acc: ExactRational = (1..=k).map(|j| &alpha[j - 1] * &gamma[k - j]).sum();
        gamma.push(-acc);
    }
    gamma.remove(0);
    gamma
}

/// Bands of the product of two unit lower-triangular Toeplitz matrices,
/// `Σ_{j=0..k} α_j γ_{k-j}` for `k = 1..=n` (with `α_0 = γ_0 = 1`).
pub fn unit_lower_toeplitz_product(alpha: &[ExactRational], gamma: &[ExactRational]) -> Vec<ExactRational> {
    let n = alpha.len().min(gamma.len());
    let band = |s: &[ExactRational], k: usize| {
        if k == 0 {
            ExactRational::one()
        } else {
            s[k - 1].clone()
        }
    };
    (1..=n)
        .map(|k| (0..=k).map(|j| band(alpha, j) * band(gamma, k - j)).sum())
        .collect()
}

/// The determinant inversion pair for a sequence `R(1..n_max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionRoundtrip {
    /// `R(1..=n_max)`
    pub rule: Vec<ExactRational>,
    /// `α_n`: determinant with bands `R(1..n)`.
    pub forward: Vec<ExactRational>,
    /// `R̂(n)`: determinant with bands `α_1..α_n`.
    pub recovered: Vec<ExactRational>,
    /// Bands of the inverse of the unit triangular matrix built from `α`.
    pub inverse_bands: Vec<ExactRational>,
}

impl InversionRoundtrip {
    pub fn n_max(&self) -> usize {
        self.rule.len()
    }

    pub fn round_trips(&self) -> bool {
        self.rule == self.recovered
    }

    /// `(-1)^k R(k)`, the value the inverse bands take.
    pub fn signed_rule(&self) -> Vec<ExactRational> {
        self.rule
            .iter()
            .enumerate()
            .map(|(i, r)| ExactRational::sign_power(i + 1) * r)
            .collect()
    }

    /// Records per `n`: the recovered determinant equals `R(n)`, and the
    /// inverse band equals `(-1)^n R(n)`.
    pub fn report(&self, identity: &str, base: ParameterPoint) -> VerificationReport {
        let mut report = VerificationReport::new();
        let signed = self.signed_rule();
        for n in 1..=self.n_max() {
            report.check(
                &format!("{identity}/determinant"),
                base.with_n(n),
                &self.rule[n - 1],
                &self.recovered[n - 1],
            );
            report.check(
                &format!("{identity}/inverse-bands"),
                base.with_n(n),
                &signed[n - 1],
                &self.inverse_bands[n - 1],
            );
        }
        report
    }
}

/// `α_n = det(R(1..n))`, then `R̂(n) = det(α_1..α_n)`, both with unit
/// superdiagonal.
pub fn determinant_inversion_roundtrip(rule: &[ExactRational]) -> InversionRoundtrip {
    let forward = HessenbergSpec::unit(rule.to_vec()).leading_minors()[1..].to_vec();
    let recovered = HessenbergSpec::unit(forward.clone()).leading_minors()[1..].to_vec();
    let inverse_bands = unit_lower_toeplitz_inverse(&forward);
    InversionRoundtrip {
        rule: rule.to_vec(),
        forward,
        recovered,
        inverse_bands,
    }
}
