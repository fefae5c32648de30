//! Identity suites over a parameter grid.
//!
//! Each suite returns records in a fixed order regardless of how many
//! threads evaluate the grid.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::cauchy::{
    c_via_compositions, c_via_determinant, c_via_recurrence, c_via_series, c_via_trudi,
    classical_bernoulli_det, classical_euler_det, factorial_q, hgc_generating_series, ratio, ratio_inversion,
    recurrence_residuals, CauchyTable,
};
use crate::errata;
use crate::error::{Error, Result};
use crate::hessenberg::{determinant_inversion_roundtrip, trudi_sum, unit_lower_toeplitz_product};
use crate::higher::{
    chor_via_convolution, chor_via_determinant, chor_via_explicit, chor_via_recurrence, chor_via_series,
    chor_via_trudi, d_inversion, weak_composition_residuals, weight_d, weight_d_brute_force, weight_display,
};
use crate::ht_rules::{product_rule, quotient_rule_strict, quotient_rule_weak};
use crate::rational::ExactRational;
use crate::relations::{chain_examples, chain_sum, cross_order_step};
use crate::report::{ParameterPoint, VerificationReport};
use crate::sample::{random_series, random_spec, seeded_rng, DEFAULT_SEED};
use crate::series::{cameron_inverse, cameron_transform, log1p_series, TruncatedSeries};
use crate::{cauchy, higher};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Core,
    Higher,
    Relations,
    Inversion,
    SeriesRules,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::All,
        Suite::Core,
        Suite::Higher,
        Suite::Relations,
        Suite::Inversion,
        Suite::SeriesRules,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Core => "core",
            Suite::Higher => "higher",
            Suite::Relations => "relations",
            Suite::Inversion => "inversion",
            Suite::SeriesRules => "series-rules",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub big_n_max: u32,
    pub r_max: u32,
    pub n_max: usize,
    pub caps: Caps,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            big_n_max: 4,
            r_max: 3,
            n_max: 12,
            caps: Caps::default(),
            seed: DEFAULT_SEED,
        }
    }
}

/// Random instances drawn by each randomized check in the series-rules suite.
pub const RANDOM_INSTANCES: usize = 200;
/// Random Hessenberg specs in the inversion suite.
pub const RANDOM_SPECS: usize = 100;

pub fn run(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    if config.big_n_max == 0 || config.r_max == 0 {
        return Err(Error::InvalidParameter(
            "N-max and r-max must be at least 1".into(),
        ));
    }
    match suite {
        Suite::All => [
            Suite::Core,
            Suite::Higher,
            Suite::Relations,
            Suite::Inversion,
            Suite::SeriesRules,
        ]
        .into_iter()
        .map(|s| run(s, config))
        .collect(),
        Suite::Core => core(config),
        Suite::Higher => higher_suite(config),
        Suite::Relations => relations(config),
        Suite::Inversion => inversion(config),
        Suite::SeriesRules => series_rules(config),
    }
}

/// Maps `f` over `items` in parallel, concatenating reports in input order.
fn par_collect<T, F>(items: Vec<T>, f: F) -> Result<VerificationReport>
where
    T: Send,
    F: Fn(T) -> Result<VerificationReport> + Sync + Send,
{
    let parts = items.into_par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().collect())
}

fn agreement(report: &mut VerificationReport, identity: &str, reference: &CauchyTable, other: &CauchyTable) {
    for (n, (expected, actual)) in reference.values.iter().zip(&other.values).enumerate() {
        report.check(
            identity,
            ParameterPoint::new(reference.big_n, reference.r, n),
            expected,
            actual,
        );
    }
}

fn zero_residuals(
    report: &mut VerificationReport,
    identity: &str,
    table: &CauchyTable,
    residuals: &[ExactRational],
) {
    let zero = ExactRational::zero();
    for (i, res) in residuals.iter().enumerate() {
        report.check(
            identity,
            ParameterPoint::new(table.big_n, table.r, i + 1),
            &zero,
            res,
        );
    }
}

fn signum(x: &ExactRational) -> ExactRational {
    match (x.is_positive(), x.is_negative()) {
        (true, _) => ExactRational::one(),
        (_, true) => -ExactRational::one(),
        _ => ExactRational::zero(),
    }
}

/// `n! [x^n] 1/s` for `n = 0..=order`.
fn egf_reciprocal(s: TruncatedSeries) -> Vec<ExactRational> {
    s.reciprocal()
        .expect("unit constant term")
        .into_coefficients()
        .into_iter()
        .enumerate()
        .map(|(n, c)| c * factorial_q(n))
        .collect()
}

fn core(config: &VerifyConfig) -> Result<VerificationReport> {
    let n_max = config.n_max;
    let caps = config.caps;
    let mut report = par_collect((1..=config.big_n_max).collect(), |big_n| {
        let mut report = VerificationReport::new();
        let reference = c_via_series(big_n, n_max);
        let others = [
            c_via_recurrence(big_n, n_max),
            c_via_determinant(big_n, n_max),
            c_via_compositions(big_n, n_max, &caps)?,
            c_via_trudi(big_n, n_max, &caps)?,
        ];
        for table in &others {
            agreement(
                &mut report,
                &format!("method-agreement/{}", table.method),
                &reference,
                table,
            );
        }
        for table in std::iter::once(&reference).chain(&others) {
            let residuals = recurrence_residuals(table);
            zero_residuals(
                &mut report,
                &format!("recurrence-residual/{}", table.method),
                table,
                &residuals,
            );
        }
        for n in 0..=n_max.min(5) {
            let printed = cauchy::closed_form(big_n, n).expect("closed forms cover n <= 5");
            report.check(
                "closed-form",
                ParameterPoint::new(big_n, 1, n),
                &printed,
                &reference.values[n],
            );
        }
        let minus_one = -ExactRational::one();
        for n in 1..n_max {
            let product = &reference.values[n] * &reference.values[n + 1];
            report.check(
                "sign-alternation",
                ParameterPoint::new(big_n, 1, n),
                &minus_one,
                &signum(&product),
            );
        }
        Ok(report)
    })?;

    // x / log(1 + x) as the reciprocal of log(1 + x) / x
    let shifted = TruncatedSeries::new(log1p_series(n_max + 1).coefficients()[1..].to_vec());
    let second_kind = shifted.reciprocal().expect("unit constant term");
    let classical = c_via_recurrence(1, n_max).normalized();
    for (n, actual) in classical.iter().enumerate() {
        report.check(
            "second-kind-bernoulli",
            ParameterPoint::new(1, 1, n),
            second_kind.coeff(n),
            actual,
        );
    }

    // x / (e^x - 1) as the reciprocal of Σ x^k / (k+1)!
    let exp_quotient = TruncatedSeries::new((0..=n_max).map(|k| factorial_q(k + 1).recip()).collect());
    let bernoulli = egf_reciprocal(exp_quotient);
    for (n, (expected, actual)) in bernoulli.iter().zip(classical_bernoulli_det(n_max)).enumerate() {
        report.check(
            "bernoulli-determinant",
            ParameterPoint::at_n(n),
            expected,
            &actual,
        );
    }

    // 1 / cosh x
    let cosh = TruncatedSeries::new(
        (0..=n_max)
            .map(|k| {
                if k % 2 == 0 {
                    factorial_q(k).recip()
                } else {
                    ExactRational::zero()
                }
            })
            .collect(),
    );
    let euler = egf_reciprocal(cosh);
    for (k, actual) in classical_euler_det(n_max / 2).into_iter().enumerate() {
        report.check(
            "euler-determinant",
            ParameterPoint::at_n(2 * k),
            &euler[2 * k],
            &actual,
        );
    }

    let (printed, actual) = errata::first_order_partition_sums(1, n_max, &caps)?;
    if let Some(n) = errata::first_mismatch(&printed, &actual) {
        report.erratum(
            "partition-sum-as-printed",
            ParameterPoint::new(1, 1, n),
            printed[n - 1].clone(),
            actual[n - 1].clone(),
        );
    }
    Ok(report)
}

fn grid(config: &VerifyConfig, big_n_min: u32) -> Vec<(u32, u32)> {
    (big_n_min..=config.big_n_max)
        .flat_map(|big_n| (1..=config.r_max).map(move |r| (big_n, r)))
        .collect()
}

fn higher_suite(config: &VerifyConfig) -> Result<VerificationReport> {
    let n_max = config.n_max;
    let caps = config.caps;
    let mut report = par_collect(grid(config, 1), |(big_n, r)| {
        let mut report = VerificationReport::new();
        let reference = chor_via_recurrence(big_n, r, n_max);
        let others = [
            chor_via_determinant(big_n, r, n_max),
            chor_via_explicit(big_n, r, n_max, &caps)?,
            chor_via_trudi(big_n, r, n_max, &caps)?,
            chor_via_convolution(big_n, r, n_max),
            chor_via_series(big_n, r, n_max),
        ];
        for table in &others {
            agreement(
                &mut report,
                &format!("higher-agreement/{}", table.method),
                &reference,
                table,
            );
        }
        let residuals = weak_composition_residuals(&reference);
        zero_residuals(&mut report, "weak-composition-residual", &reference, &residuals);

        let weights = weight_d(big_n, r, n_max);
        for (e, w) in weights.values.iter().enumerate() {
            let brute = weight_d_brute_force(big_n, r, e);
            report.check("weight-enumeration", ParameterPoint::new(big_n, r, e), &brute, w);
        }
        for n in 0..=n_max.min(4) {
            let printed = higher::closed_form(big_n, r, n).expect("closed forms cover n <= 4");
            report.check(
                "higher-closed-form",
                ParameterPoint::new(big_n, r, n),
                &printed,
                &reference.values[n],
            );
        }
        for e in 1..=n_max.min(3) {
            let printed = weight_display(big_n, r, e).expect("displays cover e <= 4");
            report.check(
                "weight-display",
                ParameterPoint::new(big_n, r, e),
                &printed,
                &weights.values[e],
            );
        }
        if r >= 2 && n_max >= 2 {
            let c = &c_via_series(big_n, 2).values;
            let cases = errata::convolution_examples(big_n, r, [&c[0], &c[1], &c[2]]);
            for (n, (printed, lemma)) in cases.iter().enumerate() {
                report.check(
                    "convolution-examples",
                    ParameterPoint::new(big_n, r, n),
                    printed,
                    lemma,
                );
                report.check(
                    "convolution-examples",
                    ParameterPoint::new(big_n, r, n),
                    lemma,
                    &reference.values[n],
                );
            }
        }
        Ok(report)
    })?;

    // The printed examples only survive because c_{N,0} = 1; a sequence with
    // a different constant term separates them from the convolution itself.
    if config.r_max >= 2 {
        let c = c_via_series(1, 2).values;
        let scaled: Vec<ExactRational> = c.iter().map(|v| v * ExactRational::from(2)).collect();
        let [(printed, lemma), _, _] =
            errata::convolution_examples(1, 2, [&scaled[0], &scaled[1], &scaled[2]]);
        if printed != lemma {
            report.erratum(
                "convolution-examples-as-printed",
                ParameterPoint::new(1, 2, 0),
                printed,
                lemma,
            );
        }
    }
    Ok(report)
}

fn relations(config: &VerifyConfig) -> Result<VerificationReport> {
    let n_max = config.n_max;
    let caps = config.caps;
    par_collect((2..=config.big_n_max).collect(), |big_n| {
        let mut report = cross_order_step(big_n, n_max);
        report.extend(chain_sum(big_n, n_max, &caps)?);
        report.extend(chain_examples(big_n));
        Ok(report)
    })
}

fn roundtrip_report(identity: &str, base: ParameterPoint, rule: &[ExactRational]) -> VerificationReport {
    let rt = determinant_inversion_roundtrip(rule);
    let mut report = rt.report(identity, base);
    let zero = ExactRational::zero();
    let product = unit_lower_toeplitz_product(&rt.forward, &rt.inverse_bands);
    for (k, band) in product.iter().enumerate() {
        report.check(
            &format!("{identity}/toeplitz-product"),
            base.with_n(k + 1),
            &zero,
            band,
        );
    }
    report
}

/// `R(k) = 1/(k+1)` for `k = 1..=n_max`.
pub fn cauchy_rule(n_max: usize) -> Vec<ExactRational> {
    (1..=n_max).map(|k| ExactRational::new(1, k as i64 + 1)).collect()
}

/// `R(k) = N/(N+k)` for `k = 1..=n_max`.
pub fn hgc_rule(big_n: u32, n_max: usize) -> Vec<ExactRational> {
    (1..=n_max).map(|k| ratio(big_n, k)).collect()
}

/// `R(k) = D_r(k)` for `k = 1..=n_max`.
pub fn weights_rule(big_n: u32, r: u32, n_max: usize) -> Vec<ExactRational> {
    weight_d(big_n, r, n_max).bands(n_max)
}

fn inversion(config: &VerifyConfig) -> Result<VerificationReport> {
    let n_max = config.n_max;
    let mut report = par_collect((1..=config.big_n_max).collect(), |big_n| {
        Ok(ratio_inversion(big_n, n_max))
    })?;
    report.extend(par_collect(grid(config, 1), |(big_n, r)| {
        Ok(d_inversion(big_n, r, n_max))
    })?);

    report.extend(roundtrip_report(
        "roundtrip-cauchy",
        ParameterPoint::new(1, 1, 0),
        &cauchy_rule(n_max),
    ));
    for big_n in 1..=config.big_n_max {
        report.extend(roundtrip_report(
            "roundtrip-hgc",
            ParameterPoint::new(big_n, 1, 0),
            &hgc_rule(big_n, n_max),
        ));
    }
    for (big_n, r) in grid(config, 1) {
        report.extend(roundtrip_report(
            "roundtrip-weights",
            ParameterPoint::new(big_n, r, 0),
            &weights_rule(big_n, r, n_max),
        ));
    }

    let mut rng = seeded_rng(config.seed);
    for i in 0..RANDOM_SPECS {
        let spec = random_spec(&mut rng, i % 10);
        let trudi = trudi_sum(&spec, &config.caps)?;
        report.check(
            "trudi-determinant",
            ParameterPoint::at_n(spec.dimension()),
            &spec.determinant(),
            &trudi,
        );
    }

    let (printed, actual) = errata::inverse_bands_as_printed(&cauchy_rule(n_max));
    if let Some(n) = errata::first_mismatch(&printed, &actual) {
        report.erratum(
            "inverse-bands-as-printed",
            ParameterPoint::new(1, 1, n),
            printed[n - 1].clone(),
            actual[n - 1].clone(),
        );
    }
    Ok(report)
}

/// Highest order of the reciprocal check.
pub const RECIPROCAL_ORDER: usize = 25;
/// Highest order of the Cameron round trip.
pub const CAMERON_ORDER: usize = 20;

fn series_rules(config: &VerifyConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let mut rng = seeded_rng(config.seed);

    for order in 0..=RECIPROCAL_ORDER {
        let a = random_series(&mut rng, order, true);
        let product = &a * &a.reciprocal()?;
        let unit = TruncatedSeries::one(order);
        report.check_all(
            "reciprocal-unit",
            ParameterPoint::at_n(order),
            unit.coefficients().iter().zip(product.coefficients()),
        );
    }

    for _ in 0..RANDOM_INSTANCES {
        let k = rng.random_range(2..=4usize);
        let order = rng.random_range(0..=10usize);
        let factors: Vec<_> = (0..k).map(|_| random_series(&mut rng, order, false)).collect();
        let n = rng.random_range(0..=order);
        let (lhs, rhs) = product_rule(&factors, n)?;
        report.check_all(
            "ht-product-rule",
            ParameterPoint::at_n(n),
            lhs.coefficients().iter().zip(rhs.coefficients()),
        );
    }

    type QuotientRule = fn(&TruncatedSeries, usize) -> Result<(ExactRational, ExactRational)>;
    let rules: [(&str, QuotientRule); 2] = [
        ("ht-quotient-rule/strict", quotient_rule_strict),
        ("ht-quotient-rule/weak", quotient_rule_weak),
    ];
    for (identity, rule) in rules {
        for _ in 0..RANDOM_INSTANCES {
            let order = rng.random_range(1..=8usize);
            let f = random_series(&mut rng, order, true);
            let n = rng.random_range(1..=order);
            let (lhs, rhs) = rule(&f, n)?;
            report.check(identity, ParameterPoint::at_n(n), &lhs, &rhs);
        }
    }

    for order in 0..=CAMERON_ORDER {
        let x: Vec<_> = (0..order)
            .map(|_| crate::sample::random_rational(&mut rng))
            .collect();
        let back = cameron_inverse(&cameron_transform(&x));
        report.check_all(
            "cameron-roundtrip",
            ParameterPoint::at_n(order),
            x.iter().zip(&back),
        );
    }

    let n_max = config.n_max;
    for big_n in 1..=config.big_n_max {
        let x: Vec<_> = (1..=n_max)
            .map(|n| ExactRational::sign_power(n - 1) * ratio(big_n, n))
            .collect();
        let b = c_via_series(big_n, n_max).normalized();
        let z = cameron_transform(&x);
        for n in 1..=n_max {
            report.check(
                "cameron-correspondence",
                ParameterPoint::new(big_n, 1, n),
                &b[n],
                &z[n - 1],
            );
        }

        // (-1)^(N-1) N x^(-N) (log(1+x) - Σ_{k<N} (-1)^(k-1) x^k / k)
        let log = log1p_series(n_max + big_n as usize);
        let scale = ExactRational::sign_power(big_n as usize - 1) * ExactRational::from(big_n);
        let log_form: Vec<_> = log.coefficients()[big_n as usize..]
            .iter()
            .map(|c| c * &scale)
            .collect();
        let direct = hgc_generating_series(big_n, n_max);
        report.check_all(
            "log-form",
            ParameterPoint::new(big_n, 1, n_max),
            direct.coefficients().iter().zip(&log_form),
        );
    }

    let (printed, actual) = errata::cameron_as_printed(1, n_max);
    if let Some(n) = errata::first_mismatch(&printed, &actual) {
        report.erratum(
            "cameron-direction-as-printed",
            ParameterPoint::new(1, 1, n),
            printed[n - 1].clone(),
            actual[n - 1].clone(),
        );
    }
    Ok(report)
}
