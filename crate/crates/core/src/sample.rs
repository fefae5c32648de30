//! Reproducible random rationals, series and Hessenberg specs for the
//! identity suites. Numerators lie in `[-50, 50]`, denominators in `[1, 50]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hessenberg::HessenbergSpec;
use crate::rational::ExactRational;
use crate::series::TruncatedSeries;

pub const DEFAULT_SEED: u64 = 0x4847_435f_5345_4544;
pub const BOUND: i64 = 50;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> ExactRational {
    ExactRational::new(rng.random_range(-BOUND..=BOUND), rng.random_range(1..=BOUND))
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> ExactRational {
    loop {
        let x = random_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_series<R: Rng>(rng: &mut R, order: usize, nonzero_constant: bool) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|k| {
            if k == 0 && nonzero_constant {
                random_nonzero_rational(rng)
            } else {
                random_rational(rng)
            }
        })
        .collect();
    TruncatedSeries::new(coeffs)
}

pub fn random_spec<R: Rng>(rng: &mut R, n: usize) -> HessenbergSpec {
    let superdiagonal = random_rational(rng);
    let band = (0..n).map(|_| random_rational(rng)).collect();
    HessenbergSpec::new(superdiagonal, band)
}
