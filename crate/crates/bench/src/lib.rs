//! Fixed inputs shared by the benchmarks.

use hgc_core::sample::{random_spec, seeded_rng, DEFAULT_SEED};
use hgc_core::HessenbergSpec;

/// A reproducible random spec of dimension `n`.
pub fn spec(n: usize) -> HessenbergSpec {
    random_spec(&mut seeded_rng(DEFAULT_SEED ^ n as u64), n)
}
