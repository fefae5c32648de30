//! Identities linking `c_{N,n}` to `c_{N-1,n}`.

use serde::Serialize;

use crate::caps::Caps;
use crate::cauchy::{assert_positive, c_via_series, factorial_q};
use crate::combinatorics::binomial;
use crate::error::{CapKind, Result};
use crate::rational::ExactRational;
use crate::report::{ParameterPoint, VerificationReport};

/// A strictly decreasing chain `n = i_0 > i_1 > ... > i_m >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ChainIndex {
    chain: Vec<usize>,
}

impl ChainIndex {
    pub fn new(chain: Vec<usize>) -> Option<Self> {
        let descending = chain.windows(2).all(|w| w[0] > w[1]);
        (!chain.is_empty() && descending).then_some(ChainIndex { chain })
    }

    pub fn indices(&self) -> &[usize] {
        &self.chain
    }

    /// Number of steps `m`.
    pub fn len(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `i_m`
    pub fn tail(&self) -> usize {
        *self.chain.last().expect("chains are non-empty")
    }
}

/// All chains from `n`, i.e. one per subset of `{0, ..., n-1}`, in
/// lexicographic order of the index sequence.
pub fn enumerate_chains(n: usize, caps: &Caps) -> Result<Vec<ChainIndex>> {
    caps.check(CapKind::Chains, n)?;
    fn walk(prefix: &mut Vec<usize>, out: &mut Vec<ChainIndex>) {
        out.push(ChainIndex {
            chain: prefix.clone(),
        });
        let last = *prefix.last().expect("non-empty prefix");
        for next in 0..last {
            prefix.push(next);
            walk(prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1usize << n.min(30));
    walk(&mut vec![n], &mut out);
    Ok(out)
}

fn assert_cross_order(big_n: u32) {
    assert_positive("N", big_n);
    assert!(big_n >= 2, "cross-order identities need N >= 2, got {big_n}");
}

/// `c_{N,n} = c_{N-1,n} - N/((n+1)(N-1)) Σ_{m<n} C(n+1, m) c_{N,m} c_{N-1,n-m+1}`
/// for `n = 0..=n_max`.
pub fn cross_order_step(big_n: u32, n_max: usize) -> VerificationReport {
    assert_cross_order(big_n);
    let cur = c_via_series(big_n, n_max).values;
    let prev = c_via_series(big_n - 1, n_max + 1).values;
    let mut report = VerificationReport::new();
    for n in 0..=n_max {
        let sum: ExactRational = (0..n)
            .map(|m| ExactRational::from(binomial(n + 1, m)) * &cur[m] * &prev[n - m + 1])
            .sum();
        let factor = ExactRational::new(big_n, (n as u64 + 1) * (big_n as u64 - 1));
        let rhs = &prev[n] - factor * sum;
        report.check(
            "cross-order-step",
            ParameterPoint::new(big_n, 1, n),
            &cur[n],
            &rhs,
        );
    }
    report
}

/// Right-hand side of the chain expansion
/// `Σ_m (N/(1-N))^m Σ_chains (n!/i_m!) c_{N-1,i_m} Π_k c_{N-1,d_k+1}/(d_k+1)!`,
/// where `d_k = i_{k-1} - i_k`. `prev` must hold `c_{N-1,0..=n+1}`.
pub fn chain_expansion(big_n: u32, n: usize, prev: &[ExactRational], caps: &Caps) -> Result<ExactRational> {
    assert_cross_order(big_n);
    let step = ExactRational::new(big_n as i64, 1 - big_n as i64);
    let normalized: Vec<ExactRational> = prev.iter().enumerate().map(|(j, c)| c / factorial_q(j)).collect();
    let n_fact = factorial_q(n);
    let mut total = ExactRational::zero();
    for chain in enumerate_chains(n, caps)? {
        let idx = chain.indices();
        let tail = chain.tail();
        let mut term = step.pow(chain.len() as i32) * &n_fact / factorial_q(tail) * &prev[tail];
        for w in idx.windows(2) {
            term *= &normalized[w[0] - w[1] + 1];
        }
        total += term;
    }
    Ok(total)
}

/// Checks the chain expansion against the reference table for
/// `n = 0..=n_max`.
pub fn chain_sum(big_n: u32, n_max: usize, caps: &Caps) -> Result<VerificationReport> {
    assert_cross_order(big_n);
    caps.check(CapKind::Chains, n_max)?;
    let cur = c_via_series(big_n, n_max).values;
    let prev = c_via_series(big_n - 1, n_max + 1).values;
    let mut report = VerificationReport::new();
    for (n, expected) in cur.iter().enumerate() {
        let rhs = chain_expansion(big_n, n, &prev, caps)?;
        report.check(
            "descending-chain",
            ParameterPoint::new(big_n, 1, n),
            expected,
            &rhs,
        );
    }
    Ok(report)
}

/// The two worked cases of the chain expansion, written out term by term:
///
/// - `c_{N,1} = c_{N-1,1} + q c_{N-1,0} c_{N-1,2} / 2`
/// - `c_{N,2} = c_{N-1,2} + q (c_{N-1,3}/3 + c_{N-1,1} c_{N-1,2}) + q^2 c_{N-1,2}^2 / 2`
///
/// with `q = N/(1-N)`.
pub fn chain_examples(big_n: u32) -> VerificationReport {
    assert_cross_order(big_n);
    let cur = c_via_series(big_n, 2).values;
    let p = c_via_series(big_n - 1, 3).values;
    let step = ExactRational::new(big_n as i64, 1 - big_n as i64);
    let half = ExactRational::new(1, 2);
    let first = &p[1] + &step * &p[0] * &p[2] * &half;
    let second =
        &p[2] + &step * (&p[3] / ExactRational::from(3) + &p[1] * &p[2]) + step.pow(2) * p[2].pow(2) * &half;
    let mut report = VerificationReport::new();
    report.check(
        "descending-chain/example-i",
        ParameterPoint::new(big_n, 1, 1),
        &cur[1],
        &first,
    );
    report.check(
        "descending-chain/example-ii",
        ParameterPoint::new(big_n, 1, 2),
        &cur[2],
        &second,
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn chains_for_two() {
        let chains = enumerate_chains(2, &Caps::default()).unwrap();
        let seqs: Vec<_> = chains.iter().map(|c| c.indices().to_vec()).collect();
        assert_eq!(seqs, vec![vec![2], vec![2, 0], vec![2, 1], vec![2, 1, 0]]);
        assert_eq!(enumerate_chains(0, &Caps::default()).unwrap().len(), 1);
    }

    #[test]
    fn chain_cap() {
        assert!(enumerate_chains(15, &Caps::default()).is_err());
        assert!(chain_sum(2, 15, &Caps::default()).is_err());
    }

    #[test]
    fn chain_index_validation() {
        assert!(ChainIndex::new(vec![3, 1, 0]).is_some());
        assert!(ChainIndex::new(vec![3, 3]).is_none());
        assert!(ChainIndex::new(vec![]).is_none());
        let c = ChainIndex::new(vec![5, 2]).unwrap();
        assert_eq!((c.len(), c.tail()), (1, 2));
    }

    #[test]
    fn cross_order_worked_case() {
        let report = cross_order_step(2, 1);
        assert!(report.passed());
        // 2/3 = 1/2 - (2/2) * (1 * 1 * (-1/6))
        let prev = c_via_series(1, 2).values;
        assert_eq!(&prev[1] - q(1, 1) * (&prev[0] * &prev[2]), q(2, 3));
    }

    #[test]
    fn cross_order_larger() {
        assert!(cross_order_step(5, 12).passed());
    }

    #[test]
    fn chain_sum_passes() {
        let report = chain_sum(3, 10, &Caps::default()).unwrap();
        assert!(report.passed());
        assert_eq!(report.records.len(), 11);
    }

    #[test]
    fn worked_examples() {
        for big_n in 2..=6 {
            assert!(chain_examples(big_n).passed(), "N={big_n}");
        }
    }

    #[test]
    #[should_panic(expected = "N >= 2")]
    fn cross_order_rejects_first_order() {
        cross_order_step(1, 3);
    }
}
