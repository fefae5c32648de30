//! Structured outcome of identity checks: one record per identity per
//! parameter point.

use serde::{Deserialize, Serialize};

use crate::rational::ExactRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The identity fails as printed and holds in a documented corrected form.
    ErratumNoted,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ErratumNoted => "erratum-noted",
        }
    }
}

/// `(N, r, n)`; components that do not apply to an identity are `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParameterPoint {
    #[serde(rename = "N")]
    pub big_n: Option<u32>,
    pub r: Option<u32>,
    pub n: Option<usize>,
}

impl ParameterPoint {
    pub fn new(big_n: u32, r: u32, n: usize) -> Self {
        ParameterPoint {
            big_n: Some(big_n),
            r: Some(r),
            n: Some(n),
        }
    }

    pub fn at_n(n: usize) -> Self {
        ParameterPoint {
            n: Some(n),
            ..Default::default()
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }
}

impl std::fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
        write!(
            f,
            "N={} r={} n={}",
            show(self.big_n.map(|v| v.to_string())),
            show(self.r.map(|v| v.to_string())),
            show(self.n.map(|v| v.to_string()))
        )
    }
}

/// Expected and actual values. For an erratum, `expected` is what the
/// printed statement asserts and `actual` the exact computed value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detail {
    pub expected: ExactRational,
    pub actual: ExactRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub identity: String,
    pub point: ParameterPoint,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<Detail>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub records: Vec<VerificationRecord>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a pass when `expected == actual`, otherwise a fail carrying
    /// both values.
    pub fn check(
        &mut self,
        identity: &str,
        point: ParameterPoint,
        expected: &ExactRational,
        actual: &ExactRational,
    ) -> bool {
        let ok = expected == actual;
        self.records.push(VerificationRecord {
            identity: identity.to_string(),
            point,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: (!ok).then(|| Detail {
                expected: expected.clone(),
                actual: actual.clone(),
            }),
        });
        ok
    }

    /// Checks that every pair agrees; records one pass, or one fail at the
    /// first disagreement.
    pub fn check_all<'a, I>(&mut self, identity: &str, point: ParameterPoint, pairs: I) -> bool
    where
        I: IntoIterator<Item = (&'a ExactRational, &'a ExactRational)>,
    {
        for (expected, actual) in pairs {
            if expected != actual {
                return self.check(identity, point, expected, actual);
            }
        }
        self.records.push(VerificationRecord {
            identity: identity.to_string(),
            point,
            status: Status::Pass,
            detail: None,
        });
        true
    }

    pub fn erratum(
        &mut self,
        identity: &str,
        point: ParameterPoint,
        printed: ExactRational,
        actual: ExactRational,
    ) {
        self.records.push(VerificationRecord {
            identity: identity.to_string(),
            point,
            status: Status::ErratumNoted,
            detail: Some(Detail {
                expected: printed,
                actual,
            }),
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn errata(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| r.status == Status::ErratumNoted)
    }

    pub fn first_failure(&self) -> Option<&VerificationRecord> {
        self.failures().next()
    }
}

impl FromIterator<VerificationReport> for VerificationReport {
    fn from_iter<I: IntoIterator<Item = VerificationReport>>(iter: I) -> Self {
        let mut out = VerificationReport::new();
        for r in iter {
            out.extend(r);
        }
        out
    }
}
