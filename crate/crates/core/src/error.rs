use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has a zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("derivative order {requested} exceeds series truncation order {order}")]
    OrderExceeded { requested: usize, order: usize },

    #[error("{what} enumeration requested for size {requested}, above the cap of {cap}")]
    CapExceeded {
        what: CapKind,
        requested: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Which exhaustive enumeration hit its size cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapKind {
    Compositions,
    Chains,
    Partitions,
}

impl std::fmt::Display for CapKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CapKind::Compositions => "composition",
            CapKind::Chains => "descending-chain",
            CapKind::Partitions => "partition",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a rational literal: {0:?}")]
pub struct ParseRationalError(pub String);

pub type Result<T, E = Error> = std::result::Result<T, E>;
