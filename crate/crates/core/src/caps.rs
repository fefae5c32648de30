//! Size limits for the exhaustive enumerations.
//!
//! Compositions grow like `2^(n-1)`, descending chains like `2^n` and
//! partitions super-polynomially, so each has its own ceiling.

use crate::error::{CapKind, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub compositions: usize,
    pub chains: usize,
    pub partitions: usize,
}

impl Caps {
    pub const DEFAULT_COMPOSITIONS: usize = 22;
    pub const DEFAULT_CHAINS: usize = 14;
    pub const DEFAULT_PARTITIONS: usize = 24;

    pub fn unlimited() -> Self {
        Caps {
            compositions: usize::MAX,
            chains: usize::MAX,
            partitions: usize::MAX,
        }
    }

    pub fn limit(&self, kind: CapKind) -> usize {
        match kind {
            CapKind::Compositions => self.compositions,
            CapKind::Chains => self.chains,
            CapKind::Partitions => self.partitions,
        }
    }

    pub fn check(&self, kind: CapKind, requested: usize) -> Result<()> {
        let cap = self.limit(kind);
        if requested > cap {
            Err(Error::CapExceeded {
                what: kind,
                requested,
                cap,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            compositions: Self::DEFAULT_COMPOSITIONS,
            chains: Self::DEFAULT_CHAINS,
            partitions: Self::DEFAULT_PARTITIONS,
        }
    }
}
