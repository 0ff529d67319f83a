use std::cell::Cell;

use crate::error::{Error, Result};

/// A step counter that converts runaway searches into explicit errors.
///
/// Conjugacy closures, exponent-shell scans and power pinning all charge one
/// step per elementary probe (a conjugation, a product evaluation, a power
/// doubling). When the limit is reached the operation fails with
/// [`Error::Budget`]; it never returns a truncated answer.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 50_000_000;

    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
        }
    }

    /// Charges `n` steps, failing once the limit is crossed.
    pub fn charge(&self, n: u64) -> Result<()> {
        let used = self.used.get().saturating_add(n);
        self.used.set(used);
        if used > self.limit {
            Err(Error::Budget { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn step(&self) -> Result<()> {
        self.charge(1)
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LIMIT)
    }
}
