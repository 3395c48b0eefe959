use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

pub const DEFAULT_NMAX: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ReductionOutcome {
    /// `J I^witness = I^{witness+1}` with the least such `witness`.
    Reduction { witness: usize },
    /// No witness up to `n_max`; this does not prove `J` is not a reduction.
    InconclusiveNegative { n_max: usize },
}

impl ReductionOutcome {
    pub fn is_reduction(self) -> bool {
        matches!(self, ReductionOutcome::Reduction { .. })
    }
}

/// Searches for the least `n <= n_max` with `J I^n = I^{n+1}`.
pub fn is_reduction(j: &MonomialIdeal, i: &MonomialIdeal, n_max: usize) -> Result<ReductionOutcome> {
    if !j.is_subset_of(i) {
        return Err(Error::NotASubideal);
    }
    for n in 0..=n_max {
        if j.product(&i.power(n)) == *i.power(n + 1) {
            return Ok(ReductionOutcome::Reduction { witness: n });
        }
    }
    Ok(ReductionOutcome::InconclusiveNegative { n_max })
}
