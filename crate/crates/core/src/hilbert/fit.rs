//! Locating the region where a Hilbert function has become polynomial.
//!
//! Windows slide along the diagonal `i0 = j0 = s`. A window is accepted when
//! it interpolates with no excess terms, the next window gives the same
//! polynomial, and the polynomial reproduces every tabulated value on the
//! square `[s, s + deg_cap + margin]^2`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::cells::CellFunction;
use super::interp::{evaluate_1d, interpolate_1d, interpolate_window, BinomialPoly2};
use super::table::TableKind;
use crate::error::{Error, Result};

/// Knobs shared by every fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FitConfig {
    /// Extra rows and columns beyond the window that must match exactly.
    pub margin: usize,
    /// Largest diagonal origin tried before giving up.
    pub max_origin: usize,
    /// Compute table rows on the rayon pool.
    pub parallel: bool,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self { margin: 2, max_origin: 12, parallel: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitReport {
    pub poly: BinomialPoly2,
    pub origin: (usize, usize),
    pub margin: usize,
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FitProvenance {
    pub origin: [usize; 2],
    pub margin: usize,
}

impl FitReport {
    pub fn provenance(&self) -> FitProvenance {
        FitProvenance { origin: [self.origin.0, self.origin.1], margin: self.margin }
    }
}

/// `H10` rows computed on demand; `H11` is read off by prefix sums.
pub(crate) struct LazyTable<'a, C: ?Sized> {
    cells: &'a C,
    /// `rows[j][i] = H10(i, j)`.
    rows: Vec<Vec<BigInt>>,
    parallel: bool,
}

impl<'a, C: CellFunction + ?Sized> LazyTable<'a, C> {
    pub(crate) fn new(cells: &'a C, parallel: bool) -> Self {
        Self { cells, rows: Vec::new(), parallel }
    }

    /// Makes `H10(i, j)` available for all `i, j <= extent`.
    pub(crate) fn ensure(&mut self, extent: usize) -> Result<()> {
        // Over-allocate in i so the next few diagonal steps reuse the rows.
        let i_max = extent + 3;
        let stale: Vec<usize> = (0..=extent)
            .filter(|&j| self.rows.get(j).is_none_or(|r| r.len() <= extent))
            .collect();
        if stale.is_empty() {
            return Ok(());
        }
        let cells = self.cells;
        let computed: Vec<(usize, Vec<BigInt>)> = if self.parallel {
            stale.par_iter().map(|&j| cells.row(j, i_max).map(|r| (j, r))).collect::<Result<_>>()?
        } else {
            stale.iter().map(|&j| cells.row(j, i_max).map(|r| (j, r))).collect::<Result<_>>()?
        };
        if self.rows.len() <= extent {
            self.rows.resize(extent + 1, Vec::new());
        }
        for (j, row) in computed {
            self.rows[j] = row;
        }
        Ok(())
    }

    pub(crate) fn value(&self, kind: TableKind, i: usize, j: usize) -> BigInt {
        match kind {
            TableKind::H10 => self.rows[j][i].clone(),
            TableKind::H11 => self.rows[..=j].iter().map(|r| &r[i]).sum(),
        }
    }

    fn window(&self, kind: TableKind, origin: usize, deg_cap: usize) -> Vec<Vec<BigInt>> {
        (0..=deg_cap)
            .map(|r| (0..=deg_cap).map(|c| self.value(kind, origin + r, origin + c)).collect())
            .collect()
    }
}

/// Finds the first stable diagonal window for the `kind` transform of `cells`.
pub fn stable_fit<C: CellFunction + ?Sized>(
    cells: &C,
    kind: TableKind,
    deg_cap: usize,
    cfg: &FitConfig,
) -> Result<FitReport> {
    let margin = cfg.margin.max(1);
    let mut table = LazyTable::new(cells, cfg.parallel);
    for s in 0..=cfg.max_origin {
        let last = s + deg_cap + margin;
        table.ensure(last)?;
        let here = match interpolate_window(&table.window(kind, s, deg_cap), (s, s), deg_cap) {
            Ok(p) => p,
            Err(Error::NotYetPolynomial { .. }) => continue,
            Err(e) => return Err(e),
        };
        let next = match interpolate_window(&table.window(kind, s + 1, deg_cap), (s + 1, s + 1), deg_cap) {
            Ok(p) => p,
            Err(Error::NotYetPolynomial { .. }) => continue,
            Err(e) => return Err(e),
        };
        if here != next {
            continue;
        }
        let reproduces = (s..=last).all(|i| (s..=last).all(|j| here.evaluate(i, j) == table.value(kind, i, j)));
        if reproduces {
            return Ok(FitReport { poly: here, origin: (s, s), margin: cfg.margin, stable: true });
        }
    }
    Err(Error::NoStabilization { max_origin: cfg.max_origin })
}

/// A stable univariate fit `f(x) = Σ c_l C(x+l, l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateFit {
    pub coeffs: Vec<BigInt>,
    pub origin: usize,
    pub margin: usize,
}

/// Univariate analogue of [`stable_fit`]: first `s` where the fits at `s` and
/// `s + 1` agree and reproduce `f` on `[s, s + degree + margin]`.
pub fn stable_fit_1d<F>(f: F, degree: usize, cfg: &FitConfig) -> Result<UnivariateFit>
where
    F: Fn(usize) -> Result<BigInt> + Sync,
{
    let margin = cfg.margin.max(1);
    let mut values: Vec<BigInt> = Vec::new();
    for s in 0..=cfg.max_origin {
        let last = s + degree + margin;
        if values.len() <= last {
            let fresh: Vec<BigInt> = if cfg.parallel {
                (values.len()..=last).into_par_iter().map(&f).collect::<Result<_>>()?
            } else {
                (values.len()..=last).map(&f).collect::<Result<_>>()?
            };
            values.extend(fresh);
        }
        let here = interpolate_1d(&values[s..=s + degree], s)?;
        let next = interpolate_1d(&values[s + 1..=s + 1 + degree], s + 1)?;
        if here == next && (s..=last).all(|x| evaluate_1d(&here, x) == values[x]) {
            return Ok(UnivariateFit { coeffs: here, origin: s, margin: cfg.margin });
        }
    }
    Err(Error::NoStabilization { max_origin: cfg.max_origin })
}
