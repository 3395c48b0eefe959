//! Generalized Hilbert coefficients `j_k`, the multiplicity sequence `c_i`,
//! the j-multiplicity and the analytic spread, read off the stable
//! `(1,1)`-polynomial of `T = G_m(G_I(A))`; classical Hilbert coefficients
//! `e_k` for m-primary ideals.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hilbert::{stable_fit, stable_fit_1d, FitConfig, FitReport, NCells, TCells, TableKind};
use crate::ideal::MonomialIdeal;
use crate::json;
use crate::scaled::{count_between, ScaledSum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientReport {
    /// Ring dimension, the number of variables.
    pub d: usize,
    /// `j[k] = (a_{k,d-k}, a_{k-1,d-k}, ..., a_{0,d-k})`.
    pub j: Vec<Vec<BigInt>>,
    /// `c[i] = a_{i,d-i}`.
    pub c: Vec<BigInt>,
    pub jmult: BigInt,
    pub analytic_spread: usize,
    pub fit: FitReport,
}

impl CoefficientReport {
    pub fn j0(&self) -> &BigInt {
        &self.j[0][0]
    }

    /// `(j_1^1, j_1^2)`; empty when `d = 0`.
    pub fn j1(&self) -> &[BigInt] {
        self.j.get(1).map_or(&[], Vec::as_slice)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "j": self.j.iter().map(|v| v.iter().map(json::int).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "c": self.c.iter().map(json::int).collect::<Vec<_>>(),
            "jmult": json::int(&self.jmult),
            "ell": self.analytic_spread,
            "fit": self.fit.provenance(),
        })
    }
}

/// Stable fit of `H11` of `T` with degree cap `n`.
pub fn h11_fit(ideal: &MonomialIdeal, cfg: &FitConfig) -> Result<FitReport> {
    stable_fit(&TCells::new(ideal.clone())?, TableKind::H11, ideal.nvars(), cfg)
}

/// Stable fit of `H10` of `T` with degree cap `n - 1`.
pub fn h10_fit(ideal: &MonomialIdeal, cfg: &FitConfig) -> Result<FitReport> {
    stable_fit(&TCells::new(ideal.clone())?, TableKind::H10, ideal.nvars().saturating_sub(1), cfg)
}

/// Arranges an `H11` polynomial into `j_k`, `c_i`, j-multiplicity and analytic spread.
pub fn report_from_fit(d: usize, fit: FitReport) -> Result<CoefficientReport> {
    let a = |k: usize, l: usize| fit.poly.coeff(k, l);
    let j: Vec<Vec<BigInt>> = (0..=d).map(|k| (0..=k).rev().map(|t| a(t, d - k)).collect()).collect();
    let c: Vec<BigInt> = (0..=d).map(|i| a(i, d - i)).collect();
    let first = c.iter().position(|v| !v.is_zero()).ok_or(Error::AllZeroSequence)?;
    Ok(CoefficientReport { d, jmult: c[0].clone(), analytic_spread: d - first, j, c, fit })
}

pub fn generalized_coefficients(ideal: &MonomialIdeal, cfg: &FitConfig) -> Result<CoefficientReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    report_from_fit(ideal.nvars(), h11_fit(ideal, cfg)?)
}

/// Hilbert coefficients `(e_0, ..., e_d)` of an m-primary ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalCoeffs {
    pub e: Vec<BigInt>,
    pub origin: usize,
}

/// Fits `λ(A / I^{m+1}) = Σ_k (-1)^k e_k C(m + d - k, d - k)`, counting
/// standard monomials directly.
pub fn classical_coefficients(ideal: &MonomialIdeal, cfg: &FitConfig) -> Result<ClassicalCoeffs> {
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let d = ideal.nvars();
    let unit = ScaledSum::of(MonomialIdeal::unit(ideal.shared_vars()));
    let colength = |m: usize| count_between(&unit, &ScaledSum::of(ideal.power(m + 1))).map(BigInt::from);
    let fit = stable_fit_1d(colength, d, cfg)?;
    let e = (0..=d)
        .map(|k| {
            let b = fit.coeffs[d - k].clone();
            if k % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    Ok(ClassicalCoeffs { e, origin: fit.origin })
}

/// Dimension of `N = ⊕ J I^n / I^{n+1}` as a `G_I(A)`-module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NDimension {
    /// `N = 0`, i.e. `J = I`.
    Zero,
    Dim(usize),
}

impl NDimension {
    pub fn below(self, d: usize) -> bool {
        match self {
            NDimension::Zero => true,
            NDimension::Dim(k) => k < d,
        }
    }
}

/// `dim N` as the total degree of the stable `H11` polynomial of `G_m(N)`.
pub fn dimension_of_n(ideal: &MonomialIdeal, over: &MonomialIdeal, cfg: &FitConfig) -> Result<NDimension> {
    dimension_of_n_with_fit(ideal, over, cfg).map(|(d, _)| d)
}

pub fn dimension_of_n_with_fit(
    ideal: &MonomialIdeal,
    over: &MonomialIdeal,
    cfg: &FitConfig,
) -> Result<(NDimension, Option<FitReport>)> {
    let cells = NCells::new(ideal.clone(), over.clone())?;
    if over.is_subset_of(ideal) {
        return Ok((NDimension::Zero, None));
    }
    let fit = stable_fit(&cells, TableKind::H11, ideal.nvars(), cfg)?;
    let dim = match fit.poly.total_degree() {
        Some(k) => NDimension::Dim(k),
        None => NDimension::Zero,
    };
    Ok((dim, Some(fit)))
}
