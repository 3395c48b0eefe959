//! First coefficient ideals.
//!
//! `J ⊆ I_{1}` is decided by the dimension test `dim ⊕ J I^n / I^{n+1} < dim A`.
//! Since `I_{1}` is an ideal between `I` and `Ī`, it is recovered monomial by
//! monomial: each `u ∈ Ī \ I` up to a degree bound is tested on its own.

use std::collections::HashSet;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::closure::integral_closure;
use crate::error::{Error, Result};
use crate::hilbert::FitConfig;
use crate::ideal::MonomialIdeal;
use crate::invariants::{dimension_of_n, generalized_coefficients};
use crate::monomial::{monomials_up_to_degree, Monomial};

/// Whether `J ⊆ I_{1}`, for `I ⊆ J`.
pub fn fci_contains(i: &MonomialIdeal, j: &MonomialIdeal, cfg: &FitConfig) -> Result<bool> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(dimension_of_n(i, j, cfg)?.below(i.nvars()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FciResult {
    pub fci: MonomialIdeal,
    /// Candidates found to lie in `I_{1}`, by increasing degree.
    pub accepted: Vec<Monomial>,
    /// Candidates that went through the dimension test (multiples of
    /// accepted monomials are accepted without one).
    pub candidates_tested: usize,
    pub degree_bound: u32,
    /// False when a new minimal generator sits exactly at the degree bound.
    pub complete: bool,
}

impl FciResult {
    pub fn to_json(&self) -> Value {
        let vars = self.fci.vars();
        json!({
            "generators": self.fci.gens().iter().map(|g| g.display_spaced(vars).to_string()).collect::<Vec<_>>(),
            "accepted": self.accepted.iter().map(|g| g.display_spaced(vars).to_string()).collect::<Vec<_>>(),
            "candidates_tested": self.candidates_tested,
            "degree_bound": self.degree_bound,
            "complete": self.complete,
            "assumption": "monomial-fci",
        })
    }
}

pub fn default_degree_bound(i: &MonomialIdeal) -> u32 {
    i.max_gen_degree() + i.nvars() as u32
}

/// Monomials of `Ī \ I` of degree at most `bound`, by degree then lex.
pub fn fci_candidates(i: &MonomialIdeal, bound: u32) -> Result<Vec<Monomial>> {
    let closure = integral_closure(i)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h in closure.gens().iter().filter(|h| !i.contains(h) && h.degree() <= bound) {
        for w in monomials_up_to_degree(i.nvars(), bound - h.degree()) {
            let u = h.mul(&w);
            if !i.contains(&u) && seen.insert(u.clone()) {
                out.push(u);
            }
        }
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    Ok(out)
}

/// Computes `I_{1}` up to `degree_bound` (default `maxGenDegree + n`) and
/// verifies the result: `fci ⊆ I_{1}` by the dimension test, and `j_0`, `j_1`
/// of `I` and `fci` agree.
pub fn first_coefficient_ideal(
    i: &MonomialIdeal,
    degree_bound: Option<u32>,
    cfg: &FitConfig,
) -> Result<FciResult> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let bound = degree_bound.unwrap_or_else(|| default_degree_bound(i)).max(i.max_gen_degree());
    let candidates = fci_candidates(i, bound)?;

    let mut accepted: Vec<Monomial> = Vec::new();
    let mut tested = 0;
    let mut start = 0;
    while start < candidates.len() {
        let degree = candidates[start].degree();
        let end = candidates[start..].iter().position(|u| u.degree() != degree).map_or(candidates.len(), |k| start + k);
        let level = &candidates[start..end];
        let (implied, open): (Vec<&Monomial>, Vec<&Monomial>) =
            level.iter().partition(|u| accepted.iter().any(|a| a.divides(u)));
        tested += open.len();
        let verdicts: Vec<bool> = if cfg.parallel {
            open.par_iter().map(|u| fci_contains(i, &i.with_generator((*u).clone()), cfg)).collect::<Result<_>>()?
        } else {
            open.iter().map(|u| fci_contains(i, &i.with_generator((*u).clone()), cfg)).collect::<Result<_>>()?
        };
        let mut level_accepted: Vec<Monomial> = implied.into_iter().cloned().collect();
        level_accepted.extend(open.iter().zip(&verdicts).filter(|(_, &ok)| ok).map(|(u, _)| (*u).clone()));
        level_accepted.sort_by(|a, b| b.cmp(a));
        accepted.extend(level_accepted);
        start = end;
    }

    let fci = accepted.iter().fold(i.clone(), |acc, u| acc.with_generator(u.clone()));
    let complete = !fci.gens().iter().any(|g| !i.contains(g) && g.degree() == bound);
    verify(i, &fci, cfg)?;
    Ok(FciResult { fci, accepted, candidates_tested: tested, degree_bound: bound, complete })
}

fn verify(i: &MonomialIdeal, fci: &MonomialIdeal, cfg: &FitConfig) -> Result<()> {
    if fci == i {
        return Ok(());
    }
    if !fci_contains(i, fci, cfg)? {
        return Err(Error::VerificationFailed(format!("{fci} is not inside the first coefficient ideal of {i}")));
    }
    let a = generalized_coefficients(i, cfg)?;
    let b = generalized_coefficients(fci, cfg)?;
    if a.j0() != b.j0() || a.j1() != b.j1() {
        return Err(Error::VerificationFailed(format!(
            "j0/j1 differ: {:?}/{:?} vs {:?}/{:?}",
            a.j0(),
            a.j1(),
            b.j0(),
            b.j1()
        )));
    }
    Ok(())
}
