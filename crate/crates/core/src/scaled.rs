//! Sums of shifted monomial ideals `Σ m^{s_t} K_t` and the quotient-length counter.
//!
//! Every length the crate reports ends up as a count of monomials lying in
//! one such sum and outside another.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};

/// The monomial ideal `Σ_t m^{shift_t} · K_t`, never materialized.
#[derive(Clone, Debug)]
pub struct ScaledSum {
    nvars: usize,
    terms: Vec<(Arc<MonomialIdeal>, u32)>,
}

impl ScaledSum {
    /// The empty sum, i.e. the zero ideal.
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        let vars: Vec<String> = (0..nvars).map(|t| format!("x{t}")).collect();
        Self::of(MonomialIdeal::unit(vars))
    }

    pub fn of(ideal: impl Into<Arc<MonomialIdeal>>) -> Self {
        Self::shifted(ideal, 0)
    }

    /// `m^shift · ideal`.
    pub fn shifted(ideal: impl Into<Arc<MonomialIdeal>>, shift: u32) -> Self {
        let ideal = ideal.into();
        Self { nvars: ideal.nvars(), terms: vec![(ideal, shift)] }
    }

    /// Adds the term `m^shift · ideal`.
    pub fn plus(mut self, ideal: impl Into<Arc<MonomialIdeal>>, shift: u32) -> Self {
        let ideal = ideal.into();
        assert_eq!(ideal.nvars(), self.nvars, "terms live in different rings");
        self.terms.push((ideal, shift));
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Arc<MonomialIdeal>, u32)] {
        &self.terms
    }

    /// `u` lies in the sum iff some term has a generator `g | u` with
    /// `deg u - deg g >= shift`.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.terms.iter().any(|(k, s)| {
            k.gens().iter().any(|g| g.divides(u) && u.degree() - g.degree() >= *s)
        })
    }

    pub fn try_contains(&self, u: &Monomial) -> Result<bool> {
        if u.nvars() != self.nvars {
            return Err(Error::VariableMismatch { expected: self.nvars, found: u.nvars() });
        }
        Ok(self.contains(u))
    }

    /// Largest `deg g + shift` over all generators; every member of degree at
    /// least this has a member divisor one degree lower.
    pub fn generation_degree(&self) -> u32 {
        self.terms
            .iter()
            .filter(|(k, _)| !k.is_zero())
            .map(|(k, s)| k.max_gen_degree() + s)
            .max()
            .unwrap_or(0)
    }

    fn max_shift(&self) -> u32 {
        self.terms.iter().map(|(_, s)| *s).max().unwrap_or(0)
    }

    /// For each variable, the least exponent `a` with `x_t^a` in the sum, if any.
    fn pure_power_bounds(&self) -> Vec<Option<u32>> {
        let mut best = vec![None; self.nvars];
        for (k, s) in &self.terms {
            for g in k.gens() {
                let candidate = if g.is_one() {
                    Some((None, *s))
                } else {
                    g.as_pure_power().map(|(t, e)| (Some(t), e + s))
                };
                match candidate {
                    Some((None, a)) => {
                        for b in best.iter_mut() {
                            *b = Some(b.map_or(a, |x: u32| x.min(a)));
                        }
                    }
                    Some((Some(t), a)) => best[t] = Some(best[t].map_or(a, |x: u32| x.min(a))),
                    None => {}
                }
            }
        }
        best
    }

    /// Members of degree exactly `degree`, without duplicates.
    fn members_of_degree(&self, degree: u32) -> Vec<Monomial> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (k, s) in &self.terms {
            for g in k.gens() {
                if g.degree() + s > degree {
                    continue;
                }
                for w in monomials_of_degree(self.nvars, degree - g.degree()) {
                    let u = g.mul(&w);
                    if seen.insert(u.clone()) {
                        out.push(u);
                    }
                }
            }
        }
        out
    }
}

/// Default degree ceiling for [`count_between`].
///
/// Starts from `max shift + max generator degree + n + 8`; when `v` contains
/// a pure power of every variable, raises it to the socle bound `Σ (a_t - 1) + 1`
/// of monomials avoiding those powers.
pub fn default_ceiling(u: &ScaledSum, v: &ScaledSum) -> u32 {
    let max_shift = u.max_shift().max(v.max_shift());
    let max_gen = u
        .terms
        .iter()
        .chain(v.terms.iter())
        .map(|(k, _)| k.max_gen_degree())
        .max()
        .unwrap_or(0);
    let mut ceiling = max_shift + max_gen + u.nvars as u32 + 8;
    let bounds = v.pure_power_bounds();
    if bounds.iter().all(Option::is_some) {
        let socle: u32 = bounds.iter().map(|b| b.unwrap().saturating_sub(1)).sum();
        ceiling = ceiling.max(socle + 1).max(u.generation_degree() + 1);
    }
    ceiling
}

/// Number of monomials in `u` and not in `v`, with the default ceiling.
pub fn count_between(u: &ScaledSum, v: &ScaledSum) -> Result<BigUint> {
    count_between_with_ceiling(u, v, default_ceiling(u, v))
}

/// Number of monomials in `u` and not in `v`.
///
/// Sweeps degrees upward. Once the degree is at least the generation degree
/// of `u` and every member of `u` in that degree lies in `v`, all higher
/// members do too and the sweep stops. Fails with `NonFiniteLength` if that
/// has not happened by `ceiling`.
pub fn count_between_with_ceiling(u: &ScaledSum, v: &ScaledSum, ceiling: u32) -> Result<BigUint> {
    if u.nvars != v.nvars {
        return Err(Error::VariableMismatch { expected: u.nvars, found: v.nvars });
    }
    let generation = u.generation_degree();
    let mut total = BigUint::default();
    if u.terms.iter().all(|(k, _)| k.is_zero()) {
        return Ok(total);
    }
    let start = u
        .terms
        .iter()
        .flat_map(|(k, s)| k.gens().iter().map(move |g| g.degree() + s))
        .min()
        .unwrap_or(0);
    for degree in start..=ceiling {
        let outside = u.members_of_degree(degree).iter().filter(|m| !v.contains(m)).count();
        total += outside as u64;
        if outside == 0 && degree >= generation {
            return Ok(total);
        }
    }
    Err(Error::NonFiniteLength { ceiling })
}
