//! Monomial primes: minimal primes, height and localization.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// The prime generated by the variables in `support` (sorted indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialPrime {
    support: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(mut support: Vec<usize>) -> Self {
        assert!(!support.is_empty(), "a monomial prime needs at least one variable");
        support.sort_unstable();
        support.dedup();
        Self { support }
    }

    fn from_mask(mask: u64) -> Self {
        Self { support: (0..64).filter(|t| mask & (1 << t) != 0).collect() }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn size(&self) -> usize {
        self.support.len()
    }

    /// The homogeneous maximal ideal of an `n`-variable ring.
    pub fn maximal(n: usize) -> Self {
        Self::new((0..n).collect())
    }

    pub fn names(&self, vars: &[String]) -> Vec<String> {
        self.support.iter().map(|&t| vars[t].clone()).collect()
    }

    /// Parses a comma- or space-separated list of variable names.
    pub fn parse(list: &str, vars: &[String]) -> Result<Self> {
        let support = list
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|name| vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string())))
            .collect::<Result<Vec<usize>>>()?;
        if support.is_empty() {
            return Err(Error::UnknownVariable(list.to_string()));
        }
        Ok(Self::new(support))
    }
}

fn generator_supports(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    assert!(ideal.nvars() <= 24, "prime enumeration supports at most 24 variables");
    Ok(ideal.gens().iter().map(|g| g.support()).collect())
}

/// Every monomial prime containing the ideal: variable sets meeting the
/// support of each generator. Ordered by size, then support.
pub fn primes_containing(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let supports = generator_supports(ideal)?;
    let n = ideal.nvars();
    let mut covers: Vec<u64> = (1u64..(1 << n)).filter(|s| supports.iter().all(|g| g & s != 0)).collect();
    covers.sort_by_key(|s| (s.count_ones(), *s));
    Ok(covers.into_iter().map(MonomialPrime::from_mask).collect())
}

/// Minimal primes: the minimal vertex covers of the generator supports.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let supports = generator_supports(ideal)?;
    let n = ideal.nvars();
    let covers: Vec<u64> = (1u64..(1 << n)).filter(|s| supports.iter().all(|g| g & s != 0)).collect();
    let mut minimal: Vec<u64> =
        covers.iter().copied().filter(|&s| !covers.iter().any(|&t| t != s && t & s == t)).collect();
    minimal.sort_by_key(|s| (s.count_ones(), *s));
    Ok(minimal.into_iter().map(MonomialPrime::from_mask).collect())
}

/// Smallest size of a minimal prime; 0 for the unit ideal.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes(ideal)?.iter().map(MonomialPrime::size).min().unwrap_or(0))
}

/// `I A_p` for a monomial prime `p`: variables outside `p` become units.
pub fn localize(ideal: &MonomialIdeal, prime: &MonomialPrime) -> MonomialIdeal {
    ideal.restrict(prime.support())
}
