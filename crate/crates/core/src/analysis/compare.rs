//! Localized comparison of `j_0`, `j_1` at monomial primes, and the
//! cross-check of `c_q` against multiplicities at minimal primes.
//!
//! The comparison only ranges over monomial primes, so it is a diagnostic;
//! [`super::fci::fci_contains`] is the authoritative containment test.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::primes::{height, localize, minimal_primes, primes_containing, MonomialPrime};
use crate::error::{Error, Result};
use crate::hilbert::FitConfig;
use crate::ideal::MonomialIdeal;
use crate::invariants::{classical_coefficients, generalized_coefficients};
use crate::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeScope {
    MaximalOnly,
    AllMonomial,
}

/// `(j_0, j_1)` of a localized ideal; `None` for the unit ideal.
pub type LeadingCoefficients = Option<(BigInt, Vec<BigInt>)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeComparison {
    pub prime: Vec<String>,
    pub left: LeadingCoefficients,
    pub right: LeadingCoefficients,
}

impl PrimeComparison {
    pub fn equal(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub verdict: bool,
    pub per_prime: Vec<PrimeComparison>,
}

fn leading_json(c: &LeadingCoefficients) -> (Value, Value) {
    match c {
        None => (Value::Null, Value::Null),
        Some((j0, j1)) => (json::int(j0), Value::Array(j1.iter().map(json::int).collect())),
    }
}

impl ComparisonReport {
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict,
            "per_prime": self.per_prime.iter().map(|p| {
                let (l0, l1) = leading_json(&p.left);
                let (r0, r1) = leading_json(&p.right);
                json!({ "prime": p.prime, "j0": [l0, r0], "j1": [l1, r1], "equal": p.equal() })
            }).collect::<Vec<_>>(),
        })
    }
}

fn leading(ideal: &MonomialIdeal, cfg: &FitConfig) -> Result<LeadingCoefficients> {
    if ideal.is_unit() {
        return Ok(None);
    }
    let r = generalized_coefficients(ideal, cfg)?;
    Ok(Some((r.j0().clone(), r.j1().to_vec())))
}

/// Compares `j_0`, `j_1` of `I_p` and `J_p` at the maximal ideal, or at every
/// monomial prime containing `I`.
pub fn compare_localized(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    scope: PrimeScope,
    cfg: &FitConfig,
) -> Result<ComparisonReport> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !i.is_subset_of(j) {
        return Err(Error::NotASubideal);
    }
    let primes = match scope {
        PrimeScope::MaximalOnly => vec![MonomialPrime::maximal(i.nvars())],
        PrimeScope::AllMonomial => {
            let mut ps = primes_containing(i)?;
            // the maximal ideal first
            ps.sort_by_key(|p| std::cmp::Reverse(p.size()));
            ps
        }
    };
    let per_prime = primes
        .iter()
        .map(|p| {
            Ok(PrimeComparison {
                prime: p.names(i.vars()),
                left: leading(&localize(i, p), cfg)?,
                right: leading(&localize(j, p), cfg)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonReport { verdict: per_prime.iter().all(PrimeComparison::equal), per_prime })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CqCheck {
    /// `q = dim A/I = n - height(I)`.
    pub q: usize,
    pub from_table: BigInt,
    pub from_formula: BigInt,
}

impl CqCheck {
    pub fn agrees(&self) -> bool {
        self.from_table == self.from_formula
    }
}

/// `c_q` from the bigraded fit against `Σ_p e_0(I_p)` over the minimal
/// primes of maximal dimension. Coordinate subspaces have multiplicity one,
/// so the factor `e(A/p)` is always 1.
pub fn cq_cross_check(i: &MonomialIdeal, cfg: &FitConfig) -> Result<CqCheck> {
    let h = height(i)?;
    let q = i.nvars() - h;
    let from_table = generalized_coefficients(i, cfg)?.c[q].clone();
    let mut from_formula = BigInt::default();
    for p in minimal_primes(i)?.iter().filter(|p| p.size() == h) {
        from_formula += &classical_coefficients(&localize(i, p), cfg)?.e[0];
    }
    Ok(CqCheck { q, from_table, from_formula })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(&["x", "y"], rows).unwrap()
    }

    #[test]
    fn negative_control_differs_at_maximal_ideal() {
        let cfg = FitConfig::default();
        let i = xy(&[&[2, 0], &[0, 2]]);
        let j = xy(&[&[2, 0], &[1, 1], &[0, 2]]);
        let r = compare_localized(&i, &j, PrimeScope::MaximalOnly, &cfg).unwrap();
        assert!(!r.verdict);
        let at_m = &r.per_prime[0];
        assert_eq!(at_m.left, Some((BigInt::from(4), vec![BigInt::from(0), BigInt::from(0)])));
        assert_eq!(at_m.right, Some((BigInt::from(4), vec![BigInt::from(0), BigInt::from(-1)])));
    }

    #[test]
    fn equal_ideals_agree_everywhere() {
        let cfg = FitConfig::default();
        let i = xy(&[&[2, 1], &[0, 3]]);
        let r = compare_localized(&i, &i, PrimeScope::AllMonomial, &cfg).unwrap();
        assert!(r.verdict);
        assert_eq!(r.per_prime[0].prime, vec!["x", "y"]);
    }

    #[test]
    fn cq_small_cases() {
        let cfg = FitConfig::default();
        let c = cq_cross_check(&xy(&[&[1, 0]]), &cfg).unwrap();
        assert_eq!((c.q, c.from_table.clone(), c.from_formula.clone()), (1, BigInt::from(1), BigInt::from(1)));
        let c = cq_cross_check(&xy(&[&[1, 0], &[0, 1]]), &cfg).unwrap();
        assert_eq!((c.q, c.from_table.clone()), (0, BigInt::from(1)));
        assert!(c.agrees());
    }
}
