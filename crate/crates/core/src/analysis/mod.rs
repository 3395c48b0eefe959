//! Ideal-level analysis: integral closure, reductions, monomial primes,
//! first coefficient ideals and localized comparisons.

pub mod closure;
pub mod compare;
pub mod fci;
mod lp;
pub mod primes;
pub mod reduction;

pub use closure::{in_newton_polyhedron, integral_closure};
pub use compare::{compare_localized, cq_cross_check, ComparisonReport, CqCheck, PrimeComparison, PrimeScope};
pub use fci::{default_degree_bound, fci_candidates, fci_contains, first_coefficient_ideal, FciResult};
pub use primes::{height, localize, minimal_primes, primes_containing, MonomialPrime};
pub use reduction::{is_reduction, ReductionOutcome, DEFAULT_NMAX};
