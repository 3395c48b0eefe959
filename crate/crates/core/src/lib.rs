//! Generalized Hilbert coefficients, multiplicity sequences and first
//! coefficient ideals of monomial ideals in a polynomial ring, computed with
//! exact integer arithmetic.
//!
//! Every length is a count of monomials ([`scaled::count_between`]); Hilbert
//! functions are tabulated on a grid, fitted exactly in the binomial basis
//! once they become polynomial ([`hilbert`]), and the invariants are read
//! off the fitted coefficients ([`invariants`]).

pub mod analysis;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod invariants;
pub mod json;
pub mod monomial;
pub mod scaled;

pub use error::{Error, Result};
pub use hilbert::FitConfig;
pub use ideal::{MonomialIdeal, PowerCache};
pub use monomial::Monomial;
pub use scaled::{count_between, ScaledSum};
