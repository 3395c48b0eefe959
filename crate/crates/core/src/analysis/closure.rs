//! Integral closure of monomial ideals through the Newton polyhedron.

use num_rational::BigRational;
use num_traits::Zero;

use super::lp::feasible;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// `u ∈ conv(exponents of I) + R^n_{>=0}`, decided exactly.
pub fn in_newton_polyhedron(ideal: &MonomialIdeal, u: &Monomial) -> bool {
    if ideal.is_zero() {
        return false;
    }
    if ideal.contains(u) {
        return true;
    }
    let n = ideal.nvars();
    let gens = ideal.gens();
    let q = |v: u32| BigRational::from_integer(v.into());
    // variables: one weight per generator, then one slack per coordinate
    let mut a = Vec::with_capacity(n + 1);
    for t in 0..n {
        let mut row: Vec<BigRational> = gens.iter().map(|g| q(g.exponents()[t])).collect();
        row.extend((0..n).map(|s| if s == t { q(1) } else { BigRational::zero() }));
        a.push(row);
    }
    let mut convex: Vec<BigRational> = gens.iter().map(|_| q(1)).collect();
    convex.extend((0..n).map(|_| BigRational::zero()));
    a.push(convex);
    let mut b: Vec<BigRational> = u.exponents().iter().map(|&e| q(e)).collect();
    b.push(q(1));
    feasible(&a, &b)
}

/// Minimal generators of the integral closure `Ī`.
///
/// Minimal lattice points of the Newton polyhedron lie in the box bounded by
/// the componentwise maximum of the generator exponents: a coordinate above
/// that bound can be lowered without leaving the polyhedron.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let bounds = ideal.exponent_box();
    let mut members = Vec::new();
    let mut point = vec![0u32; bounds.len()];
    loop {
        let u = Monomial::new(point.clone());
        if in_newton_polyhedron(ideal, &u) {
            members.push(u);
        }
        // odometer over the box
        let mut t = 0;
        loop {
            if t == point.len() {
                return MonomialIdeal::new(ideal.shared_vars(), members);
            }
            if point[t] < bounds[t] {
                point[t] += 1;
                break;
            }
            point[t] = 0;
            t += 1;
        }
    }
}
