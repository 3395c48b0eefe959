//! Exact feasibility of `{x >= 0 : A x = b}` by phase-one simplex over the
//! rationals, with Bland's rule so it cannot cycle.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Whether some `x >= 0` satisfies `a · x = b`. Rows of `b` must be nonnegative.
pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = b.len();
    assert_eq!(a.len(), m, "one row of A per entry of b");
    assert!(b.iter().all(|v| !v.is_negative()), "right-hand side must be nonnegative");
    let cols = a.first().map_or(0, Vec::len);
    let width = cols + m;

    // tableau rows: [A | I | b]; artificial variables start in the basis
    let mut tab: Vec<Vec<BigRational>> = (0..m)
        .map(|r| {
            let mut row = a[r].clone();
            row.extend((0..m).map(|k| if k == r { one() } else { BigRational::zero() }));
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (cols..width).collect();

    // reduced costs of "minimize the sum of artificials", priced out
    let mut cost: Vec<BigRational> = (0..=width)
        .map(|c| {
            if (cols..width).contains(&c) {
                BigRational::zero()
            } else {
                -tab.iter().map(|row| row[c].clone()).sum::<BigRational>()
            }
        })
        .collect();

    while let Some(enter) = (0..width).find(|&c| cost[c].is_negative()) {
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if !tab[r][enter].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let lhs = &tab[r][width] / &tab[r][enter];
                    let rhs = &tab[l][width] / &tab[l][enter];
                    lhs < rhs || (lhs == rhs && basis[r] < basis[l])
                }
            };
            if better {
                leave = Some(r);
            }
        }
        // phase one is bounded below by zero, so a pivot row always exists
        let r = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut cost, r, enter);
        basis[r] = enter;
    }
    // cost[width] holds minus the objective value
    cost[width].is_zero()
}

fn one() -> BigRational {
    BigRational::from_integer(1.into())
}

fn pivot(tab: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let inv = tab[r][c].recip();
    for v in tab[r].iter_mut() {
        *v = &*v * &inv;
    }
    let pivot_row = tab[r].clone();
    for (k, row) in tab.iter_mut().enumerate() {
        if k == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            *v -= &f * p;
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            *v -= &f * p;
        }
    }
}
