//! Exact interpolation in the basis `C(i+k, k) · C(j+l, l)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::table::BigradedTable;
use crate::error::{Error, Result};

/// `C(n, k)` for nonnegative `n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// Solves `matrix · x = rhs` over the rationals; `None` if singular.
pub fn solve_exact(mut matrix: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !matrix[r][col].is_zero())?;
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = matrix[col][col].recip();
        for c in col..n {
            matrix[col][c] = &matrix[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r == col || matrix[r][col].is_zero() {
                continue;
            }
            let factor = matrix[r][col].clone();
            for c in col..n {
                let delta = &factor * &matrix[col][c];
                matrix[r][c] -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    Some(rhs)
}

/// Coefficients `c_k` with `Σ_{k<=D} c_k C(x+k, k) = values[r]` at `x = start + r`,
/// where `D = values.len() - 1`.
pub fn solve_binomial_1d(values: &[BigRational], start: usize) -> Vec<BigRational> {
    let d = values.len() - 1;
    let matrix = (0..=d)
        .map(|r| (0..=d).map(|k| BigRational::from_integer(binomial(start + r + k, k))).collect())
        .collect();
    solve_exact(matrix, values.to_vec()).expect("binomial basis is unisolvent on consecutive points")
}

/// A bivariate polynomial `Σ a_{k,l} C(i+k, k) C(j+l, l)` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinomialPoly2 {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl BinomialPoly2 {
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = ((usize, usize), BigInt)>) -> Self {
        Self { coeffs: coeffs.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn coeff(&self, k: usize, l: usize) -> BigInt {
        self.coeffs.get(&(k, l)).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients keyed by `(k, l)`.
    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `max{k + l : a_{k,l} ≠ 0}`, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|(k, l)| k + l).max()
    }

    pub fn evaluate(&self, i: usize, j: usize) -> BigInt {
        self.coeffs.iter().map(|(&(k, l), a)| a * binomial(i + k, k) * binomial(j + l, l)).sum()
    }
}

/// Tensor interpolation on the `(D+1) x (D+1)` window with lower corner `origin`.
///
/// `window[r][c]` holds the value at `(origin.0 + r, origin.1 + c)`. Terms with
/// `k + l > deg_cap` must come out zero, otherwise the window is reported as
/// not yet polynomial.
pub(crate) fn interpolate_window(window: &[Vec<BigInt>], origin: (usize, usize), deg_cap: usize) -> Result<BinomialPoly2> {
    let d = deg_cap;
    debug_assert_eq!(window.len(), d + 1);
    // Solve along i for every column, then along j for every k; the
    // Kronecker structure makes this the full tensor solve.
    let mut by_k = vec![vec![BigRational::zero(); d + 1]; d + 1];
    for c in 0..=d {
        let column: Vec<BigRational> = (0..=d).map(|r| BigRational::from_integer(window[r][c].clone())).collect();
        for (k, v) in solve_binomial_1d(&column, origin.0).into_iter().enumerate() {
            by_k[k][c] = v;
        }
    }
    let mut coeffs = BTreeMap::new();
    for (k, row) in by_k.iter().enumerate() {
        for (l, a) in solve_binomial_1d(row, origin.1).into_iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !a.is_integer() {
                return Err(Error::NonIntegerCoefficient { k, l });
            }
            coeffs.insert((k, l), a.to_integer());
        }
    }
    if coeffs.keys().any(|(k, l)| k + l > d) {
        return Err(Error::NotYetPolynomial { i0: origin.0, j0: origin.1, deg_cap });
    }
    Ok(BinomialPoly2 { coeffs })
}

/// Interpolates `table` on the window at `origin` (see [`interpolate_window`]).
pub fn interpolate(table: &BigradedTable, origin: (usize, usize), deg_cap: usize) -> Result<BinomialPoly2> {
    let (i0, j0) = origin;
    if i0 + deg_cap > table.i_max() || j0 + deg_cap > table.j_max() {
        return Err(Error::WindowOutOfRange { i0, j0, deg_cap });
    }
    let window: Vec<Vec<BigInt>> =
        (0..=deg_cap).map(|r| table.values[i0 + r][j0..=j0 + deg_cap].to_vec()).collect();
    interpolate_window(&window, origin, deg_cap)
}

/// Integer coefficients `c_l` with `f(x) = Σ c_l C(x+l, l)` on the `D+1`
/// points starting at `start`.
pub fn interpolate_1d(values: &[BigInt], start: usize) -> Result<Vec<BigInt>> {
    let rationals: Vec<BigRational> = values.iter().cloned().map(BigRational::from_integer).collect();
    solve_binomial_1d(&rationals, start)
        .into_iter()
        .enumerate()
        .map(|(l, a)| if a.is_integer() { Ok(a.to_integer()) } else { Err(Error::NonIntegerCoefficient { k: 0, l }) })
        .collect()
}

pub fn evaluate_1d(coeffs: &[BigInt], x: usize) -> BigInt {
    coeffs.iter().enumerate().map(|(l, c)| c * binomial(x + l, l)).sum()
}

/// `a_{k, degree-k} >= 0` for every `k`.
pub fn has_nonnegative_diagonal(poly: &BinomialPoly2, degree: usize) -> bool {
    (0..=degree).all(|k| !poly.coeff(k, degree - k).is_negative())
}
