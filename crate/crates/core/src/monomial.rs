//! Exponent-vector monomials.

use std::fmt;

/// A monomial `x_0^{a_0} ... x_{n-1}^{a_{n-1}}` with its total degree cached.
///
/// Ordering is lexicographic on the exponent vector, which is what keeps
/// generator lists canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

fn checked_degree(exps: &[u32]) -> u32 {
    exps.iter()
        .try_fold(0u32, |acc, &e| acc.checked_add(e))
        .expect("monomial degree overflows u32")
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        let exps = exps.into();
        let degree = checked_degree(&exps);
        Self { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars].into(), degree: 0 }
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        Self::pure_power(index, 1, nvars)
    }

    pub fn pure_power(index: usize, exp: u32, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = exp;
        Self { exps: exps.into(), degree: exp }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomials live in different rings");
        let exps: Box<[u32]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        let degree = self.degree.checked_add(other.degree).expect("degree overflow");
        Monomial { exps, degree }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Box<[u32]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect::<Vec<_>>(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect::<Vec<_>>(),
        )
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect::<Vec<_>>(),
        )
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .map(|a| a.checked_mul(n).expect("exponent overflow"))
                .collect::<Vec<_>>(),
        )
    }

    /// Bitmask of variables with a positive exponent.
    pub fn support(&self) -> u64 {
        assert!(self.nvars() <= 64, "at most 64 variables are supported");
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (t, _)| m | (1 << t))
    }

    /// `Some((t, a))` if this is `x_t^a` with `a > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (t, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((t, e));
            }
        }
        found
    }

    /// Keeps only the variables in `keep` (in order); the others are set to 1.
    pub fn restrict(&self, keep: &[usize]) -> Monomial {
        Monomial::new(keep.iter().map(|&t| self.exps[t]).collect::<Vec<_>>())
    }

    /// Applies a variable permutation: variable `t` moves to position `perm[t]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.nvars()];
        for (t, &e) in self.exps.iter().enumerate() {
            exps[perm[t]] = e;
        }
        Monomial::new(exps)
    }

    /// Renders the monomial with the given variable names, `x^5`, `x*y*z^2`, or `1`.
    pub fn display<'a>(&'a self, vars: &'a [String]) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, vars, sep: "*" }
    }

    /// Same as [`Monomial::display`] but with whitespace as the product, the ideal file syntax.
    pub fn display_spaced<'a>(&'a self, vars: &'a [String]) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, vars, sep: " " }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

pub struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    vars: &'a [String],
    sep: &'a str,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (t, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(self.sep)?;
            }
            first = false;
            f.write_str(&self.vars[t])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All exponent vectors in `nvars` variables of total degree exactly `degree`,
/// in lexicographically decreasing order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if nvars == 0 {
        return if degree == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, degree, &mut vec![0; nvars], &mut out);
    out
}

/// All monomials of total degree at most `max_degree`, by increasing degree.
pub fn monomials_up_to_degree(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    (0..=max_degree).flat_map(|d| monomials_of_degree(nvars, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degree_is_cached_sum() {
        let u = m(&[3, 1, 0]);
        assert_eq!(u.degree(), 4);
        assert_eq!(u.mul(&m(&[0, 2, 5])).degree(), 11);
    }

    #[test]
    fn divisibility_and_quotients() {
        assert!(m(&[2, 0]).divides(&m(&[3, 1])));
        assert!(!m(&[2, 0]).divides(&m(&[1, 1])));
        assert_eq!(m(&[3, 1]).div(&m(&[2, 0])), Some(m(&[1, 1])));
        assert_eq!(m(&[1, 1]).div(&m(&[2, 0])), None);
        assert_eq!(m(&[3, 1]).quotient_by_gcd(&m(&[2, 1])), m(&[1, 0]));
        assert_eq!(m(&[3, 1]).gcd(&m(&[1, 4])), m(&[1, 1]));
        assert_eq!(m(&[3, 1]).lcm(&m(&[1, 4])), m(&[3, 4]));
    }

    #[test]
    fn pure_power_detection() {
        assert_eq!(m(&[0, 3, 0]).as_pure_power(), Some((1, 3)));
        assert_eq!(m(&[1, 1, 0]).as_pure_power(), None);
        assert_eq!(m(&[0, 0]).as_pure_power(), None);
    }

    #[test]
    fn enumeration_counts_match_binomials() {
        // C(d + n - 1, n - 1)
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
        assert_eq!(monomials_up_to_degree(3, 3).len(), 20);
        assert!(monomials_of_degree(3, 5).iter().all(|u| u.degree() == 5));
    }

    #[test]
    fn display() {
        let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(m(&[1, 1, 2]).display(&vars).to_string(), "x*y*z^2");
        assert_eq!(m(&[5, 0, 0]).display_spaced(&vars).to_string(), "x^5");
        assert_eq!(m(&[0, 0, 0]).display(&vars).to_string(), "1");
    }
}
