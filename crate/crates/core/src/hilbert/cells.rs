//! Cell functions `h^{(1,0)}(i, j)` for `T = G_m(G_I(A))` and for the
//! submodule `N = ⊕ J I^j / I^{j+1}`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_up_to_degree, Monomial};
use crate::scaled::{count_between, ScaledSum};

/// A source of `h^{(1,0)}` values on the quarter plane.
pub trait CellFunction: Sync {
    fn cell(&self, i: usize, j: usize) -> Result<BigInt>;

    /// Values `h(0, j), ..., h(i_max, j)`.
    fn row(&self, j: usize, i_max: usize) -> Result<Vec<BigInt>> {
        (0..=i_max).map(|i| self.cell(i, j).map_err(|e| e.at_cell(i, j))).collect()
    }
}

/// Wraps a closure as a [`CellFunction`].
pub struct FnCells<F>(pub F);

impl<F> CellFunction for FnCells<F>
where
    F: Fn(usize, usize) -> Result<BigInt> + Sync,
{
    fn cell(&self, i: usize, j: usize) -> Result<BigInt> {
        (self.0)(i, j)
    }
}

/// `h^{(1,0)}` of `T`: `λ(I^j / (m^{i+1} I^j + I^{j+1}))`.
pub struct TCells {
    ideal: MonomialIdeal,
}

impl TCells {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(Self { ideal })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }
}

impl CellFunction for TCells {
    fn cell(&self, i: usize, j: usize) -> Result<BigInt> {
        Ok(self.row(j, i)?.swap_remove(i))
    }

    fn row(&self, j: usize, i_max: usize) -> Result<Vec<BigInt>> {
        let k = self.ideal.power(j);
        let l = self.ideal.power(j + 1);
        Ok(excess_row(&k, &l, i_max))
    }
}

/// `h^{(1,0)}` of `G_m(N)`:
/// `λ((J I^j + I^{j+1}) / (m^{i+1} J I^j + I^{j+1}))`.
pub struct NCells {
    ideal: MonomialIdeal,
    over: MonomialIdeal,
}

impl NCells {
    /// `ideal ⊆ over` is required.
    pub fn new(ideal: MonomialIdeal, over: MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if !ideal.is_subset_of(&over) {
            return Err(Error::NotASubideal);
        }
        Ok(Self { ideal, over })
    }
}

impl CellFunction for NCells {
    fn cell(&self, i: usize, j: usize) -> Result<BigInt> {
        Ok(self.row(j, i)?.swap_remove(i))
    }

    fn row(&self, j: usize, i_max: usize) -> Result<Vec<BigInt>> {
        let k = self.over.product(&self.ideal.power(j));
        let l = self.ideal.power(j + 1);
        Ok(excess_row(&k, &l, i_max))
    }
}

/// Cumulative counts `#{u ∈ K \ L : u ∉ m^{i+1} K}` for `i = 0..=i_max`.
///
/// A monomial `u ∈ K` leaves `m^{i+1} K` exactly when its excess
/// `max_{g | u} deg(u / g)` over the generators of `K` is at most `i`, so one
/// pass over `g · w` with `deg w <= i_max` yields the whole row. Each `u` is
/// attributed to the first generator dividing it.
pub(crate) fn excess_row(k: &MonomialIdeal, l: &MonomialIdeal, i_max: usize) -> Vec<BigInt> {
    let mut hist = vec![0u64; i_max + 1];
    if !k.is_zero() {
        let n = k.nvars();
        let gens = FlatGens::new(k.gens(), n);
        let excluded = FlatGens::new(l.gens(), n);
        let steps = monomials_up_to_degree(n, i_max as u32);
        let mut u = vec![0u32; n];
        for (a, g) in k.gens().iter().enumerate() {
            'w: for w in &steps {
                for ((ut, gt), wt) in u.iter_mut().zip(g.exponents()).zip(w.exponents()) {
                    *ut = gt + wt;
                }
                let deg_u = g.degree() + w.degree();
                let mut excess = 0u32;
                for b in 0..gens.len() {
                    if gens.divides(b, &u) {
                        if b < a {
                            continue 'w;
                        }
                        excess = excess.max(deg_u - gens.degrees[b]);
                        if excess as usize > i_max {
                            continue 'w;
                        }
                    }
                }
                if excluded.any_divides(&u) {
                    continue;
                }
                hist[excess as usize] += 1;
            }
        }
    }
    let mut acc = 0u64;
    hist.into_iter()
        .map(|h| {
            acc += h;
            BigInt::from(acc)
        })
        .collect()
}

/// Generators laid out contiguously for the hot divisibility loop.
struct FlatGens {
    nvars: usize,
    exps: Vec<u32>,
    degrees: Vec<u32>,
}

impl FlatGens {
    fn new(gens: &[Monomial], nvars: usize) -> Self {
        let mut exps = Vec::with_capacity(gens.len() * nvars);
        for g in gens {
            exps.extend_from_slice(g.exponents());
        }
        Self { nvars, exps, degrees: gens.iter().map(Monomial::degree).collect() }
    }

    fn len(&self) -> usize {
        self.degrees.len()
    }

    #[inline]
    fn divides(&self, b: usize, u: &[u32]) -> bool {
        self.exps[b * self.nvars..(b + 1) * self.nvars].iter().zip(u).all(|(g, x)| g <= x)
    }

    fn any_divides(&self, u: &[u32]) -> bool {
        (0..self.len()).any(|b| self.divides(b, u))
    }
}

/// `h^{(1,0)}_T(i, j)` computed literally as a quotient length through
/// [`count_between`].
pub fn h10_cell(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<BigInt> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ij = ideal.power(j);
    let u = ScaledSum::of(ij.clone());
    let v = ScaledSum::shifted(ij, i as u32 + 1).plus(ideal.power(j + 1), 0);
    count_between(&u, &v).map(BigInt::from).map_err(|e| e.at_cell(i, j))
}

/// `h^{(1,0)}` of `G_m(N)` at `(i, j)` through [`count_between`], for `ideal ⊆ over`.
pub fn h10_cell_of_n(ideal: &MonomialIdeal, over: &MonomialIdeal, i: usize, j: usize) -> Result<BigInt> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_subset_of(over) {
        return Err(Error::NotASubideal);
    }
    let next = ideal.power(j + 1);
    let jij = over.product(&ideal.power(j));
    let u = ScaledSum::of(jij.clone()).plus(next.clone(), 0);
    let v = ScaledSum::shifted(jij, i as u32 + 1).plus(next, 0);
    count_between(&u, &v).map(BigInt::from).map_err(|e| e.at_cell(i, j))
}
