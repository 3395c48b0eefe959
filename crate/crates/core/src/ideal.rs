//! Monomial ideals held by their minimal generators, plus the shared power cache.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal in a fixed polynomial ring.
///
/// `gens` is the minimal generating set in decreasing lexicographic order. The zero
/// ideal is built with [`MonomialIdeal::zero`] and is the only value with no
/// generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Arc<[String]>,
    gens: Vec<Monomial>,
    max_gen_degree: u32,
}

/// Removes duplicates and non-minimal elements, returning the minimal set in
/// decreasing lexicographic order.
pub fn minimalize(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    monos.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monos.len());
    for u in monos {
        if !kept.iter().any(|g| g.divides(&u)) {
            kept.push(u);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing them.
    pub fn new(vars: impl Into<Arc<[String]>>, gens: Vec<Monomial>) -> Result<Self> {
        let vars = vars.into();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(bad) = gens.iter().find(|g| g.nvars() != vars.len()) {
            return Err(Error::VariableMismatch { expected: vars.len(), found: bad.nvars() });
        }
        Ok(Self::from_minimal(vars, minimalize(gens)))
    }

    /// Convenience constructor from exponent rows.
    pub fn from_exponents(vars: &[&str], rows: &[&[u32]]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        Self::new(vars, rows.iter().map(|r| Monomial::new(r.to_vec())).collect())
    }

    fn from_minimal(vars: Arc<[String]>, gens: Vec<Monomial>) -> Self {
        let max_gen_degree = gens.iter().map(Monomial::degree).max().unwrap_or(0);
        Self { vars, gens, max_gen_degree }
    }

    pub fn zero(vars: impl Into<Arc<[String]>>) -> Self {
        Self { vars: vars.into(), gens: Vec::new(), max_gen_degree: 0 }
    }

    pub fn unit(vars: impl Into<Arc<[String]>>) -> Self {
        let vars = vars.into();
        let one = Monomial::one(vars.len());
        Self::from_minimal(vars, vec![one])
    }

    /// The maximal ideal generated by all variables.
    pub fn maximal(vars: impl Into<Arc<[String]>>) -> Self {
        let vars = vars.into();
        let n = vars.len();
        Self::from_minimal(vars, minimalize((0..n).map(|t| Monomial::var(t, n)).collect()))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn shared_vars(&self) -> Arc<[String]> {
        self.vars.clone()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.max_gen_degree
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Membership: some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    pub fn try_contains(&self, u: &Monomial) -> Result<bool> {
        self.check_nvars(u.nvars())?;
        Ok(self.contains(u))
    }

    pub(crate) fn check_nvars(&self, found: usize) -> Result<()> {
        if found != self.nvars() {
            return Err(Error::VariableMismatch { expected: self.nvars(), found });
        }
        Ok(())
    }

    fn assert_same_ring(&self, other: &MonomialIdeal) {
        assert_eq!(self.nvars(), other.nvars(), "ideals live in different rings");
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.assert_same_ring(other);
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let all: Vec<Monomial> = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Self::from_minimal(self.vars.clone(), minimalize(all))
    }

    pub fn with_generator(&self, u: Monomial) -> MonomialIdeal {
        let mut all = self.gens.clone();
        all.push(u);
        Self::from_minimal(self.vars.clone(), minimalize(all))
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.mul(b));
            }
        }
        Self::from_minimal(self.vars.clone(), minimalize(all))
    }

    /// `self^n`, memoized in the global [`PowerCache`].
    pub fn power(&self, n: usize) -> Arc<MonomialIdeal> {
        PowerCache::global().power(self, n)
    }

    /// `(self : u)`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        assert_eq!(u.nvars(), self.nvars(), "monomial lives in a different ring");
        if self.is_zero() {
            return self.clone();
        }
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(u)).collect();
        Self::from_minimal(self.vars.clone(), minimalize(gens))
    }

    /// Exponent of the pure power of variable `t` among the generators, if any.
    pub fn pure_power_exponent(&self, t: usize) -> Option<u32> {
        self.gens.iter().filter_map(Monomial::as_pure_power).find(|&(v, _)| v == t).map(|(_, e)| e)
    }

    /// Primary to the homogeneous maximal ideal: every variable has a pure power inside.
    pub fn is_m_primary(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        (0..self.nvars()).all(|t| self.pure_power_exponent(t).is_some())
    }

    /// Componentwise maximum of the generator exponents.
    pub fn exponent_box(&self) -> Vec<u32> {
        let mut b = vec![0; self.nvars()];
        for g in &self.gens {
            for (bt, &e) in b.iter_mut().zip(g.exponents()) {
                *bt = (*bt).max(e);
            }
        }
        b
    }

    /// Substitutes 1 for every variable outside `keep`; the result lives in
    /// the ring on the kept variables.
    pub fn restrict(&self, keep: &[usize]) -> MonomialIdeal {
        let vars: Arc<[String]> = keep.iter().map(|&t| self.vars[t].clone()).collect();
        if self.is_zero() {
            return Self::zero(vars);
        }
        let gens = self.gens.iter().map(|g| g.restrict(keep)).collect();
        Self::from_minimal(vars, minimalize(gens))
    }

    /// Moves variable `t` to position `perm[t]`; variable names move along.
    pub fn permute(&self, perm: &[usize]) -> MonomialIdeal {
        let mut vars = vec![String::new(); self.nvars()];
        for (t, name) in self.vars.iter().enumerate() {
            vars[perm[t]] = name.clone();
        }
        let gens = self.gens.iter().map(|g| g.permute(perm)).collect();
        Self::from_minimal(vars.into(), minimalize(gens))
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.vars))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type PowerKey = (Arc<[String]>, Vec<Monomial>);

/// Memoized power ladders `K^0, K^1, ...`, one per ideal.
///
/// Readers share the lock; a missing power is computed outside the lock and
/// inserted under the write lock only if nobody got there first.
#[derive(Default)]
pub struct PowerCache {
    ladders: RwLock<HashMap<PowerKey, Vec<Arc<MonomialIdeal>>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CacheStats {
    pub ideals: usize,
    pub powers: usize,
    pub generators: usize,
    pub approx_bytes: usize,
}

impl PowerCache {
    pub fn global() -> &'static PowerCache {
        static CACHE: OnceLock<PowerCache> = OnceLock::new();
        CACHE.get_or_init(PowerCache::default)
    }

    pub fn power(&self, base: &MonomialIdeal, n: usize) -> Arc<MonomialIdeal> {
        if base.is_zero() {
            return Arc::new(if n == 0 { MonomialIdeal::unit(base.shared_vars()) } else { base.clone() });
        }
        let key: PowerKey = (base.shared_vars(), base.gens.clone());
        loop {
            let last = {
                let guard = self.ladders.read();
                match guard.get(&key) {
                    Some(ladder) if ladder.len() > n => return ladder[n].clone(),
                    Some(ladder) => Some((ladder.len() - 1, ladder.last().unwrap().clone())),
                    None => None,
                }
            };
            let mut fresh = Vec::new();
            // index in the ladder of fresh[0]
            let base_index = match last {
                None => {
                    fresh.push(Arc::new(MonomialIdeal::unit(base.shared_vars())));
                    fresh.push(Arc::new(base.clone()));
                    0
                }
                Some((k, top)) => {
                    fresh.push(top);
                    k
                }
            };
            while base_index + fresh.len() <= n {
                let next = fresh.last().unwrap().product(base);
                fresh.push(Arc::new(next));
            }
            let mut guard = self.ladders.write();
            let ladder = guard.entry(key.clone()).or_default();
            if base_index == 0 && ladder.is_empty() {
                ladder.extend(fresh);
            } else if base_index > 0 && ladder.len() == base_index + 1 {
                ladder.extend(fresh.into_iter().skip(1));
            }
        }
    }

    pub fn stats(&self) -> CacheStats {
        let guard = self.ladders.read();
        let mut stats = CacheStats { ideals: guard.len(), powers: 0, generators: 0, approx_bytes: 0 };
        for ((vars, _), ladder) in guard.iter() {
            stats.powers += ladder.len();
            for p in ladder {
                stats.generators += p.gens.len();
                stats.approx_bytes += p.gens.len() * (vars.len() * 4 + std::mem::size_of::<Monomial>());
            }
        }
        stats
    }

    pub fn clear(&self) {
        self.ladders.write().clear();
    }
}
