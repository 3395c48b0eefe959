//! Test-side oracles. Everything here works on raw exponent vectors with
//! brute-force enumeration and shares no code with the library beyond
//! reading an ideal's generator list.

#![allow(dead_code)]

use jcoef::{Monomial, MonomialIdeal};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Exps = Vec<u32>;

pub const NAMES: [&str; 4] = ["x", "y", "z", "w"];

pub fn ring(n: usize) -> Vec<String> {
    NAMES[..n].iter().map(|s| s.to_string()).collect()
}

pub fn ideal(n: usize, rows: &[Exps]) -> MonomialIdeal {
    MonomialIdeal::new(ring(n), rows.iter().cloned().map(Monomial::new).collect()).unwrap()
}

pub fn exps(ideal: &MonomialIdeal) -> Vec<Exps> {
    ideal.gens().iter().map(|g| g.exponents().to_vec()).collect()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimal(mut v: Vec<Exps>) -> Vec<Exps> {
    v.sort();
    v.dedup();
    let keep: Vec<bool> = (0..v.len()).map(|k| !v.iter().enumerate().any(|(l, w)| l != k && divides(w, &v[k]))).collect();
    v.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect()
}

/// Generators (minimalized) of the `j`-th power, by repeated products.
pub fn power(gens: &[Exps], n: usize, j: usize) -> Vec<Exps> {
    let mut acc = vec![vec![0; n]];
    for _ in 0..j {
        let mut next = Vec::new();
        for a in &acc {
            for g in gens {
                next.push(a.iter().zip(g).map(|(x, y)| x + y).collect());
            }
        }
        acc = minimal(next);
    }
    acc
}

pub fn member(gens: &[Exps], u: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, u))
}

/// Every exponent vector of total degree at most `d`.
pub fn all_up_to(n: usize, d: u32) -> Vec<Exps> {
    fn rec(n: usize, d: u32, prefix: &mut Exps, out: &mut Vec<Exps>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

fn deg(u: &[u32]) -> u32 {
    u.iter().sum()
}

/// `λ(I^j / (m^{i+1} I^j + I^{j+1}))` by listing monomials.
pub fn naive_h10(ideal: &MonomialIdeal, i: usize, j: usize) -> u64 {
    let n = ideal.nvars();
    let g = exps(ideal);
    let pj = power(&g, n, j);
    let pj1 = power(&g, n, j + 1);
    let top = i as u32 + pj.iter().map(|p| deg(p)).max().unwrap();
    let in_mk = |u: &[u32], k: usize| pj.iter().any(|p| divides(p, u) && deg(u) - deg(p) >= k as u32);
    all_up_to(n, top)
        .iter()
        .filter(|u| member(&pj, u) && !member(&pj1, u) && !in_mk(u, i + 1))
        .count() as u64
}

/// `λ(A / I^k)` for an `m`-primary ideal, listing the box below the pure powers.
pub fn naive_colength(ideal: &MonomialIdeal, k: usize) -> u64 {
    let n = ideal.nvars();
    let g = exps(ideal);
    let bounds: Vec<u32> = (0..n)
        .map(|t| g.iter().filter(|e| e.iter().enumerate().all(|(s, &v)| s == t || v == 0)).map(|e| e[t]).min().unwrap())
        .collect();
    let pk = power(&g, n, k);
    let mut count = 0;
    let mut u = vec![0u32; n];
    loop {
        if !member(&pk, &u) {
            count += 1;
        }
        let mut t = 0;
        loop {
            if t == n {
                return count;
            }
            u[t] += 1;
            if u[t] < bounds[t] * k as u32 {
                break;
            }
            u[t] = 0;
            t += 1;
        }
    }
}

pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for s in 0..k {
        r = r * (n - s) / (s + 1);
    }
    r
}

/// Solves a square rational system, returning `None` when singular.
pub fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in col..n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|r| &b[r] / &a[r][r]).collect())
}

/// Classical `e_0..e_d` of an `m`-primary ideal from
/// `λ(A/I^k) = Σ (-1)^m e_m C(k+d-1-m, d-m)`, fitted on `d+1` consecutive
/// values and accepted once it predicts the next three.
pub fn naive_classical(ideal: &MonomialIdeal, max_k: usize) -> Option<Vec<BigInt>> {
    let d = ideal.nvars() as i64;
    let values: Vec<BigInt> = (0..=max_k).map(|k| BigInt::from(naive_colength(ideal, k))).collect();
    let basis = |k: i64, m: i64| {
        let s = if m % 2 == 0 { 1 } else { -1 };
        binom(k + d - 1 - m, d - m) * s
    };
    for k0 in 1..=max_k.saturating_sub(d as usize + 3) {
        let a = (0..=d)
            .map(|r| (0..=d).map(|m| BigRational::from_integer(basis(k0 as i64 + r, m))).collect())
            .collect();
        let b = (0..=d as usize).map(|r| BigRational::from_integer(values[k0 + r].clone())).collect();
        let e = solve(a, b)?;
        let predicts = (d as usize + 1..d as usize + 4).all(|r| {
            let k = (k0 + r) as i64;
            let p: BigRational = (0..=d).map(|m| &e[m as usize] * BigRational::from_integer(basis(k, m))).sum();
            p == BigRational::from_integer(values[k0 + r].clone())
        });
        if predicts && e.iter().all(|v| v.is_integer()) {
            return Some(e.into_iter().map(|v| v.to_integer()).collect());
        }
    }
    None
}

/// `u ∈ Ī` witnessed by `u^r ∈ I^r` for some `r <= r_max`.
pub fn power_witness(gens: &[Exps], n: usize, u: &[u32], r_max: usize) -> Option<usize> {
    (1..=r_max).find(|&r| {
        let ur: Exps = u.iter().map(|e| e * r as u32).collect();
        member(&power(gens, n, r), &ur)
    })
}

/// Rank over the rationals of a list of integer vectors.
pub fn rank(rows: &[Exps]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in c..cols {
                    let v = &f * &m[rank][k];
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Exps {
    loop {
        let e: Exps = (0..n).map(|_| rng.gen_range(0..=max_deg)).collect();
        let d = deg(&e);
        if d >= 1 && d <= max_deg {
            return e;
        }
    }
}

/// A random `m`-primary ideal: a pure power of each variable plus a few
/// mixed monomials, all of degree at most `max_deg`.
pub fn random_m_primary(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> MonomialIdeal {
    let mut rows: Vec<Exps> = (0..n)
        .map(|t| {
            let mut e = vec![0; n];
            e[t] = rng.gen_range(1..=max_deg);
            e
        })
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        rows.push(random_monomial(rng, n, max_deg));
    }
    ideal(n, &rows)
}

/// A random ideal with one to four generators, not necessarily `m`-primary.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> MonomialIdeal {
    let rows: Vec<Exps> = (0..rng.gen_range(1..=4)).map(|_| random_monomial(rng, n, max_deg)).collect();
    ideal(n, &rows)
}

/// A random ideal generated in the single degree `degree`.
pub fn random_equigenerated(rng: &mut ChaCha8Rng, n: usize, degree: u32) -> MonomialIdeal {
    let all: Vec<Exps> = all_up_to(n, degree).into_iter().filter(|e| deg(e) == degree).collect();
    let count = rng.gen_range(1..=all.len().min(4));
    let rows: Vec<Exps> = (0..count).map(|_| all[rng.gen_range(0..all.len())].clone()).collect();
    ideal(n, &rows)
}
