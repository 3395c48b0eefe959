//! Subcommand implementations. Each returns the text for stdout, any
//! diagnostics for stderr, and the exit status.

use jcoef::analysis::{
    compare_localized, cq_cross_check, fci_contains, first_coefficient_ideal, is_reduction, localize,
    MonomialPrime, PrimeScope, ReductionOutcome,
};
use jcoef::hilbert::{h10_cell, sum_transform_j, tabulate, BigradedTable, TCells, TableKind};
use jcoef::invariants::{classical_coefficients, dimension_of_n, generalized_coefficients, NDimension};
use jcoef::{Error, FitConfig, Monomial, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_UNSTABLE: u8 = 2;
pub const EXIT_FALSE: u8 = 3;

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Unstable(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Unstable(_) => EXIT_UNSTABLE,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e.root() {
            Error::NoStabilization { .. }
            | Error::NotYetPolynomial { .. }
            | Error::NonIntegerCoefficient { .. }
            | Error::VerificationFailed(_) => Failure::Unstable(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub code: u8,
}

impl Outcome {
    fn json(value: &Value, code: u8) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("JSON values always serialize");
        stdout.push('\n');
        Self { stdout, stderr: Vec::new(), code }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.stderr.push(note.into());
        self
    }
}

pub type CommandResult = Result<Outcome, Failure>;

fn verdict_code(verdict: bool) -> u8 {
    if verdict {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn same_ring(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<(), Failure> {
    if a.vars() == b.vars() {
        Ok(())
    } else {
        Err(Failure::Input(format!(
            "ideals live in different rings: [{}] vs [{}]",
            a.vars().join(" "),
            b.vars().join(" ")
        )))
    }
}

fn require_subideal(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<(), Failure> {
    same_ring(i, j)?;
    if i.is_subset_of(j) {
        Ok(())
    } else {
        Err(Failure::Input(format!("{i} is not contained in {j}")))
    }
}

fn spaced(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.gens().iter().map(|g| g.display_spaced(ideal.vars()).to_string()).collect()
}

pub fn coeffs(ideal: &MonomialIdeal, cfg: &FitConfig) -> CommandResult {
    let report = generalized_coefficients(ideal, cfg)?;
    Ok(Outcome::json(&report.to_json(), EXIT_OK))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

pub fn table(
    ideal: &MonomialIdeal,
    kind: TableKind,
    i_max: usize,
    j_max: usize,
    format: TableFormat,
    cfg: &FitConfig,
) -> CommandResult {
    let cells = TCells::new(ideal.clone())?;
    let h10 = tabulate(&cells, i_max, j_max, cfg.parallel, ideal.to_string())?;
    let t: BigradedTable = match kind {
        TableKind::H10 => h10,
        TableKind::H11 => sum_transform_j(&h10)?,
    };
    Ok(match format {
        TableFormat::Csv => Outcome { stdout: t.to_csv(), stderr: Vec::new(), code: EXIT_OK },
        TableFormat::Json => Outcome::json(&t.to_json(), EXIT_OK),
    })
}

pub fn fci(ideal: &MonomialIdeal, d_bound: Option<u32>, cfg: &FitConfig) -> CommandResult {
    if let Some(d) = d_bound {
        if d < ideal.max_gen_degree() {
            return Err(Failure::Input(format!(
                "--dbound {d} is below the largest generator degree {}",
                ideal.max_gen_degree()
            )));
        }
    }
    let r = first_coefficient_ideal(ideal, d_bound, cfg)?;
    let out = Outcome::json(&r.to_json(), EXIT_OK);
    Ok(if r.complete {
        out
    } else {
        out.with_note(format!("a new generator has degree {}; raise --dbound to search further", r.degree_bound))
    })
}

pub fn contains(i: &MonomialIdeal, j: &MonomialIdeal, cfg: &FitConfig) -> CommandResult {
    require_subideal(i, j)?;
    let dim = dimension_of_n(i, j, cfg)?;
    let verdict = fci_contains(i, j, cfg)?;
    let dim_json = match dim {
        NDimension::Zero => Value::Null,
        NDimension::Dim(k) => json!(k),
    };
    Ok(Outcome::json(
        &json!({ "contains": verdict, "dim_n": dim_json, "dim_ring": i.nvars() }),
        verdict_code(verdict),
    ))
}

pub fn compare(i: &MonomialIdeal, j: &MonomialIdeal, all_primes: bool, cfg: &FitConfig) -> CommandResult {
    require_subideal(i, j)?;
    let scope = if all_primes { PrimeScope::AllMonomial } else { PrimeScope::MaximalOnly };
    let report = compare_localized(i, j, scope, cfg)?;
    Ok(Outcome::json(&report.to_json(), verdict_code(report.verdict)))
}

pub fn reduction(j: &MonomialIdeal, i: &MonomialIdeal, n_max: usize) -> CommandResult {
    same_ring(j, i)?;
    if !j.is_subset_of(i) {
        return Err(Failure::Input(format!("{j} is not contained in {i}")));
    }
    let outcome = is_reduction(j, i, n_max)?;
    let value = serde_json::to_value(outcome).expect("outcome serializes");
    Ok(match outcome {
        ReductionOutcome::Reduction { .. } => Outcome::json(&value, EXIT_OK),
        ReductionOutcome::InconclusiveNegative { n_max } => {
            Outcome::json(&value, EXIT_FALSE).with_note(format!("inconclusive-negative, nmax={n_max}"))
        }
    })
}

pub fn localize_at(ideal: &MonomialIdeal, prime: &str) -> CommandResult {
    let p = MonomialPrime::parse(prime, ideal.vars())?;
    let local = localize(ideal, &p);
    Ok(Outcome::json(
        &json!({
            "prime": p.names(ideal.vars()),
            "vars": local.vars(),
            "gens": spaced(&local),
            "unit": local.is_unit(),
        }),
        EXIT_OK,
    ))
}

fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let n = rng.gen_range(2..=3);
    let names = ["x", "y", "z"];
    let count = rng.gen_range(1..=4);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| loop {
            let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            if exps.iter().any(|&e| e > 0) && exps.iter().sum::<u32>() <= 4 {
                break Monomial::new(exps);
            }
        })
        .collect();
    let vars: Vec<String> = names[..n].iter().map(|s| s.to_string()).collect();
    MonomialIdeal::new(vars, gens).expect("generators are nonempty")
}

/// Randomized consistency checks, reproducible from `seed`: the fast grid
/// against the literal length count, the `m`-primary dictionary
/// `j[k] = (0,…,0,(-1)^k e_k)`, and `c_q` against multiplicities at minimal
/// primes.
pub fn selfcheck(seed: u64, count: usize, cfg: &FitConfig) -> CommandResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checks = 0usize;
    for _ in 0..count {
        let ideal = random_ideal(&mut rng);
        let cells = TCells::new(ideal.clone())?;
        let grid = tabulate(&cells, 3, 3, cfg.parallel, ideal.to_string())?;
        for i in 0..=3 {
            for j in 0..=3 {
                checks += 1;
                if *grid.get(i, j) != h10_cell(&ideal, i, j)? {
                    failures.push(format!("{ideal}: h10({i},{j}) differs from the direct count"));
                }
            }
        }
        let report = generalized_coefficients(&ideal, cfg)?;
        if ideal.is_m_primary() {
            checks += 1;
            let e = classical_coefficients(&ideal, cfg)?.e;
            for (k, row) in report.j.iter().enumerate() {
                let mut expected = vec![0.into(); k + 1];
                expected[k] = if k % 2 == 0 { e[k].clone() } else { -e[k].clone() };
                if *row != expected {
                    failures.push(format!("{ideal}: j[{k}] = {row:?}, expected {expected:?}"));
                }
            }
        }
        checks += 1;
        let cq = cq_cross_check(&ideal, cfg)?;
        if !cq.agrees() {
            failures.push(format!("{ideal}: c_{} is {} but the prime sum is {}", cq.q, cq.from_table, cq.from_formula));
        }
    }
    let ok = failures.is_empty();
    Ok(Outcome::json(&json!({ "seed": seed, "ideals": count, "checks": checks, "failures": failures }), verdict_code(ok)))
}
