//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness so the lines are always
//! printed: `cargo test -p jcoef-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use jcoef::analysis::{
    compare_localized, cq_cross_check, fci_contains, first_coefficient_ideal, height, integral_closure,
    is_reduction, PrimeScope,
};
use jcoef::hilbert::{h10_cell, tabulate, TCells};
use jcoef::invariants::{classical_coefficients, generalized_coefficients, h10_fit, h11_fit};
use jcoef::{FitConfig, MonomialIdeal};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome + 'a>);

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn example() -> (MonomialIdeal, MonomialIdeal) {
    let i = ideal(3, &[vec![5, 0, 0], vec![0, 3, 0], vec![1, 1, 2]]);
    let j = ideal(3, &[vec![5, 0, 0], vec![0, 3, 0], vec![1, 1, 2], vec![4, 2, 0]]);
    (i, j)
}

fn criterion_1(cfg: &FitConfig) -> Outcome {
    let (i, j) = example();
    let ri = generalized_coefficients(&i, cfg).map_err(|e| e.to_string())?;
    let rj = generalized_coefficients(&j, cfg).map_err(|e| e.to_string())?;
    for (name, r, j2) in [("I", &ri, [0, -1, 5]), ("J", &rj, [0, -1, 3])] {
        ensure(r.j[0] == big(&[30]), || format!("j0({name}) = {:?}", r.j[0]))?;
        ensure(r.j[1] == big(&[8, -32]), || format!("j1({name}) = {:?}", r.j[1]))?;
        ensure(r.j[2] == big(&j2), || format!("j2({name}) = {:?}", r.j[2]))?;
        ensure(r.analytic_spread == 3, || format!("analytic spread of {name} = {}", r.analytic_spread))?;
    }
    for (name, id) in [("I", &i), ("J", &j)] {
        let h = height(id).map_err(|e| e.to_string())?;
        ensure(h == 2, || format!("height({name}) = {h}"))?;
    }
    let fci = first_coefficient_ideal(&i, None, cfg).map_err(|e| e.to_string())?;
    ensure(fci.fci == j, || format!("fci = {}", fci.fci))?;
    ensure(fci.complete, || "fci result is flagged incomplete".into())?;
    Ok(format!("j0=30, j1=(8,-32), j2=(0,-1,5)/(0,-1,3), height 2, spread 3, fci = {}", fci.fci))
}

fn criterion_2(cfg: &FitConfig) -> Outcome {
    let (i, _) = example();
    let c1 = generalized_coefficients(&i, cfg).map_err(|e| e.to_string())?.c[1].clone();
    let cq = cq_cross_check(&i, cfg).map_err(|e| e.to_string())?;
    let local = ideal(2, &[vec![5, 0], vec![0, 3], vec![1, 1]]);
    let e0 = naive_classical(&local, 10).ok_or("enumeration oracle did not stabilize")?[0].clone();
    ensure(cq.q == 1, || format!("q = {}", cq.q))?;
    ensure(c1 == BigInt::from(8), || format!("c1 = {c1}"))?;
    ensure(cq.from_table == c1 && cq.from_formula == c1, || format!("{cq:?}"))?;
    ensure(e0 == c1, || format!("enumerated e0((x^5,y^3,xy)) = {e0}"))?;
    Ok("c1 = 8 from the table, from the prime-sum formula and from direct enumeration".into())
}

fn criterion_3(cfg: &FitConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for n in [2, 3] {
        for _ in 0..30 {
            let id = random_m_primary(rng, n, 4);
            let r = generalized_coefficients(&id, cfg).map_err(|e| format!("{id}: {e}"))?;
            let e = classical_coefficients(&id, cfg).map_err(|e| format!("{id}: {e}"))?.e;
            for (k, row) in r.j.iter().enumerate() {
                let mut expected = vec![BigInt::from(0); k + 1];
                expected[k] = if k % 2 == 0 { e[k].clone() } else { -e[k].clone() };
                ensure(*row == expected, || format!("{id}: j[{k}] = {row:?}, e = {e:?}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} random m-primary ideals in 2 and 3 variables"))
}

fn criterion_4(cfg: &FitConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut pairs = 0;
    let mut attempts = 0;
    while pairs < 30 {
        attempts += 1;
        if attempts > 2000 {
            return Err(format!("only {pairs} pairs found"));
        }
        let n = rng.gen_range(2..=3);
        let id = if rng.gen_bool(0.5) { random_m_primary(rng, n, 4) } else { random_ideal(rng, n, 4) };
        let closure = integral_closure(&id).map_err(|e| e.to_string())?;
        let extra: Vec<_> = closure.gens().iter().filter(|g| !id.contains(g)).cloned().collect();
        if extra.is_empty() {
            continue;
        }
        let u = extra[rng.gen_range(0..extra.len())].clone();
        ensure(power_witness(&exps(&id), n, u.exponents(), 8).is_some(), || format!("{u:?} not integral over {id}"))?;
        let bigger = id.with_generator(u);
        let a = generalized_coefficients(&id, cfg).map_err(|e| format!("{id}: {e}"))?;
        let b = generalized_coefficients(&bigger, cfg).map_err(|e| format!("{bigger}: {e}"))?;
        ensure(a.c == b.c, || format!("c({id}) = {:?} but c({bigger}) = {:?}", a.c, b.c))?;
        let red = is_reduction(&id, &bigger, 8).map_err(|e| e.to_string())?;
        ensure(red.is_reduction(), || format!("{id} is not found to reduce {bigger}"))?;
        pairs += 1;
    }
    Ok(format!("{pairs} pairs (I, I+(u)) with equal c and a reduction witness"))
}

fn criterion_5(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..20 {
        let n = rng.gen_range(1..=3);
        let id = random_ideal(rng, n, 3);
        let grid = tabulate(&TCells::new(id.clone()).map_err(|e| e.to_string())?, 5, 5, true, "")
            .map_err(|e| e.to_string())?;
        for i in 0..=5 {
            for j in 0..=5 {
                let want = BigInt::from(naive_h10(&id, i, j));
                let cell = h10_cell(&id, i, j).map_err(|e| e.to_string())?;
                ensure(cell == want, || format!("{id}: h10({i},{j}) = {cell}, oracle {want}"))?;
                ensure(*grid.get(i, j) == want, || format!("{id}: tabulated ({i},{j}) = {}", grid.get(i, j)))?;
            }
        }
    }
    Ok("20 random ideals, 36 cells each, direct and tabulated counts".into())
}

fn criterion_6(cfg: &FitConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut corpus = vec![example().0];
    corpus.extend((0..10).map(|_| {
        let n = rng.gen_range(2..=3);
        random_ideal(rng, n, 3)
    }));
    let mut checked = 0;
    for id in &corpus {
        let p10 = h10_fit(id, cfg).map_err(|e| format!("{id}: {e}"))?.poly;
        let p11 = h11_fit(id, cfg).map_err(|e| format!("{id}: {e}"))?.poly;
        let n = id.nvars();
        for k in 0..n {
            for l in 0..n - k {
                let (a, b) = (p11.coeff(k, l + 1), p10.coeff(k, l));
                ensure(a == b, || format!("{id}: a11[{k},{}] = {a} but a10[{k},{l}] = {b}", l + 1))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{} ideals, {checked} coefficient pairs", corpus.len()))
}

fn criterion_7(cfg: &FitConfig) -> Outcome {
    let i = ideal(2, &[vec![2, 0], vec![0, 2]]);
    let j = ideal(2, &[vec![2, 0], vec![1, 1], vec![0, 2]]);
    let contained = fci_contains(&i, &j, cfg).map_err(|e| e.to_string())?;
    ensure(!contained, || "fciContains reported true".into())?;
    let report = compare_localized(&i, &j, PrimeScope::MaximalOnly, cfg).map_err(|e| e.to_string())?;
    ensure(!report.verdict, || "comparison reported equality".into())?;
    let at_m = &report.per_prime[0];
    let left = at_m.left.as_ref().ok_or("missing value at m")?;
    let right = at_m.right.as_ref().ok_or("missing value at m")?;
    ensure(left.0 == right.0, || "j0 differs".into())?;
    ensure(left.1 == big(&[0, 0]) && right.1 == big(&[0, -1]), || format!("j1 = {:?} vs {:?}", left.1, right.1))?;
    Ok("not contained; j1 = (0,0) vs (0,-1) at the maximal ideal".into())
}

fn criterion_8(cfg: &FitConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let (i, j) = example();
    // (ideal, independently known analytic spread)
    let mut corpus: Vec<(MonomialIdeal, Option<usize>)> =
        vec![(i, Some(3)), (j, Some(3)), (ideal(2, &[vec![1, 0]]), Some(1))];
    for _ in 0..10 {
        let n = rng.gen_range(2..=3);
        corpus.push((random_m_primary(rng, n, 4), Some(n)));
    }
    for _ in 0..15 {
        let n = rng.gen_range(2..=3);
        let degree = rng.gen_range(1..=3);
        let id = random_equigenerated(rng, n, degree);
        let spread = rank(&exps(&id));
        corpus.push((id, Some(spread)));
    }
    for _ in 0..5 {
        let n = rng.gen_range(2..=3);
        corpus.push((random_ideal(rng, n, 3), None));
    }
    let mut deficient = 0;
    for (id, spread) in &corpus {
        let r = generalized_coefficients(id, cfg).map_err(|e| format!("{id}: {e}"))?;
        if let Some(s) = spread {
            ensure(r.analytic_spread == *s, || format!("{id}: spread {} but expected {s}", r.analytic_spread))?;
        }
        let nonzero = r.jmult != BigInt::from(0);
        ensure(nonzero == (r.analytic_spread == r.d), || format!("{id}: jmult {} with spread {}", r.jmult, r.analytic_spread))?;
        if !nonzero {
            deficient += 1;
        }
    }
    let principal = generalized_coefficients(&ideal(2, &[vec![1, 0]]), cfg).map_err(|e| e.to_string())?;
    ensure(principal.c == big(&[0, 1, 0]), || format!("c((x)) = {:?}", principal.c))?;
    Ok(format!("{} ideals, {deficient} with spread below d", corpus.len()))
}

fn main() -> ExitCode {
    let cfg = FitConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a636f6566);
    let criteria: Vec<Criterion> = vec![
        ("1 worked example reproduced", Box::new(|_| criterion_1(&cfg))),
        ("2 c1 cross-consistency", Box::new(|_| criterion_2(&cfg))),
        ("3 m-primary dictionary", Box::new(|r| criterion_3(&cfg, r))),
        ("4 reduction invariance", Box::new(|r| criterion_4(&cfg, r))),
        ("5 counting oracle equivalence", Box::new(criterion_5)),
        ("6 transform identity", Box::new(|r| criterion_6(&cfg, r))),
        ("7 negative control", Box::new(|_| criterion_7(&cfg))),
        ("8 j-multiplicity law", Box::new(|r| criterion_8(&cfg, r))),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run(&mut rng) {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
