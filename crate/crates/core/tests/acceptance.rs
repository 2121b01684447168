//! Acceptance suite. Runs each criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cqsres_core::sweep::{
    all_cyclic_quotients, check_all_presolutions, check_hilbert_bases, check_m_resolution, check_maximality,
    check_resolutions, check_t_classification, rdp_chain,
};
use cqsres_core::{
    admissible_chains, build_presolution, discrepancies, enumerate_zero_chains, invariants, m_resolution,
    maximal_resolution, minimal_resolution, oracle, Chain, CyclicQuotient, ExactRational, NVector, RVector,
};

const SWEEP_N: u64 = 60;

fn nv(x: i64, y: i64) -> NVector {
    NVector::new(x, y)
}

fn rat(p: i64, q: i64) -> ExactRational {
    ExactRational::new(p.into(), q.into())
}

fn ints(v: &[i64]) -> Vec<num_bigint::BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

fn y19_7() -> CyclicQuotient {
    CyclicQuotient::new(19, 7).unwrap()
}

fn check(cond: bool, what: &str, failures: &mut Vec<String>) {
    if !cond {
        failures.push(what.to_string());
    }
}

fn within(start: Instant, limit: Duration, failures: &mut Vec<String>) {
    let took = start.elapsed();
    if took > limit {
        failures.push(format!("took {took:?}, limit {limit:?}"));
    }
}

fn maximal_y19_7() -> Vec<String> {
    let mut f = Vec::new();
    let start = Instant::now();
    let max = maximal_resolution(&y19_7());
    let d = discrepancies(&max);
    within(start, Duration::from_secs(1), &mut f);
    let rays = vec![nv(0, 1), nv(-1, 4), nv(-2, 7), nv(-1, 3), nv(-5, 14), nv(-4, 11)];
    check(max.interior_rays() == rays.as_slice(), "interior rays", &mut f);
    check(d.r_vector == RVector { a: rat(1, 1), b: rat(8, 19) }, "R = [1, 8/19]", &mut f);
    let alphas: Vec<ExactRational> = [8, 13, 18, 5, 17, 12].iter().map(|&p| rat(p, 19)).collect();
    check(d.alphas[1..d.alphas.len() - 1] == alphas[..], "α values", &mut f);
    f
}

fn presolutions_y19_7() -> Vec<String> {
    let mut f = Vec::new();
    let cq = y19_7();
    let expected =
        vec![Chain::from_slice(&[1, 2, 2, 1]), Chain::from_slice(&[1, 3, 1, 2]), Chain::from_slice(&[2, 2, 1, 3])];
    check(admissible_chains(&cq) == expected, "K(Y)", &mut f);
    let p = build_presolution(&cq, &expected[1]).unwrap();
    check(p.fan.interior_rays() == [nv(0, 1), nv(-4, 11)], "(1,3,1,2) rays", &mut f);
    check(p.qseq.q(3) == &1.into() && p.qseq.q(4) == &2.into(), "(1,3,1,2) q_3, q_4", &mut f);
    let p = build_presolution(&cq, &expected[2]).unwrap();
    check(p.fan.interior_rays() == [nv(-1, 4)], "(2,2,1,3) rays", &mut f);
    check(p.qseq.q(3) == &2.into() && p.qseq.q(4) == &3.into(), "(2,2,1,3) q_3, q_4", &mut f);
    f
}

fn invariants_y19_7() -> Vec<String> {
    let mut f = Vec::new();
    let inv = invariants(&y19_7());
    check(inv.e == 6, "e = 6", &mut f);
    check(inv.a_chain == ints(&[2, 3, 2, 3]), "a-chain", &mut f);
    check(inv.b_chain == ints(&[3, 4, 2]), "b-chain", &mut f);
    let direct = cqsres_core::expand_hj(&rat(19, 7)).unwrap();
    check(direct == inv.b_chain, "b-chain = expansion of 19/7", &mut f);
    f
}

fn catalan_counts() -> Vec<String> {
    let mut f = Vec::new();
    let start = Instant::now();
    for (m, count) in (1..=7).zip([1, 1, 2, 5, 14, 42, 132]) {
        let tri = enumerate_zero_chains(m);
        let brute = oracle::exhaustive_zero_chains(m, m as i64 + 1);
        check(tri.len() == count, &format!("|K_{m}| = {}, expected {count}", tri.len()), &mut f);
        check(tri == brute, &format!("K_{m}: triangulations and exhaustive search differ"), &mut f);
    }
    within(start, Duration::from_secs(10), &mut f);
    f
}

/// Failures from the sweep, one bucket per sweep-level criterion.
#[derive(Default)]
struct Sweep {
    presolutions: Vec<String>,
    oracles: Vec<String>,
    m_resolutions: Vec<String>,
    maximality: Vec<String>,
}

fn sweep() -> Sweep {
    let start = Instant::now();
    let family = oracle::t_singularity_family(SWEEP_N);
    let mut s = Sweep::default();
    for cq in all_cyclic_quotients(SWEEP_N) {
        s.oracles.extend(check_hilbert_bases(&cq));
        s.oracles.extend(check_resolutions(&cq));
        s.oracles.extend(check_t_classification(&cq, &family));
        s.maximality.extend(check_maximality(&cq));
        let (records, failures) = check_all_presolutions(&cq, &family);
        s.presolutions.extend(failures);
        for p in &records {
            s.m_resolutions.extend(check_m_resolution(&cq, p));
        }
        let e = invariants(&cq).e;
        if e > 3 {
            let rdp = rdp_chain(e - 2);
            match records.iter().find(|p| p.chain == rdp) {
                Some(p) if m_resolution(p) == minimal_resolution(&cq) => {}
                _ => s.m_resolutions.push(format!("{cq}: RDP M-resolution is not the minimal resolution")),
            }
        }
    }
    within(start, Duration::from_secs(120), &mut s.presolutions);
    s
}

fn main() -> ExitCode {
    let mut results: Vec<(&str, Vec<String>)> = vec![
        ("1 maximal resolution of Y(19,7)", maximal_y19_7()),
        ("2 P-resolutions of Y(19,7)", presolutions_y19_7()),
        ("3 invariants of Y(19,7)", invariants_y19_7()),
        ("4 zero chains counted by Catalan numbers", catalan_counts()),
    ];
    let s = sweep();
    results.push(("5 P-resolution sweep n <= 60", s.presolutions));
    results.push(("6 oracle equivalences n <= 60", s.oracles));
    results.push(("7 M-resolutions n <= 60", s.m_resolutions));
    results.push(("8 maximality n <= 60", s.maximality));

    let mut ok = true;
    for (name, failures) in &results {
        if failures.is_empty() {
            println!("PASS {name}");
        } else {
            ok = false;
            let shown: BTreeSet<&String> = failures.iter().take(5).collect();
            println!("FAIL {name}: {} failure(s), e.g. {shown:?}", failures.len());
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
