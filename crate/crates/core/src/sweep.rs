//! Exhaustive consistency sweep over all `Y(n,q)` up to a bound.
//!
//! Every check compares a fast construction against a brute-force oracle or
//! against an identity the construction must satisfy. Checks return the list
//! of failures as human-readable strings; an empty list is a pass.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::contfrac::{dual_chain, enumerate_zero_chains, Chain};
use crate::invariants::{cone_of, invariants, t_classify, CyclicQuotient, TType};
use crate::lattice::{dual_cone, pairing, ExactRational, NVector};
use crate::oracle;
use crate::presolutions::{admissible_chains, build_presolution, m_resolution, verify_presolution, PResolutionRecord};
use crate::resolutions::{
    discrepancies, maximal_resolution, maximal_resolution_iterative, minimal_resolution, roof_sign, self_intersections,
    Fan, RoofSign,
};

/// All valid `Y(n,q)` with `2 <= n <= max_n`.
pub fn all_cyclic_quotients(max_n: u64) -> Vec<CyclicQuotient> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for q in 1..n {
            if n.gcd(&q) == 1 {
                out.push(CyclicQuotient::new(n, q).expect("coprime pair"));
            }
        }
    }
    out
}

fn ttype_in_family(t: &TType, family: &BTreeSet<(u64, u64)>) -> bool {
    match t {
        TType::Smooth => true,
        TType::T { normal_form, .. } | TType::NotT { normal_form } => {
            let key = (normal_form.n().to_u64().unwrap_or(u64::MAX), normal_form.q().to_u64().unwrap_or(u64::MAX));
            family.contains(&key)
        }
    }
}

/// Hilbert bases from the continued-fraction recursion against the
/// irreducible-element search, for both `σ` and `σ∨`.
pub fn check_hilbert_bases(cq: &CyclicQuotient) -> Vec<String> {
    let mut failures = Vec::new();
    let inv = invariants(cq);
    let sigma = cone_of(cq);
    if inv.v_points != oracle::brute_hilbert_basis(&sigma) {
        failures.push(format!("{cq}: Hilbert basis of σ differs from brute force"));
    }
    if inv.w_points != oracle::brute_hilbert_basis_dual(&dual_cone(&sigma)) {
        failures.push(format!("{cq}: Hilbert basis of σ∨ differs from brute force"));
    }
    if dual_chain(&inv.a_chain).as_ref() != Ok(&inv.b_chain) {
        failures.push(format!("{cq}: Riemenschneider duality fails"));
    }
    failures
}

fn alpha_recursion(f: &Fan) -> Result<(), String> {
    let c = self_intersections(f).map_err(|e| e.to_string())?;
    let d = discrepancies(f);
    for (j, cj) in c.iter().enumerate() {
        let lhs = &d.alphas[j] + &d.alphas[j + 2];
        let rhs = ExactRational::from_integer(cj.clone()) * &d.alphas[j + 1];
        if lhs != rhs {
            return Err(format!("α recursion fails at j = {}", j + 1));
        }
    }
    Ok(())
}

/// Direct and iterative maximal resolutions, minimal-resolution
/// self-intersections, and the α recursion on both full resolutions.
pub fn check_resolutions(cq: &CyclicQuotient) -> Vec<String> {
    let mut failures = Vec::new();
    let inv = invariants(cq);
    let min = minimal_resolution(cq);
    let max = maximal_resolution(cq);
    if max != maximal_resolution_iterative(cq) {
        failures.push(format!("{cq}: iterative maximal resolution differs"));
    }
    match self_intersections(&min) {
        Ok(c) if c == inv.b_chain => {}
        other => failures.push(format!("{cq}: minimal self-intersections {other:?} differ from b-chain")),
    }
    for (name, f) in [("minimal", &min), ("maximal", &max)] {
        if let Err(msg) = alpha_recursion(f) {
            failures.push(format!("{cq}: {name} resolution: {msg}"));
        }
    }
    failures
}

/// `0 < α_j < 1` on the maximal resolution, and its interior rays are
/// exactly the primitive points with `⟨v, R⟩ < 1`.
pub fn check_maximality(cq: &CyclicQuotient) -> Vec<String> {
    let mut failures = Vec::new();
    let max = maximal_resolution(cq);
    let d = discrepancies(&max);
    let zero = ExactRational::zero();
    let one = ExactRational::one();
    for (u, a) in max.interior_rays().iter().zip(&d.alphas[1..]) {
        if !(zero < *a && *a < one) {
            failures.push(format!("{cq}: α = {a} at ray {u} is not in (0,1)"));
        }
    }
    let used: BTreeSet<NVector> = max.interior_rays().iter().cloned().collect();
    let candidates = oracle::brute_interior_primitive_points(cq);
    if used != candidates {
        failures.push(format!("{cq}: maximal resolution rays differ from the primitive points of int Δ"));
    }
    failures
}

/// Theorem-level identities of one P-resolution record.
pub fn check_presolution(cq: &CyclicQuotient, p: &PResolutionRecord, family: &BTreeSet<(u64, u64)>) -> Vec<String> {
    let mut failures = Vec::new();
    let inv = invariants(cq);
    let k = &p.chain;
    let report = verify_presolution(p);
    if !report.pass {
        failures.push(format!("{cq} {k}: verification failed: {report:?}"));
    }
    for check in &report.cone_checks {
        if !ttype_in_family(&check.ttype, family) {
            failures.push(format!("{cq} {k}: cone ⟨{},{}⟩ is not in the T-family", check.left, check.right));
        }
    }
    let e = inv.e;
    for c in &p.cones {
        let i = c.index;
        let q = p.qseq.q(i);
        if !c.degenerate && (&pairing(&c.left, &c.w) != q || &pairing(&c.right, &c.w) != q) {
            failures.push(format!("{cq} {k}: roof height of τ^{i} is not q_{i}"));
        }
        if (2..e).contains(&i) && c.length != (inv.a(i) - k.k(i)) * q {
            failures.push(format!("{cq} {k}: ℓ_{i} ≠ (a_i - k_i) q_i"));
        }
    }
    for w in p.qseq.values().windows(2) {
        if !w[0].gcd(&w[1]).is_one() {
            failures.push(format!("{cq} {k}: consecutive q's {} {} not coprime", w[0], w[1]));
        }
    }
    let vertices = p.vertices();
    for i in 3..e {
        // u^{i-1} ⊥ w^i/q_i - w^{i-1}/q_{i-1}
        let (qa, qb) = (p.qseq.q(i - 1), p.qseq.q(i));
        if qa.is_zero() || qb.is_zero() {
            continue;
        }
        let u = &vertices[i - 1];
        if qa * pairing(u, inv.w(i)) != qb * pairing(u, inv.w(i - 1)) {
            failures.push(format!(
                "{cq} {k}: vertex u^{} not orthogonal to w^{i}/q_{i} - w^{}/q_{}",
                i - 1,
                i - 1,
                i - 1
            ));
        }
    }
    failures
}

/// M-resolution of a P-resolution: only smooth and T₀ cones, roof sign zero
/// exactly at inserted rays and positive elsewhere.
pub fn check_m_resolution(cq: &CyclicQuotient, p: &PResolutionRecord) -> Vec<String> {
    let mut failures = Vec::new();
    let m = m_resolution(p);
    let k = &p.chain;
    for c in m.cones() {
        match t_classify(&c) {
            TType::Smooth => {}
            TType::T { milnor, .. } if milnor.is_zero() => {}
            other => failures.push(format!("{cq} {k}: M-resolution cone ⟨{},{}⟩ is {other}", c.gen0(), c.gen1())),
        }
    }
    let original: HashSet<&NVector> = p.fan.rays().iter().collect();
    for (j, u) in m.rays().iter().enumerate().skip(1).take(m.interior_count()) {
        let sign = roof_sign(&m, j).expect("index in range");
        let expected = if original.contains(u) { RoofSign::Positive } else { RoofSign::Zero };
        if sign != expected {
            failures.push(format!("{cq} {k}: M-resolution roof sign at {u} is {sign}, expected {expected}"));
        }
    }
    failures
}

/// The chain `(1, 2, ..., 2, 1)` of length `m >= 2`.
pub fn rdp_chain(m: usize) -> Chain {
    let mut v = vec![BigInt::from(2); m];
    v[0] = BigInt::one();
    v[m - 1] = BigInt::one();
    Chain::new(v)
}

/// All P-resolutions of one singularity, checked; returns the records
/// together with failures (including fan collisions between chains).
pub fn check_all_presolutions(
    cq: &CyclicQuotient,
    family: &BTreeSet<(u64, u64)>,
) -> (Vec<PResolutionRecord>, Vec<String>) {
    let mut failures = Vec::new();
    let mut records = Vec::new();
    let mut fans: HashSet<Vec<NVector>> = HashSet::new();
    for k in admissible_chains(cq) {
        match build_presolution(cq, &k) {
            Ok(p) => {
                failures.extend(check_presolution(cq, &p, family));
                if !fans.insert(p.fan.rays().to_vec()) {
                    failures.push(format!("{cq} {k}: fan coincides with another chain's fan"));
                }
                records.push(p);
            }
            Err(err) => failures.push(format!("{cq} {k}: {err}")),
        }
    }
    (records, failures)
}

/// `K(Y)` from the pruned search against filtering all zero chains of the
/// same length; only run when `e - 2 <= max_len`.
pub fn check_admissible_chains(cq: &CyclicQuotient, max_len: usize) -> Vec<String> {
    let inv = invariants(cq);
    let m = inv.a_chain.len();
    if m > max_len {
        return Vec::new();
    }
    let expected: Vec<Chain> = enumerate_zero_chains(m)
        .into_iter()
        .filter(|k| k.entries().iter().zip(&inv.a_chain).all(|(k, a)| k <= a))
        .collect();
    if admissible_chains(cq) != expected {
        vec![format!("{cq}: admissible chains differ from filtered triangulation chains")]
    } else {
        Vec::new()
    }
}

/// T-classification of `σ` itself against the T-family.
pub fn check_t_classification(cq: &CyclicQuotient, family: &BTreeSet<(u64, u64)>) -> Vec<String> {
    let t = t_classify(&cone_of(cq));
    let canon = cq.canonical();
    let key = (canon.n().to_u64().unwrap_or(u64::MAX), canon.q().to_u64().unwrap_or(u64::MAX));
    if t.is_t_or_smooth() != family.contains(&key) {
        vec![format!("{cq}: t_classify says {t} but family membership is {}", family.contains(&key))]
    } else {
        Vec::new()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepSummary {
    pub singularities: usize,
    pub presolutions: usize,
    pub failures: Vec<String>,
}

/// Runs every check on every `Y(n,q)` with `n <= max_n`.
pub fn selftest(max_n: u64) -> SweepSummary {
    let family = oracle::t_singularity_family(max_n);
    let mut summary = SweepSummary::default();
    for cq in all_cyclic_quotients(max_n) {
        summary.singularities += 1;
        summary.failures.extend(check_hilbert_bases(&cq));
        summary.failures.extend(check_resolutions(&cq));
        summary.failures.extend(check_maximality(&cq));
        summary.failures.extend(check_t_classification(&cq, &family));
        summary.failures.extend(check_admissible_chains(&cq, 9));
        let (records, failures) = check_all_presolutions(&cq, &family);
        summary.failures.extend(failures);
        summary.presolutions += records.len();
        for p in &records {
            summary.failures.extend(check_m_resolution(&cq, p));
        }
        let e = invariants(&cq).e;
        if e > 3 {
            let rdp = rdp_chain(e - 2);
            match records.iter().find(|p| p.chain == rdp) {
                Some(p) if m_resolution(p) == minimal_resolution(&cq) => {}
                Some(_) => summary.failures.push(format!("{cq}: RDP M-resolution is not the minimal resolution")),
                None => summary.failures.push(format!("{cq}: RDP chain is not admissible")),
            }
        }
    }
    summary
}
