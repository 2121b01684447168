//! P-resolutions of `Y(n,q)` indexed by zero chains.
//!
//! For an admissible chain `k ∈ K(Y)` with q-sequence `q_1, ..., q_e`, the
//! P-resolution is the fan whose cones `τ^1, ..., τ^e` have roofs on the
//! affine lines `[⟨•, w^i⟩ = q_i]`. Consecutive roof lines meet in the
//! vertices `u^1, ..., u^{e-1}`; since `{w^i, w^{i+1}}` is a lattice basis
//! of `M`, each vertex is an integral point.
//!
//! The roof over `τ^i` has lattice length `ℓ_i = (a_i - k_i) q_i`, the cone
//! collapses to a ray exactly when `k_i = a_i`, and the T-singularity
//! `Y_{τ^i}` has Milnor number `a_i - k_i - 1`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::contfrac::{q_sequence, zero_chains_bounded, Chain, QSequence};
use crate::error::{Error, Result};
use crate::invariants::{cone_of, invariants, t_classify, CqsInvariants, CyclicQuotient, TType};
use crate::lattice::{det2_m, interior_primitive_points, pairing, Cone2, MVector, NVector};
use crate::resolutions::{roof_sign, Fan, RoofSign};

/// The cone `τ^i = ⟨u^{i-1}, u^i⟩` assigned to `w^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRecord {
    /// `i` in `1..=e`; `1` and `e` are the boundary records.
    pub index: usize,
    pub w: MVector,
    /// `q_i`, the lattice height of the roof line.
    pub height: BigInt,
    /// `ℓ_i`, the lattice length of `u^i - u^{i-1}`.
    pub length: BigInt,
    pub left: NVector,
    pub right: NVector,
    pub degenerate: bool,
    pub ttype: Option<TType>,
    /// `a_i - k_i - 1`, absent on degenerate records.
    pub milnor: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PResolutionRecord {
    pub base: CyclicQuotient,
    pub chain: Chain,
    pub qseq: QSequence,
    pub fan: Fan,
    pub cones: Vec<ConeRecord>,
}

impl PResolutionRecord {
    /// The roof vertices `u^0, ..., u^e` including the repeated boundary ones.
    pub fn vertices(&self) -> Vec<NVector> {
        let mut v: Vec<NVector> = self.cones.iter().map(|c| c.left.clone()).collect();
        if let Some(last) = self.cones.last() {
            v.push(last.right.clone());
        }
        v
    }
}

/// `K(Y) = { k ∈ K_{e-2} : k_i <= a_i }` in lexicographic order.
pub fn admissible_chains(cq: &CyclicQuotient) -> Vec<Chain> {
    zero_chains_bounded(&invariants(cq).a_chain)
}

pub fn is_admissible(inv: &CqsInvariants, k: &Chain) -> bool {
    k.len() == inv.a_chain.len()
        && k.entries().iter().zip(&inv.a_chain).all(|(k, a)| !k.is_negative() && k <= a)
        && crate::contfrac::is_zero_chain(k)
}

/// Solves `⟨u, w0⟩ = h0`, `⟨u, w1⟩ = h1` for a unimodular pair `w0, w1`.
fn roof_intersection(w0: &MVector, h0: &BigInt, w1: &MVector, h1: &BigInt) -> NVector {
    let d = det2_m(w0, w1);
    debug_assert!(d.abs().is_one());
    let x = (h0 * &w1.b - h1 * &w0.b) / &d;
    let y = (&w0.a * h1 - &w1.a * h0) / &d;
    NVector { x, y }
}

pub fn build_presolution(cq: &CyclicQuotient, k: &Chain) -> Result<PResolutionRecord> {
    let inv = invariants(cq);
    if !is_admissible(&inv, k) {
        return Err(Error::InadmissibleChain);
    }
    let qseq = q_sequence(k)?;
    let e = inv.e;

    // u^1, ..., u^{e-1}; u^0 = u^1 and u^e = u^{e-1}
    let mut vertices = Vec::with_capacity(e + 1);
    for i in 1..e {
        vertices.push(roof_intersection(inv.w(i), qseq.q(i), inv.w(i + 1), qseq.q(i + 1)));
    }
    vertices.insert(0, vertices[0].clone());
    vertices.push(vertices[e - 1].clone());

    let mut cones = Vec::with_capacity(e);
    for i in 1..=e {
        let left = vertices[i - 1].clone();
        let right = vertices[i].clone();
        let length = (&right - &left).lattice_length();
        let degenerate = length.is_zero();
        let (ttype, milnor) = if degenerate {
            (None, None)
        } else {
            let cone = Cone2::new(left.clone(), right.clone())
                .map_err(|err| Error::Internal(format!("roof vertices of τ^{i} do not span a cone: {err}")))?;
            let milnor = inv.a(i) - k.k(i) - 1;
            (Some(t_classify(&cone)), Some(milnor))
        };
        cones.push(ConeRecord {
            index: i,
            w: inv.w(i).clone(),
            height: qseq.q(i).clone(),
            length,
            left,
            right,
            degenerate,
            ttype,
            milnor,
        });
    }

    let mut rays: Vec<NVector> = Vec::with_capacity(e);
    for v in vertices {
        if rays.last() != Some(&v) {
            rays.push(v);
        }
    }
    let fan = Fan::new(cq.clone(), rays).map_err(|err| Error::Internal(format!("P-resolution of {k}: {err}")))?;
    Ok(PResolutionRecord { base: cq.clone(), chain: k.clone(), qseq, fan, cones })
}

/// Outcome of checking one cone of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeCheck {
    pub left: NVector,
    pub right: NVector,
    pub ttype: TType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub cone_checks: Vec<ConeCheck>,
    pub roof_signs: Vec<RoofSign>,
    /// Interior rays of the fan not among the primitive points of `int Δ`.
    pub undominated_rays: Vec<NVector>,
    /// Violations of the per-record roof identities.
    pub consistency_failures: Vec<String>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn all_cones_t(&self) -> bool {
        self.cone_checks.iter().all(|c| c.ttype.is_t_or_smooth())
    }

    pub fn relatively_ample(&self) -> bool {
        self.roof_signs.iter().all(|s| *s == RoofSign::Positive)
    }

    pub fn dominated(&self) -> bool {
        self.undominated_rays.is_empty()
    }
}

/// Checks the T-cone, relative ampleness and domination conditions on the
/// fan, and the roof identities on the cone records.
pub fn verify_presolution(p: &PResolutionRecord) -> VerificationReport {
    let inv = invariants(&p.base);
    let fan = &p.fan;

    let cone_checks: Vec<ConeCheck> = fan
        .cones()
        .into_iter()
        .map(|c| ConeCheck { left: c.gen0().clone(), right: c.gen1().clone(), ttype: t_classify(&c) })
        .collect();
    let roof_signs: Vec<RoofSign> =
        (1..=fan.interior_count()).map(|j| roof_sign(fan, j).expect("index in range")).collect();

    let sigma = cone_of(&p.base);
    let interior: HashSet<NVector> = interior_primitive_points(sigma.gen0(), sigma.gen1()).into_iter().collect();
    let undominated_rays: Vec<NVector> =
        fan.interior_rays().iter().filter(|u| !interior.contains(*u)).cloned().collect();

    let mut failures = Vec::new();
    let e = inv.e;
    if p.cones.len() != e || p.chain.len() + 2 != e || p.qseq.len() != e {
        failures.push(format!("record sizes do not match e = {e}"));
    } else {
        for (c, i) in p.cones.iter().zip(1..) {
            let w = inv.w(i);
            let q = p.qseq.q(i);
            if c.index != i || &c.w != w || &c.height != q {
                failures.push(format!("τ^{i}: record labels disagree with w^{i} = {w}, q_{i} = {q}"));
            }
            if &pairing(&c.left, w) != q || &pairing(&c.right, w) != q {
                failures
                    .push(format!("τ^{i}: roof vertices {} and {} are not at height {q} over {w}", c.left, c.right));
            }
            let length = (&c.right - &c.left).lattice_length();
            if c.length != length || c.degenerate != length.is_zero() {
                failures.push(format!("τ^{i}: recorded length {} but roof has length {length}", c.length));
            }
            if (2..e).contains(&i) {
                let expected = (inv.a(i) - p.chain.k(i)) * q;
                if length != expected {
                    failures.push(format!("τ^{i}: roof length {length} differs from (a_i - k_i) q_i = {expected}"));
                }
                if c.degenerate != (inv.a(i) == p.chain.k(i)) {
                    failures.push(format!("τ^{i}: degeneracy does not match k_i = a_i"));
                }
                if let (Some(t), Some(m)) = (&c.ttype, &c.milnor) {
                    if m != &(inv.a(i) - p.chain.k(i) - 1) {
                        failures.push(format!("τ^{i}: recorded Milnor number {m} differs from a_i - k_i - 1"));
                    }
                    let agrees = match t {
                        TType::T { milnor, .. } => milnor == m,
                        TType::Smooth => m.is_zero(),
                        TType::NotT { .. } => false,
                    };
                    if !agrees {
                        failures.push(format!("τ^{i}: classified as {t}, expected Milnor number {m}"));
                    }
                }
            } else if !c.degenerate {
                failures.push(format!("boundary record τ^{i} is not degenerate"));
            }
        }
        let mut rays: Vec<NVector> = Vec::new();
        for v in p.vertices() {
            if rays.last() != Some(&v) {
                rays.push(v);
            }
        }
        if rays != fan.rays() {
            failures.push("fan rays differ from the roof vertices".to_string());
        }
    }

    let mut report =
        VerificationReport { cone_checks, roof_signs, undominated_rays, consistency_failures: failures, pass: false };
    report.pass = report.all_cones_t()
        && report.relatively_ample()
        && report.dominated()
        && report.consistency_failures.is_empty();
    report
}

/// `(i, a_i - k_i - 1)` for every non-degenerate interior cone.
pub fn milnor_numbers(p: &PResolutionRecord) -> Vec<(usize, BigInt)> {
    p.cones.iter().filter_map(|c| c.milnor.as_ref().map(|m| (c.index, m.clone()))).collect()
}

/// Subdivides each `τ^i` into `a_i - k_i` cones with roofs of length `q_i`.
pub fn m_resolution(p: &PResolutionRecord) -> Fan {
    let mut rays: BTreeSet<NVector> = p.fan.rays().iter().cloned().collect();
    for c in p.cones.iter().filter(|c| !c.degenerate) {
        let diff = &c.right - &c.left;
        let step = NVector { x: &diff.x / &c.length, y: &diff.y / &c.length };
        let pieces = &c.length / &c.height;
        let mut j = BigInt::one();
        while j < pieces {
            rays.insert(&c.left + &step.scale(&(&j * &c.height)));
            j += 1;
        }
    }
    Fan::from_ray_set(p.base.clone(), rays).expect("subdividing roofs keeps a valid fan")
}

/// Every P-resolution, in lexicographic chain order, each verified.
pub fn enumerate_presolutions(cq: &CyclicQuotient) -> Result<Vec<PResolutionRecord>> {
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<NVector>> = HashSet::new();
    for k in admissible_chains(cq) {
        let record = build_presolution(cq, &k)?;
        let report = verify_presolution(&record);
        if !report.pass {
            return Err(Error::Internal(format!("P-resolution of {cq} for chain {k} fails verification: {report:?}")));
        }
        if !seen.insert(record.fan.rays().to_vec()) {
            return Err(Error::Internal(format!("chain {k} repeats the fan of another chain")));
        }
        out.push(record);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolutions::minimal_resolution;

    fn nv(x: i64, y: i64) -> NVector {
        NVector::new(x, y)
    }

    fn cq(n: i64, q: i64) -> CyclicQuotient {
        CyclicQuotient::new(n, q).unwrap()
    }

    fn chain(c: &[i64]) -> Chain {
        Chain::from_slice(c)
    }

    #[test]
    fn admissible_examples() {
        assert_eq!(
            admissible_chains(&cq(19, 7)),
            vec![chain(&[1, 2, 2, 1]), chain(&[1, 3, 1, 2]), chain(&[2, 2, 1, 3])]
        );
        assert_eq!(admissible_chains(&cq(2, 1)), vec![chain(&[0])]);
        // Y(4,1): n/(n-q) = 4/3 = [2,2,2], so e = 5
        assert_eq!(admissible_chains(&cq(4, 1)), vec![chain(&[1, 2, 1]), chain(&[2, 1, 2])]);
        assert_eq!(admissible_chains(&cq(4, 3)), vec![chain(&[0])]);
    }

    #[test]
    fn build_examples() {
        let p = build_presolution(&cq(19, 7), &chain(&[1, 3, 1, 2])).unwrap();
        assert_eq!(p.fan.rays(), &[nv(1, 0), nv(0, 1), nv(-4, 11), nv(-7, 19)]);
        let p = build_presolution(&cq(19, 7), &chain(&[2, 2, 1, 3])).unwrap();
        assert_eq!(p.fan.rays(), &[nv(1, 0), nv(-1, 4), nv(-7, 19)]);

        let p = build_presolution(&cq(19, 7), &chain(&[1, 2, 2, 1])).unwrap();
        assert_eq!(p.fan.rays(), &[nv(1, 0), nv(0, 1), nv(-1, 3), nv(-7, 19)]);
        let last = p.cones.iter().find(|c| c.left == nv(-1, 3) && !c.degenerate).unwrap();
        assert_eq!(last.right, nv(-7, 19));
        assert_eq!((last.height.clone(), last.length.clone()), (BigInt::from(1), BigInt::from(2)));
        assert_eq!(last.ttype, Some(TType::T { milnor: BigInt::from(1), normal_form: cq(2, 1) }));
    }

    #[test]
    fn build_rejects_inadmissible() {
        let err = build_presolution(&cq(19, 7), &chain(&[2, 1, 2])).unwrap_err();
        assert_eq!(err.to_string(), "inadmissible chain");
        assert!(build_presolution(&cq(19, 7), &chain(&[1, 1, 3, 1])).is_err());
        assert!(build_presolution(&cq(4, 1), &chain(&[1, 1])).is_err());
    }

    #[test]
    fn degenerate_records() {
        let p = build_presolution(&cq(19, 7), &chain(&[1, 3, 1, 2])).unwrap();
        let degenerate: Vec<usize> = p.cones.iter().filter(|c| c.degenerate).map(|c| c.index).collect();
        assert_eq!(degenerate, vec![1, 3, 6]);
        assert!(p.cones[0].height.is_zero() && p.cones[5].height.is_zero());
    }

    #[test]
    fn verify_examples() {
        for k in admissible_chains(&cq(19, 7)) {
            let p = build_presolution(&cq(19, 7), &k).unwrap();
            assert!(verify_presolution(&p).pass, "{k}");
        }
        let p = build_presolution(&cq(2, 1), &chain(&[0])).unwrap();
        let report = verify_presolution(&p);
        assert!(report.pass);
        assert_eq!(p.fan.rays(), &[nv(1, 0), nv(-1, 2)]);
        assert_eq!(report.cone_checks[0].ttype, TType::T { milnor: BigInt::from(1), normal_form: cq(2, 1) });
        assert!(report.roof_signs.is_empty());
    }

    #[test]
    fn verify_rejects_mislabelled_fan() {
        let mut p = build_presolution(&cq(19, 7), &chain(&[1, 3, 1, 2])).unwrap();
        p.fan = Fan::new(cq(19, 7), vec![nv(1, 0), nv(0, 1), nv(-1, 4), nv(-7, 19)]).unwrap();
        let report = verify_presolution(&p);
        assert!(!report.pass);
        assert!(!report.consistency_failures.is_empty());
        assert!(!report.relatively_ample());
    }

    #[test]
    fn milnor_examples() {
        let m = |k: &[i64]| milnor_numbers(&build_presolution(&cq(19, 7), &chain(k)).unwrap());
        let zero = BigInt::zero;
        assert_eq!(m(&[1, 3, 1, 2]), vec![(2, zero()), (4, zero()), (5, zero())]);
        assert_eq!(m(&[1, 2, 2, 1]), vec![(2, zero()), (3, zero()), (5, BigInt::from(1))]);
        let p = build_presolution(&cq(2, 1), &chain(&[0])).unwrap();
        assert_eq!(milnor_numbers(&p), vec![(2, BigInt::from(1))]);
    }

    #[test]
    fn m_resolution_examples() {
        let p = build_presolution(&cq(19, 7), &chain(&[1, 2, 2, 1])).unwrap();
        assert_eq!(m_resolution(&p), minimal_resolution(&cq(19, 7)));
        let p = build_presolution(&cq(19, 7), &chain(&[1, 3, 1, 2])).unwrap();
        assert_eq!(m_resolution(&p), p.fan);
        let p = build_presolution(&cq(2, 1), &chain(&[0])).unwrap();
        assert_eq!(m_resolution(&p).rays(), &[nv(1, 0), nv(0, 1), nv(-1, 2)]);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_presolutions(&cq(19, 7)).unwrap().len(), 3);
        assert_eq!(enumerate_presolutions(&cq(2, 1)).unwrap().len(), 1);
        let p = enumerate_presolutions(&cq(4, 1)).unwrap();
        assert_eq!(p.len(), 2);
        // (2,1,2) keeps σ itself, which is already a T0-singularity
        assert_eq!(p[1].fan.interior_count(), 0);
        assert_eq!(p[1].cones[2].ttype, Some(TType::T { milnor: BigInt::zero(), normal_form: cq(4, 1) }));
        // (1,2,1) is the minimal resolution
        assert_eq!(p[0].fan, minimal_resolution(&cq(4, 1)));
    }
}
