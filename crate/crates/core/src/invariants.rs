//! The cyclic quotient singularity `Y(n,q)` as the toric variety of the cone
//! `⟨(1,0), (-q,n)⟩`, its continued-fraction invariants and the recognition
//! of T-singularities among two-dimensional cones.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::contfrac::{dual_chain, expand_hj};
use crate::error::{Error, Result};
use crate::lattice::{
    dual_cone, hilbert_basis, hilbert_basis_dual, normal_form_frame, pairing, Cone2, ExactRational, MVector, NVector,
};

/// `Y(n,q)` with `n >= 2`, `0 < q < n`, `gcd(n,q) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicQuotient {
    n: BigInt,
    q: BigInt,
}

impl CyclicQuotient {
    pub fn new(n: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        let q = q.into();
        if n < BigInt::from(2) {
            return Err(Error::OrderTooSmall);
        }
        if !q.is_positive() || q >= n {
            return Err(Error::ParameterOutOfRange);
        }
        if !n.gcd(&q).is_one() {
            return Err(Error::NotCoprime);
        }
        Ok(CyclicQuotient { n, q })
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `q⁻¹ mod n`, the parameter of the same cone with its rays swapped.
    pub fn q_inverse(&self) -> BigInt {
        let ext = self.q.extended_gcd(&self.n);
        ext.x.mod_floor(&self.n)
    }

    /// The representative with `q <= q⁻¹ mod n`.
    pub fn canonical(&self) -> CyclicQuotient {
        let inv = self.q_inverse();
        CyclicQuotient { n: self.n.clone(), q: inv.min(self.q.clone()) }
    }

    pub fn is_canonical(&self) -> bool {
        self.q <= self.q_inverse()
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y({},{})", self.n, self.q)
    }
}

pub fn cone_of(cq: &CyclicQuotient) -> Cone2 {
    Cone2::new(NVector::new(1, 0), NVector { x: -&cq.q, y: cq.n.clone() })
        .expect("(1,0) and (-q,n) are primitive and positively oriented")
}

/// Isomorphism type of a two-dimensional cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NormalForm {
    Smooth,
    Singular(CyclicQuotient),
}

pub fn normal_form(c: &Cone2) -> NormalForm {
    let g0 = (c.gen0().x.clone(), c.gen0().y.clone());
    let g1 = (c.gen1().x.clone(), c.gen1().y.clone());
    let (n, q, _) = normal_form_frame(&g0, &g1);
    if n.is_one() {
        NormalForm::Smooth
    } else {
        NormalForm::Singular(CyclicQuotient::new(n, q).expect("normal form of a cone is valid").canonical())
    }
}

/// Continued-fraction data and Hilbert bases of `Y(n,q)`.
///
/// `a_chain = (a_2, ..., a_{e-1})` expands `n/(n-q)` and drives the Hilbert
/// basis `w^1, ..., w^e` of the dual cone; `b_chain = (b_1, ..., b_r)` expands
/// `n/q` and drives the rays `v^0, ..., v^{r+1}` of the minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CqsInvariants {
    pub cq: CyclicQuotient,
    pub a_chain: Vec<BigInt>,
    pub b_chain: Vec<BigInt>,
    pub e: usize,
    pub w_points: Vec<MVector>,
    pub v_points: Vec<NVector>,
}

impl CqsInvariants {
    /// `a_i` for `2 <= i <= e-1`.
    pub fn a(&self, i: usize) -> &BigInt {
        &self.a_chain[i - 2]
    }

    /// `w^i` for `1 <= i <= e`.
    pub fn w(&self, i: usize) -> &MVector {
        &self.w_points[i - 1]
    }
}

pub fn invariants(cq: &CyclicQuotient) -> CqsInvariants {
    let n = cq.n();
    let q = cq.q();
    let a_chain = expand_hj(&ExactRational::new(n.clone(), n - q)).expect("n/(n-q) > 1");
    let b_chain = expand_hj(&ExactRational::new(n.clone(), q.clone())).expect("n/q > 1");

    let mut w_points = vec![MVector::new(0, 1), MVector::new(1, 1)];
    for a in &a_chain {
        let len = w_points.len();
        let next = &w_points[len - 1].scale(a) - &w_points[len - 2];
        w_points.push(next);
    }
    let mut v_points = vec![NVector::new(1, 0), NVector::new(0, 1)];
    for b in &b_chain {
        let len = v_points.len();
        let next = &v_points[len - 1].scale(b) - &v_points[len - 2];
        v_points.push(next);
    }

    let sigma = cone_of(cq);
    assert_eq!(w_points, hilbert_basis_dual(&dual_cone(&sigma)), "w-recursion disagrees with Hilbert basis");
    assert_eq!(v_points, hilbert_basis(&sigma), "v-recursion disagrees with Hilbert basis");
    debug_assert_eq!(dual_chain(&a_chain).as_ref(), Ok(&b_chain));

    CqsInvariants { cq: cq.clone(), e: w_points.len(), a_chain, b_chain, w_points, v_points }
}

/// The roof of a cone `⟨g0, g1⟩`: the primitive `w ∈ M` with
/// `⟨g0,w⟩ = ⟨g1,w⟩ = height > 0`, and the lattice length of `g1 - g0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Roof {
    pub normal: MVector,
    pub height: BigInt,
    pub length: BigInt,
}

pub fn roof(c: &Cone2) -> Roof {
    let diff = c.gen1() - c.gen0();
    let length = diff.lattice_length();
    let p = NVector { x: &diff.x / &length, y: &diff.y / &length };
    let mut normal = MVector { a: p.y.clone(), b: -&p.x };
    let mut height = pairing(c.gen0(), &normal);
    if height.is_negative() {
        normal = MVector { a: -normal.a, b: -normal.b };
        height = -height;
    }
    Roof { normal, height, length }
}

/// T-singularity classification of a cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TType {
    Smooth,
    T { milnor: BigInt, normal_form: CyclicQuotient },
    NotT { normal_form: CyclicQuotient },
}

impl TType {
    pub fn is_t_or_smooth(&self) -> bool {
        !matches!(self, TType::NotT { .. })
    }

    pub fn milnor(&self) -> Option<&BigInt> {
        match self {
            TType::T { milnor, .. } => Some(milnor),
            _ => None,
        }
    }
}

impl fmt::Display for TType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TType::Smooth => write!(f, "smooth"),
            TType::T { milnor, normal_form } => write!(f, "T{milnor} {normal_form}"),
            TType::NotT { normal_form } => write!(f, "non-T {normal_form}"),
        }
    }
}

/// A singular cone is a T-cone iff its roof height divides its roof length;
/// the Milnor number is then `length/height - 1`.
pub fn t_classify(c: &Cone2) -> TType {
    let nf = match normal_form(c) {
        NormalForm::Smooth => return TType::Smooth,
        NormalForm::Singular(cq) => cq,
    };
    let r = roof(c);
    if r.length.is_multiple_of(&r.height) {
        TType::T { milnor: &r.length / &r.height - 1, normal_form: nf }
    } else {
        TType::NotT { normal_form: nf }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nv(x: i64, y: i64) -> NVector {
        NVector::new(x, y)
    }

    fn cone(a: (i64, i64), b: (i64, i64)) -> Cone2 {
        Cone2::new(nv(a.0, a.1), nv(b.0, b.1)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    fn cq(n: i64, q: i64) -> CyclicQuotient {
        CyclicQuotient::new(n, q).unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert_eq!(CyclicQuotient::new(4, 2), Err(Error::NotCoprime));
        assert_eq!(CyclicQuotient::new(1, 0), Err(Error::OrderTooSmall));
        assert_eq!(CyclicQuotient::new(5, 5), Err(Error::ParameterOutOfRange));
        assert_eq!(CyclicQuotient::new(5, 0), Err(Error::ParameterOutOfRange));
        assert_eq!(Error::NotCoprime.to_string(), "gcd(n,q) must be 1");
    }

    #[test]
    fn cone_of_examples() {
        assert_eq!(cone_of(&cq(19, 7)), cone((1, 0), (-7, 19)));
        assert_eq!(cone_of(&cq(2, 1)), cone((1, 0), (-1, 2)));
        assert_eq!(cone_of(&cq(4, 1)), cone((1, 0), (-1, 4)));
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(normal_form(&cone((1, 0), (-7, 19))), NormalForm::Singular(cq(19, 7)));
        assert_eq!(normal_form(&cone((0, 1), (-4, 11))), NormalForm::Singular(cq(4, 1)));
        assert_eq!(normal_form(&cone((1, 0), (0, 1))), NormalForm::Smooth);
        // Y(19,11) is Y(19,7) with the rays swapped
        assert_eq!(normal_form(&cone_of(&cq(19, 11))), NormalForm::Singular(cq(19, 7)));
        assert_eq!(cq(19, 7).q_inverse(), BigInt::from(11));
    }

    #[test]
    fn invariants_examples() {
        let inv = invariants(&cq(19, 7));
        assert_eq!(inv.a_chain, ints(&[2, 3, 2, 3]));
        assert_eq!(inv.e, 6);
        assert_eq!(inv.b_chain, ints(&[3, 4, 2]));
        assert_eq!(inv.v_points, vec![nv(1, 0), nv(0, 1), nv(-1, 3), nv(-4, 11), nv(-7, 19)]);
        assert_eq!(inv.w(1), &MVector::new(0, 1));
        assert_eq!(inv.w(6), &MVector::new(19, 7));

        let inv = invariants(&cq(2, 1));
        assert_eq!(inv.a_chain, ints(&[2]));
        assert_eq!(inv.b_chain, ints(&[2]));
        assert_eq!(inv.e, 3);
    }

    #[test]
    fn t_classify_examples() {
        assert_eq!(t_classify(&cone((0, 1), (-4, 11))), TType::T { milnor: BigInt::from(0), normal_form: cq(4, 1) });
        assert_eq!(t_classify(&cone((1, 0), (-7, 19))), TType::NotT { normal_form: cq(19, 7) });
        assert_eq!(t_classify(&cone((0, 1), (2, 1))), TType::T { milnor: BigInt::from(1), normal_form: cq(2, 1) });
        assert_eq!(t_classify(&cone((1, 0), (0, 1))), TType::Smooth);
    }

    #[test]
    fn roof_of_sigma() {
        let r = roof(&cone((1, 0), (-7, 19)));
        assert_eq!(r.normal, MVector::new(19, 8));
        assert_eq!(r.height, BigInt::from(19));
        assert_eq!(r.length, BigInt::from(1));
    }

    #[test]
    fn a_n_is_t_with_full_milnor_number() {
        for n in 2..20i64 {
            let t = t_classify(&cone_of(&cq(n, n - 1)));
            assert_eq!(t, TType::T { milnor: BigInt::from(n - 1), normal_form: cq(n, n - 1) });
        }
    }
}
