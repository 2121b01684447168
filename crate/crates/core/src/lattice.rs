//! Exact two-dimensional lattice geometry.
//!
//! Points of the lattice `N` (where cones and fans live) and of the dual
//! lattice `M` are distinct types; [`pairing`] is the only operation that
//! mixes them. Everything is computed with unbounded integers or reduced
//! fractions, there is no floating point anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::contfrac::expand_hj;
use crate::error::{Error, Result};

/// Unbounded reduced fraction with positive denominator.
pub type ExactRational = BigRational;

/// A point of the lattice `N`, written `(x,y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NVector {
    pub x: BigInt,
    pub y: BigInt,
}

/// A point of the dual lattice `M`, written `[a,b]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MVector {
    pub a: BigInt,
    pub b: BigInt,
}

/// A rational point of `M ⊗ Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RVector {
    pub a: ExactRational,
    pub b: ExactRational,
}

fn is_primitive_pair(x: &BigInt, y: &BigInt) -> bool {
    x.gcd(y).is_one()
}

impl NVector {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        NVector { x: x.into(), y: y.into() }
    }

    pub fn zero() -> Self {
        NVector::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_primitive(&self) -> bool {
        is_primitive_pair(&self.x, &self.y)
    }

    /// Lattice length of the vector: the gcd of its coordinates.
    pub fn lattice_length(&self) -> BigInt {
        self.x.gcd(&self.y)
    }

    pub fn scale(&self, k: &BigInt) -> NVector {
        NVector { x: &self.x * k, y: &self.y * k }
    }
}

impl MVector {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        MVector { a: a.into(), b: b.into() }
    }

    pub fn is_primitive(&self) -> bool {
        is_primitive_pair(&self.a, &self.b)
    }

    pub fn scale(&self, k: &BigInt) -> MVector {
        MVector { a: &self.a * k, b: &self.b * k }
    }

    pub fn to_rational(&self) -> RVector {
        RVector { a: ExactRational::from_integer(self.a.clone()), b: ExactRational::from_integer(self.b.clone()) }
    }
}

impl RVector {
    pub fn new(a: ExactRational, b: ExactRational) -> Self {
        RVector { a, b }
    }

    /// `⟨u, self⟩` extended rationally.
    pub fn pair(&self, u: &NVector) -> ExactRational {
        &self.a * ExactRational::from_integer(u.x.clone()) + &self.b * ExactRational::from_integer(u.y.clone())
    }
}

impl fmt::Display for NVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Display for MVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

impl fmt::Display for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

impl<'a> Add<&'a NVector> for &'a NVector {
    type Output = NVector;
    fn add(self, rhs: &NVector) -> NVector {
        NVector { x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
}

impl<'a> Sub<&'a NVector> for &'a NVector {
    type Output = NVector;
    fn sub(self, rhs: &NVector) -> NVector {
        NVector { x: &self.x - &rhs.x, y: &self.y - &rhs.y }
    }
}

impl<'a> Mul<&'a NVector> for &'a BigInt {
    type Output = NVector;
    fn mul(self, rhs: &NVector) -> NVector {
        rhs.scale(self)
    }
}

impl<'a> Add<&'a MVector> for &'a MVector {
    type Output = MVector;
    fn add(self, rhs: &MVector) -> MVector {
        MVector { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a MVector> for &'a MVector {
    type Output = MVector;
    fn sub(self, rhs: &MVector) -> MVector {
        MVector { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

/// The natural pairing `⟨u, w⟩` between `N` and `M`.
pub fn pairing(u: &NVector, w: &MVector) -> BigInt {
    &u.x * &w.a + &u.y * &w.b
}

/// The primitive lattice vector on the ray through `v`.
pub fn primitive(v: &NVector) -> Result<NVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = v.lattice_length();
    Ok(NVector { x: &v.x / &g, y: &v.y / &g })
}

pub fn det2(u: &NVector, v: &NVector) -> BigInt {
    &u.x * &v.y - &u.y * &v.x
}

pub fn det2_m(u: &MVector, v: &MVector) -> BigInt {
    &u.a * &v.b - &u.b * &v.a
}

/// Angular order of two vectors inside a strictly convex cone.
pub fn angle_cmp(u: &NVector, v: &NVector) -> Ordering {
    let d = det2(u, v);
    if d.is_positive() {
        Ordering::Less
    } else if d.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// A two-dimensional strictly convex cone in `N_R`, stored positively
/// oriented: `det2(gen0, gen1) > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone2 {
    gen0: NVector,
    gen1: NVector,
}

impl Cone2 {
    /// Builds the cone spanned by two primitive vectors, swapping them if
    /// they are negatively oriented.
    pub fn new(u: NVector, v: NVector) -> Result<Self> {
        if !u.is_primitive() || !v.is_primitive() {
            return Err(Error::NonPrimitiveGenerator);
        }
        let d = det2(&u, &v);
        if d.is_zero() {
            return Err(Error::DegenerateCone);
        }
        if d.is_positive() {
            Ok(Cone2 { gen0: u, gen1: v })
        } else {
            Ok(Cone2 { gen0: v, gen1: u })
        }
    }

    pub fn gen0(&self) -> &NVector {
        &self.gen0
    }

    pub fn gen1(&self) -> &NVector {
        &self.gen1
    }

    /// Index of the sublattice spanned by the generators.
    pub fn index(&self) -> BigInt {
        det2(&self.gen0, &self.gen1)
    }

    /// Whether `v` lies in the closed cone.
    pub fn contains(&self, v: &NVector) -> bool {
        !det2(&self.gen0, v).is_negative() && !det2(v, &self.gen1).is_negative()
    }

    /// Whether `v` lies in the open cone.
    pub fn contains_strictly(&self, v: &NVector) -> bool {
        det2(&self.gen0, v).is_positive() && det2(v, &self.gen1).is_positive()
    }
}

/// A two-dimensional cone in `M_R` given by two primitive generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualCone2 {
    gen0: MVector,
    gen1: MVector,
}

impl DualCone2 {
    pub fn new(gen0: MVector, gen1: MVector) -> Result<Self> {
        if !gen0.is_primitive() || !gen1.is_primitive() {
            return Err(Error::NonPrimitiveGenerator);
        }
        if det2_m(&gen0, &gen1).is_zero() {
            return Err(Error::DegenerateCone);
        }
        Ok(DualCone2 { gen0, gen1 })
    }

    pub fn gen0(&self) -> &MVector {
        &self.gen0
    }

    pub fn gen1(&self) -> &MVector {
        &self.gen1
    }
}

/// The dual cone, with `gen0` vanishing on `c.gen0()` and `gen1` on `c.gen1()`.
pub fn dual_cone(c: &Cone2) -> DualCone2 {
    let g0 = c.gen0();
    let g1 = c.gen1();
    DualCone2 { gen0: MVector { a: -&g0.y, b: g0.x.clone() }, gen1: MVector { a: g1.y.clone(), b: -&g1.x } }
}

type Pair = (BigInt, BigInt);

fn det_pair(u: &Pair, v: &Pair) -> BigInt {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// A unimodular coordinate change taking a positively oriented primitive
/// pair `(g0, g1)` to `(1,0), (-q, n)` with `0 <= q < n`.
///
/// Returns `(n, q, h)` where `h` is the image of `(0,1)`, so that the
/// normal-form point `(x, y)` corresponds to `x*g0 + y*h`.
pub(crate) fn normal_form_frame(g0: &Pair, g1: &Pair) -> (BigInt, BigInt, Pair) {
    let ext = g0.0.extended_gcd(&g0.1);
    debug_assert!(ext.gcd.is_one());
    // s*x + t*y = 1, so h = (-t, s) has det(g0, h) = 1
    let h: Pair = (-ext.y, ext.x);
    let n = det_pair(g0, g1);
    let x = det_pair(g1, &h);
    let q = (-&x).mod_floor(&n);
    let t = (&x + &q) / &n;
    let h = (&h.0 + &t * &g0.0, &h.1 + &t * &g0.1);
    (n, q, h)
}

/// Hilbert basis of the positively oriented cone spanned by primitive
/// `g0`, `g1`, walking from `g0` to `g1`.
fn hilbert_basis_pairs(g0: &Pair, g1: &Pair) -> Vec<Pair> {
    let (n, q, h) = normal_form_frame(g0, g1);
    if n.is_one() {
        return vec![g0.clone(), g1.clone()];
    }
    let chain = expand_hj(&ExactRational::new(n, q)).expect("n/q > 1 for 0 < q < n");
    // v^{j+1} = b_j v^j - v^{j-1}, starting from (1,0), (0,1) in normal-form coordinates
    let mut coords: Vec<Pair> = vec![(BigInt::one(), BigInt::zero()), (BigInt::zero(), BigInt::one())];
    for b in &chain {
        let len = coords.len();
        let (prev, cur) = (&coords[len - 2], &coords[len - 1]);
        let next = (b * &cur.0 - &prev.0, b * &cur.1 - &prev.1);
        coords.push(next);
    }
    let out: Vec<Pair> = coords.iter().map(|(x, y)| (x * &g0.0 + y * &h.0, x * &g0.1 + y * &h.1)).collect();
    debug_assert_eq!(out.last(), Some(g1));
    out
}

pub fn hilbert_basis(c: &Cone2) -> Vec<NVector> {
    let g0 = (c.gen0.x.clone(), c.gen0.y.clone());
    let g1 = (c.gen1.x.clone(), c.gen1.y.clone());
    hilbert_basis_pairs(&g0, &g1).into_iter().map(|(x, y)| NVector { x, y }).collect()
}

/// Hilbert basis of `(c ∩ M)`, ordered from `c.gen0()` to `c.gen1()`.
pub fn hilbert_basis_dual(c: &DualCone2) -> Vec<MVector> {
    let g0 = (c.gen0.a.clone(), c.gen0.b.clone());
    let g1 = (c.gen1.a.clone(), c.gen1.b.clone());
    let pairs = if det_pair(&g0, &g1).is_positive() {
        hilbert_basis_pairs(&g0, &g1)
    } else {
        let mut v = hilbert_basis_pairs(&g1, &g0);
        v.reverse();
        v
    };
    pairs.into_iter().map(|(a, b)| MVector { a, b }).collect()
}

/// Open half-plane `A*x + B*y + C > 0`.
struct HalfPlane {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl HalfPlane {
    /// Points strictly on the left of the directed line `from -> to`.
    fn left_of(from: &NVector, to: &NVector) -> Self {
        // det(to - from, v - from) > 0
        let dx = &to.x - &from.x;
        let dy = &to.y - &from.y;
        HalfPlane { a: -&dy, b: dx.clone(), c: &dy * &from.x - &dx * &from.y }
    }

    #[cfg(test)]
    fn contains(&self, v: &NVector) -> bool {
        (&self.a * &v.x + &self.b * &v.y + &self.c).is_positive()
    }
}

/// All lattice points strictly inside the triangle `conv(0, p, r)`,
/// in angular order from `p` to `r`, then by distance from the origin.
pub fn interior_lattice_points(p: &NVector, r: &NVector) -> Vec<NVector> {
    let o = NVector::zero();
    let (p, r) = if det2(p, r).is_negative() { (r, p) } else { (p, r) };
    let planes = [HalfPlane::left_of(&o, p), HalfPlane::left_of(p, r), HalfPlane::left_of(r, &o)];
    let xs = [BigInt::zero(), p.x.clone(), r.x.clone()];
    let xmin = xs.iter().min().unwrap().clone();
    let xmax = xs.iter().max().unwrap().clone();
    let mut out = Vec::new();
    let mut x = xmin;
    while x <= xmax {
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        let mut empty = false;
        for hp in &planes {
            // b*y > -(a*x + c)
            let rhs = -(&hp.a * &x + &hp.c);
            if hp.b.is_positive() {
                let bound: BigInt = rhs.div_floor(&hp.b) + 1;
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else if hp.b.is_negative() {
                let bound: BigInt = Integer::div_ceil(&rhs, &hp.b) - 1;
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            } else if !rhs.is_negative() {
                empty = true;
            }
        }
        if !empty {
            if let (Some(lo), Some(hi)) = (lo, hi) {
                let mut y = lo;
                while y <= hi {
                    out.push(NVector { x: x.clone(), y: y.clone() });
                    y += 1;
                }
            }
        }
        x += 1;
    }
    out.sort_by(|u, v| angle_cmp(u, v).then_with(|| (u.x.abs() + u.y.abs()).cmp(&(v.x.abs() + v.y.abs()))));
    out
}

/// Primitive lattice points strictly inside `conv(0, p, r)`, angle-sorted.
pub fn interior_primitive_points(p: &NVector, r: &NVector) -> Vec<NVector> {
    interior_lattice_points(p, r).into_iter().filter(NVector::is_primitive).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nv(x: i64, y: i64) -> NVector {
        NVector::new(x, y)
    }

    fn mv(a: i64, b: i64) -> MVector {
        MVector::new(a, b)
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&nv(1, 0), &mv(0, 1)), BigInt::from(0));
        assert_eq!(pairing(&nv(-7, 19), &mv(19, 7)), BigInt::from(0));
        assert_eq!(pairing(&nv(0, 1), &mv(5, 2)), BigInt::from(2));
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&nv(0, 4)).unwrap(), nv(0, 1));
        assert_eq!(primitive(&nv(-7, 21)).unwrap(), nv(-1, 3));
        assert_eq!(primitive(&nv(-4, 11)).unwrap(), nv(-4, 11));
        assert_eq!(primitive(&nv(0, 0)), Err(Error::ZeroVector));
        assert_eq!(Error::ZeroVector.to_string(), "zero vector has no direction");
    }

    #[test]
    fn det2_examples() {
        assert_eq!(det2(&nv(1, 0), &nv(0, 1)), BigInt::from(1));
        assert_eq!(det2(&nv(1, 0), &nv(-7, 19)), BigInt::from(19));
        assert_eq!(det2(&nv(0, 1), &nv(-4, 11)), BigInt::from(4));
        assert_eq!(det2(&nv(-4, 11), &nv(0, 1)), BigInt::from(-4));
    }

    #[test]
    fn cone_reorders_generators() {
        let c = Cone2::new(nv(0, 1), nv(2, 1)).unwrap();
        assert_eq!(c.gen0(), &nv(2, 1));
        assert_eq!(c.gen1(), &nv(0, 1));
        assert_eq!(Cone2::new(nv(1, 0), nv(-1, 0)), Err(Error::DegenerateCone));
        assert_eq!(Cone2::new(nv(2, 0), nv(0, 1)), Err(Error::NonPrimitiveGenerator));
    }

    #[test]
    fn dual_cone_examples() {
        let d = dual_cone(&Cone2::new(nv(1, 0), nv(-7, 19)).unwrap());
        assert_eq!((d.gen0(), d.gen1()), (&mv(0, 1), &mv(19, 7)));
        let d = dual_cone(&Cone2::new(nv(1, 0), nv(0, 1)).unwrap());
        assert_eq!((d.gen0(), d.gen1()), (&mv(0, 1), &mv(1, 0)));
        let d = dual_cone(&Cone2::new(nv(1, 0), nv(-1, 2)).unwrap());
        assert_eq!((d.gen0(), d.gen1()), (&mv(0, 1), &mv(2, 1)));
    }

    #[test]
    fn hilbert_basis_examples() {
        let sigma = Cone2::new(nv(1, 0), nv(-7, 19)).unwrap();
        assert_eq!(
            hilbert_basis_dual(&dual_cone(&sigma)),
            vec![mv(0, 1), mv(1, 1), mv(2, 1), mv(5, 2), mv(8, 3), mv(19, 7)]
        );
        assert_eq!(hilbert_basis(&sigma), vec![nv(1, 0), nv(0, 1), nv(-1, 3), nv(-4, 11), nv(-7, 19)]);
        let smooth = Cone2::new(nv(1, 0), nv(0, 1)).unwrap();
        assert_eq!(hilbert_basis(&smooth), vec![nv(1, 0), nv(0, 1)]);
    }

    #[test]
    fn hilbert_basis_of_rotated_cone() {
        let c = Cone2::new(nv(0, 1), nv(-4, 11)).unwrap();
        let hb = hilbert_basis(&c);
        assert_eq!(hb.first(), Some(&nv(0, 1)));
        assert_eq!(hb.last(), Some(&nv(-4, 11)));
        assert_eq!(hb, vec![nv(0, 1), nv(-1, 3), nv(-4, 11)]);
    }

    #[test]
    fn interior_points_examples() {
        let pts = interior_primitive_points(&nv(1, 0), &nv(-7, 19));
        assert_eq!(pts, vec![nv(0, 1), nv(-1, 4), nv(-2, 7), nv(-1, 3), nv(-5, 14), nv(-4, 11)]);
        // (0,1) sits on the edge x + y = 1, not inside
        assert!(interior_primitive_points(&nv(1, 0), &nv(-1, 2)).is_empty());
        assert_eq!(interior_primitive_points(&nv(1, 0), &nv(-1, 3)), vec![nv(0, 1)]);
        assert!(interior_primitive_points(&nv(1, 0), &nv(0, 1)).is_empty());
    }

    #[test]
    fn interior_points_match_box_scan() {
        for (p, r) in [(nv(1, 0), nv(-7, 19)), (nv(3, 1), nv(-2, 5)), (nv(2, -3), nv(1, 4))] {
            let cone = Cone2::new(p.clone(), r.clone()).unwrap();
            let edge = HalfPlane::left_of(&p, &r);
            let mut brute = Vec::new();
            for x in -10..=10 {
                for y in -10..=25 {
                    let v = nv(x, y);
                    if cone.contains_strictly(&v) && edge.contains(&v) {
                        brute.push(v);
                    }
                }
            }
            let mut fast = interior_lattice_points(&p, &r);
            brute.sort();
            fast.sort();
            assert_eq!(fast, brute);
        }
    }
}
