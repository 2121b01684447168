//! Toric partial resolutions of `Y(n,q)`: fans subdividing `σ`, the minimal
//! and maximal resolutions, discrepancies and the sign of `E_j·K`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::invariants::{cone_of, invariants, CyclicQuotient};
use crate::lattice::{angle_cmp, det2, interior_primitive_points, primitive, Cone2, ExactRational, NVector, RVector};

/// A subdivision of `σ` by rays `u^0 = (1,0), u^1, ..., u^{s+1} = (-q,n)`.
///
/// Every interior ray `u^j` (`1 <= j <= s`) is an exceptional curve `E_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    base: CyclicQuotient,
    rays: Vec<NVector>,
}

impl Fan {
    pub fn new(base: CyclicQuotient, rays: Vec<NVector>) -> Result<Self> {
        let sigma = cone_of(&base);
        let bad = |msg: String| Err(Error::InvalidFan(msg));
        if rays.len() < 2 {
            return bad("a fan needs both boundary rays".into());
        }
        if rays.first() != Some(sigma.gen0()) || rays.last() != Some(sigma.gen1()) {
            return bad(format!("fan must start at {} and end at {}", sigma.gen0(), sigma.gen1()));
        }
        for u in &rays {
            if !u.is_primitive() {
                return bad(format!("ray {u} is not primitive"));
            }
        }
        for pair in rays.windows(2) {
            if !det2(&pair[0], &pair[1]).is_positive() {
                return bad(format!("rays {} and {} are not in increasing angular order", pair[0], pair[1]));
            }
        }
        Ok(Fan { base, rays })
    }

    /// Builds a fan from an unordered ray set; boundary rays are added.
    pub fn from_ray_set(base: CyclicQuotient, rays: impl IntoIterator<Item = NVector>) -> Result<Self> {
        let sigma = cone_of(&base);
        let mut all: Vec<NVector> = rays.into_iter().collect();
        all.push(sigma.gen0().clone());
        all.push(sigma.gen1().clone());
        all.sort_by(angle_cmp);
        all.dedup();
        Fan::new(base, all)
    }

    pub fn base(&self) -> &CyclicQuotient {
        &self.base
    }

    pub fn rays(&self) -> &[NVector] {
        &self.rays
    }

    /// `s`, the number of exceptional curves.
    pub fn interior_count(&self) -> usize {
        self.rays.len() - 2
    }

    pub fn interior_rays(&self) -> &[NVector] {
        &self.rays[1..self.rays.len() - 1]
    }

    /// The two-dimensional cones `⟨u^j, u^{j+1}⟩`.
    pub fn cones(&self) -> Vec<Cone2> {
        self.rays
            .windows(2)
            .map(|w| Cone2::new(w[0].clone(), w[1].clone()).expect("fan rays are ordered and primitive"))
            .collect()
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rays: Vec<String> = self.rays.iter().map(ToString::to_string).collect();
        write!(f, "{}: {}", self.base, rays.join(" "))
    }
}

/// The rays `(1,0)` and `(-q,n)` bounding `σ`.
fn boundary_rays(cq: &CyclicQuotient) -> (NVector, NVector) {
    let sigma = cone_of(cq);
    (sigma.gen0().clone(), sigma.gen1().clone())
}

pub fn minimal_resolution(cq: &CyclicQuotient) -> Fan {
    Fan::new(cq.clone(), invariants(cq).v_points).expect("Hilbert basis of σ is a fan")
}

/// Rays through all primitive lattice points in the interior of
/// `Δ = conv(0, (1,0), (-q,n))`.
pub fn maximal_resolution(cq: &CyclicQuotient) -> Fan {
    let (p, r) = boundary_rays(cq);
    let mut rays = vec![p.clone()];
    rays.extend(interior_primitive_points(&p, &r));
    rays.push(r);
    Fan::new(cq.clone(), rays).expect("interior points of Δ lie inside σ")
}

/// Whether `v` lies strictly on the origin side of the line through the
/// boundary rays, i.e. `⟨v, R⟩ < 1`.
fn below_boundary_chord(p: &NVector, r: &NVector, v: &NVector) -> bool {
    det2(&(r - p), &(v - p)).is_positive()
}

/// Maximal resolution by repeated stellar subdivision of the minimal one:
/// the angularly first cone `⟨u^j, u^{j+1}⟩` containing a lattice point
/// below the chord `[R = 1]` is split by `u^j + u^{j+1}`.
///
/// Minimal-resolution rays on the chord itself (all of them for
/// `Y(n, n-1)`, none otherwise) have `α = 1` and are dropped first.
pub fn maximal_resolution_iterative(cq: &CyclicQuotient) -> Fan {
    let (p, r) = boundary_rays(cq);
    let v = invariants(cq).v_points;
    let mut rays = vec![p.clone()];
    rays.extend(v[1..v.len() - 1].iter().filter(|u| below_boundary_chord(&p, &r, u)).cloned());
    rays.push(r.clone());
    // Every cone stays smooth or contains no lattice point below the chord,
    // so u^j + u^{j+1} minimizes ⟨·, R⟩ over the cone's interior lattice points.
    while let Some(j) = rays.windows(2).position(|w| below_boundary_chord(&p, &r, &(&w[0] + &w[1]))) {
        let mid = primitive(&(&rays[j] + &rays[j + 1])).expect("sum of two rays in σ is nonzero");
        rays.insert(j + 1, mid);
    }
    Fan::new(cq.clone(), rays).expect("stellar subdivision keeps a valid fan")
}

/// `R` and the numbers `α_j = ⟨u^j, R⟩`, with `K = Σ (α_j - 1) E_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscrepancyData {
    pub r_vector: RVector,
    pub alphas: Vec<ExactRational>,
}

impl DiscrepancyData {
    /// Conventional discrepancies `α_j - 1` of the interior rays.
    pub fn discrepancies(&self) -> Vec<ExactRational> {
        let n = self.alphas.len();
        self.alphas[1..n - 1].iter().map(|a| a - ExactRational::one()).collect()
    }
}

pub fn discrepancies(f: &Fan) -> DiscrepancyData {
    let u0 = &f.rays[0];
    let u1 = f.rays.last().unwrap();
    // solve x*u0.x + y*u0.y = 1, x*u1.x + y*u1.y = 1
    let d = det2(u0, u1);
    let a = ExactRational::new(&u1.y - &u0.y, d.clone());
    let b = ExactRational::new(&u0.x - &u1.x, d);
    let r_vector = RVector::new(a, b);
    let alphas = f.rays.iter().map(|u| r_vector.pair(u)).collect();
    DiscrepancyData { r_vector, alphas }
}

/// The integers `c_j` with `u^{j-1} + u^{j+1} = c_j u^j`; `E_j² = -c_j`.
pub fn self_intersections(f: &Fan) -> Result<Vec<BigInt>> {
    f.rays
        .windows(3)
        .map(|w| {
            let sum = &w[0] + &w[2];
            let u = &w[1];
            if !det2(&sum, u).is_zero() {
                return Err(Error::NotSmoothChain);
            }
            // u is primitive, so a parallel lattice vector is an integer multiple of it
            let c = if !u.x.is_zero() { &sum.x / &u.x } else { &sum.y / &u.y };
            if u.scale(&c) != sum {
                return Err(Error::NotSmoothChain);
            }
            Ok(c)
        })
        .collect()
}

/// Sign of `E_j · K_{Y_Σ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RoofSign {
    Positive,
    Zero,
    Negative,
}

impl fmt::Display for RoofSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RoofSign::Positive => "positive",
            RoofSign::Zero => "zero",
            RoofSign::Negative => "negative",
        })
    }
}

/// Positive when `u^j` lies strictly on the origin side of the chord
/// `u^{j-1} u^{j+1}` (strictly concave roof), zero when the three are
/// collinear, negative when `u^j` lies beyond the chord.
pub fn roof_sign(f: &Fan, j: usize) -> Result<RoofSign> {
    let s = f.interior_count();
    if j == 0 || j > s {
        return Err(Error::IndexOutOfRange { index: j, max: s });
    }
    let (prev, cur, next) = (&f.rays[j - 1], &f.rays[j], &f.rays[j + 1]);
    let d = det2(&(next - prev), &(cur - prev));
    Ok(if d.is_positive() {
        RoofSign::Positive
    } else if d.is_zero() {
        RoofSign::Zero
    } else {
        RoofSign::Negative
    })
}
