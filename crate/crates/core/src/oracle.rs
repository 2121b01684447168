//! Brute-force reference computations.
//!
//! Each function here recomputes something the fast paths produce, straight
//! from a definition and without sharing code with them. They back the
//! `--verify` mode of the CLI, the self-test sweep and the test suites.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::contfrac::Chain;
use crate::invariants::CyclicQuotient;
use crate::lattice::{Cone2, DualCone2, MVector, NVector};

type Pair = (BigInt, BigInt);

fn det(u: &Pair, v: &Pair) -> BigInt {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Irreducible elements of the semigroup `cone(g0, g1) ∩ Z²`, ordered from
/// `g0` to `g1`.
///
/// Every irreducible element lies in the half-open parallelogram spanned by
/// the generators, so the search is confined to it: a candidate is kept when
/// it is not the sum of two nonzero lattice points of the cone.
fn irreducibles(g0: &Pair, g1: &Pair) -> Vec<Pair> {
    let d = det(g0, g1);
    let sign = if d.is_positive() { BigInt::from(1) } else { BigInt::from(-1) };
    let in_cone = |v: &Pair| {
        // v = s*g0 + t*g1 with s = det(v,g1)/d, t = det(g0,v)/d
        !(det(v, g1) * &sign).is_negative() && !(det(g0, v) * &sign).is_negative()
    };
    let in_parallelogram = |v: &Pair| {
        let s = det(v, g1) * &sign;
        let t = det(g0, v) * &sign;
        let dd = d.abs();
        !s.is_negative() && !t.is_negative() && s <= dd && t <= dd
    };
    let xs = [BigInt::zero(), g0.0.clone(), g1.0.clone(), &g0.0 + &g1.0];
    let ys = [BigInt::zero(), g0.1.clone(), g1.1.clone(), &g0.1 + &g1.1];
    let (xmin, xmax) = (xs.iter().min().unwrap().clone(), xs.iter().max().unwrap().clone());
    let (ymin, ymax) = (ys.iter().min().unwrap().clone(), ys.iter().max().unwrap().clone());

    let mut candidates = Vec::new();
    let mut x = xmin;
    while x <= xmax {
        let mut y = ymin.clone();
        while y <= ymax {
            let v = (x.clone(), y.clone());
            if !(v.0.is_zero() && v.1.is_zero()) && in_parallelogram(&v) {
                candidates.push(v);
            }
            y += 1;
        }
        x += 1;
    }
    let mut out: Vec<Pair> = candidates
        .iter()
        .filter(|v| {
            !candidates.iter().any(|u| {
                if u == *v {
                    return false;
                }
                let rest = (&v.0 - &u.0, &v.1 - &u.1);
                !(rest.0.is_zero() && rest.1.is_zero()) && in_cone(&rest)
            })
        })
        .cloned()
        .collect();
    out.sort_by(|u, v| {
        let s = det(u, v) * &sign;
        if s.is_positive() {
            Ordering::Less
        } else if s.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });
    out
}

pub fn brute_hilbert_basis(c: &Cone2) -> Vec<NVector> {
    let g0 = (c.gen0().x.clone(), c.gen0().y.clone());
    let g1 = (c.gen1().x.clone(), c.gen1().y.clone());
    irreducibles(&g0, &g1).into_iter().map(|(x, y)| NVector { x, y }).collect()
}

pub fn brute_hilbert_basis_dual(c: &DualCone2) -> Vec<MVector> {
    let g0 = (c.gen0().a.clone(), c.gen0().b.clone());
    let g1 = (c.gen1().a.clone(), c.gen1().b.clone());
    irreducibles(&g0, &g1).into_iter().map(|(a, b)| MVector { a, b }).collect()
}

/// Evaluates `[c_1, ..., c_r]` on unreduced `i128` fractions; `None` when
/// undefined or when some proper tail `[c_i, ..., c_r]`, `i > 1`, is not
/// positive. Callers keep entries small enough not to overflow.
fn eval_small(c: &[i64]) -> Option<(i128, i128)> {
    let (&last, rest) = c.split_last()?;
    let (mut num, mut den) = (last as i128, 1i128);
    for &ci in rest.iter().rev() {
        // den > 0 throughout, so the sign of the tail is the sign of num
        if num <= 0 {
            return None;
        }
        // ci - den/num
        let (n2, d2) = (ci as i128 * num - den, num);
        debug_assert!(d2 > 0);
        num = n2;
        den = d2;
    }
    Some((num, den))
}

/// Every chain of length `m` with entries in `0..=max_entry` whose continued
/// fraction is zero with positive proper tails, in lexicographic order.
pub fn exhaustive_zero_chains(m: usize, max_entry: i64) -> Vec<Chain> {
    let mut out = Vec::new();
    let mut digits = vec![0i64; m];
    loop {
        if let Some((num, _)) = eval_small(&digits) {
            if num == 0 {
                out.push(Chain::from_slice(&digits));
            }
        }
        let mut pos = m;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if digits[pos] < max_entry {
                digits[pos] += 1;
                for d in &mut digits[pos + 1..] {
                    *d = 0;
                }
                break;
            }
        }
    }
}

/// Admissible chains of `Y(n,q)` by exhaustive search over the box
/// `0 <= k_i <= min(a_i, e-2)`.
pub fn exhaustive_admissible_chains(a_chain: &[BigInt]) -> Vec<Chain> {
    let m = a_chain.len();
    let cap = (m as i64).max(1);
    exhaustive_zero_chains(m, cap)
        .into_iter()
        .filter(|k| k.entries().iter().zip(a_chain).all(|(k, a)| k <= a))
        .collect()
}

/// Canonical `(n,q)` of all T-singularities with `n <= max_n`, from the
/// family `n = d m²`, `q = d m a - 1` with `gcd(a, m) = 1`.
pub fn t_singularity_family(max_n: u64) -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    for m in 1u64.. {
        if m * m > max_n {
            break;
        }
        for d in 1u64..=max_n / (m * m) {
            let n = d * m * m;
            if n < 2 {
                continue;
            }
            for a in 1..=m {
                if a.gcd(&m) != 1 {
                    continue;
                }
                let q = (d * m * a + n - 1) % n;
                let cq = CyclicQuotient::new(n, q).expect("family members are valid").canonical();
                out.insert((cq.n().to_u64().unwrap(), cq.q().to_u64().unwrap()));
            }
        }
    }
    out
}

/// Primitive lattice points `v` of `σ` off its boundary with `⟨v, R⟩ < 1`,
/// where `R = [1, (1+q)/n]`, scanned over a bounding box.
pub fn brute_interior_primitive_points(cq: &CyclicQuotient) -> BTreeSet<NVector> {
    let n = cq.n();
    let q = cq.q();
    let mut out = BTreeSet::new();
    let mut x = -q.clone();
    while x <= BigInt::from(1) {
        let mut y = BigInt::from(1);
        while &y <= n {
            // strictly inside σ: y > 0 and det(v, (-q,n)) = n x + q y > 0;
            // ⟨v,R⟩ < 1  ⇔  n x + (1+q) y < n
            let inside = (n * &x + q * &y).is_positive() && n * &x + (q + 1) * &y < *n;
            if inside && x.gcd(&y) == BigInt::from(1) {
                out.insert(NVector { x: x.clone(), y: y.clone() });
            }
            y += 1;
        }
        x += 1;
    }
    out
}
