//! Negative (Hirzebruch–Jung) continued fractions and chains representing zero.
//!
//! `[c_1, ..., c_r] = c_1 - 1/[c_2, ..., c_r]`, with `[c_r] = c_r`. A chain
//! `(k_2, ..., k_{e-1})` of nonnegative integers is a *zero chain* when this
//! expression is well defined and evaluates to `0` and every proper tail
//! `[k_i, ..., k_{e-1}]`, `i > 2`, is positive. Zero chains of length `m`
//! are in bijection with triangulations of a convex `(m+1)`-gon whose
//! vertices are labelled `P_2, ..., P_{m+1}, P_*`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::ExactRational;

/// Value of a continued fraction, which may be undefined when some
/// intermediate tail evaluates to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CfValue {
    Value(ExactRational),
    Undefined,
}

impl CfValue {
    pub fn is_zero(&self) -> bool {
        matches!(self, CfValue::Value(v) if v.is_zero())
    }

    pub fn value(&self) -> Option<&ExactRational> {
        match self {
            CfValue::Value(v) => Some(v),
            CfValue::Undefined => None,
        }
    }
}

/// Evaluates `[c_1, ..., c_r]` right to left.
///
/// An empty list evaluates to `Undefined`.
pub fn eval_cf(c: &[BigInt]) -> CfValue {
    let Some((last, rest)) = c.split_last() else {
        return CfValue::Undefined;
    };
    let mut val = ExactRational::from_integer(last.clone());
    for ci in rest.iter().rev() {
        if val.is_zero() {
            return CfValue::Undefined;
        }
        val = ExactRational::from_integer(ci.clone()) - val.recip();
    }
    CfValue::Value(val)
}

/// The unique expansion `x = [c_1, ..., c_r]` with all `c_i >= 2`.
pub fn expand_hj(x: &ExactRational) -> Result<Vec<BigInt>> {
    if *x <= ExactRational::one() {
        return Err(Error::ExpansionDomain);
    }
    let mut out = Vec::new();
    let mut x = x.clone();
    loop {
        let c = x.ceil();
        out.push(c.to_integer());
        if c == x {
            return Ok(out);
        }
        x = (c - x).recip();
    }
}

/// Riemenschneider duality: for `eval_cf(a) = n/(n-q)` returns the
/// expansion of `n/q`.
pub fn dual_chain(a: &[BigInt]) -> Result<Vec<BigInt>> {
    let two = BigInt::from(2);
    if a.is_empty() || a.iter().any(|x| *x < two) {
        return Err(Error::ChainEntryTooSmall);
    }
    let v = match eval_cf(a) {
        CfValue::Value(v) => v,
        CfValue::Undefined => unreachable!("entries >= 2 never hit a zero tail"),
    };
    let n = v.numer().clone();
    let q = &n - v.denom();
    expand_hj(&ExactRational::new(n, q))
}

/// A chain `(k_2, ..., k_{e-1})` of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    entries: Vec<BigInt>,
}

impl Chain {
    pub fn new(entries: Vec<BigInt>) -> Self {
        Chain { entries }
    }

    pub fn from_slice<T: Clone + Into<BigInt>>(entries: &[T]) -> Self {
        Chain { entries: entries.iter().cloned().map(Into::into).collect() }
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `k_i` in the 2-based numbering, `2 <= i <= e-1`.
    pub fn k(&self, i: usize) -> &BigInt {
        &self.entries[i - 2]
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The companion integers `(q_1, ..., q_e)` of a zero chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSequence {
    values: Vec<BigInt>,
}

impl QSequence {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `q_i` in the 1-based numbering.
    pub fn q(&self, i: usize) -> &BigInt {
        &self.values[i - 1]
    }

    /// `e`, the number of entries.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Tails must stay positive: `(1,0,0,1)` evaluates to `0` but its tail
/// `[0,1] = -1` would give a negative q-sequence.
pub fn is_zero_chain(k: &Chain) -> bool {
    let ks = k.entries();
    eval_cf(ks).is_zero() && (1..ks.len()).all(|i| matches!(eval_cf(&ks[i..]), CfValue::Value(v) if v.is_positive()))
}

/// The q-sequence of a zero chain, from the recursion anchored at the right
/// end (`q_{e-1} = 1`, `q_e = 0`), checked against the recursion anchored at
/// the left end (`q_1 = 0`, `q_2 = 1`) and the coprimality of neighbours.
pub fn q_sequence(k: &Chain) -> Result<QSequence> {
    if !is_zero_chain(k) {
        return Err(Error::NotZeroChain);
    }
    let ks = k.entries();
    let e = ks.len() + 2;
    let mut right = vec![BigInt::zero(); e];
    right[e - 2] = BigInt::one();
    // q_{i-1} = k_i q_i - q_{i+1}; 0-based: right[i-2] from right[i-1], right[i]
    for i in (2..e).rev() {
        right[i - 2] = &ks[i - 2] * &right[i - 1] - &right[i];
    }
    let mut left = vec![BigInt::zero(); e];
    left[1] = BigInt::one();
    for i in 2..e {
        left[i] = &ks[i - 2] * &left[i - 1] - &left[i - 2];
    }
    if left != right {
        return Err(Error::Internal(format!("q-sequence recursions disagree for {k}")));
    }
    if right.iter().any(Signed::is_negative) || right.windows(2).any(|w| !w[0].gcd(&w[1]).is_one()) {
        return Err(Error::Internal(format!("q-sequence of {k} is not a coprime nonnegative sequence")));
    }
    Ok(QSequence { values: right })
}

/// A triangulation of a convex polygon with `size` vertices.
///
/// Vertex `j` for `j < size - 1` is `P_{j+2}`; vertex `size - 1` is `P_*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    size: usize,
    diagonals: Vec<(usize, usize)>,
    triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Validates a set of diagonals as a full triangulation.
    pub fn new(size: usize, diagonals: Vec<(usize, usize)>) -> Result<Self> {
        let invalid = |msg: &str| Err(Error::InvalidTriangulation(msg.to_string()));
        if size < 2 {
            return invalid("polygon needs at least 2 vertices");
        }
        let mut diags: Vec<(usize, usize)> =
            diagonals.into_iter().map(|(a, b)| if a < b { (a, b) } else { (b, a) }).collect();
        diags.sort_unstable();
        diags.dedup();
        let expected = size.saturating_sub(3);
        if diags.len() != expected {
            return invalid("wrong number of diagonals");
        }
        for &(a, b) in &diags {
            if b >= size || b - a < 2 || (a == 0 && b == size - 1) {
                return invalid("not a diagonal");
            }
        }
        for (i, &(a, b)) in diags.iter().enumerate() {
            for &(c, d) in &diags[i + 1..] {
                let crosses = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if crosses {
                    return invalid("crossing diagonals");
                }
            }
        }
        let is_edge = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            b - a == 1 || (a == 0 && b == size - 1) || diags.binary_search(&(a, b)).is_ok()
        };
        let mut triangles = Vec::new();
        if size >= 3 {
            for a in 0..size {
                for b in a + 1..size {
                    for c in b + 1..size {
                        if is_edge(a, b) && is_edge(b, c) && is_edge(a, c) {
                            triangles.push([a, b, c]);
                        }
                    }
                }
            }
        }
        if triangles.len() != size.saturating_sub(2) {
            return invalid("diagonals do not cut the polygon into triangles");
        }
        Ok(Triangulation { size, diagonals: diags, triangles })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }
}

fn triangulate(vertices: &[usize]) -> Vec<Vec<[usize; 3]>> {
    if vertices.len() < 3 {
        return vec![Vec::new()];
    }
    let first = vertices[0];
    let last = *vertices.last().unwrap();
    let mut out = Vec::new();
    for apex in 1..vertices.len() - 1 {
        let left = triangulate(&vertices[..=apex]);
        let right = triangulate(&vertices[apex..]);
        for l in &left {
            for r in &right {
                let mut t = Vec::with_capacity(l.len() + r.len() + 1);
                t.push([first, vertices[apex], last]);
                t.extend_from_slice(l);
                t.extend_from_slice(r);
                out.push(t);
            }
        }
    }
    out
}

/// Every triangulation of the convex polygon with `size` vertices.
pub fn all_triangulations(size: usize) -> Vec<Triangulation> {
    let vertices: Vec<usize> = (0..size).collect();
    triangulate(&vertices)
        .into_iter()
        .map(|triangles| {
            let mut diagonals = Vec::new();
            for t in &triangles {
                for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                    let (a, b) = if a < b { (a, b) } else { (b, a) };
                    if b - a >= 2 && !(a == 0 && b == size - 1) {
                        diagonals.push((a, b));
                    }
                }
            }
            Triangulation::new(size, diagonals).expect("recursive construction is a triangulation")
        })
        .collect()
}

/// `k_i` = number of triangles at `P_i`; the count at `P_*` is dropped.
pub fn chain_from_triangulation(t: &Triangulation) -> Chain {
    let mut counts = vec![0u64; t.size()];
    for tri in t.triangles() {
        for &v in tri {
            counts[v] += 1;
        }
    }
    counts.pop();
    Chain::new(counts.into_iter().map(BigInt::from).collect())
}

/// All zero chains of length `m >= 1`, sorted lexicographically.
pub fn enumerate_zero_chains(m: usize) -> Vec<Chain> {
    assert!(m >= 1, "zero chains have length at least 1");
    let set: BTreeSet<Chain> = all_triangulations(m + 1).iter().map(chain_from_triangulation).collect();
    set.into_iter().collect()
}

/// Zero chains `k` with `k_i <= bounds[i]` for every position, sorted
/// lexicographically.
///
/// Searches depth first along the left-anchored q-recursion: for a zero
/// chain every intermediate `q_i` is positive and the final `q_e` is zero,
/// which prunes all but a thin slice of the bounded box. No vertex of an
/// `(m+1)`-gon touches more than `m-1` triangles, so entries are also capped
/// by the chain length.
pub fn zero_chains_bounded(bounds: &[BigInt]) -> Vec<Chain> {
    fn go(bounds: &[BigInt], prefix: &mut Vec<BigInt>, prev: &BigInt, cur: &BigInt, out: &mut Vec<Chain>) {
        let pos = prefix.len();
        let last = pos + 1 == bounds.len();
        let cap = BigInt::from(bounds.len()).min(bounds[pos].clone());
        let mut k = BigInt::zero();
        while k <= cap {
            let next = &k * cur - prev;
            if last {
                if next.is_zero() {
                    prefix.push(k.clone());
                    out.push(Chain::new(prefix.clone()));
                    prefix.pop();
                }
                if next.is_positive() {
                    break;
                }
            } else if next.is_positive() {
                prefix.push(k.clone());
                go(bounds, prefix, cur, &next, out);
                prefix.pop();
            }
            k += 1;
        }
    }
    let mut out = Vec::new();
    if bounds.is_empty() {
        return out;
    }
    go(bounds, &mut Vec::new(), &BigInt::zero(), &BigInt::one(), &mut out);
    out
}
