//! Numerical frame of a Richardson variety `X^{v_l}_w` in `G(r, n)`.
//!
//! Everything here is 1-indexed so that rows, columns and values line up with
//! the usual `(i, j)` box coordinates of a tableau.

use std::fmt;
use std::ops::RangeInclusive;

use itertools::Itertools;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closed integer interval `[lo, hi]`; empty when `hi < lo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    pub fn len(&self) -> usize {
        (self.hi + 1).saturating_sub(self.lo)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn iter(&self) -> RangeInclusive<usize> {
        // an empty RangeInclusive when hi < lo
        self.lo..=self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        !self.is_empty() && !other.is_empty() && self.lo.max(other.lo) <= self.hi.min(other.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "{{}}")
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Element of `I(r, n)`: a strictly increasing tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    /// Checks strict increase and the range `[1, n]`.
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        let ok = entries.first().is_none_or(|&x| x >= 1)
            && entries.last().is_none_or(|&x| x <= n)
            && entries.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(Self(entries))
        } else {
            Err(Error::BadIndexTuple(entries))
        }
    }

    /// Strict increase only; the caller vouches for the upper bound.
    pub fn from_increasing(entries: Vec<usize>) -> Result<Self> {
        Self::new(entries, usize::MAX)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-indexed access.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Componentwise order on `I(r, n)`.
pub fn tuple_leq(alpha: &IndexTuple, beta: &IndexTuple) -> bool {
    alpha.len() == beta.len() && alpha.0.iter().zip(&beta.0).all(|(a, b)| a <= b)
}

/// All of `I(r, n)` in lexicographic order.
pub fn all_index_tuples(r: usize, n: usize) -> Vec<IndexTuple> {
    (1..=n).combinations(r).map(IndexTuple).collect()
}

/// The data `(r, n, a, c, l, C_{i,1}, C_{i,2}, w, v, v_l)` attached to one
/// admissible choice of `l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSetup {
    r: usize,
    n: usize,
    /// `a[0] = 0`, `a[i] = ceil(n i / r)`.
    a: Vec<usize>,
    /// `c[i] = r a[i] - n i`.
    c: Vec<usize>,
    /// `l[0] = 1`, `l[r] = a[r] + 1`.
    l: Vec<usize>,
    /// `c1[i - 1] = C_{i,1}` for `1 <= i <= r`.
    c1: Vec<Interval>,
    /// `c2[i - 1] = C_{i,2}` for `1 <= i <= r`; the last one is empty.
    c2: Vec<Interval>,
    w: IndexTuple,
    v: IndexTuple,
    vl: IndexTuple,
}

impl QuotientSetup {
    /// Builds the setup for `(r, n)` and `l = (l_1, ..., l_{r-1})`.
    pub fn new(r: usize, n: usize, l_inner: &[usize]) -> Result<Self> {
        if r < 1 || n < 2 || r > n - 1 {
            return Err(Error::BadDimensions { r, n });
        }
        let g = r.gcd(&n);
        if g != 1 {
            return Err(Error::NotCoprime { r, n, gcd: g });
        }
        if l_inner.len() != r - 1 {
            return Err(Error::WrongLCount { expected: r - 1, got: l_inner.len() });
        }

        let a: Vec<usize> = (0..=r).map(|i| (n * i).div_ceil(r)).collect();
        let c: Vec<usize> = (0..=r).map(|i| r * a[i] - n * i).collect();

        let mut l = Vec::with_capacity(r + 1);
        l.push(1);
        for (idx, &li) in l_inner.iter().enumerate() {
            let i = idx + 1;
            let (lo, hi) = (a[i - 1] + 2, a[i]);
            if li < lo || li > hi {
                return Err(Error::LOutOfRange { index: i, value: li, lo, hi });
            }
            l.push(li);
        }
        l.push(a[r] + 1);

        let c1 = (1..=r).map(|i| Interval::new(a[i - 1] + 1, l[i] - 1)).collect();
        let c2 = (1..=r).map(|i| Interval::new(l[i], a[i])).collect();

        let w = IndexTuple(a[1..=r].to_vec());
        let v = IndexTuple(std::iter::once(1).chain(a[1..r].iter().copied()).collect());
        let vl = IndexTuple(l[0..r].to_vec());

        Ok(Self { r, n, a, c, l, c1, c2, w, v, vl })
    }

    /// Every admissible `l` for `(r, n)`, possibly none.
    pub fn admissible_ls(r: usize, n: usize) -> Vec<Vec<usize>> {
        if r < 1 || n < 2 || r > n - 1 {
            return Vec::new();
        }
        if r == 1 {
            return vec![Vec::new()];
        }
        let a: Vec<usize> = (0..=r).map(|i| (n * i).div_ceil(r)).collect();
        (1..r).map(|i| a[i - 1] + 2..=a[i]).multi_cartesian_product().collect()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_i` for `0 <= i <= r`.
    pub fn a(&self, i: usize) -> usize {
        self.a[i]
    }

    /// `c_i` for `0 <= i <= r`.
    pub fn c(&self, i: usize) -> usize {
        self.c[i]
    }

    /// `l_i` for `0 <= i <= r`.
    pub fn l(&self, i: usize) -> usize {
        self.l[i]
    }

    pub fn a_vec(&self) -> &[usize] {
        &self.a
    }

    pub fn c_vec(&self) -> &[usize] {
        &self.c
    }

    pub fn l_vec(&self) -> &[usize] {
        &self.l
    }

    /// The user-facing `(l_1, ..., l_{r-1})`.
    pub fn l_inner(&self) -> &[usize] {
        &self.l[1..self.r]
    }

    /// `C_{i,1}` for `1 <= i <= r`.
    pub fn c1(&self, i: usize) -> Interval {
        self.c1[i - 1]
    }

    /// `C_{i,2}` for `1 <= i <= r`.
    pub fn c2(&self, i: usize) -> Interval {
        self.c2[i - 1]
    }

    /// `C_i = C_{i,1} ⊔ C_{i,2} = [a_{i-1}+1, a_i]`.
    pub fn c_block(&self, i: usize) -> Interval {
        Interval::new(self.a[i - 1] + 1, self.a[i])
    }

    /// Values allowed in row `i` of an invariant tableau: `[l_{i-1}, a_i]`.
    pub fn row_range(&self, i: usize) -> Interval {
        Interval::new(self.l[i - 1], self.a[i])
    }

    /// Row-`i` range of predicate P1: `[l_{i-1}, a_{i-1}+1]`.
    pub fn p1_range(&self, i: usize) -> Interval {
        Interval::new(self.l[i - 1], self.a[i - 1] + 1)
    }

    /// Row-`i` range of predicate P2: `[a_{i-1}+1, a_i]`.
    pub fn p2_range(&self, i: usize) -> Interval {
        Interval::new(self.a[i - 1] + 1, self.a[i])
    }

    pub fn w(&self) -> &IndexTuple {
        &self.w
    }

    pub fn v(&self) -> &IndexTuple {
        &self.v
    }

    pub fn vl(&self) -> &IndexTuple {
        &self.vl
    }

    /// Sizes `|C_{i,2}|` for `1 <= i <= r-1`: the lattice coordinate blocks.
    pub fn block_sizes(&self) -> Vec<usize> {
        (1..self.r).map(|i| self.c2(i).len()).collect()
    }

    /// Flat coordinate order of `C = ⊔_{i<r} C_{i,2}`: `(i, j)` pairs, blocks
    /// by increasing `i`, values increasing inside a block.
    pub fn coordinates(&self) -> Vec<(usize, usize)> {
        (1..self.r).flat_map(|i| self.c2(i).iter().map(move |j| (i, j))).collect()
    }

    /// Projective-space factors `(dim, twist) = (a_i - l_i, c_i)` of the quotient.
    pub fn quotient_factors(&self) -> Vec<(usize, usize)> {
        (1..self.r).map(|i| (self.a[i] - self.l[i], self.c[i])).collect()
    }

    /// Violations of the structural invariants; empty when all hold.
    pub fn invariant_violations(&self) -> Vec<String> {
        let (r, n) = (self.r, self.n);
        let mut bad = Vec::new();
        if r.gcd(&n) != 1 {
            bad.push(format!("gcd({r},{n}) != 1"));
        }
        if self.a[r] != n {
            bad.push(format!("a_r = {} != n", self.a[r]));
        }
        if self.c[0] != 0 || self.c[r] != 0 {
            bad.push("c_0 or c_r nonzero".into());
        }
        for i in 1..r {
            if !(0 < self.c[i] && self.c[i] < r) {
                bad.push(format!("c_{i} = {} not in (0, r)", self.c[i]));
            }
            if !(self.a[i - 1] + 2 <= self.l[i] && self.l[i] <= self.a[i]) {
                bad.push(format!("l_{i} = {} violates a_(i-1)+2 <= l_i <= a_i", self.l[i]));
            }
        }
        for i in 1..=r {
            // a_i is the least positive integer with r a_i >= n i
            if r * self.a[i] < n * i || (self.a[i] > 1 && r * (self.a[i] - 1) >= n * i) {
                bad.push(format!("a_{i} = {} is not ceil(n i / r)", self.a[i]));
            }
            let (p, q) = (self.c1(i), self.c2(i));
            if p.len() + q.len() != self.a[i] - self.a[i - 1] {
                bad.push(format!("|C_{i},1| + |C_{i},2| != a_i - a_(i-1)"));
            }
        }
        if !self.c2(r).is_empty() {
            bad.push("C_{r,2} not empty".into());
        }
        // {1..n} = ⊔ (C_{i,1} ⊔ C_{i,2}), listed in increasing order
        let mut covered = Vec::with_capacity(n);
        for i in 1..=r {
            covered.extend(self.c1(i).iter());
            covered.extend(self.c2(i).iter());
        }
        if covered != (1..=n).collect::<Vec<_>>() {
            bad.push("C blocks do not partition [1, n]".into());
        }
        bad
    }

    /// The interval disjointness facts behind the binomial relations:
    /// `[l_{j-1}, a_{j-1}+1] ∩ [l_{i-1}, a_i] = ∅` for `j < i`, and
    /// `[a_{j-1}+1, a_j] ∩ [l_{i-1}, a_i] = ∅` for `i < j`.
    pub fn disjointness_violations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for i in 1..=self.r {
            for j in 1..=self.r {
                if j < i && self.p1_range(j).intersects(&self.row_range(i)) {
                    bad.push(format!("P1 range of row {j} meets row range {i}"));
                }
                if i < j && self.p2_range(j).intersects(&self.row_range(i)) {
                    bad.push(format!("P2 range of row {j} meets row range {i}"));
                }
            }
        }
        bad
    }
}

/// True iff `p_tau` vanishes identically on `X^{v_l}_w`, i.e. some
/// `tau_i` lies outside `[l_{i-1}, a_i]`.
pub fn vanishes_on_richardson(tau: &IndexTuple, s: &QuotientSetup) -> bool {
    tau.entries().iter().enumerate().any(|(idx, &t)| !s.row_range(idx + 1).contains(t))
}
