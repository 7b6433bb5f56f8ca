//! Integer matrices standing in for points of `G(r, n)`, with exact minors.

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setup::{all_index_tuples, IndexTuple, QuotientSetup};

/// Entry bound for random points: entries are drawn from `[-9, 9]`.
pub const ENTRY_BOUND: i64 = 9;

const MAX_ATTEMPTS: usize = 64;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let size = m.len();
    if size == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..size - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..size).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                // exact division is guaranteed by Sylvester's identity
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[size - 1][size - 1]
}

/// Rank over the rationals via fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
    let mut rk = 0;
    for col in 0..nc {
        let Some(p) = (rk..nr).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rk, p);
        for i in rk + 1..nr {
            let (f, g) = (m[i][col], m[rk][col]);
            if f == 0 {
                continue;
            }
            let pivot = m[rk].clone();
            for (x, p) in m[i][col..].iter_mut().zip(&pivot[col..]) {
                *x = *x * g - p * f;
            }
            let gcd = m[i].iter().fold(0i128, |acc, &x| num_integer::gcd(acc, x));
            if gcd > 1 {
                m[i].iter_mut().for_each(|x| *x /= gcd);
            }
        }
        rk += 1;
    }
    rk
}

/// An `r × n` integer matrix; its row span is a point of `G(r, n)` and
/// `p_τ` evaluates to the minor on columns `τ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointMatrix {
    rows: Vec<Vec<i64>>,
}

impl PointMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotRectangular("point matrix rows differ in length".into()));
        }
        if rank(&rows) < rows.len() {
            return Err(Error::Internal("point matrix is rank deficient".into()));
        }
        Ok(Self { rows })
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Determinant of the columns listed in `cols` (1-indexed, any order).
    pub fn minor_of_columns(&self, cols: &[usize]) -> i64 {
        let sub = self.rows.iter().map(|row| cols.iter().map(|&c| row[c - 1] as i128).collect()).collect();
        det_bareiss(sub) as i64
    }

    pub fn minor(&self, tau: &IndexTuple) -> i64 {
        self.minor_of_columns(tau.entries())
    }

    /// Uniform random matrix with entries in `[-9, 9]`, resampled until full rank.
    pub fn random<R: Rng>(r: usize, n: usize, rng: &mut R) -> Result<Self> {
        Self::random_supported(r, n, rng, |_| (1, n))
    }

    /// Random matrix whose row `t` (1-indexed) is supported on the column
    /// interval `support(t)`; no row is zero and the result has full rank.
    pub fn random_supported<R: Rng>(
        r: usize,
        n: usize,
        rng: &mut R,
        support: impl Fn(usize) -> (usize, usize),
    ) -> Result<Self> {
        for _ in 0..MAX_ATTEMPTS {
            let rows: Vec<Vec<i64>> = (1..=r)
                .map(|t| {
                    let (lo, hi) = support(t);
                    loop {
                        let row: Vec<i64> = (1..=n)
                            .map(|c| if lo <= c && c <= hi { rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND) } else { 0 })
                            .collect();
                        if row.iter().any(|&x| x != 0) {
                            break row;
                        }
                    }
                })
                .collect();
            if rank(&rows) == r {
                return Ok(Self { rows });
            }
        }
        Err(Error::SamplingFailed(MAX_ATTEMPTS))
    }
}

/// A point of `X^{v_l}_w`: row `t` is supported on `[l_{t-1}, a_t]`.
///
/// Rows `1..=t` lie in `span(e_1..e_{a_t})`, which gives the Schubert
/// condition for `w`; rows `r-t+1..=r` lie in `span(e_{l_{r-t}}..e_n)`, which
/// gives the opposite Schubert condition for `v_l`.
pub fn sample_richardson_point(s: &QuotientSetup, seed: u64) -> Result<PointMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_richardson_point_with(s, &mut rng)
}

pub fn sample_richardson_point_with<R: Rng>(s: &QuotientSetup, rng: &mut R) -> Result<PointMatrix> {
    PointMatrix::random_supported(s.r(), s.n(), rng, |t| (s.l(t - 1), s.a(t)))
}

/// All Plücker coordinates of one point, computed once.
#[derive(Clone, Debug)]
pub struct MinorTable {
    minors: HashMap<IndexTuple, i64>,
}

impl MinorTable {
    pub fn new(x: &PointMatrix) -> Self {
        let minors = all_index_tuples(x.r(), x.n()).into_iter().map(|t| {
            let m = x.minor(&t);
            (t, m)
        });
        Self { minors: minors.collect() }
    }

    pub fn get(&self, tau: &IndexTuple) -> i64 {
        self.minors[tau]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    // Leibniz expansion, independent of the elimination route.
    fn det_leibniz(m: &[Vec<i128>]) -> i128 {
        let size = m.len();
        (0..size)
            .permutations(size)
            .map(|p| {
                let inv = (0..size).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
                let sign = if inv % 2 == 0 { 1 } else { -1 };
                sign * (0..size).map(|i| m[i][p[i]]).product::<i128>()
            })
            .sum()
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for size in 0..=5 {
            for _ in 0..50 {
                let m: Vec<Vec<i128>> = (0..size).map(|_| (0..size).map(|_| rng.gen_range(-9..=9)).collect()).collect();
                assert_eq!(det_bareiss(m.clone()), det_leibniz(&m), "{m:?}");
            }
        }
        // forces pivoting
        let m = vec![vec![0, 1, 2], vec![0, 3, 4], vec![5, 6, 7]];
        assert_eq!(det_bareiss(m.clone()), det_leibniz(&m));
    }

    #[test]
    fn minor_examples() {
        let x = PointMatrix::new(vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        assert_eq!(x.minor(&IndexTuple::new(vec![1, 2], 4).unwrap()), 1);
        let x = PointMatrix::new(vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(x.minor(&IndexTuple::new(vec![1, 3], 4).unwrap()), 2);
        assert!(PointMatrix::new(vec![vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[vec![1, 2, 3], vec![2, 4, 6]]), 1);
        assert_eq!(rank(&[vec![0, 0, 1], vec![0, 1, 0]]), 2);
        assert_eq!(rank(&[vec![0, 0, 0]]), 0);
    }

    #[test]
    fn richardson_support() {
        let s = QuotientSetup::new(3, 7, &[2, 5]).unwrap();
        for seed in 0..20 {
            let x = sample_richardson_point(&s, seed).unwrap();
            for t in 1..=3 {
                for c in 1..=7 {
                    if c < s.l(t - 1) || c > s.a(t) {
                        assert_eq!(x.rows()[t - 1][c - 1], 0);
                    }
                }
            }
            assert_eq!(x.minor(&IndexTuple::new(vec![1, 2, 4], 7).unwrap()), 0);
        }
        assert_eq!(sample_richardson_point(&s, 3).unwrap(), sample_richardson_point(&s, 3).unwrap());
    }
}
