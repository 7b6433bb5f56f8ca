//! The lattice-point sets `P_d`, the map `z`, and the inverse construction
//! of invariant tableaux from lattice points.

use std::fmt;

use itertools::Itertools;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setup::QuotientSetup;
use crate::tableaux::{box_partition, enumerate_invariant_tableaux, Tableau};

/// Nonnegative vector indexed by `C = ⊔_{i<r} C_{i,2}`, stored per block:
/// `blocks[i-1][j - l_i] = z_j` for `j ∈ C_{i,2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub blocks: Vec<Vec<usize>>,
}

impl LatticePoint {
    pub fn zero(s: &QuotientSetup) -> Self {
        Self { blocks: s.block_sizes().into_iter().map(|k| vec![0; k]).collect() }
    }

    /// Coordinates in the flat order of `QuotientSetup::coordinates`.
    pub fn flat(&self) -> Vec<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        let blocks =
            self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect();
        LatticePoint { blocks }
    }

    pub fn scale(&self, k: usize) -> LatticePoint {
        LatticePoint { blocks: self.blocks.iter().map(|b| b.iter().map(|x| x * k).collect()).collect() }
    }

    pub fn block_sums(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.iter().sum()).collect()
    }

    /// Whether the point lies in `P_d` for the given setup.
    pub fn in_pd(&self, s: &QuotientSetup, d: usize) -> bool {
        self.pd_violation(s, d).is_none()
    }

    fn pd_violation(&self, s: &QuotientSetup, d: usize) -> Option<String> {
        if self.blocks.iter().map(Vec::len).collect::<Vec<_>>() != s.block_sizes() {
            return Some(format!(
                "block sizes {:?} != {:?}",
                self.blocks.iter().map(Vec::len).collect_vec(),
                s.block_sizes()
            ));
        }
        self.block_sums().iter().enumerate().find_map(|(idx, &sum)| {
            let i = idx + 1;
            (sum != d * s.c(i)).then(|| format!("block {i} sums to {sum}, need d c_{i} = {}", d * s.c(i)))
        })
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.blocks.iter().map(|b| b.iter().join(",")).join("|"))
    }
}

/// `z(Γ)`: for `j ∈ C_{i,2}`, the number of `j` in row `i+1`.
/// Works for any tableau with `r` rows, standard or not.
pub fn z_of(g: &Tableau, s: &QuotientSetup) -> LatticePoint {
    let blocks = (1..s.r())
        .map(|i| {
            let row = g.row(i + 1);
            s.c2(i).iter().map(|j| row.iter().filter(|&&x| x == j).count()).collect()
        })
        .collect();
    LatticePoint { blocks }
}

/// Weak compositions of `total` into `parts` nonnegative parts, in
/// reverse lexicographic order (largest first coordinate first).
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    match (parts, total) {
        (0, 0) => out.push(Vec::new()),
        (0, _) => {}
        _ => go(total, parts, &mut Vec::new(), &mut out),
    }
    out
}

/// All of `P_d`: per-block weak compositions of `d c_i`, combined by product.
pub fn enumerate_pd(s: &QuotientSetup, d: usize) -> Vec<LatticePoint> {
    let per_block: Vec<Vec<Vec<usize>>> = (1..s.r()).map(|i| weak_compositions(d * s.c(i), s.c2(i).len())).collect();
    if per_block.is_empty() {
        return vec![LatticePoint { blocks: Vec::new() }];
    }
    per_block.into_iter().multi_cartesian_product().map(|blocks| LatticePoint { blocks }).collect()
}

/// `∏_{i<r} binom(d c_i + |C_{i,2}| - 1, |C_{i,2}| - 1)`.
pub fn pd_count_formula(s: &QuotientSetup, d: usize) -> u64 {
    (1..s.r())
        .map(|i| {
            let k = s.c2(i).len() as u64;
            let t = (d * s.c(i)) as u64;
            match k {
                0 => u64::from(t == 0),
                _ => binomial(t + k - 1, k - 1),
            }
        })
        .product()
}

/// The tableau `Γ_z` in `ST(λ_d)`. The result is checked against the
/// membership test before it is returned.
pub fn tableau_from_lattice(z: &LatticePoint, s: &QuotientSetup, d: usize) -> Result<Tableau> {
    if let Some(reason) = z.pd_violation(s, d) {
        return Err(Error::NotInPd { d, reason });
    }
    let (r, rd) = (s.r(), s.r() * d);
    for (idx, block) in z.blocks.iter().enumerate() {
        if let Some((off, &zj)) = block.iter().enumerate().find(|(_, &zj)| zj > rd) {
            return Err(Error::NotInPd {
                d,
                reason: format!("z_{} = {zj} exceeds rd = {rd} in block {}", s.c2(idx + 1).lo + off, idx + 1),
            });
        }
    }

    let part = box_partition(s, d);
    let mut grid = vec![Vec::with_capacity(s.n() * d); r];
    for i in 1..=r {
        let zi: &[usize] = if i < r { &z.blocks[i - 1] } else { &[] };
        // B_{i,1}: C_{i,1} with multiplicity rd, then C_{i,2} with rd - z_j
        let mut upper = Vec::with_capacity(part.b1(i).len());
        for j in s.c1(i).iter() {
            upper.extend(std::iter::repeat_n(j, rd));
        }
        for (off, j) in s.c2(i).iter().enumerate() {
            upper.extend(std::iter::repeat_n(j, rd - zi[off]));
        }
        // B_{i-1,2} precedes B_{i,1} in row i
        if i > 1 {
            let lower_prev: Vec<usize> =
                s.c2(i - 1).iter().zip(&z.blocks[i - 2]).flat_map(|(j, &zj)| std::iter::repeat_n(j, zj)).collect();
            grid[i - 1].extend(lower_prev);
        }
        grid[i - 1].extend(upper);
    }
    let g = Tableau::new(grid)?;
    if !g.is_t_invariant(s, d) {
        return Err(Error::Internal(format!("constructed tableau for z = {z} is not invariant:\n{g}")));
    }
    Ok(g)
}

/// Outcome of checking both round trips of the bijection `P_d ↔ ST(λ_d)`.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub d: usize,
    pub pd_count: usize,
    pub st_count: usize,
    pub formula: u64,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.pd_count == self.st_count && self.pd_count as u64 == self.formula
    }
}

/// Checks `z ∘ Γ_· = id` on `P_d` and `Γ_· ∘ z = id` on the brute-forced
/// `ST(λ_d)`, plus the cardinalities.
pub fn verify_bijection(s: &QuotientSetup, d: usize) -> BijectionReport {
    let pd = enumerate_pd(s, d);
    let st = enumerate_invariant_tableaux(s, d);
    let mut failures = Vec::new();

    for z in &pd {
        match tableau_from_lattice(z, s, d) {
            Ok(g) => {
                let back = z_of(&g, s);
                if &back != z {
                    failures.push(format!("z(Γ_{z}) = {back}"));
                }
            }
            Err(e) => failures.push(format!("Γ_{z}: {e}")),
        }
    }
    for g in &st {
        let z = z_of(g, s);
        if !z.in_pd(s, d) {
            failures.push(format!("z of\n{g}\nis {z}, not in P_{d}"));
            continue;
        }
        match tableau_from_lattice(&z, s, d) {
            Ok(h) if &h == g => {}
            Ok(h) => failures.push(format!("Γ_(z(Γ)) differs:\n{g}\nvs\n{h}")),
            Err(e) => failures.push(format!("Γ_{z}: {e}")),
        }
    }
    BijectionReport { d, pd_count: pd.len(), st_count: st.len(), formula: pd_count_formula(s, d), failures }
}
