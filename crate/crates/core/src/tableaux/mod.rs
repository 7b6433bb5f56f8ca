//! Rectangular Young tableaux of shape `m ω_r`.

mod boxes;
mod enumerate;

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setup::{IndexTuple, Interval, QuotientSetup};

pub use boxes::{
    box_partition, check_boundary_steps, check_box_structure, is_t_invariant_via_boxes, BoundaryReport, BoundaryStep,
    BoxBlock, BoxPartition,
};
pub use enumerate::enumerate_invariant_tableaux;

/// An `r × m` filling. Rows and columns are 1-indexed in the accessors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GridRepr")]
pub struct Tableau {
    grid: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct GridRepr {
    grid: Vec<Vec<usize>>,
}

impl TryFrom<GridRepr> for Tableau {
    type Error = Error;

    fn try_from(repr: GridRepr) -> Result<Self> {
        Tableau::new(repr.grid)
    }
}

impl Tableau {
    pub fn new(grid: Vec<Vec<usize>>) -> Result<Self> {
        if grid.is_empty() {
            return Err(Error::NotRectangular("no rows".into()));
        }
        let m = grid[0].len();
        if let Some((i, row)) = grid.iter().enumerate().find(|(_, row)| row.len() != m) {
            return Err(Error::NotRectangular(format!("row {} has {} entries, row 1 has {m}", i + 1, row.len())));
        }
        Ok(Self { grid })
    }

    /// The tableau with `r` rows and no columns.
    pub fn empty(r: usize) -> Self {
        Self { grid: vec![Vec::new(); r] }
    }

    /// Builds a tableau from its columns, each of length `r`.
    pub fn from_columns(r: usize, cols: &[Vec<usize>]) -> Result<Self> {
        let mut grid = vec![Vec::with_capacity(cols.len()); r];
        for (j, col) in cols.iter().enumerate() {
            if col.len() != r {
                return Err(Error::NotRectangular(format!("column {} has {} entries", j + 1, col.len())));
            }
            for (i, &x) in col.iter().enumerate() {
                grid[i].push(x);
            }
        }
        Ok(Self { grid })
    }

    pub fn rows(&self) -> usize {
        self.grid.len()
    }

    pub fn cols(&self) -> usize {
        self.grid[0].len()
    }

    pub fn grid(&self) -> &[Vec<usize>] {
        &self.grid
    }

    /// Row `i`, 1-indexed.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.grid[i - 1]
    }

    /// Entry `Γ(i, j)`, 1-indexed.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.grid[i - 1][j - 1]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: usize) {
        self.grid[i - 1][j - 1] = value;
    }

    /// `col_j(Γ)` as a plain vector, 1-indexed.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.grid.iter().map(|row| row[j - 1]).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (1..=self.cols()).map(|j| self.column(j))
    }

    /// Columns as index tuples, when the tableau is column standard.
    pub fn column_tuples(&self) -> Option<Vec<IndexTuple>> {
        self.columns().map(|c| IndexTuple::from_increasing(c).ok()).collect()
    }

    /// Columns `from..=to` (1-indexed) as a new tableau.
    pub fn column_slice(&self, from: usize, to: usize) -> Tableau {
        let grid =
            self.grid.iter().map(|row| if to < from { Vec::new() } else { row[from - 1..to].to_vec() }).collect();
        Tableau { grid }
    }

    pub fn is_column_standard(&self) -> bool {
        self.grid.iter().tuple_windows().all(|(up, down)| up.iter().zip(down).all(|(a, b)| a < b))
    }

    pub fn is_row_semistandard(&self) -> bool {
        self.grid.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.is_row_semistandard() && self.is_column_standard()
    }

    /// `(wt_1, ..., wt_n)`: occurrences of each value. Values above `n` are ignored.
    pub fn weight(&self, n: usize) -> Vec<usize> {
        let mut wt = vec![0; n];
        for &x in self.grid.iter().flatten() {
            if (1..=n).contains(&x) {
                wt[x - 1] += 1;
            }
        }
        wt
    }

    pub fn entries_within(&self, n: usize) -> bool {
        self.grid.iter().flatten().all(|&x| (1..=n).contains(&x))
    }

    /// Column concatenation `Γ1 Γ2`.
    pub fn product(&self, other: &Tableau) -> Result<Tableau> {
        if self.rows() != other.rows() {
            return Err(Error::RowMismatch { left: self.rows(), right: other.rows() });
        }
        let grid = self.grid.iter().zip(&other.grid).map(|(a, b)| a.iter().chain(b).copied().collect()).collect();
        Ok(Tableau { grid })
    }

    /// `(Γ^{(1)}, Γ^{(2)})`: columns `1..=rd` and `rd+1..=nd`.
    pub fn split(&self, s: &QuotientSetup, d: usize) -> Result<(Tableau, Tableau)> {
        let (rd, nd) = (s.r() * d, s.n() * d);
        if self.rows() != s.r() {
            return Err(Error::RowMismatch { left: self.rows(), right: s.r() });
        }
        if self.cols() != nd {
            return Err(Error::WrongColumnCount { expected: nd, found: self.cols() });
        }
        Ok((self.column_slice(1, rd), self.column_slice(rd + 1, nd)))
    }

    fn rows_within(&self, range: impl Fn(usize) -> Interval) -> bool {
        self.grid.iter().enumerate().all(|(idx, row)| {
            let iv = range(idx + 1);
            row.iter().all(|&x| iv.contains(x))
        })
    }

    /// P1: row `i` entries lie in `[l_{i-1}, a_{i-1}+1]`.
    pub fn satisfies_p1(&self, s: &QuotientSetup) -> bool {
        self.rows() == s.r() && self.rows_within(|i| s.p1_range(i))
    }

    /// P2: row `i` entries lie in `[a_{i-1}+1, a_i]`.
    pub fn satisfies_p2(&self, s: &QuotientSetup) -> bool {
        self.rows() == s.r() && self.rows_within(|i| s.p2_range(i))
    }

    /// Membership in `ST(λ_d)`: semistandard, every value of `[1, n]`
    /// occurring exactly `rd` times, row `i` inside `[l_{i-1}, a_i]`.
    pub fn is_t_invariant(&self, s: &QuotientSetup, d: usize) -> bool {
        self.rows() == s.r()
            && self.cols() == s.n() * d
            && self.is_semistandard()
            && self.entries_within(s.n())
            && self.weight(s.n()).iter().all(|&k| k == s.r() * d)
            && self.rows_within(|i| s.row_range(i))
    }

    /// Stable rearrangement of columns so that row `i` is non-decreasing.
    pub(crate) fn sort_columns_by_row(&self, i: usize) -> Tableau {
        let mut cols: Vec<Vec<usize>> = self.columns().collect();
        cols.sort_by_key(|c| c[i - 1]);
        Tableau::from_columns(self.rows(), &cols).expect("columns have uniform length")
    }

    /// Whitespace-separated grid: one line per row.
    pub fn parse_grid(text: &str) -> Result<Tableau> {
        let mut grid = Vec::new();
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let row = line
                .split_whitespace()
                .enumerate()
                .map(|(j, tok)| {
                    tok.parse::<usize>().map_err(|_| {
                        Error::Parse(format!("cell ({}, {}) = {tok:?} is not a positive integer", i + 1, j + 1))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            grid.push(row);
        }
        Tableau::new(grid)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, row) in self.grid.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}
