//! Brute-force enumeration of `ST(λ_d)`, independent of the lattice bijection.

use super::Tableau;
use crate::setup::QuotientSetup;

/// All semistandard `r × nd` tableaux with row `i` in `[l_{i-1}, a_i]` and
/// every value occurring `rd` times, in lexicographic order of the grid.
///
/// The search fills boxes row by row with weakly increasing rows, prunes on
/// column strictness and running content counts, and after each completed
/// row requires every value that no later row can hold to be saturated.
pub fn enumerate_invariant_tableaux(s: &QuotientSetup, d: usize) -> Vec<Tableau> {
    let (r, n, nd) = (s.r(), s.n(), s.n() * d);
    if d == 0 {
        return vec![Tableau::empty(r)];
    }
    let mut search = Search { s, rd: r * d, nd, grid: vec![vec![0; nd]; r], counts: vec![0; n + 1], out: Vec::new() };
    search.fill(1, 1);
    search.out
}

struct Search<'a> {
    s: &'a QuotientSetup,
    rd: usize,
    nd: usize,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
    out: Vec<Tableau>,
}

impl Search<'_> {
    fn fill(&mut self, i: usize, j: usize) {
        let r = self.s.r();
        if j > self.nd {
            // values below the next row's floor are final now
            let floor = if i < r { self.s.l(i) } else { self.s.n() + 1 };
            if (1..floor).any(|v| self.counts[v] != self.rd) {
                return;
            }
            if i == r {
                self.out.push(Tableau { grid: self.grid.clone() });
            } else {
                self.fill(i + 1, 1);
            }
            return;
        }

        let range = self.s.row_range(i);
        let mut lo = range.lo;
        if j > 1 {
            lo = lo.max(self.grid[i - 1][j - 2]);
        }
        if i > 1 {
            lo = lo.max(self.grid[i - 2][j - 1] + 1);
        }
        for v in lo..=range.hi {
            if self.counts[v] == self.rd {
                continue;
            }
            self.grid[i - 1][j - 1] = v;
            self.counts[v] += 1;
            self.fill(i, j + 1);
            self.counts[v] -= 1;
        }
        self.grid[i - 1][j - 1] = 0;
    }
}
