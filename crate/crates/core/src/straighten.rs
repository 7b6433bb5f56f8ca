//! Straightening on `X^{v_l}_w`, where every quadratic relation that is
//! needed collapses to a binomial exchange of two entries in one row.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::setup::QuotientSetup;
use crate::tableaux::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// Row `i` inside `[l_{i-1}, a_{i-1}+1]`; rows are sorted top-down.
    P1,
    /// Row `i` inside `[a_{i-1}+1, a_i]`; rows are sorted bottom-up.
    P2,
}

/// Order in which inversions of the active row are resolved.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Schedule {
    #[default]
    LeftmostFirst,
    RightmostFirst,
}

fn holds(g: &Tableau, regime: Regime, s: &QuotientSetup) -> bool {
    match regime {
        Regime::P1 => g.satisfies_p1(s),
        Regime::P2 => g.satisfies_p2(s),
    }
}

fn row_sorted(g: &Tableau, i: usize) -> bool {
    g.row(i).windows(2).all(|w| w[0] <= w[1])
}

/// Exchanges `Γ(i, j)` and `Γ(i, j+1)`. This is the binomial relation
/// `p_α p_β = p_{α'} p_{β'}` on the two columns, so `f_Γ` is unchanged on
/// `X^{v_l}_w`.
///
/// Requires `Γ(i,j) > Γ(i,j+1)`, a column-standard input satisfying the
/// regime predicate, and the rows already processed (above `i` for P1, below
/// `i` for P2) to be non-decreasing, so that `i` is the first (P1) or last
/// (P2) row where the two columns are out of order.
pub fn swap_step(g: &Tableau, i: usize, j: usize, regime: Regime, s: &QuotientSetup) -> Result<Tableau> {
    let reject = |reason: &str| Error::SwapRejected { row: i, col: j, reason: reason.into() };
    if i < 1 || i > g.rows() || j < 1 || j + 1 > g.cols() {
        return Err(reject("position outside the tableau"));
    }
    if !holds(g, regime, s) {
        return Err(reject(&format!("{regime:?} fails")));
    }
    if !g.is_column_standard() {
        return Err(reject("input is not column standard"));
    }
    if g.get(i, j) <= g.get(i, j + 1) {
        return Err(reject("no inversion"));
    }
    let settled = match regime {
        Regime::P1 => (1..i).all(|t| row_sorted(g, t)),
        Regime::P2 => (i + 1..=g.rows()).all(|t| row_sorted(g, t)),
    };
    if !settled {
        return Err(reject("earlier rows are not sorted"));
    }

    let mut out = g.clone();
    let (x, y) = (g.get(i, j), g.get(i, j + 1));
    out.set(i, j, y);
    out.set(i, j + 1, x);
    if !out.is_column_standard() {
        return Err(reject("exchange broke column strictness"));
    }
    if !holds(&out, regime, s) {
        return Err(reject("exchange left the regime"));
    }
    Ok(out)
}

fn next_inversion(g: &Tableau, i: usize, schedule: Schedule) -> Option<usize> {
    let row = g.row(i);
    let mut inv = (1..row.len()).filter(|&j| row[j - 1] > row[j]);
    match schedule {
        Schedule::LeftmostFirst => inv.next(),
        Schedule::RightmostFirst => inv.next_back(),
    }
}

fn straighten_with(g: &Tableau, s: &QuotientSetup, regime: Regime, schedule: Schedule) -> Result<(Tableau, usize)> {
    if !holds(g, regime, s) {
        return Err(Error::SwapRejected { row: 0, col: 0, reason: format!("{regime:?} fails on input") });
    }
    if !g.is_column_standard() {
        return Err(Error::SwapRejected { row: 0, col: 0, reason: "input is not column standard".into() });
    }
    let r = g.rows();
    if g.cols() == 0 {
        return Ok((g.clone(), 0));
    }
    let (first, rest): (usize, Vec<usize>) = match regime {
        Regime::P1 => (1, (2..=r).collect()),
        Regime::P2 => (r, (1..r).rev().collect()),
    };
    let mut cur = g.sort_columns_by_row(first);
    let mut swaps = 0;
    let bound = r * g.cols() * g.cols();
    for i in rest {
        while let Some(j) = next_inversion(&cur, i, schedule) {
            cur = swap_step(&cur, i, j, regime, s)?;
            swaps += 1;
            if swaps > bound {
                return Err(Error::Internal(format!("straightening exceeded {bound} exchanges")));
            }
        }
    }
    Ok((cur, swaps))
}

/// `s(Γ)` for a column-standard P1 tableau: sort row 1 by moving columns,
/// then sort rows `2..=r` by binomial exchanges. Keeps `z` and P1.
pub fn straighten_p1(g: &Tableau, s: &QuotientSetup) -> Result<Tableau> {
    straighten_p1_with(g, s, Schedule::default()).map(|(t, _)| t)
}

/// As [`straighten_p1`], also returning the number of exchanges.
pub fn straighten_p1_with(g: &Tableau, s: &QuotientSetup, schedule: Schedule) -> Result<(Tableau, usize)> {
    straighten_with(g, s, Regime::P1, schedule)
}

/// `s(Γ)` for a column-standard P2 tableau: sort row `r` by moving
/// columns, then rows `r-1..=1` by binomial exchanges.
pub fn straighten_p2(g: &Tableau, s: &QuotientSetup) -> Result<Tableau> {
    straighten_p2_with(g, s, Schedule::default()).map(|(t, _)| t)
}

pub fn straighten_p2_with(g: &Tableau, s: &QuotientSetup, schedule: Schedule) -> Result<(Tableau, usize)> {
    straighten_with(g, s, Regime::P2, schedule)
}

/// `s(Γ1 Γ2) = s(Γ1^{(1)} Γ2^{(1)}) · s(Γ1^{(2)} Γ2^{(2)})`, a member of
/// `ST(λ_{d1+d2})` with `f_{Γ1} f_{Γ2} = f_{s(Γ1Γ2)}` on `X^{v_l}_w`.
pub fn straighten_invariant_product(
    g1: &Tableau,
    g2: &Tableau,
    s: &QuotientSetup,
    d1: usize,
    d2: usize,
) -> Result<Tableau> {
    straighten_invariant_product_with(g1, g2, s, d1, d2, Schedule::default())
}

pub fn straighten_invariant_product_with(
    g1: &Tableau,
    g2: &Tableau,
    s: &QuotientSetup,
    d1: usize,
    d2: usize,
    schedule: Schedule,
) -> Result<Tableau> {
    if !g1.is_t_invariant(s, d1) {
        return Err(Error::NotInvariant { d: d1 });
    }
    if !g2.is_t_invariant(s, d2) {
        return Err(Error::NotInvariant { d: d2 });
    }
    let (a1, a2) = g1.split(s, d1)?;
    let (b1, b2) = g2.split(s, d2)?;
    let (left, _) = straighten_p1_with(&a1.product(&b1)?, s, schedule)?;
    let (right, _) = straighten_p2_with(&a2.product(&b2)?, s, schedule)?;
    let out = left.product(&right)?;
    if !out.is_t_invariant(s, d1 + d2) {
        return Err(Error::Internal(format!("straightened product is not invariant:\n{out}")));
    }
    Ok(out)
}
