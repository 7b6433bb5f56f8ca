//! Plücker coordinates, shuffle relations and their restriction to
//! `X^{v_l}_w`.

mod matrix;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::setup::{vanishes_on_richardson, IndexTuple, QuotientSetup};
use crate::tableaux::Tableau;

pub use matrix::{
    det_bareiss, rank, sample_richardson_point, sample_richardson_point_with, MinorTable, PointMatrix, ENTRY_BOUND,
};

/// Sign of the sorting permutation and the sorted tuple, or `None` when the
/// sequence repeats a value (the alternating coordinate is then zero).
pub fn signed_coordinate(seq: &[usize]) -> Option<(i64, IndexTuple)> {
    let inversions = (0..seq.len()).tuple_combinations().filter(|&(i, j)| seq[i] > seq[j]).count();
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    let tuple = IndexTuple::from_increasing(sorted).ok()?;
    Some((if inversions % 2 == 0 { 1 } else { -1 }, tuple))
}

/// Product of Plücker coordinates, factors kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<IndexTuple>);

impl Monomial {
    pub fn new(mut factors: Vec<IndexTuple>) -> Self {
        factors.sort();
        Self(factors)
    }

    /// `f_Γ`: the product over the columns of a column-standard tableau.
    pub fn of_tableau(g: &Tableau) -> Option<Self> {
        g.column_tuples().map(Self::new)
    }

    pub fn factors(&self) -> &[IndexTuple] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// Exact value at a point.
    pub fn evaluate(&self, x: &PointMatrix) -> BigInt {
        self.0.iter().map(|t| BigInt::from(x.minor(t))).product()
    }

    pub fn evaluate_with(&self, minors: &MinorTable) -> BigInt {
        let mut acc = BigInt::one();
        for t in &self.0 {
            let m = minors.get(t);
            if m == 0 {
                return BigInt::zero();
            }
            acc *= m;
        }
        acc
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for t in &self.0 {
            write!(f, "p{}", t.entries().iter().join(""))?;
        }
        Ok(())
    }
}

/// Sparse integer combination of Plücker monomials; zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlueckerPolynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl PlueckerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, 1);
        p
    }

    pub fn add_term(&mut self, m: Monomial, coef: i64) {
        if coef == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coef);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn sub(&self, other: &PlueckerPolynomial) -> PlueckerPolynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn evaluate(&self, x: &PointMatrix) -> BigInt {
        self.terms().map(|(m, c)| m.evaluate(x) * c).sum()
    }

    pub fn evaluate_with(&self, minors: &MinorTable) -> BigInt {
        self.terms().map(|(m, c)| m.evaluate_with(minors) * c).sum()
    }

    /// `{"terms": [{"coef": int, "factors": [[tuple]...]}]}`
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms().map(|(m, c)| json!({ "coef": c, "factors": m.factors() })).collect();
        json!({ "terms": terms })
    }
}

impl fmt::Display for PlueckerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            match (idx, c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShuffleKind {
    Identity,
    /// The exchange of `alpha_k` and `beta_k`.
    Transposition,
    Other,
}

/// One summand of a shuffle relation before like terms are merged.
#[derive(Clone, Debug, Serialize)]
pub struct ShuffleTerm {
    /// Positions in the concatenation `M ⧺ N` sent to the first factor.
    pub chosen: Vec<usize>,
    pub kind: ShuffleKind,
    /// Sign of the shuffle times the two sorting signs; 0 for a repeat.
    pub coef: i64,
    pub alpha_sigma: Option<IndexTuple>,
    pub beta_sigma: Option<IndexTuple>,
}

impl ShuffleTerm {
    pub fn has_repeat(&self) -> bool {
        self.alpha_sigma.is_none() || self.beta_sigma.is_none()
    }

    pub fn monomial(&self) -> Option<Monomial> {
        Some(Monomial::new(vec![self.alpha_sigma.clone()?, self.beta_sigma.clone()?]))
    }

    /// Whether some factor vanishes identically on `X^{v_l}_w`.
    pub fn vanishes_on(&self, s: &QuotientSetup) -> bool {
        [&self.alpha_sigma, &self.beta_sigma].into_iter().flatten().any(|t| vanishes_on_richardson(t, s))
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let inv = (0..p.len()).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Every summand of the shuffle relation `P(alpha, beta, k)`, one per
/// subset `S` of positions of `M ⧺ N` with `|S| = |M|`, where
/// `M = (alpha_k..alpha_r)` and `N = (beta_1..beta_k)`. The first factor is
/// built from `alpha_1..alpha_{k-1}` followed by `S`, the second from the
/// complement followed by `beta_{k+1}..beta_r`.
pub fn shuffle_terms(alpha: &IndexTuple, beta: &IndexTuple, k: usize) -> Result<Vec<ShuffleTerm>> {
    let r = alpha.len();
    if beta.len() != r || k < 1 || k > r {
        return Err(Error::DegreeMismatch(format!("k = {k} with tuples of length {r} and {}", beta.len())));
    }
    if alpha.at(k) <= beta.at(k) {
        return Err(Error::NoViolation { k });
    }
    let a = alpha.entries();
    let b = beta.entries();
    let joined: Vec<usize> = a[k - 1..].iter().chain(&b[..k]).copied().collect();
    let m_len = r - k + 1;
    let transposition: Vec<usize> = (1..m_len).chain(std::iter::once(m_len + k - 1)).collect();

    let mut out = Vec::new();
    for chosen in (0..joined.len()).combinations(m_len) {
        let rest: Vec<usize> = (0..joined.len()).filter(|p| !chosen.contains(p)).collect();
        let shuffle_sign = permutation_sign(&chosen.iter().chain(&rest).copied().collect_vec());

        let first: Vec<usize> = a[..k - 1].iter().copied().chain(chosen.iter().map(|&p| joined[p])).collect();
        let second: Vec<usize> = rest.iter().map(|&p| joined[p]).chain(b[k..].iter().copied()).collect();
        let (sa, ta) = signed_coordinate(&first).map_or((0, None), |(s, t)| (s, Some(t)));
        let (sb, tb) = signed_coordinate(&second).map_or((0, None), |(s, t)| (s, Some(t)));

        let kind = if chosen.iter().copied().eq(0..m_len) {
            ShuffleKind::Identity
        } else if chosen == transposition {
            ShuffleKind::Transposition
        } else {
            ShuffleKind::Other
        };
        out.push(ShuffleTerm { chosen, kind, coef: shuffle_sign * sa * sb, alpha_sigma: ta, beta_sigma: tb });
    }
    Ok(out)
}

/// Merges summands into a polynomial, dropping repeated-index terms.
pub fn relation_from_terms(terms: &[ShuffleTerm]) -> PlueckerPolynomial {
    let mut p = PlueckerPolynomial::zero();
    for t in terms {
        if let Some(m) = t.monomial() {
            p.add_term(m, t.coef);
        }
    }
    p
}

/// The shuffle relation `P(alpha, beta, k)`, which vanishes on `G(r, n)`.
pub fn shuffle_relation(alpha: &IndexTuple, beta: &IndexTuple, k: usize) -> Result<PlueckerPolynomial> {
    Ok(relation_from_terms(&shuffle_terms(alpha, beta, k)?))
}

/// Drops every term that contains a coordinate vanishing on `X^{v_l}_w`.
pub fn restrict_to_richardson(poly: &PlueckerPolynomial, s: &QuotientSetup) -> PlueckerPolynomial {
    let mut out = PlueckerPolynomial::zero();
    for (m, c) in poly.terms() {
        if !m.factors().iter().any(|t| vanishes_on_richardson(t, s)) {
            out.add_term(m.clone(), c);
        }
    }
    out
}
