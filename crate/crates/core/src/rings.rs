//! The graded invariant ring `R = ⊕ R_d` (basis `ST(λ_d)`), the
//! Segre–Veronese algebra `A`, and the map `Φ` between them.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{enumerate_pd, pd_count_formula, tableau_from_lattice, z_of, LatticePoint};
use crate::setup::QuotientSetup;
use crate::straighten::straighten_invariant_product;
use crate::tableaux::{enumerate_invariant_tableaux, Tableau};

/// The basis labels of one graded piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedBasis<L> {
    pub degree: usize,
    pub labels: Vec<L>,
}

impl<L> GradedBasis<L> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

/// `ST(λ_d)`, built through the lattice bijection.
pub fn basis_r(s: &QuotientSetup, d: usize) -> Result<GradedBasis<Tableau>> {
    let labels = enumerate_pd(s, d).iter().map(|z| tableau_from_lattice(z, s, d)).collect::<Result<_>>()?;
    Ok(GradedBasis { degree: d, labels })
}

/// Exponent vectors `(e_j)_{j ∈ C}` with block sums `d c_i`: the monomial
/// basis of `A_d`.
pub fn basis_a(s: &QuotientSetup, d: usize) -> GradedBasis<LatticePoint> {
    GradedBasis { degree: d, labels: enumerate_pd(s, d) }
}

/// `Φ` on basis elements: the exponent vector `z(Γ)`.
pub fn phi(g: &Tableau, s: &QuotientSetup, d: usize) -> Result<LatticePoint> {
    if !g.is_t_invariant(s, d) {
        return Err(Error::NotInvariant { d });
    }
    Ok(z_of(g, s))
}

/// Homogeneous element of `R` in the standard monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantElement {
    pub degree: usize,
    pub coeffs: BTreeMap<Tableau, Rational64>,
}

impl InvariantElement {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coeffs: BTreeMap::new() }
    }

    pub fn basis(g: Tableau, degree: usize) -> Self {
        let mut e = Self::zero(degree);
        e.coeffs.insert(g, Rational64::one());
        e
    }

    /// The unit: the empty tableau in degree 0.
    pub fn one(s: &QuotientSetup) -> Self {
        Self::basis(Tableau::empty(s.r()), 0)
    }

    pub fn add_term(&mut self, g: Tableau, c: Rational64) {
        let entry = self.coeffs.entry(g.clone()).or_insert_with(Rational64::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&g);
        }
    }
}

/// Homogeneous element of `A` in its monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreElement {
    pub degree: usize,
    pub coeffs: BTreeMap<LatticePoint, Rational64>,
}

impl SegreElement {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coeffs: BTreeMap::new() }
    }

    pub fn add_term(&mut self, e: LatticePoint, c: Rational64) {
        let entry = self.coeffs.entry(e.clone()).or_insert_with(Rational64::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Componentwise product: exponent vectors add.
    pub fn mul(&self, other: &SegreElement) -> SegreElement {
        let mut out = SegreElement::zero(self.degree + other.degree);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }
}

/// Linear extension of `Φ`.
pub fn phi_element(f: &InvariantElement, s: &QuotientSetup) -> Result<SegreElement> {
    let mut out = SegreElement::zero(f.degree);
    for (g, c) in &f.coeffs {
        out.add_term(phi(g, s, f.degree)?, *c);
    }
    Ok(out)
}

/// Product in `R`: basis products are resolved by straightening, then
/// extended bilinearly.
pub fn multiply_r(f: &InvariantElement, g: &InvariantElement, s: &QuotientSetup) -> Result<InvariantElement> {
    let mut out = InvariantElement::zero(f.degree + g.degree);
    for (t1, c1) in &f.coeffs {
        for (t2, c2) in &g.coeffs {
            let prod = straighten_invariant_product(t1, t2, s, f.degree, g.degree)?;
            out.add_term(prod, c1 * c2);
        }
    }
    Ok(out)
}

/// One line of the Hilbert-function table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub d: usize,
    /// `|ST(λ_d)|` by brute-force enumeration.
    pub dim_r: usize,
    /// `dim A_d` from the monomial basis.
    pub dim_a: usize,
    /// `∏ binom(a_i - l_i + d c_i, a_i - l_i)`.
    pub product_of_projective: u64,
}

impl HilbertRow {
    pub fn equal(&self) -> bool {
        self.dim_r == self.dim_a && self.dim_a as u64 == self.product_of_projective
    }
}

/// Dimensions of `R_d` and `A_d` for `1 <= d <= d_max`.
pub fn hilbert(s: &QuotientSetup, d_max: usize) -> Vec<HilbertRow> {
    (1..=d_max)
        .map(|d| HilbertRow {
            d,
            dim_r: enumerate_invariant_tableaux(s, d).len(),
            dim_a: basis_a(s, d).dim(),
            product_of_projective: pd_count_formula(s, d),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases() {
        let s = QuotientSetup::new(2, 5, &[2]).unwrap();
        assert_eq!(basis_r(&s, 1).unwrap().dim(), 2);
        assert_eq!(basis_r(&s, 0).unwrap().labels, vec![Tableau::empty(2)]);
        let a2 = basis_a(&s, 2);
        let flat: Vec<_> = a2.labels.iter().map(LatticePoint::flat).collect();
        assert_eq!(flat, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);

        let s = QuotientSetup::new(3, 7, &[2, 5]).unwrap();
        assert_eq!(basis_r(&s, 1).unwrap().dim(), 3);
        assert_eq!(basis_a(&s, 1).dim(), 3);
        assert_eq!(basis_a(&s, 0).dim(), 1);
    }

    #[test]
    fn phi_examples() {
        let s = QuotientSetup::new(2, 5, &[2]).unwrap();
        let g = Tableau::new(vec![vec![1, 1, 2, 3, 3], vec![2, 4, 4, 5, 5]]).unwrap();
        assert_eq!(phi(&g, &s, 1).unwrap().flat(), vec![1, 0]);
        assert_eq!(phi(&Tableau::empty(2), &s, 0).unwrap().flat(), vec![0, 0]);
        assert!(phi(&g, &s, 2).is_err());
    }

    #[test]
    fn products() {
        let s = QuotientSetup::new(2, 5, &[2]).unwrap();
        let b = basis_r(&s, 1).unwrap();
        // labels are ordered (1,0), (0,1)
        let f = InvariantElement::basis(b.labels[0].clone(), 1);
        let g = InvariantElement::basis(b.labels[1].clone(), 1);
        let fg = multiply_r(&f, &g, &s).unwrap();
        assert_eq!(fg.coeffs.len(), 1);
        let (t, c) = fg.coeffs.iter().next().unwrap();
        assert_eq!(*c, Rational64::one());
        assert_eq!(z_of(t, &s).flat(), vec![1, 1]);

        let one = InvariantElement::one(&s);
        assert_eq!(multiply_r(&one, &f, &s).unwrap(), f);

        let lhs = phi_element(&fg, &s).unwrap();
        let rhs = phi_element(&f, &s).unwrap().mul(&phi_element(&g, &s).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hilbert_tables() {
        let dims = |r, n, l: &[usize]| -> Vec<usize> {
            let s = QuotientSetup::new(r, n, l).unwrap();
            hilbert(&s, 3).into_iter().inspect(|row| assert!(row.equal(), "{row:?}")).map(|row| row.dim_r).collect()
        };
        assert_eq!(dims(2, 5, &[2]), vec![2, 3, 4]);
        assert_eq!(dims(3, 7, &[2, 5]), vec![3, 5, 7]);
        assert_eq!(dims(2, 5, &[3]), vec![1, 1, 1]);
    }
}
