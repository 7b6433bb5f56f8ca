//! Torus-invariant standard monomials on the Richardson varieties
//! `X^{v_l}_w ⊂ G(r, n)` with `gcd(r, n) = 1`.
//!
//! The crate enumerates the invariant tableaux `ST(λ_d)`, identifies them
//! with lattice points of `P_d`, straightens products with binomial
//! Plücker relations, and compares the resulting graded ring with the
//! Segre–Veronese coordinate ring of `∏ P^{a_i - l_i}` twisted by `O(c_i)`.
//! Identities between Plücker polynomials are confirmed by evaluating exact
//! integer minors on explicit matrices.

pub mod checks;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod pluecker;
pub mod rings;
pub mod setup;
pub mod straighten;
pub mod tableaux;

pub use error::{Error, Result};
pub use lattice::LatticePoint;
pub use pluecker::{PlueckerPolynomial, PointMatrix};
pub use setup::{IndexTuple, QuotientSetup};
pub use tableaux::Tableau;
