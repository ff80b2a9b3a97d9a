//! Exact Euler characteristics of polyhedral products.
//!
//! Given a simplicial complex `L` on `{1, ..., m}` and pairs `(A_i, B_i)`,
//! the polyhedral product `Z_L(A, B)` is the set of points of `prod A_i`
//! whose coordinates outside `B_i` are indexed by a simplex of `L`. Its Euler
//! characteristic depends only on `L` and the integers `chi(A_i)`,
//! `chi(B_i)`; this crate computes it exactly, along with the face
//! polynomials `f_L`, `hhat_L`, `h_L` and the Euler characteristics of graph
//! products of groups that fall out as special cases.
//!
//! ```
//! use polyprod::{chi_polyhedral_product, EulerVector, SimplicialComplex};
//!
//! // Z_L(D^1, S^0) over the square is a torus.
//! let square = SimplicialComplex::cycle(4).unwrap();
//! let chi = chi_polyhedral_product(&square, &EulerVector::constant(4, 1), &EulerVector::constant(4, 2)).unwrap();
//! assert_eq!(chi, 0.into());
//! ```
//!
//! The [`oracle`] module recomputes the same number by enumerating product
//! cells, and is used to cross-check the formulas.

pub mod complex;
pub mod error;
pub mod euler;
pub mod groups;
pub mod oracle;
pub mod poly;

pub use complex::{SimplicialComplex, VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use euler::{
    cd_sign_check, charney_davis_quantity, chi_cone_case, chi_manifold_case, chi_points_case, chi_polyhedral_product,
    ecc_cd_equivalence_report, manifold_dimension, CdSignCheck, EccCdReport, EulerVector, ManifoldPairSpec, Sign,
};
pub use groups::{chi_classifying_space, chi_rational_graph_product, GroupSpec};
pub use oracle::{chi_brute_force, chi_brute_force_with_budget, chi_of_model, Cell, CellPairModel};
pub use poly::{
    f_polynomial, h_polynomial, hhat_polynomial, monomial_product, specialize, MultilinearPoly, Rational, UniPoly,
};

pub use num_bigint::BigInt;
