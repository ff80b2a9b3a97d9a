//! Euler characteristics of graph products of groups over a flag complex.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::complex::SimplicialComplex;
use crate::error::{check_len, Error, Result};
use crate::euler::{chi_cone_case, chi_points_case, one_plus_product, EulerVector};
use crate::poly::Rational;

/// A vertex group, described only by what the formulas need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// A finite group of order `n >= 1`.
    FiniteOfOrder(BigInt),
    /// A group of type FL with Euler characteristic `chi(BG)`.
    TypeFl(BigInt),
}

impl GroupSpec {
    pub fn finite(order: u64) -> Self {
        GroupSpec::FiniteOfOrder(BigInt::from(order))
    }

    pub fn type_fl(chi: i64) -> Self {
        GroupSpec::TypeFl(BigInt::from(chi))
    }
}

fn require_flag(complex: &SimplicialComplex) -> Result<()> {
    if complex.is_flag() {
        Ok(())
    } else {
        Err(Error::NotFlag)
    }
}

/// `chi(BG) = f_L(chi(BG_i) - 1)` for the graph product of type FL groups.
pub fn chi_classifying_space(complex: &SimplicialComplex, specs: &[GroupSpec]) -> Result<BigInt> {
    require_flag(complex)?;
    check_len(complex.vertex_count(), specs.len())?;
    let chis = specs
        .iter()
        .enumerate()
        .map(|(i, s)| match s {
            GroupSpec::TypeFl(chi) => Ok(chi.clone()),
            GroupSpec::FiniteOfOrder(_) => Err(Error::UnexpectedGroupKind(i + 1)),
        })
        .collect::<Result<Vec<_>>>()?;
    chi_points_case(complex, &EulerVector::new(chis))
}

/// Rational Euler characteristic `hhat_L(-q) / (1 + q)_[m]` of the graph
/// product of finite groups of orders `q_i + 1`.
///
/// The numerator is `chi(BG_0)` for the kernel `G_0` of the map to `prod G_i`.
pub fn chi_rational_graph_product(complex: &SimplicialComplex, specs: &[GroupSpec]) -> Result<Rational> {
    require_flag(complex)?;
    check_len(complex.vertex_count(), specs.len())?;
    let q = specs
        .iter()
        .enumerate()
        .map(|(i, s)| match s {
            GroupSpec::FiniteOfOrder(n) if n.is_one() => Err(Error::TrivialFactor(i + 1)),
            GroupSpec::FiniteOfOrder(n) if !n.is_positive() => Err(Error::NonPositiveQ(i + 1)),
            GroupSpec::FiniteOfOrder(n) => Ok(n - 1),
            GroupSpec::TypeFl(_) => Err(Error::UnexpectedGroupKind(i + 1)),
        })
        .collect::<Result<Vec<_>>>()?;
    let kernel_chi = chi_cone_case(complex, &q)?;
    Ok(Rational::new(kernel_chi, one_plus_product(&q)))
}
