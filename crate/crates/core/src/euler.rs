//! Euler characteristics of polyhedral products `Z_L(A, B)`.
//!
//! The spaces themselves never appear: a pair `(A_i, B_i)` enters only
//! through the integers `chi(A_i)` and `chi(B_i)`, collected per vertex in an
//! [`EulerVector`]. The general sum runs over `S(L)`, one term per simplex:
//!
//! ```text
//! chi(Z_L(A, B)) = sum_{J in S(L)} (e(A) - e(B))_J * e(B)_{[m] - J}
//! ```
//!
//! The special cases (points, cones on finite sets, odd-dimensional
//! manifolds with boundary) reduce to evaluations of `f_L`, `hhat_L` and
//! `h_L`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{check_len, Error, Result};
use crate::poly::{f_polynomial, h_polynomial, hhat_polynomial, monomial_product, Rational};

/// Per-vertex Euler characteristics, `values[i - 1]` belonging to vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerVector(Vec<BigInt>);

impl EulerVector {
    pub fn new(values: Vec<BigInt>) -> Self {
        EulerVector(values)
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        EulerVector(values.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn constant(m: usize, value: impl Into<BigInt>) -> Self {
        EulerVector(vec![value.into(); m])
    }

    pub fn values(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation, matching the vertex labelling of a join.
    pub fn concat(&self, other: &EulerVector) -> EulerVector {
        EulerVector(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// Reduced Euler characteristics `chi - 1`.
    pub fn reduced(&self) -> Vec<BigInt> {
        self.0.iter().map(|x| x - 1).collect()
    }
}

impl From<Vec<BigInt>> for EulerVector {
    fn from(values: Vec<BigInt>) -> Self {
        EulerVector(values)
    }
}

/// Pairs `(M_i, ∂M_i)` where `M_i` is a `(2 k_i + 1)`-manifold with nonempty
/// boundary, described by `k_i` and `chi(∂M_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldPairSpec {
    k: Vec<u32>,
    chi_boundary: Vec<BigInt>,
}

impl ManifoldPairSpec {
    /// Fails with [`Error::OddBoundaryEuler`] if some `chi(∂M_i)` is odd:
    /// `chi(∂M) = 2 chi(M)` for odd-dimensional compact manifolds.
    pub fn new(k: Vec<u32>, chi_boundary: Vec<BigInt>) -> Result<Self> {
        check_len(k.len(), chi_boundary.len())?;
        if let Some(i) = chi_boundary.iter().position(|c| c.is_odd()) {
            return Err(Error::OddBoundaryEuler(i + 1));
        }
        Ok(ManifoldPairSpec { k, chi_boundary })
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn chi_boundary(&self) -> &[BigInt] {
        &self.chi_boundary
    }

    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    /// `e(M) = e(∂M) / 2`.
    pub fn chi_manifolds(&self) -> EulerVector {
        EulerVector(self.chi_boundary.iter().map(|c| c / 2).collect())
    }

    /// `e(∂M)_[m]`.
    pub fn boundary_product(&self) -> BigInt {
        self.chi_boundary.iter().product()
    }
}

/// `chi(Z_L(A, B))` from `e(A)` and `e(B)`.
pub fn chi_polyhedral_product(complex: &SimplicialComplex, e_a: &EulerVector, e_b: &EulerVector) -> Result<BigInt> {
    let m = complex.vertex_count();
    check_len(m, e_a.len())?;
    check_len(m, e_b.len())?;
    let diff: Vec<BigInt> = e_a.0.iter().zip(&e_b.0).map(|(a, b)| a - b).collect();
    let full = complex.vertex_set();
    Ok(complex
        .simplices()
        .iter()
        .map(|&j| monomial_product(&diff, j) * monomial_product(&e_b.0, full.difference(j)))
        .sum())
}

/// Every `B_i` a point: `chi(Z_L(A, *)) = f_L(e(A) - 1)`.
pub fn chi_points_case(complex: &SimplicialComplex, e_a: &EulerVector) -> Result<BigInt> {
    check_len(complex.vertex_count(), e_a.len())?;
    f_polynomial(complex).eval_int(&e_a.reduced())
}

/// `B_i` a set of `q_i + 1` points and `A_i` its cone: `chi = hhat_L(-q)`.
pub fn chi_cone_case(complex: &SimplicialComplex, q: &[BigInt]) -> Result<BigInt> {
    check_len(complex.vertex_count(), q.len())?;
    if let Some(i) = q.iter().position(|x| !x.is_positive()) {
        return Err(Error::NonPositiveQ(i + 1));
    }
    let minus_q: Vec<BigInt> = q.iter().map(|x| -x).collect();
    hhat_polynomial(complex).eval_int(&minus_q)
}

/// `chi(Z_L(M, ∂M)) = e(∂M)_[m] * f_L(-1/2) = e(∂M)_[m] * h_L(-1) / 2^d`.
///
/// Computed through the general sum with `e(A) = e(∂M) / 2`. For even `d`
/// the divisor `2^d` equals `(-2)^d`; for odd `d` only `2^d` is correct
/// (one vertex, `(D^1, S^0)`: `Z = D^1`, `chi = 1`, `h_L(-1) = 1`).
///
/// # Panics
///
/// If the closed form above disagrees with the general sum.
pub fn chi_manifold_case(complex: &SimplicialComplex, spec: &ManifoldPairSpec) -> Result<BigInt> {
    check_len(complex.vertex_count(), spec.len())?;
    let e_b = EulerVector(spec.chi_boundary.clone());
    let chi = chi_polyhedral_product(complex, &spec.chi_manifolds(), &e_b)?;
    let closed = Rational::from_integer(spec.boundary_product() * charney_davis_quantity(complex))
        / Rational::from_integer(BigInt::from(2).pow(complex.top_degree() as u32));
    assert_eq!(closed, Rational::from_integer(chi.clone()), "manifold closed form disagrees with the general sum");
    Ok(chi)
}

/// `h_L(-1)`.
pub fn charney_davis_quantity(complex: &SimplicialComplex) -> BigInt {
    h_polynomial(complex).eval_int(&BigInt::from(-1))
}

/// Outcome of checking `(-1)^c h_L(-1) >= 0` for `d = 2c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdSignCheck {
    /// `h_L(-1)`.
    pub quantity: BigInt,
    /// `d / 2` when `d` is even.
    pub c: Option<usize>,
    /// `None` when `d` is odd and the inequality does not apply.
    pub satisfied: Option<bool>,
}

pub fn cd_sign_check(complex: &SimplicialComplex) -> CdSignCheck {
    let quantity = charney_davis_quantity(complex);
    let d = complex.top_degree();
    if d % 2 == 1 {
        return CdSignCheck { quantity, c: None, satisfied: None };
    }
    let c = d / 2;
    let signed = if c.is_multiple_of(2) { quantity.clone() } else { -&quantity };
    CdSignCheck { quantity, c: Some(c), satisfied: Some(!signed.is_negative()) }
}

/// Dimension `d + sum 2 k_i` of `Z_L(M, ∂M)` when it is a closed manifold.
pub fn manifold_dimension(complex: &SimplicialComplex, k: &[u32]) -> Result<u64> {
    check_len(complex.vertex_count(), k.len())?;
    Ok(complex.top_degree() as u64 + k.iter().map(|&x| 2 * x as u64).sum::<u64>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &BigInt) -> Sign {
        if x.is_negative() {
            Sign::Negative
        } else if x.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Caller obligations that the report cannot verify.
pub const MANIFOLD_HYPOTHESIS: &str = "unchecked: Z_L(M, dM) is a closed aspherical manifold only if L triangulates a \
(d-1)-sphere (or is a generalized homology sphere with some k_i > 0), L is flag, and each M_i and each component of \
dM_i is aspherical with pi_1-injective boundary components";

/// Comparison of the Euler characteristic sign condition for `Z_L(M, ∂M)`
/// with the sign of `(-1)^c h_L(-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccCdReport {
    pub d: usize,
    pub c: usize,
    pub dimension: u64,
    /// `chi(Z_L(M, ∂M))`.
    pub chi: BigInt,
    pub boundary_product: BigInt,
    pub h_at_minus_one: BigInt,
    /// `(-1)^{c + sum k_i} chi`.
    pub ecc_quantity: BigInt,
    /// `(-1)^c h_L(-1)`.
    pub cd_quantity: BigInt,
    pub ecc_sign: Sign,
    pub cd_sign: Sign,
    pub ecc_holds: bool,
    pub cd_holds: bool,
    /// Signs coincide, or `e(∂M)_[m] = 0` and the comparison is vacuous.
    pub verdicts_agree: bool,
    pub hypothesis: &'static str,
}

fn signed_power(c: u64, x: &BigInt) -> BigInt {
    if c.is_multiple_of(2) {
        x.clone()
    } else {
        -x
    }
}

/// Requires `d = 2c` even and `(-1)^{k_i} chi(∂M_i) >= 0` for every factor.
///
/// # Panics
///
/// If the two signs differ while `e(∂M)_[m] != 0`, which the closed form rules out.
pub fn ecc_cd_equivalence_report(complex: &SimplicialComplex, spec: &ManifoldPairSpec) -> Result<EccCdReport> {
    check_len(complex.vertex_count(), spec.len())?;
    let d = complex.top_degree();
    if d % 2 == 1 {
        return Err(Error::OddD(d));
    }
    for (i, (k, chi)) in spec.k.iter().zip(&spec.chi_boundary).enumerate() {
        if signed_power(*k as u64, chi).is_negative() {
            return Err(Error::HypothesisViolated(i + 1));
        }
    }
    let c = d / 2;
    let chi = chi_manifold_case(complex, spec)?;
    let h_at_minus_one = charney_davis_quantity(complex);
    let k_sum: u64 = spec.k.iter().map(|&k| k as u64).sum();
    let ecc_quantity = signed_power(c as u64 + k_sum, &chi);
    let cd_quantity = signed_power(c as u64, &h_at_minus_one);
    let boundary_product = spec.boundary_product();
    let (ecc_sign, cd_sign) = (Sign::of(&ecc_quantity), Sign::of(&cd_quantity));
    let verdicts_agree = boundary_product.is_zero() || ecc_sign == cd_sign;
    assert!(verdicts_agree, "sign of (-1)^(c+sum k) chi differs from sign of (-1)^c h(-1)");
    Ok(EccCdReport {
        d,
        c,
        dimension: manifold_dimension(complex, &spec.k)?,
        ecc_holds: !ecc_quantity.is_negative(),
        cd_holds: !cd_quantity.is_negative(),
        chi,
        boundary_product,
        h_at_minus_one,
        ecc_quantity,
        cd_quantity,
        ecc_sign,
        cd_sign,
        verdicts_agree,
        hypothesis: MANIFOLD_HYPOTHESIS,
    })
}

/// `(1 + q)_[m]`, the order of `prod G_i` when `|G_i| = q_i + 1`.
pub(crate) fn one_plus_product(q: &[BigInt]) -> BigInt {
    q.iter().map(|x| x + BigInt::one()).product()
}
