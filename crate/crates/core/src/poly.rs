//! Exact polynomial arithmetic for face enumerators.
//!
//! [`MultilinearPoly`] holds polynomials in `t_1, ..., t_m` whose exponents
//! are all at most one, keyed by the [`VertexSet`] of variables in each
//! monomial. [`UniPoly`] is a dense univariate polynomial. Coefficients are
//! arbitrary-precision integers throughout.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{check_len, Error, Result};

/// Exact reduced fraction; the denominator is always positive.
pub type Rational = num_rational::BigRational;

/// `s_J = prod_{j in J} s_j`, with `s_∅ = 1`. `values[0]` is `s_1`.
pub fn monomial_product<T>(values: &[T], set: VertexSet) -> T
where
    T: Clone + One,
{
    debug_assert!(set.iter().all(|v| v <= values.len()));
    set.iter().fold(T::one(), |acc, v| acc * values[v - 1].clone())
}

/// Polynomial in `t_1, ..., t_m` with every exponent at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearPoly {
    m: usize,
    coeffs: BTreeMap<VertexSet, BigInt>,
}

impl MultilinearPoly {
    pub fn zero(m: usize) -> Self {
        MultilinearPoly { m, coeffs: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::monomial(m, VertexSet::EMPTY, BigInt::one())
    }

    /// `coef * t_J`.
    pub fn monomial(m: usize, set: VertexSet, coef: BigInt) -> Self {
        debug_assert!(set.is_subset(VertexSet::full(m)));
        let mut p = Self::zero(m);
        p.add_term(set, coef);
        p
    }

    /// `t_i`, 1-based.
    pub fn variable(m: usize, i: usize) -> Self {
        Self::monomial(m, VertexSet::singleton(i), BigInt::one())
    }

    /// Builds from `(monomial, coefficient)` pairs, merging repeats.
    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (VertexSet, BigInt)>) -> Self {
        let mut p = Self::zero(m);
        for (set, coef) in terms {
            p.add_term(set, coef);
        }
        p
    }

    fn add_term(&mut self, set: VertexSet, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(set).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.coeffs.remove(&set);
        }
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, set: VertexSet) -> BigInt {
        self.coeffs.get(&set).cloned().unwrap_or_default()
    }

    /// Nonzero terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (VertexSet, &BigInt)> {
        self.coeffs.iter().map(|(s, c)| (*s, c))
    }

    /// Union of all variables that occur.
    pub fn support(&self) -> VertexSet {
        self.coeffs.keys().fold(VertexSet::EMPTY, |acc, s| acc.union(*s))
    }

    /// Product of two polynomials in disjoint sets of variables.
    ///
    /// Fails with [`Error::SharedVariable`] if some pair of monomials would
    /// produce a squared variable.
    pub fn try_mul(&self, other: &MultilinearPoly) -> Result<MultilinearPoly> {
        let mut out = Self::zero(self.m.max(other.m));
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let shared = a.intersection(*b);
                if !shared.is_empty() {
                    return Err(Error::SharedVariable(shared.iter().next().unwrap_or(0)));
                }
                out.add_term(a.union(*b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> MultilinearPoly {
        MultilinearPoly::from_terms(self.m, self.coeffs.iter().map(|(s, x)| (*s, x * c)))
    }

    /// Renames `t_i` to `t_{i + offset}` in a ring of `m` variables.
    pub fn relabel(&self, offset: usize, m: usize) -> MultilinearPoly {
        debug_assert!(self.m + offset <= m);
        MultilinearPoly { m, coeffs: self.coeffs.iter().map(|(s, c)| (s.shifted(offset), c.clone())).collect() }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        check_len(self.m, point.len())?;
        Ok(self
            .coeffs
            .iter()
            .map(|(s, c)| monomial_product(point, *s) * Rational::from_integer(c.clone()))
            .fold(Rational::zero(), |acc, x| acc + x))
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, point: &[BigInt]) -> Result<BigInt> {
        check_len(self.m, point.len())?;
        Ok(self.coeffs.iter().map(|(s, c)| monomial_product(point, *s) * c).sum())
    }

    /// Sets every `t_i` to a single `t`.
    pub fn specialize(&self) -> UniPoly {
        let mut coeffs = vec![BigInt::zero(); self.m + 1];
        for (s, c) in &self.coeffs {
            coeffs[s.len()] += c;
        }
        UniPoly::new(coeffs)
    }
}

impl Add for &MultilinearPoly {
    type Output = MultilinearPoly;

    fn add(self, rhs: &MultilinearPoly) -> MultilinearPoly {
        let mut out = self.clone();
        out.m = self.m.max(rhs.m);
        for (s, c) in &rhs.coeffs {
            out.add_term(*s, c.clone());
        }
        out
    }
}

impl Neg for &MultilinearPoly {
    type Output = MultilinearPoly;

    fn neg(self) -> MultilinearPoly {
        MultilinearPoly { m: self.m, coeffs: self.coeffs.iter().map(|(s, c)| (*s, -c)).collect() }
    }
}

impl Sub for &MultilinearPoly {
    type Output = MultilinearPoly;

    fn sub(self, rhs: &MultilinearPoly) -> MultilinearPoly {
        self + &(-rhs)
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            if s.is_empty() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                let vars: Vec<String> = s.iter().map(|v| format!("t{v}")).collect();
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Dense univariate integer polynomial, `coeffs[k]` the coefficient of `t^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `1 - t`.
    pub fn one_minus_t() -> Self {
        Self::from_i64s(&[1, -1])
    }

    /// `t^k`.
    pub fn power_of_t(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, exp: usize) -> UniPoly {
        let mut out = UniPoly::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Quotient of an exact division over the integers, or `None` if
    /// `divisor` does not divide `self` in `Z[t]`.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let dd = divisor.degree()?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero().then(UniPoly::zero);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| UniPoly::new(quot))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let a = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `f_L(t) = sum over faces J of t_J`.
pub fn f_polynomial(complex: &SimplicialComplex) -> MultilinearPoly {
    MultilinearPoly::from_terms(complex.vertex_count(), complex.simplices().iter().map(|&s| (s, BigInt::one())))
}

/// The cleared-denominator form `sum_J t_J prod_{i not in J} (1 - t_i)` of
/// `(1 - t)_[m] f_L(t / (1 - t))`.
pub fn hhat_polynomial(complex: &SimplicialComplex) -> MultilinearPoly {
    let m = complex.vertex_count();
    let full = complex.vertex_set();
    // Expanding each product costs 2^(m - |J|); past m * 2^m a signed
    // subset-sum transform over all of 2^[m] is cheaper.
    let expansion_cost: u128 = complex.simplices().iter().map(|s| 1u128 << (m - s.len())).sum();
    if m <= 22 && expansion_cost > (m as u128) << m {
        let mut table = vec![0i64; 1 << m];
        for s in complex.simplices() {
            table[s.bits() as usize] = 1;
        }
        // table[U] <- sum_{J ⊆ U} (-1)^{|U - J|} table[J]
        for i in 0..m {
            let bit = 1usize << i;
            for u in 0..table.len() {
                if u & bit != 0 {
                    table[u] -= table[u ^ bit];
                }
            }
        }
        return MultilinearPoly::from_terms(
            m,
            table.into_iter().enumerate().map(|(u, c)| (VertexSet::from_bits(u as u64), BigInt::from(c))),
        );
    }
    let mut out = MultilinearPoly::zero(m);
    for &face in complex.simplices() {
        for extra in full.difference(face).subsets() {
            let sign = if extra.len() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            out.add_term(face.union(extra), sign);
        }
    }
    out
}

/// `h_L(t) = (1 - t)^d f_L(t / (1 - t))`, computed as
/// `sum_J t^{|J|} (1 - t)^{d - |J|}`.
///
/// # Panics
///
/// If `specialize(hhat_L)` is not exactly `(1 - t)^{m - d} h_L`. That identity
/// always holds; a failure indicates a bug.
pub fn h_polynomial(complex: &SimplicialComplex) -> UniPoly {
    let h = h_from_face_counts(&complex.face_counts());
    let d = complex.top_degree();
    let m = complex.vertex_count();
    let lhs = hhat_polynomial(complex).specialize();
    let rhs = &UniPoly::one_minus_t().pow(m - d) * &h;
    assert_eq!(lhs, rhs, "specialized hhat differs from (1-t)^(m-d) h for a complex on {m} vertices");
    h
}

/// `sum_k counts[k] t^k (1 - t)^{d - k}` where `d = counts.len() - 1`.
pub fn h_from_face_counts(counts: &[usize]) -> UniPoly {
    let d = counts.len().saturating_sub(1);
    let one_minus_t = UniPoly::one_minus_t();
    let mut h = UniPoly::zero();
    for (k, &count) in counts.iter().enumerate() {
        let term = &UniPoly::power_of_t(k) * &one_minus_t.pow(d - k);
        h = &h + &(&term * &UniPoly::new(vec![BigInt::from(count)]));
    }
    h
}

/// Setting all variables of `p` equal to `t`.
pub fn specialize(p: &MultilinearPoly) -> UniPoly {
    p.specialize()
}
