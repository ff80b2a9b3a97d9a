//! Brute-force Euler characteristic of `Z_L(A, B)` by cell enumeration.
//!
//! Each pair `(A_i, B_i)` is given as a bare list of cells, each with a
//! dimension and a flag saying whether it lies in `B_i`. A product cell
//! `c_1 x ... x c_m` belongs to `Z_L(A, B)` exactly when the set of factors
//! whose cell is outside `B_i` is a simplex of `L`; its contribution is
//! `(-1)^(sum of dims)`. Nothing here uses the polynomial machinery, so the
//! result is an independent check on [`crate::euler`].

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::{SimplicialComplex, VertexSet, MAX_VERTICES};
use crate::error::{check_len, Error, Result};
use crate::euler::EulerVector;

/// Default cap on the number of product cells enumerated.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub dim: u32,
    pub in_b: bool,
}

impl Cell {
    pub fn new(dim: u32, in_b: bool) -> Self {
        Cell { dim, in_b }
    }
}

/// Cells of a finite CW pair `(A, B)`; `B` is the set of cells flagged `in_b`.
///
/// Attaching maps are not recorded: only the signed cell counts matter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPairModel {
    cells: Vec<Cell>,
}

impl CellPairModel {
    pub fn new(cells: Vec<Cell>) -> Self {
        CellPairModel { cells }
    }

    /// `(D^1, S^0)`: two boundary vertices and one edge.
    pub fn interval() -> Self {
        Self::new(vec![Cell::new(0, true), Cell::new(0, true), Cell::new(1, false)])
    }

    /// `(*, *)`.
    pub fn point() -> Self {
        Self::new(vec![Cell::new(0, true)])
    }

    /// `(Cone E, E)` for a set `E` of `n` points.
    pub fn cone_on_points(n: usize) -> Self {
        let mut cells = vec![Cell::new(0, true); n];
        cells.push(Cell::new(0, false));
        cells.extend(std::iter::repeat_n(Cell::new(1, false), n));
        Self::new(cells)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

fn sign(dim: u32) -> i64 {
    if dim.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(chi(A), chi(B))` as signed cell counts.
pub fn chi_of_model(model: &CellPairModel) -> (i64, i64) {
    let chi_a = model.cells.iter().map(|c| sign(c.dim)).sum();
    let chi_b = model.cells.iter().filter(|c| c.in_b).map(|c| sign(c.dim)).sum();
    (chi_a, chi_b)
}

/// `e(A)` and `e(B)` for a list of models.
pub fn euler_vectors(pairs: &[CellPairModel]) -> (EulerVector, EulerVector) {
    let (a, b): (Vec<BigInt>, Vec<BigInt>) = pairs
        .iter()
        .map(|p| {
            let (a, b) = chi_of_model(p);
            (BigInt::from(a), BigInt::from(b))
        })
        .unzip();
    (EulerVector::new(a), EulerVector::new(b))
}

/// Signed count of the product cells of `Z_L(A, B)`, with the default budget.
pub fn chi_brute_force(complex: &SimplicialComplex, pairs: &[CellPairModel]) -> Result<BigInt> {
    chi_brute_force_with_budget(complex, pairs, DEFAULT_BUDGET)
}

/// Fails with [`Error::InstanceTooLarge`] if there are more than `budget`
/// product cells to visit. The sum is split across threads by the cell of
/// the first factor; the result does not depend on the split.
pub fn chi_brute_force_with_budget(
    complex: &SimplicialComplex,
    pairs: &[CellPairModel],
    budget: u128,
) -> Result<BigInt> {
    check_len(complex.vertex_count(), pairs.len())?;
    if let Some(i) = pairs.iter().position(CellPairModel::is_empty) {
        return Err(Error::EmptyModel(i + 1));
    }
    let tuples = pairs.iter().try_fold(1u128, |acc, p| acc.checked_mul(p.len() as u128)).unwrap_or(u128::MAX);
    if tuples > budget {
        return Err(Error::InstanceTooLarge { tuples, budget });
    }

    // Per factor: (sign, support bit) of every cell.
    let factors: Vec<Vec<(i64, u64)>> = pairs
        .iter()
        .enumerate()
        .map(|(i, p)| p.cells.iter().map(|c| (sign(c.dim), if c.in_b { 0 } else { 1 << i })).collect())
        .collect();
    let (first, rest) = factors.split_first().expect("at least one vertex");

    let total: i128 = first
        .par_iter()
        .map(|&(first_sign, first_bit)| {
            let mut digits = vec![0usize; rest.len()];
            let mut sum: i128 = 0;
            loop {
                let mut s = first_sign;
                let mut support = first_bit;
                for (factor, &d) in rest.iter().zip(&digits) {
                    let (cs, bit) = factor[d];
                    s *= cs;
                    support |= bit;
                }
                if complex.contains(VertexSet::from_bits(support)) {
                    sum += s as i128;
                }
                // Mixed-radix increment.
                let mut pos = 0;
                loop {
                    if pos == digits.len() {
                        return sum;
                    }
                    digits[pos] += 1;
                    if digits[pos] < rest[pos].len() {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
            }
        })
        .sum();
    Ok(BigInt::from(total))
}

/// Bounds for [`random_instance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceLimits {
    pub max_m: usize,
    pub max_cells: usize,
    pub max_dim: u32,
}

impl Default for InstanceLimits {
    fn default() -> Self {
        InstanceLimits { max_m: 5, max_cells: 6, max_dim: 3 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub complex: SimplicialComplex,
    pub pairs: Vec<CellPairModel>,
}

/// A random complex on exactly `m` vertices: the closure of a few random
/// facets, padded with singletons for uncovered vertices. One draw in ten is
/// the complex with only the empty simplex.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Result<SimplicialComplex> {
    if rng.random_ratio(1, 10) {
        return SimplicialComplex::empty_only(m);
    }
    let facet_count = rng.random_range(1..=m + 2);
    let mut facets: Vec<Vec<usize>> =
        (0..facet_count).map(|_| (1..=m).filter(|_| rng.random_bool(0.5)).collect()).collect();
    let covered = facets.iter().flatten().fold(VertexSet::EMPTY, |acc, &v| acc.union(VertexSet::singleton(v)));
    facets.extend(VertexSet::full(m).difference(covered).iter().map(|v| vec![v]));
    SimplicialComplex::from_facets(m, facets)
}

pub fn random_model<R: Rng + ?Sized>(rng: &mut R, limits: &InstanceLimits) -> CellPairModel {
    let n = rng.random_range(1..=limits.max_cells.max(1));
    let mut cells: Vec<Cell> =
        (0..n).map(|_| Cell::new(rng.random_range(0..=limits.max_dim), rng.random_bool(0.5))).collect();
    if rng.random_bool(0.5) && !cells.iter().any(|c| c.in_b) {
        let i = rng.random_range(0..n);
        cells[i].in_b = true;
    }
    CellPairModel::new(cells)
}

/// Deterministic in `seed`.
pub fn random_instance(seed: u64, limits: &InstanceLimits) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.random_range(1..=limits.max_m.clamp(1, MAX_VERTICES));
    let complex = random_complex(&mut rng, m)?;
    let pairs = (0..m).map(|_| random_model(&mut rng, limits)).collect();
    Ok(Instance { complex, pairs })
}

/// Every complex on exactly `m <= 4` vertices, plus `empty_only(m)`.
pub fn all_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    if m > 4 {
        return Err(Error::TooManyVertices(m));
    }
    let faces: Vec<VertexSet> = VertexSet::full(m).subsets().filter(|s| s.len() >= 2).collect();
    let mut out = vec![SimplicialComplex::empty_only(m)?];
    for choice in 0u64..1 << faces.len() {
        let chosen: Vec<VertexSet> =
            faces.iter().enumerate().filter(|(i, _)| choice >> i & 1 == 1).map(|(_, &s)| s).collect();
        let singletons = (1..=m).map(|v| vec![v]);
        let explicit = chosen.iter().map(|s| s.to_vec());
        if let Some(l) = SimplicialComplex::from_simplices(m, singletons.chain(explicit))? {
            out.push(l);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn circle_from_intervals() {
        let l = SimplicialComplex::discrete(2).unwrap();
        let pairs = vec![CellPairModel::interval(); 2];
        assert_eq!(chi_brute_force(&l, &pairs).unwrap(), big(0));
    }

    #[test]
    fn full_simplex_and_empty_only() {
        let pairs = vec![
            CellPairModel::interval(),
            CellPairModel::new(vec![Cell::new(0, false), Cell::new(2, true), Cell::new(1, true)]),
            CellPairModel::cone_on_points(3),
        ];
        let (e_a, e_b) = euler_vectors(&pairs);
        assert_eq!(e_a, EulerVector::from_i64s(&[1, 1, 1]));
        assert_eq!(e_b, EulerVector::from_i64s(&[2, 0, 3]));
        let full = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(chi_brute_force(&full, &pairs).unwrap(), big(1));
        let empty = SimplicialComplex::empty_only(3).unwrap();
        assert_eq!(chi_brute_force(&empty, &pairs).unwrap(), big(0));
    }

    #[test]
    fn square_boundary_from_cones() {
        // Z_L(Cone E, E) for three isolated vertices and |E_i| = 2.
        let l = SimplicialComplex::discrete(3).unwrap();
        let pairs = vec![CellPairModel::cone_on_points(2); 3];
        assert_eq!(chi_brute_force(&l, &pairs).unwrap(), big(-4));
    }

    #[test]
    fn model_counts() {
        assert_eq!(chi_of_model(&CellPairModel::interval()), (1, 2));
        assert_eq!(chi_of_model(&CellPairModel::point()), (1, 1));
        let no_b = CellPairModel::new(vec![Cell::new(0, false), Cell::new(1, false), Cell::new(1, false)]);
        assert_eq!(chi_of_model(&no_b), (-1, 0));
    }

    #[test]
    fn errors() {
        let l = SimplicialComplex::discrete(2).unwrap();
        assert_eq!(
            chi_brute_force(&l, &[CellPairModel::point()]),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
        assert_eq!(
            chi_brute_force(&l, &[CellPairModel::point(), CellPairModel::new(vec![])]),
            Err(Error::EmptyModel(2))
        );
        assert_eq!(
            chi_brute_force_with_budget(&l, &[CellPairModel::interval(), CellPairModel::interval()], 8),
            Err(Error::InstanceTooLarge { tuples: 9, budget: 8 })
        );
    }

    #[test]
    fn order_independence() {
        let l = SimplicialComplex::cycle(4).unwrap();
        let model =
            CellPairModel::new(vec![Cell::new(0, true), Cell::new(1, false), Cell::new(2, true), Cell::new(0, false)]);
        let mut reversed = model.cells().to_vec();
        reversed.reverse();
        let a = chi_brute_force(&l, &vec![model.clone(); 4]).unwrap();
        let b = chi_brute_force(&l, &vec![CellPairModel::new(reversed); 4]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn instances_are_reproducible() {
        let limits = InstanceLimits::default();
        for seed in 0..20 {
            let a = random_instance(seed, &limits).unwrap();
            assert_eq!(a, random_instance(seed, &limits).unwrap());
            assert!(a.complex.vertex_count() <= limits.max_m);
            assert_eq!(a.pairs.len(), a.complex.vertex_count());
            assert!(a.pairs.iter().all(|p| (1..=limits.max_cells).contains(&p.len())));
        }
        let one = InstanceLimits { max_m: 1, ..limits };
        assert_eq!(random_instance(7, &one).unwrap().complex.vertex_count(), 1);
    }

    #[test]
    fn complex_enumeration_counts() {
        // Simplicial complexes with vertex set exactly [m]: 1, 2, 9, 114 (plus empty_only).
        let counts: Vec<usize> = (1..=4).map(|m| all_complexes(m).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 3, 10, 115]);
    }
}
