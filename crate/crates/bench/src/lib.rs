//! Shared inputs for the criterion benchmarks.

use polyprod::oracle::{random_instance, Instance, InstanceLimits};
use polyprod::SimplicialComplex;

/// Named complexes of increasing size.
pub fn complexes() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for m in [6, 10, 14] {
        out.push((format!("cycle-{m}"), SimplicialComplex::cycle(m).unwrap()));
    }
    for n in [3, 5, 7] {
        out.push((format!("cross-{n}"), SimplicialComplex::cross_polytope_boundary(n).unwrap()));
    }
    out
}

/// Seeded instances small enough for the brute-force oracle.
pub fn oracle_instances(max_m: usize, count: u64) -> Vec<Instance> {
    let limits = InstanceLimits { max_m, ..InstanceLimits::default() };
    (1..=count).map(|seed| random_instance(seed, &limits).unwrap()).collect()
}
