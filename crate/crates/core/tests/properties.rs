mod common;

use common::*;
use num_traits::One;
use polyprod::oracle::{euler_vectors, random_complex, random_model, InstanceLimits};
use polyprod::*;
use proptest::prelude::*;
use rand::Rng;

fn complex_from_seed(seed: u64, max_m: usize) -> SimplicialComplex {
    random_complex_up_to(&mut rng(seed), max_m)
}

fn is_downward_closed(l: &SimplicialComplex) -> bool {
    l.simplices().iter().all(|s| s.subsets().all(|t| l.contains(t)))
}

#[test]
fn constructors_are_downward_closed_exhaustively() {
    for l in small_complexes() {
        assert!(is_downward_closed(&l));
    }
    for m in 5..=12 {
        let mut r = rng(m as u64);
        for _ in 0..10 {
            assert!(is_downward_closed(&random_complex(&mut r, m).unwrap()));
            assert!(is_downward_closed(&random_flag_complex(&mut r, m, 0.5)));
        }
    }
}

#[test]
fn simplices_iterate_in_canonical_order() {
    let l = SimplicialComplex::cross_polytope_boundary(3).unwrap();
    let faces = l.simplices();
    for w in faces.windows(2) {
        let (a, b) = (w[0].to_vec(), w[1].to_vec());
        assert!(a.len() < b.len() || (a.len() == b.len() && a < b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn clique_closure_contains_complex(seed in any::<u64>()) {
        let l = complex_from_seed(seed, 7);
        prop_assume!(!l.is_relaxed());
        let closure = SimplicialComplex::clique_complex(l.vertex_count(), &l.edges()).unwrap();
        prop_assert!(l.simplices().iter().all(|&s| closure.contains(s)));
        prop_assert_eq!(closure == l, l.is_flag());
        prop_assert!(closure.is_flag());
    }

    #[test]
    fn from_facets_is_idempotent(seed in any::<u64>()) {
        let l = complex_from_seed(seed, 8);
        prop_assume!(!l.is_relaxed());
        let facets: Vec<Vec<usize>> = l.facets().iter().map(|f| f.to_vec()).collect();
        prop_assert_eq!(SimplicialComplex::from_facets(l.vertex_count(), &facets).unwrap(), l);
    }

    #[test]
    fn join_sizes_multiply_and_associate(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (complex_from_seed(s1, 3), complex_from_seed(s2, 3), complex_from_seed(s3, 3));
        let ab = a.join(&b).unwrap();
        prop_assert_eq!(ab.len(), a.len() * b.len());
        prop_assert_eq!(ab.join(&c).unwrap(), a.join(&b.join(&c).unwrap()).unwrap());
    }

    #[test]
    fn hhat_matches_rational_substitution(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_complex_up_to(&mut r, 6);
        let v: Vec<Rational> = (0..l.vertex_count()).map(|_| random_rational_not_one(&mut r)).collect();
        let scale: Rational = v.iter().map(|x| Rational::one() - x).product();
        let sub: Vec<Rational> = v.iter().map(|x| x / (Rational::one() - x)).collect();
        prop_assert_eq!(hhat_polynomial(&l).eval(&v).unwrap(), scale * f_polynomial(&l).eval(&sub).unwrap());
    }

    #[test]
    fn f_at_origin_is_one(seed in any::<u64>()) {
        let l = complex_from_seed(seed, 8);
        prop_assert_eq!(f_polynomial(&l).eval_int(&vec![big(0); l.vertex_count()]).unwrap(), big(1));
    }

    #[test]
    fn h_degree_bounded_by_top_degree(seed in any::<u64>()) {
        let l = complex_from_seed(seed, 8);
        let h = h_polynomial(&l);
        prop_assert!(h.degree().unwrap_or(0) <= l.top_degree());
        let d = l.top_degree();
        let m = l.vertex_count();
        prop_assert_eq!(specialize(&hhat_polynomial(&l)).div_exact(&UniPoly::one_minus_t().pow(m - d)), Some(h));
    }

    #[test]
    fn corollaries_match_general_sum(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_complex_up_to(&mut r, 6);
        let m = l.vertex_count();
        let e_a = EulerVector::new(random_ints(&mut r, m, -5, 5));
        prop_assert_eq!(
            chi_points_case(&l, &e_a).unwrap(),
            chi_polyhedral_product(&l, &e_a, &EulerVector::constant(m, 1)).unwrap()
        );
        let q = random_ints(&mut r, m, 1, 6);
        let e_b = EulerVector::new(q.iter().map(|x| x + 1).collect());
        prop_assert_eq!(
            chi_cone_case(&l, &q).unwrap(),
            chi_polyhedral_product(&l, &EulerVector::constant(m, 1), &e_b).unwrap()
        );
    }

    #[test]
    fn constant_cone_case_matches_h(seed in any::<u64>(), q in 1i64..8) {
        let l = complex_from_seed(seed, 6);
        let (m, d) = (l.vertex_count(), l.top_degree());
        let shifted = &UniPoly::one_minus_t().pow(m - d) * &h_polynomial(&l);
        prop_assert_eq!(chi_cone_case(&l, &vec![big(q); m]).unwrap(), shifted.eval_int(&big(-q)));
    }

    #[test]
    fn formula_matches_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_complex_up_to(&mut r, 4);
        let limits = InstanceLimits { max_m: 4, max_cells: 5, max_dim: 4 };
        let pairs: Vec<CellPairModel> = (0..l.vertex_count()).map(|_| random_model(&mut r, &limits)).collect();
        let (e_a, e_b) = euler_vectors(&pairs);
        prop_assert_eq!(chi_brute_force(&l, &pairs).unwrap(), chi_polyhedral_product(&l, &e_a, &e_b).unwrap());
    }

    #[test]
    fn oracle_ignores_cell_order(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_complex_up_to(&mut r, 4);
        let limits = InstanceLimits::default();
        let pairs: Vec<CellPairModel> = (0..l.vertex_count()).map(|_| random_model(&mut r, &limits)).collect();
        let shuffled: Vec<CellPairModel> = pairs
            .iter()
            .map(|p| {
                let mut cells = p.cells().to_vec();
                let k = r.random_range(0..cells.len());
                cells.rotate_left(k);
                cells.reverse();
                CellPairModel::new(cells)
            })
            .collect();
        prop_assert_eq!(chi_brute_force(&l, &pairs).unwrap(), chi_brute_force(&l, &shuffled).unwrap());
    }

    #[test]
    fn oracle_with_b_equal_a(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_complex_up_to(&mut r, 4);
        let pairs: Vec<CellPairModel> = (0..l.vertex_count())
            .map(|_| {
                let n = r.random_range(1..=5);
                CellPairModel::new((0..n).map(|_| Cell::new(r.random_range(0..=3), true)).collect())
            })
            .collect();
        let product: i64 = pairs.iter().map(|p| chi_of_model(p).0).product();
        prop_assert_eq!(chi_brute_force(&l, &pairs).unwrap(), big(product));
    }

    #[test]
    fn classifying_space_is_points_case(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=6);
        let l = random_flag_complex(&mut r, m, 0.5);
        let chis = random_ints(&mut r, m, -3, 3);
        let specs: Vec<GroupSpec> = chis.iter().cloned().map(GroupSpec::TypeFl).collect();
        prop_assert_eq!(
            chi_classifying_space(&l, &specs).unwrap(),
            chi_points_case(&l, &EulerVector::new(chis)).unwrap()
        );
    }

    #[test]
    fn graph_product_numerator_is_kernel_chi(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=6);
        let l = random_flag_complex(&mut r, m, 0.5);
        let orders: Vec<i64> = (0..m).map(|_| r.random_range(2..=9)).collect();
        let specs: Vec<GroupSpec> = orders.iter().map(|&n| GroupSpec::finite(n as u64)).collect();
        let q: Vec<BigInt> = orders.iter().map(|&n| big(n - 1)).collect();
        let chi = chi_rational_graph_product(&l, &specs).unwrap();
        let order: BigInt = orders.iter().map(|&n| big(n)).product();
        prop_assert_eq!(chi * Rational::from_integer(order), Rational::from_integer(chi_cone_case(&l, &q).unwrap()));
    }

    #[test]
    fn direct_product_of_finite_groups(orders in proptest::collection::vec(2u64..=9, 1..=5)) {
        let l = SimplicialComplex::simplex(orders.len()).unwrap();
        let specs: Vec<GroupSpec> = orders.iter().map(|&n| GroupSpec::finite(n)).collect();
        let total: u64 = orders.iter().product();
        prop_assert_eq!(chi_rational_graph_product(&l, &specs).unwrap(), rat(1, total as i64));
        let pairs: Vec<CellPairModel> = orders.iter().map(|&n| CellPairModel::cone_on_points(n as usize)).collect();
        prop_assert_eq!(chi_brute_force(&l, &pairs).unwrap(), big(1));
    }
}
