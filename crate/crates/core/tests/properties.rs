use adgraph::graph::{
    ad_matrix, all_pairs_distances, kth_adjacency, random_connected, weighted_view, Graph,
    SymIntMatrix,
};
use adgraph::partitions::charpoly_via_partitions;
use adgraph::spectra::{char_poly_exact, determinant_exact, eigenvalues_sym};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(n: usize, seed: u64) -> Graph {
    random_connected(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (3usize..=9, any::<u64>()).prop_map(|(n, s)| graph(n, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigenvalues_are_roots_of_the_exact_polynomial(g in small_graph()) {
        let ad = ad_matrix(&g).unwrap();
        let cp = char_poly_exact(&ad);
        let coeffs: Vec<f64> = cp.coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
        for &lambda in eigenvalues_sym(&ad).values() {
            let scale: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.abs() * lambda.abs().powi((coeffs.len() - 1 - k) as i32))
                .sum();
            prop_assert!(cp.eval_f64(lambda).abs() <= 1e-8 * scale.max(1.0));
        }
    }

    #[test]
    fn weighted_view_reproduces_the_ad_matrix(g in small_graph()) {
        let diameter = all_pairs_distances(&g).unwrap().diameter();
        prop_assume!(diameter >= 2);
        prop_assert_eq!(weighted_view(&g).unwrap().adjacency_matrix(), ad_matrix(&g).unwrap());
    }

    #[test]
    fn distance_matrix_is_sum_of_scaled_kth_adjacencies(g in small_graph()) {
        let dm = all_pairs_distances(&g).unwrap();
        let mut sum = SymIntMatrix::zeros(g.vertex_count());
        for k in 1..=dm.diameter() {
            sum = sum.add(&kth_adjacency(&dm, k).unwrap().scaled(k as i64));
        }
        prop_assert_eq!(sum, dm.to_matrix());
    }

    #[test]
    fn berkowitz_agrees_with_partition_expansion(n in 3usize..=7, seed in any::<u64>()) {
        let g = graph(n, seed);
        prop_assert_eq!(char_poly_exact(&ad_matrix(&g).unwrap()), charpoly_via_partitions(&g).unwrap());
    }

    #[test]
    fn charpoly_is_invariant_under_relabelling(g in small_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        prop_assert_eq!(
            char_poly_exact(&ad_matrix(&g).unwrap()),
            char_poly_exact(&ad_matrix(&h).unwrap())
        );
    }

    #[test]
    fn determinant_is_the_constant_coefficient(g in small_graph()) {
        let ad = ad_matrix(&g).unwrap();
        prop_assert_eq!(determinant_exact(&ad), char_poly_exact(&ad).determinant());
    }

    #[test]
    fn edge_lists_round_trip(g in small_graph()) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list_string()).unwrap(), g);
    }
}
