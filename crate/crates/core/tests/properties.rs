mod common;

use proptest::prelude::*;
use qtanner::builtin::remedied_petersen_complex;
use qtanner::characterize::{condition_ii_check, local_inverse_check, round_trip, swapping_condition_check, PsiMap};
use qtanner::code::{
    cayley_complex, css_distances, css_from_complex, from_alist, to_alist, CssCode, DistanceOptions, LinearCode,
};
use qtanner::gf2::BitMatrix;
use qtanner::graph::json::{graph_spec_to_json, parse_graph_spec};
use qtanner::graph::{
    bipartite_double_cover, cayley_graph, commute_check, two_factorization, GroupTable, Permutation, SchreierSpec,
    Side,
};
use qtanner::intmat::IntMatrix;
use qtanner::spectral::{eigenvalues_symmetric, lambda};

/// `(m, a, b)` as in the random cyclic corpus.
fn cyclic_pair() -> impl Strategy<Value = (usize, usize, usize)> {
    (5usize..=16, 1usize..16, 1usize..16).prop_filter_map("valid labels", |(m, a, b)| {
        let (a, b) = (a % m, b % m);
        (a != 0 && b != 0 && 2 * a % m != 0 && 2 * b % m != 0 && a != b && a + b != m).then_some((m, a, b))
    })
}

fn local_code(n: usize) -> impl Strategy<Value = LinearCode> {
    (0..=n, proptest::collection::vec(any::<bool>(), n * n)).prop_map(move |(r, bits)| {
        LinearCode::from_parity(BitMatrix::from_fn(r, n, |i, j| bits[i * n + j]))
    })
}

fn bitmatrix(max_r: usize, max_c: usize) -> impl Strategy<Value = BitMatrix> {
    (0..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
        proptest::collection::vec(any::<bool>(), r * c).prop_map(move |bits| BitMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
    })
}

fn circulant(n: usize, gens: &[usize]) -> qtanner::graph::LabeledGraph {
    let mut labels = Vec::new();
    for &g in gens {
        labels.push(g % n);
        labels.push((n - g % n) % n);
    }
    cayley_graph(&GroupTable::cyclic(n), &labels, Side::Left).unwrap().to_graph()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn spectrum_sums_to_trace(vals in proptest::collection::vec(-3i64..=3, 36)) {
        let m = IntMatrix::from_rows(&(0..6).map(|i| (0..6).map(|j| vals[i.min(j) * 6 + i.max(j)]).collect::<Vec<_>>()).collect::<Vec<_>>());
        let s = eigenvalues_symmetric(&m).unwrap();
        let sum: f64 = s.eigenvalues.iter().sum();
        prop_assert!((sum - m.trace() as f64).abs() < 1e-6);
    }

    #[test]
    fn regular_spectrum_extremes(n in 3usize..=24, g1 in 1usize..12, g2 in 1usize..12) {
        let g = circulant(n, &[g1, g2]);
        let d = g.delta() as f64;
        let s = eigenvalues_symmetric(&g.adjacency()).unwrap().eigenvalues;
        prop_assert!((s[0] - d).abs() < 1e-6);
        let has_minus = (s[s.len() - 1] + d).abs() < 1e-6;
        prop_assert_eq!(has_minus, g.is_bipartite());
    }

    #[test]
    fn cover_keeps_lambda(n in 3usize..=15, g1 in 1usize..8, g2 in 1usize..8) {
        let g = circulant(n, &[g1, g2]);
        prop_assume!(g.n_components() == 1 && !g.is_bipartite());
        let cover = bipartite_double_cover(&g);
        prop_assert!((lambda(&g).unwrap() - lambda(&cover).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn left_and_right_cayley_commute(n in 3usize..=8, a in 0usize..16, b in 0usize..16) {
        let d = GroupTable::dihedral(n);
        let (a, b) = (a % d.order(), b % d.order());
        let left = cayley_graph(&d, &[a, d.inv(a)], Side::Left).unwrap();
        let right = cayley_graph(&d, &[b, d.inv(b)], Side::Right).unwrap();
        prop_assert!(commute_check(&left, &right).unwrap());
        prop_assert!(left.to_graph().well_labeled());
    }

    #[test]
    fn two_factorization_keeps_edges(n in 3usize..=20, g1 in 0usize..10, g2 in 1usize..10) {
        let g = circulant(n, &[g1, g2]);
        prop_assume!(g.edges().iter().all(|e| e.slot_u != e.slot_v));
        let spec = two_factorization(&g).unwrap();
        let sorted = |g: &qtanner::graph::LabeledGraph| {
            let mut e: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
            e.sort_unstable();
            e
        };
        prop_assert_eq!(sorted(&spec.to_graph()), sorted(&g));
    }

    #[test]
    fn complex_counts((m, a, b) in cyclic_pair()) {
        let x = cayley_complex(&GroupTable::cyclic(m), &[a, m - a], &[b, m - b]).unwrap();
        prop_assert_eq!(x.n_squares(), x.side(0).len() * 2);
        let mut ca = vec![0; x.a().edges().len()];
        for s in x.squares() {
            ca[s.e1] += 1;
            ca[s.e2] += 1;
        }
        prop_assert!(ca.iter().all(|&c| c == 2));
    }

    #[test]
    fn css_for_random_local_codes((m, a, b) in cyclic_pair(), ca in local_code(2), cb in local_code(2)) {
        let x = cayley_complex(&GroupTable::cyclic(m), &[a, m - a], &[b, m - b]).unwrap();
        let c = css_from_complex(&x, &ca, &cb).unwrap();
        prop_assert_eq!(c.k(), c.dim_c0() - c.h1().rank());
    }

    #[test]
    fn characterization_of_outputs((m, a, b) in cyclic_pair()) {
        let x = cayley_complex(&GroupTable::cyclic(m), &[a, m - a], &[b, m - b]).unwrap();
        let (g0, g1) = x.square_graphs();
        let id = PsiMap::identity(g0.n_edges());
        prop_assert!(condition_ii_check(&g0, &g1, &id).unwrap().holds);
        prop_assert!(swapping_condition_check(&g0, &g1, &id).unwrap().holds);
        prop_assert!(local_inverse_check(&g0) && local_inverse_check(&g1));
        prop_assert!(round_trip(&g0, &g1, &id).unwrap());
    }

    #[test]
    fn distance_ignores_thread_count(h in bitmatrix(6, 12), threads in 2usize..6) {
        let c = CssCode::new(h.clone(), BitMatrix::zeros(0, h.cols())).unwrap();
        let one = css_distances(&c, &DistanceOptions::default()).unwrap();
        let many = css_distances(&c, &DistanceOptions { threads, ..Default::default() }).unwrap();
        prop_assert_eq!(one, many);
    }

    #[test]
    fn alist_round_trip(h in bitmatrix(10, 14)) {
        let text = to_alist(&h);
        let back = from_alist(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(to_alist(&back), text);
    }

    #[test]
    fn graph_json_round_trip(n in 1usize..12, seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut image: Vec<usize> = (0..n).collect();
        image.shuffle(&mut rng);
        let p = Permutation::new(image).unwrap();
        let spec = SchreierSpec::new(n, vec![p.clone(), p.inverse()], vec![1, 0]).unwrap();
        prop_assert_eq!(parse_graph_spec(&graph_spec_to_json(&spec)).unwrap(), spec);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    /// Degree-3 soundness sample on the remedied Petersen complex.
    #[test]
    fn degree_three_soundness(ca in local_code(3), cb in local_code(3)) {
        thread_local! {
            static X: qtanner::complex::SquareComplex = remedied_petersen_complex().unwrap();
        }
        X.with(|x| {
            let (g0, g1) = x.square_graphs();
            let id = PsiMap::identity(g0.n_edges());
            let (h0, h1) = qtanner::characterize::general_qtanner_matrices(&g0, &g1, &id, &ca, &cb).unwrap();
            assert!(h0.mul_transpose(&h1).unwrap().is_zero());
        });
    }
}

#[test]
fn remedied_petersen_condition_ii() {
    let x = remedied_petersen_complex().unwrap();
    let (g0, g1) = x.square_graphs();
    assert!(condition_ii_check(&g0, &g1, &PsiMap::identity(g0.n_edges())).unwrap().holds);
}
