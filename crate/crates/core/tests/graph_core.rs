mod common;

use common::*;
use ndarray::{array, Array2};
use proptest::prelude::*;
use spectral_graph::graph::*;
use spectral_graph::spectral::{eig_symmetric, MatrixKind};
use spectral_graph::{Error, Graph};

#[test]
fn weighted8_weight_matrix() {
    let w = weighted8().weights().clone();
    let expect = array![
        [0.0, 0.23, 0.74, 0.24, 0.0, 0.0, 0.0, 0.0],
        [0.23, 0.0, 0.35, 0.0, 0.23, 0.0, 0.0, 0.0],
        [0.74, 0.35, 0.0, 0.26, 0.24, 0.0, 0.0, 0.0],
        [0.24, 0.0, 0.26, 0.0, 0.0, 0.0, 0.32, 0.0],
        [0.0, 0.23, 0.24, 0.0, 0.0, 0.51, 0.0, 0.14],
        [0.0, 0.0, 0.0, 0.0, 0.51, 0.0, 0.0, 0.15],
        [0.0, 0.0, 0.0, 0.32, 0.0, 0.0, 0.0, 0.32],
        [0.0, 0.0, 0.0, 0.0, 0.14, 0.15, 0.32, 0.0],
    ];
    assert_eq!(w, expect);
}

#[test]
fn weighted8_degrees() {
    let d = degree_vector(&weighted8());
    assert_all_close(
        d.values(),
        &[1.21, 0.81, 1.59, 0.82, 1.12, 0.66, 0.64, 0.61],
        1e-12,
        "degrees",
    );
    assert_close(d.volume(), 7.46, 1e-12, "volume");
}

#[test]
fn weighted8_laplacian_matches_d_minus_w() {
    let g = weighted8();
    let l = g.laplacian(&LaplacianVariant::Standard).unwrap();
    assert_eq!(l[[0, 0]], 1.21);
    assert_eq!(l[[2, 2]], 1.59);
    assert_eq!(l[[4, 5]], -0.51);
    let oracle = laplacian_oracle(g.weights());
    for (a, b) in l.iter().zip(oracle.iter()) {
        assert!((a - b).abs() < 1e-15);
    }
}

#[test]
fn topology_examples() {
    let c = Topology::Circular.generate(8).unwrap();
    assert!(c.degrees().iter().all(|&d| d == 2.0));
    assert_eq!(Topology::Complete.generate(8).unwrap().edge_count(), 28);
    assert_eq!(Topology::Star.generate(8).unwrap().degrees()[0], 7.0);
    let dc = Topology::DirectedCircular.generate(5).unwrap();
    for k in 0..5 {
        assert_eq!(dc.weight(k, (k + 4) % 5), 1.0);
        assert_eq!(dc.neighbors(k).count(), 1);
    }
    let b = Topology::CompleteBipartite { left: 2, right: 3 }
        .generate(5)
        .unwrap();
    assert_eq!(b.edge_count(), 6);
    assert!(matches!(
        Topology::CompleteBipartite { left: 2, right: 3 }.generate(6),
        Err(Error::InvalidSize(_))
    ));
    assert!(matches!(
        Topology::Path.generate(1),
        Err(Error::InvalidSize(_))
    ));
}

#[test]
fn normalized_diagonal_is_one_without_isolated_vertices() {
    let ln = weighted8()
        .laplacian(&LaplacianVariant::Normalized)
        .unwrap();
    assert!(ln.diag().iter().all(|&x| x == 1.0));
}

#[test]
fn vertex_weighted_with_inverse_degrees_is_normalized() {
    let g = weighted8();
    let v = VertexWeights::new(g.degrees().iter().map(|d| 1.0 / d).collect()).unwrap();
    let lv = g.laplacian(&LaplacianVariant::VertexWeighted(v)).unwrap();
    let ln = g.laplacian(&LaplacianVariant::Normalized).unwrap();
    for (a, b) in lv.iter().zip(ln.iter()) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn permutation_keeps_adjacency_spectrum() {
    let g = unweighted8();
    let p = g.permute(&[3, 2, 4, 5, 1, 0, 6, 7]).unwrap();
    let a = jacobi_eigenvalues(&g.adjacency());
    let b = jacobi_eigenvalues(&p.adjacency());
    assert_all_close(&a, &b, 1e-9, "permuted spectrum");
}

#[test]
fn permutation_equals_explicit_product() {
    let g = random_graph(5, 0.7, 11);
    let perm = [2, 0, 4, 1, 3];
    let mut p = Array2::<f64>::zeros((5, 5));
    for (i, &pi) in perm.iter().enumerate() {
        p[[i, pi]] = 1.0;
    }
    let expect = p.dot(g.weights()).dot(&p.t());
    assert_eq!(g.permute(&perm).unwrap().weights(), &expect);
}

#[test]
fn walk_counts_examples() {
    let g = unweighted8();
    assert_eq!(walk_counts(&g, 2).unwrap().exact[[0, 4]], 2.0);
    let w3 = walk_counts(&g, 3).unwrap();
    let a = g.adjacency();
    for s in 0..8 {
        for t in 0..8 {
            assert_eq!(w3.exact[[s, t]], enumerate_walks(&a, s, t, 3) as f64);
            let upto: u64 = (1..=3).map(|k| enumerate_walks(&a, s, t, k)).sum();
            assert_eq!(w3.cumulative[[s, t]], upto as f64);
        }
    }
}

#[test]
fn k_neighborhood_examples() {
    let g = unweighted8();
    assert_eq!(k_neighborhood(&g, 0, 1).unwrap(), vec![0, 1, 2, 3]);
    assert_eq!(k_neighborhood(&g, 0, 2).unwrap(), vec![0, 1, 2, 3, 4, 6]);
    for v in 0..8 {
        assert_eq!(k_neighborhood(&g, v, 0).unwrap(), vec![v]);
    }
    assert!(matches!(
        k_neighborhood(&g, 8, 1),
        Err(Error::IndexOutOfRange { index: 8, n: 8 })
    ));
}

#[test]
fn distance_examples() {
    let d = distances(&unweighted8()).unwrap();
    assert_eq!(d.dist[[1, 5]], 2);
    assert_eq!(d.diameter, 3);
    assert_close(d.closeness[2], 0.1, 1e-15, "closeness 2");
    assert_close(d.closeness[5], 1.0 / 14.0, 1e-15, "closeness 5");
    assert_close(d.closeness[5], 0.071, 5e-4, "closeness 5 rounded");
    assert_eq!(
        distances(&Topology::Complete.generate(6).unwrap())
            .unwrap()
            .diameter,
        1
    );
    assert!(matches!(
        distances(&two_component8()),
        Err(Error::Disconnected { .. })
    ));
}

#[test]
fn component_examples() {
    assert_eq!(
        connected_components(&two_component8()),
        vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]
    );
    assert_eq!(
        connected_components(&unweighted8()),
        vec![(0..8).collect::<Vec<_>>()]
    );
    assert_eq!(
        connected_components(&Graph::new(4, false, &[]).unwrap()).len(),
        4
    );
}

#[test]
fn weighted8_spanning_tree_costs() {
    let g = weighted8();
    let mst = minimum_spanning_tree(&g).unwrap();
    let edges = g.edges();
    let best = spanning_trees(8, &edges)
        .iter()
        .map(|t| t.iter().map(|&i| log_distance(edges[i].2)).sum::<f64>())
        .fold(f64::INFINITY, f64::min);
    assert_close(mst.cost, best, 1e-12, "exhaustive minimum");
    assert_close(mst.cost, 14.1547, 1e-4, "computed minimum");
    // the tree drawn for this graph is a valid spanning tree but not the cheapest
    let drawn = Tree::from_edges(
        &g,
        &[(0, 2), (1, 2), (2, 3), (2, 4), (3, 6), (4, 5), (5, 7)],
    )
    .unwrap();
    assert_close(drawn.cost, 15.67, 0.02, "drawn tree");
}

#[test]
fn random_spanning_trees_match_exhaustive_search() {
    for seed in 0..20 {
        let g = random_connected_graph(6, 0.6, seed);
        let edges = g.edges();
        let best = spanning_trees(6, &edges)
            .iter()
            .map(|t| t.iter().map(|&i| log_distance(edges[i].2)).sum::<f64>())
            .fold(f64::INFINITY, f64::min);
        let mst = minimum_spanning_tree(&g).unwrap();
        assert_eq!(mst.edges.len(), 5);
        assert_close(mst.cost, best, 1e-12, "random tree");
    }
}

#[test]
fn product_examples() {
    let k2 = Topology::Complete.generate(2).unwrap();
    let kron = graph_product(&k2, &k2, ProductKind::Kronecker);
    assert_all_close(
        &jacobi_eigenvalues(&kron.adjacency()),
        &[-1.0, -1.0, 1.0, 1.0],
        1e-12,
        "kronecker",
    );
    let cart = graph_product(&k2, &k2, ProductKind::Cartesian);
    assert_all_close(
        &jacobi_eigenvalues(&cart.adjacency()),
        &[-2.0, 0.0, 0.0, 2.0],
        1e-12,
        "cartesian",
    );
    assert!(cart.degrees().iter().all(|&d| d == 2.0));
    let p = graph_product(
        &Topology::Path.generate(3).unwrap(),
        &Topology::Star.generate(4).unwrap(),
        ProductKind::Cartesian,
    );
    assert_eq!(p.n(), 12);
}

#[test]
fn euler_examples() {
    for n in 3..10 {
        assert_eq!(
            euler_path_exists(&Topology::Circular.generate(n).unwrap()).unwrap(),
            EulerKind::Circuit
        );
    }
    assert_eq!(
        euler_path_exists(&Topology::Path.generate(6).unwrap()).unwrap(),
        EulerKind::Path
    );
    let g = unweighted8();
    let odd: Vec<usize> = (0..8)
        .filter(|&v| g.neighbors(v).count() % 2 == 1)
        .collect();
    assert_eq!(odd, vec![0, 1, 3, 7]);
    assert_eq!(euler_path_exists(&g).unwrap(), EulerKind::None);
    assert!(matches!(
        euler_path_exists(&two_component8()),
        Err(Error::Disconnected { .. })
    ));
}

#[test]
fn betweenness_examples() {
    for n in 3..9 {
        let b = betweenness(&Topology::Star.generate(n).unwrap()).unwrap();
        assert_close(
            b.vertex[0],
            ((n - 1) * (n - 2) / 2) as f64,
            1e-12,
            "star centre",
        );
        assert!(b.vertex[1..].iter().all(|&x| x == 0.0));
    }
    // the two shortest paths 0-1-2 and 0-3-2 on the 4-cycle share the credit
    let b = betweenness(&Topology::Circular.generate(4).unwrap()).unwrap();
    assert_all_close(&b.vertex, &[0.5; 4], 1e-12, "square");
    assert_close(b.edge[&(0, 1)], 2.0, 1e-12, "square edge");
}

#[test]
fn cartesian_product_of_directed_circles_has_separable_eigenvectors() {
    use num_complex::Complex64;
    use spectral_graph::spectral::dft_basis;
    let n = 4;
    let c = Topology::DirectedCircular.generate(n).unwrap();
    let a = graph_product(&c, &c, ProductKind::Cartesian).adjacency();
    let basis = dft_basis(n).unwrap();
    for k in 0..n {
        for l in 0..n {
            let u: Vec<Complex64> = (0..n * n)
                .map(|i| basis.vectors[[i / n, k]] * basis.vectors[[i % n, l]])
                .collect();
            let lambda = basis.eigenvalues[k] + basis.eigenvalues[l];
            for row in 0..n * n {
                let au: Complex64 = (0..n * n).map(|j| u[j] * a[[row, j]]).sum();
                assert!(
                    (au - lambda * u[row]).norm() < 1e-10,
                    "({k}, {l}) row {row}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laplacian_rows_sum_to_zero(g in arb_graph(12)) {
        let l = g.laplacian(&LaplacianVariant::Standard).unwrap();
        for i in 0..g.n() {
            prop_assert!(l.row(i).sum().abs() < 1e-12);
            for j in 0..g.n() {
                prop_assert_eq!(l[[i, j]], l[[j, i]]);
            }
        }
    }

    #[test]
    fn degrees_are_exact_row_sums(g in arb_graph(12)) {
        let d = g.degrees();
        for i in 0..g.n() {
            prop_assert_eq!(d[i], g.weights().row(i).sum());
        }
    }

    #[test]
    fn permutation_preserves_spectra(g in arb_graph(9), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let p = g.permute(&perm).unwrap();
        for (a, b) in [(g.adjacency(), p.adjacency()),
                       (g.laplacian(&LaplacianVariant::Standard).unwrap(), p.laplacian(&LaplacianVariant::Standard).unwrap())] {
            let ea = eig_symmetric(&a, MatrixKind::Other).unwrap().eigenvalues;
            let eb = eig_symmetric(&b, MatrixKind::Other).unwrap().eigenvalues;
            for (x, y) in ea.iter().zip(eb.iter()) {
                prop_assert!((x - y).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn walk_powers_compose(seed in any::<u64>(), density in 0.0f64..1.0) {
        let g = random_graph(6, density, seed);
        let a = g.adjacency();
        for k in 2..=5 {
            let prev = walk_counts(&g, k - 1).unwrap().exact;
            prop_assert_eq!(walk_counts(&g, k).unwrap().exact, prev.dot(&a));
        }
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(12)) {
        let comps = connected_components(&g);
        let mut all: Vec<usize> = comps.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
    }
}
