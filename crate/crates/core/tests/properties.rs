//! Property tests for the structural and spectral invariants: handshake
//! counting, matrix symmetry, trace identities, the eigenvector equation,
//! energy decomposition, deletion monotonicity, and the division gap bounds.

use proptest::prelude::*;

use hyperspec_core::constructions;
use hyperspec_core::hypergraph::DEFAULT_WEAK_CUT_BUDGET;
use hyperspec_core::spectra::{self, AdjacencyMatrix, DEFAULT_EIGEN_TOL};
use hyperspec_core::surgery;
use hyperspec_core::{EdgeDivision, Hypergraph, VertexId, WeakCutSpec, WeakCutVerdict};

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (3usize..10, 1usize..9, any::<u64>()).prop_filter_map(
        "feasible random hypergraph",
        |(n, m, seed)| {
            let hi = 4.min(n);
            constructions::random_hypergraph(n, m, (2, hi), seed).ok()
        },
    )
}

fn arb_hypertree() -> impl Strategy<Value = Hypergraph> {
    (1usize..8, any::<u64>())
        .prop_map(|(m, seed)| constructions::random_hypertree(m, (2, 4), seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshake(h in arb_hypergraph()) {
        let by_vertex: u64 = h.vertices().map(|v| h.degree(v).unwrap()).sum();
        let by_edge: u64 = h.edges().iter().map(|e| e.len() as u64).sum();
        prop_assert_eq!(by_vertex, by_edge);
    }

    #[test]
    fn codegree_symmetry(h in arb_hypergraph()) {
        for a in h.vertices() {
            for b in h.vertices() {
                prop_assert_eq!(
                    h.set_degree(&[a, b]).unwrap(),
                    h.set_degree(&[b, a]).unwrap()
                );
            }
        }
    }

    #[test]
    fn adjacency_symmetric_zero_diagonal(h in arb_hypergraph()) {
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        for i in 0..a.n() {
            prop_assert_eq!(a.get(i, i), 0);
            for j in 0..a.n() {
                prop_assert_eq!(a.get(i, j), a.get(j, i));
                prop_assert_eq!(
                    a.get(i, j),
                    h.set_degree(&[VertexId(i), VertexId(j)]).unwrap_or(0)
                        * u64::from(i != j)
                );
            }
        }
    }

    #[test]
    fn trace_square_identity(h in arb_hypergraph()) {
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        let s = spectra::spectrum_numeric(&a, DEFAULT_EIGEN_TOL).unwrap();
        let numeric: f64 = s.values.iter().map(|x| x * x).sum();
        let exact = a.sum_offdiagonal_squares() as f64;
        prop_assert!((numeric - exact).abs() <= 1e-6 * exact.max(1.0));
    }

    #[test]
    fn eigenvector_identity(h in arb_hypergraph()) {
        // (A x)_u must equal the sum of x(e - u) over edges through u
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        let (values, vectors) = spectra::eigenpairs(&a, DEFAULT_EIGEN_TOL).unwrap();
        for (lambda, x) in values.iter().zip(&vectors) {
            let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            for u in 0..h.n() {
                let mut combinatorial = 0.0;
                for e in h.edges() {
                    if e.contains(VertexId(u)) {
                        combinatorial += e
                            .members()
                            .filter(|&w| w.0 != u)
                            .map(|w| x[w.0])
                            .sum::<f64>();
                    }
                }
                prop_assert!(
                    (combinatorial - lambda * x[u]).abs() <= 1e-8 * norm.max(1.0),
                    "vertex {u}: {combinatorial} vs {}", lambda * x[u]
                );
            }
        }
    }

    #[test]
    fn energy_is_twice_positive_part(h in arb_hypergraph()) {
        let report = spectra::energy(&h).unwrap();
        prop_assert!((report.energy - 2.0 * report.positive_sum).abs() <= 1e-8);
    }

    #[test]
    fn vertex_deletion_never_raises_energy(h in arb_hypergraph()) {
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        for v in h.vertices() {
            let deleted = surgery::delete_vertex(&h, v).unwrap();
            let sub = AdjacencyMatrix::from_hypergraph(&deleted).unwrap();
            prop_assert_eq!(&sub, &a.minor(v.0));
            let check = surgery::vertex_deletion_check(&h, v).unwrap();
            prop_assert!(check.holds, "vertex {}", v.0);
        }
    }

    #[test]
    fn edge_deletion_gap_within_bound(h in arb_hypergraph()) {
        for i in 0..h.m() {
            let check = surgery::edge_deletion_check(&h, i).unwrap();
            prop_assert!(check.holds, "edge {i}: gap {} bound {}", check.gap, check.bound);
        }
    }

    #[test]
    fn division_gap_within_bound(h in arb_hypergraph()) {
        for i in 0..h.m() {
            let e = h.edge(i).unwrap().clone();
            let members: Vec<VertexId> = e.members().collect();
            // one pendant split and one half split per edge
            for cut in [1, members.len() / 2] {
                if cut == 0 || cut == members.len() {
                    continue;
                }
                let spec = EdgeDivision {
                    edge: i,
                    left: members[..cut].to_vec(),
                    right: members[cut..].to_vec(),
                };
                let check = surgery::division_check(&h, &spec).unwrap();
                prop_assert!(check.holds);
            }
        }
    }

    #[test]
    fn hypertrees_are_linear(t in arb_hypertree()) {
        prop_assert!(t.is_hypertree());
        prop_assert!(t.is_linear());
    }

    #[test]
    fn hypertree_pendant_cuts_are_weak_and_decrease(t in arb_hypertree()) {
        for i in 0..t.m() {
            let members: Vec<VertexId> = t.edge(i).unwrap().members().collect();
            for &v in &members {
                let cut = WeakCutSpec {
                    divisions: vec![surgery::pendant_division(&t, i, v).unwrap()],
                };
                prop_assert_eq!(
                    t.is_weak_cut(&cut, DEFAULT_WEAK_CUT_BUDGET).unwrap(),
                    WeakCutVerdict::Yes
                );
                let check = surgery::weak_cut_energy_check(&t, &cut, DEFAULT_WEAK_CUT_BUDGET)
                    .unwrap();
                prop_assert!(check.holds);
                prop_assert_eq!(check.strict, Some(true));
            }
        }
    }

    #[test]
    fn twin_vertices_share_eigenvector_entries(n in 2usize..5, k in 3usize..5, seed in any::<u64>()) {
        // power graphs have twins: the padding vertices of one edge lie in
        // exactly the same edges
        let base = constructions::random_hypergraph(n.max(2), n.max(2) - 1, (2, 2), seed);
        let base = match base { Ok(b) => b, Err(_) => return Ok(()) };
        let h = constructions::power_graph(&base, k).unwrap();
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        let (values, vectors) = spectra::eigenpairs(&a, DEFAULT_EIGEN_TOL).unwrap();
        for (idx, e) in h.edges().iter().enumerate() {
            let u = h.vertex(&format!("{idx}_p1"));
            let w = h.vertex(&format!("{idx}_p2"));
            let (Some(u), Some(w)) = (u, w) else { continue };
            prop_assert!(e.contains(u) && e.contains(w));
            let degree = h.degree(u).unwrap() as f64;
            for (lambda, x) in values.iter().zip(&vectors) {
                if (lambda + degree).abs() <= 1e-6 {
                    continue;
                }
                let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
                prop_assert!(
                    (x[u.0] - x[w.0]).abs() <= 1e-6 * norm.max(1.0),
                    "twins differ at lambda = {lambda}"
                );
            }
        }
    }
}

#[test]
fn edge_deletion_difference_spectrum() {
    // A(H) - A(H - e) restricted to e is J - I: eigenvalues |e|-1 and -1
    let h = constructions::random_hypergraph(8, 6, (2, 5), 42).unwrap();
    let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
    for i in 0..h.m() {
        let e = h.edge(i).unwrap().clone();
        let size = e.len();
        let deleted = surgery::delete_edge(&h, i).unwrap();
        let b = AdjacencyMatrix::from_hypergraph(&deleted).unwrap();
        let n = a.n();
        let diff: Vec<f64> = a
            .to_f64()
            .iter()
            .zip(b.to_f64())
            .map(|(x, y)| x - y)
            .collect();
        let eig = hyperspec_core::eigen::decompose(&diff, n, 1e-12).unwrap();
        let mut expected = vec![0.0; n];
        for slot in expected.iter_mut().take(size - 1) {
            *slot = -1.0;
        }
        expected[n - 1] = size as f64 - 1.0;
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in eig.values.iter().zip(&expected) {
            assert!((got - want).abs() < 1e-9, "edge {i}: {got} vs {want}");
        }
    }
}

#[test]
fn interlacing_under_vertex_deletion() {
    // eigenvalues of the principal submatrix separate the originals
    let h = constructions::random_hypergraph(9, 7, (2, 4), 7).unwrap();
    let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
    let s = spectra::spectrum_numeric(&a, DEFAULT_EIGEN_TOL).unwrap();
    for v in 0..h.n() {
        let sub = spectra::spectrum_numeric(&a.minor(v), DEFAULT_EIGEN_TOL).unwrap();
        for (i, mu) in sub.values.iter().enumerate() {
            assert!(s.values[i] >= mu - 1e-9);
            assert!(*mu >= s.values[i + 1] - 1e-9);
        }
    }
}
