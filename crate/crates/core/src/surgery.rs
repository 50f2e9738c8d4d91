//! Vertex deletion, edge deletion, edge division, and the energy-gap
//! theorems that constrain them.
//!
//! Deleting a vertex removes it from every edge; the adjacency matrix of the
//! result is a principal submatrix of the original, so interlacing forces
//! the energy to drop or stay. Deleting an edge changes the energy by at
//! most `2|e| - 2` in either direction; dividing an edge into halves of
//! sizes `p` and `q` by at most `2 sqrt(pq)`. Results of deletion and
//! division are always multi-hypergraphs: shrunken edges are kept even when
//! they collapse to size 0/1 or duplicate an existing edge.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::hypergraph::{EdgeDivision, Hypergraph, Mode, VertexId, WeakCutSpec, WeakCutVerdict};
use crate::spectra::{self, AdjacencyMatrix};
use crate::Result;

/// Tolerance for inequality checks in gap reports.
pub const GAP_TOL: f64 = 1e-6;
/// Strictness witness threshold.
pub const STRICT_TOL: f64 = 1e-9;

/// Outcome of one energy-gap check. `gap` and `bound` are oriented so that
/// the theorem under test reads `gap <= bound`; `strict` is set only for
/// checks whose theorem asserts a strict decrease.
#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub before: f64,
    pub after: f64,
    pub gap: f64,
    pub bound: f64,
    pub holds: bool,
    pub strict: Option<bool>,
}

/// Delete a vertex: every edge containing it shrinks by that vertex; the
/// result is typed multi because edges may collapse or duplicate.
pub fn delete_vertex(h: &Hypergraph, v: VertexId) -> Result<Hypergraph> {
    if v.0 >= h.n() {
        return Err(Error::UnknownVertex(format!("index {}", v.0)));
    }
    let labels: Vec<String> = h
        .labels()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != v.0)
        .map(|(_, l)| l.clone())
        .collect();
    let remap = |i: usize| if i > v.0 { i - 1 } else { i };
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| {
            e.members()
                .filter(|&u| u != v)
                .map(|u| remap(u.0))
                .collect()
        })
        .collect();
    Hypergraph::from_index_edges(Mode::Multi, labels, edges)
}

/// Delete an edge; vertices are retained, possibly becoming isolated.
pub fn delete_edge(h: &Hypergraph, edge_index: usize) -> Result<Hypergraph> {
    if edge_index >= h.m() {
        return Err(Error::BadIndex(edge_index));
    }
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != edge_index)
        .map(|(_, e)| e.members().map(|v| v.0).collect())
        .collect();
    Hypergraph::from_index_edges(h.mode(), h.labels().to_vec(), edges)
}

/// Replace each selected edge by its two halves; the result is typed multi.
pub fn divide_edges(h: &Hypergraph, specs: &[EdgeDivision]) -> Result<Hypergraph> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut validated = Vec::with_capacity(specs.len());
    for spec in specs {
        if !seen.insert(spec.edge) {
            return Err(Error::DuplicateIndex(spec.edge));
        }
        let (left, right) = h.check_division(spec)?;
        validated.push((spec.edge, left, right));
    }
    Hypergraph::from_index_edges(
        Mode::Multi,
        h.labels().to_vec(),
        h.divided_edge_indices(&validated),
    )
}

fn energy_or_zero(h: &Hypergraph) -> Result<f64> {
    if h.n() == 0 {
        Ok(0.0)
    } else {
        spectra::energy_value(h)
    }
}

/// Energy monotonicity under vertex deletion: `E(H - v) <= E(H)`.
/// `gap` is the signed change `after - before` and must stay at or below 0.
pub fn vertex_deletion_check(h: &Hypergraph, v: VertexId) -> Result<GapReport> {
    let before = energy_or_zero(h)?;
    let after = energy_or_zero(&delete_vertex(h, v)?)?;
    let gap = after - before;
    Ok(GapReport {
        before,
        after,
        gap,
        bound: 0.0,
        holds: gap <= GAP_TOL,
        strict: None,
    })
}

/// Edge deletion moves the energy by at most `2|e| - 2` in either direction.
pub fn edge_deletion_check(h: &Hypergraph, edge_index: usize) -> Result<GapReport> {
    let size = h.edge(edge_index)?.len();
    let before = energy_or_zero(h)?;
    let after = energy_or_zero(&delete_edge(h, edge_index)?)?;
    let gap = libm::fabs(before - after);
    let bound = 2.0 * size as f64 - 2.0;
    Ok(GapReport {
        before,
        after,
        gap,
        bound,
        holds: gap <= bound + GAP_TOL,
        strict: None,
    })
}

/// Edge division moves the energy by at most `2 sqrt(|left| |right|)`.
pub fn division_check(h: &Hypergraph, spec: &EdgeDivision) -> Result<GapReport> {
    let (left, right) = h.check_division(spec)?;
    let before = energy_or_zero(h)?;
    let divided = divide_edges(h, core::slice::from_ref(spec))?;
    let after = energy_or_zero(&divided)?;
    let gap = libm::fabs(before - after);
    let bound = 2.0 * libm::sqrt((left.len() * right.len()) as f64);

    #[cfg(debug_assertions)]
    difference_spectrum_check(h, &divided, left.len(), right.len());

    Ok(GapReport {
        before,
        after,
        gap,
        bound,
        holds: gap <= bound + GAP_TOL,
        strict: None,
    })
}

/// The difference `A(H) - A(H / e)` has exactly the non-zero spectrum
/// `{ +sqrt(pq), -sqrt(pq) }`; checked numerically in debug builds.
#[cfg(debug_assertions)]
fn difference_spectrum_check(h: &Hypergraph, divided: &Hypergraph, p: usize, q: usize) {
    let a = AdjacencyMatrix::from_hypergraph(h).unwrap();
    let b = AdjacencyMatrix::from_hypergraph(divided).unwrap();
    let n = a.n();
    let diff: Vec<f64> = a
        .to_f64()
        .iter()
        .zip(b.to_f64())
        .map(|(x, y)| x - y)
        .collect();
    let eig = crate::eigen::decompose(&diff, n, 1e-12).unwrap();
    let expected = libm::sqrt((p * q) as f64);
    for (i, value) in eig.values.iter().enumerate() {
        let target = if i == 0 {
            -expected
        } else if i == n - 1 {
            expected
        } else {
            0.0
        };
        debug_assert!(
            libm::fabs(value - target) < 1e-8,
            "difference spectrum deviates: {value} vs {target}"
        );
    }
}

/// Dividing an isolated edge changes the energy by exactly 2, whatever the
/// split; the generic bound `2 sqrt(pq)` is attained only for a 2-edge.
pub fn isolated_edge_division_check(h: &Hypergraph, spec: &EdgeDivision) -> Result<GapReport> {
    let (left, right) = h.check_division(spec)?;
    let edge = h.edge(spec.edge)?;
    for (i, other) in h.edges().iter().enumerate() {
        if i != spec.edge && edge.members().any(|v| other.contains(v)) {
            return Err(Error::NotIsolated(spec.edge));
        }
    }
    let before = energy_or_zero(h)?;
    let after = energy_or_zero(&divide_edges(h, core::slice::from_ref(spec))?)?;
    let gap = libm::fabs(before - after);
    let bound = 2.0;
    let generic = 2.0 * libm::sqrt((left.len() * right.len()) as f64);
    debug_assert_eq!(
        libm::fabs(gap - generic) <= STRICT_TOL,
        edge.len() == 2,
        "generic bound attained iff the edge is a 2-edge"
    );
    Ok(GapReport {
        before,
        after,
        gap,
        bound,
        holds: libm::fabs(gap - bound) <= GAP_TOL,
        strict: None,
    })
}

/// Energy never grows under a weak cut; for the single-edge pendant form
/// `(e, e - {v}, {v})` the decrease is strict.
pub fn weak_cut_energy_check(
    h: &Hypergraph,
    cut: &WeakCutSpec,
    budget: u64,
) -> Result<GapReport> {
    match h.is_weak_cut(cut, budget)? {
        WeakCutVerdict::Yes => {}
        WeakCutVerdict::No => return Err(Error::NotAWeakCut),
        WeakCutVerdict::BudgetExceeded => return Err(Error::WeakCutBudgetExceeded),
    }
    let before = energy_or_zero(h)?;
    let divided = divide_edges(h, &cut.divisions)?;
    let after = energy_or_zero(&divided)?;
    let gap = after - before;
    let pendant_form = cut.divisions.len() == 1
        && (cut.divisions[0].left.len() == 1 || cut.divisions[0].right.len() == 1);
    Ok(GapReport {
        before,
        after,
        gap,
        bound: 0.0,
        holds: gap <= GAP_TOL,
        strict: pendant_form.then(|| gap < -STRICT_TOL),
    })
}

/// Convenience used across suites: the pendant division `(e, e - {v}, {v})`.
pub fn pendant_division(h: &Hypergraph, edge_index: usize, v: VertexId) -> Result<EdgeDivision> {
    let edge = h.edge(edge_index)?;
    if !edge.contains(v) {
        return Err(Error::MalformedSpec(format!(
            "vertex {} not in edge {edge_index}",
            h.label(v)
        )));
    }
    if edge.len() < 2 {
        return Err(Error::MalformedSpec("edge too small to divide".to_string()));
    }
    Ok(EdgeDivision {
        edge: edge_index,
        left: edge.members().filter(|&u| u != v).collect(),
        right: vec![v],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::hypergraph::DEFAULT_WEAK_CUT_BUDGET;

    fn k5_3() -> Hypergraph {
        constructions::complete_kgraph(5, 3).unwrap()
    }

    #[test]
    fn delete_vertex_complete_3_graph() {
        let h = k5_3();
        let d = delete_vertex(&h, VertexId(0)).unwrap();
        assert_eq!(d.n(), 4);
        assert_eq!(d.m(), 10);
        let sizes: Vec<usize> = d.edges().iter().map(|e| e.len()).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 4);
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 6);
        // codegrees 2 + 1 per pair: the adjacency is 3(J - I) of size 4
        let a = AdjacencyMatrix::from_hypergraph(&d).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.get(i, j), if i == j { 0 } else { 3 });
            }
        }
        assert!((spectra::energy_value(&d).unwrap() - 18.0).abs() < 1e-9);
    }

    #[test]
    fn delete_vertex_keeps_tiny_edges() {
        let h = Hypergraph::from_edges(Mode::Strict, &[&["1", "2"]]).unwrap();
        let d = delete_vertex(&h, h.vertex("1").unwrap()).unwrap();
        assert_eq!(d.m(), 1);
        assert_eq!(d.edges()[0].len(), 1);
        assert_eq!(spectra::energy_value(&d).unwrap(), 0.0);
    }

    #[test]
    fn delete_hyperstar_center() {
        let h = constructions::hyperstar(4, 3).unwrap();
        let center = h.vertex("v1").unwrap();
        let d = delete_vertex(&h, center).unwrap();
        assert!((spectra::energy_value(&d).unwrap() - 6.0).abs() < 1e-10);
    }

    #[test]
    fn principal_submatrix_identity() {
        let h = constructions::random_hypergraph(7, 6, (2, 4), 11).unwrap();
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        for v in 0..h.n() {
            let d = delete_vertex(&h, VertexId(v)).unwrap();
            let sub = AdjacencyMatrix::from_hypergraph(&d).unwrap();
            assert_eq!(sub, a.minor(v));
        }
    }

    #[test]
    fn vertex_deletion_monotone() {
        let h = k5_3();
        for v in h.vertices() {
            let r = vertex_deletion_check(&h, v).unwrap();
            assert!(r.holds);
            assert!((r.before - 24.0).abs() < 1e-9);
            assert!((r.after - 18.0).abs() < 1e-9);
        }
    }

    #[test]
    fn vertex_deletion_on_edgeless() {
        let h = Hypergraph::with_vertices(Mode::Strict, &["a", "b"], &[]).unwrap();
        let r = vertex_deletion_check(&h, VertexId(0)).unwrap();
        assert!(r.holds);
        assert_eq!((r.before, r.after), (0.0, 0.0));
    }

    #[test]
    fn edge_deletion_golden() {
        let h = k5_3();
        let r = edge_deletion_check(&h, 0).unwrap();
        assert!(r.holds);
        assert!((r.before - 24.0).abs() < 1e-9);
        assert!((r.after - 21.731).abs() < 5e-4);
        assert!((r.gap - 2.269).abs() < 1e-3);
        assert_eq!(r.bound, 4.0);
    }

    #[test]
    fn edge_deletion_bound_tight_on_isolated_edge() {
        let h = Hypergraph::from_edges(Mode::Strict, &[&["1", "2", "3", "4"]]).unwrap();
        let r = edge_deletion_check(&h, 0).unwrap();
        assert!(r.holds);
        assert!((r.gap - 6.0).abs() < 1e-9);
        assert_eq!(r.bound, 6.0);
    }

    #[test]
    fn division_reduces_to_deletion_for_2_edges() {
        // dividing a 2-edge into singletons leaves the adjacency of deletion
        let h = Hypergraph::from_edges(Mode::Strict, &[&["u", "v"], &["v", "w"]]).unwrap();
        let spec = EdgeDivision {
            edge: 0,
            left: vec![h.vertex("u").unwrap()],
            right: vec![h.vertex("v").unwrap()],
        };
        let divided = divide_edges(&h, &[spec]).unwrap();
        let deleted = delete_edge(&h, 0).unwrap();
        assert_eq!(
            AdjacencyMatrix::from_hypergraph(&divided).unwrap(),
            AdjacencyMatrix::from_hypergraph(&deleted).unwrap()
        );
    }

    #[test]
    fn divide_mixed_rank_example() {
        let h = Hypergraph::from_edges(
            Mode::Strict,
            &[
                &["0", "1", "2"][..],
                &["2", "3", "4", "5", "6", "7"][..],
                &["7", "8", "9"][..],
            ],
        )
        .unwrap();
        let spec = EdgeDivision {
            edge: 1,
            left: ["2", "3", "4", "5"].iter().map(|l| h.vertex(l).unwrap()).collect(),
            right: ["6", "7"].iter().map(|l| h.vertex(l).unwrap()).collect(),
        };
        let divided = divide_edges(&h, &[spec]).unwrap();
        assert_eq!(divided.m(), 4);
        let mut sizes: Vec<usize> = divided.edges().iter().map(|e| e.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3, 3, 4]);
    }

    #[test]
    fn division_checks_golden_complete_4_graph() {
        let h = constructions::complete_kgraph(5, 4).unwrap();
        assert!((spectra::energy_value(&h).unwrap() - 24.0).abs() < 1e-9);
        // the first edge is {v1, v2, v3, v4}
        let v = |l: &str| h.vertex(l).unwrap();
        let half = EdgeDivision {
            edge: 0,
            left: vec![v("v1"), v("v2")],
            right: vec![v("v3"), v("v4")],
        };
        let r = division_check(&h, &half).unwrap();
        assert!(r.holds);
        assert!((r.after - 20.8924).abs() < 5e-4);
        assert!((r.bound - 4.0).abs() < 1e-12);

        let pendant = EdgeDivision {
            edge: 0,
            left: vec![v("v1")],
            right: vec![v("v2"), v("v3"), v("v4")],
        };
        let r = division_check(&h, &pendant).unwrap();
        assert!(r.holds);
        assert!((r.after - 21.7438).abs() < 5e-4);
        assert!((r.bound - 2.0 * libm::sqrt(3.0)).abs() < 1e-12);
    }

    #[test]
    fn division_rejects_malformed_specs() {
        let h = k5_3();
        let v = |l: &str| h.vertex(l).unwrap();
        let bad = EdgeDivision {
            edge: 0,
            left: vec![v("v1")],
            right: vec![v("v2")],
        };
        assert!(matches!(
            division_check(&h, &bad),
            Err(Error::MalformedSpec(_))
        ));
        let empty = EdgeDivision {
            edge: 0,
            left: vec![],
            right: vec![v("v1"), v("v2"), v("v3")],
        };
        assert!(matches!(
            division_check(&h, &empty),
            Err(Error::MalformedSpec(_))
        ));
    }

    #[test]
    fn isolated_division_gap_is_two() {
        let h = Hypergraph::from_edges(Mode::Strict, &[&["1", "2", "3"]]).unwrap();
        let spec = EdgeDivision {
            edge: 0,
            left: vec![h.vertex("1").unwrap(), h.vertex("2").unwrap()],
            right: vec![h.vertex("3").unwrap()],
        };
        let r = isolated_edge_division_check(&h, &spec).unwrap();
        assert!(r.holds);
        assert!((r.before - 4.0).abs() < 1e-10);
        assert!((r.after - 2.0).abs() < 1e-10);
    }

    #[test]
    fn isolated_division_rejects_meeting_edges() {
        let h = Hypergraph::from_edges(Mode::Strict, &[&["1", "2", "3"], &["3", "4"]]).unwrap();
        let spec = EdgeDivision {
            edge: 0,
            left: vec![h.vertex("1").unwrap(), h.vertex("2").unwrap()],
            right: vec![h.vertex("3").unwrap()],
        };
        assert!(matches!(
            isolated_edge_division_check(&h, &spec),
            Err(Error::NotIsolated(0))
        ));
    }

    #[test]
    fn isolated_division_on_disjoint_union() {
        // complete 3-graph plus a lone 4-edge: gap 2, below the generic 4
        let mut edges: Vec<Vec<&str>> = vec![vec!["a", "b", "c", "d"]];
        let k = constructions::complete_kgraph(5, 3).unwrap();
        let named: Vec<Vec<String>> = k
            .edges()
            .iter()
            .map(|e| e.members().map(|v| k.label(v).to_string()).collect())
            .collect();
        let mut all: Vec<Vec<String>> = named;
        all.push(edges.remove(0).iter().map(|s| s.to_string()).collect());
        let refs: Vec<&[String]> = all.iter().map(|e| e.as_slice()).collect();
        let h = Hypergraph::from_edges(Mode::Strict, &refs).unwrap();
        let spec = EdgeDivision {
            edge: 10,
            left: vec![h.vertex("a").unwrap(), h.vertex("b").unwrap()],
            right: vec![h.vertex("c").unwrap(), h.vertex("d").unwrap()],
        };
        let r = isolated_edge_division_check(&h, &spec).unwrap();
        assert!(r.holds);
        assert!((r.gap - 2.0).abs() < 1e-9);
    }

    #[test]
    fn weak_cut_strict_decrease_on_hyperstar() {
        let h = constructions::hyperstar(4, 3).unwrap();
        for i in 0..h.m() {
            let members: Vec<VertexId> = h.edge(i).unwrap().members().collect();
            for &v in &members {
                let cut = WeakCutSpec {
                    divisions: vec![pendant_division(&h, i, v).unwrap()],
                };
                let r = weak_cut_energy_check(&h, &cut, DEFAULT_WEAK_CUT_BUDGET).unwrap();
                assert!(r.holds);
                assert_eq!(r.strict, Some(true));
            }
        }
    }

    #[test]
    fn weak_cut_check_rejects_non_cut() {
        let h = k5_3();
        let cut = WeakCutSpec {
            divisions: vec![pendant_division(&h, 0, VertexId(0)).unwrap()],
        };
        assert!(matches!(
            weak_cut_energy_check(&h, &cut, DEFAULT_WEAK_CUT_BUDGET),
            Err(Error::NotAWeakCut)
        ));
    }

    #[test]
    fn degree_one_vertex_split_is_weak_cut() {
        // v has degree 1 in the big edge of a triangle-with-pendant
        let h = Hypergraph::from_edges(
            Mode::Strict,
            &[&["a", "b"][..], &["b", "c"][..], &["c", "a", "v"][..]],
        )
        .unwrap();
        let cut = WeakCutSpec {
            divisions: vec![pendant_division(&h, 2, h.vertex("v").unwrap()).unwrap()],
        };
        let r = weak_cut_energy_check(&h, &cut, DEFAULT_WEAK_CUT_BUDGET).unwrap();
        assert!(r.holds);
        assert_eq!(r.strict, Some(true));
    }
}
