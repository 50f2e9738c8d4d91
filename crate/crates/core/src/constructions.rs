//! Builders for hypergraph families and binary operations: complete
//! k-graphs, power graphs, hyperstars with closed-form spectra, the sum and
//! product of k-graphs, and a seeded random generator.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::error::Error;
use crate::hypergraph::{Hypergraph, Mode};
use crate::spectra::Spectrum;
use crate::Result;

/// Guard on the number of edges any constructor will materialize.
pub const EDGE_CAP: u128 = 1_000_000;

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Lexicographic k-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        // advance the rightmost index that can still move
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let rest: Vec<usize> = items
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        for mut tail in permutations(&rest) {
            let mut perm = vec![head];
            perm.append(&mut tail);
            out.push(perm);
        }
    }
    out
}

/// Complete k-graph on n vertices: every k-subset is an edge.
pub fn complete_kgraph(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 2 || k > n {
        return Err(Error::BadParams(format!(
            "complete k-graph needs 2 <= k <= n, got n={n} k={k}"
        )));
    }
    let count = binomial(n, k);
    if count > EDGE_CAP {
        return Err(Error::SizeCapExceeded(count));
    }
    Hypergraph::from_index_edges(Mode::Strict, numbered_labels(n), combinations(n, k))
}

/// Star S_n as a 2-graph: v1 joined to each of v2..vn.
pub fn star(n: usize) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::BadParams(format!("star needs n >= 2, got {n}")));
    }
    let edges = (1..n).map(|i| vec![0, i]).collect();
    Hypergraph::from_index_edges(Mode::Strict, numbered_labels(n), edges)
}

/// Power graph: pad every edge of a 2-graph with `k - 2` fresh vertices.
/// Fresh vertices are labeled `<edge-index>_p<i>`.
pub fn power_graph(g: &Hypergraph, k: usize) -> Result<Hypergraph> {
    if g.m() > 0 && g.uniformity() != Some(2) {
        return Err(Error::NotAGraph);
    }
    if k < 2 {
        return Err(Error::BadParams(format!("power needs k >= 2, got {k}")));
    }
    let mut labels: Vec<String> = g.labels().to_vec();
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(g.m());
    for (idx, e) in g.edges().iter().enumerate() {
        let mut members: Vec<usize> = e.members().map(|v| v.0).collect();
        for i in 1..=k - 2 {
            members.push(labels.len());
            labels.push(format!("{idx}_p{i}"));
        }
        edges.push(members);
    }
    Hypergraph::from_index_edges(Mode::Strict, labels, edges)
}

/// Hyperstar `(S_n)^k`: the k-th power of the star on n vertices. It has
/// `(n-1)(k-1) + 1` vertices.
pub fn hyperstar(n: usize, k: usize) -> Result<Hypergraph> {
    if n < 2 || k < 2 {
        return Err(Error::BadParams(format!(
            "hyperstar needs n, k >= 2, got n={n} k={k}"
        )));
    }
    power_graph(&star(n)?, k)
}

/// Closed-form spectrum of the hyperstar `(S_n)^k`:
/// `-1` with multiplicity `(n-1)(k-2)`, `k-2` with multiplicity `n-2`, and
/// the two roots of `x^2 - (k-2) x - (n-1)(k-1)`.
pub fn hyperstar_spectrum_closed(n: usize, k: usize) -> Result<Spectrum> {
    if n < 2 || k < 2 {
        return Err(Error::BadParams(format!(
            "hyperstar needs n, k >= 2, got n={n} k={k}"
        )));
    }
    let b = (k - 2) as f64;
    let discriminant = b * b + 4.0 * ((n - 1) * (k - 1)) as f64;
    let root = libm::sqrt(discriminant);
    let r_plus = (b + root) / 2.0;
    let r_minus = (b - root) / 2.0;
    // descending: r+ >= k-2 >= -1 >= r-
    let mut values = Vec::with_capacity((n - 1) * (k - 1) + 1);
    values.push(r_plus);
    values.extend(core::iter::repeat(b).take(n - 2));
    values.extend(core::iter::repeat(-1.0).take((n - 1) * (k - 2)));
    values.push(r_minus);
    Ok(Spectrum::from_values_descending(values))
}

/// Closed-form hyperstar energy
/// `(k-2)(2n-3) + sqrt((k-2)^2 + 4(n-1)(k-1))`.
pub fn hyperstar_energy_closed(n: usize, k: usize) -> Result<f64> {
    if n < 2 || k < 2 {
        return Err(Error::BadParams(format!(
            "hyperstar needs n, k >= 2, got n={n} k={k}"
        )));
    }
    let b = (k - 2) as f64;
    let discriminant = b * b + 4.0 * ((n - 1) * (k - 1)) as f64;
    Ok(b * (2 * n - 3) as f64 + libm::sqrt(discriminant))
}

/// Energy interval attained by hyperstars on `t` vertices: the star `S_t`
/// reaches the lower end `2 sqrt(t-1)`, the single t-edge `(S_2)^t` the
/// upper end `2(t-1)`.
pub fn hyperstar_extremal_bounds(t: usize) -> Result<(f64, f64)> {
    if t < 2 {
        return Err(Error::BadParams(format!("need t >= 2, got {t}")));
    }
    Ok((2.0 * libm::sqrt((t - 1) as f64), 2.0 * (t - 1) as f64))
}

fn check_same_uniformity(h: &Hypergraph, g: &Hypergraph) -> Result<()> {
    let ku = match (h.m(), h.uniformity()) {
        (0, _) => None,
        (_, Some(k)) if k >= 2 => Some(k),
        _ => return Err(Error::NotUniform),
    };
    let kg = match (g.m(), g.uniformity()) {
        (0, _) => None,
        (_, Some(k)) if k >= 2 => Some(k),
        _ => return Err(Error::NotUniform),
    };
    match (ku, kg) {
        (Some(a), Some(b)) if a != b => Err(Error::MismatchedUniformity(a, b)),
        _ => Ok(()),
    }
}

fn pair_labels(h: &Hypergraph, g: &Hypergraph) -> Vec<String> {
    let mut labels = Vec::with_capacity(h.n() * g.n());
    for hv in h.labels() {
        for gv in g.labels() {
            labels.push(format!("{hv}.{gv}"));
        }
    }
    labels
}

/// Sum of two k-graphs on the vertex set `V(H) x V(G)`: edges `{v} x e` for
/// every vertex of H and edge of G, plus `f x {u}` for every edge of H and
/// vertex of G. Its adjacency matrix is the Kronecker sum, so spectra add.
pub fn direct_sum(h: &Hypergraph, g: &Hypergraph) -> Result<Hypergraph> {
    check_same_uniformity(h, g)?;
    let ng = g.n();
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(h.n() * g.m() + h.m() * g.n());
    for v in 0..h.n() {
        for e in g.edges() {
            edges.push(e.members().map(|u| v * ng + u.0).collect());
        }
    }
    for f in h.edges() {
        for u in 0..ng {
            edges.push(f.members().map(|w| w.0 * ng + u).collect());
        }
    }
    let mode = if h.mode() == Mode::Multi || g.mode() == Mode::Multi {
        Mode::Multi
    } else {
        Mode::Strict
    };
    Hypergraph::from_index_edges(mode, pair_labels(h, g), edges)
}

/// Product of two k-graphs: for every pair of edges `e, f` and every pair of
/// orderings of them, the set of positionwise vertex pairs is an edge.
/// Duplicate member sets collapse, leaving `k! * m_H * m_G` distinct edges.
pub fn tensor_product(h: &Hypergraph, g: &Hypergraph) -> Result<Hypergraph> {
    check_same_uniformity(h, g)?;
    let k = h.uniformity().or(g.uniformity()).unwrap_or(2);
    let factorial: u128 = (1..=k as u128).product();
    let total = factorial
        .saturating_mul(h.m() as u128)
        .saturating_mul(g.m() as u128);
    if total > EDGE_CAP {
        return Err(Error::SizeCapExceeded(total));
    }
    let ng = g.n();
    let mut seen = alloc::collections::BTreeSet::new();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for e in h.edges() {
        let e_members: Vec<usize> = e.members().map(|v| v.0).collect();
        for f in g.edges() {
            let f_members: Vec<usize> = f.members().map(|v| v.0).collect();
            // fixing f in its sorted order loses no edge sets: reordering
            // both factors in parallel yields the same pairing
            for alpha in permutations(&e_members) {
                let mut edge: Vec<usize> = alpha
                    .iter()
                    .zip(&f_members)
                    .map(|(&v, &u)| v * ng + u)
                    .collect();
                edge.sort_unstable();
                if seen.insert(edge.clone()) {
                    edges.push(edge);
                }
            }
        }
    }
    Hypergraph::from_index_edges(Mode::Strict, pair_labels(h, g), edges)
}

/// `m` distinct edges with sizes uniform in `sizes`, drawn by rejection
/// sampling; deterministic for a fixed seed.
pub fn random_hypergraph(
    n: usize,
    m: usize,
    sizes: (usize, usize),
    seed: u64,
) -> Result<Hypergraph> {
    let (lo, hi) = sizes;
    if lo < 2 || lo > hi || hi > n {
        return Err(Error::InfeasibleParams(format!(
            "need 2 <= {lo} <= {hi} <= {n}"
        )));
    }
    let available: u128 = (lo..=hi).map(|s| binomial(n, s)).sum();
    if (m as u128) > available {
        return Err(Error::InfeasibleParams(format!(
            "{m} distinct edges requested, only {available} exist"
        )));
    }
    let mut rng = SmallRng::seed_from_u64(seed);
    let mut chosen = alloc::collections::BTreeSet::new();
    while chosen.len() < m {
        let s = rng.gen_range(lo..=hi);
        let mut edge = rand::seq::index::sample(&mut rng, n, s).into_vec();
        edge.sort_unstable();
        chosen.insert(edge);
    }
    let edges: Vec<Vec<usize>> = chosen.into_iter().collect();
    Hypergraph::from_index_edges(Mode::Strict, numbered_labels(n), edges)
}

/// Random hypertree with exactly `m` edges: every edge after the first
/// attaches to one existing vertex and brings fresh vertices, so the
/// incidence graph stays a tree. Deterministic per seed.
pub fn random_hypertree(m: usize, sizes: (usize, usize), seed: u64) -> Result<Hypergraph> {
    let (lo, hi) = sizes;
    if m == 0 || lo < 2 || lo > hi {
        return Err(Error::InfeasibleParams(format!(
            "need m >= 1 and 2 <= {lo} <= {hi}"
        )));
    }
    let mut rng = SmallRng::seed_from_u64(seed);
    let mut vertex_count = 0usize;
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    for i in 0..m {
        let s = rng.gen_range(lo..=hi);
        let mut edge = Vec::with_capacity(s);
        let fresh = if i == 0 {
            s
        } else {
            edge.push(rng.gen_range(0..vertex_count));
            s - 1
        };
        for _ in 0..fresh {
            edge.push(vertex_count);
            vertex_count += 1;
        }
        edges.push(edge);
    }
    Hypergraph::from_index_edges(Mode::Strict, numbered_labels(vertex_count), edges)
}
