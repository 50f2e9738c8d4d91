//! General (non-uniform, multi-) hypergraphs and their structural queries.
//!
//! A hypergraph is a vertex set plus a collection of edges, each edge an
//! arbitrary subset of the vertices. In strict mode edges have at least two
//! members and no two edges coincide; in multi mode repeated edges and edges
//! of size 0 or 1 are allowed (they arise naturally from vertex deletion and
//! edge division).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::error::Error;
use crate::Result;

/// Dense vertex index, assigned at construction in first-appearance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Strictness of the edge multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Edges are distinct sets of size >= 2.
    Strict,
    /// Repeated edges and edges of size 0 or 1 are allowed.
    Multi,
}

/// One edge: a sorted set of vertex indices (no duplicates within an edge).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    members: Vec<usize>,
}

impl Edge {
    fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Edge { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v.0).is_ok()
    }

    /// Members in ascending index order.
    pub fn members(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().map(|&i| VertexId(i))
    }

    pub(crate) fn indices(&self) -> &[usize] {
        &self.members
    }
}

/// One edge divided into two disjoint non-empty halves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDivision {
    pub edge: usize,
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
}

/// A set of edge divisions proposed as a cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakCutSpec {
    pub divisions: Vec<EdgeDivision>,
}

/// Outcome of the exhaustive weak-cut test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeakCutVerdict {
    Yes,
    No,
    BudgetExceeded,
}

/// Default number of candidate divisions the weak-cut search will enumerate.
pub const DEFAULT_WEAK_CUT_BUDGET: u64 = 1_000_000;

/// Maximum, minimum and exact average vertex degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub max: u64,
    pub min: u64,
    pub avg: Ratio<i64>,
}

/// A vertex set plus an edge list, immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: Vec<Edge>,
    mode: Mode,
}

fn validate_label(label: &str) -> Result<()> {
    if label.is_empty() {
        return Err(Error::Validation("empty vertex label".to_string()));
    }
    if label.chars().any(char::is_whitespace) {
        return Err(Error::Validation(format!(
            "label {label:?} contains whitespace"
        )));
    }
    if label.contains('#') || label == "{}" || label == "vertices:" {
        return Err(Error::Validation(format!("reserved label {label:?}")));
    }
    Ok(())
}

impl Hypergraph {
    /// Build from an explicit vertex order and edges given as label slices.
    pub fn with_vertices<S: AsRef<str>>(
        mode: Mode,
        vertices: &[S],
        edges: &[&[S]],
    ) -> Result<Self> {
        let mut labels = Vec::with_capacity(vertices.len());
        let mut index = BTreeMap::new();
        for v in vertices {
            let label = v.as_ref();
            validate_label(label)?;
            if index.insert(label.to_string(), labels.len()).is_some() {
                return Err(Error::Validation(format!("duplicate vertex {label:?}")));
            }
            labels.push(label.to_string());
        }
        let mut edge_list = Vec::with_capacity(edges.len());
        for edge in edges {
            let mut members = Vec::with_capacity(edge.len());
            for v in edge.iter() {
                let label = v.as_ref();
                match index.get(label) {
                    Some(&i) => members.push(i),
                    None => return Err(Error::UnknownVertex(label.to_string())),
                }
            }
            edge_list.push(members);
        }
        Self::from_parts(mode, labels, index, edge_list)
    }

    /// Build from edges alone; vertices are collected in first-appearance order.
    pub fn from_edges<S: AsRef<str>>(mode: Mode, edges: &[&[S]]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index = BTreeMap::new();
        let mut edge_list = Vec::with_capacity(edges.len());
        for edge in edges {
            let mut members = Vec::with_capacity(edge.len());
            for v in edge.iter() {
                let label = v.as_ref();
                let i = match index.get(label) {
                    Some(&i) => i,
                    None => {
                        validate_label(label)?;
                        let i = labels.len();
                        labels.push(label.to_string());
                        index.insert(label.to_string(), i);
                        i
                    }
                };
                members.push(i);
            }
            edge_list.push(members);
        }
        Self::from_parts(mode, labels, index, edge_list)
    }

    /// Build from pre-resolved member indices (used by constructors and surgery).
    pub(crate) fn from_index_edges(
        mode: Mode,
        labels: Vec<String>,
        edges: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            validate_label(label)?;
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::Validation(format!("duplicate vertex {label:?}")));
            }
        }
        Self::from_parts(mode, labels, index, edges)
    }

    fn from_parts(
        mode: Mode,
        labels: Vec<String>,
        index: BTreeMap<String, usize>,
        raw_edges: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut edges = Vec::with_capacity(raw_edges.len());
        let mut seen = BTreeSet::new();
        for mut members in raw_edges {
            members.sort_unstable();
            if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Validation(format!(
                    "vertex {:?} repeated within an edge",
                    labels[w[0]]
                )));
            }
            if members.last().is_some_and(|&m| m >= n) {
                return Err(Error::UnknownVertex(format!(
                    "index {}",
                    members.last().unwrap()
                )));
            }
            if mode == Mode::Strict {
                if members.len() < 2 {
                    return Err(Error::Validation(format!(
                        "strict edge of size {}",
                        members.len()
                    )));
                }
                if !seen.insert(members.clone()) {
                    return Err(Error::Validation("duplicate edge".to_string()));
                }
            }
            edges.push(Edge::from_sorted(members));
        }
        Ok(Hypergraph {
            labels,
            index,
            edges,
            mode,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<&Edge> {
        self.edges.get(i).ok_or(Error::BadIndex(i))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n()).map(VertexId)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Look a vertex up by label.
    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied().map(VertexId)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("index {}", v.0)))
        }
    }

    /// Number of edges containing `v`, counted with multiplicity.
    pub fn degree(&self, v: VertexId) -> Result<u64> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count() as u64)
    }

    /// Number of edges containing every vertex of `alpha`, with multiplicity.
    /// For a two-element set this is the codegree, the off-diagonal adjacency
    /// entry.
    pub fn set_degree(&self, alpha: &[VertexId]) -> Result<u64> {
        if alpha.is_empty() {
            return Err(Error::EmptyQuery);
        }
        for &v in alpha {
            self.check_vertex(v)?;
        }
        let mut set: Vec<usize> = alpha.iter().map(|v| v.0).collect();
        set.sort_unstable();
        set.dedup();
        Ok(self
            .edges
            .iter()
            .filter(|e| set.iter().all(|&i| e.contains(VertexId(i))))
            .count() as u64)
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n() == 0 {
            return Err(Error::EmptyHypergraph);
        }
        let degrees = self.degree_vector();
        let max = *degrees.iter().max().unwrap();
        let min = *degrees.iter().min().unwrap();
        let sum: u64 = degrees.iter().sum();
        Ok(DegreeStats {
            max,
            min,
            avg: Ratio::new(sum as i64, self.n() as i64),
        })
    }

    /// Degrees indexed by vertex, one incidence scan.
    pub fn degree_vector(&self) -> Vec<u64> {
        let mut degrees = vec![0u64; self.n()];
        for e in &self.edges {
            for &i in e.indices() {
                degrees[i] += 1;
            }
        }
        degrees
    }

    pub fn degree_sum(&self) -> u64 {
        self.edges.iter().map(|e| e.len() as u64).sum()
    }

    /// Largest and smallest edge cardinality `(rank, corank)`.
    pub fn rank_corank(&self) -> Result<(usize, usize)> {
        if self.edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let rank = self.edges.iter().map(Edge::len).max().unwrap();
        let corank = self.edges.iter().map(Edge::len).min().unwrap();
        Ok((rank, corank))
    }

    /// True iff every pair of edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        for (i, e) in self.edges.iter().enumerate() {
            for f in &self.edges[i + 1..] {
                let mut common = 0usize;
                for &v in e.indices() {
                    if f.contains(VertexId(v)) {
                        common += 1;
                        if common > 1 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// True iff all edges have the same cardinality `k`; edgeless hypergraphs
    /// report `None`.
    pub fn uniformity(&self) -> Option<usize> {
        let mut sizes = self.edges.iter().map(Edge::len);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn is_regular(&self) -> bool {
        let degrees = self.degree_vector();
        degrees.windows(2).all(|w| w[0] == w[1])
    }

    /// Connected components as sorted vertex index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n());
        for e in &self.edges {
            let m = e.indices();
            for w in m.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n() {
            groups.entry(uf.find(v)).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// True iff every pair of vertices is joined by a walk. Isolated vertices
    /// disconnect the hypergraph unless it has a single vertex.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff the hypergraph is connected and Berge-acyclic, i.e. its
    /// bipartite incidence graph is a tree. Repeated edges and pairs of edges
    /// sharing two vertices create incidence cycles; empty edges disconnect
    /// the incidence graph.
    pub fn is_hypertree(&self) -> bool {
        let n = self.n();
        let m = self.m();
        if n + m <= 1 {
            return true;
        }
        if self.edges.iter().any(Edge::is_empty) {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        let incidences: usize = self.edges.iter().map(Edge::len).sum();
        incidences == n + m - 1
    }

    /// Shared validation for edge divisions; returns the member indices of
    /// `(left, right)`.
    pub(crate) fn check_division(&self, d: &EdgeDivision) -> Result<(Vec<usize>, Vec<usize>)> {
        let edge = self.edge(d.edge)?;
        if d.left.is_empty() || d.right.is_empty() {
            return Err(Error::MalformedSpec("empty half".to_string()));
        }
        let mut left: Vec<usize> = d.left.iter().map(|v| v.0).collect();
        let mut right: Vec<usize> = d.right.iter().map(|v| v.0).collect();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        if left.len() != d.left.len() || right.len() != d.right.len() {
            return Err(Error::MalformedSpec("repeated vertex in a half".to_string()));
        }
        let mut union: Vec<usize> = left.iter().chain(right.iter()).copied().collect();
        union.sort_unstable();
        if union.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedSpec("halves overlap".to_string()));
        }
        if union != edge.indices() {
            return Err(Error::MalformedSpec(
                "halves do not partition the edge".to_string(),
            ));
        }
        Ok((left, right))
    }

    /// Edge lists after dividing the selected edges; non-divided edges keep
    /// their original order, each division appends its two halves.
    pub(crate) fn divided_edge_indices(
        &self,
        divisions: &[(usize, Vec<usize>, Vec<usize>)],
    ) -> Vec<Vec<usize>> {
        let selected: BTreeSet<usize> = divisions.iter().map(|d| d.0).collect();
        let mut edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !selected.contains(i))
            .map(|(_, e)| e.indices().to_vec())
            .collect();
        for (_, left, right) in divisions {
            edges.push(left.clone());
            edges.push(right.clone());
        }
        edges
    }

    /// Decide whether `(F, F', F'')` is a weak cut: the given divisions must
    /// disconnect the hypergraph while no proper non-empty subset of `F`
    /// disconnects it under any way of dividing its edges. The enumeration is
    /// exhaustive; it aborts once the number of candidate divisions across all
    /// proper subsets exceeds `budget`.
    pub fn is_weak_cut(&self, cut: &WeakCutSpec, budget: u64) -> Result<WeakCutVerdict> {
        if !self.is_connected() {
            return Err(Error::DisconnectedInput);
        }
        if cut.divisions.is_empty() {
            return Err(Error::MalformedSpec("empty cut".to_string()));
        }
        let mut seen = BTreeSet::new();
        let mut validated = Vec::with_capacity(cut.divisions.len());
        for d in &cut.divisions {
            if !seen.insert(d.edge) {
                return Err(Error::DuplicateIndex(d.edge));
            }
            let (left, right) = self.check_division(d)?;
            validated.push((d.edge, left, right));
        }

        if connected_after(self, &self.divided_edge_indices(&validated)) {
            return Ok(WeakCutVerdict::No);
        }

        let t = validated.len();
        if t >= 2 {
            // splits(e) = 2^(|e|-1) - 1 ways to divide edge e; budget is the
            // total number of candidate divisions over all proper subsets.
            let split_counts: Vec<u128> = validated
                .iter()
                .map(|(e, _, _)| {
                    let s = self.edges[*e].len() as u32;
                    (1u128 << (s - 1)) - 1
                })
                .collect();
            let mut total: u128 = 0;
            for mask in 1u32..(1 << t) - 1 {
                let mut product: u128 = 1;
                for (i, c) in split_counts.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        product = product.saturating_mul(*c);
                    }
                }
                total = total.saturating_add(product);
                if total > budget as u128 {
                    return Ok(WeakCutVerdict::BudgetExceeded);
                }
            }
            for mask in 1u32..(1 << t) - 1 {
                let subset: Vec<usize> = (0..t)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| validated[i].0)
                    .collect();
                if self.some_division_disconnects(&subset) {
                    return Ok(WeakCutVerdict::No);
                }
            }
        }
        Ok(WeakCutVerdict::Yes)
    }

    /// True iff some way of dividing exactly the edges in `subset` (each into
    /// two non-empty disjoint halves) disconnects the hypergraph.
    fn some_division_disconnects(&self, subset: &[usize]) -> bool {
        let per_edge: Vec<Vec<(Vec<usize>, Vec<usize>)>> = subset
            .iter()
            .map(|&ei| {
                let members = self.edges[ei].indices();
                let s = members.len();
                // pin members[0] into the left half: 2^(s-1) - 1 splits
                (0..(1u64 << (s - 1)) - 1)
                    .map(|mask| {
                        let mut left = vec![members[0]];
                        let mut right = Vec::new();
                        for (bit, &v) in members[1..].iter().enumerate() {
                            if mask & (1 << bit) != 0 {
                                left.push(v);
                            } else {
                                right.push(v);
                            }
                        }
                        (left, right)
                    })
                    .collect()
            })
            .collect();

        let mut choice = vec![0usize; subset.len()];
        loop {
            let divisions: Vec<(usize, Vec<usize>, Vec<usize>)> = subset
                .iter()
                .enumerate()
                .map(|(i, &ei)| {
                    let (l, r) = &per_edge[i][choice[i]];
                    (ei, l.clone(), r.clone())
                })
                .collect();
            if !connected_after(self, &self.divided_edge_indices(&divisions)) {
                return true;
            }
            // odometer over the per-edge split choices
            let mut pos = 0;
            loop {
                if pos == subset.len() {
                    return false;
                }
                choice[pos] += 1;
                if choice[pos] < per_edge[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }
}

fn connected_after(h: &Hypergraph, edges: &[Vec<usize>]) -> bool {
    if h.n() <= 1 {
        return true;
    }
    let mut uf = UnionFind::new(h.n());
    for e in edges {
        for w in e.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let root = uf.find(0);
    (1..h.n()).all(|v| uf.find(v) == root)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
