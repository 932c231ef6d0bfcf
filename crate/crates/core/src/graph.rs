//! Dense bitset graphs on at most 64 vertices.
//!
//! Vertices are always `0..n`. Operations that delete or merge vertices
//! compact the survivors while preserving their relative order.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GraphError, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of `0..64`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn ends(self) -> VertexSet {
        VertexSet::singleton(self.0).with(self.1)
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        !self.ends().is_disjoint(other.ends())
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.0, e.1)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Simple undirected graph on `0..n`, adjacency stored as one bitmask row
/// per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Self::blank(n))
    }

    pub(crate) fn blank(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        Graph {
            n,
            rows: vec![0; n],
        }
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut g = Graph::new(n)?;
        for e in edges {
            let e = e.into();
            g.add_edge(e.u(), e.v())?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let bad = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            for u in VertexSet::from_bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::InvalidParameter(format!(
                        "adjacency rows not symmetric at {u}-{v}"
                    )));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        Ok(())
    }

    /// False for out-of-range vertices.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub(crate) fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.u())?;
        self.check_vertex(e.v())?;
        if self.has_edge(e.u(), e.v()) {
            Ok(())
        } else {
            Err(GraphError::NotAnEdge(e.u(), e.v()))
        }
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges in lexicographic order of `(min, max)` endpoints.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_bits(self.rows[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| Edge(u, v))
        })
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.nbrs(v))
    }

    /// Unchecked neighbor set.
    #[inline]
    pub(crate) fn nbrs(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    /// `N(S) = ∪ N(x) − S`.
    pub fn set_neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s.iter().filter(|&v| v < self.n) {
            acc |= self.rows[v];
        }
        VertexSet(acc).difference(s)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.deg(v) == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    pub fn is_complete(&self) -> bool {
        self.is_regular(self.n.saturating_sub(1))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Vertex-disjoint juxtaposition; `other` is shifted to `self.n()..`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).bits();
        let right = VertexSet::full(g.n).bits() & !left;
        for v in 0..g.n {
            g.rows[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    /// `m` disjoint copies.
    pub fn copies(&self, m: usize) -> Result<Graph> {
        if m == 0 {
            return Err(GraphError::InvalidParameter("copies needs m >= 1".into()));
        }
        let mut g = self.clone();
        for _ in 1..m {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// `G[S]`, members relabeled `0..|S|` in increasing order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        if let Some(v) = s.max() {
            self.check_vertex(v)?;
        }
        let members = s.to_vec();
        let rows = members
            .iter()
            .map(|&v| pack_bits(self.rows[v], &members))
            .collect();
        Ok(Graph {
            n: members.len(),
            rows,
        })
    }

    /// `G − S`.
    pub fn remove_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.induced(self.vertices().difference(s))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameter(format!(
                "permutation of length {} for graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if image != self.vertices() {
            return Err(GraphError::InvalidParameter("not a permutation".into()));
        }
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[perm[v]] = self.nbrs(v).iter().fold(0, |acc, u| acc | 1 << perm[u]);
        }
        Ok(Graph { n: self.n, rows })
    }

    /// Line graph with vertices indexed by [`Graph::edges`] order.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges: Vec<Edge> = self.edges().collect();
        let mut l = Graph::new(edges.len())?;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if edges[i].shares_endpoint(edges[j]) {
                    l.rows[i] |= 1 << j;
                    l.rows[j] |= 1 << i;
                }
            }
        }
        Ok(l)
    }

    /// Component of `start` inside the vertex mask `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start).bits();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.rows[v];
            }
            frontier = next & within.bits() & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Components of `G[within]`, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_of(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    /// True when `G[within]` is connected (the empty set counts as connected).
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.min() {
            None => true,
            Some(v) => self.component_of(v, within) == within,
        }
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .any(|e| self.rows[e.u()] & self.rows[e.v()] != 0)
    }

    pub fn edge_in_triangle(&self, e: Edge) -> bool {
        self.rows[e.u()] & self.rows[e.v()] != 0
    }
}

/// Compresses the bits of `row` at positions `members` into `0..members.len()`.
fn pack_bits(row: u64, members: &[usize]) -> u64 {
    members
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &m)| acc | (row >> m & 1) << i)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

/// Lexicographic `k`-subsets of `0..n` as vertex sets.
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out: VertexSet = self.idx.iter().copied().collect();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// `k`-subsets of the members of `pool`, lexicographic on member lists.
pub fn subsets_of(pool: VertexSet, k: usize) -> impl Iterator<Item = VertexSet> {
    let members = pool.to_vec();
    Combinations::new(members.len(), k).map(move |c| c.iter().map(|i| members[i]).collect())
}
