//! Vertex connectivity, vertex cuts and their classification, quasi
//! k-connectivity, and cyclic 4-connectivity of cubic graphs.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{Combinations, Edge, Graph, VertexSet};

/// `(F, T, F̄)`: two nonempty sides separated by the cut `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub cut: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl Separation {
    pub fn is_nontrivial(&self) -> bool {
        self.side_a.len() >= 2 && self.side_b.len() >= 2
    }

    /// Checks the partition, the no-crossing-edge and `N(side) ⊆ cut` conditions.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let all = self.cut.union(self.side_a).union(self.side_b);
        all == g.vertices()
            && self.cut.is_disjoint(self.side_a)
            && self.cut.is_disjoint(self.side_b)
            && self.side_a.is_disjoint(self.side_b)
            && !self.side_a.is_empty()
            && !self.side_b.is_empty()
            && g.set_neighborhood(self.side_a).is_subset(self.cut)
            && g.set_neighborhood(self.side_b).is_subset(self.cut)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutClass {
    Trivial,
    Nontrivial,
}

/// A vertex cut with its classification and a witnessing separation. For
/// nontrivial cuts both sides of the witness have at least two vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedCut {
    pub cut: VertexSet,
    pub class: CutClass,
    pub separation: Separation,
}

/// Vertex-capacitated unit flow on a graph with at most 64 vertices.
///
/// Node `2v` is the entry of `v`, `2v + 1` its exit; the super source and
/// sink come last.
struct VertexFlow {
    size: usize,
    cap: Vec<i8>,
}

impl VertexFlow {
    fn idx(&self, a: usize, b: usize) -> usize {
        a * self.size + b
    }

    fn add(&mut self, a: usize, b: usize, c: i8) {
        let i = self.idx(a, b);
        self.cap[i] += c;
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut parent = vec![usize::MAX; self.size];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            let row = &self.cap[a * self.size..(a + 1) * self.size];
            for (b, &cap) in row.iter().enumerate() {
                if parent[b] == usize::MAX && cap > 0 {
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return false;
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            let ab = self.idx(a, b);
            let ba = self.idx(b, a);
            self.cap[ab] -= 1;
            self.cap[ba] += 1;
            b = a;
        }
        true
    }
}

/// Maximum number of pairwise vertex-disjoint `A`–`B` paths in `G[allowed]`,
/// stopping once `limit` is reached. A vertex of `A ∩ B` is a trivial path.
pub fn disjoint_paths(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    allowed: VertexSet,
    limit: usize,
) -> usize {
    let n = g.n();
    let source = 2 * n;
    let sink = 2 * n + 1;
    let size = 2 * n + 2;
    let mut flow = VertexFlow {
        size,
        cap: vec![0; size * size],
    };
    let allowed = allowed.intersection(g.vertices());
    for v in allowed {
        flow.add(2 * v, 2 * v + 1, 1);
        for u in g.nbrs(v).intersection(allowed) {
            flow.add(2 * v + 1, 2 * u, 1);
        }
    }
    for v in a.intersection(allowed) {
        flow.add(source, 2 * v, 1);
    }
    for v in b.intersection(allowed) {
        flow.add(2 * v + 1, sink, 1);
    }
    let mut paths = 0;
    while paths < limit && flow.augment(source, sink) {
        paths += 1;
    }
    paths
}

/// Number of internally disjoint `s`–`t` paths for non-adjacent `s ≠ t`,
/// capped at `limit`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let inner = g.vertices().without(s).without(t);
    disjoint_paths(g, g.nbrs(s), g.nbrs(t), inner, limit)
}

/// κ(G), with κ(K_n) = n − 1.
///
/// Minimum of the local connectivities over non-adjacent pairs `(i, j)`;
/// only sources `i ≤ κ` need to be tried since some vertex among the first
/// `κ + 1` avoids a minimum cut.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    if g.is_complete() {
        return n - 1;
    }
    let mut i = 0;
    while i < n && i <= best {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

pub const BRUTE_FORCE_MAX_N: usize = 12;

/// Minimum `|S|` with `G − S` disconnected, by exhaustive subset search;
/// `n − 1` when no such `S` exists. Limited to 12 vertices.
pub fn brute_force_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(GraphError::OracleTooLarge {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    for size in 0..n.saturating_sub(1) {
        for s in Combinations::new(n, size) {
            if !g.is_connected_within(g.vertices().difference(s)) {
                return Ok(size);
            }
        }
    }
    Ok(n.saturating_sub(1))
}

/// Classifies `T` if `G − T` is disconnected; `None` otherwise.
///
/// `T` is nontrivial when the components of `G − T` can be grouped into two
/// sides with at least two vertices each, which is a subset-sum question over
/// component sizes.
pub fn classify_cut(g: &Graph, cut: VertexSet) -> Option<ClassifiedCut> {
    let rest = g.vertices().difference(cut);
    let comps = g.components_within(rest);
    if comps.len() < 2 {
        return None;
    }
    let total = rest.len();
    // reach[s] = some set of component indices with total size s
    let mut reach: Vec<Option<u64>> = vec![None; total + 1];
    reach[0] = Some(0);
    for (i, c) in comps.iter().enumerate() {
        let size = c.len();
        for s in (size..=total).rev() {
            if reach[s].is_none() {
                if let Some(mask) = reach[s - size] {
                    reach[s] = Some(mask | 1 << i);
                }
            }
        }
    }
    let gather = |mask: u64| -> VertexSet {
        comps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(VertexSet::EMPTY, |acc, (_, c)| acc.union(*c))
    };
    // most balanced grouping wins
    let balanced = (2..=total.saturating_sub(2))
        .filter(|&s| reach[s].is_some())
        .min_by_key(|&s| (s.abs_diff(total - s), s));
    let (class, side_a) = match balanced {
        Some(s) => {
            let a = gather(reach[s].unwrap());
            // Keep the side holding the least vertex first.
            let b = rest.difference(a);
            let a = if a.min() < b.min() { a } else { b };
            (CutClass::Nontrivial, a)
        }
        None => {
            let single = comps
                .iter()
                .find(|c| c.len() == 1)
                .copied()
                .unwrap_or(comps[0]);
            (CutClass::Trivial, single)
        }
    };
    Some(ClassifiedCut {
        cut,
        class,
        separation: Separation {
            cut,
            side_a,
            side_b: rest.difference(side_a),
        },
    })
}

/// Every `k`-cut in lexicographic vertex-set order, classified.
pub fn enumerate_cuts(g: &Graph, k: usize) -> Vec<ClassifiedCut> {
    if k + 2 > g.n() {
        return Vec::new();
    }
    Combinations::new(g.n(), k)
        .filter_map(|t| classify_cut(g, t))
        .collect()
}

/// First nontrivial `k`-cut in lexicographic order.
pub fn first_nontrivial_cut(g: &Graph, k: usize) -> Option<ClassifiedCut> {
    if k + 4 > g.n() {
        return None;
    }
    Combinations::new(g.n(), k)
        .filter_map(|t| classify_cut(g, t))
        .find(|c| c.class == CutClass::Nontrivial)
}

/// `(k−1)`-connected with no nontrivial `(k−1)`-cut.
pub fn is_quasi_k_connected(g: &Graph, k: usize) -> bool {
    assert!(k >= 2, "quasi k-connectivity needs k >= 2");
    quasi_k_obstruction(g, k).is_none()
}

/// Why `g` fails to be quasi k-connected, if it does.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuasiObstruction {
    /// κ(G) < k − 1.
    LowConnectivity(usize),
    NontrivialCut(ClassifiedCut),
}

pub fn quasi_k_obstruction(g: &Graph, k: usize) -> Option<QuasiObstruction> {
    let kappa = vertex_connectivity(g);
    quasi_k_obstruction_with(g, k, kappa)
}

/// As [`quasi_k_obstruction`] with κ(G) already known.
pub(crate) fn quasi_k_obstruction_with(
    g: &Graph,
    k: usize,
    kappa: usize,
) -> Option<QuasiObstruction> {
    if kappa + 1 < k {
        return Some(QuasiObstruction::LowConnectivity(kappa));
    }
    if kappa >= k {
        return None;
    }
    first_nontrivial_cut(g, k - 1).map(QuasiObstruction::NontrivialCut)
}

/// Vertex sets of all induced (chordless) cycles.
pub fn induced_cycles(g: &Graph) -> Vec<VertexSet> {
    fn extend(
        g: &Graph,
        start: usize,
        last: usize,
        path: VertexSet,
        allowed: VertexSet,
        found: &mut HashSet<VertexSet>,
    ) {
        let interior = path.without(start).without(last);
        for v in g.nbrs(last).intersection(allowed).difference(path) {
            if !g.nbrs(v).is_disjoint(interior) {
                continue;
            }
            let next = path.with(v);
            if g.has_edge(v, start) {
                if next.len() >= 3 {
                    found.insert(next);
                }
            } else {
                extend(g, start, v, next, allowed, found);
            }
        }
    }
    let mut found = HashSet::new();
    for s in 0..g.n() {
        let allowed = VertexSet::from_bits(g.vertices().bits() & !(((1u64 << s) - 1) | (1 << s)));
        for u in g.nbrs(s).intersection(allowed) {
            extend(
                g,
                s,
                u,
                VertexSet::singleton(s).with(u),
                allowed,
                &mut found,
            );
        }
    }
    let mut cycles: Vec<VertexSet> = found.into_iter().collect();
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    cycles
}

/// Witness that a cubic graph is not cyclically 4-connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePairWitness {
    pub cycle_a: VertexSet,
    pub cycle_b: VertexSet,
    pub disjoint_paths: usize,
}

/// True iff every two vertex-disjoint cycles are joined by four pairwise
/// vertex-disjoint paths (vacuously true without two disjoint cycles).
///
/// Only induced cycles need checking: a cycle with a chord contains a
/// shorter cycle on a subset of its vertices, and shrinking an endpoint set
/// never increases the number of disjoint paths.
pub fn is_cyclically_4_connected_cubic(g: &Graph) -> Result<bool> {
    Ok(cyclic_4_obstruction(g)?.is_none())
}

pub fn cyclic_4_obstruction(g: &Graph) -> Result<Option<CyclePairWitness>> {
    if !g.is_cubic() {
        return Err(GraphError::NotCubic);
    }
    let cycles = induced_cycles(g);
    for (i, &c) in cycles.iter().enumerate() {
        for &d in &cycles[i + 1..] {
            if !c.is_disjoint(d) {
                continue;
            }
            let paths = disjoint_paths(g, c, d, g.vertices(), 4);
            if paths < 4 {
                return Ok(Some(CyclePairWitness {
                    cycle_a: c,
                    cycle_b: d,
                    disjoint_paths: paths,
                }));
            }
        }
    }
    Ok(None)
}

/// A smallest edge set of size at most `max_size` whose removal leaves two
/// components that each contain a cycle.
pub fn cyclic_edge_cut(g: &Graph, max_size: usize) -> Option<Vec<Edge>> {
    let edges: Vec<Edge> = g.edges().collect();
    for size in 1..=max_size.min(edges.len()) {
        for pick in Combinations::new(edges.len(), size) {
            let mut h = g.clone();
            let chosen: Vec<Edge> = pick.iter().map(|i| edges[i]).collect();
            for e in &chosen {
                h.remove_edge(e.u(), e.v()).expect("edge present");
            }
            let cyclic_parts = h
                .components_within(h.vertices())
                .into_iter()
                .filter(|c| {
                    h.induced(*c)
                        .map(|s| s.edge_count() >= c.len())
                        .unwrap_or(false)
                })
                .count();
            if cyclic_parts >= 2 {
                return Some(chosen);
            }
        }
    }
    None
}

/// Cross-check for [`is_cyclically_4_connected_cubic`]: no cyclic edge cut
/// of size at most 3.
pub fn is_cyclically_4_edge_connected(g: &Graph) -> bool {
    cyclic_edge_cut(g, 3).is_none()
}
