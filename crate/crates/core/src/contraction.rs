//! Edge and subgraph contraction, (quasi) k-contractibility, contraction
//! criticality, and quasi fragments / atoms.

use serde::{Deserialize, Serialize};

use crate::connectivity::{
    classify_cut, quasi_k_obstruction_with, vertex_connectivity, QuasiObstruction,
};
use crate::error::{GraphError, Result};
use crate::graph::{subsets_of, Edge, Graph, VertexSet};

/// `G/e` together with where the merged vertex ended up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionResult {
    pub graph: Graph,
    pub merged_vertex: usize,
    pub origin: Edge,
}

/// Contracts `e = xy` with `x < y`. The merged vertex takes slot `x`;
/// vertices above `y` shift down by one. Parallel edges collapse.
pub fn contract_edge(g: &Graph, e: Edge) -> Result<ContractionResult> {
    g.check_edge(e)?;
    let (x, y) = (e.u(), e.v());
    let n = g.n();
    let relabel = |v: usize| {
        if v == y {
            x
        } else if v > y {
            v - 1
        } else {
            v
        }
    };
    let mut h = Graph::blank(n - 1);
    for f in g.edges() {
        let (a, b) = (relabel(f.u()), relabel(f.v()));
        if a != b {
            h.add_edge(a, b).expect("relabeled endpoints are in range");
        }
    }
    Ok(ContractionResult {
        graph: h,
        merged_vertex: x,
        origin: e,
    })
}

/// Contracts every component of `G[S]` to a single vertex, dropping loops and
/// parallel edges. Each component survives as its least vertex; the other
/// members are removed and the remaining vertices compacted in order.
pub fn contract_subgraph(g: &Graph, s: VertexSet) -> Result<Graph> {
    if s.is_empty() {
        return Err(GraphError::InvalidParameter(
            "cannot contract an empty vertex set".into(),
        ));
    }
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut rep: Vec<usize> = (0..g.n()).collect();
    let mut dropped = VertexSet::EMPTY;
    for comp in g.components_within(s) {
        let head = comp.min().expect("components are nonempty");
        for v in comp.without(head) {
            rep[v] = head;
            dropped.insert(v);
        }
    }
    let mut slot = vec![usize::MAX; g.n()];
    let mut next = 0;
    for v in g.vertices().difference(dropped) {
        slot[v] = next;
        next += 1;
    }
    let mut h = Graph::blank(next);
    for f in g.edges() {
        let (a, b) = (slot[rep[f.u()]], slot[rep[f.v()]]);
        if a != b {
            h.add_edge(a, b).expect("compacted endpoints are in range");
        }
    }
    Ok(h)
}

/// What contracting an edge does to a quasi k-connected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContractionVerdict {
    /// `G/e` is quasi k-connected: the edge is quasi k-contractible.
    QuasiK,
    /// `G/e` is (k−1)-connected but has a nontrivial (k−1)-cut.
    ConnectedNotQuasi,
    /// `G/e` is not (k−1)-connected.
    Below,
}

/// `δ(G/e) ≥ 4`. For quasi 5-connected `G` this already forces `G/e` to be
/// 4-connected.
pub fn degree_pretest(g: &Graph, e: Edge) -> Result<bool> {
    Ok(contract_edge(g, e)?.graph.min_degree() >= 4)
}

pub fn classify_contraction(g: &Graph, e: Edge, k: usize) -> Result<ContractionVerdict> {
    if k < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let h = contract_edge(g, e)?.graph;
    Ok(verdict_of(&h, k, false))
}

/// With `host_is_quasi` set for k = 5, minimum degree 4 in `h` stands in for
/// the 4-connectivity computation.
fn verdict_of(h: &Graph, k: usize, host_is_quasi: bool) -> ContractionVerdict {
    // A lower bound on κ(h) is enough for the quasi test when it reaches k − 1.
    let kappa = if host_is_quasi && k == 5 && h.min_degree() >= 4 {
        debug_assert!(
            vertex_connectivity(h) >= 4,
            "minimum degree 4 after contraction but not 4-connected"
        );
        k - 1
    } else {
        vertex_connectivity(h)
    };
    match quasi_k_obstruction_with(h, k, kappa) {
        None => ContractionVerdict::QuasiK,
        Some(QuasiObstruction::NontrivialCut(_)) => ContractionVerdict::ConnectedNotQuasi,
        Some(QuasiObstruction::LowConnectivity(_)) => ContractionVerdict::Below,
    }
}

/// Whether `κ(G/e) ≥ k`. Requires `G` to be k-connected.
pub fn is_k_contractible(g: &Graph, e: Edge, k: usize) -> Result<bool> {
    g.check_edge(e)?;
    let kappa = vertex_connectivity(g);
    if kappa < k {
        return Err(GraphError::Precondition(format!(
            "graph is {kappa}-connected, not {k}-connected"
        )));
    }
    Ok(vertex_connectivity(&contract_edge(g, e)?.graph) >= k)
}

/// Every quasi k-contractible edge, in lexicographic order. Requires `G` to be
/// quasi k-connected.
pub fn quasi_contractible_edges(g: &Graph, k: usize) -> Result<Vec<Edge>> {
    require_quasi(g, k)?;
    let mut out = Vec::new();
    for e in g.edges() {
        if verdict_of(&contract_edge(g, e)?.graph, k, true) == ContractionVerdict::QuasiK {
            out.push(e);
        }
    }
    Ok(out)
}

/// First quasi k-contractible edge in lexicographic order, if any.
pub fn first_quasi_contractible_edge(g: &Graph, k: usize) -> Result<Option<Edge>> {
    require_quasi(g, k)?;
    for e in g.edges() {
        if verdict_of(&contract_edge(g, e)?.graph, k, true) == ContractionVerdict::QuasiK {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Every k-contractible edge, in lexicographic order. Requires `G` to be
/// k-connected.
pub fn contractible_edges(g: &Graph, k: usize) -> Result<Vec<Edge>> {
    let kappa = vertex_connectivity(g);
    if kappa < k {
        return Err(GraphError::Precondition(format!(
            "graph is {kappa}-connected, not {k}-connected"
        )));
    }
    Ok(g.edges()
        .filter(|&e| vertex_connectivity(&contract_edge(g, e).expect("edge of g").graph) >= k)
        .collect())
}

fn require_quasi(g: &Graph, k: usize) -> Result<()> {
    if k < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if !crate::connectivity::is_quasi_k_connected(g, k) {
        return Err(GraphError::Precondition(format!(
            "graph is not quasi {k}-connected"
        )));
    }
    Ok(())
}

/// No edge is k-contractible (`quasi = false`) or quasi k-contractible
/// (`quasi = true`). Requires the matching connectivity.
pub fn is_contraction_critical(g: &Graph, k: usize, quasi: bool) -> Result<bool> {
    if quasi {
        require_quasi(g, k)?;
        for e in g.edges() {
            if verdict_of(&contract_edge(g, e)?.graph, k, true) == ContractionVerdict::QuasiK {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        let kappa = vertex_connectivity(g);
        if kappa < k {
            return Err(GraphError::Precondition(format!(
                "graph is {kappa}-connected, not {k}-connected"
            )));
        }
        Ok(g.edges()
            .all(|e| vertex_connectivity(&contract_edge(g, e).expect("edge of g").graph) < k))
    }
}

/// A side `F` of a k-cut `T = N(F)` through both ends of an edge, with at
/// least two vertices on each side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiFragment {
    pub fragment: VertexSet,
    pub cut: VertexSet,
    pub with_respect_to: Edge,
}

impl QuasiFragment {
    pub fn is_valid_in(&self, g: &Graph, k: usize) -> bool {
        let rest = g.vertices().difference(self.fragment).difference(self.cut);
        self.fragment.len() >= 2
            && rest.len() >= 2
            && self.cut.len() == k
            && self.fragment.is_disjoint(self.cut)
            && g.set_neighborhood(self.fragment) == self.cut
            && self.with_respect_to.ends().is_subset(self.cut)
            && g.has_edge(self.with_respect_to.u(), self.with_respect_to.v())
    }
}

/// All quasi fragments with respect to `e`, ordered by fragment
/// (lexicographic vertex-set order).
///
/// Candidate cuts `T = T₀ ∪ {x, y}` are enumerated; a fragment is any union of
/// components of `G − T` whose neighborhood is all of `T`, with at least two
/// vertices on either side.
pub fn quasi_fragments(g: &Graph, e: Edge, k: usize) -> Result<Vec<QuasiFragment>> {
    g.check_edge(e)?;
    if k < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let ends = e.ends();
    let pool = g.vertices().difference(ends);
    let mut out = Vec::new();
    for t0 in subsets_of(pool, k - 2) {
        let cut = t0.union(ends);
        let Some(classified) = classify_cut(g, cut) else {
            continue;
        };
        let rest = classified
            .separation
            .side_a
            .union(classified.separation.side_b);
        let comps = g.components_within(rest);
        // Components number at most n, but only cuts with few components are
        // realistic here; cap the union enumeration defensively.
        if comps.len() > 20 {
            return Err(GraphError::InvalidParameter(
                "too many components to enumerate fragments".into(),
            ));
        }
        for mask in 1u32..(1 << comps.len()) - 1 {
            let fragment = comps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(VertexSet::EMPTY, |acc, (_, c)| acc.union(*c));
            if fragment.len() < 2 || rest.len() - fragment.len() < 2 {
                continue;
            }
            if g.set_neighborhood(fragment) != cut {
                continue;
            }
            out.push(QuasiFragment {
                fragment,
                cut,
                with_respect_to: e,
            });
        }
    }
    out.sort_by(|a, b| a.fragment.lex_cmp(b.fragment));
    Ok(out)
}

/// A minimum-cardinality quasi fragment with respect to any of `edges`; ties
/// go to the lexicographically smallest fragment, then the earliest edge.
pub fn quasi_atom(g: &Graph, edges: &[Edge], k: usize) -> Result<Option<QuasiFragment>> {
    let mut best: Option<QuasiFragment> = None;
    for &e in edges {
        for f in quasi_fragments(g, e, k)? {
            let better = match &best {
                None => true,
                Some(b) => f
                    .fragment
                    .len()
                    .cmp(&b.fragment.len())
                    .then_with(|| f.fragment.lex_cmp(b.fragment))
                    .is_lt(),
            };
            if better {
                best = Some(f);
            }
        }
    }
    Ok(best)
}
