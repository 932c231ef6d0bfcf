//! Handle addition, the cubic cyclically 4-connected family grown from
//! `K_{3,3}` and the cube, and isomorph-free enumeration of small graphs.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::families::{complete_bipartite, cube};
use crate::graph::{Edge, Graph, VertexSet};
use crate::patterns::{canonical_form, forbidden_pair_free, CanonicalForm};

/// Two nonadjacent edges of a host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HandleSite {
    e1: Edge,
    e2: Edge,
}

impl HandleSite {
    pub fn new(e1: Edge, e2: Edge) -> Result<Self> {
        if e1.shares_endpoint(e2) {
            return Err(GraphError::InvalidParameter(format!(
                "handle edges {e1} and {e2} are adjacent"
            )));
        }
        Ok(HandleSite { e1, e2 })
    }

    pub fn edges(self) -> (Edge, Edge) {
        (self.e1, self.e2)
    }
}

/// Subdivides `e1` with a new vertex `n` and `e2` with `n + 1`, then joins
/// the two new vertices.
pub fn add_handle(g: &Graph, site: HandleSite) -> Result<Graph> {
    g.check_edge(site.e1)?;
    g.check_edge(site.e2)?;
    let n = g.n();
    let mut rows = g.rows().to_vec();
    rows.extend([0, 0]);
    let mut h = Graph::from_rows(rows)?;
    for (e, mid) in [(site.e1, n), (site.e2, n + 1)] {
        h.remove_edge(e.u(), e.v())?;
        h.add_edge(e.u(), mid)?;
        h.add_edge(mid, e.v())?;
    }
    h.add_edge(n, n + 1)?;
    Ok(h)
}

/// Every unordered pair of nonadjacent edges, in lexicographic order.
pub fn handle_sites(g: &Graph) -> Vec<HandleSite> {
    let edges: Vec<Edge> = g.edges().collect();
    let mut out = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if !a.shares_endpoint(b) {
                out.push(HandleSite { e1: a, e2: b });
            }
        }
    }
    out
}

/// Closure of `{K_{3,3}, cube}` under handle addition, up to `max_n`
/// vertices, one canonical representative per isomorphism class, sorted by
/// `(n, canonical form)`.
pub fn generate_ccc4(max_n: usize) -> Result<Vec<Graph>> {
    if max_n < 6 || !max_n.is_multiple_of(2) {
        return Err(GraphError::InvalidParameter(format!(
            "max_n must be even and at least 6, got {max_n}"
        )));
    }
    if max_n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(max_n));
    }
    let mut levels: BTreeMap<usize, BTreeMap<CanonicalForm, Graph>> = BTreeMap::new();
    for seed in [complete_bipartite(3, 3)?, cube()] {
        if seed.n() <= max_n {
            insert_canonical(levels.entry(seed.n()).or_default(), &seed);
        }
    }
    let mut n = 6;
    while n + 2 <= max_n {
        let parents: Vec<Graph> = levels
            .get(&n)
            .map(|l| l.values().cloned().collect())
            .unwrap_or_default();
        let next = levels.entry(n + 2).or_default();
        for g in &parents {
            for site in handle_sites(g) {
                insert_canonical(next, &add_handle(g, site)?);
            }
        }
        n += 2;
    }
    Ok(levels.into_values().flat_map(|l| l.into_values()).collect())
}

fn insert_canonical(level: &mut BTreeMap<CanonicalForm, Graph>, g: &Graph) {
    if let Entry::Vacant(slot) = level.entry(canonical_form(g)) {
        let canon = slot.key().to_graph();
        slot.insert(canon);
    }
}

/// Largest order handled by [`enumerate_small_graphs`].
pub const MAX_BUILTIN_ENUMERATION: usize = 8;

/// One representative of every isomorphism class of graphs on `n` vertices
/// that satisfies `keep`, sorted by canonical form.
pub fn enumerate_small_graphs(n: usize, keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    if n > MAX_BUILTIN_ENUMERATION {
        return Err(GraphError::OracleTooLarge {
            n,
            max: MAX_BUILTIN_ENUMERATION,
        });
    }
    let mut levels = enumerate_hereditary(n, |_| true);
    Ok(levels
        .pop()
        .unwrap_or_default()
        .into_iter()
        .filter(|g| keep(g))
        .collect())
}

/// Isomorph-free vertex-by-vertex generation of a hereditary class.
///
/// Returns one vector per order `0..=max_n`. `viable` must hold for every
/// induced subgraph of a graph it holds for; graphs failing it are not
/// extended. Every class member is an extension of the class member obtained
/// by deleting its last vertex, so the generation is complete.
pub fn enumerate_hereditary(max_n: usize, viable: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::blank(0)]];
    for m in 0..max_n {
        let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for parent in &levels[m] {
            for nb in 0u64..1 << m {
                let child = extend(parent, VertexSet::from_bits(nb));
                if viable(&child) {
                    insert_canonical(&mut seen, &child);
                }
            }
        }
        levels.push(seen.into_values().collect());
    }
    levels
}

/// Appends vertex `n` adjacent to `nb`.
fn extend(g: &Graph, nb: VertexSet) -> Graph {
    let n = g.n();
    let mut rows = g.rows().to_vec();
    rows.push(nb.bits());
    for v in nb {
        rows[v] |= 1 << n;
    }
    Graph::from_rows(rows).expect("extension is simple")
}

/// Every graph with at most `max_n` vertices, minimum degree at least
/// `min_degree`, and neither `K4⁻` nor `P̄5` as a subgraph, sorted by
/// `(n, canonical form)`.
///
/// Generated over the hereditary class of forbidden-pair-free graphs, pruning
/// partial graphs in which some vertex can no longer reach `min_degree`.
pub fn enumerate_forbidden_free(max_n: usize, min_degree: usize) -> Result<Vec<Graph>> {
    if max_n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(max_n));
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::blank(0)]];
    for m in 0..max_n {
        let room = max_n - (m + 1);
        let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for parent in &levels[m] {
            for nb in 0u64..1 << m {
                let nbs = VertexSet::from_bits(nb);
                // the new vertex and its non-neighbors gain nothing more now
                if nbs.len() + room < min_degree {
                    continue;
                }
                let child = extend(parent, nbs);
                if child.min_degree() + room < min_degree || !forbidden_pair_free(&child) {
                    continue;
                }
                insert_canonical(&mut seen, &child);
            }
        }
        levels.push(seen.into_values().collect());
    }
    Ok(levels
        .into_iter()
        .flatten()
        .filter(|g| g.n() > 0 && g.min_degree() >= min_degree)
        .collect())
}

/// Every connected cubic graph on `n` vertices that has a perfect matching,
/// sorted by canonical form. This includes every bridgeless cubic graph.
///
/// Removing a perfect matching from a cubic graph leaves a 2-factor, so each
/// such graph is a union of vertex-disjoint cycles (one per part of a
/// partition of `n` into parts of size at least 3) plus a perfect matching
/// avoiding the cycle edges. All such combinations are built and deduplicated.
pub fn enumerate_matchable_cubic(n: usize) -> Result<Vec<Graph>> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(GraphError::InvalidParameter(format!(
            "cubic graphs need an even order of at least 4, got {n}"
        )));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out: Vec<(CanonicalForm, Graph)> = Vec::new();
    for parts in cycle_partitions(n, 3) {
        let mut factor = Graph::blank(n);
        let mut start = 0;
        for &len in &parts {
            for i in 0..len {
                factor
                    .add_edge(start + i, start + (i + 1) % len)
                    .expect("cycle edges are distinct");
            }
            start += len;
        }
        let mut g = factor.clone();
        complete_matching(&mut g, VertexSet::full(n), &mut |h| {
            if h.is_connected() {
                let form = canonical_form(h);
                if seen.insert(form.clone()) {
                    out.push((form.clone(), form.to_graph()));
                }
            }
        });
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Non-increasing partitions of `n` into parts of size at least `min_part`.
fn cycle_partitions(n: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn go(
        rest: usize,
        max: usize,
        min_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (min_part..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, min_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, min_part, &mut Vec::new(), &mut out);
    out
}

/// Adds every perfect matching of `free` that avoids existing edges, calling
/// `visit` on each completed graph.
fn complete_matching(g: &mut Graph, free: VertexSet, visit: &mut impl FnMut(&Graph)) {
    let Some(u) = free.min() else {
        visit(g);
        return;
    };
    let rest = free.without(u);
    for v in rest.difference(g.nbrs(u)) {
        g.add_edge(u, v).expect("free vertices are in range");
        complete_matching(g, rest.without(v), visit);
        g.remove_edge(u, v).expect("edge was just added");
    }
}
