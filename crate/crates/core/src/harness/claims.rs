//! Machine-checkable facts attached to report records, and their
//! independent re-validation.
//!
//! Certificate claims (cuts, pattern maps, cycle separators) are checked
//! directly; the rest are recomputed from scratch.

use serde::{Deserialize, Serialize};

use crate::connectivity::{
    brute_force_connectivity, is_quasi_k_connected, vertex_connectivity, BRUTE_FORCE_MAX_N,
};
use crate::connectivity::{is_cyclically_4_connected_cubic, Separation};
use crate::contraction::{contract_edge, is_contraction_critical};
use crate::families::{complete, cycle_square, Family};
use crate::generators::{add_handle, generate_ccc4, HandleSite};
use crate::graph::{Edge, Graph, VertexSet};
use crate::graph6;
use crate::patterns::{canonical_form, contains_subgraph, is_isomorphic, MatchKind, PatternMatch};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum Claim {
    /// `cut` separates `side_a` from `side_b` in `G`.
    Cut {
        cut: VertexSet,
        side_a: VertexSet,
        side_b: VertexSet,
    },
    /// `cut` separates `side_a` from `side_b` in `G/edge` (contracted labels).
    ContractionCut {
        edge: Edge,
        cut: VertexSet,
        side_a: VertexSet,
        side_b: VertexSet,
    },
    Connectivity {
        value: usize,
    },
    /// `κ(G/edge) = value`.
    ContractionConnectivity {
        edge: Edge,
        value: usize,
    },
    QuasiConnected {
        k: usize,
    },
    /// `G/edge` is quasi k-connected.
    QuasiContractible {
        edge: Edge,
        k: usize,
    },
    /// `κ(G/edge) ≥ k`.
    Contractible {
        edge: Edge,
        k: usize,
    },
    /// `δ(G/edge) ≥ 4`.
    ContractionMinDegree {
        edge: Edge,
    },
    ContractionCritical {
        k: usize,
    },
    Degree {
        vertex: usize,
        degree: usize,
    },
    EdgeOutsideTriangles {
        edge: Edge,
    },
    /// `mapping[p]` is the image of vertex `p` of the named pattern.
    ContainsSubgraph {
        pattern: String,
        mapping: Vec<usize>,
    },
    /// Two disjoint cycles (vertex sets listed in cyclic order) and a set of
    /// fewer than four vertices meeting every path between them.
    CyclePair {
        cycle_a: Vec<usize>,
        cycle_b: Vec<usize>,
        separator: VertexSet,
    },
    CyclicallyFourConnected,
    IsomorphicToFamily {
        family: String,
    },
    /// `G` is the line graph of this cyclically 4-connected cubic graph.
    LineGraphOf {
        graph6: String,
    },
    /// `G` is isomorphic to no square of a cycle and to no line graph of a
    /// cyclically 4-connected cubic graph.
    OutsideCriticalFamilies,
    /// `G` is not among the graphs grown from `K_{3,3}` and the cube.
    NotGenerated {
        max_n: usize,
    },
    /// Adding a handle to `G` at these edges gives a graph without the pattern.
    HandleWithoutSubgraph {
        e1: Edge,
        e2: Edge,
        pattern: String,
    },
}

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// κ computed twice (flow and, when small, exhaustive search).
fn checked_connectivity(g: &Graph) -> std::result::Result<usize, String> {
    let flow = vertex_connectivity(g);
    if g.n() <= BRUTE_FORCE_MAX_N {
        let brute = brute_force_connectivity(g).map_err(|e| e.to_string())?;
        ensure(flow == brute, || {
            format!("connectivity disagreement: flow {flow}, exhaustive {brute}")
        })?;
    }
    Ok(flow)
}

fn contracted(g: &Graph, edge: Edge) -> std::result::Result<Graph, String> {
    contract_edge(g, edge)
        .map(|r| r.graph)
        .map_err(|e| e.to_string())
}

fn check_separation(h: &Graph, cut: VertexSet, side_a: VertexSet, side_b: VertexSet) -> Check {
    ensure(
        Separation {
            cut,
            side_a,
            side_b,
        }
        .is_valid_in(h),
        || format!("{cut:?} does not separate {side_a:?} from {side_b:?}"),
    )
}

fn is_cycle(g: &Graph, order: &[usize]) -> bool {
    let set: VertexSet = order.iter().copied().collect();
    order.len() >= 3
        && set.len() == order.len()
        && order.iter().all(|&v| v < g.n())
        && (0..order.len()).all(|i| g.has_edge(order[i], order[(i + 1) % order.len()]))
}

fn in_critical_families(g: &Graph) -> std::result::Result<bool, String> {
    let n = g.n();
    if n >= 5 && is_isomorphic(g, &cycle_square(n).map_err(|e| e.to_string())?) {
        return Ok(true);
    }
    // A line graph of a cubic graph on m vertices has 3m/2 vertices.
    if !(2 * n).is_multiple_of(3) {
        return Ok(false);
    }
    let m = 2 * n / 3;
    if m == 4 {
        return Ok(is_isomorphic(
            g,
            &complete(4)
                .map_err(|e| e.to_string())?
                .line_graph()
                .map_err(|e| e.to_string())?,
        ));
    }
    if m < 6 || !m.is_multiple_of(2) {
        return Ok(false);
    }
    let roots = generate_ccc4(m).map_err(|e| e.to_string())?;
    let target = canonical_form(g);
    Ok(roots.iter().filter(|r| r.n() == m).any(|r| {
        r.line_graph()
            .map(|l| canonical_form(&l) == target)
            .unwrap_or(false)
    }))
}

/// Re-validates `claim` about `g`.
pub fn check_claim(g: &Graph, claim: &Claim) -> Check {
    match claim {
        Claim::Cut {
            cut,
            side_a,
            side_b,
        } => check_separation(g, *cut, *side_a, *side_b),
        Claim::ContractionCut {
            edge,
            cut,
            side_a,
            side_b,
        } => check_separation(&contracted(g, *edge)?, *cut, *side_a, *side_b),
        Claim::Connectivity { value } => {
            let kappa = checked_connectivity(g)?;
            ensure(kappa == *value, || {
                format!("connectivity is {kappa}, not {value}")
            })
        }
        Claim::ContractionConnectivity { edge, value } => {
            let kappa = checked_connectivity(&contracted(g, *edge)?)?;
            ensure(kappa == *value, || {
                format!("G/{edge} is {kappa}-connected, not {value}")
            })
        }
        Claim::QuasiConnected { k } => ensure(*k >= 2 && is_quasi_k_connected(g, *k), || {
            format!("not quasi {k}-connected")
        }),
        Claim::QuasiContractible { edge, k } => {
            let h = contracted(g, *edge)?;
            ensure(*k >= 2 && is_quasi_k_connected(&h, *k), || {
                format!("G/{edge} is not quasi {k}-connected")
            })
        }
        Claim::Contractible { edge, k } => {
            let kappa = checked_connectivity(&contracted(g, *edge)?)?;
            ensure(kappa >= *k, || {
                format!("G/{edge} is only {kappa}-connected")
            })
        }
        Claim::ContractionMinDegree { edge } => {
            let d = contracted(g, *edge)?.min_degree();
            ensure(d >= 4, || format!("G/{edge} has minimum degree {d}"))
        }
        Claim::ContractionCritical { k } => {
            let critical = is_contraction_critical(g, *k, false).map_err(|e| e.to_string())?;
            ensure(critical, || format!("some edge is {k}-contractible"))
        }
        Claim::Degree { vertex, degree } => {
            let d = g.degree(*vertex).map_err(|e| e.to_string())?;
            ensure(d == *degree, || {
                format!("vertex {vertex} has degree {d}, not {degree}")
            })
        }
        Claim::EdgeOutsideTriangles { edge } => {
            ensure(g.has_edge(edge.u(), edge.v()), || {
                format!("{edge} is not an edge")
            })?;
            ensure(!g.edge_in_triangle(*edge), || {
                format!("{edge} lies in a triangle")
            })
        }
        Claim::ContainsSubgraph { pattern, mapping } => {
            let family: Family = pattern
                .parse()
                .map_err(|e: crate::GraphError| e.to_string())?;
            let p = family.build().map_err(|e| e.to_string())?;
            let m = PatternMatch {
                mapping: mapping.clone(),
            };
            ensure(m.is_valid(g, &p, false), || {
                format!("mapping is not a copy of {pattern}")
            })
        }
        Claim::CyclePair {
            cycle_a,
            cycle_b,
            separator,
        } => {
            ensure(g.is_cubic(), || "graph is not cubic".into())?;
            ensure(is_cycle(g, cycle_a) && is_cycle(g, cycle_b), || {
                "listed vertices do not form cycles".into()
            })?;
            let a: VertexSet = cycle_a.iter().copied().collect();
            let b: VertexSet = cycle_b.iter().copied().collect();
            ensure(a.is_disjoint(b), || "cycles intersect".into())?;
            ensure(separator.len() < 4, || {
                "separator has four or more vertices".into()
            })?;
            let live = g.vertices().difference(*separator);
            let reach = a
                .difference(*separator)
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| {
                    acc.union(g.component_of(v, live))
                });
            ensure(reach.is_disjoint(b), || {
                "separator leaves a path between the cycles".into()
            })
        }
        Claim::CyclicallyFourConnected => {
            let ok = is_cyclically_4_connected_cubic(g).map_err(|e| e.to_string())?;
            ensure(ok, || "not cyclically 4-connected".into())
        }
        Claim::IsomorphicToFamily { family } => {
            let f: Family = family
                .parse()
                .map_err(|e: crate::GraphError| e.to_string())?;
            let h = f.build().map_err(|e| e.to_string())?;
            ensure(is_isomorphic(g, &h), || {
                format!("not isomorphic to {family}")
            })
        }
        Claim::LineGraphOf { graph6: text } => {
            let root = graph6::decode(text).map_err(|e| e.to_string())?;
            let cyclic = is_cyclically_4_connected_cubic(&root).map_err(|e| e.to_string())?;
            ensure(cyclic, || "root is not cyclically 4-connected".into())?;
            let l = root.line_graph().map_err(|e| e.to_string())?;
            ensure(is_isomorphic(g, &l), || {
                "not the line graph of the root".into()
            })
        }
        Claim::OutsideCriticalFamilies => ensure(!in_critical_families(g)?, || {
            "graph belongs to a critical family".into()
        }),
        Claim::NotGenerated { max_n } => {
            let form = canonical_form(g);
            let generated = generate_ccc4(*max_n).map_err(|e| e.to_string())?;
            ensure(!generated.iter().any(|h| canonical_form(h) == form), || {
                "graph is generated".into()
            })
        }
        Claim::HandleWithoutSubgraph { e1, e2, pattern } => {
            let site = HandleSite::new(*e1, *e2).map_err(|e| e.to_string())?;
            let h = add_handle(g, site).map_err(|e| e.to_string())?;
            let family: Family = pattern
                .parse()
                .map_err(|e: crate::GraphError| e.to_string())?;
            let p = family.build().map_err(|e| e.to_string())?;
            let found =
                contains_subgraph(&h, &p, MatchKind::Subgraph).map_err(|e| e.to_string())?;
            ensure(found.is_none(), || {
                format!("the handle addition contains {pattern}")
            })
        }
    }
}

/// Separator of fewer than four vertices between two disjoint vertex sets,
/// if one exists (smallest first, then lexicographic).
pub fn small_separator(g: &Graph, a: VertexSet, b: VertexSet) -> Option<VertexSet> {
    (0..4).find_map(|size| {
        crate::graph::Combinations::new(g.n(), size).find(|s| {
            let live = g.vertices().difference(*s);
            let reach = a.difference(*s).iter().fold(VertexSet::EMPTY, |acc, v| {
                acc.union(g.component_of(v, live))
            });
            reach.is_disjoint(b)
        })
    })
}

/// Lists a cycle's vertex set in cyclic order, if the set induces one.
pub fn cycle_order(g: &Graph, set: VertexSet) -> Option<Vec<usize>> {
    let start = set.min()?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .nbrs(cur)
            .intersection(set)
            .iter()
            .find(|&v| v != prev && !(order.len() > 1 && v == start))?;
        if order.contains(&next) {
            return None;
        }
        order.push(next);
        prev = cur;
        cur = next;
        if g.has_edge(cur, start) && order.len() == set.len() {
            return Some(order);
        }
    }
}
