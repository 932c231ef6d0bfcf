//! Subgraph search, isomorphism, neighborhood types and the forbidden pair
//! `{K4⁻, P̄5}`.

mod canon;

pub use canon::{
    canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm,
};

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::families;
use crate::graph::{Graph, VertexSet};

pub const MAX_PATTERN_VERTICES: usize = 8;

/// Injective map from pattern vertices to host vertices: `mapping[p]` is the
/// image of pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternMatch {
    pub mapping: Vec<usize>,
}

impl PatternMatch {
    /// Checks injectivity and edge preservation (and non-edge preservation
    /// when `induced`).
    pub fn is_valid(&self, host: &Graph, pattern: &Graph, induced: bool) -> bool {
        let m = &self.mapping;
        if m.len() != pattern.n() || m.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let image: VertexSet = m.iter().copied().collect();
        if image.len() != m.len() {
            return false;
        }
        (0..pattern.n()).all(|p| {
            (p + 1..pattern.n()).all(|q| {
                let in_host = host.has_edge(m[p], m[q]);
                if pattern.has_edge(p, q) {
                    in_host
                } else {
                    !induced || !in_host
                }
            })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchKind {
    /// Pattern edges must map to host edges.
    Subgraph,
    /// Additionally, pattern non-edges must map to host non-edges.
    Induced,
}

/// Finds a copy of `pattern` in `host`, or `None`.
///
/// Pattern vertices are matched in a connectivity-first order (most
/// constrained first); host candidates are tried by decreasing degree, so the
/// witness returned is deterministic.
pub fn contains_subgraph(
    host: &Graph,
    pattern: &Graph,
    kind: MatchKind,
) -> Result<Option<PatternMatch>> {
    if pattern.n() > MAX_PATTERN_VERTICES {
        return Err(GraphError::PatternTooLarge(pattern.n()));
    }
    Ok(Matcher::new(host, pattern, kind).find())
}

struct Matcher<'a> {
    host: &'a Graph,
    kind: MatchKind,
    order: Vec<usize>,
    /// For `order[i]`: earlier positions that are pattern neighbors / non-neighbors.
    earlier_adjacent: Vec<Vec<usize>>,
    earlier_nonadjacent: Vec<Vec<usize>>,
    min_degree: Vec<usize>,
    host_order: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &Graph, kind: MatchKind) -> Self {
        let pn = pattern.n();
        let mut order: Vec<usize> = Vec::with_capacity(pn);
        let mut placed = VertexSet::EMPTY;
        while order.len() < pn {
            let next = (0..pn)
                .filter(|&p| !placed.contains(p))
                .max_by_key(|&p| {
                    let links = pattern.nbrs(p).intersection(placed).len();
                    (links, pattern.deg(p), std::cmp::Reverse(p))
                })
                .expect("unplaced vertex remains");
            order.push(next);
            placed.insert(next);
        }
        let position: Vec<usize> = {
            let mut pos = vec![0; pn];
            for (i, &p) in order.iter().enumerate() {
                pos[p] = i;
            }
            pos
        };
        let earlier_adjacent = order
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                pattern
                    .nbrs(p)
                    .iter()
                    .map(|q| position[q])
                    .filter(|&j| j < i)
                    .collect()
            })
            .collect();
        let earlier_nonadjacent = order
            .iter()
            .enumerate()
            .map(|(i, &p)| (0..i).filter(|&j| !pattern.has_edge(p, order[j])).collect())
            .collect();
        let min_degree = order.iter().map(|&p| pattern.deg(p)).collect();
        let mut host_order: Vec<usize> = (0..host.n()).collect();
        host_order.sort_by_key(|&v| (std::cmp::Reverse(host.deg(v)), v));
        Matcher {
            host,
            kind,
            order,
            earlier_adjacent,
            earlier_nonadjacent,
            min_degree,
            host_order,
        }
    }

    fn find(&self) -> Option<PatternMatch> {
        let pn = self.order.len();
        if pn > self.host.n() {
            return None;
        }
        let mut image = vec![0usize; pn];
        if !self.extend(0, &mut image, VertexSet::EMPTY) {
            return None;
        }
        let mut mapping = vec![0; pn];
        for (i, &p) in self.order.iter().enumerate() {
            mapping[p] = image[i];
        }
        Some(PatternMatch { mapping })
    }

    fn extend(&self, i: usize, image: &mut [usize], used: VertexSet) -> bool {
        if i == self.order.len() {
            return true;
        }
        let mut allowed = self.host.vertices().difference(used);
        for &j in &self.earlier_adjacent[i] {
            allowed = allowed.intersection(self.host.nbrs(image[j]));
        }
        if self.kind == MatchKind::Induced {
            for &j in &self.earlier_nonadjacent[i] {
                allowed = allowed.difference(self.host.nbrs(image[j]));
            }
        }
        if allowed.is_empty() {
            return false;
        }
        for &v in &self.host_order {
            if !allowed.contains(v) || self.host.deg(v) < self.min_degree[i] {
                continue;
            }
            image[i] = v;
            if self.extend(i + 1, image, used.with(v)) {
                return true;
            }
        }
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForbiddenPattern {
    K4Minus,
    P5Complement,
}

impl ForbiddenPattern {
    pub fn graph(self) -> Graph {
        match self {
            ForbiddenPattern::K4Minus => families::k4_minus(),
            ForbiddenPattern::P5Complement => families::p5_complement(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenPattern::K4Minus => "K4-",
            ForbiddenPattern::P5Complement => "P5-complement",
        }
    }
}

/// First forbidden pattern (K4⁻ checked before P̄5) contained as a subgraph.
pub fn forbidden_witness(g: &Graph) -> Option<(ForbiddenPattern, PatternMatch)> {
    [ForbiddenPattern::K4Minus, ForbiddenPattern::P5Complement]
        .into_iter()
        .find_map(|p| {
            contains_subgraph(g, &p.graph(), MatchKind::Subgraph)
                .expect("forbidden patterns are small")
                .map(|m| (p, m))
        })
}

/// Neither K4⁻ nor P̄5 occurs as a (not necessarily induced) subgraph.
pub fn forbidden_pair_free(g: &Graph) -> bool {
    forbidden_witness(g).is_none()
}

/// Isomorphism type of the neighborhood of a degree-4 vertex, restricted to
/// the three types that matter for degree-4 vertices in {K4⁻, P̄5}-free graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NeighborhoodClass {
    /// Four isolated vertices.
    FourK1,
    /// One edge plus two isolated vertices.
    TwoK1K2,
    /// A perfect matching.
    TwoK2,
    /// Any other 4-vertex graph, or a vertex whose degree is not 4.
    Other,
}

pub fn classify_neighborhood(g: &Graph, v: usize) -> Result<NeighborhoodClass> {
    let nb = g.neighborhood(v)?;
    if nb.len() != 4 {
        return Ok(NeighborhoodClass::Other);
    }
    let h = g.induced(nb)?;
    Ok(match h.edge_count() {
        0 => NeighborhoodClass::FourK1,
        1 => NeighborhoodClass::TwoK1K2,
        2 if h.is_regular(1) => NeighborhoodClass::TwoK2,
        _ => NeighborhoodClass::Other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn sub(host: &Graph, pattern: &Graph) -> Option<PatternMatch> {
        contains_subgraph(host, pattern, MatchKind::Subgraph).unwrap()
    }

    #[test]
    fn basic_containment() {
        let m = sub(&complete(4).unwrap(), &k4_minus()).unwrap();
        assert!(m.is_valid(&complete(4).unwrap(), &k4_minus(), false));
        assert!(sub(&complete_bipartite(3, 3).unwrap(), &complete(3).unwrap()).is_none());
        assert!(sub(&cycle_square(5).unwrap(), &p5_complement()).is_some());
        assert!(sub(&cycle(4).unwrap(), &complete(5).unwrap()).is_none());
    }

    #[test]
    fn induced_mode() {
        let k4 = complete(4).unwrap();
        assert!(contains_subgraph(&k4, &k4_minus(), MatchKind::Induced)
            .unwrap()
            .is_none());
        let c5 = cycle(5).unwrap();
        let p4 = path(4).unwrap();
        let m = contains_subgraph(&c5, &p4, MatchKind::Induced)
            .unwrap()
            .unwrap();
        assert!(m.is_valid(&c5, &p4, true));
    }

    #[test]
    fn oversized_pattern_rejected() {
        assert_eq!(
            contains_subgraph(
                &complete(10).unwrap(),
                &cycle(9).unwrap(),
                MatchKind::Subgraph
            ),
            Err(GraphError::PatternTooLarge(9))
        );
    }

    #[test]
    fn p5_complement_structure() {
        let g = p5_complement();
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_connected());
        assert!(sub(&g, &cycle(4).unwrap()).is_some());
        assert!(g.has_triangle());
        // the triangle sits on path vertices v1, v3, v5
        assert!(g.has_edge(0, 2) && g.has_edge(2, 4) && g.has_edge(0, 4));
    }

    #[test]
    fn forbidden_pair() {
        assert!(forbidden_pair_free(&complete_bipartite(3, 3).unwrap()));
        assert!(!forbidden_pair_free(&complete(5).unwrap()));
        assert_eq!(
            forbidden_witness(&complete(5).unwrap()).unwrap().0,
            ForbiddenPattern::K4Minus
        );
        assert!(forbidden_pair_free(&circulant_11()));
        // C_7^2 has no K4- ... does it? it has P5-complement either way.
        assert!(!forbidden_pair_free(&cycle_square(7).unwrap()));
    }

    #[test]
    fn neighborhood_classes() {
        for v in 0..11 {
            assert_eq!(
                classify_neighborhood(&circulant_11(), v).unwrap(),
                NeighborhoodClass::FourK1
            );
        }
        for n in 7..=12 {
            let g = cycle_square(n).unwrap();
            assert_eq!(
                classify_neighborhood(&g, 0).unwrap(),
                NeighborhoodClass::Other
            );
        }
        assert_eq!(
            classify_neighborhood(&complete(5).unwrap(), 2).unwrap(),
            NeighborhoodClass::Other
        );
        assert_eq!(
            classify_neighborhood(&cycle(5).unwrap(), 0).unwrap(),
            NeighborhoodClass::Other
        );
        assert!(classify_neighborhood(&cycle(5).unwrap(), 9).is_err());
        // Line graph of K_{3,3}: N(v) is two disjoint edges.
        let l = complete_bipartite(3, 3).unwrap().line_graph().unwrap();
        assert_eq!(
            classify_neighborhood(&l, 0).unwrap(),
            NeighborhoodClass::TwoK2
        );
        // K_1 + (K_2 ∪ 2K_1)
        let h = Graph::new(1)
            .unwrap()
            .join(
                &complete(2)
                    .unwrap()
                    .disjoint_union(&Graph::new(2).unwrap())
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(
            classify_neighborhood(&h, 0).unwrap(),
            NeighborhoodClass::TwoK1K2
        );
    }
}
