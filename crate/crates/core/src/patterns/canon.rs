//! Canonical labeling by equitable partition refinement and an
//! individualization search pruned with discovered automorphisms.
//!
//! Refinement and target-cell choice depend only on cell order and neighbor
//! counts, never on vertex names, so the set of leaves is permuted (not
//! changed) by relabeling the input. The canonical graph is the leaf whose
//! relabeled adjacency rows are lexicographically greatest.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::graph6;

/// graph6 text of the canonically relabeled graph. Equal iff isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

const MAX_STORED_AUTOMORPHISMS: usize = 128;

/// `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let best = Search::run(g);
    let mut lab = vec![0; g.n()];
    for (i, &v) in best.order.iter().enumerate() {
        lab[v] = i;
    }
    lab
}

pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_rows(Search::run(g).rows).expect("relabeling preserves validity")
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6::encode(&canonical_graph(g)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_graph(g) == canonical_graph(h)
}

/// Refines `cells` (an ordered partition given as bitmasks) to the coarsest
/// equitable partition finer than it.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut buckets = [0u64; 65];
    let mut changed = true;
    while changed {
        changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut next: Option<Vec<u64>> = None;
            for (ci, &cell) in cells.iter().enumerate() {
                if cell & (cell - 1) == 0 {
                    if let Some(out) = next.as_mut() {
                        out.push(cell);
                    }
                    continue;
                }
                let (mut lo, mut hi) = (64usize, 0usize);
                for v in VertexSet::from_bits(cell) {
                    let c = (rows[v] & splitter).count_ones() as usize;
                    buckets[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    if let Some(out) = next.as_mut() {
                        out.push(cell);
                    }
                    continue;
                }
                let out = next.get_or_insert_with(|| {
                    let mut v = Vec::with_capacity(cells.len() + 4);
                    v.extend_from_slice(&cells[..ci]);
                    v
                });
                for b in &mut buckets[lo..=hi] {
                    if *b != 0 {
                        out.push(*b);
                        *b = 0;
                    }
                }
            }
            if let Some(out) = next {
                *cells = out;
                changed = true;
            }
            w += 1;
        }
    }
}

struct Leaf {
    rows: Vec<u64>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph) -> Leaf {
        let mut s = Search {
            g,
            best: None,
            automorphisms: Vec::new(),
        };
        let mut cells = if g.n() == 0 {
            Vec::new()
        } else {
            vec![g.vertices().bits()]
        };
        refine(g.rows(), &mut cells);
        s.descend(cells, &mut Vec::new());
        s.best.expect("search reaches at least one leaf")
    }

    /// Returns `Some(d)` to abandon everything below depth `d`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.g.n();
        if cells.len() == n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let ti = cells
            .iter()
            .position(|c| c & (c - 1) != 0)
            .expect("non-discrete partition has a nontrivial cell");
        let target = cells[ti];
        let mut tried = VertexSet::EMPTY;
        for v in VertexSet::from_bits(target) {
            if !tried.is_empty() && self.equivalent_to_tried(v, tried, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.g.rows(), &mut child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            tried.insert(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut lab = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            lab[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| {
                self.g
                    .nbrs(v)
                    .iter()
                    .fold(0u64, |acc, u| acc | 1u64 << lab[u])
            })
            .collect();
        match &self.best {
            None => {
                self.best = Some(Leaf {
                    rows,
                    order,
                    path: path.to_vec(),
                });
                None
            }
            Some(best) => match rows.cmp(&best.rows) {
                std::cmp::Ordering::Greater => {
                    self.best = Some(Leaf {
                        rows,
                        order,
                        path: path.to_vec(),
                    });
                    None
                }
                std::cmp::Ordering::Less => None,
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0usize; order.len()];
                    for (i, &v) in best.order.iter().enumerate() {
                        gamma[v] = order[i];
                    }
                    let common = best
                        .path
                        .iter()
                        .zip(path)
                        .take_while(|(a, b)| a == b)
                        .count();
                    if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                        self.automorphisms.push(gamma);
                    }
                    Some(common)
                }
            },
        }
    }

    /// Whether `v` shares an orbit with a tried vertex under the group
    /// generated by known automorphisms fixing `path` pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: VertexSet, path: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().any(|&x| gamma[x] != x) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|t| find(&mut parent, t) == root)
    }
}
