//! Shared helpers: seeded random graphs and brute-force oracles over plain
//! adjacency matrices, kept independent of the library's bitset code.
#![allow(dead_code)]

use qcontract::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Matrix = Vec<Vec<bool>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with `p` drawn uniformly from `density`.
pub fn random_graph(rng: &mut impl Rng, n: usize, density: std::ops::Range<f64>) -> Graph {
    let p = if density.is_empty() {
        density.start
    } else {
        rng.gen_range(density)
    };
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn matrix(g: &Graph) -> Matrix {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Whether the vertices with `alive[v]` induce a connected graph (true when
/// fewer than two are alive).
pub fn connected_among(adj: &Matrix, alive: &[bool]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|&v| alive[v]) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if alive[v] && adj[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..n).all(|v| !alive[v] || seen[v])
}

/// Smallest number of vertices whose deletion disconnects the graph, or
/// n − 1 when no deletion does.
pub fn min_separator_size(adj: &Matrix) -> usize {
    let n = adj.len();
    let mut best = n.saturating_sub(1);
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let alive: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 0).collect();
        if !connected_among(adj, &alive) {
            best = size;
        }
    }
    best
}

/// Every permutation of `0..n`, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn isomorphic_brute(a: &Matrix, b: &Matrix, perms: &[Vec<usize>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let edges = |m: &Matrix| m.iter().flatten().filter(|&&x| x).count();
    if edges(a) != edges(b) {
        return false;
    }
    perms
        .iter()
        .any(|p| (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]])))
}

/// Count of permutations fixing the adjacency relation.
pub fn automorphism_count(a: &Matrix, perms: &[Vec<usize>]) -> usize {
    let n = a.len();
    perms
        .iter()
        .filter(|p| (0..n).all(|u| (0..n).all(|v| a[u][v] == a[p[u]][p[v]])))
        .count()
}

/// Depth-first search over injective maps pattern → host.
pub fn embeds_brute(host: &Matrix, pattern: &Matrix, induced: bool) -> bool {
    fn go(
        host: &Matrix,
        pattern: &Matrix,
        induced: bool,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = map.len();
        if i == pattern.len() {
            return true;
        }
        for h in 0..host.len() {
            if used[h] {
                continue;
            }
            let ok = (0..i).all(|j| {
                let want = pattern[i][j];
                let have = host[h][map[j]];
                if induced {
                    want == have
                } else {
                    !want || have
                }
            });
            if ok {
                used[h] = true;
                map.push(h);
                if go(host, pattern, induced, map, used) {
                    return true;
                }
                map.pop();
                used[h] = false;
            }
        }
        false
    }
    pattern.len() <= host.len()
        && go(
            host,
            pattern,
            induced,
            &mut Vec::new(),
            &mut vec![false; host.len()],
        )
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
