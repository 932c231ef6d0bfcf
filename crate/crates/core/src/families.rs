//! Named constructors for every graph family used by the analyses.

use std::fmt;
use std::str::FromStr;

use crate::error::{GraphError, Result};
use crate::graph::Graph;

/// A graph family with its parameters.
///
/// Textual form (used by the CLI and the C API): `name` or `name:p1:p2`,
/// e.g. `cycle_square:8`, `circulant:11:1,4`, `complete_bipartite:5:5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteMinusEdge(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    CycleSquare(usize),
    CompleteBipartite(usize, usize),
    Circulant(usize, Vec<usize>),
    K33,
    Cube,
    Prism,
    Petersen,
    C4Plus,
    P5Complement,
    K4Minus,
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete(n) => complete(n),
            Family::CompleteMinusEdge(n) => complete_minus_edge(n),
            Family::Empty(n) => Graph::new(n),
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::CycleSquare(n) => cycle_square(n),
            Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
            Family::Circulant(n, ref conn) => circulant(n, conn),
            Family::K33 => complete_bipartite(3, 3),
            Family::Cube => Ok(cube()),
            Family::Prism => Ok(prism()),
            Family::Petersen => Ok(petersen()),
            Family::C4Plus => Ok(c4_plus()),
            Family::P5Complement => Ok(p5_complement()),
            Family::K4Minus => Ok(k4_minus()),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default().trim().to_ascii_lowercase();
        let params: Vec<&str> = parts.collect();
        let bad = || GraphError::InvalidParameter(format!("cannot parse graph family {s:?}"));
        let int = |i: usize| -> Result<usize> {
            params
                .get(i)
                .and_then(|p| p.trim().parse().ok())
                .ok_or_else(bad)
        };
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad())
            }
        };
        let family = match name.as_str() {
            "complete" | "k" => {
                arity(1)?;
                Family::Complete(int(0)?)
            }
            "complete_minus_edge" => {
                arity(1)?;
                Family::CompleteMinusEdge(int(0)?)
            }
            "empty" => {
                arity(1)?;
                Family::Empty(int(0)?)
            }
            "path" => {
                arity(1)?;
                Family::Path(int(0)?)
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(int(0)?)
            }
            "cycle_square" => {
                arity(1)?;
                Family::CycleSquare(int(0)?)
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(int(0)?, int(1)?)
            }
            "circulant" => {
                arity(2)?;
                let conn = params[1]
                    .split(',')
                    .map(|c| c.trim().parse().map_err(|_| bad()))
                    .collect::<Result<Vec<usize>>>()?;
                Family::Circulant(int(0)?, conn)
            }
            other => {
                arity(0)?;
                match other {
                    "k33" => Family::K33,
                    "cube" => Family::Cube,
                    "prism" => Family::Prism,
                    "petersen" => Family::Petersen,
                    "c4_plus" => Family::C4Plus,
                    "p5_complement" => Family::P5Complement,
                    "k4_minus" => Family::K4Minus,
                    _ => return Err(bad()),
                }
            }
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteMinusEdge(n) => write!(f, "complete_minus_edge:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::CycleSquare(n) => write!(f, "cycle_square:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            Family::Circulant(n, c) => {
                let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "circulant:{n}:{}", c.join(","))
            }
            Family::K33 => f.write_str("k33"),
            Family::Cube => f.write_str("cube"),
            Family::Prism => f.write_str("prism"),
            Family::Petersen => f.write_str("petersen"),
            Family::C4Plus => f.write_str("c4_plus"),
            Family::P5Complement => f.write_str("p5_complement"),
            Family::K4Minus => f.write_str("k4_minus"),
        }
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    Ok(Graph::new(n)?.complement())
}

pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(GraphError::InvalidParameter(
            "K_n minus an edge needs n >= 2".into(),
        ));
    }
    let mut g = complete(n)?;
    g.remove_edge(n - 2, n - 1)?;
    Ok(g)
}

/// Path `0-1-..-(n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(GraphError::InvalidParameter("cycle needs n >= 3".into()));
    }
    circulant(n, &[1])
}

/// `C_n^2`: the cycle plus chords between vertices at distance two.
pub fn cycle_square(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(GraphError::InvalidParameter(
            "cycle_square needs n >= 5".into(),
        ));
    }
    circulant(n, &[1, 2])
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::new(a)?.join(&Graph::new(b)?)
}

/// Vertex `i` adjacent to `i ± c mod n` for every `c` in `connection`.
pub fn circulant(n: usize, connection: &[usize]) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for &c in connection {
        if c == 0 || c % n == 0 {
            return Err(GraphError::InvalidParameter(format!(
                "circulant connection {c} is 0 mod {n}"
            )));
        }
        for i in 0..n {
            g.add_edge(i, (i + c) % n)?;
        }
    }
    Ok(g)
}

/// The 3-cube: vertices are 3-bit words, adjacent when they differ in one bit.
pub fn cube() -> Graph {
    Graph::from_edges(
        8,
        (0..8usize)
            .flat_map(|v| [1, 2, 4].into_iter().map(move |b| (v, v ^ b)))
            .filter(|&(u, v)| u < v),
    )
    .expect("cube")
}

/// Triangular prism `C_3 × K_2`: triangles `0,1,2` and `3,4,5`, rungs `i-(i+3)`.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("prism")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i-(i+5)`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("petersen")
}

/// The 4-cycle `0-1-2-3` with a pendant vertex `4` attached to `0`.
///
/// Its line graph is the complement of `P_5`; this is the only graph on five
/// vertices and five edges containing a 4-cycle with that property.
pub fn c4_plus() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]).expect("c4_plus")
}

/// Complement of the path `0-1-2-3-4`.
pub fn p5_complement() -> Graph {
    path(5).expect("path").complement()
}

/// `K_4` minus the edge `2-3`: two triangles sharing the edge `0-1`.
pub fn k4_minus() -> Graph {
    complete_minus_edge(4).expect("k4_minus")
}

/// Circulant on 11 vertices with connection set {1, 4}.
pub fn circulant_11() -> Graph {
    circulant(11, &[1, 4]).expect("circulant")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_square_five_is_k5() {
        assert_eq!(cycle_square(5).unwrap(), complete(5).unwrap());
        assert!(cycle_square(4).is_err());
    }

    #[test]
    fn k4_minus_shape() {
        let g = k4_minus();
        assert_eq!((g.n(), g.edge_count()), (4, 5));
        let triangles = crate::graph::Combinations::new(4, 3)
            .filter(|s| g.induced(*s).unwrap().edge_count() == 3)
            .count();
        assert_eq!(triangles, 2);
    }

    #[test]
    fn circulant_11_is_4_regular_and_triangle_free() {
        let g = circulant_11();
        assert_eq!((g.n(), g.edge_count()), (11, 22));
        assert!(g.is_regular(4));
        assert_eq!(g.min_degree(), 4);
        for v in 0..11 {
            let nb = g.induced(g.neighborhood(v).unwrap()).unwrap();
            assert_eq!(nb.edge_count(), 0, "N({v}) must induce 4K1");
        }
        assert!(g.has_edge(0, 4) && g.has_edge(10, 3));
    }

    #[test]
    fn named_cubic_graphs() {
        for g in [
            complete_bipartite(3, 3).unwrap(),
            cube(),
            prism(),
            petersen(),
        ] {
            assert!(g.is_cubic(), "{g:?}");
        }
        assert_eq!(petersen().edge_count(), 15);
        assert!(!petersen().has_triangle());
    }

    #[test]
    fn cycle_square_is_4_regular() {
        for n in 5..=20 {
            assert!(cycle_square(n).unwrap().is_regular(4), "n = {n}");
        }
    }

    #[test]
    fn induced_in_c8_squared() {
        let g = cycle_square(8).unwrap();
        let h = g.induced([0, 1, 2, 6, 7].into_iter().collect()).unwrap();
        // relabeled 0,1,2,6,7 -> 0,1,2,3,4; adjacency is diff in {1,2} mod 8
        let expected =
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (1, 4)]).unwrap();
        assert_eq!(h, expected);
    }

    #[test]
    fn family_parsing_round_trips() {
        for text in [
            "complete:5",
            "cycle_square:8",
            "circulant:11:1,4",
            "complete_bipartite:5:5",
            "k4_minus",
            "petersen",
        ] {
            let f: Family = text.parse().unwrap();
            assert_eq!(f.to_string(), text);
            f.build().unwrap();
        }
        assert!("cycle".parse::<Family>().is_err());
        assert!("k33:3".parse::<Family>().is_err());
        assert!("nope".parse::<Family>().is_err());
        assert!(Family::Circulant(6, vec![6]).build().is_err());
    }
}
