//! Constructors for the graph families that show up in energy problems.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, MAX_VERTICES};

/// A named family with its parameters, for callers that pick the family at
/// run time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    Complete { n: usize },
    Star { leaves: usize },
    CompleteBipartite { a: usize, b: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// Disjoint union of cycles with the given lengths.
    CycleUnion { parts: Vec<usize> },
    Petersen,
    Heawood,
    /// The 5-regular Clebsch graph (folded 5-cube).
    Clebsch,
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            Family::Complete { n } => complete(*n),
            Family::Star { leaves } => star(*leaves),
            Family::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
            Family::Path { n } => path(*n),
            Family::Cycle { n } => cycle(*n),
            Family::CycleUnion { parts } => cycle_union(parts),
            Family::Petersen => Ok(petersen()),
            Family::Heawood => Ok(heawood()),
            Family::Clebsch => Ok(clebsch()),
        }
    }
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    complete_bipartite(1, leaves)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameters(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0);
    Ok(g)
}

/// Disjoint union; vertices of later graphs are shifted past earlier ones.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().map(Graph::n).sum();
    let mut g = Graph::empty(n)?;
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.edges() {
            g.add_edge(u + offset, v + offset);
        }
        offset += part.n();
    }
    Ok(g)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let all = crate::graph::low_mask(n);
    let rows = (0..n).map(|v| !g.neighbours(v) & all & !(1 << v)).collect();
    Graph::from_rows_unchecked(rows)
}

/// Line graph: one vertex per edge of `g` (in [`Graph::edges`] order), two
/// vertices adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    let edges = g.edges();
    if edges.len() > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(edges.len()));
    }
    let mut l = Graph::empty(edges.len())?;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                l.add_edge(i, j);
            }
        }
    }
    Ok(l)
}

/// Disjoint union of cycles, one per part of an integer partition.
pub fn cycle_union(parts: &[usize]) -> Result<Graph, GraphError> {
    if let Some(&bad) = parts.iter().find(|&&p| p < 3) {
        return Err(GraphError::InvalidParameters(format!(
            "cycle part {bad} is shorter than 3"
        )));
    }
    let cycles = parts.iter().map(|&p| cycle(p)).collect::<Result<Vec<_>, _>>()?;
    disjoint_union(&cycles)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("petersen edges are valid")
}

/// Heawood graph as the LCF graph `[5, -5]^7`.
pub fn heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        edges.push((i, (i + 5) % 14));
    }
    Graph::from_edges(14, &edges).expect("heawood edges are valid")
}

/// Clebsch graph: vertices are 4-bit words, adjacent when they differ in
/// one bit or in all four.
pub fn clebsch() -> Graph {
    let mut edges = Vec::new();
    for u in 0..16usize {
        for v in u + 1..16 {
            let d = (u ^ v).count_ones();
            if d == 1 || d == 4 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(16, &edges).expect("clebsch edges are valid")
}
