//! Simple undirected graphs stored as adjacency bit rows.

use std::fmt;

use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold (one `u64` row per vertex).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid construction: {0}")]
    InvalidParameters(String),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency holds a bit for every neighbour of `v`; the rows
/// are kept symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops, repeats and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Bits at or above `rows.len()`,
    /// diagonal bits and asymmetric entries are rejected.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        for (v, &row) in rows.iter().enumerate() {
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            let mut bits = row;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if u >= n {
                    return Err(GraphError::VertexOutOfRange(v, u, n));
                }
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::InvalidParameters(format!(
                        "adjacency is not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        Graph { n: rows.len(), adj: rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Appends a vertex adjacent to the vertices in `neighbours`.
    pub(crate) fn with_vertex(&self, neighbours: u64) -> Graph {
        let v = self.n;
        let mut adj = self.adj.clone();
        let mut bits = neighbours;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            adj[u] |= 1 << v;
        }
        adj.push(neighbours);
        Graph { n: v + 1, adj }
    }

    /// Removes vertex `w`; later vertices shift down by one.
    pub fn without_vertex(&self, w: usize) -> Graph {
        let below = low_mask(w);
        let adj = (0..self.n)
            .filter(|&v| v != w)
            .map(|v| {
                let row = self.adj[v];
                (row & below) | ((row >> 1) & !below)
            })
            .collect();
        Graph { n: self.n - 1, adj }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let mut bits = self.adj[v];
            let mut row = 0u64;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1 << perm[u];
            }
            adj[perm[v]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Number of triangles, counted combinatorially.
    pub fn triangle_count(&self) -> u64 {
        let mut t = 0u64;
        for u in 0..self.n {
            let higher = self.adj[u] & !low_mask(u + 1);
            let mut bits = higher;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                t += (self.adj[v] & higher & !low_mask(v + 1)).count_ones() as u64;
            }
        }
        t
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = low_mask(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & all == all
    }

    /// Two-colouring by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// Bitmask of the vertices coloured `1` in some proper two-colouring.
    pub fn two_colouring(&self) -> Option<u64> {
        let mut colour = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let mut bits = self.adj[v];
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if colour[u] == u8::MAX {
                        colour[u] = 1 - colour[v];
                        stack.push(u);
                    } else if colour[u] == colour[v] {
                        return None;
                    }
                }
            }
        }
        Some(
            colour
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == 1)
                .fold(0u64, |acc, (v, _)| acc | 1 << v),
        )
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut unseen = low_mask(self.n);
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut bits = frontier;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            unseen &= !comp;
            out.push(comp);
        }
        out
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for (v, row) in self.adj.iter().enumerate() {
            let mut bits = *row;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                a[v * n + u] = 1.0;
            }
        }
        a
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Mask with the low `k` bits set (`k <= 64`).
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(..))
        ));
        assert!(matches!(
            Graph::empty(65),
            Err(GraphError::TooManyVertices(65))
        ));
    }

    #[test]
    fn rows_must_be_symmetric() {
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn vertex_removal_shifts_labels() {
        // path 0-1-2-3, drop 1 -> edge (1,2) only
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let q = p.without_vertex(1);
        assert_eq!(q.edges(), vec![(1, 2)]);
        assert_eq!(q.with_vertex(0b001).m(), 2);
    }

    #[test]
    fn counts_triangles_and_components() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.triangle_count(), 4);
        assert!(!k4.is_bipartite());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), vec![0b0011, 0b1100]);
        assert!(!two.is_connected());
        assert!(two.is_bipartite());
    }
}
