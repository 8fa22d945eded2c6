//! Canonical labelling by individualisation and refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell
//! in turn, recurse. Leaves give relabelled adjacency matrices; the largest
//! one is the canonical form. Leaves that reproduce the first or the best
//! matrix yield automorphisms, which prune sibling subtrees (orbits of the
//! pointwise stabiliser of the current path) and let the search jump back to
//! the node where the two paths diverge.

use crate::graph::Graph;

const MAX_STORED_AUTOMORPHISMS: usize = 128;

/// A canonical relabelling of a graph.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// The relabelled graph; isomorphic inputs give identical graphs.
    pub graph: Graph,
    /// `labeling[v]` is the canonical position of input vertex `v`.
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.n();
    if n == 0 {
        return Canonical { graph: g.clone(), labeling: Vec::new() };
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
        path: Vec::new(),
    };
    let root = vec![(0..n).collect::<Vec<_>>()];
    search.dfs(root, 0);
    let best = search.best.expect("search visits at least one leaf");
    Canonical { graph: Graph::from_rows_unchecked(best.cert), labeling: best.lab }
}

/// Shorthand for the canonical graph only.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).graph
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_graph(a) == canonical_graph(b)
}

struct Leaf {
    lab: Vec<usize>,
    cert: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the caller should unwind to the node at
    /// depth `level` and carry on with its next child.
    fn dfs(&mut self, mut cells: Vec<Vec<usize>>, depth: usize) -> Option<usize> {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells);
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, depth) {
                continue;
            }
            explored.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.path.push(v);
            let jump = self.dfs(next, depth + 1);
            self.path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], depth: usize) -> bool {
        let n = self.g.n();
        let prefix = &self.path[..depth];
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().all(|&u| gamma[u] == u) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) -> Option<usize> {
        let n = self.g.n();
        let mut lab = vec![0usize; n];
        for (pos, cell) in cells.iter().enumerate() {
            lab[cell[0]] = pos;
        }
        let cert = self.g.relabel(&lab).rows().to_vec();
        let Some(first) = &self.first else {
            let leaf = Leaf { lab: lab.clone(), cert: cert.clone(), path: self.path.clone() };
            self.best = Some(Leaf { lab, cert, path: self.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let level = common_prefix(&self.path, &first.path);
            let gamma = automorphism(&first.lab, &lab);
            self.store(gamma);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { lab, cert, path: self.path.clone() });
                None
            }
            std::cmp::Ordering::Equal => {
                let level = common_prefix(&self.path, &best.path);
                let gamma = automorphism(&best.lab, &lab);
                self.store(gamma);
                Some(level)
            }
            std::cmp::Ordering::Less => None,
        }
    }

    fn store(&mut self, gamma: Vec<usize>) {
        if self.autos.len() < MAX_STORED_AUTOMORPHISMS {
            self.autos.push(gamma);
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// `v -> lab2^{-1}(lab1(v))`.
fn automorphism(lab1: &[usize], lab2: &[usize]) -> Vec<usize> {
    let mut inv2 = vec![0usize; lab2.len()];
    for (v, &p) in lab2.iter().enumerate() {
        inv2[p] = v;
    }
    lab1.iter().map(|&p| inv2[p]).collect()
}

/// Refines an ordered partition until it is equitable. Cells split by the
/// number of neighbours in each splitter cell, smaller counts first; every
/// decision depends only on the partition, never on vertex names.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let mut counts: Vec<u32> = Vec::new();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mask = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut i = 0;
            while i < cells.len() {
                let cell = &cells[i];
                if cell.len() == 1 {
                    i += 1;
                    continue;
                }
                counts.clear();
                counts.extend(cell.iter().map(|&v| (g.neighbours(v) & mask).count_ones()));
                if counts.iter().all(|&c| c == counts[0]) {
                    i += 1;
                    continue;
                }
                let mut tagged: Vec<(u32, usize)> =
                    counts.iter().copied().zip(cell.iter().copied()).collect();
                tagged.sort_by_key(|&(c, _)| c);
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut last = u32::MAX;
                for (c, v) in tagged {
                    if c != last {
                        groups.push(Vec::new());
                        last = c;
                    }
                    groups.last_mut().expect("pushed above").push(v);
                }
                let added = groups.len();
                cells.splice(i..=i, groups);
                changed = true;
                i += added;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}
