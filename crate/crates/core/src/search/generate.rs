//! Isomorph-free generation by canonical vertex augmentation.
//!
//! A graph on `k + 1` vertices is accepted from its parent on `k` vertices
//! only if the new vertex could be the canonically chosen deletion vertex:
//! among the vertices of maximum degree, the one with the largest canonical
//! label. Concretely the child is kept when deleting that chosen vertex gives
//! a graph isomorphic to the parent; children of one parent are deduplicated
//! by canonical form. Each isomorphism class is then produced exactly once,
//! from the unique class of its canonical deletion.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_graph};
use crate::graph::Graph;

use super::prune::Pruning;
use super::Control;

/// Parents with fewer than `n - SEQUENTIAL_TAIL` vertices fan out in parallel.
const SEQUENTIAL_TAIL: usize = 3;

/// All canonical `n`-vertex graphs whose every augmentation stage passes
/// `pruning`, in a deterministic order (independent of thread count).
pub(crate) fn generate(n: usize, pruning: &Pruning, control: &Control) -> Vec<Graph> {
    let root = Graph::empty(1).expect("one vertex");
    if !pruning.admits(&root) || !control.node() {
        return Vec::new();
    }
    if n == 1 {
        control.examined();
        return vec![root];
    }
    extend(&root, n, pruning, control)
}

fn extend(parent: &Graph, n: usize, pruning: &Pruning, control: &Control) -> Vec<Graph> {
    if control.stopped() {
        return Vec::new();
    }
    let children = children(parent, pruning, control);
    let last = parent.n() + 1 == n;
    if last {
        return children;
    }
    if parent.n() + SEQUENTIAL_TAIL < n {
        children
            .par_iter()
            .flat_map_iter(|c| extend(c, n, pruning, control))
            .collect()
    } else {
        children
            .iter()
            .flat_map(|c| extend(c, n, pruning, control))
            .collect()
    }
}

/// Canonical children of `parent` (which is itself canonical).
fn children(parent: &Graph, pruning: &Pruning, control: &Control) -> Vec<Graph> {
    let k = parent.n();
    let final_level = k + 1 == pruning.n;
    let degrees = parent.degrees();
    let parent_max = degrees.iter().copied().max().unwrap_or(0);
    // vertices that can still take another neighbour
    let open: Vec<usize> = (0..k).filter(|&v| degrees[v] < pruning.max_degree).collect();
    let lo = parent_max
        .max(pruning.min_degree.saturating_sub(pruning.n - k - 1))
        .min(open.len() + 1);
    let hi = pruning.max_degree.min(open.len());

    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    for size in lo..=hi {
        for subset in Combinations::new(open.len(), size) {
            if control.stopped() {
                return out;
            }
            let nbrs = subset.iter().fold(0u64, |acc, &i| acc | 1 << open[i]);
            let child = parent.with_vertex(nbrs);
            // the new vertex must have maximum degree
            if (0..k).any(|v| child.degree(v) > size) {
                continue;
            }
            if !pruning.admits(&child) {
                continue;
            }
            let canon = canonical_form(&child);
            let w = (0..=k)
                .filter(|&v| child.degree(v) == size)
                .max_by_key(|&v| canon.labeling[v])
                .expect("new vertex has maximum degree");
            if w != k && canonical_graph(&child.without_vertex(w)) != *parent {
                continue;
            }
            if !seen.insert(canon.graph.rows().to_vec()) {
                continue;
            }
            if !control.node() {
                return out;
            }
            if final_level {
                control.examined();
            }
            out.push(canon.graph);
        }
    }
    out
}

/// `size`-subsets of `0..len` in lexicographic order.
struct Combinations {
    idx: Vec<usize>,
    len: usize,
    done: bool,
}

impl Combinations {
    fn new(len: usize, size: usize) -> Self {
        Combinations { idx: (0..size).collect(), len, done: size > len }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let size = self.idx.len();
        let mut i = size;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.len - size + i {
                self.idx[i] += 1;
                for j in i + 1..size {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{Budget, Progress};

    fn count(n: usize) -> usize {
        let progress = Progress::new();
        let control = Control::new(&progress, &Budget::default());
        let pruning = Pruning::new(n, None, None, false, false, None);
        generate(n, &pruning, &control).len()
    }

    #[test]
    fn combinations() {
        assert_eq!(Combinations::new(4, 2).count(), 6);
        assert_eq!(Combinations::new(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn unlabelled_graph_counts() {
        let got: Vec<usize> = (1..=7).map(count).collect();
        assert_eq!(got, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn cubic_counts() {
        // cubic graphs on 8 and 10 vertices (connected or not): 6 and 21
        for (n, want) in [(8, 6), (10, 21)] {
            let progress = Progress::new();
            let control = Control::new(&progress, &Budget::default());
            let pruning = Pruning::new(n, Some(3), Some(3 * n / 2), false, false, None);
            let got = generate(n, &pruning, &control)
                .into_iter()
                .filter(|g| g.degrees().iter().all(|&d| d == 3))
                .count();
            assert_eq!(got, want, "n = {n}");
        }
    }
}
