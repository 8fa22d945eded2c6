//! Trees from Prüfer sequences, deduplicated up to isomorphism.

use std::collections::BTreeSet;

use crate::canon::canonical_graph;
use crate::graph::Graph;

use super::Control;

/// Largest order for which all `n^(n-2)` labelled trees are generated.
pub const PRUFER_MAX_N: usize = 9;

/// The labelled tree with the given Prüfer sequence over `0..seq.len() + 2`.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

/// One canonical representative per unlabelled tree on `n` vertices,
/// sorted by canonical adjacency.
pub(crate) fn labelled_tree_classes(n: usize, control: &Control) -> Vec<Graph> {
    if n <= 2 {
        control.node();
        control.examined();
        let g = if n == 1 {
            Graph::empty(1).expect("one vertex")
        } else {
            Graph::from_edges(2, &[(0, 1)]).expect("one edge")
        };
        return vec![g];
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut classes = BTreeSet::new();
    loop {
        if !control.node() {
            break;
        }
        let canon = canonical_graph(&prufer_decode(&seq));
        if classes.insert(canon) {
            control.examined();
        }
        // next sequence in base n
        let mut i = len;
        loop {
            if i == 0 {
                return classes.into_iter().collect();
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
    classes.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{Budget, Progress};

    #[test]
    fn decodes_paths_and_stars() {
        assert_eq!(prufer_decode(&[0, 0, 0]).degree(0), 4);
        let p = prufer_decode(&[1, 2]);
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn unlabelled_tree_counts() {
        let progress = Progress::new();
        let control = Control::new(&progress, &Budget::default());
        let got: Vec<usize> = (1..=8).map(|n| labelled_tree_classes(n, &control).len()).collect();
        assert_eq!(got, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }
}
