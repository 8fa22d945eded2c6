//! Brute-force oracle: every labelled graph on `n <= 8` vertices, deduplicated
//! by a permutation-minimum canonical code.
//!
//! Shares nothing with [`crate::canon`] or the augmentation generator, so it
//! can check both. Only labellings whose degrees are non-increasing in vertex
//! order are kept (every class has one); the canonical code of such a labelling
//! is the minimum upper-triangle bit string over all relabellings that permute
//! vertices inside blocks of equal degree.

use std::collections::BTreeSet;

use crate::graph::Graph;

pub const BRUTE_MAX_N: usize = 8;

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

/// One graph per isomorphism class on `n` vertices, ordered by canonical
/// code. Returns `None` for `n > 8`.
pub fn isomorphism_classes(n: usize) -> Option<Vec<Graph>> {
    if n > BRUTE_MAX_N {
        return None;
    }
    if n <= 1 {
        return Some(vec![Graph::empty(n).expect("small")]);
    }
    let idx = pair_index(n);
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut codes = BTreeSet::new();
    let mut degree = vec![0usize; n];
    for mask in 0u32..(1u32 << pairs.len()) {
        degree.iter_mut().for_each(|d| *d = 0);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                degree[i] += 1;
                degree[j] += 1;
            }
        }
        if degree.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        codes.insert(min_code(mask, &degree, &pairs, &idx));
    }
    Some(
        codes
            .into_iter()
            .map(|code| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| code >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_edges(n, &edges).expect("pairs are valid edges")
            })
            .collect(),
    )
}

fn min_code(mask: u32, degree: &[usize], pairs: &[(usize, usize)], idx: &[Vec<usize>]) -> u32 {
    let n = degree.len();
    let mut blocks = Vec::new();
    let mut start = 0;
    for v in 1..=n {
        if v == n || degree[v] != degree[start] {
            blocks.push((start, v));
            start = v;
        }
    }
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u32::MAX;
    permute_blocks(&mut perm, &blocks, 0, &mut |p| {
        let code = edges.iter().fold(0u32, |acc, &(i, j)| acc | 1 << idx[p[i]][p[j]]);
        best = best.min(code);
    });
    best
}

fn permute_blocks(perm: &mut [usize], blocks: &[(usize, usize)], b: usize, visit: &mut dyn FnMut(&[usize])) {
    if b == blocks.len() {
        visit(perm);
        return;
    }
    let (lo, hi) = blocks[b];
    permute_range(perm, lo, hi, lo, &mut |p| {
        let mut copy = p.to_vec();
        permute_blocks(&mut copy, blocks, b + 1, visit)
    });
}

fn permute_range(perm: &mut [usize], lo: usize, hi: usize, at: usize, visit: &mut dyn FnMut(&[usize])) {
    if at + 1 >= hi {
        visit(perm);
        return;
    }
    for i in at..hi {
        perm.swap(at, i);
        permute_range(perm, lo, hi, at + 1, visit);
        perm.swap(at, i);
    }
}

/// Number of unlabelled graphs on `n` vertices by Burnside's lemma: the
/// average over `S_n` of `2^(cycles on vertex pairs)`.
pub fn burnside_class_count(n: usize) -> u128 {
    if n <= 1 {
        return 1;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: u128 = 0;
    let mut count: u128 = 0;
    permute_range(&mut perm, 0, n, 0, &mut |p| {
        let mut seen = vec![vec![false; n]; n];
        let mut cycles = 0u32;
        for j in 1..n {
            for i in 0..j {
                if seen[i][j] {
                    continue;
                }
                cycles += 1;
                let (mut a, mut b) = (i, j);
                while !seen[a.min(b)][a.max(b)] {
                    seen[a.min(b)][a.max(b)] = true;
                    a = p[a];
                    b = p[b];
                }
            }
        }
        total += 1u128 << cycles;
        count += 1;
    });
    total / count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn burnside_counts() {
        let got: Vec<u128> = (1..=8).map(burnside_class_count).collect();
        assert_eq!(got, vec![1, 2, 4, 11, 34, 156, 1044, 12346]);
    }

    #[test]
    fn brute_counts_small() {
        let got: Vec<usize> = (1..=6).map(|n| isomorphism_classes(n).unwrap().len()).collect();
        assert_eq!(got, vec![1, 2, 4, 11, 34, 156]);
        assert!(isomorphism_classes(9).is_none());
    }
}
