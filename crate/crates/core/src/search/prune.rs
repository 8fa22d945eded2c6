//! Hereditary pruning for vertex augmentation and the final class filter.
//!
//! Every test in [`Pruning::admits`] holds for all induced subgraphs of a
//! graph in the target class, so discarding a partial graph that fails one
//! never loses a class member.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::spectrum::{eigenvalues, Spectrum};

use super::SearchSpec;

/// A moment identity that a target spectrum fails, with the slack allowed
/// by the per-eigenvalue tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "moment")]
pub enum MomentViolation {
    /// `sum x` must vanish.
    First { sum: f64, slack: f64 },
    /// `sum x^2` must be `2m` for a non-negative integer `m` (the given one
    /// if any).
    Second { sum: f64, expected: Option<f64>, slack: f64 },
    /// `sum x^3 / 6` must be a non-negative integer (the triangle count).
    Third { triangles: f64, slack: f64 },
}

fn slacks(values: &[f64], tol: f64) -> (f64, f64, f64) {
    let n = values.len() as f64;
    let s1 = n * tol;
    let s2: f64 = values.iter().map(|x| 2.0 * x.abs() * tol + tol * tol).sum();
    let s3: f64 = values
        .iter()
        .map(|x| 3.0 * x * x * tol + 3.0 * x.abs() * tol * tol + tol.powi(3))
        .sum();
    (s1 + 1e-9, s2 + 1e-9, s3 / 6.0 + 1e-9)
}

pub(crate) fn moment_violations(target: &Spectrum, m: Option<usize>, tol: f64) -> Vec<MomentViolation> {
    let values = target.values();
    let (s1, s2, s3) = slacks(values, tol);
    let mut out = Vec::new();
    let sum = target.moment(1);
    if sum.abs() > s1 {
        out.push(MomentViolation::First { sum, slack: s1 });
    }
    let sq = target.moment(2);
    let ok2 = match m {
        Some(m) => (sq - 2.0 * m as f64).abs() <= s2,
        None => {
            let even = 2.0 * (sq / 2.0).round();
            even >= 0.0 && (sq - even).abs() <= s2
        }
    };
    if !ok2 {
        out.push(MomentViolation::Second { sum: sq, expected: m.map(|m| 2.0 * m as f64), slack: s2 });
    }
    let t = target.moment(3) / 6.0;
    let r = t.round();
    if (t - r).abs() > s3 || r < 0.0 {
        out.push(MomentViolation::Third { triangles: t, slack: s3 });
    }
    out
}

/// Quantities derived from a target spectrum that bound every induced
/// subgraph of a graph realising it.
#[derive(Debug, Clone)]
pub(crate) struct TargetBounds {
    pub spectrum: Spectrum,
    pub tol: f64,
    pub m: usize,
    pub max_triangles: u64,
    pub max_degree: usize,
}

impl TargetBounds {
    pub fn new(target: &Spectrum, tol: f64) -> Self {
        let (_, _, s3) = slacks(target.values(), tol);
        let m = (target.moment(2) / 2.0).round().max(0.0) as usize;
        let max_triangles = (target.moment(3) / 6.0 + s3).floor().max(0.0) as u64;
        // the largest eigenvalue is at least sqrt(max degree)
        let top = target.index().unwrap_or(0.0) + tol;
        let max_degree = (top * top + 1e-9).floor().max(0.0) as usize;
        TargetBounds { spectrum: target.clone(), tol, m, max_triangles, max_degree }
    }

    /// Cauchy interlacing: the k-vertex induced subgraph has eigenvalues
    /// `lambda_{i+n-k} <= mu_i <= lambda_i`.
    fn interlaces(&self, g: &Graph) -> bool {
        let lambda = self.spectrum.values();
        let n = lambda.len();
        let k = g.n();
        let mu = eigenvalues(g);
        let slack = self.tol + 1e-9;
        mu.values()
            .iter()
            .enumerate()
            .all(|(i, &x)| x <= lambda[i] + slack && x >= lambda[i + n - k] - slack)
    }
}

pub(crate) struct Pruning<'a> {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub m: Option<usize>,
    pub bipartite: bool,
    pub acyclic: bool,
    pub target: Option<&'a TargetBounds>,
}

impl<'a> Pruning<'a> {
    pub fn new(
        n: usize,
        regular: Option<usize>,
        m: Option<usize>,
        bipartite: bool,
        tree: bool,
        target: Option<&'a TargetBounds>,
    ) -> Self {
        let mut max_degree = regular.unwrap_or(n.saturating_sub(1));
        if let Some(t) = target {
            max_degree = max_degree.min(t.max_degree);
        }
        let m = if tree { Some(n - 1) } else { m.or(target.map(|t| t.m)) };
        Pruning {
            n,
            max_degree,
            min_degree: regular.unwrap_or(0),
            m,
            bipartite: bipartite || tree,
            acyclic: tree,
            target,
        }
    }

    pub fn admits(&self, g: &Graph) -> bool {
        let k = g.n();
        let removed = self.n - k;
        let min_deg = self.min_degree.saturating_sub(removed);
        if (0..k).any(|v| {
            let d = g.degree(v);
            d > self.max_degree || d < min_deg
        }) {
            return false;
        }
        let mk = g.m();
        if let Some(m) = self.m {
            let pairs = |x: usize| x * x.saturating_sub(1) / 2;
            let capacity = (pairs(self.n) - pairs(k)).min(removed * self.max_degree);
            if mk > m || mk + capacity < m {
                return false;
            }
        }
        if self.acyclic && mk + g.components().len() != k {
            return false;
        }
        if self.bipartite && !g.is_bipartite() {
            return false;
        }
        if let Some(t) = self.target {
            if g.triangle_count() > t.max_triangles {
                return false;
            }
            if k >= 2 && !t.interlaces(g) {
                return false;
            }
        }
        true
    }
}

/// Exact membership test for complete graphs of the class.
pub(crate) struct ClassFilter<'a> {
    spec: &'a SearchSpec,
    target: Option<&'a TargetBounds>,
}

impl<'a> ClassFilter<'a> {
    pub fn new(spec: &'a SearchSpec, target: Option<&'a TargetBounds>) -> Self {
        ClassFilter { spec, target }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let c = &self.spec.constraints;
        let n = self.spec.n;
        if g.n() != n || self.spec.m.is_some_and(|m| g.m() != m) {
            return false;
        }
        let regular_deg = |r: usize| g.degrees().iter().all(|&d| d == r);
        if c.regular.is_some_and(|r| !regular_deg(r)) {
            return false;
        }
        if c.complement_of_cycles && !regular_deg(n - 3) {
            return false;
        }
        if c.tree && (g.m() + 1 != n || !g.is_connected()) {
            return false;
        }
        if c.connected && !g.is_connected() {
            return false;
        }
        if c.bipartite && !g.is_bipartite() {
            return false;
        }
        if let Some(t) = self.target {
            if !eigenvalues(g).matches(&t.spectrum, t.tol) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn moment_checks() {
        let k3 = Spectrum::new(vec![2.0, -1.0, -1.0]);
        assert!(moment_violations(&k3, Some(3), 1e-6).is_empty());
        assert_eq!(moment_violations(&k3, Some(2), 1e-6).len(), 1);
        let printed = Spectrum::from_groups(&[(6.0, 1), (1.4415, 3), (-1.7208, 6)]);
        let v = moment_violations(&printed, Some(30), 1e-4);
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0], MomentViolation::Third { .. }));
        // negative "triangle count"
        let neg = Spectrum::new(vec![-2.0, 1.0, 1.0]);
        assert!(moment_violations(&neg, Some(3), 1e-6)
            .iter()
            .any(|v| matches!(v, MomentViolation::Third { .. })));
    }

    #[test]
    fn target_bounds() {
        let r2 = 2f64.sqrt();
        let heawood = Spectrum::from_groups(&[(3.0, 1), (r2, 6), (-r2, 6), (-3.0, 1)]);
        let b = TargetBounds::new(&heawood, 1e-6);
        assert_eq!((b.m, b.max_triangles, b.max_degree), (21, 0, 9));
        let g = construct::heawood();
        for v in 0..14 {
            assert!(b.interlaces(&g.without_vertex(v)));
        }
        assert!(!b.interlaces(&construct::complete(5).unwrap()));
    }

    #[test]
    fn pruning_is_hereditary_for_members() {
        let g = construct::heawood();
        let r2 = 2f64.sqrt();
        let t = TargetBounds::new(&Spectrum::from_groups(&[(3.0, 1), (r2, 6), (-r2, 6), (-3.0, 1)]), 1e-6);
        let p = Pruning::new(14, Some(3), Some(21), true, false, Some(&t));
        let mut h = g.clone();
        while h.n() > 1 {
            assert!(p.admits(&h));
            h = h.without_vertex(h.n() - 1);
        }
    }
}
