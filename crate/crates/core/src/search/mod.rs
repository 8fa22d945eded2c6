//! Exhaustive searches over constrained graph classes: extremal energy and
//! realisation of a target spectrum.
//!
//! Classes are enumerated one graph per isomorphism class. The general path
//! is canonical vertex augmentation ([`generate`]); trees come from Prüfer
//! sequences ([`trees`]) and complements of disjoint cycle unions from integer
//! partitions ([`partitions`]). A brute-force enumerator over labelled graphs
//! ([`brute`]) serves as an independent oracle for small orders.

pub mod brute;
pub mod generate;
pub mod partitions;
pub mod trees;

mod prune;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct;
use crate::graph::Graph;
use crate::graph6;
use crate::spectrum::{self, complement_spectrum_regular, eigenvalues, Spectrum};

pub use partitions::cycle_partition_spectrum;
pub use prune::MomentViolation;

use prune::{ClassFilter, Pruning, TargetBounds};

/// Default per-eigenvalue tolerance when matching a target spectrum.
pub const DEFAULT_MATCH_TOL: f64 = 1e-6;

/// Energies within this distance are co-optimal.
pub const ENERGY_TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("invalid search: {0}")]
    InvalidSpec(String),
    #[error("the class is empty ({graphs_examined} graphs examined)")]
    EmptyClass { graphs_examined: u64 },
    #[error("objective does not match the requested operation")]
    WrongObjective,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Constraints {
    #[serde(default)]
    pub connected: bool,
    #[serde(default)]
    pub bipartite: bool,
    #[serde(default)]
    pub regular: Option<usize>,
    /// The complement is a disjoint union of cycles (degree `n - 3`).
    #[serde(default)]
    pub complement_of_cycles: bool,
    #[serde(default)]
    pub tree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SearchObjective {
    MaxEnergy,
    MinEnergy,
    Realize { target: Spectrum, tol: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    /// Cap on canonical graphs generated, counting partial graphs.
    pub max_graphs: u64,
    pub max_seconds: f64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_graphs: 10_000_000, max_seconds: 300.0 }
    }
}

/// A graph class plus what to look for in it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub n: usize,
    pub m: Option<usize>,
    pub constraints: Constraints,
    pub objective: SearchObjective,
    pub budget: Budget,
}

impl SearchSpec {
    pub fn new(n: usize) -> Self {
        SearchSpec {
            n,
            m: None,
            constraints: Constraints::default(),
            objective: SearchObjective::MaxEnergy,
            budget: Budget::default(),
        }
    }

    pub fn edges(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn connected(mut self) -> Self {
        self.constraints.connected = true;
        self
    }

    pub fn bipartite(mut self) -> Self {
        self.constraints.bipartite = true;
        self
    }

    pub fn regular(mut self, degree: usize) -> Self {
        self.constraints.regular = Some(degree);
        self
    }

    pub fn tree(mut self) -> Self {
        self.constraints.tree = true;
        self
    }

    pub fn complement_of_cycles(mut self) -> Self {
        self.constraints.complement_of_cycles = true;
        self
    }

    pub fn objective(mut self, objective: SearchObjective) -> Self {
        self.objective = objective;
        self
    }

    pub fn realize(self, target: Spectrum, tol: f64) -> Self {
        self.objective(SearchObjective::Realize { target, tol })
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |msg: String| Err(SearchError::InvalidSpec(msg));
        let n = self.n;
        if n == 0 {
            return bad("n must be at least 1".into());
        }
        if n > crate::graph::MAX_VERTICES {
            return bad(format!("n = {n} exceeds {}", crate::graph::MAX_VERTICES));
        }
        if let Some(m) = self.m {
            if m > n * (n - 1) / 2 {
                return bad(format!("m = {m} exceeds C({n}, 2)"));
            }
        }
        let c = &self.constraints;
        if let Some(r) = c.regular {
            if r >= n || (n * r) % 2 == 1 {
                return bad(format!("no {r}-regular graph on {n} vertices"));
            }
            if let Some(m) = self.m {
                if m != n * r / 2 {
                    return bad(format!("regular({r}) needs m = {}, got {m}", n * r / 2));
                }
            }
        }
        if c.tree {
            if let Some(m) = self.m {
                if m != n - 1 {
                    return bad(format!("a tree on {n} vertices has {} edges, got {m}", n - 1));
                }
            }
        }
        if c.complement_of_cycles {
            if n < 3 {
                return bad("complement of cycles needs n >= 3".into());
            }
            if c.regular.is_some_and(|r| r != n - 3) {
                return bad(format!("complement of cycles is {}-regular", n - 3));
            }
        }
        if self.budget.max_graphs == 0 || !(self.budget.max_seconds > 0.0) {
            return bad("budgets must be positive".into());
        }
        if let SearchObjective::Realize { target, tol } = &self.objective {
            if target.len() != n {
                return bad(format!("target has {} values, n = {n}", target.len()));
            }
            if !(*tol > 0.0) {
                return bad("tolerance must be positive".into());
            }
        }
        Ok(())
    }

    fn target(&self) -> Option<(&Spectrum, f64)> {
        match &self.objective {
            SearchObjective::Realize { target, tol } => Some((target, *tol)),
            _ => None,
        }
    }
}

/// Shared progress counters and cancellation for a running search.
#[derive(Debug, Default)]
pub struct Progress {
    nodes: AtomicU64,
    graphs: AtomicU64,
    cancelled: AtomicBool,
}

impl Progress {
    pub fn new() -> Self {
        Self::default()
    }

    /// Canonical graphs generated so far, partial ones included.
    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    /// Complete graphs of the class examined so far.
    pub fn graphs_examined(&self) -> u64 {
        self.graphs.load(Ordering::Relaxed)
    }

    pub fn cancel(&self) {
        self.cancelled.store(true, Ordering::Relaxed);
    }
}

/// Budget bookkeeping for one run.
pub(crate) struct Control<'a> {
    progress: &'a Progress,
    start_nodes: u64,
    max_nodes: u64,
    deadline: Instant,
    stopped: AtomicBool,
}

impl<'a> Control<'a> {
    fn new(progress: &'a Progress, budget: &Budget) -> Self {
        Control {
            progress,
            start_nodes: progress.nodes(),
            max_nodes: budget.max_graphs,
            deadline: Instant::now() + Duration::from_secs_f64(budget.max_seconds.min(1e9)),
            stopped: AtomicBool::new(false),
        }
    }

    /// Records one generated graph; false once any budget is spent.
    pub(crate) fn node(&self) -> bool {
        if self.stopped.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.progress.nodes.fetch_add(1, Ordering::Relaxed) + 1 - self.start_nodes;
        let over = used > self.max_nodes
            || self.progress.cancelled.load(Ordering::Relaxed)
            || (used % 1024 == 0 && Instant::now() > self.deadline);
        if over {
            self.stopped.store(true, Ordering::Relaxed);
        }
        !over
    }

    pub(crate) fn examined(&self) {
        self.progress.graphs.fetch_add(1, Ordering::Relaxed);
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stopped.load(Ordering::Relaxed)
    }
}

/// A class member with its spectral data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Found {
    pub graph6: String,
    pub spectrum: Spectrum,
    pub energy: f64,
    #[serde(skip)]
    pub graph: Option<Graph>,
}

impl Found {
    pub fn new(g: &Graph) -> Self {
        let spectrum = eigenvalues(g);
        Found {
            graph6: graph6::encode(g).map(|c| c.to_string()).unwrap_or_default(),
            energy: spectrum.energy(),
            spectrum,
            graph: Some(g.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub best: Vec<Found>,
    pub graphs_examined: u64,
    /// True iff the whole class was enumerated.
    pub exhausted: bool,
    /// Moment identities the target violates; non-empty means the search
    /// was skipped and non-existence is certified.
    #[serde(default)]
    pub fast_fail: Vec<MomentViolation>,
}

impl SearchResult {
    /// Empty result backed by a complete enumeration or a moment violation.
    pub fn certifies_nonexistence(&self) -> bool {
        self.best.is_empty() && (self.exhausted || !self.fast_fail.is_empty())
    }
}

/// The members of a class, one per isomorphism class.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub graphs: Vec<Graph>,
    pub graphs_examined: u64,
    pub exhausted: bool,
}

pub fn enumerate(spec: &SearchSpec) -> Result<Enumeration, SearchError> {
    enumerate_with(spec, &Progress::new())
}

pub fn enumerate_with(spec: &SearchSpec, progress: &Progress) -> Result<Enumeration, SearchError> {
    spec.validate()?;
    let before = progress.graphs_examined();
    let control = Control::new(progress, &spec.budget);
    let graphs = enumerate_class(spec, None, &control);
    Ok(Enumeration {
        graphs,
        graphs_examined: progress.graphs_examined() - before,
        exhausted: !control.stopped(),
    })
}

pub fn extremal_energy(spec: &SearchSpec) -> Result<SearchResult, SearchError> {
    extremal_energy_with(spec, &Progress::new())
}

pub fn extremal_energy_with(spec: &SearchSpec, progress: &Progress) -> Result<SearchResult, SearchError> {
    let maximize = match spec.objective {
        SearchObjective::MaxEnergy => true,
        SearchObjective::MinEnergy => false,
        SearchObjective::Realize { .. } => return Err(SearchError::WrongObjective),
    };
    let e = enumerate_with(spec, progress)?;
    if e.graphs.is_empty() {
        if e.exhausted {
            return Err(SearchError::EmptyClass { graphs_examined: e.graphs_examined });
        }
        return Ok(SearchResult {
            best: Vec::new(),
            graphs_examined: e.graphs_examined,
            exhausted: false,
            fast_fail: Vec::new(),
        });
    }
    let energies: Vec<f64> = e.graphs.par_iter().map(spectrum::energy).collect();
    let pick = |a: f64, b: f64| if maximize { a.max(b) } else { a.min(b) };
    let target = energies.iter().copied().reduce(pick).expect("non-empty");
    let best = e
        .graphs
        .iter()
        .zip(&energies)
        .filter(|(_, &en)| (en - target).abs() <= ENERGY_TIE_TOL)
        .map(|(g, _)| Found::new(g))
        .collect();
    Ok(SearchResult {
        best,
        graphs_examined: e.graphs_examined,
        exhausted: e.exhausted,
        fast_fail: Vec::new(),
    })
}

/// Moment identities a target spectrum must satisfy to belong to a graph.
pub fn moment_violations(target: &Spectrum, m: Option<usize>, tol: f64) -> Vec<MomentViolation> {
    prune::moment_violations(target, m, tol)
}

pub fn realize_spectrum(spec: &SearchSpec) -> Result<SearchResult, SearchError> {
    realize_spectrum_with(spec, &Progress::new())
}

pub fn realize_spectrum_with(spec: &SearchSpec, progress: &Progress) -> Result<SearchResult, SearchError> {
    let Some((target, tol)) = spec.target() else {
        return Err(SearchError::WrongObjective);
    };
    spec.validate()?;
    let violations = prune::moment_violations(target, spec.m, tol);
    if !violations.is_empty() {
        return Ok(SearchResult {
            best: Vec::new(),
            graphs_examined: 0,
            exhausted: false,
            fast_fail: violations,
        });
    }
    let bounds = TargetBounds::new(target, tol);
    let mut spec = spec.clone();
    spec.m = Some(bounds.m);
    let before = progress.graphs_examined();
    let control = Control::new(progress, &spec.budget);
    let graphs = enumerate_class(&spec, Some(&bounds), &control);
    Ok(SearchResult {
        best: graphs.iter().map(Found::new).collect(),
        graphs_examined: progress.graphs_examined() - before,
        exhausted: !control.stopped(),
        fast_fail: Vec::new(),
    })
}

/// Picks the enumeration route for the class and applies the final filter.
fn enumerate_class(spec: &SearchSpec, target: Option<&TargetBounds>, control: &Control) -> Vec<Graph> {
    let n = spec.n;
    let c = &spec.constraints;
    let filter = ClassFilter::new(spec, target);

    if c.complement_of_cycles {
        let mut out = Vec::new();
        for parts in partitions::partitions_min_part(n, 3) {
            if !control.node() {
                break;
            }
            if let Some(t) = target {
                let s = cycle_partition_spectrum(&parts, n).expect("parts sum to n");
                if !s.matches(&t.spectrum, t.tol) {
                    control.examined();
                    continue;
                }
            }
            let g = construct::complement(&construct::cycle_union(&parts).expect("parts >= 3"));
            control.examined();
            if filter.accepts(&g) {
                out.push(g);
            }
        }
        return out;
    }

    if c.tree && n <= trees::PRUFER_MAX_N {
        return trees::labelled_tree_classes(n, control)
            .into_iter()
            .filter(|g| filter.accepts(g))
            .collect();
    }

    // Dense regular classes are enumerated through their sparser complements.
    if let Some(r) = c.regular {
        if 2 * r > n - 1 && !c.bipartite && !c.tree {
            let r_comp = n - 1 - r;
            let comp_target = target.map(|t| {
                let s = complement_spectrum_regular(&t.spectrum, n, None).expect("length checked");
                TargetBounds::new(&s, t.tol)
            });
            let pruning = Pruning::new(n, Some(r_comp), Some(n * r_comp / 2), false, false, comp_target.as_ref());
            return generate::generate(n, &pruning, control)
                .into_iter()
                .map(|g| construct::complement(&g))
                .filter(|g| filter.accepts(g))
                .collect();
        }
    }

    let pruning = Pruning::new(n, c.regular, spec.m, c.bipartite, c.tree, target);
    generate::generate(n, &pruning, control)
        .into_iter()
        .filter(|g| filter.accepts(g))
        .collect()
}
