//! Two-value completion of a partial spectrum.
//!
//! Given the vertex count `n`, edge count `m` and a family `K` of eigenvalues
//! assumed present, the remaining `|J| = n - |K|` eigenvalues of an
//! energy-extremal graph take only two values `x`, `y` with multiplicities
//! `p`, `q` (the stationarity conditions of the energy under the first two
//! moment constraints). Every such completion solves
//!
//! ```text
//! p + q = |J|,   p x + q y = -C,   p x^2 + q y^2 = 2m - D
//! ```
//!
//! where `C` and `D` are the sum and the sum of squares of `K`. This module
//! enumerates all real solutions and scores them by energy and by the
//! integrality of the third spectral moment.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spectrum::{Spectrum, DEFAULT_INTEGRALITY_TOL};

/// Tolerance for flagging a completion value as equal to a known value.
pub const COLLISION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CompletionError {
    #[error("edge count must be positive")]
    NoEdges,
    #[error("{known} known values leave fewer than two unknowns for n = {n}")]
    NoUnknowns { n: usize, known: usize },
    #[error("sum of squares of the known values ({d}) exceeds 2m = {two_m}")]
    SquaresExceedEdges { d: f64, two_m: f64 },
    #[error(
        "no real completion: 2m - D = {remaining} is below C^2/|J| = {required} for every split"
    )]
    Infeasible { remaining: f64, required: f64 },
}

/// The fixed part `K` of a spectrum with its derived sums.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnownFamily {
    values: Vec<f64>,
    /// Sum of the non-negative members.
    pub c_plus: f64,
    /// Sum of the negative members.
    pub c_minus: f64,
    pub c: f64,
    /// Sum of squares.
    pub d: f64,
}

impl KnownFamily {
    pub fn new(values: Vec<f64>) -> Self {
        let c_plus = values.iter().filter(|&&x| x >= 0.0).sum();
        let c_minus = values.iter().filter(|&&x| x < 0.0).sum();
        let c = values.iter().sum();
        let d = values.iter().map(|x| x * x).sum();
        KnownFamily { values, c_plus, c_minus, c, d }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn cube_sum(&self) -> f64 {
        self.values.iter().map(|x| x * x * x).sum()
    }

    /// Energy contribution of the known part, `C+ - C-`.
    pub fn abs_sum(&self) -> f64 {
        self.c_plus - self.c_minus
    }

    /// A new family with `extra` appended.
    pub fn extended(&self, extra: &[f64]) -> KnownFamily {
        let mut v = self.values.clone();
        v.extend_from_slice(extra);
        KnownFamily::new(v)
    }

    fn contains(&self, x: f64) -> bool {
        self.values.iter().any(|k| (k - x).abs() <= COLLISION_TOL)
    }
}

pub fn derive_constants(values: &[f64]) -> KnownFamily {
    KnownFamily::new(values.to_vec())
}

/// One solution `(p, q, x, y)` of the completion system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompletionCandidate {
    pub p: usize,
    pub q: usize,
    pub x: f64,
    pub y: f64,
    pub energy: f64,
    pub third_moment_over_6: f64,
    pub passes_moment_test: bool,
    /// `{x, y}` has one non-negative and one negative member.
    pub sign_split: bool,
    /// Zero discriminant: `x == y`, emitted once.
    pub coincident: bool,
    pub x_in_known: bool,
    pub y_in_known: bool,
}

impl CompletionCandidate {
    /// The full spectrum `K ∪ {x^p, y^q}`.
    pub fn assemble(&self, known: &KnownFamily) -> Spectrum {
        let mut v = known.values().to_vec();
        v.extend(std::iter::repeat_n(self.x, self.p));
        v.extend(std::iter::repeat_n(self.y, self.q));
        Spectrum::new(v)
    }
}

/// Which multiplicities to try for `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitRange {
    /// `p = 1..=|J|/2`; the remaining splits are mirror images.
    Half,
    /// `p = 1..|J|`.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompletionOptions {
    pub moment_tol: f64,
    pub range: SplitRange,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions { moment_tol: DEFAULT_INTEGRALITY_TOL, range: SplitRange::Half }
    }
}

/// All completions for `p = 1..=floor(|J|/2)`, ordered by `p` then by `x`
/// descending.
pub fn complete_spectrum(
    n: usize,
    m: usize,
    known: &KnownFamily,
) -> Result<Vec<CompletionCandidate>, CompletionError> {
    complete_spectrum_with(n, m, known, &CompletionOptions::default())
}

pub fn complete_spectrum_with(
    n: usize,
    m: usize,
    known: &KnownFamily,
    opts: &CompletionOptions,
) -> Result<Vec<CompletionCandidate>, CompletionError> {
    if m == 0 {
        return Err(CompletionError::NoEdges);
    }
    if known.len() + 2 > n {
        return Err(CompletionError::NoUnknowns { n, known: known.len() });
    }
    let two_m = 2.0 * m as f64;
    let remaining = two_m - known.d;
    // K taken from a computed spectrum may overshoot 2m by rounding
    if remaining < -1e-9 * two_m {
        return Err(CompletionError::SquaresExceedEdges { d: known.d, two_m });
    }
    let remaining = remaining.max(0.0);
    let j = n - known.len();
    let jf = j as f64;
    // Discriminant of the eliminated quadratic is 4pq(|J| S - C^2): its sign
    // does not depend on the split.
    let spread = jf * remaining - known.c * known.c;
    let scale = (jf * remaining).max(known.c * known.c).max(1.0);
    if spread < -1e-12 * scale {
        return Err(CompletionError::Infeasible { remaining, required: known.c * known.c / jf });
    }
    let spread = spread.max(0.0);
    let coincident = spread <= 1e-12 * scale;

    let last = match opts.range {
        SplitRange::Half => j / 2,
        SplitRange::Full => j - 1,
    };
    let cube_known = known.cube_sum();
    let mut out = Vec::with_capacity(2 * last);
    for p in 1..=last {
        let q = j - p;
        let (pf, qf) = (p as f64, q as f64);
        let dx = (qf / pf * spread).sqrt() / jf;
        let dy = (pf / qf * spread).sqrt() / jf;
        let base = -known.c / jf;
        let roots: &[(f64, f64)] = if coincident {
            &[(base, base)]
        } else {
            &[(base + dx, base - dy), (base - dx, base + dy)]
        };
        for &(x, y) in roots {
            let third = (pf * x.powi(3) + qf * y.powi(3) + cube_known) / 6.0;
            out.push(CompletionCandidate {
                p,
                q,
                x,
                y,
                energy: pf * x.abs() + qf * y.abs() + known.abs_sum(),
                third_moment_over_6: third,
                passes_moment_test: third_moment_passes(third, opts.moment_tol),
                sign_split: (x >= 0.0) != (y >= 0.0),
                coincident,
                x_in_known: known.contains(x),
                y_in_known: known.contains(y),
            });
        }
    }
    Ok(out)
}

fn third_moment_passes(value: f64, tol: f64) -> bool {
    let r = value.round();
    (value - r).abs() <= tol && r >= 0.0
}

/// Recomputes the third-moment diagnostic of a candidate against `known`.
pub fn third_moment_test(cand: &CompletionCandidate, known: &KnownFamily, tol: f64) -> (f64, bool) {
    let value = (cand.p as f64 * cand.x.powi(3) + cand.q as f64 * cand.y.powi(3) + known.cube_sum())
        / 6.0;
    (value, third_moment_passes(value, tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateFilter {
    All,
    MomentPassOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SelectionError {
    #[error("no candidates to choose from")]
    EmptyInput,
    #[error("no candidate passes the filter")]
    EmptyAfterFilter,
}

/// Candidates sorted best-first by energy. Energies equal to 1e-9 count as
/// ties and are broken by smaller `p`, then larger `x`.
pub fn best_candidates(
    cands: &[CompletionCandidate],
    filter: CandidateFilter,
    objective: Objective,
) -> Result<Vec<CompletionCandidate>, SelectionError> {
    if cands.is_empty() {
        return Err(SelectionError::EmptyInput);
    }
    let mut kept: Vec<CompletionCandidate> = cands
        .iter()
        .filter(|c| filter == CandidateFilter::All || c.passes_moment_test)
        .cloned()
        .collect();
    if kept.is_empty() {
        return Err(SelectionError::EmptyAfterFilter);
    }
    let key = |c: &CompletionCandidate| {
        let e = (c.energy * 1e9).round() as i128;
        match objective {
            Objective::Max => -e,
            Objective::Min => e,
        }
    };
    kept.sort_by(|a, b| {
        key(a)
            .cmp(&key(b))
            .then(a.p.cmp(&b.p))
            .then(b.x.total_cmp(&a.x))
    });
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(c: &[CompletionCandidate], p: usize, x: f64) -> &CompletionCandidate {
        c.iter()
            .find(|r| r.p == p && (r.x - x).abs() < 1e-4)
            .unwrap_or_else(|| panic!("no row p={p} x={x}"))
    }

    #[test]
    fn constants() {
        let k = derive_constants(&[10.0]);
        assert_eq!((k.c_plus, k.c_minus, k.c, k.d), (10.0, 0.0, 10.0, 100.0));
        let k = derive_constants(&[]);
        assert_eq!((k.c_plus, k.c_minus, k.c, k.d), (0.0, 0.0, 0.0, 0.0));
        let k = derive_constants(&[15.0, -3.0, -3.0, -3.0]);
        assert_eq!((k.c_plus, k.c_minus, k.c, k.d), (15.0, -9.0, 6.0, 252.0));
        // zero counts as non-negative
        let k = derive_constants(&[0.0, -1.0]);
        assert_eq!((k.c_plus, k.c_minus), (0.0, -1.0));
    }

    #[test]
    fn clebsch_row() {
        let c = complete_spectrum(16, 80, &derive_constants(&[10.0])).unwrap();
        assert_eq!(c.len(), 14);
        let r = row(&c, 5, 2.0);
        assert_eq!(r.q, 10);
        assert!((r.y + 2.0).abs() < 1e-12);
        assert!((r.energy - 40.0).abs() < 1e-12);
        assert!((r.third_moment_over_6 - 160.0).abs() < 1e-9);
        assert!(r.passes_moment_test);
    }

    #[test]
    fn petersen_complement_rows() {
        let c = complete_spectrum(10, 30, &derive_constants(&[6.0])).unwrap();
        let r = row(&c, 3, 1.4415);
        assert!((r.y + 1.7208).abs() < 5e-5);
        assert!((r.energy - 20.6491).abs() < 5e-5);
        assert!((r.third_moment_over_6 - 32.4025).abs() < 5e-5);
        assert!(!r.passes_moment_test);
        let r = row(&c, 2, 2.1222);
        assert!((r.third_moment_over_6 - 35.5290).abs() < 5e-5);
        assert!(!r.passes_moment_test);
    }

    #[test]
    fn single_edge() {
        let c = complete_spectrum(2, 1, &KnownFamily::new(vec![])).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|r| r.p == 1 && r.q == 1));
        let top = &c[0];
        assert!((top.x - 1.0).abs() < 1e-12 && (top.y + 1.0).abs() < 1e-12);
        assert!((top.energy - 2.0).abs() < 1e-12);
    }

    #[test]
    fn pentagon_motif_row() {
        let phi = crate::spectrum::golden_ratio();
        let mut k = vec![15.0, -3.0, -3.0, -3.0];
        k.extend([phi - 1.0; 4]);
        k.extend([-phi; 4]);
        let c = complete_spectrum(18, 135, &KnownFamily::new(k)).unwrap();
        assert_eq!(c.len(), 6);
        let r = row(&c, 2, 1.0);
        assert!((r.y + 1.0).abs() < 1e-12);
        assert!((r.energy - 38.9443).abs() < 5e-5);
        assert!(r.passes_moment_test);
    }

    #[test]
    fn moment_test_values() {
        let k = derive_constants(&[15.0]);
        let c = complete_spectrum(18, 135, &k).unwrap();
        let r = row(&c, 5, -3.0);
        let (v, pass) = third_moment_test(r, &k, 1e-6);
        assert!((v - 540.0).abs() < 1e-9 && pass);
        let passing: Vec<_> = c.iter().filter(|r| r.passes_moment_test).collect();
        assert_eq!(passing.len(), 1);
    }

    #[test]
    fn negative_integer_moment_fails() {
        assert!(!third_moment_passes(-1.0, 1e-6));
        assert!(third_moment_passes(0.0, 1e-6));
        assert!(third_moment_passes(3.0 + 1e-8, 1e-6));
    }

    #[test]
    fn errors() {
        let k = KnownFamily::new(vec![1.0, 1.0]);
        assert_eq!(
            complete_spectrum(3, 1, &k),
            Err(CompletionError::NoUnknowns { n: 3, known: 2 })
        );
        assert_eq!(complete_spectrum(3, 0, &KnownFamily::new(vec![])), Err(CompletionError::NoEdges));
        assert!(matches!(
            complete_spectrum(5, 1, &KnownFamily::new(vec![3.0])),
            Err(CompletionError::SquaresExceedEdges { .. })
        ));
        // C^2/|J| = 36/2 = 18 > 2m - D = 2
        assert!(matches!(
            complete_spectrum(4, 10, &KnownFamily::new(vec![3.0, 3.0])),
            Err(CompletionError::Infeasible { .. })
        ));
    }

    #[test]
    fn coincident_root_emitted_once() {
        // |J| = 2, C = -2, S = 2: x = y = 1
        let k = KnownFamily::new(vec![-2.0]);
        let c = complete_spectrum(3, 3, &k).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].coincident);
        assert!((c[0].x - 1.0).abs() < 1e-12 && (c[0].y - 1.0).abs() < 1e-12);
        assert!(!c[0].sign_split);
    }

    #[test]
    fn collision_flags() {
        let c = complete_spectrum(18, 135, &derive_constants(&[15.0, -3.0, -3.0, -3.0])).unwrap();
        let r = row(&c, 2, -3.0);
        assert!(r.x_in_known && !r.y_in_known);
    }

    #[test]
    fn selection() {
        let c = complete_spectrum(16, 80, &derive_constants(&[10.0])).unwrap();
        let best = best_candidates(&c, CandidateFilter::All, Objective::Max).unwrap();
        assert_eq!(best[0].p, 5);
        assert!((best[0].energy - 40.0).abs() < 1e-12);

        let c = complete_spectrum(10, 9, &derive_constants(&[3.0])).unwrap();
        let pass = best_candidates(&c, CandidateFilter::MomentPassOnly, Objective::Max).unwrap();
        let ps: Vec<(usize, i64)> = pass.iter().map(|r| (r.p, r.energy.round() as i64)).collect();
        assert!(ps.contains(&(3, 12)) && ps.contains(&(1, 6)));
        assert_eq!(ps[0], (3, 12));

        let one = &c[..1];
        assert_eq!(best_candidates(one, CandidateFilter::All, Objective::Min).unwrap(), one);
        assert_eq!(
            best_candidates(&[], CandidateFilter::All, Objective::Max),
            Err(SelectionError::EmptyInput)
        );
        let c = complete_spectrum(10, 30, &derive_constants(&[6.0])).unwrap();
        let failing: Vec<_> = c.into_iter().filter(|r| !r.passes_moment_test).collect();
        assert_eq!(
            best_candidates(&failing, CandidateFilter::MomentPassOnly, Objective::Max),
            Err(SelectionError::EmptyAfterFilter)
        );
    }

    #[test]
    fn ties_prefer_smaller_p_then_larger_x() {
        let mut k = vec![15.0, -3.0, -3.0, -3.0];
        k.extend([-1.0, -1.0, -1.0, -1.0, 1.0, 1.0]);
        let c = complete_spectrum(18, 135, &KnownFamily::new(k)).unwrap();
        let pass = best_candidates(&c, CandidateFilter::MomentPassOnly, Objective::Max).unwrap();
        assert_eq!(pass.len(), 2);
        assert!(pass[0].x > pass[1].x);
        assert!((pass[0].energy - pass[1].energy).abs() < 1e-9);
    }
}
