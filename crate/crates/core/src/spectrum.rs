//! Adjacency spectra, energy, spectral moments and the classical spectral
//! facts used throughout the crate (moment identities, bipartite symmetry,
//! regularity via the largest eigenvalue, complements of regular graphs,
//! cycle spectra and the Koolen–Moulton upper bound).

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Absolute gap below which neighbouring eigenvalues are grouped together.
pub const DEFAULT_GROUP_TOL: f64 = 1e-6;

/// Tolerance for deciding that a moment-derived triangle count is integral.
pub const DEFAULT_INTEGRALITY_TOL: f64 = 1e-6;

/// The golden ratio, `(1 + sqrt 5) / 2`.
pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("spectrum has {got} values but n = {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("source graph is not regular (largest eigenvalue {x1} but 2m/n = {avg})")]
    NotRegular { x1: f64, avg: f64 },
    #[error("spectrum is empty")]
    Empty,
}

/// A multiset of real eigenvalues, kept sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
}

/// One cluster of (numerically) equal eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenGroup {
    pub value: f64,
    pub multiplicity: usize,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    /// Expands `(value, multiplicity)` pairs.
    pub fn from_groups(groups: &[(f64, usize)]) -> Self {
        let values = groups
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
            .collect();
        Spectrum::new(values)
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

    /// Largest eigenvalue.
    pub fn index(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    /// `sum x_i^k`.
    pub fn moment(&self, k: u32) -> f64 {
        self.values.iter().map(|x| x.powi(k as i32)).sum()
    }

    /// Clusters consecutive values whose gap is at most `tol`. The reported
    /// value of a group is the mean of its members.
    pub fn groups(&self, tol: f64) -> Vec<EigenGroup> {
        let mut out: Vec<EigenGroup> = Vec::new();
        let mut sum = 0.0;
        let mut last = f64::NAN;
        for &x in &self.values {
            match out.last_mut() {
                Some(g) if (last - x).abs() <= tol => {
                    g.multiplicity += 1;
                    sum += x;
                    g.value = sum / g.multiplicity as f64;
                }
                _ => {
                    sum = x;
                    out.push(EigenGroup { value: x, multiplicity: 1 });
                }
            }
            last = x;
        }
        out
    }

    pub fn distinct_count(&self, tol: f64) -> usize {
        self.groups(tol).len()
    }

    /// True when the multiset equals its own negation within `tol`, which
    /// for graph spectra characterises bipartite graphs.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        let n = self.values.len();
        (0..n).all(|i| (self.values[i] + self.values[n - 1 - i]).abs() <= tol)
    }

    /// Entrywise comparison of the sorted lists.
    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.values.len() == other.values.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// Union of two multisets.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut v = self.values.clone();
        v.extend_from_slice(&other.values);
        Spectrum::new(v)
    }

    /// Full numeric report for a spectrum coming from a graph on `n = len`
    /// vertices.
    pub fn report(&self) -> EnergyReport {
        let n = self.values.len();
        let energy = self.energy();
        let moment3 = self.moment(3);
        let triangles = moment3 / 6.0;
        let km_bound = koolen_moulton_bound(n);
        EnergyReport {
            energy,
            moment1: self.moment(1),
            moment2: self.moment(2),
            moment3,
            triangle_count: triangles,
            triangles_integral: (triangles - triangles.round()).abs() <= DEFAULT_INTEGRALITY_TOL,
            km_bound,
            km_slack: km_bound - energy,
        }
    }
}

/// Energy and moment summary of a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub energy: f64,
    pub moment1: f64,
    pub moment2: f64,
    pub moment3: f64,
    /// `moment3 / 6`, left unrounded.
    pub triangle_count: f64,
    pub triangles_integral: bool,
    pub km_bound: f64,
    pub km_slack: f64,
}

/// Eigenvalues of the adjacency matrix, descending.
pub fn eigenvalues(g: &Graph) -> Spectrum {
    let n = g.n();
    if n == 0 {
        return Spectrum { values: Vec::new() };
    }
    let a = DMatrix::from_row_slice(n, n, &g.adjacency_matrix());
    Spectrum::new(a.symmetric_eigenvalues().iter().copied().collect())
}

pub fn energy(g: &Graph) -> f64 {
    eigenvalues(g).energy()
}

/// Regularity verdict together with the spectral cross-check `x1 = 2m/n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regularity {
    pub degree: Option<usize>,
    /// Whether the largest eigenvalue equals the average degree within 1e-8.
    pub spectral_agrees: bool,
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        self.degree.is_some()
    }
}

pub fn regularity(g: &Graph) -> Regularity {
    let degrees = g.degrees();
    let degree = match degrees.split_first() {
        Some((&d, rest)) if rest.iter().all(|&e| e == d) => Some(d),
        _ => None,
    };
    let spectral = if g.n() == 0 {
        true
    } else {
        let x1 = eigenvalues(g).index().unwrap_or(0.0);
        let avg = 2.0 * g.m() as f64 / g.n() as f64;
        ((x1 - avg).abs() <= 1e-8) == degree.is_some()
    };
    Regularity { degree, spectral_agrees: spectral }
}

/// Spectrum of the complement of a regular graph from its own spectrum:
/// `n - x1 - 1` together with `-x_i - 1` for the remaining values.
///
/// When `source` is supplied it must be regular (checked via `x1 = 2m/n`).
pub fn complement_spectrum_regular(
    s: &Spectrum,
    n: usize,
    source: Option<&Graph>,
) -> Result<Spectrum, SpectrumError> {
    if s.len() != n {
        return Err(SpectrumError::LengthMismatch { expected: n, got: s.len() });
    }
    let (&x1, rest) = s.values.split_first().ok_or(SpectrumError::Empty)?;
    if let Some(g) = source {
        let avg = 2.0 * g.m() as f64 / g.n() as f64;
        if (x1 - avg).abs() > 1e-8 || g.n() != n {
            return Err(SpectrumError::NotRegular { x1, avg });
        }
    }
    let mut out = Vec::with_capacity(n);
    out.push(n as f64 - x1 - 1.0);
    out.extend(rest.iter().map(|x| -x - 1.0));
    Ok(Spectrum::new(out))
}

/// `2 cos(2 pi j / len)` for `j = 1..=len`.
pub fn cycle_spectrum(len: usize) -> Result<Spectrum, SpectrumError> {
    if len < 3 {
        return Err(SpectrumError::CycleTooShort(len));
    }
    let values = (1..=len)
        .map(|j| 2.0 * (2.0 * PI * j as f64 / len as f64).cos())
        .collect();
    Ok(Spectrum::new(values))
}

/// `(n / 2)(1 + sqrt n)`.
pub fn koolen_moulton_bound(n: usize) -> f64 {
    let n = n as f64;
    n / 2.0 * (1.0 + n.sqrt())
}
