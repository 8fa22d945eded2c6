//! Complements of disjoint cycle unions, indexed by integer partitions.

use crate::spectrum::{complement_spectrum_regular, cycle_spectrum, Spectrum, SpectrumError};

/// Partitions of `n` into parts `>= min_part`, parts non-increasing,
/// listed in reverse lexicographic order.
pub fn partitions_min_part(n: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (min..=max.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && min_part > 0 {
        rec(n, n, min_part, &mut Vec::new(), &mut out);
    }
    out
}

/// Spectrum of the complement of the union of cycles with lengths `parts`.
///
/// The union is 2-regular, so its complement has `n - 3` (from one copy of
/// the eigenvalue 2) and `-v - 1` for every other union eigenvalue `v`. With
/// `c` cycles this gives `-3` with multiplicity `c - 1`.
pub fn cycle_partition_spectrum(parts: &[usize], n: usize) -> Result<Spectrum, SpectrumError> {
    let total: usize = parts.iter().sum();
    if total != n {
        return Err(SpectrumError::LengthMismatch { expected: n, got: total });
    }
    let mut union = Vec::with_capacity(n);
    for &len in parts {
        union.extend_from_slice(cycle_spectrum(len)?.values());
    }
    complement_spectrum_regular(&Spectrum::new(union), n, None)
}
