//! End-to-end pipeline: the relative subcomplex (invariant bases per degree
//! at fixed weight), the restricted coboundary matrices, Betti numbers and
//! Euler characteristics.

use std::fmt::Write as _;

use crate::cache::{BasisCache, CacheError};
use crate::cochain::{slice, Cochain, Coboundary, ComplexSlice};
use crate::invariants::{invariant_basis, verify_invariants, InvariantViolation};
use crate::linalg::{coords_in_span, SparseRationalMatrix, SparseVector};
use crate::poisson::UnsupportedRank;

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Rank(#[from] UnsupportedRank),
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(
        "coboundary image of invariant vector {vector} in degree {degree} (weight {weight}) \
         falls outside the invariant span of degree {}", degree + 1
    )]
    ImageOutsideSpan {
        weight: u32,
        degree: u32,
        vector: usize,
    },
}

/// One degree of the relative complex: the slice, its invariant basis, and
/// the coordinates of the coboundary images in the next invariant basis.
pub struct RelativeDegree {
    pub slice: ComplexSlice,
    pub invariants: Vec<Cochain>,
    /// |invariants_{m+1}| x |invariants_m| matrix of the restricted d.
    pub d_restricted: SparseRationalMatrix,
}

/// The fixed-weight relative complex with degrees 0..=weight.
pub struct RelativeComplex {
    pub n: u8,
    pub weight: u32,
    pub min_gen: u32,
    pub degrees: Vec<RelativeDegree>,
}

impl RelativeComplex {
    pub fn invariant_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.invariants.len()).collect()
    }
}

/// Invariant basis of a single slice, through the cache when one is given.
/// Cached vectors are re-verified against the quadratic actions, so a stale
/// or corrupt cache is detected rather than trusted.
pub fn relative_invariant_basis(
    s: &ComplexSlice,
    cache: Option<&BasisCache>,
) -> Result<Vec<Cochain>, PipelineError> {
    if let Some(cache) = cache {
        if let Some(vectors) = cache.load(s)? {
            let cochains: Vec<Cochain> = vectors.iter().map(|v| s.from_vector(v)).collect();
            verify_invariants(s, &cochains).map_err(|e| {
                PipelineError::Cache(CacheError::corrupt(format!(
                    "cached basis fails invariance verification: {e}"
                )))
            })?;
            return Ok(cochains);
        }
    }
    let basis = invariant_basis(s)?;
    if let Some(cache) = cache {
        let vectors: Vec<SparseVector> = basis.vectors.iter().map(|c| s.to_vector(c)).collect();
        cache.store(s, &vectors)?;
    }
    Ok(basis.vectors)
}

/// Builds the weight-`w` relative complex for `R^(2n)`. Odd weights
/// short-circuit to the zero complex (minus the identity lies in Sp(2n,R)).
pub fn build_relative_complex(
    n: u8,
    weight: u32,
    min_gen: u32,
    cache: Option<&BasisCache>,
) -> Result<RelativeComplex, PipelineError> {
    let mut degrees: Vec<RelativeDegree> = Vec::with_capacity(weight as usize + 1);
    let odd = !weight.is_multiple_of(2);
    for m in 0..=weight {
        let s = slice(n, weight, m, min_gen)?;
        let invariants = if odd {
            Vec::new()
        } else {
            relative_invariant_basis(&s, cache)?
        };
        degrees.push(RelativeDegree {
            slice: s,
            invariants,
            d_restricted: SparseRationalMatrix::zero(0, 0),
        });
    }

    // restricted coboundary: coordinates of d(invariant) in the next
    // degree's invariant basis
    for m in 0..=weight as usize {
        let n_cur = degrees[m].invariants.len();
        let next = degrees.get(m + 1);
        let n_next = next.map_or(0, |d| d.invariants.len());
        if n_cur == 0 {
            degrees[m].d_restricted = SparseRationalMatrix::zero(n_next, 0);
            continue;
        }
        let d = Coboundary::new(degrees[m].slice.table(), min_gen);
        let next_basis: Vec<SparseVector> = next.map_or_else(Vec::new, |deg| {
            deg.invariants
                .iter()
                .map(|c| deg.slice.to_vector(c))
                .collect()
        });
        let mut columns: Vec<SparseVector> = Vec::with_capacity(n_cur);
        for (vi, v) in degrees[m].invariants.iter().enumerate() {
            let image = d.of_cochain(v);
            let outside = PipelineError::ImageOutsideSpan {
                weight,
                degree: m as u32,
                vector: vi,
            };
            if n_next == 0 {
                if !image.is_zero() {
                    return Err(outside);
                }
                columns.push(SparseVector::zero(0));
                continue;
            }
            let image_vec = next.unwrap().slice.to_vector(&image);
            let coords = coords_in_span(&image_vec, &next_basis).ok_or(outside)?;
            columns.push(SparseVector::from_entries(
                n_next,
                coords.into_iter().enumerate(),
            ));
        }
        degrees[m].d_restricted = SparseRationalMatrix::from_columns(n_next, columns);
    }

    // d o d = 0 on the restricted complex
    for m in 0..weight as usize {
        let dd = degrees[m + 1].d_restricted.mul_mat(&degrees[m].d_restricted);
        assert!(dd.is_zero(), "restricted d^2 != 0 at degree {m}");
    }

    Ok(RelativeComplex {
        n,
        weight,
        min_gen,
        degrees,
    })
}

/// Per-degree dimension, Betti number and outgoing rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: u32,
    pub dim: usize,
    pub betti: usize,
    pub rank_out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub n: u8,
    pub weight: u32,
    pub degrees: Vec<DegreeReport>,
    pub euler_from_dims: i64,
    pub euler_from_betti: i64,
}

impl CohomologyReport {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    /// Plain-text table in the shape of the published ones.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "degree");
        for d in &self.degrees {
            let _ = write!(out, " {:>4}", d.degree);
        }
        let _ = write!(out, "\ndim   ");
        for d in &self.degrees {
            let _ = write!(out, " {:>4}", d.dim);
        }
        let _ = write!(out, "\nBetti ");
        for d in &self.degrees {
            let _ = write!(out, " {:>4}", d.betti);
        }
        let _ = write!(out, "\nEuler characteristic: {}", self.euler_from_betti);
        out
    }
}

/// Betti numbers `h^m = dim ker D_m - rank D_{m-1}`, with the Euler
/// characteristic computed from dimensions and from Betti numbers and
/// asserted equal.
pub fn betti(rc: &RelativeComplex) -> CohomologyReport {
    let mut degrees = Vec::with_capacity(rc.degrees.len());
    let mut rank_in = 0usize;
    for (m, deg) in rc.degrees.iter().enumerate() {
        let dim = deg.invariants.len();
        let rank_out = deg.d_restricted.rank();
        let betti = dim
            .checked_sub(rank_out)
            .and_then(|k| k.checked_sub(rank_in))
            .unwrap_or_else(|| panic!("negative Betti number at degree {m}"));
        degrees.push(DegreeReport {
            degree: m as u32,
            dim,
            betti,
            rank_out,
        });
        rank_in = rank_out;
    }
    let euler_from_dims: i64 = degrees
        .iter()
        .map(|d| (d.dim as i64) * if d.degree % 2 == 0 { 1 } else { -1 })
        .sum();
    let euler_from_betti: i64 = degrees
        .iter()
        .map(|d| (d.betti as i64) * if d.degree % 2 == 0 { 1 } else { -1 })
        .sum();
    assert_eq!(
        euler_from_dims, euler_from_betti,
        "Euler characteristic mismatch"
    );
    CohomologyReport {
        n: rc.n,
        weight: rc.weight,
        degrees,
        euler_from_dims,
        euler_from_betti,
    }
}

/// Degrees whose invariant extraction is expensive enough to sit behind an
/// explicit opt-in (10^5-dimensional slices).
pub fn heavy_degrees(n: u8, weight: u32) -> Vec<u32> {
    if n == 2 && weight >= 6 {
        (4..=weight).collect()
    } else {
        Vec::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_two_pipeline() {
        let rc = build_relative_complex(2, 2, 3, None).unwrap();
        assert_eq!(rc.invariant_dims(), vec![0, 0, 1]);
        let report = betti(&rc);
        assert_eq!(report.betti(), vec![0, 0, 1]);
        assert_eq!(report.euler_from_betti, 1);
    }

    #[test]
    fn weight_four_pipeline() {
        let rc = build_relative_complex(2, 4, 3, None).unwrap();
        assert_eq!(rc.invariant_dims(), vec![0, 0, 0, 1, 3]);
        // d: degree 3 -> degree 4 restricted is 3x1 of rank 1
        assert_eq!(rc.degrees[3].d_restricted.n_rows(), 3);
        assert_eq!(rc.degrees[3].d_restricted.n_cols(), 1);
        assert_eq!(rc.degrees[3].d_restricted.rank(), 1);
        let report = betti(&rc);
        assert_eq!(report.betti(), vec![0, 0, 0, 0, 2]);
        assert_eq!(report.euler_from_dims, 2);
        assert_eq!(report.euler_from_betti, 2);
    }

    #[test]
    fn odd_weight_short_circuits() {
        let rc = build_relative_complex(2, 3, 3, None).unwrap();
        assert!(rc.invariant_dims().iter().all(|&d| d == 0));
        let report = betti(&rc);
        assert_eq!(report.euler_from_betti, 0);
    }

    #[test]
    fn n_one_weight_two() {
        // the n=1 relative complex at weight 2 has the same table
        let rc = build_relative_complex(1, 2, 3, None).unwrap();
        let report = betti(&rc);
        assert_eq!(report.dims(), vec![0, 0, 1]);
        assert_eq!(report.betti(), vec![0, 0, 1]);
    }

}
