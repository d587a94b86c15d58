//! The sp(2n) action on cochain slices: Cartan-weight grading, action
//! matrices, highest-weight vector extraction, trivial-isotypic (invariant)
//! bases and full irreducible decompositions by highest-weight counting.
//!
//! A wedge monomial's Cartan weight is the sum of its factors' dual weights;
//! the multiplicity of the irreducible with highest weight `lambda` equals
//! the dimension of the joint kernel of the simple raising actions on the
//! weight-`lambda` subspace.

use std::collections::BTreeMap;

use crate::cochain::{Cochain, ComplexSlice, GenRef, WedgeMonomial};
use crate::linalg::{Rational, SparseRationalMatrix, SparseVector};
use crate::poisson::{sp_generators, ExponentVector};

/// Cartan weight `(nu_1, nu_2)`; the second component is 0 for n = 1.
pub type CartanWeight = [i32; 2];

pub fn is_dominant(w: CartanWeight, n: u8) -> bool {
    match n {
        1 => w[0] >= 0 && w[1] == 0,
        _ => w[0] >= w[1] && w[1] >= 0,
    }
}

/// Action of one quadratic on every generator, indexed [degree][index].
type GeneratorImages = Vec<Vec<Vec<(GenRef, Rational)>>>;

/// Tabulated coadjoint action of a set of quadratics on the generators of a
/// slice's table, extended to wedges as an even derivation.
pub struct SpAction<'s> {
    slice: &'s ComplexSlice,
    quadratics: Vec<ExponentVector>,
    shifts: Vec<CartanWeight>,
    images: Vec<GeneratorImages>,
}

impl<'s> SpAction<'s> {
    pub fn new(slice: &'s ComplexSlice, quadratics: Vec<ExponentVector>) -> Self {
        let table = slice.table();
        let symp = table.symplectic();
        let shifts = quadratics.iter().map(|d| symp.coadjoint_shift(d)).collect();
        let images = quadratics
            .iter()
            .map(|d| {
                (0..=table.max_degree())
                    .map(|q| {
                        table
                            .generators(q)
                            .iter()
                            .map(|c| {
                                symp.coadjoint_on_dual(d, c)
                                    .into_iter()
                                    .map(|(a, v)| (table.gen_ref(&a), v))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SpAction {
            slice,
            quadratics,
            shifts,
            images,
        }
    }

    /// All quadratic generators of sp(2n).
    pub fn all_generators(slice: &'s ComplexSlice) -> Self {
        let gens = sp_generators(slice.table().symplectic());
        SpAction::new(slice, gens.quadratics)
    }

    /// The tagged simple raising elements only.
    pub fn raising(slice: &'s ComplexSlice) -> Self {
        let gens = sp_generators(slice.table().symplectic());
        SpAction::new(slice, gens.raising)
    }

    pub fn quadratics(&self) -> &[ExponentVector] {
        &self.quadratics
    }

    pub fn shift(&self, k: usize) -> CartanWeight {
        self.shifts[k]
    }

    fn on_generator(&self, k: usize, g: GenRef) -> &[(GenRef, Rational)] {
        &self.images[k][g.degree as usize][g.index as usize]
    }

    /// Derivation extension (even operator, no Koszul signs) of the k-th
    /// quadratic's coadjoint action to a wedge monomial.
    pub fn on_wedge(&self, k: usize, w: &WedgeMonomial) -> Cochain {
        let mut out = Cochain::zero();
        for (pos, g) in w.factors().iter().enumerate() {
            for (img, c) in self.on_generator(k, *g) {
                let mut factors = w.factors().to_vec();
                factors[pos] = *img;
                if let Some((sorted, s)) = WedgeMonomial::sort_canonical(factors) {
                    out.add_term(sorted, if s < 0 { -c.clone() } else { c.clone() });
                }
            }
        }
        out
    }

    pub fn on_cochain(&self, k: usize, c: &Cochain) -> Cochain {
        let mut out = Cochain::zero();
        for (w, v) in c.iter() {
            out.add_scaled(&self.on_wedge(k, w), v);
        }
        out
    }

    /// Full matrix of the k-th action on the slice (degree-preserving, so
    /// square in the slice basis).
    pub fn matrix(&self, k: usize) -> SparseRationalMatrix {
        let dim = self.slice.dim();
        let columns = crate::par::map_indexed(dim, |j| {
            let image = self.on_wedge(k, &self.slice.basis()[j]);
            self.slice.to_vector(&image)
        });
        SparseRationalMatrix::from_columns(dim, columns)
    }

    /// Matrix of the k-th action restricted to the weight-`source` subspace,
    /// with rows indexed by the weight-(source + shift) subspace.
    pub fn restricted_matrix(&self, k: usize, source: CartanWeight) -> SparseRationalMatrix {
        let shift = self.shifts[k];
        let target = [source[0] + shift[0], source[1] + shift[1]];
        let cols_idx = self.slice.weight_subspace(source);
        let rows_idx = self.slice.weight_subspace(target);
        let row_pos: BTreeMap<usize, usize> =
            rows_idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let columns = crate::par::map_indexed(cols_idx.len(), |jj| {
            let image = self.on_wedge(k, &self.slice.basis()[cols_idx[jj]]);
            SparseVector::from_entries(
                rows_idx.len(),
                image.iter().map(|(w, v)| {
                    let i = self
                        .slice
                        .index_of(w)
                        .expect("action image leaves the slice");
                    let p = *row_pos.get(&i).expect("action image leaves weight subspace");
                    (p, v.clone())
                }),
            )
        });
        SparseRationalMatrix::from_columns(rows_idx.len(), columns)
    }
}

/// Matrix of the action of a single quadratic `e_D` on the whole slice.
pub fn action_matrix(d: &ExponentVector, slice: &ComplexSlice) -> SparseRationalMatrix {
    assert_eq!(d.total(), 2);
    SpAction::new(slice, vec![d.clone()]).matrix(0)
}

/// Indices of the wedge monomials of Cartan weight `w`.
pub fn weight_subspace(slice: &ComplexSlice, w: CartanWeight) -> Vec<usize> {
    slice.weight_subspace(w).to_vec()
}

/// Stacked simple-raising matrix on the weight-`lambda` subspace; its kernel
/// vectors are the highest-weight vectors.
fn stacked_raising(slice: &ComplexSlice, lambda: CartanWeight) -> SparseRationalMatrix {
    let action = SpAction::raising(slice);
    let mut stacked = action.restricted_matrix(0, lambda);
    for k in 1..action.quadratics().len() {
        stacked = stacked.stack(&action.restricted_matrix(k, lambda));
    }
    stacked
}

/// Basis of highest-weight vectors of weight `lambda`: the joint kernel of
/// the simple raising actions on the weight-`lambda` subspace. Its length is
/// the multiplicity of `V_lambda` in the slice.
pub fn highest_weight_vectors(slice: &ComplexSlice, lambda: CartanWeight) -> Vec<Cochain> {
    assert!(is_dominant(lambda, slice.n()), "lambda must be dominant");
    let idx = slice.weight_subspace(lambda);
    if idx.is_empty() {
        return Vec::new();
    }
    let kernel = stacked_raising(slice, lambda).kernel_basis();
    kernel
        .into_iter()
        .map(|v| {
            let mut c = Cochain::zero();
            for (j, coeff) in v.iter() {
                c.add_term(slice.basis()[idx[j]].clone(), coeff.clone());
            }
            c
        })
        .collect()
}

/// Multiplicity of `V_lambda` without materializing the vectors.
pub fn multiplicity_of(slice: &ComplexSlice, lambda: CartanWeight) -> usize {
    let idx = slice.weight_subspace(lambda);
    if idx.is_empty() {
        return 0;
    }
    idx.len() - stacked_raising(slice, lambda).rank()
}

/// Basis of the trivial isotypic component of a slice.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    pub n: u8,
    pub weight: u32,
    pub degree: u32,
    pub min_gen: u32,
    pub vectors: Vec<Cochain>,
}

#[derive(Debug, thiserror::Error)]
#[error(
    "invariant verification failed on slice n={n} w={weight} m={degree}: \
     vector {vector} is not annihilated by quadratic generator {generator}"
)]
pub struct InvariantViolation {
    pub n: u8,
    pub weight: u32,
    pub degree: u32,
    pub vector: usize,
    pub generator: String,
}

/// Highest-weight vectors at weight zero, then verified to be annihilated by
/// every quadratic generator (a weight-0 vector killed by the simple raising
/// operators spans a trivial subrepresentation, so failure here means a
/// convention bug, not bad input).
pub fn invariant_basis(slice: &ComplexSlice) -> Result<InvariantBasis, InvariantViolation> {
    let vectors = highest_weight_vectors(slice, [0, 0]);
    verify_invariants(slice, &vectors)?;
    Ok(InvariantBasis {
        n: slice.n(),
        weight: slice.weight(),
        degree: slice.degree(),
        min_gen: slice.min_gen(),
        vectors,
    })
}

/// Checks that every vector is killed by all quadratic actions.
pub fn verify_invariants(
    slice: &ComplexSlice,
    vectors: &[Cochain],
) -> Result<(), InvariantViolation> {
    let action = SpAction::all_generators(slice);
    for (vi, v) in vectors.iter().enumerate() {
        for k in 0..action.quadratics().len() {
            if !action.on_cochain(k, v).is_zero() {
                return Err(InvariantViolation {
                    n: slice.n(),
                    weight: slice.weight(),
                    degree: slice.degree(),
                    vector: vi,
                    generator: action.quadratics()[k].to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Irreducible decomposition of a slice by highest-weight counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicReport {
    pub n: u8,
    pub weight: u32,
    pub degree: u32,
    pub min_gen: u32,
    pub multiplicities: BTreeMap<CartanWeight, u64>,
}

impl IsotypicReport {
    /// `sum multiplicity(lambda) * dim V_lambda`, which must equal the slice
    /// dimension.
    pub fn total_dimension(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(&w, &m)| m * crate::characters::weyl_dim_weight(w, self.n))
            .sum()
    }
}

/// Multiplicity of every dominant weight realized by the slice's weight
/// multiset. The dimension identity is asserted before returning.
pub fn isotypic_report(slice: &ComplexSlice) -> IsotypicReport {
    let dominants: Vec<CartanWeight> = slice
        .weight_buckets()
        .keys()
        .copied()
        .filter(|&w| is_dominant(w, slice.n()))
        .collect();
    let mults = crate::par::map_indexed(dominants.len(), |i| {
        multiplicity_of(slice, dominants[i]) as u64
    });
    let multiplicities: BTreeMap<CartanWeight, u64> = dominants
        .into_iter()
        .zip(mults)
        .filter(|(_, m)| *m > 0)
        .collect();
    let report = IsotypicReport {
        n: slice.n(),
        weight: slice.weight(),
        degree: slice.degree(),
        min_gen: slice.min_gen(),
        multiplicities,
    };
    assert_eq!(
        report.total_dimension(),
        slice.dim() as u64,
        "isotypic dimension identity failed on n={} w={} m={}",
        slice.n(),
        slice.weight(),
        slice.degree()
    );
    report
}
