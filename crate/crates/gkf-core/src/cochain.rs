//! Wedge-monomial bases of the fixed-weight cochain spaces and the exact
//! coboundary operator between them.
//!
//! A dual generator `z_C` (|C| = q) has weight q - 2; the degree-m, weight-w
//! slice is spanned by wedges whose factor degrees realize one of the shapes
//! from [`crate::partitions::shapes_for`]. Generators are totally ordered by
//! (degree, lexicographic exponents); wedge monomials keep their factors
//! strictly sorted and carry permutation signs into that canonical order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::{Rational, SparseRationalMatrix, SparseVector};
use crate::partitions::{shapes_for, CochainShape};
use crate::poisson::{factorial, ExponentVector, SymplecticStructure, UnsupportedRank};

/// A dual generator `z_C`, referenced by homogeneity degree and position in
/// the lexicographic enumeration of that degree. The derived `Ord` is the
/// canonical generator order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenRef {
    pub degree: u8,
    pub index: u16,
}

/// Lookup tables for the dual generators of every degree up to a bound.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    symp: SymplecticStructure,
    max_degree: u32,
    by_degree: Vec<Vec<ExponentVector>>,
    index: Vec<BTreeMap<ExponentVector, u16>>,
    weights: Vec<Vec<[i32; 2]>>,
}

impl GeneratorTable {
    pub fn new(symp: SymplecticStructure, max_degree: u32) -> Self {
        let mut by_degree = Vec::with_capacity(max_degree as usize + 1);
        let mut index = Vec::with_capacity(max_degree as usize + 1);
        let mut weights = Vec::with_capacity(max_degree as usize + 1);
        for q in 0..=max_degree {
            let gens = symp.monomials(q);
            assert!(gens.len() <= usize::from(u16::MAX));
            index.push(
                gens.iter()
                    .enumerate()
                    .map(|(i, g)| (g.clone(), i as u16))
                    .collect(),
            );
            weights.push(gens.iter().map(ExponentVector::cartan_weight).collect());
            by_degree.push(gens);
        }
        GeneratorTable {
            symp,
            max_degree,
            by_degree,
            index,
            weights,
        }
    }

    pub fn symplectic(&self) -> &SymplecticStructure {
        &self.symp
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn generators(&self, degree: u32) -> &[ExponentVector] {
        &self.by_degree[degree as usize]
    }

    pub fn dim(&self, degree: u32) -> usize {
        self.by_degree[degree as usize].len()
    }

    pub fn exponents(&self, g: GenRef) -> &ExponentVector {
        &self.by_degree[g.degree as usize][g.index as usize]
    }

    pub fn gen_ref(&self, c: &ExponentVector) -> GenRef {
        let degree = c.total();
        let index = self.index[degree as usize][c];
        GenRef {
            degree: degree as u8,
            index,
        }
    }

    pub fn weight_of(&self, g: GenRef) -> [i32; 2] {
        self.weights[g.degree as usize][g.index as usize]
    }
}

/// Strictly sorted wedge of dual generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeMonomial {
    factors: Vec<GenRef>,
}

impl WedgeMonomial {
    /// Builds from already strictly sorted factors.
    pub fn new(factors: Vec<GenRef>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] < w[1]));
        WedgeMonomial { factors }
    }

    /// Sorts `factors` into canonical order; `None` if a generator repeats
    /// (odd generators square to zero), otherwise the permutation sign.
    pub fn sort_canonical(mut factors: Vec<GenRef>) -> Option<(WedgeMonomial, i32)> {
        let mut sign = 1;
        for i in 1..factors.len() {
            let mut j = i;
            while j > 0 && factors[j - 1] > factors[j] {
                factors.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if factors.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((WedgeMonomial { factors }, sign))
    }

    pub fn factors(&self) -> &[GenRef] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn weight(&self) -> u32 {
        self.factors
            .iter()
            .map(|g| u32::from(g.degree) - 2)
            .sum()
    }

    pub fn cartan_weight(&self, table: &GeneratorTable) -> [i32; 2] {
        let mut w = [0i32; 2];
        for g in &self.factors {
            let gw = table.weight_of(*g);
            w[0] += gw[0];
            w[1] += gw[1];
        }
        w
    }
}

/// Sparse rational combination of wedge monomials, homogeneous in degree and
/// weight by construction everywhere it is produced.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cochain {
    terms: BTreeMap<WedgeMonomial, Rational>,
}

impl Cochain {
    pub fn zero() -> Self {
        Cochain::default()
    }

    pub fn term(w: WedgeMonomial, c: Rational) -> Self {
        let mut out = Cochain::zero();
        out.add_term(w, c);
        out
    }

    pub fn add_term(&mut self, w: WedgeMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Cochain, c: &Rational) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Cochain {
        if c.is_zero() {
            return Cochain::zero();
        }
        Cochain {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WedgeMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &WedgeMonomial) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }
}

/// The degree-m, weight-w cochain space with its enumerated basis.
#[derive(Clone, Debug)]
pub struct ComplexSlice {
    weight: u32,
    degree: u32,
    min_gen: u32,
    shapes: Vec<CochainShape>,
    table: GeneratorTable,
    basis: Vec<WedgeMonomial>,
    weight_buckets: BTreeMap<[i32; 2], Vec<usize>>,
}

/// Enumerates the basis of `C^m|_w` for `R^(2n)`. Deterministic: shapes in
/// canonical order are expanded and the union sorted by the generator order.
pub fn slice(n: u8, weight: u32, degree: u32, min_gen: u32) -> Result<ComplexSlice, UnsupportedRank> {
    let shapes = shapes_for(weight, degree, min_gen);
    slice_for_shapes(n, weight, degree, min_gen, shapes)
}

/// The subspace spanned by a single shape, e.g. the `Λ²S₃ ⊗ Λ²S₄` summand of
/// `C^4|_6`. Shapes are subrepresentations, so the action and decomposition
/// machinery applies unchanged.
pub fn shape_slice(n: u8, shape: &CochainShape) -> Result<ComplexSlice, UnsupportedRank> {
    slice_for_shapes(
        n,
        shape.weight(),
        shape.degree(),
        shape.min_gen(),
        vec![shape.clone()],
    )
}

fn slice_for_shapes(
    n: u8,
    weight: u32,
    degree: u32,
    min_gen: u32,
    shapes: Vec<CochainShape>,
) -> Result<ComplexSlice, UnsupportedRank> {
    let symp = SymplecticStructure::new(n)?;
    let max_degree = shapes
        .iter()
        .map(CochainShape::max_degree_used)
        .max()
        .unwrap_or(2)
        .max(2);
    let table = GeneratorTable::new(symp, max_degree);

    let mut basis: Vec<WedgeMonomial> = Vec::new();
    for shape in &shapes {
        let before = basis.len();
        expand_shape(&table, shape, &mut basis);
        let expect: usize = shape
            .factors()
            .map(|(q, k)| binomial(table.dim(q), k as usize))
            .product();
        assert_eq!(basis.len() - before, expect, "shape dimension formula");
    }
    basis.sort_unstable();
    debug_assert!(basis.windows(2).all(|w| w[0] < w[1]));

    let mut weight_buckets: BTreeMap<[i32; 2], Vec<usize>> = BTreeMap::new();
    for (i, w) in basis.iter().enumerate() {
        weight_buckets.entry(w.cartan_weight(&table)).or_default().push(i);
    }

    Ok(ComplexSlice {
        weight,
        degree,
        min_gen,
        shapes,
        table,
        basis,
        weight_buckets,
    })
}

fn expand_shape(table: &GeneratorTable, shape: &CochainShape, out: &mut Vec<WedgeMonomial>) {
    let pools: Vec<(u32, u32)> = shape.factors().collect();
    let mut current: Vec<GenRef> = Vec::with_capacity(shape.degree() as usize);
    fn rec(
        table: &GeneratorTable,
        pools: &[(u32, u32)],
        current: &mut Vec<GenRef>,
        out: &mut Vec<WedgeMonomial>,
    ) {
        match pools.split_first() {
            None => out.push(WedgeMonomial::new(current.clone())),
            Some((&(q, k), rest)) => {
                let dim = table.dim(q) as u16;
                combinations(dim, k as usize, &mut |combo| {
                    let before = current.len();
                    current.extend(combo.iter().map(|&index| GenRef {
                        degree: q as u8,
                        index,
                    }));
                    rec(table, rest, current, out);
                    current.truncate(before);
                });
            }
        }
    }
    rec(table, &pools, &mut current, out);
}

/// Calls `f` on every strictly increasing k-tuple from `0..n`, lexicographic.
fn combinations(n: u16, k: usize, f: &mut impl FnMut(&[u16])) {
    let mut combo: Vec<u16> = (0..k as u16).collect();
    if k > usize::from(n) {
        return;
    }
    loop {
        f(&combo);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if combo[i] < n - (k - i) as u16 {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out as usize
}

impl ComplexSlice {
    pub fn n(&self) -> u8 {
        self.table.symplectic().n()
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn min_gen(&self) -> u32 {
        self.min_gen
    }

    pub fn shapes(&self) -> &[CochainShape] {
        &self.shapes
    }

    pub fn table(&self) -> &GeneratorTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[WedgeMonomial] {
        &self.basis
    }

    pub fn index_of(&self, w: &WedgeMonomial) -> Option<usize> {
        self.basis.binary_search(w).ok()
    }

    /// Indices grouped by Cartan weight, each ascending.
    pub fn weight_buckets(&self) -> &BTreeMap<[i32; 2], Vec<usize>> {
        &self.weight_buckets
    }

    pub fn weight_subspace(&self, w: [i32; 2]) -> &[usize] {
        self.weight_buckets.get(&w).map_or(&[], Vec::as_slice)
    }

    /// Cochain supported on this slice as a coordinate vector.
    pub fn to_vector(&self, c: &Cochain) -> SparseVector {
        SparseVector::from_entries(
            self.dim(),
            c.iter().map(|(w, v)| {
                let i = self
                    .index_of(w)
                    .unwrap_or_else(|| panic!("wedge monomial outside slice basis"));
                (i, v.clone())
            }),
        )
    }

    pub fn from_vector(&self, v: &SparseVector) -> Cochain {
        assert_eq!(v.dim(), self.dim());
        let mut out = Cochain::zero();
        for (i, c) in v.iter() {
            out.add_term(self.basis[i].clone(), c.clone());
        }
        out
    }
}

/// The coboundary on generators, tabulated once per (table, threshold).
///
/// `d z_C` is the sum over admissible splits `A + B = C + shift` (one shift
/// per conjugate coordinate pair) of `-(a_i b_ibar - a_ibar b_i) C!/(A! B!)
/// z_A wedge z_B`, each unordered pair counted once; splits with
/// `|A| < min_gen` or `|B| < min_gen` are dropped.
pub struct Coboundary {
    min_gen: u32,
    images: Vec<Vec<Cochain>>, // [degree][index]
}

impl Coboundary {
    pub fn new(table: &GeneratorTable, min_gen: u32) -> Self {
        let images = (0..=table.max_degree())
            .map(|q| {
                table
                    .generators(q)
                    .iter()
                    .map(|c| d_generator(table, c, min_gen))
                    .collect()
            })
            .collect();
        Coboundary { min_gen, images }
    }

    pub fn min_gen(&self) -> u32 {
        self.min_gen
    }

    pub fn of_generator(&self, g: GenRef) -> &Cochain {
        &self.images[g.degree as usize][g.index as usize]
    }

    /// Odd Leibniz extension to a wedge monomial.
    pub fn of_wedge(&self, w: &WedgeMonomial) -> Cochain {
        let mut out = Cochain::zero();
        for (pos, g) in w.factors().iter().enumerate() {
            let sign = if pos % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            for (pair, c) in self.of_generator(*g).iter() {
                let mut factors = Vec::with_capacity(w.degree() + 1);
                factors.extend_from_slice(&w.factors()[..pos]);
                factors.extend_from_slice(pair.factors());
                factors.extend_from_slice(&w.factors()[pos + 1..]);
                if let Some((sorted, s)) = WedgeMonomial::sort_canonical(factors) {
                    out.add_term(sorted, c * &sign * Rational::from_integer(BigInt::from(s)));
                }
            }
        }
        out
    }

    pub fn of_cochain(&self, c: &Cochain) -> Cochain {
        let mut out = Cochain::zero();
        for (w, v) in c.iter() {
            let dw = self.of_wedge(w);
            out.add_scaled(&dw, v);
        }
        out
    }
}

/// Coboundary of a single dual generator (degree-2 cochain).
pub fn d_generator(table: &GeneratorTable, c: &ExponentVector, min_gen: u32) -> Cochain {
    let symp = table.symplectic();
    let vars = symp.num_vars();
    let mut c_fact = BigInt::one();
    for &e in c.exps() {
        c_fact *= factorial(u32::from(e));
    }
    let mut out = Cochain::zero();
    for &(i, ibar) in symp.pairs() {
        // E = C + e_i + e_ibar; split E = A + B
        let mut e = c.exps().to_vec();
        e[i] += 1;
        e[ibar] += 1;
        let total: u32 = c.total() + 2;
        let mut a = vec![0u8; vars];
        split_rec(&e, 0, &mut a, &mut |a_exps| {
            let sa: u32 = a_exps.iter().map(|&x| u32::from(x)).sum();
            let sb = total - sa;
            if sa < min_gen || sb < min_gen {
                return;
            }
            let b_exps: Vec<u8> = e.iter().zip(a_exps).map(|(&e, &a)| e - a).collect();
            // each unordered pair once: keep A strictly below B in generator order
            if (sa, a_exps) >= (sb, &b_exps[..]) {
                return;
            }
            let coef = i64::from(a_exps[i]) * i64::from(b_exps[ibar])
                - i64::from(a_exps[ibar]) * i64::from(b_exps[i]);
            if coef == 0 {
                return;
            }
            let mut den = BigInt::one();
            for j in 0..vars {
                den *= factorial(u32::from(a_exps[j])) * factorial(u32::from(b_exps[j]));
            }
            let t = -Rational::new(&c_fact * BigInt::from(coef), den);
            let ga = table.gen_ref(&ExponentVector::from_slice(a_exps));
            let gb = table.gen_ref(&ExponentVector::from_slice(&b_exps));
            debug_assert!(ga < gb);
            out.add_term(WedgeMonomial::new(vec![ga, gb]), t);
        });
    }
    out
}

fn split_rec(e: &[u8], pos: usize, a: &mut Vec<u8>, f: &mut impl FnMut(&[u8])) {
    if pos == e.len() {
        f(a);
        return;
    }
    for v in 0..=e[pos] {
        a[pos] = v;
        split_rec(e, pos + 1, a, f);
    }
}

/// Matrix of the coboundary in the enumerated bases: column j is
/// `d(from.basis[j])` expressed in `to`.
pub fn d_matrix(from: &ComplexSlice, to: &ComplexSlice) -> SparseRationalMatrix {
    assert_eq!(from.n(), to.n());
    assert_eq!(from.weight(), to.weight(), "coboundary preserves the weight");
    assert_eq!(from.min_gen(), to.min_gen());
    assert_eq!(from.degree() + 1, to.degree());
    let d = Coboundary::new(from.table(), from.min_gen());
    let columns = crate::par::map_indexed(from.dim(), |j| {
        let image = d.of_wedge(&from.basis()[j]);
        SparseVector::from_entries(
            to.dim(),
            image.iter().map(|(w, v)| {
                debug_assert_eq!(w.weight(), to.weight());
                let i = to
                    .index_of(w)
                    .unwrap_or_else(|| panic!("d image leaves the target slice"));
                (i, v.clone())
            }),
        )
    });
    SparseRationalMatrix::from_columns(to.dim(), columns)
}

/// Pretty-prints a cochain in the appendix notation, e.g.
/// `6 Z^{5}_{112}∧Z^{5}_{121} + 1/10 Z^{5}_{000}∧Z^{5}_{500}`.
pub fn render_cochain(table: &GeneratorTable, c: &Cochain) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, v)) in c.iter().enumerate() {
        if i > 0 {
            out.push_str(if v.is_negative() { " - " } else { " + " });
        } else if v.is_negative() {
            out.push('-');
        }
        let a = v.abs();
        if !a.is_one() || w.factors().is_empty() {
            let _ = write!(out, "{a} ");
        }
        for (k, g) in w.factors().iter().enumerate() {
            if k > 0 {
                out.push('∧');
            }
            out.push_str(&crate::poisson::z_notation(table.exponents(*g)));
        }
    }
    out
}

use num_traits::Signed;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn ev(s: &[u8]) -> ExponentVector {
        ExponentVector::from_slice(s)
    }

    #[test]
    fn slice_dimensions() {
        assert_eq!(slice(2, 2, 2, 3).unwrap().dim(), 190);
        assert_eq!(slice(2, 2, 1, 3).unwrap().dim(), 35);
        assert_eq!(slice(2, 6, 4, 3).unwrap().dim(), 176_890); // 63840 + 113050
        assert_eq!(slice(1, 6, 6, 3).unwrap().dim(), 0);
        assert_eq!(slice(2, 4, 0, 3).unwrap().dim(), 0);
    }

    #[test]
    fn slice_weight_buckets_partition_basis() {
        let s = slice(2, 4, 2, 3).unwrap();
        let total: usize = s.weight_buckets().values().map(Vec::len).sum();
        assert_eq!(total, s.dim());
        // no cubic factor exceeds Cartan weight 3 per factor
        for w in s.weight_buckets().keys() {
            assert!(w[0].abs() <= 3 * 2 + 2);
        }
    }

    #[test]
    fn d_generator_low_degree_vanishes() {
        let symp = SymplecticStructure::new(2).unwrap();
        let table = GeneratorTable::new(symp, 5);
        for c in table.generators(3) {
            assert!(d_generator(&table, c, 3).is_zero());
        }
    }

    #[test]
    fn d_generator_golden_example() {
        // d z_{(2,0,0,2)} at min_gen 3, confirmed against the split
        // enumeration of the bracket pairing
        let symp = SymplecticStructure::new(2).unwrap();
        let table = GeneratorTable::new(symp, 4);
        let d = d_generator(&table, &ev(&[2, 0, 0, 2]), 3);
        let term = |a: &[u8], b: &[u8]| {
            WedgeMonomial::new(vec![table.gen_ref(&ev(a)), table.gen_ref(&ev(b))])
        };
        let mut expect = Cochain::zero();
        expect.add_term(term(&[0, 0, 0, 3], &[3, 0, 0, 0]), rat(1));
        expect.add_term(term(&[0, 0, 1, 2], &[2, 1, 0, 0]), rat(1));
        expect.add_term(term(&[0, 1, 0, 2], &[2, 0, 1, 0]), rat(-1));
        expect.add_term(term(&[1, 0, 0, 2], &[2, 0, 0, 1]), rat(3));
        expect.add_term(term(&[1, 0, 1, 1], &[1, 1, 0, 1]), rat(4));
        assert_eq!(d, expect);
    }

    #[test]
    fn d_generator_agrees_with_bilinear_pairing() {
        // d z_C(e_A, e_B) = -<z_C, {e_A, e_B}> for a scan of generators
        let symp = SymplecticStructure::new(2).unwrap();
        let table = GeneratorTable::new(symp.clone(), 6);
        for c in table.generators(6).iter().step_by(7) {
            let d = d_generator(&table, c, 2);
            let mut all = Vec::new();
            for q in 2..=4u32 {
                all.extend(table.generators(q).iter().cloned());
            }
            for a in &all {
                for b in &all {
                    let ga = table.gen_ref(a);
                    let gb = table.gen_ref(b);
                    // evaluate the wedge cochain as a bilinear form
                    let value = if ga == gb {
                        Rational::zero()
                    } else if ga < gb {
                        d.coeff(&WedgeMonomial::new(vec![ga, gb]))
                    } else {
                        -d.coeff(&WedgeMonomial::new(vec![gb, ga]))
                    };
                    let expect = -symp.bracket(a, b).coeff(c);
                    assert_eq!(value, expect, "pairing at C={c} A={a} B={b}");
                }
            }
        }
    }

    #[test]
    fn d_image_preserves_weight_and_degree() {
        let symp = SymplecticStructure::new(2).unwrap();
        let table = GeneratorTable::new(symp, 8);
        for q in 4..=8u32 {
            for c in table.generators(q).iter().step_by(11) {
                let d = d_generator(&table, c, 3);
                for (w, _) in d.iter() {
                    assert_eq!(w.weight(), q - 2);
                    assert_eq!(w.degree(), 2);
                }
            }
        }
    }

    #[test]
    fn d_matrix_shape_and_d_squared_small() {
        let c1 = slice(2, 2, 1, 3).unwrap();
        let c2 = slice(2, 2, 2, 3).unwrap();
        let c3 = slice(2, 2, 3, 3).unwrap();
        let d1 = d_matrix(&c1, &c2);
        assert_eq!((d1.n_rows(), d1.n_cols()), (190, 35));
        let d2 = d_matrix(&c2, &c3);
        assert!(d2.mul_mat(&d1).is_zero());
        assert_eq!(d2.n_cols(), 190);
        assert_eq!(d2.n_rows(), 0); // no weight-2 cochains of degree 3
    }

    #[test]
    fn d_squared_zero_weight_four() {
        for m in 1..=4u32 {
            let from = slice(2, 4, m, 3).unwrap();
            let mid = slice(2, 4, m + 1, 3).unwrap();
            let to = slice(2, 4, m + 2, 3).unwrap();
            let a = d_matrix(&from, &mid);
            let b = d_matrix(&mid, &to);
            assert!(b.mul_mat(&a).is_zero(), "d^2 != 0 at w=4 m={m}");
        }
    }

    #[test]
    fn render_matches_appendix_notation() {
        let symp = SymplecticStructure::new(2).unwrap();
        let table = GeneratorTable::new(symp, 5);
        let w = WedgeMonomial::new(vec![
            table.gen_ref(&ev(&[1, 1, 2, 1])),
            table.gen_ref(&ev(&[1, 2, 1, 1])),
        ]);
        let c = Cochain::term(w, rat(6));
        assert_eq!(render_cochain(&table, &c), "6 Z^{5}_{112}∧Z^{5}_{121}");
    }
}
