//! The Poisson algebra of polynomial Hamiltonian potentials on R^(2n) in the
//! factorial-normalized monomial basis, and the quadratic (sp(2n,R)) action
//! on dual generators.
//!
//! A monomial `e_A` is `x_1^{a_1}/a_1! ... x_{2n}^{a_{2n}}/a_{2n}!`; with this
//! normalization the bracket structure constants are the closed two-term (for
//! n = 2) product formula implemented in [`SymplecticStructure::bracket`].
//! Coordinates are conjugate outside-in: `{x_i, x_{2n+1-i}} = 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::Rational;

/// Exponent tuple of a monomial `e_A` or the label of the dual generator
/// `z_A`, length `2n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    exps: Vec<u8>,
}

impl ExponentVector {
    pub fn new(exps: Vec<u8>) -> Self {
        assert!(exps.len() == 2 || exps.len() == 4, "length must be 2n, n in {{1,2}}");
        ExponentVector { exps }
    }

    pub fn from_slice(exps: &[u8]) -> Self {
        ExponentVector::new(exps.to_vec())
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree |A|.
    pub fn total(&self) -> u32 {
        self.exps.iter().map(|&a| u32::from(a)).sum()
    }

    /// Cartan weight of the monomial `e_A` under the adjoint action of the
    /// tagged Cartan pair: `(a_{2n} - a_1, a_{2n-1} - a_2)` for n = 2 and
    /// `(a_2 - a_1, 0)` for n = 1. Dual generators `z_A` carry the same
    /// label under the coadjoint action.
    pub fn cartan_weight(&self) -> [i32; 2] {
        let e = &self.exps;
        match e.len() {
            2 => [i32::from(e[1]) - i32::from(e[0]), 0],
            4 => [
                i32::from(e[3]) - i32::from(e[0]),
                i32::from(e[2]) - i32::from(e[1]),
            ],
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Renders `z_A` in the superscripted appendix notation: for n = 2,
/// `z_{i,j,k,l}` prints as `Z^{q}_{ijk}` with `q = i+j+k+l`.
pub fn z_notation(a: &ExponentVector) -> String {
    match a.exps() {
        [i, j, k, _] => format!("Z^{{{}}}_{{{}{}{}}}", a.total(), i, j, k),
        [i, j] => format!("z_{{{}{}}}", i, j),
        _ => unreachable!(),
    }
}

/// Sparse polynomial in the `e_A` basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyElement {
    terms: BTreeMap<ExponentVector, Rational>,
}

impl PolyElement {
    pub fn zero() -> Self {
        PolyElement::default()
    }

    pub fn term(a: ExponentVector, c: Rational) -> Self {
        let mut p = PolyElement::default();
        p.add_term(a, c);
        p
    }

    pub fn add_term(&mut self, a: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(a);
        match entry {
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

    pub fn add(&self, other: &PolyElement) -> PolyElement {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> PolyElement {
        if c.is_zero() {
            return PolyElement::zero();
        }
        PolyElement {
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &ExponentVector) -> Rational {
        self.terms.get(a).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unsupported half-dimension n={0}; only n = 1, 2 are implemented")]
pub struct UnsupportedRank(pub u8);

/// The symplectic form on R^(2n) fixed by `omega(d/dx_i, d/dx_{2n+1-i}) = 1`
/// for i <= n (for n = 2 this is the Darboux relabeling `x_4 = y_1`,
/// `x_3 = y_2`).
#[derive(Clone, Debug)]
pub struct SymplecticStructure {
    n: u8,
    pairs: Vec<(usize, usize)>,
}

impl SymplecticStructure {
    pub fn new(n: u8) -> Result<Self, UnsupportedRank> {
        if n != 1 && n != 2 {
            return Err(UnsupportedRank(n));
        }
        let vars = 2 * usize::from(n);
        Ok(SymplecticStructure {
            n,
            pairs: (0..usize::from(n)).map(|i| (i, vars - 1 - i)).collect(),
        })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        2 * usize::from(self.n)
    }

    /// Conjugate index pairs (i, i-bar) with `omega(d_i, d_{i-bar}) = 1`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// All exponent vectors of total degree `deg`, lexicographically
    /// ascending. This ordering defines generator indices everywhere.
    pub fn monomials(&self, deg: u32) -> Vec<ExponentVector> {
        let vars = self.num_vars();
        let mut out = Vec::new();
        let mut acc = vec![0u8; vars];
        fn rec(pos: usize, left: u32, acc: &mut Vec<u8>, out: &mut Vec<ExponentVector>) {
            if pos + 1 == acc.len() {
                acc[pos] = left as u8;
                out.push(ExponentVector::new(acc.clone()));
                return;
            }
            for a in 0..=left {
                acc[pos] = a as u8;
                rec(pos + 1, left - a, acc, out);
            }
        }
        rec(0, deg, &mut acc, &mut out);
        out.sort();
        out
    }

    /// Poisson bracket of two normalized monomials,
    /// `{e_A, e_B} = sum_i (a_i b_ibar - a_ibar b_i) * (multinomial factors) * e_{A+B-e_i-e_ibar}`.
    pub fn bracket(&self, a: &ExponentVector, b: &ExponentVector) -> PolyElement {
        assert_eq!(a.num_vars(), self.num_vars());
        assert_eq!(b.num_vars(), self.num_vars());
        let mut out = PolyElement::zero();
        for &(i, ibar) in &self.pairs {
            let coef = i64::from(a.exps[i]) * i64::from(b.exps[ibar])
                - i64::from(a.exps[ibar]) * i64::from(b.exps[i]);
            if coef == 0 {
                continue;
            }
            let mut exps = Vec::with_capacity(a.num_vars());
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for j in 0..a.num_vars() {
                let (aj, bj) = (u32::from(a.exps[j]), u32::from(b.exps[j]));
                let drop = u32::from(j == i || j == ibar);
                exps.push((aj + bj - drop) as u8);
                num *= factorial(aj + bj - drop);
                den *= factorial(aj) * factorial(bj);
            }
            let c = Rational::new(num * BigInt::from(coef), den);
            out.add_term(ExponentVector::new(exps), c);
        }
        out
    }

    /// Bilinear extension of the bracket.
    pub fn bracket_poly(&self, f: &PolyElement, g: &PolyElement) -> PolyElement {
        let mut out = PolyElement::zero();
        for (a, ca) in f.iter() {
            for (b, cb) in g.iter() {
                let t = self.bracket(a, b).scaled(&(ca * cb));
                out = out.add(&t);
            }
        }
        out
    }

    /// Degree-preserving action of the quadratic `e_D` on the dual generator
    /// `z_C`, defined by `<xi . z_C, e_A> = -<z_C, {e_D, e_A}>`. At most one
    /// term per conjugate pair.
    pub fn coadjoint_on_dual(
        &self,
        d: &ExponentVector,
        c: &ExponentVector,
    ) -> Vec<(ExponentVector, Rational)> {
        assert_eq!(d.total(), 2, "the action is defined for quadratics");
        let mut out = Vec::with_capacity(self.pairs.len());
        'pairs: for &(i, ibar) in &self.pairs {
            // candidate A with {e_D, e_A} hitting e_C through this pair
            let mut a = Vec::with_capacity(c.num_vars());
            for j in 0..c.num_vars() {
                let lift = i32::from(j == i || j == ibar);
                let v = i32::from(c.exps[j]) + lift - i32::from(d.exps[j]);
                if !(0..=255).contains(&v) {
                    continue 'pairs;
                }
                a.push(v as u8);
            }
            let a = ExponentVector::new(a);
            let coef = i64::from(d.exps[i]) * i64::from(a.exps[ibar])
                - i64::from(d.exps[ibar]) * i64::from(a.exps[i]);
            if coef == 0 {
                continue;
            }
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for j in 0..c.num_vars() {
                let (dj, aj) = (u32::from(d.exps[j]), u32::from(a.exps[j]));
                let drop = u32::from(j == i || j == ibar);
                num *= factorial(dj + aj - drop);
                den *= factorial(dj) * factorial(aj);
            }
            out.push((a, -Rational::new(num * BigInt::from(coef), den)));
        }
        out
    }

    /// Cartan-weight shift of the coadjoint action of `e_D`: the action maps
    /// the weight-nu subspace into weight `nu + shift`.
    pub fn coadjoint_shift(&self, d: &ExponentVector) -> [i32; 2] {
        let w = d.cartan_weight();
        [-w[0], -w[1]]
    }
}

/// The quadratic generators of sp(2n,R) with the tagged Cartan pair and
/// simple raising elements.
#[derive(Clone, Debug)]
pub struct SpGenerators {
    pub quadratics: Vec<ExponentVector>,
    pub cartan: Vec<ExponentVector>,
    pub raising: Vec<ExponentVector>,
}

/// The `2n^2 + n` quadratic monomials spanning sp(2n) under the bracket.
/// For n = 2 the Cartan pair is `(x1 x4, x2 x3)` and the coadjoint actions
/// of `x1 x3` and `x2^2 / 2` raise module weights by the simple roots
/// `(1,-1)` and `(0,2)`.
pub fn sp_generators(symp: &SymplecticStructure) -> SpGenerators {
    let quadratics = symp.monomials(2);
    debug_assert_eq!(
        quadratics.len(),
        2 * usize::from(symp.n()) * usize::from(symp.n()) + usize::from(symp.n())
    );
    let ev = |s: &[u8]| ExponentVector::from_slice(s);
    match symp.n() {
        1 => SpGenerators {
            quadratics,
            cartan: vec![ev(&[1, 1])],
            raising: vec![ev(&[2, 0])],
        },
        2 => SpGenerators {
            quadratics,
            cartan: vec![ev(&[1, 0, 0, 1]), ev(&[0, 1, 1, 0])],
            raising: vec![ev(&[1, 0, 1, 0]), ev(&[0, 2, 0, 0])],
        },
        _ => unreachable!(),
    }
}

pub(crate) fn factorial(n: u32) -> BigInt {
    let mut out = BigInt::one();
    for k in 2..=u64::from(n) {
        out *= k;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn ev(s: &[u8]) -> ExponentVector {
        ExponentVector::from_slice(s)
    }

    fn sp4() -> SymplecticStructure {
        SymplecticStructure::new(2).unwrap()
    }

    #[test]
    fn rejects_unsupported_rank() {
        assert!(SymplecticStructure::new(0).is_err());
        assert!(SymplecticStructure::new(3).is_err());
    }

    #[test]
    fn monomial_counts() {
        let symp = sp4();
        for (q, dim) in [(2u32, 10usize), (3, 20), (4, 35), (5, 56), (8, 165)] {
            assert_eq!(symp.monomials(q).len(), dim);
        }
        let symp1 = SymplecticStructure::new(1).unwrap();
        assert_eq!(symp1.monomials(3).len(), 4);
    }

    #[test]
    fn bracket_basic_identities() {
        let symp = sp4();
        // {x_i, y_j} = delta_ij
        let b = symp.bracket(&ev(&[1, 0, 0, 0]), &ev(&[0, 0, 0, 1]));
        assert_eq!(b, PolyElement::term(ev(&[0, 0, 0, 0]), rat(1)));
        let b = symp.bracket(&ev(&[1, 0, 0, 0]), &ev(&[0, 0, 1, 0]));
        assert!(b.is_zero());
        // {x1^2/2, x4^2/2} = x1 x4
        let b = symp.bracket(&ev(&[2, 0, 0, 0]), &ev(&[0, 0, 0, 2]));
        assert_eq!(b, PolyElement::term(ev(&[1, 0, 0, 1]), rat(1)));
        // antisymmetry on equal arguments
        assert!(symp.bracket(&ev(&[2, 1, 0, 0]), &ev(&[2, 1, 0, 0])).is_zero());
    }

    #[test]
    fn bracket_antisymmetry_exhaustive_small() {
        let symp = sp4();
        let mut all = Vec::new();
        for d in 0..=6 {
            all.extend(symp.monomials(d));
        }
        for a in &all {
            for b in &all {
                let ab = symp.bracket(a, b);
                let ba = symp.bracket(b, a);
                assert_eq!(ab, ba.scaled(&rat(-1)), "antisymmetry at {a} {b}");
            }
        }
    }

    #[test]
    fn bracket_weight_grading() {
        // weight(e_A) = |A| - 2 is additive under the bracket
        let symp = sp4();
        let mut all = Vec::new();
        for d in 2..=5 {
            all.extend(symp.monomials(d));
        }
        for a in all.iter().step_by(3) {
            for b in all.iter().step_by(5) {
                let w = i64::from(a.total()) - 2 + i64::from(b.total()) - 2;
                for (m, _) in symp.bracket(a, b).iter() {
                    assert_eq!(i64::from(m.total()) - 2, w);
                }
            }
        }
    }

    #[test]
    fn jacobi_identity_sample() {
        let symp = sp4();
        let mut pool = Vec::new();
        for d in 0..=5 {
            pool.extend(symp.monomials(d));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(20240613);
        for _ in 0..120 {
            let a = PolyElement::term(pool.choose(&mut rng).unwrap().clone(), rat(1));
            let b = PolyElement::term(pool.choose(&mut rng).unwrap().clone(), rat(1));
            let c = PolyElement::term(pool.choose(&mut rng).unwrap().clone(), rat(1));
            let j = symp
                .bracket_poly(&a, &symp.bracket_poly(&b, &c))
                .add(&symp.bracket_poly(&b, &symp.bracket_poly(&c, &a)))
                .add(&symp.bracket_poly(&c, &symp.bracket_poly(&a, &b)));
            assert!(j.is_zero(), "jacobi failed");
        }
    }

    #[test]
    fn quadratics_close_and_cartan_commutes() {
        let symp = sp4();
        let gens = sp_generators(&symp);
        assert_eq!(gens.quadratics.len(), 10);
        for a in &gens.quadratics {
            for b in &gens.quadratics {
                for (m, _) in symp.bracket(a, b).iter() {
                    assert_eq!(m.total(), 2, "{{{a}, {b}}} leaves the quadratics");
                }
            }
        }
        assert!(symp
            .bracket(&gens.cartan[0], &gens.cartan[1])
            .is_zero());

        let symp1 = SymplecticStructure::new(1).unwrap();
        assert_eq!(sp_generators(&symp1).quadratics.len(), 3);
    }

    #[test]
    fn cartan_eigenvalues() {
        // {x1 x4, e_A} = (a4 - a1) e_A
        let symp = sp4();
        let h1 = ev(&[1, 0, 0, 1]);
        for a in symp.monomials(4) {
            let b = symp.bracket(&h1, &a);
            let expect = i64::from(a.exps()[3]) - i64::from(a.exps()[0]);
            assert_eq!(b, PolyElement::term(a.clone(), rat(expect)));
            assert_eq!(i64::from(a.cartan_weight()[0]), expect);
        }
    }

    #[test]
    fn coadjoint_matches_brute_force_pairing() {
        // <xi . z_C, e_A> = -<z_C, {e_D, e_A}> checked against a full scan
        let symp = sp4();
        let gens = sp_generators(&symp);
        for c in symp.monomials(3) {
            for d in &gens.quadratics {
                let fast: BTreeMap<_, _> = symp.coadjoint_on_dual(d, &c).into_iter().collect();
                let mut slow: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
                for a in symp.monomials(3) {
                    let v = -symp.bracket(d, &a).coeff(&c);
                    if !v.is_zero() {
                        slow.insert(a, v);
                    }
                }
                assert_eq!(fast, slow, "coadjoint mismatch for D={d} C={c}");
            }
        }
    }

    #[test]
    fn coadjoint_examples() {
        let symp = sp4();
        // Cartan action is diagonal with the dual weight
        let h1 = ev(&[1, 0, 0, 1]);
        let c = ev(&[0, 1, 2, 2]);
        let act = symp.coadjoint_on_dual(&h1, &c);
        assert_eq!(act, vec![(c.clone(), rat(-2))]); // a1 - a4 = -2
        // the first raising element moves z_{(1,0,1,1)} up by (1,-1)
        let r1 = ev(&[1, 0, 1, 0]);
        let act: BTreeMap<_, _> = symp
            .coadjoint_on_dual(&r1, &ev(&[1, 0, 1, 1]))
            .into_iter()
            .collect();
        let expect: BTreeMap<_, _> = [
            (ev(&[1, 0, 0, 2]), rat(-1)),
            (ev(&[0, 1, 1, 1]), rat(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(act, expect);
        // a generator with no admissible shift acts by zero
        assert!(symp.coadjoint_on_dual(&ev(&[0, 2, 0, 0]), &ev(&[0, 0, 2, 1])).is_empty());
    }

    #[test]
    fn coadjoint_shifts_are_simple_roots_on_raising() {
        let symp = sp4();
        let gens = sp_generators(&symp);
        assert_eq!(symp.coadjoint_shift(&gens.raising[0]), [1, -1]);
        assert_eq!(symp.coadjoint_shift(&gens.raising[1]), [0, 2]);
        assert_eq!(symp.coadjoint_shift(&gens.cartan[0]), [0, 0]);
    }

    #[test]
    fn z_notation_matches_appendix_style() {
        assert_eq!(z_notation(&ev(&[1, 1, 2, 1])), "Z^{5}_{112}");
        assert_eq!(z_notation(&ev(&[0, 0, 0, 3])), "Z^{3}_{000}");
    }
}
