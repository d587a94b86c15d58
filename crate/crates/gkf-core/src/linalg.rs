//! Exact sparse linear algebra over the rationals.
//!
//! Everything here is exact: elimination works on content-normalized integer
//! rows, so re-multiplying a kernel vector into the matrix gives literally
//! zero. Pivot order is fixed (column index, then fewest nonzeros, then
//! smallest leading numerator), which makes ranks and kernel bases
//! reproducible across runs and thread counts.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational scalar, always in lowest terms with a
/// positive denominator (guaranteed by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, thiserror::Error)]
pub enum LinalgError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("entry ({row},{col}) out of bounds for {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
}

/// Sparse vector over the rationals. No zero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector {
            dim,
            entries: Vec::new(),
        }
    }

    /// Builds from (index, value) pairs; duplicate indices are summed and
    /// zeros dropped.
    pub fn from_entries<I: IntoIterator<Item = (usize, Rational)>>(dim: usize, iter: I) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in iter {
            assert!(i < dim, "index {i} out of bounds for dimension {dim}");
            let e = map.entry(i).or_insert_with(Rational::zero);
            *e += v;
        }
        SparseVector {
            dim,
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    /// First stored (lowest-index) entry.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn scaled(&self, c: &Rational) -> SparseVector {
        if c.is_zero() {
            return SparseVector::zero(self.dim);
        }
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// self + c * other
    pub fn axpy(&self, c: &Rational, other: &SparseVector) -> SparseVector {
        assert_eq!(self.dim, other.dim);
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, _)), Some(&&(j, _))) if i == j => {
                    let v = &a.next().unwrap().1 + c * &b.next().unwrap().1;
                    if !v.is_zero() {
                        out.push((i, v));
                    }
                }
                (Some(&&(i, _)), Some(&&(j, _))) if i < j => {
                    out.push((i, a.next().unwrap().1.clone()));
                }
                (Some(_), Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    let v = c * v;
                    if !v.is_zero() {
                        out.push((*j, v));
                    }
                }
                (Some(_), None) => out.push(a.next().map(|(i, v)| (*i, v.clone())).unwrap()),
                (None, Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    let v = c * v;
                    if !v.is_zero() {
                        out.push((*j, v));
                    }
                }
                (None, None) => break,
            }
        }
        SparseVector {
            dim: self.dim,
            entries: out,
        }
    }

    pub fn sub(&self, other: &SparseVector) -> SparseVector {
        self.axpy(&-Rational::one(), other)
    }

    pub fn write_text<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "{} {}", self.dim, self.entries.len())?;
        for (i, v) in &self.entries {
            writeln!(w, "{} {}/{}", i, v.numer(), v.denom())?;
        }
        Ok(())
    }

    pub fn read_text<R: BufRead>(r: &mut R) -> Result<Self, LinalgError> {
        let mut line = String::new();
        let mut lineno = 0;
        read_line(r, &mut line, &mut lineno)?;
        let mut it = line.split_whitespace();
        let dim: usize = parse_tok(&mut it, lineno)?;
        let nnz: usize = parse_tok(&mut it, lineno)?;
        let mut entries = Vec::with_capacity(nnz);
        for _ in 0..nnz {
            read_line(r, &mut line, &mut lineno)?;
            let mut it = line.split_whitespace();
            let i: usize = parse_tok(&mut it, lineno)?;
            let v = parse_rational(&mut it, lineno)?;
            entries.push((i, v));
        }
        Ok(SparseVector::from_entries(dim, entries))
    }
}

/// Immutable sparse matrix over the rationals, stored column-major.
/// Zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    n_rows: usize,
    n_cols: usize,
    cols: Vec<Vec<(usize, Rational)>>,
}

impl SparseRationalMatrix {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        SparseRationalMatrix {
            n_rows,
            n_cols,
            cols: vec![Vec::new(); n_cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseRationalMatrix {
            n_rows: n,
            n_cols: n,
            cols: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    pub fn from_triplets<I>(n_rows: usize, n_cols: usize, iter: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut maps: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); n_cols];
        for (r, c, v) in iter {
            assert!(r < n_rows && c < n_cols, "triplet ({r},{c}) out of bounds");
            let e = maps[c].entry(r).or_insert_with(Rational::zero);
            *e += v;
        }
        SparseRationalMatrix {
            n_rows,
            n_cols,
            cols: maps
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn from_columns(n_rows: usize, columns: Vec<SparseVector>) -> Self {
        for c in &columns {
            assert_eq!(c.dim(), n_rows);
        }
        SparseRationalMatrix {
            n_rows,
            n_cols: columns.len(),
            cols: columns.into_iter().map(|c| c.entries).collect(),
        }
    }

    /// Rows of dense rationals; convenience for small literal matrices.
    pub fn from_dense_rows(rows: &[Vec<Rational>]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        SparseRationalMatrix::from_triplets(
            n_rows,
            n_cols,
            rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn entry(&self, row: usize, col: usize) -> Rational {
        match self.cols[col].binary_search_by_key(&row, |e| e.0) {
            Ok(k) => self.cols[col][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn column(&self, col: usize) -> SparseVector {
        SparseVector {
            dim: self.n_rows,
            entries: self.cols[col].clone(),
        }
    }

    pub fn transpose(&self) -> SparseRationalMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.n_rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        // column-major fill above visits rows in increasing order already
        SparseRationalMatrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            cols,
        }
    }

    pub fn mul_vec(&self, v: &SparseVector) -> SparseVector {
        assert_eq!(v.dim(), self.n_cols);
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (j, c) in v.iter() {
            for (r, m) in &self.cols[j] {
                let e = acc.entry(*r).or_insert_with(Rational::zero);
                *e += m * c;
            }
        }
        SparseVector {
            dim: self.n_rows,
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn mul_mat(&self, other: &SparseRationalMatrix) -> SparseRationalMatrix {
        assert_eq!(self.n_cols, other.n_rows);
        let cols = (0..other.n_cols)
            .map(|j| self.mul_vec(&other.column(j)).entries)
            .collect();
        SparseRationalMatrix {
            n_rows: self.n_rows,
            n_cols: other.n_cols,
            cols,
        }
    }

    /// self + c * other
    pub fn add_scaled(&self, other: &SparseRationalMatrix, c: &Rational) -> SparseRationalMatrix {
        assert_eq!(self.n_rows, other.n_rows);
        assert_eq!(self.n_cols, other.n_cols);
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let va = SparseVector {
                    dim: self.n_rows,
                    entries: a.clone(),
                };
                let vb = SparseVector {
                    dim: self.n_rows,
                    entries: b.clone(),
                };
                va.axpy(c, &vb).entries
            })
            .collect();
        SparseRationalMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            cols,
        }
    }

    /// Vertical stack: self on top of other.
    pub fn stack(&self, other: &SparseRationalMatrix) -> SparseRationalMatrix {
        assert_eq!(self.n_cols, other.n_cols);
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut col = a.clone();
                col.extend(b.iter().map(|(r, v)| (r + self.n_rows, v.clone())));
                col
            })
            .collect();
        SparseRationalMatrix {
            n_rows: self.n_rows + other.n_rows,
            n_cols: self.n_cols,
            cols,
        }
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        Echelon::of(self).pivot_count()
    }

    /// Basis of the right null space, one vector per free column, ordered by
    /// free column index. Each vector is normalized so its first nonzero
    /// coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<SparseVector> {
        Echelon::of(self).kernel_basis()
    }

    /// Text serialization: header `rows cols nnz`, then `row col num/den`
    /// triples in row-major order.
    pub fn write_text<W: Write>(&self, w: &mut W) -> io::Result<()> {
        let mut triplets: Vec<(usize, usize, &Rational)> = Vec::with_capacity(self.nnz());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                triplets.push((*r, c, v));
            }
        }
        triplets.sort_by_key(|(r, c, _)| (*r, *c));
        writeln!(w, "{} {} {}", self.n_rows, self.n_cols, triplets.len())?;
        for (r, c, v) in triplets {
            writeln!(w, "{} {} {}/{}", r, c, v.numer(), v.denom())?;
        }
        Ok(())
    }

    pub fn read_text<R: BufRead>(r: &mut R) -> Result<Self, LinalgError> {
        let mut line = String::new();
        let mut lineno = 0;
        read_line(r, &mut line, &mut lineno)?;
        let mut it = line.split_whitespace();
        let n_rows: usize = parse_tok(&mut it, lineno)?;
        let n_cols: usize = parse_tok(&mut it, lineno)?;
        let nnz: usize = parse_tok(&mut it, lineno)?;
        let mut triplets = Vec::with_capacity(nnz);
        for _ in 0..nnz {
            read_line(r, &mut line, &mut lineno)?;
            let mut it = line.split_whitespace();
            let row: usize = parse_tok(&mut it, lineno)?;
            let col: usize = parse_tok(&mut it, lineno)?;
            let v = parse_rational(&mut it, lineno)?;
            if row >= n_rows || col >= n_cols {
                return Err(LinalgError::OutOfBounds {
                    row,
                    col,
                    rows: n_rows,
                    cols: n_cols,
                });
            }
            triplets.push((row, col, v));
        }
        Ok(SparseRationalMatrix::from_triplets(n_rows, n_cols, triplets))
    }
}

impl fmt::Display for SparseRationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} sparse, {} nonzero", self.n_rows, self.n_cols, self.nnz())
    }
}

/// Coordinates of `v` in the span of `basis`, or `None` if `v` lies outside.
/// The result is verified exactly before returning.
pub fn coords_in_span(v: &SparseVector, basis: &[SparseVector]) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return if v.is_zero() { Some(Vec::new()) } else { None };
    }
    let dim = basis[0].dim();
    assert_eq!(v.dim(), dim);
    let mut cols: Vec<SparseVector> = basis.to_vec();
    cols.push(v.clone());
    let aug = SparseRationalMatrix::from_columns(dim, cols);
    let kernel = aug.kernel_basis();
    for k in kernel {
        let t = k.get(basis.len());
        if !t.is_zero() {
            let coords: Vec<Rational> = (0..basis.len()).map(|j| -k.get(j) / &t).collect();
            // exact re-check: v == sum c_i basis_i
            let mut acc = SparseVector::zero(dim);
            for (c, b) in coords.iter().zip(basis) {
                acc = acc.axpy(c, b);
            }
            if acc == *v {
                return Some(coords);
            } else {
                return None;
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Elimination engine.
//
// Rows are kept as content-1 integer vectors; a reduction step combines two
// rows by cross-multiplying their leading integers and dividing out the gcd
// of the result. Columns are processed in increasing order; among candidate
// rows the pivot is the one with fewest nonzeros, then smallest |leading|.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct IntRow {
    entries: Vec<(usize, BigInt)>, // sorted by column, nonzero
}

impl IntRow {
    fn leading_col(&self) -> usize {
        self.entries[0].0
    }

    fn normalize_content(mut self) -> Option<IntRow> {
        if self.entries.is_empty() {
            return None;
        }
        let mut g = BigInt::zero();
        for (_, v) in &self.entries {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() {
            for (_, v) in &mut self.entries {
                *v = &*v / &g;
            }
        }
        Some(self)
    }

    /// `a * self - b * other` where both rows share the same leading column
    /// and the combination cancels it.
    fn reduce_by(&self, other: &IntRow, a: &BigInt, b: &BigInt) -> Option<IntRow> {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.entries.len() && j < other.entries.len() {
            let (ci, vi) = &self.entries[i];
            let (cj, vj) = &other.entries[j];
            match ci.cmp(cj) {
                std::cmp::Ordering::Equal => {
                    let v = a * vi - b * vj;
                    if !v.is_zero() {
                        out.push((*ci, v));
                    }
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((*ci, a * vi));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*cj, -(b * vj)));
                    j += 1;
                }
            }
        }
        for (c, v) in &self.entries[i..] {
            out.push((*c, a * v));
        }
        for (c, v) in &other.entries[j..] {
            out.push((*c, -(b * v)));
        }
        IntRow { entries: out }.normalize_content()
    }
}

struct Echelon {
    n_cols: usize,
    /// (pivot column, row) in increasing pivot-column order. Rows may keep
    /// entries in later pivot columns; back-substitution accounts for that.
    pivots: Vec<(usize, IntRow)>,
}

impl Echelon {
    fn of(m: &SparseRationalMatrix) -> Echelon {
        // Transpose to integer rows, clearing denominators per row.
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); m.n_rows];
        for (c, col) in m.cols.iter().enumerate() {
            for (r, v) in col {
                rows[*r].push((c, v.clone()));
            }
        }
        let int_rows = rows.into_iter().filter_map(|row| {
            if row.is_empty() {
                return None;
            }
            let mut den = BigInt::one();
            for (_, v) in &row {
                den = den.lcm(v.denom());
            }
            IntRow {
                entries: row
                    .into_iter()
                    .map(|(c, v)| {
                        let scale = &den / v.denom();
                        (c, v.numer() * scale)
                    })
                    .collect(),
            }
            .normalize_content()
        });

        let mut buckets: BTreeMap<usize, Vec<IntRow>> = BTreeMap::new();
        for r in int_rows {
            buckets.entry(r.leading_col()).or_default().push(r);
        }

        let mut pivots: Vec<(usize, IntRow)> = Vec::new();
        while let Some((&col, _)) = buckets.iter().next() {
            let mut rows = buckets.remove(&col).unwrap();
            // deterministic pivot: fewest entries, then smallest |leading|
            let mut best = 0;
            for (k, r) in rows.iter().enumerate().skip(1) {
                let b = &rows[best];
                let key_r = (r.entries.len(), r.entries[0].1.abs());
                let key_b = (b.entries.len(), b.entries[0].1.abs());
                if key_r < key_b {
                    best = k;
                }
            }
            let pivot = rows.swap_remove(best);
            let a = pivot.entries[0].1.clone();
            for row in rows {
                let b = row.entries[0].1.clone();
                let g = a.gcd(&b);
                if let Some(reduced) = row.reduce_by(&pivot, &(&a / &g), &(&b / &g)) {
                    buckets
                        .entry(reduced.leading_col())
                        .or_default()
                        .push(reduced);
                }
            }
            pivots.push((col, pivot));
        }
        Echelon {
            n_cols: m.n_cols,
            pivots,
        }
    }

    fn pivot_count(&self) -> usize {
        self.pivots.len()
    }

    fn kernel_basis(&self) -> Vec<SparseVector> {
        let pivot_cols: Vec<usize> = self.pivots.iter().map(|(c, _)| *c).collect();
        let mut is_pivot = vec![false; self.n_cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.n_cols - pivot_cols.len());
        for f in (0..self.n_cols).filter(|&c| !is_pivot[c]) {
            let mut x: BTreeMap<usize, Rational> = BTreeMap::new();
            x.insert(f, Rational::one());
            for (c, row) in self.pivots.iter().rev() {
                if *c > f {
                    continue;
                }
                let mut s = Rational::zero();
                for (j, v) in row.entries.iter().skip(1) {
                    if let Some(xj) = x.get(j) {
                        s += Rational::from_integer(v.clone()) * xj;
                    }
                }
                if !s.is_zero() {
                    let lead = Rational::from_integer(row.entries[0].1.clone());
                    x.insert(*c, -s / lead);
                }
            }
            // normalize: first nonzero coordinate = 1
            let lead = x.values().next().cloned().expect("kernel vector nonzero");
            let entries = x
                .into_iter()
                .map(|(i, v)| (i, v / &lead))
                .filter(|(_, v)| !v.is_zero());
            basis.push(SparseVector::from_entries(self.n_cols, entries));
        }
        basis
    }
}

fn read_line<R: BufRead>(r: &mut R, line: &mut String, lineno: &mut usize) -> Result<(), LinalgError> {
    loop {
        line.clear();
        let n = r.read_line(line)?;
        *lineno += 1;
        if n == 0 {
            return Err(LinalgError::Parse {
                line: *lineno,
                msg: "unexpected end of file".into(),
            });
        }
        if !line.trim().is_empty() {
            return Ok(());
        }
    }
}

fn parse_tok<'a, T: FromStr>(
    it: &mut impl Iterator<Item = &'a str>,
    line: usize,
) -> Result<T, LinalgError> {
    let tok = it.next().ok_or_else(|| LinalgError::Parse {
        line,
        msg: "missing field".into(),
    })?;
    tok.parse().map_err(|_| LinalgError::Parse {
        line,
        msg: format!("bad token {tok:?}"),
    })
}

fn parse_rational<'a>(
    it: &mut impl Iterator<Item = &'a str>,
    line: usize,
) -> Result<Rational, LinalgError> {
    let tok = it.next().ok_or_else(|| LinalgError::Parse {
        line,
        msg: "missing value".into(),
    })?;
    let bad = |msg: String| LinalgError::Parse { line, msg };
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| bad(format!("bad numerator {num:?}: {e}")))?;
    let d = BigInt::from_str(den).map_err(|e| bad(format!("bad denominator {den:?}: {e}")))?;
    if d.is_zero() {
        return Err(bad("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> SparseRationalMatrix {
        SparseRationalMatrix::from_dense_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(SparseRationalMatrix::zero(3, 3).rank(), 0);
    }

    #[test]
    fn rank_identity() {
        assert_eq!(SparseRationalMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn rank_coboundary_block_is_full() {
        // restricted d: C^5|6 -> C^6|6 in the published invariant bases
        let m = SparseRationalMatrix::from_dense_rows(&[
            vec![rat(-90), rat(-22), rat(5), rat(-2)],
            vec![ratio(-25, 2), ratio(-7, 6), ratio(55, 12), rat(3)],
            vec![ratio(-17, 2), ratio(-4, 3), ratio(7, 6), rat(0)],
            vec![rat(6), ratio(3, 2), ratio(-9, 2), rat(-4)],
        ]);
        assert_eq!(m.rank(), 4);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_identity_empty() {
        assert!(SparseRationalMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_difference_row() {
        let m = mat(&[&[1, -1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].get(0), rat(1));
        assert_eq!(k[0].get(1), rat(1));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = mat(&[&[2, 4, 1, 3], &[0, 2, -2, 2], &[2, 6, -1, 5]]);
        let k = m.kernel_basis();
        assert_eq!(m.rank() + k.len(), 4);
        for v in &k {
            assert!(m.mul_vec(v).is_zero());
        }
        // normalization: first nonzero coordinate is one
        for v in &k {
            assert_eq!(*v.leading().unwrap().1, Rational::one());
        }
    }

    #[test]
    fn coords_trivial_cases() {
        let b = vec![
            SparseVector::from_entries(3, [(0, rat(1)), (1, rat(2))]),
            SparseVector::from_entries(3, [(2, rat(5))]),
        ];
        let zero = SparseVector::zero(3);
        assert_eq!(coords_in_span(&zero, &b), Some(vec![rat(0), rat(0)]));
        assert_eq!(coords_in_span(&b[0], &b), Some(vec![rat(1), rat(0)]));
        let outside = SparseVector::from_entries(3, [(1, rat(1))]);
        assert_eq!(coords_in_span(&outside, &b), None);
    }

    #[test]
    fn matmul_and_stack() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul_mat(&b), mat(&[&[2, 1], &[4, 3]]));
        let s = a.stack(&b);
        assert_eq!(s.n_rows(), 4);
        assert_eq!(s.entry(2, 1), rat(1));
    }

    #[test]
    fn text_round_trip() {
        let m = mat(&[&[1, 0, -3], &[0, 0, 7]]);
        let mut buf = Vec::new();
        m.write_text(&mut buf).unwrap();
        let back = SparseRationalMatrix::read_text(&mut buf.as_slice()).unwrap();
        assert_eq!(m, back);
        let v = SparseVector::from_entries(5, [(1, ratio(2, 3)), (4, rat(-7))]);
        let mut buf = Vec::new();
        v.write_text(&mut buf).unwrap();
        let back = SparseVector::read_text(&mut buf.as_slice()).unwrap();
        assert_eq!(v, back);
    }

    proptest! {
        #[test]
        fn rank_nullity_and_transpose(entries in proptest::collection::vec(
            (0usize..7, 0usize..9, -4i64..5), 0..40))
        {
            let m = SparseRationalMatrix::from_triplets(
                7, 9, entries.into_iter().map(|(r, c, v)| (r, c, rat(v))));
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), m.n_cols());
            prop_assert_eq!(m.transpose().rank(), m.rank());
            for v in &k {
                prop_assert!(m.mul_vec(v).is_zero());
            }
        }

        #[test]
        fn deterministic_kernel(entries in proptest::collection::vec(
            (0usize..6, 0usize..6, -3i64..4), 0..25))
        {
            let m = SparseRationalMatrix::from_triplets(
                6, 6, entries.into_iter().map(|(r, c, v)| (r, c, rat(v))));
            prop_assert_eq!(m.kernel_basis(), m.kernel_basis());
        }
    }
}
