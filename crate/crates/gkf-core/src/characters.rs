//! Combinatorial representation theory of Sp(4,R) (and Sp(2,R) for n = 1):
//! Weyl dimensions, Littlewood-Richardson coefficients by tableau
//! enumeration, stable tensor products with the King modification of
//! over-long labels, Freudenthal weight multiplicities, the Racah-Klimyk
//! decomposition, and decomposition of arbitrary weight diagrams by peeling
//! highest weights.
//!
//! The Klimyk path and the LR-plus-modification path are algorithmically
//! independent; agreement between them is the correctness contract for the
//! modification rule.

use std::collections::BTreeMap;
use std::fmt;

use crate::invariants::CartanWeight;
use crate::partitions::Partition;

/// Dominant label (p >= q >= 0) of an irreducible; q = 0 for n = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrepLabel {
    p: u32,
    q: u32,
}

impl IrrepLabel {
    pub fn new(p: u32, q: u32) -> Self {
        assert!(p >= q, "label must be dominant");
        IrrepLabel { p, q }
    }

    pub fn trivial() -> Self {
        IrrepLabel { p: 0, q: 0 }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn to_weight(self) -> CartanWeight {
        [self.p as i32, self.q as i32]
    }

    pub fn from_weight(w: CartanWeight) -> Option<Self> {
        if w[0] >= w[1] && w[1] >= 0 {
            Some(IrrepLabel::new(w[0] as u32, w[1] as u32))
        } else {
            None
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            write!(f, "V_{{{}}}", self.p)
        } else {
            write!(f, "V_{{{},{}}}", self.p, self.q)
        }
    }
}

/// Decomposition with possibly negative multiplicities while non-standard
/// labels are being resolved; final results are non-negative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedDecomposition {
    terms: BTreeMap<IrrepLabel, i64>,
}

impl SignedDecomposition {
    pub fn add(&mut self, label: IrrepLabel, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.terms.entry(label).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&label);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IrrepLabel, &i64)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn is_non_negative(&self) -> bool {
        self.terms.values().all(|&m| m >= 0)
    }

    /// Final decomposition; panics if any multiplicity is still negative.
    pub fn into_unsigned(self) -> BTreeMap<IrrepLabel, u64> {
        self.terms
            .into_iter()
            .map(|(l, m)| {
                assert!(m >= 0, "negative multiplicity survived modification: {l} x {m}");
                (l, m as u64)
            })
            .collect()
    }
}

/// Dimension of `V_{p,q}`: for C2 the Weyl product over positive roots
/// collapses to `(p-q+1)(q+1)(p+2)(p+q+3)/6`; for A1 it is `p + 1`.
pub fn weyl_dim(label: &IrrepLabel, n: u8) -> u64 {
    let (p, q) = (u64::from(label.p), u64::from(label.q));
    match n {
        1 => {
            assert_eq!(q, 0, "n = 1 labels have a single part");
            p + 1
        }
        2 => (p - q + 1) * (q + 1) * (p + 2) * (p + q + 3) / 6,
        _ => panic!("unsupported rank"),
    }
}

/// [`weyl_dim`] addressed by a dominant Cartan weight.
pub fn weyl_dim_weight(w: CartanWeight, n: u8) -> u64 {
    weyl_dim(
        &IrrepLabel::from_weight(w).expect("weight must be dominant"),
        n,
    )
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson rule by tableau enumeration.
// ---------------------------------------------------------------------------

/// Classical LR coefficients `c^nu_{alpha,beta}`: the number of
/// column-strict skew tableaux of shape `nu/alpha` and content `beta` whose
/// right-to-left, top-to-bottom reading word is a lattice word.
pub fn lr_coefficients(alpha: &Partition, beta: &Partition) -> BTreeMap<Partition, u64> {
    let n = alpha.sum() + beta.sum();
    let max_len = alpha.len() + beta.len();
    let mut out = BTreeMap::new();
    for nu in partitions_up_to_length(n, max_len) {
        if !nu.contains(alpha) {
            continue;
        }
        let c = count_lr_tableaux(&nu, alpha, beta);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// Skew expansion `s_{outer/inner} = sum_beta c^{outer}_{inner,beta} s_beta`.
pub fn skew_lr(outer: &Partition, inner: &Partition) -> BTreeMap<Partition, u64> {
    assert!(outer.contains(inner));
    let n = outer.sum() - inner.sum();
    let mut out = BTreeMap::new();
    for beta in partitions_up_to_length(n, outer.len()) {
        let c = count_lr_tableaux(outer, inner, &beta);
        if c > 0 {
            out.insert(beta, c);
        }
    }
    out
}

fn partitions_up_to_length(n: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::new(vec![]));
        return out;
    }
    let mut acc = Vec::new();
    fn rec(left: u32, max_part: u32, max_len: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(acc.clone()));
            return;
        }
        if acc.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(left)).rev() {
            acc.push(p);
            rec(left - p, p, max_len, acc, out);
            acc.pop();
        }
    }
    rec(n, n, max_len, &mut acc, &mut out);
    out
}

/// Counts LR tableaux of shape `nu/alpha`, content `beta`. Cells are filled
/// in reading order (rows top to bottom, right to left within a row) so the
/// lattice condition is a running prefix check.
fn count_lr_tableaux(nu: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    let rows = nu.len();
    let labels = beta.len();
    if labels == 0 {
        return u64::from(nu == alpha);
    }
    // cells in reading order: (row, col) with col descending within each row
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = alpha.part(r);
        let hi = nu.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    if cells.len() != beta.sum() as usize {
        return 0;
    }
    // grid[r][c] = label at that cell (1-based), 0 = unfilled
    let mut grid: Vec<Vec<u8>> = (0..rows).map(|r| vec![0; nu.part(r) as usize]).collect();
    let mut counts = vec![0u32; labels + 1];
    fn rec(
        pos: usize,
        cells: &[(usize, u32)],
        grid: &mut [Vec<u8>],
        counts: &mut [u32],
        alpha: &Partition,
        beta: &Partition,
        total: &mut u64,
    ) {
        if pos == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[pos];
        let c = c as usize;
        for t in 1..=beta.len() as u8 {
            let ti = t as usize;
            if counts[ti] >= beta.part(ti - 1) {
                continue;
            }
            // lattice: prefix counts stay weakly decreasing in the label
            if ti >= 2 && counts[ti - 1] <= counts[ti] {
                continue;
            }
            // rows weakly increase left to right; right neighbor is filled
            // first in this reading order
            if c + 1 < grid[r].len() {
                let right = grid[r][c + 1];
                if right != 0 && t > right {
                    continue;
                }
            }
            // columns strictly increase downward; the cell above is filled
            // first unless it belongs to the inner shape
            if r > 0 && (c as u32) >= alpha.part(r - 1) && c < grid[r - 1].len() {
                let above = grid[r - 1][c];
                if above != 0 && t <= above {
                    continue;
                }
            }
            grid[r][c] = t;
            counts[ti] += 1;
            rec(pos + 1, cells, grid, counts, alpha, beta, total);
            counts[ti] -= 1;
            grid[r][c] = 0;
        }
    }
    let mut total = 0;
    rec(0, &cells, &mut grid, &mut counts, alpha, beta, &mut total);
    total
}

// ---------------------------------------------------------------------------
// King modification and the stable (Littlewood-Newell) product.
// ---------------------------------------------------------------------------

/// Resolves a possibly over-long symplectic label for Sp(2n):
/// `Some((sign, label))` or `None` when the character vanishes.
///
/// A non-standard label of length p > n loses a boundary strip of length
/// `2(p - n - 1)` hooked at the foot of its first column; the sign counts
/// the rows the strip spans. Iterated until the length drops to n.
pub fn modify_label(nu: &Partition, n: u8) -> Option<(i64, IrrepLabel)> {
    let n = usize::from(n);
    let mut parts: Vec<u32> = nu.parts().to_vec();
    let mut sign = 1i64;
    loop {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let p = parts.len();
        if p <= n {
            let label = IrrepLabel::new(
                parts.first().copied().unwrap_or(0),
                parts.get(1).copied().unwrap_or(0),
            );
            return Some((sign, label));
        }
        let h = 2 * (p - n - 1) as u32;
        if h == 0 {
            return None;
        }
        // strips containing the foot of column 1: spanning rows r..=p has
        // length parts[r-1] + (p - r) (whole last row for r = p); the length
        // is strictly decreasing in r, so the match is unique
        let mut found = None;
        for r in (1..=p).rev() {
            let len = if r == p {
                parts[p - 1]
            } else {
                parts[r - 1] + (p - r) as u32
            };
            if len == h {
                found = Some(r);
                break;
            }
            if len > h {
                break;
            }
        }
        let r = found?;
        if r == p {
            parts.pop();
        } else {
            // rows r..p shift up and lose one box each
            for i in r..p {
                parts[i - 1] = parts[i] - 1;
            }
            parts.pop();
            sign *= if (p - r).is_multiple_of(2) { 1 } else { -1 };
        }
    }
}

/// Stable tensor product by the Littlewood-Newell formula
/// `N^nu_{lm} = sum_{delta,alpha,beta} c^l_{delta,alpha} c^m_{delta,beta} c^nu_{alpha,beta}`,
/// before any length modification.
pub fn tensor_expand_raw(
    lambda: &IrrepLabel,
    mu: &IrrepLabel,
) -> BTreeMap<Partition, u64> {
    let lam = label_partition(lambda);
    let mu_p = label_partition(mu);
    let mut raw: BTreeMap<Partition, u64> = BTreeMap::new();
    for delta in sub_partitions(&lam) {
        if !mu_p.contains(&delta) {
            continue;
        }
        let alphas = skew_lr(&lam, &delta);
        let betas = skew_lr(&mu_p, &delta);
        for (alpha, ca) in &alphas {
            for (beta, cb) in &betas {
                for (nu, c) in lr_coefficients(alpha, beta) {
                    *raw.entry(nu).or_insert(0) += ca * cb * c;
                }
            }
        }
    }
    raw
}

fn label_partition(l: &IrrepLabel) -> Partition {
    Partition::from_padded(&[l.p, l.q])
}

fn sub_partitions(p: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let a = p.part(0);
    let b = p.part(1);
    for x in 0..=a {
        for y in 0..=b.min(x) {
            out.push(Partition::from_padded(&[x, y]));
        }
    }
    out
}

/// Stable product followed by the King modification of every over-long
/// label. The result is a genuine decomposition (all multiplicities >= 0).
pub fn tensor_decompose_stable(
    lambda: &IrrepLabel,
    mu: &IrrepLabel,
    n: u8,
) -> SignedDecomposition {
    let mut out = SignedDecomposition::default();
    for (nu, c) in tensor_expand_raw(lambda, mu) {
        if let Some((sign, label)) = modify_label(&nu, n) {
            out.add(label, sign * c as i64);
        }
    }
    assert!(
        out.is_non_negative(),
        "stable product of {lambda} and {mu} left negative multiplicities"
    );
    out
}

// ---------------------------------------------------------------------------
// Root data, Freudenthal recursion, Klimyk decomposition.
// ---------------------------------------------------------------------------

const POSITIVE_ROOTS_C2: [[i32; 2]; 4] = [[1, -1], [0, 2], [1, 1], [2, 0]];
const RHO_C2: [i32; 2] = [2, 1];
const POSITIVE_ROOTS_A1: [[i32; 2]; 1] = [[2, 0]];
const RHO_A1: [i32; 2] = [1, 0];

fn positive_roots(n: u8) -> &'static [[i32; 2]] {
    match n {
        1 => &POSITIVE_ROOTS_A1,
        2 => &POSITIVE_ROOTS_C2,
        _ => panic!("unsupported rank"),
    }
}

fn rho(n: u8) -> [i32; 2] {
    match n {
        1 => RHO_A1,
        2 => RHO_C2,
        _ => panic!("unsupported rank"),
    }
}

fn dot(a: [i32; 2], b: [i32; 2]) -> i64 {
    i64::from(a[0]) * i64::from(b[0]) + i64::from(a[1]) * i64::from(b[1])
}

fn add(a: [i32; 2], b: [i32; 2]) -> [i32; 2] {
    [a[0] + b[0], a[1] + b[1]]
}

/// Dominant representative under the Weyl group (signed permutations).
fn dominant_rep(w: CartanWeight, n: u8) -> CartanWeight {
    match n {
        1 => [w[0].abs(), 0],
        _ => {
            let (a, b) = (w[0].abs(), w[1].abs());
            if a >= b {
                [a, b]
            } else {
                [b, a]
            }
        }
    }
}

/// Full weight diagram of `V_lambda` by Freudenthal's recursion; the sum of
/// all multiplicities equals the Weyl dimension.
pub fn freudenthal_multiplicities(label: &IrrepLabel, n: u8) -> BTreeMap<CartanWeight, u64> {
    let lambda = label.to_weight();
    let roots = positive_roots(n);
    let rho = rho(n);
    // dominant weights below lambda in the root order, sorted by descending
    // coordinate sum so every recursion input is already known
    let mut dominants: Vec<CartanWeight> = Vec::new();
    let bound = lambda[0] + lambda[1];
    for x in (0..=bound).rev() {
        let ys: Vec<i32> = if n == 1 { vec![0] } else { (0..=x).collect() };
        for y in ys {
            let c1 = lambda[0] - x;
            if n == 2 {
                let num = lambda[1] - y + c1;
                if c1 < 0 || num < 0 || num % 2 != 0 {
                    continue;
                }
            } else {
                if c1 < 0 || c1 % 2 != 0 {
                    continue;
                }
            }
            dominants.push([x, y]);
        }
    }
    dominants.sort_by_key(|w| std::cmp::Reverse(w[0] + w[1]));

    let lam_rho = add(lambda, rho);
    let norm_top = dot(lam_rho, lam_rho);
    let mut mult: BTreeMap<CartanWeight, u64> = BTreeMap::new();
    for &mu in &dominants {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i64 = 0;
        for &alpha in roots {
            let mut k = 1;
            loop {
                let xi = add(mu, [alpha[0] * k, alpha[1] * k]);
                let rep = dominant_rep(xi, n);
                if rep[0] + rep[1] > bound {
                    break;
                }
                if let Some(&m) = mult.get(&rep) {
                    num += (m as i64) * dot(xi, alpha);
                }
                k += 1;
            }
        }
        let mu_rho = add(mu, rho);
        let den = norm_top - dot(mu_rho, mu_rho);
        assert!(den > 0);
        let num = 2 * num;
        assert_eq!(num % den, 0, "Freudenthal division must be exact");
        let m = num / den;
        assert!(m >= 0);
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    // expand Weyl orbits
    let mut out: BTreeMap<CartanWeight, u64> = BTreeMap::new();
    for (&mu, &m) in &mult {
        for w in weyl_orbit(mu, n) {
            out.insert(w, m);
        }
    }
    out
}

fn weyl_orbit(w: CartanWeight, n: u8) -> Vec<CartanWeight> {
    let mut set = std::collections::BTreeSet::new();
    match n {
        1 => {
            set.insert([w[0], 0]);
            set.insert([-w[0], 0]);
        }
        _ => {
            for (a, b) in [(w[0], w[1]), (w[1], w[0])] {
                for sa in [1, -1] {
                    for sb in [1, -1] {
                        set.insert([a * sa, b * sb]);
                    }
                }
            }
        }
    }
    set.into_iter().collect()
}

/// Tensor decomposition by the Racah-Klimyk formula: every weight `nu` of
/// `V_mu` contributes `sign(w) V_{w(lambda+nu+rho) - rho}` where `w` is the
/// unique Weyl element moving `lambda+nu+rho` strictly inside the dominant
/// chamber, and nothing when that vector lies on a wall.
pub fn tensor_decompose_klimyk(
    lambda: &IrrepLabel,
    mu: &IrrepLabel,
    n: u8,
) -> BTreeMap<IrrepLabel, u64> {
    let rho = rho(n);
    let lam_rho = add(lambda.to_weight(), rho);
    let mut acc: BTreeMap<IrrepLabel, i64> = BTreeMap::new();
    for (nu, m) in freudenthal_multiplicities(mu, n) {
        let xi = add(lam_rho, nu);
        let (sign, dom) = match n {
            1 => {
                if xi[0] == 0 {
                    continue;
                }
                (if xi[0] < 0 { -1 } else { 1 }, [xi[0].abs(), 0])
            }
            _ => {
                if xi[0] == 0 || xi[1] == 0 || xi[0].abs() == xi[1].abs() {
                    continue;
                }
                let mut sign = 1i64;
                if xi[0] < 0 {
                    sign = -sign;
                }
                if xi[1] < 0 {
                    sign = -sign;
                }
                let (a, b) = (xi[0].abs(), xi[1].abs());
                if a > b {
                    (sign, [a, b])
                } else {
                    (-sign, [b, a])
                }
            }
        };
        let label = IrrepLabel::new((dom[0] - rho[0]) as u32, (dom[1] - rho[1]) as u32);
        *acc.entry(label).or_insert(0) += sign * m as i64;
    }
    acc.retain(|_, m| *m != 0);
    acc.into_iter()
        .map(|(l, m)| {
            assert!(m > 0, "Klimyk produced a negative multiplicity at {l}");
            (l, m as u64)
        })
        .collect()
}

/// Decomposes an arbitrary (finite-dimensional, Weyl-symmetric) weight
/// diagram into irreducibles by repeatedly peeling the maximal dominant
/// weight. Independent of the kernel-based decomposition path.
pub fn decompose_weight_diagram(
    diagram: &BTreeMap<CartanWeight, u64>,
    n: u8,
) -> BTreeMap<IrrepLabel, u64> {
    let mut work: BTreeMap<CartanWeight, i64> =
        diagram.iter().map(|(&w, &m)| (w, m as i64)).collect();
    let mut out: BTreeMap<IrrepLabel, u64> = BTreeMap::new();
    loop {
        work.retain(|_, m| *m != 0);
        // maximal dominant weight under (coordinate sum, first coordinate)
        let top = work
            .keys()
            .filter(|&&w| crate::invariants::is_dominant(w, n))
            .max_by_key(|&&w| (w[0] + w[1], w[0]))
            .copied();
        let Some(top) = top else {
            assert!(work.is_empty(), "non-dominant residue in weight diagram");
            break;
        };
        let m = work[&top];
        assert!(m > 0, "negative multiplicity while peeling {top:?}");
        let label = IrrepLabel::from_weight(top).unwrap();
        for (w, wm) in freudenthal_multiplicities(&label, n) {
            *work.entry(w).or_insert(0) -= m * wm as i64;
        }
        out.insert(label, m as u64);
    }
    out
}
