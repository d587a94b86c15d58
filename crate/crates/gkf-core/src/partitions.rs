//! Integer partitions and their correspondence with cochain shapes.
//!
//! A wedge factor dual to an `l`-homogeneous potential contributes `l - 2`
//! to the weight, so fixing weight `w` and degree `m` turns basis shapes
//! (how many factors come from each generator degree) into partitions of
//! `w` with exactly `m` parts.

use std::collections::BTreeMap;
use std::fmt;

/// Weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    /// Drops trailing zeros, then validates.
    pub fn from_padded(parts: &[u32]) -> Self {
        let len = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        Partition::new(parts[..len].to_vec())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part at `i`, or 0 beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Multiset of generator degrees of a wedge-monomial shape: `i -> k_i`,
/// the number of factors dual to `i`-homogeneous potentials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CochainShape {
    min_gen: u32,
    multiplicities: BTreeMap<u32, u32>,
}

impl CochainShape {
    pub fn new(min_gen: u32, multiplicities: BTreeMap<u32, u32>) -> Self {
        assert!(multiplicities.keys().all(|&i| i >= min_gen));
        assert!(multiplicities.values().all(|&k| k > 0));
        CochainShape {
            min_gen,
            multiplicities,
        }
    }

    pub fn min_gen(&self) -> u32 {
        self.min_gen
    }

    /// (generator degree, multiplicity) pairs, ascending in degree.
    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.multiplicities.iter().map(|(&i, &k)| (i, k))
    }

    pub fn multiplicity(&self, degree: u32) -> u32 {
        self.multiplicities.get(&degree).copied().unwrap_or(0)
    }

    /// Total number of wedge factors.
    pub fn degree(&self) -> u32 {
        self.multiplicities.values().sum()
    }

    /// Total weight, each factor of generator degree `i` contributing `i-2`.
    pub fn weight(&self) -> u32 {
        self.multiplicities.iter().map(|(&i, &k)| k * (i - 2)).sum()
    }

    pub fn max_degree_used(&self) -> u32 {
        self.multiplicities.keys().next_back().copied().unwrap_or(0)
    }
}

impl fmt::Display for CochainShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "1");
        }
        for (n, (i, k)) in self.factors().enumerate() {
            if n > 0 {
                write!(f, " ∧ ")?;
            }
            if k == 1 {
                write!(f, "S{i}")?;
            } else {
                write!(f, "Λ{k}S{i}")?;
            }
        }
        Ok(())
    }
}

/// All partitions of `w` into exactly `m` positive parts, lexicographically
/// descending. Empty when none exist; `[()]` for `w = m = 0`.
pub fn partitions_of(w: u32, m: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc: Vec<u32> = Vec::with_capacity(m as usize);
    fn rec(w: u32, m: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if m == 0 {
            if w == 0 {
                out.push(Partition::new(acc.clone()));
            }
            return;
        }
        // each of the m parts is >= 1, so the next part is at most w - (m-1)
        let hi = max.min(w.saturating_sub(m - 1));
        let lo = w.div_ceil(m).max(1); // next part carries at least the average
        for p in (lo..=hi).rev() {
            acc.push(p);
            rec(w - p, m - 1, p, acc, out);
            acc.pop();
        }
    }
    rec(w, m, w.max(1), &mut acc, &mut out);
    out
}

/// The shape with `k_{l+2}` factors for every part equal to `l`.
pub fn shape_from_partition(p: &Partition) -> CochainShape {
    let mut mult = BTreeMap::new();
    for &l in p.parts() {
        *mult.entry(l + 2).or_insert(0) += 1;
    }
    CochainShape::new(3, mult)
}

/// All shapes of degree `m` and weight `w` with generator degrees
/// `>= min_gen`. For `min_gen = 3` this is the partition bijection; for
/// `min_gen = 2` shapes additionally carry weight-0 factors from degree 2.
pub fn shapes_for(w: u32, m: u32, min_gen: u32) -> Vec<CochainShape> {
    assert!(min_gen == 2 || min_gen == 3, "min_gen must be 2 or 3");
    let mut out = Vec::new();
    let k2_range = if min_gen == 2 { 0..=m } else { 0..=0 };
    for k2 in k2_range {
        for p in partitions_of(w, m - k2) {
            let mut shape = shape_from_partition(&p);
            shape.min_gen = min_gen;
            if k2 > 0 {
                shape.multiplicities.insert(2, k2);
            }
            out.push(shape);
        }
    }
    // descending lexicographic on (k_{min_gen}, k_{min_gen+1}, ...)
    out.sort_by(|a, b| {
        let hi = a.max_degree_used().max(b.max_degree_used());
        let key = |s: &CochainShape| (min_gen..=hi).map(|i| s.multiplicity(i)).collect::<Vec<_>>();
        key(b).cmp(&key(a))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_examples() {
        let p = |v: &[&[u32]]| -> Vec<Partition> {
            v.iter().map(|s| Partition::new(s.to_vec())).collect()
        };
        assert_eq!(partitions_of(2, 2), p(&[&[1, 1]]));
        assert_eq!(partitions_of(4, 2), p(&[&[3, 1], &[2, 2]]));
        assert_eq!(partitions_of(0, 0), p(&[&[]]));
        assert_eq!(partitions_of(2, 3), Vec::<Partition>::new());
        assert_eq!(partitions_of(3, 0), Vec::<Partition>::new());
    }

    #[test]
    fn shape_examples() {
        let s = shape_from_partition(&Partition::new(vec![1, 1]));
        assert_eq!(s.multiplicity(3), 2);
        assert_eq!(s.degree(), 2);
        let s = shape_from_partition(&Partition::new(vec![2, 1, 1]));
        assert_eq!((s.multiplicity(3), s.multiplicity(4)), (2, 1));
        let s = shape_from_partition(&Partition::new(vec![2]));
        assert_eq!(s.multiplicity(4), 1);
        assert_eq!(s.weight(), 2);
    }

    #[test]
    fn shapes_for_examples() {
        let shapes = shapes_for(6, 4, 3);
        assert_eq!(shapes.len(), 2);
        assert_eq!((shapes[0].multiplicity(3), shapes[0].multiplicity(5)), (3, 1));
        assert_eq!((shapes[1].multiplicity(3), shapes[1].multiplicity(4)), (2, 2));

        let shapes = shapes_for(6, 6, 3);
        assert_eq!(shapes.len(), 1);
        assert_eq!(shapes[0].multiplicity(3), 6);

        assert!(shapes_for(2, 3, 3).is_empty());
    }

    #[test]
    fn shapes_for_min_gen_two_pads_with_quadratics() {
        // w=2, m=2: Λ²S₃ and S₂∧S₄
        let shapes = shapes_for(2, 2, 2);
        assert_eq!(shapes.len(), 2);
        assert!(shapes.iter().any(|s| s.multiplicity(3) == 2));
        assert!(shapes
            .iter()
            .any(|s| s.multiplicity(2) == 1 && s.multiplicity(4) == 1));
        for s in &shapes {
            assert_eq!(s.degree(), 2);
            assert_eq!(s.weight(), 2);
        }
    }

    #[test]
    fn bijection_with_partitions() {
        for w in 0..=12u32 {
            for m in 0..=12u32 {
                let parts = partitions_of(w, m);
                let shapes = shapes_for(w, m, 3);
                assert_eq!(parts.len(), shapes.len());
                // injective and weight/degree-correct
                let mut images: Vec<CochainShape> =
                    parts.iter().map(shape_from_partition).collect();
                images.sort();
                images.dedup();
                assert_eq!(images.len(), parts.len());
                for s in &shapes {
                    assert_eq!(s.degree(), m);
                    assert_eq!(s.weight(), w);
                    assert!(images.binary_search(s).is_ok());
                }
            }
        }
    }

    #[test]
    fn count_matches_independent_recursion() {
        // independent counter: p(w, m, cap) = partitions of w into m parts each <= cap
        fn count(w: i64, m: i64, cap: i64) -> u64 {
            if m == 0 {
                return u64::from(w == 0);
            }
            if w < m {
                return 0;
            }
            (1..=cap.min(w))
                .map(|first| count(w - first, m - 1, first))
                .sum()
        }
        for w in 0..=12 {
            for m in 0..=12 {
                assert_eq!(
                    partitions_of(w, m).len() as u64,
                    count(i64::from(w), i64::from(m), i64::from(w)),
                    "w={w} m={m}"
                );
            }
        }
    }
}
