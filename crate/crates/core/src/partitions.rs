//! Integer partitions: enumeration, conjugation, dominance, and the scalar
//! statistics attached to a partition.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rq::{IntPoly2, RatFun};

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` is the canonical enumeration order: by weight, then reverse
/// lexicographic, so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`. Within a
/// weight this is a linear extension of dominance with larger elements first.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

/// Result of comparing two partitions in the natural (dominance) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
    DifferentWeight,
}

/// Constraints for [`Partition::enumerate`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Constraints {
    pub max_length: Option<usize>,
    pub exact_length: Option<usize>,
    pub max_part: Option<usize>,
}

/// `c`, `z` and `n` of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// Product of the factorials of the multiplicities.
    pub c: u128,
    /// Product of `i^{k_i} k_i!`.
    pub z: u128,
    /// `sum (i-1) lambda_i`.
    pub n_stat: usize,
}

/// The t-dependent normalizations of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TFactors {
    /// `v_lambda(t)` for the ambient number of variables, when one was given.
    pub v: Option<RatFun>,
    /// `b_lambda(t)`.
    pub b: IntPoly2,
    /// `z_lambda(t) = z_lambda / prod (1 - t^{lambda_i})`.
    pub z_t: RatFun,
}

impl Partition {
    /// Builds a partition, sorting the parts and dropping zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Builds a partition from parts that are already weakly decreasing and
    /// positive, or returns `None`.
    pub fn from_decreasing(parts: Vec<usize>) -> Option<Self> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0);
        ok.then_some(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `lambda_i` with 1-based `i`; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `k_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs with decreasing parts.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All partitions of `weight` satisfying the constraints, in canonical
    /// order.
    pub fn enumerate(weight: usize, c: Constraints) -> Vec<Partition> {
        let max_len = match (c.max_length, c.exact_length) {
            (Some(a), Some(b)) => a.min(b),
            (a, b) => a.or(b).unwrap_or(usize::MAX),
        };
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let top = c.max_part.unwrap_or(weight).min(weight);
        fill(weight, top, max_len, &mut cur, &mut out);
        if let Some(k) = c.exact_length {
            out.retain(|p: &Partition| p.len() == k);
        }
        out
    }

    /// All partitions of `weight`.
    pub fn all(weight: usize) -> Vec<Partition> {
        Self::enumerate(weight, Constraints::default())
    }

    /// All partitions of weight at most `max_weight`, in canonical order.
    pub fn up_to(max_weight: usize) -> Vec<Partition> {
        (0..=max_weight).flat_map(Self::all).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.0.first().copied().unwrap_or(0);
        Partition((1..=n).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Natural order comparison.
    pub fn natural_compare(&self, other: &Partition) -> Dominance {
        if self.weight() != other.weight() {
            return Dominance::DifferentWeight;
        }
        let n = self.len().max(other.len());
        let (mut ge, mut le) = (true, true);
        let (mut a, mut b) = (0, 0);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        }
    }

    /// `self >= other` in the natural order.
    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(self.natural_compare(other), Dominance::Greater | Dominance::Equal)
    }

    pub fn stats(&self) -> PartitionStats {
        let mut c: u128 = 1;
        let mut z: u128 = 1;
        for (part, k) in self.multiplicities() {
            let f = factorial(k);
            c *= f;
            z *= (part as u128).pow(k as u32) * f;
        }
        let n_stat = self.0.iter().enumerate().map(|(i, &p)| i * p).sum();
        PartitionStats { c, z, n_stat }
    }

    /// `v`, `b` and `z(t)`. With `n = Some(N)`, `v` uses `k_0 = N - len`.
    pub fn t_factors(&self, n: Option<usize>) -> Result<TFactors> {
        let mut b = IntPoly2::one();
        for (_, k) in self.multiplicities() {
            b = &b * &phi(k);
        }
        let v = match n {
            None => None,
            Some(n) if n < self.len() => {
                return Err(Error::LengthExceedsN { partition: self.clone(), n })
            }
            Some(n) => {
                let mut v = v_factor(n - self.len());
                for (_, k) in self.multiplicities() {
                    v = &v * &v_factor(k);
                }
                Some(RatFun::from_poly(v))
            }
        };
        let mut z_t = RatFun::from_int(self.stats().z);
        for &p in &self.0 {
            z_t = &z_t / &RatFun::one_minus(0, p as i32);
        }
        Ok(TFactors { v, b, z_t })
    }

    /// `mu` with an extra part equal to 1.
    pub fn append_one(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.push(1);
        Partition(parts)
    }

    /// The sequence with term `i` (1-based) increased by one, if it is a
    /// partition. `i = len + 1` appends a part 1.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() + 1 {
            return None;
        }
        let mut parts = self.0.clone();
        if i == self.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Self::from_decreasing(parts)
    }

    /// The sequence with term `i` (1-based) decreased by one, if it is a
    /// partition.
    pub fn remove_box(&self, i: usize) -> Option<Partition> {
        if i == 0 || i > self.len() {
            return None;
        }
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            if i != self.len() {
                return None;
            }
            parts.pop();
        }
        Self::from_decreasing(parts)
    }

    /// The 1-based index at which `self` differs from `smaller` by one box,
    /// taking the smallest such index.
    pub fn box_index_over(&self, smaller: &Partition) -> Option<usize> {
        if self.weight() != smaller.weight() + 1 {
            return None;
        }
        (1..=self.len()).find(|&i| self.remove_box(i).as_ref() == Some(smaller))
    }

    /// Partitions obtained by adding one box.
    pub fn add_one_box(&self) -> Vec<Partition> {
        (1..=self.len() + 1).filter_map(|i| self.add_box(i)).collect()
    }

    /// Partitions obtained by removing one box.
    pub fn remove_one_box(&self) -> Vec<Partition> {
        (1..=self.len()).filter_map(|i| self.remove_box(i)).collect()
    }

    /// `self / mu` is a horizontal strip: `l_1 >= m_1 >= l_2 >= m_2 >= ...`.
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        let n = self.len().max(mu.len());
        (1..=n).all(|i| self.part(i) >= mu.part(i) && mu.part(i) >= self.part(i + 1))
    }

    /// Comma-separated text form; empty for the empty partition.
    pub fn to_text(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn fill(rem: usize, max: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max.min(rem)).rev() {
        cur.push(p);
        fill(rem - p, p, max_len, cur, out);
        cur.pop();
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// `prod_{j=1}^{m} (1 - t^j)`.
pub(crate) fn phi(m: usize) -> IntPoly2 {
    let mut acc = IntPoly2::one();
    for j in 1..=m {
        acc = &acc * &IntPoly2::from_terms([(0, 0, 1), (0, j, -1)]);
    }
    acc
}

/// `prod_{j=1}^{m} (1 - t^j)/(1 - t) = prod_{j=1}^m (1 + t + ... + t^{j-1})`.
pub(crate) fn v_factor(m: usize) -> IntPoly2 {
    let mut acc = IntPoly2::one();
    for j in 1..=m {
        acc = &acc * &IntPoly2::from_terms((0..j).map(|e| (0, e, 1)));
    }
    acc
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1,1`, `(2,1,1)`, `[2,1,1]` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut pos = 0;
        for piece in body.split(',') {
            let v: usize = piece.trim().parse().map_err(|_| Error::Parse {
                position: pos,
                message: format!("invalid part '{}'", piece.trim()),
            })?;
            parts.push(v);
            pos += piece.len() + 1;
        }
        Partition::from_decreasing(parts).ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("'{s}' is not a weakly decreasing sequence of positive integers"),
        })
    }
}

impl From<&[usize]> for Partition {
    fn from(p: &[usize]) -> Self {
        Partition::new(p.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(p: [usize; N]) -> Self {
        Partition::new(p.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    #[test]
    fn enumerate_weight_four() {
        let all = Partition::all(4);
        let texts: Vec<String> = all.iter().map(|x| x.to_text()).collect();
        assert_eq!(texts, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        let two = Partition::enumerate(3, Constraints { exact_length: Some(2), ..Default::default() });
        assert_eq!(two, vec![p(&[2, 1])]);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn partition_numbers() {
        let counts: Vec<usize> = (0..10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(p(&[2, 2]).natural_compare(&p(&[2, 1, 1])), Dominance::Greater);
        assert_eq!(p(&[3, 1, 1, 1]).natural_compare(&p(&[2, 2, 2])), Dominance::Incomparable);
        assert_eq!(p(&[2, 1]).natural_compare(&p(&[2, 1])), Dominance::Equal);
        assert_eq!(p(&[2]).natural_compare(&p(&[1])), Dominance::DifferentWeight);
    }

    #[test]
    fn statistics() {
        assert_eq!(p(&[2, 1, 1]).stats(), PartitionStats { c: 2, z: 4, n_stat: 3 });
        assert_eq!(p(&[2, 1]).stats(), PartitionStats { c: 1, z: 2, n_stat: 1 });
        assert_eq!(Partition::empty().stats(), PartitionStats { c: 1, z: 1, n_stat: 0 });
    }

    #[test]
    fn t_factor_examples() {
        let b = p(&[2, 2, 1]).t_factors(None).unwrap().b;
        let one_minus = |j| IntPoly2::from_terms([(0, 0, 1), (0, j, -1)]);
        assert_eq!(b, &(&one_minus(1) * &one_minus(1)) * &one_minus(2));
        let v = Partition::empty().t_factors(Some(2)).unwrap().v.unwrap();
        assert_eq!(v, "1+t".parse().unwrap());
        let z = p(&[2]).t_factors(None).unwrap().z_t;
        assert_eq!(z, "2/(1-t^2)".parse().unwrap());
        assert!(matches!(
            p(&[1, 1, 1]).t_factors(Some(2)),
            Err(Error::LengthExceedsN { n: 2, .. })
        ));
    }

    #[test]
    fn append_one_examples() {
        assert_eq!(p(&[3, 1]).append_one(), p(&[3, 1, 1]));
        assert_eq!(Partition::empty().append_one(), p(&[1]));
        assert_eq!(p(&[1, 1]).append_one(), p(&[1, 1, 1]));
    }

    #[test]
    fn boxes() {
        assert_eq!(p(&[2, 2]).remove_box(1), None);
        assert_eq!(p(&[2, 2]).remove_box(2), Some(p(&[2, 1])));
        assert_eq!(p(&[1, 1]).add_box(2), None);
        assert_eq!(p(&[1, 1]).box_index_over(&p(&[1])), Some(2));
        assert!(!p(&[2, 2]).is_horizontal_strip_over(&p(&[1])));
        assert!(p(&[2, 1]).is_horizontal_strip_over(&p(&[1])));
    }

    #[test]
    fn text_forms() {
        assert_eq!("2,1,1".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 1, 1]).to_text(), "2,1,1");
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(n in 0usize..=10, k in 0usize..64) {
            let all = Partition::all(n);
            let l = &all[k % all.len()];
            prop_assert_eq!(&l.conjugate().conjugate(), l);
        }

        #[test]
        fn dominance_is_antisymmetric_and_reversed_by_conjugation(n in 1usize..=9, a in 0usize..64, b in 0usize..64) {
            let all = Partition::all(n);
            let l = &all[a % all.len()];
            let m = &all[b % all.len()];
            let lm = l.natural_compare(m);
            let ml = m.natural_compare(l);
            prop_assert_eq!(lm == Dominance::Less, ml == Dominance::Greater);
            prop_assert_eq!(l.dominates(m), m.conjugate().dominates(&l.conjugate()));
            if l.dominates(m) {
                prop_assert!(l.len() <= m.len());
            }
        }

        #[test]
        fn canonical_order_extends_dominance(n in 1usize..=9, a in 0usize..64, b in 0usize..64) {
            let all = Partition::all(n);
            let l = &all[a % all.len()];
            let m = &all[b % all.len()];
            if l.natural_compare(m) == Dominance::Greater {
                prop_assert!(l < m);
            }
        }

        #[test]
        fn c_divides_z(n in 0usize..=10, k in 0usize..64) {
            let all = Partition::all(n);
            let s = all[k % all.len()].stats();
            prop_assert_eq!(s.z % s.c, 0);
        }
    }
}
