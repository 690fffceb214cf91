//! Partitions, bipartitions and weakly decreasing integer sequences.
//!
//! Boxes are `(row, col)` pairs counted from 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coeff::{Coeff, ParamRat};
use crate::error::{JackError, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Build from parts, dropping zeros. Panics if the parts increase.
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0),
            "not a partition: {parts:?}"
        );
        Partition(parts)
    }

    pub fn try_new(parts: Vec<usize>) -> Result<Self> {
        let trimmed: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        if trimmed.len() != parts.iter().take_while(|&&p| p > 0).count() || !trimmed.windows(2).all(|w| w[0] >= w[1]) {
            return Err(JackError::Parse(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(trimmed))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(1);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Addable boxes in increasing row order.
    pub fn add_box_candidates(&self) -> Vec<(usize, usize)> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| (i, self.part(i) + 1))
            .collect()
    }

    /// Removable boxes in increasing row order.
    pub fn remove_box_candidates(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.part(i)))
            .collect()
    }

    pub fn can_add(&self, b: (usize, usize)) -> bool {
        b.0 >= 1 && b.1 == self.part(b.0) + 1 && (b.0 == 1 || self.part(b.0 - 1) > self.part(b.0))
    }

    pub fn can_remove(&self, b: (usize, usize)) -> bool {
        b.0 >= 1 && b.1 >= 1 && b.1 == self.part(b.0) && self.part(b.0) > self.part(b.0 + 1)
    }

    pub fn add_box(&self, b: (usize, usize)) -> Option<Partition> {
        if !self.can_add(b) {
            return None;
        }
        let mut p = self.0.clone();
        if b.0 > p.len() {
            p.push(1);
        } else {
            p[b.0 - 1] += 1;
        }
        Some(Partition(p))
    }

    pub fn remove_box(&self, b: (usize, usize)) -> Option<Partition> {
        if !self.can_remove(b) {
            return None;
        }
        let mut p = self.0.clone();
        p[b.0 - 1] -= 1;
        if p[b.0 - 1] == 0 {
            p.pop();
        }
        Some(Partition(p))
    }

    /// The removable box with the largest row index.
    pub fn deepest_removable(&self) -> Option<(usize, usize)> {
        self.remove_box_candidates().pop()
    }

    /// Partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions fitting in `rows` rows with parts at most `cols`.
    pub fn in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
        (0..=rows * cols)
            .flat_map(Partition::all_of)
            .filter(|p| p.len() <= rows && p.part(1) <= cols)
            .collect()
    }

    /// Zero-padded view of length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|i| self.part(i)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = JackError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| JackError::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::try_new(parts)
    }
}

impl From<&[usize]> for Partition {
    fn from(p: &[usize]) -> Self {
        Partition::new(p.to_vec())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub lambda: Partition,
    pub mu: Partition,
}

impl Bipartition {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        Bipartition { lambda, mu }
    }

    pub fn from_parts(lambda: &[usize], mu: &[usize]) -> Self {
        Bipartition::new(Partition::from(lambda), Partition::from(mu))
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn len(&self) -> usize {
        self.lambda.len() + self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty() && self.mu.is_empty()
    }

    pub fn size(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }

    /// `|λ| - |μ|`.
    pub fn degree(&self) -> i64 {
        self.lambda.size() as i64 - self.mu.size() as i64
    }

    /// `w(λ, μ) = (μ, λ)`.
    pub fn w(&self) -> Bipartition {
        Bipartition::new(self.mu.clone(), self.lambda.clone())
    }

    /// `(λ', μ')`.
    pub fn conjugate(&self) -> Bipartition {
        Bipartition::new(self.lambda.conjugate(), self.mu.conjugate())
    }

    /// All bipartitions of total size `n`, ordered by `|λ|` descending then
    /// partition order.
    pub fn all_of(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            for l in Partition::all_of(a) {
                for m in Partition::all_of(n - a) {
                    out.push(Bipartition::new(l.clone(), m));
                }
            }
        }
        out
    }

    /// All bipartitions with `|λ| + |μ| <= n`, by size then the order of
    /// [`Bipartition::all_of`].
    pub fn up_to(n: usize) -> Vec<Bipartition> {
        (0..=n).flat_map(Bipartition::all_of).collect()
    }

    /// Neighbours reached by `p1`: boxes added to `λ` then boxes removed from `μ`.
    pub fn pieri_neighbours(&self) -> (Vec<Neighbour>, Vec<Neighbour>) {
        let up = self
            .lambda
            .add_box_candidates()
            .into_iter()
            .map(|b| (b, Bipartition::new(self.lambda.add_box(b).unwrap(), self.mu.clone())))
            .collect();
        let down = self
            .mu
            .remove_box_candidates()
            .into_iter()
            .map(|b| (b, Bipartition::new(self.lambda.clone(), self.mu.remove_box(b).unwrap())))
            .collect();
        (up, down)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda={} mu={}", self.lambda, self.mu)
    }
}

impl FromStr for Bipartition {
    type Err = JackError;

    /// Accepts `lambda=2,1 mu=1`; either field may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Bipartition::empty();
        for tok in s.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| JackError::Parse(format!("expected key=value, got {tok:?}")))?;
            match key {
                "lambda" => out.lambda = val.parse()?,
                "mu" => out.mu = val.parse()?,
                _ => return Err(JackError::Parse(format!("unknown key {key:?}"))),
            }
        }
        Ok(out)
    }
}

/// A box together with the bipartition it leads to.
pub type Neighbour = ((usize, usize), Bipartition);

/// Weakly decreasing sequence of integers, possibly negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSequence(Vec<i64>);

impl IntSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if !entries.windows(2).all(|w| w[0] >= w[1]) {
            return Err(JackError::Parse(format!(
                "sequence is not weakly decreasing: {entries:?}"
            )));
        }
        Ok(IntSequence(entries))
    }

    pub fn zeros(n: usize) -> Self {
        IntSequence(vec![0; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min(&self) -> i64 {
        self.0.last().copied().unwrap_or(0)
    }

    /// `(-χ_N, ..., -χ_1)`.
    pub fn w(&self) -> IntSequence {
        IntSequence(self.0.iter().rev().map(|&c| -c).collect())
    }

    /// Add `a` to every entry.
    pub fn shift(&self, a: i64) -> IntSequence {
        IntSequence(self.0.iter().map(|&c| c + a).collect())
    }

    /// Increase entry `i` (0-based) if the result stays weakly decreasing.
    pub fn raise(&self, i: usize) -> Option<IntSequence> {
        if i > 0 && self.0[i - 1] == self.0[i] {
            return None;
        }
        let mut v = self.0.clone();
        v[i] += 1;
        Some(IntSequence(v))
    }

    /// The bipartition `α` with `chi_n(α, N) = self`.
    pub fn to_bipartition(&self) -> Bipartition {
        let lam: Vec<usize> = self.0.iter().filter(|&&c| c > 0).map(|&c| c as usize).collect();
        let mu: Vec<usize> = self
            .0
            .iter()
            .rev()
            .filter(|&&c| c < 0)
            .map(|&c| (-c) as usize)
            .collect();
        Bipartition::new(Partition::new(lam), Partition::new(mu))
    }

    /// Nonnegative entries as a partition; `None` if any entry is negative.
    pub fn as_partition(&self) -> Option<Partition> {
        if self.min() < 0 {
            return None;
        }
        Some(Partition::new(self.0.iter().map(|&c| c as usize).collect()))
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for IntSequence {
    type Err = JackError;

    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| JackError::Parse(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntSequence::new(v)
    }
}

/// `(λ_1, ..., λ_r, 0, ..., 0, -μ_s, ..., -μ_1)` of length `n`.
pub fn chi_n(alpha: &Bipartition, n: usize) -> Result<IntSequence> {
    if n < alpha.len() {
        return Err(JackError::LengthTooSmall { n, len: alpha.len() });
    }
    let mut v: Vec<i64> = alpha.lambda.parts().iter().map(|&p| p as i64).collect();
    v.resize(n - alpha.mu.len(), 0);
    v.extend(alpha.mu.parts().iter().rev().map(|&p| -(p as i64)));
    Ok(IntSequence(v))
}

pub fn dominance_leq(a: &IntSequence, b: &IntSequence) -> Result<bool> {
    if a.len() != b.len() {
        return Err(JackError::IncomparableInput(format!(
            "lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    if a.sum() != b.sum() {
        return Err(JackError::IncomparableInput(format!(
            "sums {} and {}",
            a.sum(),
            b.sum()
        )));
    }
    let (mut sa, mut sb) = (0i64, 0i64);
    for (x, y) in a.0.iter().zip(&b.0) {
        sa += x;
        sb += y;
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `c(□, a) = (j-1) + k(i-1) + a` for the box in row `i`, column `j`.
pub fn content<C: Coeff>(b: (usize, usize), k: &C, a: &C) -> C {
    let (i, j) = b;
    C::from_i64(j as i64 - 1).add(&k.mul_int(i as i64 - 1)).add(a)
}

/// [`content`] over `Q(k, p0)` with symbolic `k`.
pub fn content_sym(b: (usize, usize), a: &ParamRat) -> ParamRat {
    content(b, &ParamRat::k(), a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn seq(v: &[i64]) -> IntSequence {
        IntSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn corners() {
        assert_eq!(p(&[2, 1]).add_box_candidates(), vec![(1, 3), (2, 2), (3, 1)]);
        assert_eq!(Partition::empty().add_box_candidates(), vec![(1, 1)]);
        assert_eq!(p(&[2, 1]).remove_box_candidates(), vec![(1, 2), (2, 1)]);
        assert_eq!(p(&[3, 3, 1]).deepest_removable(), Some((3, 1)));
        assert_eq!(p(&[2, 2]).deepest_removable(), Some((2, 2)));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(
            chi_n(&Bipartition::from_parts(&[1], &[1]), 3).unwrap(),
            seq(&[1, 0, -1])
        );
        assert_eq!(
            chi_n(&Bipartition::from_parts(&[2, 1], &[1]), 4).unwrap(),
            seq(&[2, 1, 0, -1])
        );
        assert_eq!(
            chi_n(&Bipartition::from_parts(&[1], &[1]), 1),
            Err(JackError::LengthTooSmall { n: 1, len: 2 })
        );
        let a = Bipartition::from_parts(&[3, 1], &[2, 2, 1]);
        assert_eq!(chi_n(&a, 6).unwrap().to_bipartition(), a);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&seq(&[1, 1, 1]), &seq(&[3, 0, 0])).unwrap());
        assert!(dominance_leq(&seq(&[2, 1]), &seq(&[2, 1])).unwrap());
        assert!(matches!(
            dominance_leq(&seq(&[3]), &seq(&[2, 1])),
            Err(JackError::IncomparableInput(_))
        ));
        assert!(!dominance_leq(&seq(&[3, 0, 0]), &seq(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn w_examples() {
        assert_eq!(seq(&[2, 0, -1]).w(), seq(&[1, 0, -2]));
        let a = Bipartition::from_parts(&[2, 1], &[1]);
        assert_eq!(a.w().w(), a);
        assert_eq!(chi_n(&a, 4).unwrap().w(), chi_n(&a.w(), 4).unwrap());
    }

    #[test]
    fn content_examples() {
        let zero = ParamRat::zero();
        assert!(content_sym((1, 1), &zero).is_zero());
        assert_eq!(content_sym((2, 3), &zero), "2 + k".parse().unwrap());
        let a: ParamRat = "1 + k - k*p0".parse().unwrap();
        assert_eq!(content_sym((1, 1), &a), a);
    }

    #[test]
    fn text_round_trip() {
        let a: Bipartition = "lambda=2,1 mu=1".parse().unwrap();
        assert_eq!(a, Bipartition::from_parts(&[2, 1], &[1]));
        assert_eq!(a.to_string(), "lambda=2,1 mu=1");
        let b: Bipartition = "mu=3".parse().unwrap();
        assert_eq!(b.to_string(), "lambda=0 mu=3");
        assert_eq!(b.to_string().parse::<Bipartition>().unwrap(), b);
        assert!("lambda=1,2".parse::<Bipartition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Partition::all_of(5).len(), 7);
        assert_eq!(Partition::all_of(0), vec![Partition::empty()]);
        // sum_{a} p(a) p(n-a) for n = 0..4 is 1, 2, 5, 10, 20
        let counts: Vec<usize> = (0..5).map(|n| Bipartition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20]);
        assert_eq!(Partition::in_rectangle(2, 2).len(), 6);
    }
}
