//! Partitions, partition sequences and diagrams.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{RootDatum, Weight};
use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing and positive")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_k` (1-based), zero past the end.
    pub fn part(&self, k: usize) -> usize {
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// `μ ⊆ λ` as Young diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.length() <= self.length() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// The `GL_n` dominant weight `Σ λ_k ε_k`.
    pub fn to_weight(&self, n: usize) -> Result<Weight> {
        if self.length() > n {
            return Err(Error::RankTooSmall { rank: n, reason: format!("{self} has more than {n} parts") });
        }
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        v.resize(n, 0);
        Ok(Weight(v))
    }

    /// Inverse of [`to_weight`](Self::to_weight) for polynomial dominant weights.
    pub fn from_weight(w: &Weight) -> Option<Partition> {
        if w.0.iter().any(|&x| x < 0) || w.0.windows(2).any(|p| p[0] < p[1]) {
            return None;
        }
        Partition::new(w.0.iter().map(|&x| x as usize).collect()).ok()
    }

    /// Boxes `(row, col)` in English notation, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A sequence `λ^(1), …, λ^(r)` with `ℓ(λ^(i)) ≤ i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct PartitionSequence(Vec<Partition>);

impl PartitionSequence {
    pub fn new(seq: Vec<Partition>) -> Result<Self> {
        for (k, p) in seq.iter().enumerate() {
            if p.length() > k + 1 {
                return Err(Error::InvalidSequence(format!("entry {} is {p}, which has more than {} parts", k + 1, k + 1)));
            }
        }
        Ok(PartitionSequence(seq))
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(seq: &[&[usize]]) -> Result<Self> {
        Self::new(seq.iter().map(|p| Partition::new(p.to_vec())).collect::<Result<_>>()?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<Vec<usize>> =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("partition sequence: {e}")))?;
        Self::new(raw.into_iter().map(Partition::new).collect::<Result<_>>()?)
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.0
    }

    /// `λ^(i)`, 1-based.
    pub fn get(&self, i: usize) -> &Partition {
        &self.0[i - 1]
    }

    /// The number `r` of entries.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// Drops trailing empty partitions.
    pub fn trimmed(&self) -> PartitionSequence {
        let mut v = self.0.clone();
        while v.last().is_some_and(Partition::is_empty) {
            v.pop();
        }
        PartitionSequence(v)
    }

    /// Longest part length over all entries (0 if all are empty).
    pub fn max_length(&self) -> usize {
        self.0.iter().map(Partition::length).max().unwrap_or(0)
    }
}

impl fmt::Display for PartitionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl<'de> Deserialize<'de> for PartitionSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PartitionSequence::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A finite set of boxes `(row, col)`, both 1-based, rows counted downwards.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Diagram(BTreeSet<(usize, usize)>);

impl Diagram {
    pub fn new(boxes: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let set: BTreeSet<(usize, usize)> = boxes.into_iter().collect();
        if let Some(b) = set.iter().find(|(r, c)| *r == 0 || *c == 0) {
            return Err(Error::InvalidDiagram(format!("box {b:?} is not 1-based")));
        }
        Ok(Diagram(set))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<(usize, usize)> =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("diagram: {e}")))?;
        Self::new(raw)
    }

    pub fn boxes(&self) -> &BTreeSet<(usize, usize)> {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.0.iter().map(|b| b.0).max().unwrap_or(0)
    }

    pub fn num_cols(&self) -> usize {
        self.0.iter().map(|b| b.1).max().unwrap_or(0)
    }

    /// Sorted row indices of the boxes in column `c`.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.0.iter().filter(|b| b.1 == c).map(|b| b.0).collect()
    }

    pub fn row(&self, r: usize) -> Vec<usize> {
        self.0.iter().filter(|b| b.0 == r).map(|b| b.1).collect()
    }

    /// Every column is a contiguous run of rows.
    pub fn is_column_convex(&self) -> bool {
        (1..=self.num_cols()).all(|c| {
            let rows = self.column(c);
            rows.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }

    /// Moves every box down by `by` rows.
    pub fn shifted_down(&self, by: usize) -> Diagram {
        Diagram(self.0.iter().map(|&(r, c)| (r + by, c)).collect())
    }

    /// Removes empty rows and columns, keeping the relative order.
    pub fn compressed(&self) -> Diagram {
        let rows: BTreeSet<usize> = self.0.iter().map(|b| b.0).collect();
        let cols: BTreeSet<usize> = self.0.iter().map(|b| b.1).collect();
        let rank = |set: &BTreeSet<usize>, x: usize| set.range(..x).count() + 1;
        Diagram(self.0.iter().map(|&(r, c)| (rank(&rows, r), rank(&cols, c))).collect())
    }

    /// English-notation picture: `#` for a box, `.` otherwise.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for r in 1..=self.num_rows() {
            for c in 1..=self.num_cols() {
                out.push(if self.0.contains(&(r, c)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(usize, usize)> = Vec::deserialize(d)?;
        Diagram::new(raw).map_err(serde::de::Error::custom)
    }
}

/// Converts dominant `GL_n` weights to partitions; fails on weights with a
/// negative entry.
pub fn weights_to_partitions(
    datum: &RootDatum,
    coeffs: &std::collections::BTreeMap<Weight, i64>,
) -> Result<std::collections::BTreeMap<Partition, i64>> {
    if !datum.is_gl() {
        return Err(Error::Invalid("partitions only make sense for GL_n".into()));
    }
    coeffs
        .iter()
        .map(|(w, &c)| {
            Partition::from_weight(w)
                .map(|p| (p, c))
                .ok_or_else(|| Error::Invalid(format!("{w} is not a polynomial dominant weight")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_basics() {
        let p = Partition::new(vec![4, 3, 1, 1, 0]).unwrap();
        assert_eq!(p.parts(), &[4, 3, 1, 1]);
        assert_eq!(p.conjugate().parts(), &[4, 2, 2, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p.to_string(), "(4,3,1,1)");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[4,3,1,1]");
        assert_eq!(Partition::all_of_size(5).len(), 7);
        assert_eq!(Partition::all_of_size(0), vec![Partition::empty()]);
    }

    #[test]
    fn sequence_validation() {
        assert!(PartitionSequence::from_parts(&[&[1], &[1, 1]]).is_ok());
        assert!(PartitionSequence::from_parts(&[&[1, 1]]).is_err());
        let s = PartitionSequence::from_json("[[1],[],[2,1,1]]").unwrap();
        assert_eq!(s.total_size(), 5);
    }

    #[test]
    fn diagram_predicates() {
        let d = Diagram::new([(1, 1), (2, 2), (3, 2), (2, 3), (4, 3)]).unwrap();
        assert!(!d.is_column_convex());
        assert_eq!(d.to_ascii(), "#..\n.##\n.#.\n..#\n");
        let c = Diagram::new([(2, 3), (4, 7)]).unwrap().compressed();
        assert_eq!(c, Diagram::new([(1, 1), (2, 2)]).unwrap());
        assert!(Diagram::new([(0, 1)]).is_err());
    }
}
