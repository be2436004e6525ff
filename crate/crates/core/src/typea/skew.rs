//! Skew shapes, Littlewood–Richardson coefficients and the search for a
//! skew presentation of a diagram.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::shapes::{Diagram, Partition};
use crate::error::{Error, Result};

/// Row permutations are searched exhaustively up to this many rows.
pub const MAX_SEARCH_ROWS: usize = 8;

/// The skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidPartition(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn diagram(&self) -> Diagram {
        let boxes = (1..=self.outer.length())
            .flat_map(|r| (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| (r, c)));
        Diagram::new(boxes).expect("1-based boxes")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Expands the skew Schur function `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν` by
/// enumerating Littlewood–Richardson tableaux: semistandard fillings whose
/// reverse reading word (right to left, top to bottom) is a lattice word.
pub fn lr_skew_expand(shape: &SkewShape) -> BTreeMap<Partition, i64> {
    let (outer, inner) = (&shape.outer, &shape.inner);
    // cells in filling order: rows top to bottom, right to left within a row
    let mut cells = Vec::new();
    for r in 1..=outer.length() {
        for c in (inner.part(r) + 1..=outer.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let rows = outer.length();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut counts = vec![0usize; rows + 2];
    let mut out = BTreeMap::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        filling: &mut BTreeMap<(usize, usize), usize>,
        counts: &mut Vec<usize>,
        rows: usize,
        out: &mut BTreeMap<Partition, i64>,
    ) {
        if k == cells.len() {
            let nu: Vec<usize> = counts[1..].iter().copied().filter(|&x| x > 0).collect();
            *out.entry(Partition::new(nu).expect("lattice word content is a partition")).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[k];
        // weakly increasing rows: bounded by the entry to the right
        let hi = filling.get(&(r, c + 1)).copied().unwrap_or(rows);
        // strictly increasing columns: above the entry overhead
        let lo = if r > 1 { filling.get(&(r - 1, c)).map_or(1, |v| v + 1) } else { 1 };
        for v in lo..=hi {
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            filling.insert((r, c), v);
            counts[v] += 1;
            go(k + 1, cells, filling, counts, rows, out);
            counts[v] -= 1;
            filling.remove(&(r, c));
        }
    }
    go(0, &cells, &mut filling, &mut counts, rows, &mut out);
    out
}

/// Tries to rearrange the rows and columns of `d` into a skew shape.
///
/// Empty rows and columns are dropped first. For each distinct ordering
/// of the rows (all of them when there are at most [`MAX_SEARCH_ROWS`],
/// otherwise only the given order) the columns are sorted by bottom row
/// and then top row, both descending, which is the only arrangement that
/// can be skew. Among all successes the one with the smallest inner shape,
/// then the lexicographically smallest outer shape, is returned.
pub fn skew_normalise(d: &Diagram) -> Option<SkewShape> {
    let d = d.compressed();
    let nrows = d.num_rows();
    let rows: Vec<Vec<usize>> = (1..=nrows).map(|r| d.row(r)).collect();
    let mut best: Option<SkewShape> = None;
    let mut consider = |order: &[usize]| {
        if let Some(s) = skew_for_row_order(&rows, order, d.num_cols()) {
            let key = |s: &SkewShape| (s.inner.size(), s.outer.clone(), s.inner.clone());
            if best.as_ref().is_none_or(|b| key(&s) < key(b)) {
                best = Some(s);
            }
        }
    };
    if nrows <= MAX_SEARCH_ROWS {
        let mut order: Vec<usize> = (0..nrows).collect();
        // identical rows are interchangeable; sorting by content lets the
        // permutation walk skip duplicates
        order.sort_by(|&a, &b| rows[a].cmp(&rows[b]).then(a.cmp(&b)));
        loop {
            consider(&order);
            if !next_distinct_permutation(&mut order, &rows) {
                break;
            }
        }
    } else {
        let order: Vec<usize> = (0..nrows).collect();
        consider(&order);
    }
    best
}

/// Advances `order` to the next permutation of row contents in
/// lexicographic order, treating equal rows as identical.
fn next_distinct_permutation(order: &mut [usize], rows: &[Vec<usize>]) -> bool {
    let key = |i: usize| &rows[i];
    let n = order.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && key(order[i - 1]) >= key(order[i]) {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while key(order[j]) <= key(order[i - 1]) {
        j -= 1;
    }
    order.swap(i - 1, j);
    order[i..].reverse();
    true
}

fn skew_for_row_order(rows: &[Vec<usize>], order: &[usize], ncols: usize) -> Option<SkewShape> {
    let n = order.len();
    // (bottom, top) of each column in the new row order
    let mut spans: Vec<(usize, usize)> = Vec::with_capacity(ncols);
    for c in 1..=ncols {
        let mut present: Vec<usize> = (0..n).filter(|&k| rows[order[k]].contains(&c)).map(|k| k + 1).collect();
        present.sort_unstable();
        if present.is_empty() || present.windows(2).any(|w| w[1] != w[0] + 1) {
            return None;
        }
        spans.push((present[present.len() - 1], present[0]));
    }
    spans.sort_by(|a, b| b.cmp(a));
    if spans.windows(2).any(|w| w[1].1 > w[0].1) {
        return None;
    }
    let outer: Vec<usize> = (1..=n).map(|r| spans.iter().filter(|s| s.0 >= r).count()).collect();
    let inner: Vec<usize> = (1..=n).map(|r| spans.iter().filter(|s| s.1 > r).count()).collect();
    SkewShape::new(Partition::new(outer).ok()?, Partition::new(inner).ok()?).ok()
}
