//! The `GL_n` picture: partition sequences, column-convex diagrams, their
//! characters, stable multiplicities, and two independent oracles
//! (Littlewood–Richardson for skew shapes, and a brute-force Specht module
//! computation).

mod shapes;
pub mod skew;
pub mod specht;

use std::collections::BTreeMap;

pub use shapes::{weights_to_partitions, Diagram, Partition, PartitionSequence};
pub use skew::{lr_skew_expand, skew_normalise, SkewShape};
pub use specht::specht_decompose_bruteforce;

use crate::cartan::RootDatum;
use crate::error::{Error, Result};
use crate::monomial::{LatticePoint, Monomial};
use crate::product::{decompose, expand_label, s_label, PointMultiset};
use crate::truncation::ThresholdSet;
use crate::weightring::{apply_word, pi_longest, weyl_decompose, GroupAlgebraElement};

/// `D(λ̲)`: start empty; at step `i` move everything down one row and put
/// the Young diagram of `λ^(i)` to the right, top-aligned in row 1.
pub fn diagram_of_sequence(seq: &PartitionSequence) -> Diagram {
    let mut boxes: Vec<(usize, usize)> = Vec::new();
    for lambda in seq.partitions() {
        for b in &mut boxes {
            b.0 += 1;
        }
        let offset = boxes.iter().map(|b| b.1).max().unwrap_or(0);
        boxes.extend(lambda.boxes().map(|(r, c)| (r, c + offset)));
    }
    Diagram::new(boxes).expect("1-based boxes")
}

/// Reads a column-convex diagram as a partition sequence: with `r` rows, a
/// column whose top box is in row `t` contributes a column of its length
/// to `λ^(r − t + 1)`. The diagram of the result agrees with `d` up to a
/// permutation of columns.
pub fn sequence_of_diagram(d: &Diagram) -> Result<PartitionSequence> {
    if !d.is_column_convex() {
        return Err(Error::InvalidDiagram("diagram is not column-convex".into()));
    }
    let r = d.num_rows();
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); r];
    for c in 1..=d.num_cols() {
        let rows = d.column(c);
        if let (Some(&top), Some(&bottom)) = (rows.first(), rows.last()) {
            columns[r - top].push(bottom - top + 1);
        }
    }
    let seq = columns
        .into_iter()
        .map(|mut lens| {
            lens.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(lens).map(|p| p.conjugate())
        })
        .collect::<Result<Vec<_>>>()?;
    PartitionSequence::new(seq)
}

/// Searches row orders (up to the same bound as [`skew_normalise`]) for
/// one that makes `d` column-convex.
pub fn column_convex_arrangement(d: &Diagram) -> Option<Diagram> {
    let d = d.compressed();
    if d.is_column_convex() {
        return Some(d);
    }
    let n = d.num_rows();
    if n > skew::MAX_SEARCH_ROWS {
        return None;
    }
    let mut order: Vec<usize> = (1..=n).collect();
    loop {
        let arranged =
            Diagram::new(d.boxes().iter().map(|&(r, c)| (order.iter().position(|&x| x == r).expect("row") + 1, c)))
                .expect("1-based");
        if arranged.is_column_convex() {
            return Some(arranged);
        }
        if !next_permutation(&mut order) {
            return None;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A partition sequence whose diagram is a row/column rearrangement of `d`
/// (so it has the same Schur module): `d` itself when column-convex,
/// otherwise a skew presentation, otherwise any column-convex row order.
pub fn sequence_for_diagram(d: &Diagram) -> Result<PartitionSequence> {
    let compressed = d.compressed();
    if compressed.is_column_convex() {
        return sequence_of_diagram(&compressed);
    }
    if let Some(s) = skew_normalise(d) {
        return sequence_of_diagram(&s.diagram());
    }
    match column_convex_arrangement(d) {
        Some(a) => sequence_of_diagram(&a),
        None => Err(Error::InvalidDiagram("no row order makes the diagram column-convex".into())),
    }
}

/// Smallest `n` for which both the partition sequence recurrence and
/// `R(λ̲)` live in `GL_n`.
pub fn natural_rank(seq: &PartitionSequence) -> usize {
    seq.len().max(seq.max_length() + 1).max(1)
}

/// `R(λ̲)` and `J(λ̲)`. The increment for `λ^(i)` puts `λ_j − λ_{j+1}` points
/// at `(j, j − 2i)`, one site per column length, so that its weight is
/// `λ^(i)` and it lies in `J(λ̲^i) \ J(λ̲^{i−1})`, where `J(λ̲^i)` has thresholds
/// `min(2 − j, j − 2i)`.
pub fn multiset_of_sequence(datum: &RootDatum, seq: &PartitionSequence) -> Result<(PointMultiset, ThresholdSet)> {
    if !datum.is_gl() {
        return Err(Error::Invalid("partition sequences live in GL_n".into()));
    }
    if seq.max_length() >= datum.rank() {
        return Err(Error::RankTooSmall {
            rank: datum.rank(),
            reason: format!("needs GL_n with n > {}", seq.max_length()),
        });
    }
    let mut r = PointMultiset::new();
    for (k, lambda) in seq.partitions().iter().enumerate() {
        let i = (k + 1) as i64;
        for j in 1..=lambda.length() {
            let m = lambda.part(j) - lambda.part(j + 1);
            r.insert(LatticePoint::new(datum, j, j as i64 - 2 * i)?, m as u64);
        }
    }
    let r_len = seq.len() as i64;
    let theta = datum.vertices().map(|j| Some((2 - j as i64).min(j as i64 - 2 * r_len))).collect();
    Ok((r, ThresholdSet::new(datum, theta)?))
}

/// Shifts `R` (vertically, by an even amount, only if needed) into
/// `down({(1, −1)})` and reads the strip contents: a point `(j, c)` becomes a
/// column of length `j` in `λ^((j − c)/2)`. Trailing empty entries are
/// not produced.
pub fn sequence_of_multiset(r: &PointMultiset) -> Result<PartitionSequence> {
    for (p, _) in r.iter() {
        if p.vertex == 0 || (p.level - p.vertex as i64).rem_euclid(2) != 0 {
            return Err(Error::Parity { vertex: p.vertex, level: p.level });
        }
    }
    let slack = r.iter().map(|(p, _)| (-(p.vertex as i64) - p.level) / 2).min().unwrap_or(0);
    let shift = 2 * slack.min(0);
    let mut columns: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (p, n) in r.iter() {
        let i = ((p.vertex as i64 - p.level - shift) / 2) as usize;
        columns.entry(i).or_default().extend(std::iter::repeat_n(p.vertex, n as usize));
    }
    let len = columns.keys().max().copied().unwrap_or(0);
    let seq = (1..=len)
        .map(|i| {
            let mut lens = columns.remove(&i).unwrap_or_default();
            lens.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(lens).map(|p| p.conjugate())
        })
        .collect::<Result<Vec<_>>>()?;
    PartitionSequence::new(seq)
}

/// The flagged character of `D(λ̲)` in `GL_n`:
/// `ch_i = e^{λ^(i)} · π_1 ⋯ π_{i−1}(ch_{i−1})`, `ch_0 = 1`.
pub fn flagged_schur_char(seq: &PartitionSequence, n: usize) -> Result<GroupAlgebraElement> {
    if n < seq.len() {
        return Err(Error::RankTooSmall { rank: n, reason: format!("sequence has length {}", seq.len()) });
    }
    let datum = RootDatum::gl(n)?;
    let mut ch = GroupAlgebraElement::one(&datum);
    for (k, lambda) in seq.partitions().iter().enumerate() {
        let word: Vec<usize> = (1..=k).collect();
        ch = apply_word(&datum, &word, &ch).shifted(&lambda.to_weight(n)?);
    }
    Ok(ch)
}

/// The `GL_n` character of the Schur module of `D(λ̲)`.
pub fn schur_char(seq: &PartitionSequence, n: usize) -> Result<GroupAlgebraElement> {
    let flagged = flagged_schur_char(seq, n)?;
    Ok(pi_longest(&RootDatum::gl(n)?, &flagged))
}

/// `c_D^λ` for `ℓ(λ) ≤ n`, from the character.
pub fn schur_decompose(seq: &PartitionSequence, n: usize) -> Result<BTreeMap<Partition, i64>> {
    let datum = RootDatum::gl(n)?;
    weights_to_partitions(&datum, &weyl_decompose(&datum, &schur_char(seq, n)?)?)
}

/// `ψ_{n,m}`: the element of `M(GL_m, R)` with the same `S`-label.
pub fn psi_embed(small: &RootDatum, large: &RootDatum, r: &PointMultiset, p: &Monomial) -> Result<Monomial> {
    if !small.is_gl() || !large.is_gl() {
        return Err(Error::Invalid("ψ is defined between general linear groups".into()));
    }
    if small.rank() > large.rank() {
        return Err(Error::Invalid(format!("cannot embed GL_{} into GL_{}", small.rank(), large.rank())));
    }
    r.validate(small)?;
    let s = s_label(small, r, p)?;
    Ok(expand_label(large, r, &s))
}

/// Smallest `n` such that `up(R) ∩ down({(i, c − 2) : (i, c) ∈ Supp R})`,
/// computed over the infinite type A diagram, lives over `{1, …, n − 1}`.
pub fn stable_bound(r: &PointMultiset) -> usize {
    let pts: Vec<LatticePoint> = r.support().into_iter().collect();
    if pts.is_empty() {
        return 1;
    }
    let lo = pts.iter().map(|p| p.level).min().expect("nonempty");
    let hi = pts.iter().map(|p| p.level).max().expect("nonempty");
    let top = pts.iter().map(|p| p.vertex).max().expect("nonempty") + (hi - lo) as usize + 2;
    let dist = |a: usize, b: usize| (a as i64 - b as i64).abs();
    let mut last = 0;
    for j in 1..=top {
        let floor = pts.iter().map(|p| p.level + dist(p.vertex, j)).min().expect("nonempty");
        let ceiling = pts.iter().map(|p| p.level - 2 - dist(p.vertex, j)).max().expect("nonempty");
        if floor <= ceiling {
            last = j;
        }
    }
    last + 1
}

/// The stable multiplicities `c_R^λ`, computed in `GL_n` for `n` at least
/// the stable bound and large enough for `R` to live there.
pub fn stable_coeffs(r: &PointMultiset) -> Result<BTreeMap<Partition, i64>> {
    let n = stable_bound(r).max(r.max_vertex() + 1);
    let datum = RootDatum::gl(n)?;
    weights_to_partitions(&datum, &decompose(&datum, r)?)
}

/// Keeps the partitions with at most `n` parts.
pub fn restrict_coeffs(coeffs: &BTreeMap<Partition, i64>, n: usize) -> BTreeMap<Partition, i64> {
    coeffs.iter().filter(|(p, _)| p.length() <= n).map(|(p, &c)| (p.clone(), c)).collect()
}
