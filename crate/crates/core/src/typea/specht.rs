//! Brute-force decomposition of the Schur (Specht-type) module of a
//! diagram into irreducible representations of the symmetric group.
//!
//! For `D` with `d` boxes, label the boxes row by row to get a tableau `T`,
//! and let `y_T = a_T b_T` where `a_T` symmetrizes over the row group and
//! `b_T` antisymmetrizes over the column group. The multiplicity of the
//! irreducible `S^λ` in `Q[S_d] y_T` is the rank of `ρ_λ(y_T)`, computed
//! exactly in Young's seminormal form.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::shapes::{Diagram, Partition};
use crate::error::{Error, Result};

/// Default ceiling on the number of boxes.
pub const DEFAULT_MAX_BOXES: usize = 7;

type Matrix = Vec<Vec<BigRational>>;

/// Standard Young tableaux of shape `λ`, each stored as the list of
/// `(row, col)` positions (0-based) of the entries `0, 1, …, d−1`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<(usize, usize)>> {
    let d = lambda.size();
    let mut out = Vec::new();
    let mut filled = vec![0usize; lambda.length()];
    let mut pos = Vec::with_capacity(d);
    fn go(lambda: &Partition, filled: &mut Vec<usize>, pos: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if pos.len() == lambda.size() {
            out.push(pos.clone());
            return;
        }
        for r in 0..filled.len() {
            let c = filled[r];
            if c < lambda.part(r + 1) && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                pos.push((r, c));
                go(lambda, filled, pos, out);
                pos.pop();
                filled[r] -= 1;
            }
        }
    }
    go(lambda, &mut filled, &mut pos, &mut out);
    out
}

/// Young's seminormal representation of `S_d` on the irreducible of shape
/// `λ`, given by the images of the adjacent transpositions `s_k = (k, k+1)`.
pub struct SeminormalRep {
    dim: usize,
    /// For each `k`, the sparse matrix of `ρ(s_k)` as a list of columns;
    /// column `t` holds the nonzero `(row, value)` entries.
    gens: Vec<Vec<Vec<(usize, BigRational)>>>,
}

impl SeminormalRep {
    pub fn new(lambda: &Partition) -> Self {
        let tableaux = standard_tableaux(lambda);
        let d = lambda.size();
        let index: HashMap<Vec<(usize, usize)>, usize> =
            tableaux.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
        let content = |p: (usize, usize)| p.1 as i64 - p.0 as i64;
        let mut gens = Vec::with_capacity(d.saturating_sub(1));
        for k in 0..d.saturating_sub(1) {
            let mut cols = Vec::with_capacity(tableaux.len());
            for t in &tableaux {
                let (a, b) = (t[k], t[k + 1]);
                let col = if a.0 == b.0 {
                    vec![(index[t], BigRational::one())]
                } else if a.1 == b.1 {
                    vec![(index[t], -BigRational::one())]
                } else {
                    let axial = content(b) - content(a);
                    let inv = BigRational::new(BigInt::one(), BigInt::from(axial));
                    let mut swapped = t.clone();
                    swapped.swap(k, k + 1);
                    let other = index[&swapped];
                    let off = if a.0 < b.0 { BigRational::one() } else { BigRational::one() - &inv * &inv };
                    vec![(index[t], inv), (other, off)]
                };
                cols.push(col);
            }
            gens.push(cols);
        }
        SeminormalRep { dim: tableaux.len(), gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> Matrix {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| if r == c { BigRational::one() } else { BigRational::zero() }).collect())
            .collect()
    }

    /// `m · ρ(s_k)` (`k` 0-based, swapping `k` and `k+1`).
    pub fn right_mul(&self, m: &Matrix, k: usize) -> Matrix {
        let g = &self.gens[k];
        m.iter()
            .map(|row| {
                g.iter()
                    .map(|col| col.iter().fold(BigRational::zero(), |acc, (r, v)| acc + &row[*r] * v))
                    .collect()
            })
            .collect()
    }

    /// `ρ(s_k) · m`
    pub fn left_mul(&self, k: usize, m: &Matrix) -> Matrix {
        let mut out = vec![vec![BigRational::zero(); m.first().map_or(0, Vec::len)]; self.dim];
        for (t, col) in self.gens[k].iter().enumerate() {
            for (r, v) in col {
                for (x, y) in out[*r].iter_mut().zip(&m[t]) {
                    if !y.is_zero() {
                        *x += v * y;
                    }
                }
            }
        }
        out
    }

    /// `ρ(w)` for a word `w = s_{k_1} ⋯ s_{k_m}`.
    pub fn word(&self, word: &[usize]) -> Matrix {
        word.iter().fold(self.identity(), |acc, &k| self.right_mul(&acc, k))
    }

    /// `m · Σ_{g ∈ S_B} (±1)^{ℓ(g)} ρ(g)` for the consecutive block
    /// `B = {start, …, start+len−1}`, using the coset decomposition
    /// `S_L = S_{L−1} · {1, s_{L−2}, s_{L−2}s_{L−3}, …}`.
    pub fn times_block_sum(&self, m: &Matrix, start: usize, len: usize, alternating: bool) -> Matrix {
        let mut acc = m.clone();
        for l in 2..=len {
            let mut total = acc.clone();
            let mut cur = acc;
            for j in 1..l {
                cur = self.right_mul(&cur, start + l - 1 - j);
                let negate = alternating && j % 2 == 1;
                add_into(&mut total, &cur, negate);
            }
            acc = total;
        }
        acc
    }
}

fn add_into(total: &mut Matrix, m: &Matrix, negate: bool) {
    for (a, b) in total.iter_mut().zip(m) {
        for (x, y) in a.iter_mut().zip(b) {
            if negate {
                *x -= y;
            } else {
                *x += y;
            }
        }
    }
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][c..cols].iter_mut().zip(&top[r][c..cols]) {
                *x -= &f * y;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// A word in adjacent transpositions for the permutation `perm`, where
/// `perm[x]` is the image of `x`: `perm = s_{w_1} ⋯ s_{w_m}`.
pub fn permutation_word(perm: &[usize]) -> Vec<usize> {
    // bubble sort the one-line notation; each swap of positions k, k+1 is
    // a right multiplication by s_k
    let mut p = perm.to_vec();
    let mut swaps = Vec::new();
    let n = p.len();
    for pass in 0..n {
        for k in 0..n.saturating_sub(1 + pass) {
            if p[k] > p[k + 1] {
                p.swap(k, k + 1);
                swaps.push(k);
            }
        }
    }
    // p · s_{k_1} ⋯ s_{k_m} = id, so p = s_{k_m} ⋯ s_{k_1}
    swaps.reverse();
    swaps
}

/// `ρ_λ(y_T)` for the row-reading tableau of `d`.
pub fn young_symmetrizer_image(rep: &SeminormalRep, d: &Diagram) -> Matrix {
    let boxes: Vec<(usize, usize)> = d.boxes().iter().copied().collect();
    let n = boxes.len();
    // a_T: rows are consecutive label blocks
    let mut a = rep.identity();
    let mut start = 0;
    while start < n {
        let row = boxes[start].0;
        let len = boxes[start..].iter().take_while(|b| b.0 == row).count();
        a = rep.times_block_sum(&a, start, len, false);
        start += len;
    }
    // b_T = τ b' τ^{-1}, where b' antisymmetrizes consecutive blocks and τ
    // sends column-major position k to the row-major label of that box
    let mut by_col = boxes.clone();
    by_col.sort_by_key(|&(r, c)| (c, r));
    let tau: Vec<usize> = by_col.iter().map(|b| boxes.binary_search(b).expect("box")).collect();
    let tau_word = permutation_word(&tau);
    let mut inner = rep.word(&tau_word);
    let mut start = 0;
    while start < n {
        let col = by_col[start].1;
        let len = by_col[start..].iter().take_while(|b| b.1 == col).count();
        inner = rep.times_block_sum(&inner, start, len, true);
        start += len;
    }
    // right-multiply by ρ(τ^{-1}) = ρ(s_{w_m}) ⋯ ρ(s_{w_1})
    let mut b = inner;
    for &k in tau_word.iter().rev() {
        b = rep.right_mul(&b, k);
    }
    matmul(&a, &b)
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn trace(m: &Matrix) -> BigRational {
    m.iter().enumerate().fold(BigRational::zero(), |acc, (k, row)| acc + &row[k])
}

/// Irreducible character `χ^λ` at the class of cycle type `μ`, by the
/// Murnaghan–Nakayama rule on beta-sets.
pub fn murnaghan_nakayama(lambda: &Partition, mu: &Partition) -> i64 {
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), i64> = HashMap::new();
    mn(lambda.parts().to_vec(), mu.parts().to_vec(), &mut memo)
}

fn mn(lambda: Vec<usize>, mu: Vec<usize>, memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    if let Some(&v) = memo.get(&(lambda.clone(), mu.clone())) {
        return v;
    }
    let k = mu[0];
    let rest: Vec<usize> = mu[1..].to_vec();
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = b - k;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let len = nb.len();
        let mut parts: Vec<usize> = nb.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        total += sign * mn(parts, rest.clone(), memo);
    }
    memo.insert((lambda, mu), total);
    total
}

/// Multiplicities `c_D^λ` of the Schur module of `d`, by brute force in the
/// group algebra of `S_{|d|}`. Fails when `d` has more than `max_boxes`
/// boxes.
pub fn specht_decompose_bruteforce(d: &Diagram, max_boxes: usize) -> Result<BTreeMap<Partition, i64>> {
    let n = d.size();
    if n > max_boxes {
        return Err(Error::TooLarge { size: n, limit: max_boxes });
    }
    let shapes = Partition::all_of_size(n);
    let results: Vec<Result<(Partition, i64)>> = shapes
        .par_iter()
        .map(|lambda| {
            let rep = SeminormalRep::new(lambda);
            let id_class = Partition::new(vec![1; n]).expect("partition");
            if rep.dim() as i64 != murnaghan_nakayama(lambda, &id_class) {
                return Err(Error::Consistency(format!("dimension of the seminormal form for {lambda} is wrong")));
            }
            let y = young_symmetrizer_image(&rep, d);
            Ok((lambda.clone(), rank(&y) as i64))
        })
        .collect();
    let mut out = BTreeMap::new();
    for r in results {
        let (lambda, m) = r?;
        if m > 0 {
            out.insert(lambda, m);
        }
    }
    let total: i64 = out.iter().map(|(l, m)| m * murnaghan_nakayama(l, &Partition::new(vec![1; n]).expect("p"))).sum();
    if total <= 0 {
        return Err(Error::Consistency("Young symmetrizer acts as zero".into()));
    }
    Ok(out)
}

/// `true` if every generator squares to the identity and the braid and
/// commutation relations hold.
pub fn check_coxeter_relations(rep: &SeminormalRep) -> bool {
    let n = rep.gens.len();
    let id = rep.identity();
    for k in 0..n {
        if rep.word(&[k, k]) != id {
            return false;
        }
        for l in k + 1..n {
            let ok = if l == k + 1 {
                rep.word(&[k, l, k]) == rep.word(&[l, k, l])
            } else {
                rep.word(&[k, l]) == rep.word(&[l, k])
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Integer value of an exact rational, when it is one.
pub fn as_integer(x: &BigRational) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    let v = x.to_integer();
    if v.abs() > BigInt::from(i64::MAX) {
        return None;
    }
    v.to_string().parse().ok()
}
