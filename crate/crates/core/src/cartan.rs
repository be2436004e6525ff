//! Dynkin data, weight lattices and Weyl group actions.
//!
//! Semisimple types (A, D, E) use fundamental-weight coordinates, so the
//! pairing with a simple coroot is just a coordinate. `GL_n` uses the
//! standard basis `ε_1, …, ε_n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanKind {
    A,
    D,
    E,
    GL,
}

impl fmt::Display for CartanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanKind::A => "A",
            CartanKind::D => "D",
            CartanKind::E => "E",
            CartanKind::GL => "GL",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" | "SL" => Ok(CartanKind::A),
            "D" => Ok(CartanKind::D),
            "E" | "E6" | "E7" | "E8" => Ok(CartanKind::E),
            "GL" => Ok(CartanKind::GL),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// An integral weight. The meaning of the coordinates depends on the
/// [`RootDatum`] it belongs to.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `self += k * other`
    pub fn add_scaled(&mut self, other: &Weight, k: i64) {
        debug_assert_eq!(self.0.len(), other.0.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += k * b;
        }
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        let mut w = self.clone();
        w.add_scaled(other, 1);
        w
    }

    pub fn minus(&self, other: &Weight) -> Weight {
        let mut w = self.clone();
        w.add_scaled(other, -1);
        w
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, x) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

/// Root datum of a simply-laced type together with the data the crystal
/// code needs: adjacency, a bipartition of the vertices, graph distances,
/// simple roots and fundamental weights.
#[derive(Clone, Debug)]
pub struct RootDatum {
    kind: CartanKind,
    rank: usize,
    vertices: usize,
    lattice_rank: usize,
    adjacency: Vec<Vec<usize>>,
    parity: Vec<i64>,
    distance: Vec<Vec<usize>>,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    fundamental: Vec<Weight>,
    height_coeffs: Vec<i64>,
    inverse_cartan: Vec<Vec<Ratio<i64>>>,
    longest_word: Vec<usize>,
}

impl RootDatum {
    /// Builds the datum for `kind` with parameter `rank`. For `GL` the
    /// parameter is `n` in `GL_n`, so the diagram has `n - 1` vertices.
    pub fn new(kind: CartanKind, rank: usize) -> Result<Self> {
        let bad = || Error::InvalidRank { kind: kind.to_string(), rank };
        let (vertices, edges): (usize, Vec<(usize, usize)>) = match kind {
            CartanKind::A => {
                if rank < 1 {
                    return Err(bad());
                }
                (rank, (1..rank).map(|i| (i, i + 1)).collect())
            }
            CartanKind::GL => {
                if rank < 1 {
                    return Err(bad());
                }
                (rank - 1, (1..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect())
            }
            CartanKind::D => {
                if rank < 4 {
                    return Err(bad());
                }
                let mut e: Vec<_> = (1..rank - 1).map(|i| (i, i + 1)).collect();
                e.push((rank - 2, rank));
                (rank, e)
            }
            CartanKind::E => {
                if !(6..=8).contains(&rank) {
                    return Err(bad());
                }
                let mut e = vec![(1, 3), (3, 4), (4, 5), (2, 4)];
                for i in 5..rank {
                    e.push((i, i + 1));
                }
                (rank, e)
            }
        };

        let mut adjacency = vec![Vec::new(); vertices];
        for &(a, b) in &edges {
            adjacency[a - 1].push(b);
            adjacency[b - 1].push(a);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }

        let distance: Vec<Vec<usize>> = (0..vertices)
            .map(|s| {
                let mut d = vec![usize::MAX; vertices];
                d[s] = 0;
                let mut q = VecDeque::from([s]);
                while let Some(v) = q.pop_front() {
                    for &w in &adjacency[v] {
                        if d[w - 1] == usize::MAX {
                            d[w - 1] = d[v] + 1;
                            q.push_back(w - 1);
                        }
                    }
                }
                d
            })
            .collect();

        let parity: Vec<i64> = match kind {
            CartanKind::A | CartanKind::GL => (1..=vertices).map(|i| (i % 2) as i64).collect(),
            CartanKind::D | CartanKind::E => {
                (0..vertices).map(|j| (distance[0][j] % 2) as i64).collect()
            }
        };

        let mut cartan = vec![vec![0i64; vertices]; vertices];
        for i in 0..vertices {
            cartan[i][i] = 2;
            for &j in &adjacency[i] {
                cartan[i][j - 1] = -1;
            }
        }

        let lattice_rank = if kind == CartanKind::GL { rank } else { vertices };
        let (simple_roots, fundamental) = if kind == CartanKind::GL {
            let roots = (0..vertices)
                .map(|i| {
                    let mut w = Weight::zero(rank);
                    w.0[i] = 1;
                    w.0[i + 1] = -1;
                    w
                })
                .collect();
            let fund = (0..vertices)
                .map(|i| Weight((0..rank).map(|j| i64::from(j <= i)).collect()))
                .collect();
            (roots, fund)
        } else {
            let roots = (0..vertices).map(|i| Weight((0..vertices).map(|j| cartan[j][i]).collect())).collect();
            let fund = (0..vertices)
                .map(|i| {
                    let mut w = Weight::zero(vertices);
                    w.0[i] = 1;
                    w
                })
                .collect();
            (roots, fund)
        };

        let inverse_cartan = if kind == CartanKind::GL {
            Vec::new()
        } else {
            invert(&cartan)
        };
        let height_coeffs = if kind == CartanKind::GL {
            (0..rank).map(|j| (rank - 1 - j) as i64).collect()
        } else {
            let sums: Vec<Ratio<i64>> = (0..vertices)
                .map(|k| (0..vertices).map(|i| inverse_cartan[i][k]).sum())
                .collect();
            let l = sums.iter().fold(1i64, |acc, r| lcm(acc, *r.denom()));
            sums.iter().map(|r| (r * l).to_integer()).collect()
        };

        let mut datum = RootDatum {
            kind,
            rank,
            vertices,
            lattice_rank,
            adjacency,
            parity,
            distance,
            cartan,
            simple_roots,
            fundamental,
            height_coeffs,
            inverse_cartan,
            longest_word: Vec::new(),
        };
        datum.longest_word = datum.compute_longest_word();
        Ok(datum)
    }

    /// Parses names such as `"A"`, `"E7"` or `"GL"`; a rank embedded in the
    /// name (`E7`) must agree with `rank` when both are present.
    pub fn parse(kind: &str, rank: usize) -> Result<Self> {
        let k: CartanKind = kind.parse()?;
        let upper = kind.to_ascii_uppercase();
        if let Some(r) = upper.strip_prefix('E').and_then(|s| s.parse::<usize>().ok()) {
            if rank != 0 && rank != r {
                return Err(Error::InvalidRank { kind: kind.to_string(), rank });
            }
            return RootDatum::new(k, r);
        }
        RootDatum::new(k, rank)
    }

    pub fn gl(n: usize) -> Result<Self> {
        RootDatum::new(CartanKind::GL, n)
    }

    pub fn kind(&self) -> CartanKind {
        self.kind
    }

    /// The rank parameter passed at construction.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_gl(&self) -> bool {
        self.kind == CartanKind::GL
    }

    /// Number of Dynkin vertices `|I|`.
    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.vertices
    }

    /// Number of coordinates of a weight.
    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.vertices {
            return Err(Error::UnknownVertex { vertex: i, max: self.vertices });
        }
        Ok(())
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() != self.lattice_rank {
            return Err(Error::WeightLength { got: w.len(), expected: self.lattice_rank });
        }
        Ok(())
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i - 1]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i - 1].contains(&j)
    }

    /// Parity class `p(i) ∈ {0, 1}`; adjacent vertices have different parity.
    pub fn parity(&self, i: usize) -> i64 {
        self.parity[i - 1]
    }

    pub fn distance(&self, i: usize, j: usize) -> i64 {
        self.distance[i - 1][j - 1] as i64
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i - 1]
    }

    pub fn fundamental_weight(&self, i: usize) -> &Weight {
        &self.fundamental[i - 1]
    }

    /// The determinant character of `GL_n`; `None` for semisimple types.
    pub fn determinant(&self) -> Option<Weight> {
        self.is_gl().then(|| Weight(vec![1; self.rank]))
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.lattice_rank)
    }

    /// `⟨α_i^∨, λ⟩`
    pub fn pairing(&self, i: usize, w: &Weight) -> i64 {
        if self.is_gl() {
            w.0[i - 1] - w.0[i]
        } else {
            w.0[i - 1]
        }
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let mut out = w.clone();
        self.reflect_in_place(i, &mut out);
        out
    }

    pub fn reflect_in_place(&self, i: usize, w: &mut Weight) {
        let m = self.pairing(i, w);
        w.add_scaled(&self.simple_roots[i - 1], -m);
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.vertices().all(|i| self.pairing(i, w) >= 0)
    }

    /// Weight `Σ_i c_i ϖ_i` (plus `d · det` for `GL_n`).
    pub fn from_fundamental(&self, coords: &[i64], det: i64) -> Result<Weight> {
        if coords.len() != self.vertices {
            return Err(Error::WeightLength { got: coords.len(), expected: self.vertices });
        }
        let mut w = self.zero();
        for (i, &c) in coords.iter().enumerate() {
            w.add_scaled(&self.fundamental[i], c);
        }
        if let Some(d) = self.determinant() {
            w.add_scaled(&d, det);
        }
        Ok(w)
    }

    /// Inverse of [`from_fundamental`](Self::from_fundamental): the pairings
    /// with all simple coroots and, for `GL_n`, the multiplicity of `det`.
    pub fn fundamental_coordinates(&self, w: &Weight) -> (Vec<i64>, i64) {
        let c = self.vertices().map(|i| self.pairing(i, w)).collect();
        let d = if self.is_gl() { w.0[self.rank - 1] } else { 0 };
        (c, d)
    }

    /// Returns `(λ⁺, [i_1, …, i_k])` with `λ = s_{i_1} ⋯ s_{i_k} λ⁺` and
    /// `λ⁺` dominant. At each step the smallest vertex with a negative
    /// pairing is reflected, so the word is reduced and deterministic.
    pub fn dominant_representative(&self, w: &Weight) -> (Weight, Vec<usize>) {
        let mut cur = w.clone();
        let mut word = Vec::new();
        while let Some(i) = self.vertices().find(|&i| self.pairing(i, &cur) < 0) {
            self.reflect_in_place(i, &mut cur);
            word.push(i);
        }
        (cur, word)
    }

    /// A reduced word for the longest Weyl group element.
    pub fn longest_element_word(&self) -> &[usize] {
        &self.longest_word
    }

    fn compute_longest_word(&self) -> Vec<usize> {
        let mut cur = self.zero();
        for f in &self.fundamental {
            cur.add_scaled(f, 1);
        }
        let mut word = Vec::new();
        while let Some(i) = self.vertices().find(|&i| self.pairing(i, &cur) > 0) {
            self.reflect_in_place(i, &mut cur);
            word.push(i);
        }
        word
    }

    /// Coordinates of `δ` in the basis of simple roots, if `δ` lies in the
    /// root lattice.
    pub fn root_coordinates(&self, delta: &Weight) -> Option<Vec<i64>> {
        if self.is_gl() {
            let mut acc = 0;
            let mut out = Vec::with_capacity(self.vertices);
            for (j, x) in delta.0.iter().enumerate() {
                acc += x;
                if j < self.vertices {
                    out.push(acc);
                }
            }
            return (acc == 0).then_some(out);
        }
        let mut out = Vec::with_capacity(self.vertices);
        for row in &self.inverse_cartan {
            let x: Ratio<i64> = row.iter().zip(&delta.0).map(|(a, &b)| a * b).sum();
            if !x.is_integer() {
                return None;
            }
            out.push(x.to_integer());
        }
        Some(out)
    }

    /// `μ ≤ ν` in the dominance order: `ν − μ` is a nonnegative integral
    /// combination of simple roots.
    pub fn root_leq(&self, mu: &Weight, nu: &Weight) -> bool {
        self.root_coordinates(&nu.minus(mu))
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// An integer-valued linear functional that is strictly positive on
    /// every simple root; used to linearly extend the dominance order.
    pub fn height(&self, w: &Weight) -> i64 {
        self.height_coeffs.iter().zip(&w.0).map(|(a, b)| a * b).sum()
    }

    /// All positive roots, found by closing the simple roots under the
    /// simple reflections.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = self.simple_roots.iter().cloned().collect();
        let mut queue: VecDeque<Weight> = seen.iter().cloned().collect();
        while let Some(b) = queue.pop_front() {
            for i in self.vertices() {
                let r = self.reflect(i, &b);
                if self.root_leq(&self.zero(), &r) && !r.is_zero() && seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Renders a weight for reports: fundamental coordinates for semisimple
    /// types (`"0"` for the zero weight) and the `ε` coordinates for `GL_n`.
    pub fn format_weight(&self, w: &Weight) -> String {
        if !self.is_gl() && w.is_zero() {
            "0".to_string()
        } else {
            w.to_string()
        }
    }

    /// For `GL_n`: `c_1 ϖ_1 + … + c_{n-1} ϖ_{n-1} + d det` rendered as
    /// `"(c_1,…,c_{n-1})+d*det"`.
    pub fn format_fundamental(&self, w: &Weight) -> String {
        let (c, d) = self.fundamental_coordinates(w);
        let base = Weight(c).to_string();
        if self.is_gl() {
            format!("{base}+{d}*det")
        } else {
            base
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            v.extend((0..n).map(|c| Ratio::from_integer(i64::from(c == r))));
            v
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != Ratio::from_integer(0)).expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in &mut a[col] {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Ratio::from_integer(0) {
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<RootDatum> {
        let mut v = Vec::new();
        for n in 1..=5 {
            v.push(RootDatum::new(CartanKind::A, n).unwrap());
            v.push(RootDatum::gl(n).unwrap());
        }
        for n in 4..=6 {
            v.push(RootDatum::new(CartanKind::D, n).unwrap());
        }
        for n in 6..=8 {
            v.push(RootDatum::new(CartanKind::E, n).unwrap());
        }
        v
    }

    #[test]
    fn parity_is_a_bipartition() {
        for d in all_types() {
            for i in d.vertices() {
                for &j in d.neighbors(i) {
                    assert_ne!(d.parity(i), d.parity(j), "{} {i} {j}", d.name());
                }
            }
        }
    }

    #[test]
    fn d4_parity_classes() {
        let d = RootDatum::new(CartanKind::D, 4).unwrap();
        let odd: Vec<usize> = d.vertices().filter(|&i| d.parity(i) == 0).collect();
        assert_eq!(odd, vec![1, 3, 4]);
        assert_eq!(d.neighbors(2), &[1, 3, 4]);
    }

    #[test]
    fn positive_root_counts() {
        // |Φ+| for A_n, D_n, E_6, E_7, E_8
        let expect = |d: &RootDatum| match (d.kind(), d.rank()) {
            (CartanKind::A, n) => n * (n + 1) / 2,
            (CartanKind::GL, n) => n * (n - 1) / 2,
            (CartanKind::D, n) => n * (n - 1),
            (CartanKind::E, 6) => 36,
            (CartanKind::E, 7) => 63,
            (CartanKind::E, _) => 120,
        };
        for d in all_types() {
            assert_eq!(d.positive_roots().len(), expect(&d), "{}", d.name());
            assert_eq!(d.longest_element_word().len(), expect(&d), "{}", d.name());
        }
    }

    #[test]
    fn height_is_positive_on_simple_roots() {
        for d in all_types() {
            for i in d.vertices() {
                assert!(d.height(d.simple_root(i)) > 0);
                let c = d.root_coordinates(d.simple_root(i)).unwrap();
                assert_eq!(c.iter().sum::<i64>(), 1);
            }
        }
    }

    #[test]
    fn dominant_representative_gl3() {
        let d = RootDatum::gl(3).unwrap();
        let (dom, word) = d.dominant_representative(&Weight(vec![0, 1, 2]));
        assert_eq!(dom, Weight(vec![2, 1, 0]));
        assert_eq!(word.len(), 3);
        let mut back = dom.clone();
        for &i in word.iter().rev() {
            d.reflect_in_place(i, &mut back);
        }
        assert_eq!(back, Weight(vec![0, 1, 2]));
    }

    #[test]
    fn fundamental_roundtrip() {
        let d = RootDatum::gl(4).unwrap();
        let w = d.from_fundamental(&[1, 0, 2], -1).unwrap();
        assert_eq!(w, Weight(vec![2, 1, 1, -1]));
        assert_eq!(d.fundamental_coordinates(&w), (vec![1, 0, 2], -1));
    }

    #[test]
    fn rank_validation() {
        assert!(RootDatum::new(CartanKind::D, 3).is_err());
        assert!(RootDatum::new(CartanKind::E, 9).is_err());
        assert!(RootDatum::parse("E7", 0).is_ok());
        assert!(RootDatum::parse("E7", 6).is_err());
        assert!(RootDatum::parse("B", 2).is_err());
    }
}
