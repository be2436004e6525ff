//! Nakajima monomials with an explicit weight term and the single-step
//! crystal operators acting on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{RootDatum, Weight};
use crate::error::{Error, Result};

/// A point `(i, c)` of `I ×̇ Z`, i.e. with `c ≡ parity(i) (mod 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub vertex: usize,
    pub level: i64,
}

impl LatticePoint {
    /// Validates the vertex and the parity condition.
    pub fn new(datum: &RootDatum, vertex: usize, level: i64) -> Result<Self> {
        datum.check_vertex(vertex)?;
        if level.rem_euclid(2) != datum.parity(vertex) {
            return Err(Error::Parity { vertex, level });
        }
        Ok(LatticePoint { vertex, level })
    }

    /// Constructs without validation; callers guarantee parity.
    pub const fn raw(vertex: usize, level: i64) -> Self {
        LatticePoint { vertex, level }
    }

    pub fn shifted(self, by: i64) -> Self {
        LatticePoint { vertex: self.vertex, level: self.level + by }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.vertex, self.level)
    }
}

/// Column statistics of a monomial at one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnStats {
    pub phi: i64,
    pub epsilon: i64,
    /// Largest `k` maximizing the upper column sum, when `phi > 0`.
    pub f_level: Option<i64>,
    /// Smallest `k` maximizing the negated lower column sum, when `epsilon > 0`.
    pub e_level: Option<i64>,
}

/// A Laurent monomial `e^λ ∏ y_{i,c}^{p[i,c]}`.
///
/// Exponents are stored sorted by `(vertex, level)` with zeros dropped, so
/// structural equality is monomial equality and each column is a
/// contiguous run.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    weight: Weight,
    exps: Vec<(LatticePoint, i64)>,
}

impl Monomial {
    /// The monomial `1` (weight zero, no variables).
    pub fn one(datum: &RootDatum) -> Self {
        Monomial { weight: datum.zero(), exps: Vec::new() }
    }

    /// Builds a monomial from an explicit weight and exponent list. The
    /// points are validated; repeated points are merged.
    pub fn from_parts(datum: &RootDatum, weight: Weight, exps: &[(usize, i64, i64)]) -> Result<Self> {
        datum.check_weight(&weight)?;
        let mut m = Monomial { weight, exps: Vec::new() };
        for &(i, c, e) in exps {
            let p = LatticePoint::new(datum, i, c)?;
            m.bump(p, e);
        }
        Ok(m)
    }

    /// `e^{n ϖ_i} y_{i,c}^n`
    pub fn y(datum: &RootDatum, vertex: usize, level: i64, power: i64) -> Result<Self> {
        let p = LatticePoint::new(datum, vertex, level)?;
        Ok(Self::y_point(datum, p, power))
    }

    pub(crate) fn y_point(datum: &RootDatum, p: LatticePoint, power: i64) -> Self {
        let mut m = Self::one(datum);
        m.weight = datum.fundamental_weight(p.vertex).scaled(power);
        m.bump(p, power);
        m
    }

    /// `z_{i,k} = e^{α_i} y_{i,k} y_{i,k+2} ∏_{j∼i} y_{j,k+1}^{-1}`
    pub fn z(datum: &RootDatum, vertex: usize, level: i64) -> Result<Self> {
        LatticePoint::new(datum, vertex, level)?;
        let mut m = Self::one(datum);
        m.mul_z(datum, vertex, level, 1);
        Ok(m)
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn exponents(&self) -> &[(LatticePoint, i64)] {
        &self.exps
    }

    pub fn exponent(&self, p: LatticePoint) -> i64 {
        match self.exps.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(k) => self.exps[k].1,
            Err(_) => 0,
        }
    }

    pub fn support(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.exps.iter().map(|(p, _)| *p)
    }

    /// True when no variable appears with a negative exponent.
    pub fn is_dominant(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e > 0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty() && self.weight.is_zero()
    }

    /// The entries of column `i`, sorted by level.
    pub fn column(&self, vertex: usize) -> &[(LatticePoint, i64)] {
        let lo = self.exps.partition_point(|(p, _)| p.vertex < vertex);
        let hi = self.exps.partition_point(|(p, _)| p.vertex <= vertex);
        &self.exps[lo..hi]
    }

    fn bump(&mut self, p: LatticePoint, e: i64) {
        if e == 0 {
            return;
        }
        match self.exps.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(k) => {
                self.exps[k].1 += e;
                if self.exps[k].1 == 0 {
                    self.exps.remove(k);
                }
            }
            Err(k) => self.exps.insert(k, (p, e)),
        }
    }

    /// Multiplies in place by `z_{i,k}^{sign}`.
    pub(crate) fn mul_z(&mut self, datum: &RootDatum, vertex: usize, level: i64, sign: i64) {
        self.weight.add_scaled(datum.simple_root(vertex), sign);
        self.bump(LatticePoint::raw(vertex, level), sign);
        self.bump(LatticePoint::raw(vertex, level + 2), sign);
        for &j in datum.neighbors(vertex) {
            self.bump(LatticePoint::raw(j, level + 1), -sign);
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    pub fn mul_assign(&mut self, other: &Monomial) {
        self.weight.add_scaled(&other.weight, 1);
        if self.exps.is_empty() {
            self.exps = other.exps.clone();
            return;
        }
        let mut merged = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(p, x)), Some(&&(q, y))) => {
                    if p < q {
                        merged.push((p, x));
                        a.next();
                    } else if q < p {
                        merged.push((q, y));
                        b.next();
                    } else {
                        if x + y != 0 {
                            merged.push((p, x + y));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(&&e), None) => {
                    merged.push(e);
                    a.next();
                }
                (None, Some(&&e)) => {
                    merged.push(e);
                    b.next();
                }
                (None, None) => break,
            }
        }
        self.exps = merged;
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            weight: self.weight.scaled(-1),
            exps: self.exps.iter().map(|&(p, e)| (p, -e)).collect(),
        }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, n: i64) -> Monomial {
        if n == 0 {
            return Monomial { weight: Weight::zero(self.weight.len()), exps: Vec::new() };
        }
        Monomial {
            weight: self.weight.scaled(n),
            exps: self.exps.iter().map(|&(p, e)| (p, e * n)).collect(),
        }
    }

    /// `φ_i`, `ε_i` and the levels used by `f_i` and `e_i`.
    pub fn column_stats(&self, vertex: usize) -> ColumnStats {
        let col = self.column(vertex);
        // φ^k is constant between support points; the candidates are the
        // suffix sums starting at each support point and 0 above all of them.
        let mut phi = 0;
        let mut f_level = None;
        let mut suffix = 0;
        for &(p, e) in col.iter().rev() {
            suffix += e;
            if suffix > phi {
                phi = suffix;
                f_level = Some(p.level);
            }
        }
        let mut epsilon = 0;
        let mut e_level = None;
        let mut prefix = 0;
        for &(p, e) in col {
            prefix += e;
            if -prefix > epsilon {
                epsilon = -prefix;
                e_level = Some(p.level);
            }
        }
        ColumnStats { phi, epsilon, f_level, e_level }
    }

    pub fn phi(&self, vertex: usize) -> i64 {
        self.column_stats(vertex).phi
    }

    pub fn epsilon(&self, vertex: usize) -> i64 {
        self.column_stats(vertex).epsilon
    }

    /// `f_i(p) = p z_{i,F−2}^{-1}`, or `None` when `φ_i(p) = 0`.
    pub fn f(&self, datum: &RootDatum, vertex: usize) -> Option<Monomial> {
        let k = self.column_stats(vertex).f_level?;
        let mut out = self.clone();
        out.mul_z(datum, vertex, k - 2, -1);
        Some(out)
    }

    /// `e_i(p) = p z_{i,E}`, or `None` when `ε_i(p) = 0`.
    pub fn e(&self, datum: &RootDatum, vertex: usize) -> Option<Monomial> {
        let k = self.column_stats(vertex).e_level?;
        let mut out = self.clone();
        out.mul_z(datum, vertex, k, 1);
        Some(out)
    }

    /// Checks that the weight pairs with each coroot as the column sum
    /// and that every point respects the parity condition.
    pub fn is_valid(&self, datum: &RootDatum) -> bool {
        self.weight.len() == datum.lattice_rank()
            && self
                .exps
                .iter()
                .all(|&(p, _)| LatticePoint::new(datum, p.vertex, p.level).is_ok())
            && datum
                .vertices()
                .all(|i| datum.pairing(i, &self.weight) == self.column(i).iter().map(|&(_, e)| e).sum::<i64>())
    }

    /// Variables only, e.g. `y_{1,3} y_{3,1}^-1`; `1` when empty.
    pub fn variables_string(&self) -> String {
        if self.exps.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(p, e)| {
                if e == 1 {
                    format!("y_{{{},{}}}", p.vertex, p.level)
                } else {
                    format!("y_{{{},{}}}^{}", p.vertex, p.level, e)
                }
            })
            .collect();
        parts.join(" ")
    }

    /// Shifts every level by `by` (which must be even to keep parity).
    pub fn shifted(&self, by: i64) -> Monomial {
        Monomial {
            weight: self.weight.clone(),
            exps: self.exps.iter().map(|&(p, e)| (p.shifted(by), e)).collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^{} {}", self.weight, self.variables_string())
    }
}

#[derive(Serialize, Deserialize)]
struct ExponentJson {
    i: usize,
    c: i64,
    e: i64,
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    weight: Weight,
    exponents: Vec<ExponentJson>,
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonomialJson {
            weight: self.weight.clone(),
            exponents: self.exps.iter().map(|&(p, e)| ExponentJson { i: p.vertex, c: p.level, e }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    /// Deserialization does not know the root datum, so parity and the
    /// weight condition are not checked here; use [`Monomial::is_valid`].
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MonomialJson::deserialize(d)?;
        let mut m = Monomial { weight: j.weight, exps: Vec::new() };
        for x in j.exponents {
            m.bump(LatticePoint::raw(x.i, x.c), x.e);
        }
        Ok(m)
    }
}
