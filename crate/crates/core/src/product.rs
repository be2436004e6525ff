//! Fundamental subcrystals, the product monomial crystal `M(R)`, the
//! `S`-labelling `p = y_R z_S^{-1}` and highest-weight decompositions.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{RootDatum, Weight};
use crate::crystal::{self, closure, closure_violation, induced_graph, CrystalGraph, MonomialCrystal};
use crate::error::{Error, Result};
use crate::monomial::{LatticePoint, Monomial};
use crate::truncation::{self, ThresholdSet};
use crate::weightring::weyl_decompose;

/// A finite multiset of lattice points.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointMultiset {
    mult: BTreeMap<LatticePoint, u64>,
}

impl PointMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(i, c, multiplicity)` triples, validating each point.
    pub fn from_triples(datum: &RootDatum, triples: &[(usize, i64, i64)]) -> Result<Self> {
        let mut out = Self::new();
        for &(i, c, m) in triples {
            let p = LatticePoint::new(datum, i, c)?;
            if m < 0 {
                return Err(Error::Invalid(format!("negative multiplicity {m} at {p}")));
            }
            out.insert(p, m as u64);
        }
        Ok(out)
    }

    /// Parses `[[i, c, mult], ...]`.
    pub fn from_json(datum: &RootDatum, text: &str) -> Result<Self> {
        let raw: Vec<(usize, i64, i64)> =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("point multiset: {e}")))?;
        Self::from_triples(datum, &raw)
    }

    pub fn from_points(points: impl IntoIterator<Item = LatticePoint>) -> Self {
        let mut out = Self::new();
        for p in points {
            out.insert(p, 1);
        }
        out
    }

    pub fn insert(&mut self, p: LatticePoint, n: u64) {
        if n > 0 {
            *self.mult.entry(p).or_insert(0) += n;
        }
    }

    pub fn get(&self, p: LatticePoint) -> u64 {
        self.mult.get(&p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (LatticePoint, u64)> + '_ {
        self.mult.iter().map(|(&p, &n)| (p, n))
    }

    pub fn support(&self) -> BTreeSet<LatticePoint> {
        self.mult.keys().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Total number of points counted with multiplicity.
    pub fn cardinality(&self) -> u64 {
        self.mult.values().sum()
    }

    pub fn sum(&self, other: &PointMultiset) -> PointMultiset {
        let mut out = self.clone();
        for (p, n) in other.iter() {
            out.insert(p, n);
        }
        out
    }

    /// Shifts every level by `by`; `by` must be even.
    pub fn shifted(&self, by: i64) -> PointMultiset {
        assert!(by % 2 == 0, "vertical shifts must be even");
        PointMultiset { mult: self.mult.iter().map(|(p, &n)| (p.shifted(by), n)).collect() }
    }

    pub fn max_vertex(&self) -> usize {
        self.mult.keys().map(|p| p.vertex).max().unwrap_or(0)
    }

    /// Checks every point against a root datum.
    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        for p in self.mult.keys() {
            LatticePoint::new(datum, p.vertex, p.level)?;
        }
        Ok(())
    }

    /// `wt(R) = Σ n ϖ_i`
    pub fn weight(&self, datum: &RootDatum) -> Weight {
        let mut w = datum.zero();
        for (p, n) in self.iter() {
            w.add_scaled(datum.fundamental_weight(p.vertex), n as i64);
        }
        w
    }

    /// `y_R = ∏ e^{ϖ_i} y_{i,c}` over the multiset.
    pub fn y_monomial(&self, datum: &RootDatum) -> Monomial {
        let mut m = Monomial::one(datum);
        for (p, n) in self.iter() {
            m.mul_assign(&Monomial::y_point(datum, p, n as i64));
        }
        m
    }

    /// `z_S = ∏ z_{i,k}` over the multiset.
    pub fn z_monomial(&self, datum: &RootDatum) -> Monomial {
        let mut m = Monomial::one(datum);
        for (p, n) in self.iter() {
            m.mul_z(datum, p.vertex, p.level, n as i64);
        }
        m
    }

    pub fn triples(&self) -> Vec<(usize, i64, u64)> {
        self.iter().map(|(p, n)| (p.vertex, p.level, n)).collect()
    }
}

impl fmt::Display for PointMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(p, n)| if n == 1 { p.to_string() } else { format!("{p}^{n}") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for PointMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointMultiset {
    /// Parity is not checked here; call [`PointMultiset::validate`].
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(usize, i64, u64)> = Vec::deserialize(d)?;
        let mut out = PointMultiset::new();
        for (i, c, n) in raw {
            out.insert(LatticePoint::raw(i, c), n);
        }
        Ok(out)
    }
}

/// The connected crystal generated by `y_{i,c}^n`.
pub fn fundamental_crystal(datum: &RootDatum, vertex: usize, level: i64, n: u64) -> Result<CrystalGraph<Monomial>> {
    let seed = Monomial::y(datum, vertex, level, n as i64)?;
    closure(&MonomialCrystal::new(datum), [seed], crystal::DEFAULT_ELEMENT_LIMIT)
}

/// Monomial-wise product of element sets, deduplicated.
pub(crate) fn product_of_sets(factors: &[Vec<Monomial>], limit: usize) -> Result<Vec<Monomial>> {
    let mut acc: HashSet<Monomial> = HashSet::new();
    let mut first = true;
    for factor in factors {
        if first {
            acc = factor.iter().cloned().collect();
            first = false;
            continue;
        }
        let mut next = HashSet::with_capacity(acc.len() * 2);
        for a in &acc {
            for b in factor {
                next.insert(a.mul(b));
                if next.len() > limit {
                    return Err(Error::ClosureLimit(limit));
                }
            }
        }
        acc = next;
    }
    let mut out: Vec<Monomial> = acc.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The elements of `M(R)`, sorted.
pub fn product_elements(datum: &RootDatum, r: &PointMultiset, limit: usize) -> Result<Vec<Monomial>> {
    r.validate(datum)?;
    if r.is_empty() {
        return Ok(vec![Monomial::one(datum)]);
    }
    let mut cache: HashMap<(usize, u64), Vec<Monomial>> = HashMap::new();
    let mut factors = Vec::new();
    for (p, n) in r.iter() {
        // the crystal at level c is the one at the base level shifted
        let base = datum.parity(p.vertex);
        let elems = match cache.get(&(p.vertex, n)) {
            Some(e) => e.clone(),
            None => {
                let g = fundamental_crystal(datum, p.vertex, base, n)?;
                let e = g.elements().to_vec();
                cache.insert((p.vertex, n), e.clone());
                e
            }
        };
        factors.push(elems.iter().map(|m| m.shifted(p.level - base)).collect());
    }
    product_of_sets(&factors, limit)
}

/// `M(R)` with all its `f_i` edges, after checking that the product set is
/// closed under every `e_i` and `f_i`.
pub fn product_crystal(datum: &RootDatum, r: &PointMultiset) -> Result<CrystalGraph<Monomial>> {
    product_crystal_with_limit(datum, r, crystal::DEFAULT_ELEMENT_LIMIT)
}

pub fn product_crystal_with_limit(datum: &RootDatum, r: &PointMultiset, limit: usize) -> Result<CrystalGraph<Monomial>> {
    let elements = product_elements(datum, r, limit)?;
    let c = MonomialCrystal::new(datum);
    let set: BTreeSet<Monomial> = elements.iter().cloned().collect();
    if let Some((b, i)) = closure_violation(&c, &set) {
        return Err(Error::Consistency(format!(
            "product set for R = {r} is not closed under e_{i}/f_{i} at {b}"
        )));
    }
    Ok(induced_graph(&c, elements))
}

/// The unique `S ≥ 0` with `p = y_R z_S^{-1}`.
///
/// Solves `S[i,k] = R[i,k] − p[i,k] − S[i,k−2] + Σ_{j∼i} S[j,k−1]` for
/// increasing `k`, then re-expands to confirm.
pub fn s_label(datum: &RootDatum, r: &PointMultiset, p: &Monomial) -> Result<PointMultiset> {
    let levels = p.support().map(|q| q.level).chain(r.iter().map(|(q, _)| q.level));
    let (lo, hi) = match levels.fold(None, |acc: Option<(i64, i64)>, c| match acc {
        None => Some((c, c)),
        Some((a, b)) => Some((a.min(c), b.max(c))),
    }) {
        None => return Ok(PointMultiset::new()),
        Some(x) => x,
    };
    let mut s: HashMap<(usize, i64), i64> = HashMap::new();
    let get = |s: &HashMap<(usize, i64), i64>, i: usize, k: i64| s.get(&(i, k)).copied().unwrap_or(0);
    for k in lo..=hi - 2 {
        for i in datum.vertices() {
            if k.rem_euclid(2) != datum.parity(i) {
                continue;
            }
            let pt = LatticePoint::raw(i, k);
            let mut v = r.get(pt) as i64 - p.exponent(pt) - get(&s, i, k - 2);
            for &j in datum.neighbors(i) {
                v += get(&s, j, k - 1);
            }
            if v < 0 {
                return Err(Error::NotInProduct(p.to_string()));
            }
            if v > 0 {
                s.insert((i, k), v);
            }
        }
    }
    let mut label = PointMultiset::new();
    for ((i, k), v) in s {
        label.insert(LatticePoint::raw(i, k), v as u64);
    }
    if &expand_label(datum, r, &label) != p {
        return Err(Error::NotInProduct(p.to_string()));
    }
    Ok(label)
}

/// `y_R z_S^{-1}`
pub fn expand_label(datum: &RootDatum, r: &PointMultiset, s: &PointMultiset) -> Monomial {
    let mut m = r.y_monomial(datum);
    for (p, n) in s.iter() {
        m.mul_z(datum, p.vertex, p.level, -(n as i64));
    }
    m
}

/// `Supp_R(p) = Supp R ∪ Supp S`
pub fn r_support(datum: &RootDatum, r: &PointMultiset, p: &Monomial) -> Result<BTreeSet<LatticePoint>> {
    let s = s_label(datum, r, p)?;
    let mut out = r.support();
    out.extend(s.support());
    Ok(out)
}

/// Highest-weight multiplicities of `M(R)` computed from the primitive
/// elements of the truncation `M(R, up(R))`, which contains all of them.
pub fn decompose_by_highest_weights(datum: &RootDatum, r: &PointMultiset) -> Result<BTreeMap<Weight, i64>> {
    let j = ThresholdSet::up_closure(datum, r.support())?;
    let elements = truncation::truncate(datum, r, &j)?;
    let c = MonomialCrystal::new(datum);
    let mut out = BTreeMap::new();
    for b in crystal::primitive_elements(&c, &elements) {
        *out.entry(b.weight().clone()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Multiplicities from the Weyl character `π_{w◦} ch M(R, up(R))`.
pub fn decompose_by_character(datum: &RootDatum, r: &PointMultiset) -> Result<BTreeMap<Weight, i64>> {
    weyl_decompose(datum, &truncation::full_character(datum, r)?)
}

/// Highest-weight multiplicities counted on the full product crystal.
pub fn decompose_exhaustive(datum: &RootDatum, r: &PointMultiset, limit: usize) -> Result<BTreeMap<Weight, i64>> {
    let g = product_crystal_with_limit(datum, r, limit)?;
    let mut out = BTreeMap::new();
    for b in g.highest_weights() {
        *out.entry(b.weight().clone()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Multiplicities of each `B(λ)` in `M(R)`. Two independent routes are
/// run and must agree; a disagreement is reported as
/// [`Error::Consistency`].
pub fn decompose(datum: &RootDatum, r: &PointMultiset) -> Result<BTreeMap<Weight, i64>> {
    r.validate(datum)?;
    let (by_hw, by_char) = rayon::join(
        || decompose_by_highest_weights(datum, r),
        || decompose_by_character(datum, r),
    );
    let (by_hw, by_char) = (by_hw?, by_char?);
    if by_hw != by_char {
        return Err(Error::Consistency(format!(
            "highest-weight count {by_hw:?} disagrees with character decomposition {by_char:?} for R = {r}"
        )));
    }
    Ok(by_hw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanKind;
    use crate::crystal::check_axioms;

    fn sl(n: usize) -> RootDatum {
        RootDatum::new(CartanKind::A, n).unwrap()
    }

    #[test]
    fn fundamental_sizes() {
        let d = sl(3);
        assert_eq!(fundamental_crystal(&d, 2, 0, 1).unwrap().len(), 6);
        assert_eq!(fundamental_crystal(&d, 2, 0, 0).unwrap().len(), 1);
        assert!(fundamental_crystal(&d, 2, 1, 1).is_err());
    }

    #[test]
    fn empty_product_is_one() {
        let d = sl(2);
        let g = product_crystal(&d, &PointMultiset::new()).unwrap();
        assert_eq!(g.elements(), &[Monomial::one(&d)]);
        let dec = decompose(&d, &PointMultiset::new()).unwrap();
        assert_eq!(dec, BTreeMap::from([(d.zero(), 1)]));
    }

    #[test]
    fn s_label_of_one() {
        let d = sl(3);
        let r = PointMultiset::from_triples(&d, &[(1, 1, 1), (3, 5, 1)]).unwrap();
        let s = s_label(&d, &r, &Monomial::one(&d)).unwrap();
        assert_eq!(s, PointMultiset::from_triples(&d, &[(1, 1, 1), (2, 2, 1), (3, 3, 1)]).unwrap());
        let supp: Vec<_> = r_support(&d, &r, &Monomial::one(&d)).unwrap().into_iter().collect();
        assert_eq!(supp.len(), 4);
        assert_eq!(s_label(&d, &r, &r.y_monomial(&d)).unwrap(), PointMultiset::new());
    }

    #[test]
    fn s_label_rejects_outsiders() {
        let d = sl(2);
        let r = PointMultiset::from_triples(&d, &[(1, 1, 1)]).unwrap();
        let bogus = Monomial::y(&d, 2, 4, 1).unwrap();
        assert!(matches!(s_label(&d, &r, &bogus), Err(Error::NotInProduct(_))));
    }

    #[test]
    fn s_labels_biject_with_elements() {
        let d = sl(3);
        let r = PointMultiset::from_triples(&d, &[(1, 1, 1), (2, 0, 2), (3, 3, 1)]).unwrap();
        let g = product_crystal(&d, &r).unwrap();
        let mut labels = HashSet::new();
        for p in g.elements() {
            let s = s_label(&d, &r, p).unwrap();
            assert_eq!(&expand_label(&d, &r, &s), p);
            assert!(labels.insert(s));
        }
        check_axioms(&MonomialCrystal::new(&d), &g).unwrap();
    }

    #[test]
    fn two_routes_agree_with_exhaustive_count() {
        let d = sl(3);
        let r = PointMultiset::from_triples(&d, &[(1, 3, 1), (3, 1, 1), (3, 3, 1)]).unwrap();
        let dec = decompose(&d, &r).unwrap();
        assert_eq!(dec, decompose_exhaustive(&d, &r, 100_000).unwrap());
        let expect = BTreeMap::from([(Weight(vec![1, 0, 2]), 1), (Weight(vec![1, 1, 0]), 1)]);
        assert_eq!(dec, expect);
    }

    #[test]
    fn json_round_trip() {
        let d = sl(3);
        let r = PointMultiset::from_json(&d, "[[1,3,1],[3,1,2]]").unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), "[[1,3,1],[3,1,2]]");
        assert!(PointMultiset::from_json(&d, "[[1,2,1]]").is_err());
    }
}
