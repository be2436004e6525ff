//! The partial order on `I ×̇ Z`, upward-closed sets stored as per-column
//! thresholds, truncations `M(R, J)`, build plans and the inductive
//! character formula.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::RootDatum;
use crate::crystal::{extend_strings, MonomialCrystal};
use crate::error::{Error, Result};
use crate::monomial::{LatticePoint, Monomial};
use crate::product::{product_of_sets, PointMultiset};
use crate::weightring::{demazure_pi, pi_longest, GroupAlgebraElement};

/// An upward-closed subset of `I ×̇ Z`: column `i` is `{c ≥ θ_i}`, or empty
/// when `θ_i` is `None` (`+∞`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThresholdSet {
    theta: Vec<Option<i64>>,
}

impl ThresholdSet {
    /// Validates parity and upward closure.
    pub fn new(datum: &RootDatum, theta: Vec<Option<i64>>) -> Result<Self> {
        if theta.len() != datum.num_vertices() {
            return Err(Error::Invalid(format!(
                "threshold set has {} columns, expected {}",
                theta.len(),
                datum.num_vertices()
            )));
        }
        let out = ThresholdSet { theta };
        out.validate(datum)?;
        Ok(out)
    }

    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        if self.theta.len() != datum.num_vertices() {
            return Err(Error::Invalid("threshold set has the wrong number of columns".into()));
        }
        for i in datum.vertices() {
            let Some(t) = self.theta[i - 1] else { continue };
            if t.rem_euclid(2) != datum.parity(i) {
                return Err(Error::Parity { vertex: i, level: t });
            }
            for &j in datum.neighbors(i) {
                match self.theta[j - 1] {
                    Some(u) if u <= t + 1 => {}
                    _ => {
                        return Err(Error::NotUpwardClosed(format!(
                            "({i},{t}) belongs but ({j},{}) does not",
                            t + 1
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    /// The empty set.
    pub fn empty(datum: &RootDatum) -> Self {
        ThresholdSet { theta: vec![None; datum.num_vertices()] }
    }

    /// `up(X)`: column `j` starts at `min_x (c_x + d(i_x, j))`.
    pub fn up_closure(datum: &RootDatum, points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut theta: Vec<Option<i64>> = vec![None; datum.num_vertices()];
        for x in points {
            LatticePoint::new(datum, x.vertex, x.level)?;
            for j in datum.vertices() {
                let v = x.level + datum.distance(x.vertex, j);
                theta[j - 1] = Some(theta[j - 1].map_or(v, |t| t.min(v)));
            }
        }
        Ok(ThresholdSet { theta })
    }

    /// The complement of `down(X)`. Fails for empty `X`, whose complement
    /// (everything) has no finite thresholds.
    pub fn complement_of_down(datum: &RootDatum, points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let down = DownSet::down_closure(datum, points)?;
        let theta = down
            .ceilings
            .iter()
            .map(|c| c.map(|c| c + 2))
            .collect::<Option<Vec<i64>>>()
            .ok_or_else(|| Error::Invalid("complement of down(∅) is not bounded below".into()))?;
        Ok(ThresholdSet { theta: theta.into_iter().map(Some).collect() })
    }

    pub fn threshold(&self, vertex: usize) -> Option<i64> {
        self.theta[vertex - 1]
    }

    pub fn thresholds(&self) -> &[Option<i64>] {
        &self.theta
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.theta.get(p.vertex - 1).copied().flatten().is_some_and(|t| p.level >= t)
    }

    pub fn contains_all(&self, points: impl IntoIterator<Item = LatticePoint>) -> bool {
        points.into_iter().all(|p| self.contains(p))
    }

    pub fn is_subset(&self, other: &ThresholdSet) -> bool {
        self.theta.iter().zip(&other.theta).all(|(a, b)| match (a, b) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a >= b,
        })
    }

    /// `∂J = {(i, θ_i)}`; every column must be nonempty.
    pub fn boundary(&self) -> Result<Vec<LatticePoint>> {
        self.theta
            .iter()
            .enumerate()
            .map(|(k, t)| t.map(|t| LatticePoint::raw(k + 1, t)).ok_or(Error::NoBoundary(k + 1)))
            .collect()
    }

    pub fn shifted(&self, by: i64) -> Self {
        ThresholdSet { theta: self.theta.iter().map(|t| t.map(|t| t + by)).collect() }
    }

    pub fn union(&self, other: &ThresholdSet) -> Self {
        let theta = self
            .theta
            .iter()
            .zip(&other.theta)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => Some(*a.min(b)),
                (a, b) => a.or(*b),
            })
            .collect();
        ThresholdSet { theta }
    }

    /// `J \ down(X)`, which is again upward closed.
    pub fn minus_down(&self, down: &DownSet) -> Self {
        let theta = self
            .theta
            .iter()
            .zip(&down.ceilings)
            .map(|(t, c)| match (t, c) {
                (Some(t), Some(c)) => Some(*t.max(&(c + 2))),
                (t, _) => *t,
            })
            .collect();
        ThresholdSet { theta }
    }

    /// `J ∪ {p}`, which must again be upward closed.
    pub fn with_point(&self, datum: &RootDatum, p: LatticePoint) -> Result<Self> {
        LatticePoint::new(datum, p.vertex, p.level)?;
        let mut theta = self.theta.clone();
        match theta[p.vertex - 1] {
            Some(t) if p.level >= t => return Ok(self.clone()),
            Some(t) if p.level != t - 2 => {
                return Err(Error::NotUpwardClosed(format!("adding {p} leaves a gap below ({},{t})", p.vertex)))
            }
            _ => theta[p.vertex - 1] = Some(p.level),
        }
        ThresholdSet::new(datum, theta)
    }

    /// Parses `{"thresholds": {"i": k, ...}}`; missing or `null` columns
    /// are empty.
    pub fn from_json(datum: &RootDatum, text: &str) -> Result<Self> {
        let raw: ThresholdJson =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("threshold set: {e}")))?;
        let mut theta = vec![None; datum.num_vertices()];
        for (k, v) in raw.thresholds {
            let i: usize = k.parse().map_err(|_| Error::Invalid(format!("bad vertex key {k:?}")))?;
            datum.check_vertex(i)?;
            theta[i - 1] = v;
        }
        ThresholdSet::new(datum, theta)
    }
}

#[derive(Serialize, Deserialize)]
struct ThresholdJson {
    thresholds: BTreeMap<String, Option<i64>>,
}

impl Serialize for ThresholdSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ThresholdJson {
            thresholds: self.theta.iter().enumerate().map(|(k, t)| ((k + 1).to_string(), *t)).collect(),
        }
        .serialize(s)
    }
}

impl fmt::Display for ThresholdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.theta.iter().map(|t| t.map_or("∞".to_string(), |t| t.to_string())).collect();
        write!(f, "θ=({})", parts.join(","))
    }
}

/// A downward-closed set: column `i` is `{c ≤ ceiling_i}`, or empty when
/// the ceiling is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DownSet {
    ceilings: Vec<Option<i64>>,
}

impl DownSet {
    /// `down(X)`: column `j` ends at `max_x (c_x − d(i_x, j))`.
    pub fn down_closure(datum: &RootDatum, points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut ceilings: Vec<Option<i64>> = vec![None; datum.num_vertices()];
        for x in points {
            LatticePoint::new(datum, x.vertex, x.level)?;
            for j in datum.vertices() {
                let v = x.level - datum.distance(x.vertex, j);
                ceilings[j - 1] = Some(ceilings[j - 1].map_or(v, |t| t.max(v)));
            }
        }
        Ok(DownSet { ceilings })
    }

    pub fn ceiling(&self, vertex: usize) -> Option<i64> {
        self.ceilings[vertex - 1]
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.ceilings.get(p.vertex - 1).copied().flatten().is_some_and(|c| p.level <= c)
    }
}

/// Points of `J ∩ down(X)`, a finite set.
pub fn window(datum: &RootDatum, j: &ThresholdSet, down: &DownSet) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for i in datum.vertices() {
        if let (Some(t), Some(c)) = (j.threshold(i), down.ceiling(i)) {
            let mut k = t;
            while k <= c {
                out.push(LatticePoint::raw(i, k));
                k += 2;
            }
        }
    }
    out
}

/// Elements of the fundamental crystal of `y_{i,c}^n` whose `S`-label lies
/// in `J`. Every element is reached from `y^n` by `f` moves, each of which
/// adds one point to the label, so pruning the search is exact.
fn truncated_fundamental(datum: &RootDatum, p: LatticePoint, n: u64, j: &ThresholdSet) -> Vec<Monomial> {
    let seed = Monomial::y_point(datum, p, n as i64);
    let mut seen: HashSet<Monomial> = HashSet::from([seed.clone()]);
    let mut stack = vec![seed];
    while let Some(b) = stack.pop() {
        for i in datum.vertices() {
            let Some(k) = b.column_stats(i).f_level else { continue };
            if !j.contains(LatticePoint::raw(i, k - 2)) {
                continue;
            }
            let mut next = b.clone();
            next.mul_z(datum, i, k - 2, -1);
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    out
}

/// `M(R, J) = {p ∈ M(R) : Supp_R(p) ⊆ J}`.
///
/// Labels are additive under products, so this is the product of the
/// truncated fundamental factors.
pub fn truncate(datum: &RootDatum, r: &PointMultiset, j: &ThresholdSet) -> Result<Vec<Monomial>> {
    r.validate(datum)?;
    j.validate(datum)?;
    if !j.contains_all(r.support()) {
        return Err(Error::SupportNotContained);
    }
    if r.is_empty() {
        return Ok(vec![Monomial::one(datum)]);
    }
    let factors: Vec<Vec<Monomial>> = r.iter().map(|(p, n)| truncated_fundamental(datum, p, n, j)).collect();
    product_of_sets(&factors, crate::crystal::DEFAULT_ELEMENT_LIMIT)
}

/// The truncation computed from the definition: filter the whole product
/// crystal by `Supp_R(p) ⊆ J`. Exponential; intended as a reference.
pub fn truncate_by_filter(datum: &RootDatum, r: &PointMultiset, j: &ThresholdSet, limit: usize) -> Result<Vec<Monomial>> {
    if !j.contains_all(r.support()) {
        return Err(Error::SupportNotContained);
    }
    let all = crate::product::product_elements(datum, r, limit)?;
    let mut out = Vec::new();
    for p in all {
        if j.contains_all(crate::product::r_support(datum, r, &p)?) {
            out.push(p);
        }
    }
    Ok(out)
}

/// One step of a [`BuildPlan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum PlanStep {
    /// Grow `J` by the point `(i, k)`; the set is replaced by `D_i` of it.
    Extend { i: usize, k: i64 },
    /// Add `Q` (on the current boundary) to `R`; elements are multiplied by `y_Q`.
    Multiply { q: PointMultiset },
}

/// A sequence of extension and multiplication steps building `M(R, J)`
/// from `M(∅, J_0) = {1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildPlan {
    pub initial: ThresholdSet,
    pub steps: Vec<PlanStep>,
}

impl Serialize for DownSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.ceilings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThresholdSet {
    /// Not validated against a root datum; see [`ThresholdSet::validate`].
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ThresholdJson::deserialize(d)?;
        let n = raw.thresholds.keys().filter_map(|k| k.parse::<usize>().ok()).max().unwrap_or(0);
        let mut theta = vec![None; n];
        for (k, v) in raw.thresholds {
            let i: usize = k.parse().map_err(serde::de::Error::custom)?;
            if i == 0 {
                return Err(serde::de::Error::custom("vertex 0"));
            }
            theta[i - 1] = v;
        }
        Ok(ThresholdSet { theta })
    }
}

/// Plans the construction of `M(R, J_target)` (default `J_target = up(R)`).
///
/// The finitely many points of `J_target ∩ down(Supp R)` are added in order
/// of decreasing level (ties by vertex). Points of `R` are multiplied in
/// batches: a batch is flushed just before an extension in one of its
/// columns would take it off the boundary, and once more at the end.
/// Extensions before the first multiplication act on `{1}` and are folded
/// into `J_0`.
pub fn build_plan(datum: &RootDatum, r: &PointMultiset, target: Option<&ThresholdSet>) -> Result<BuildPlan> {
    r.validate(datum)?;
    let target = match target {
        Some(t) => {
            t.validate(datum)?;
            t.clone()
        }
        None => ThresholdSet::up_closure(datum, r.support())?,
    };
    if !target.contains_all(r.support()) {
        return Err(Error::SupportNotContained);
    }
    let down = DownSet::down_closure(datum, r.support())?;
    let mut initial = target.minus_down(&down);
    let mut points = window(datum, &target, &down);
    points.sort_by(|a, b| b.level.cmp(&a.level).then(a.vertex.cmp(&b.vertex)));
    let mut steps = Vec::new();
    let mut pending = PointMultiset::new();
    for p in points {
        if pending.iter().any(|(q, _)| q.vertex == p.vertex) {
            steps.push(PlanStep::Multiply { q: std::mem::take(&mut pending) });
        }
        if steps.is_empty() {
            initial = initial.with_point(datum, p)?;
        } else {
            steps.push(PlanStep::Extend { i: p.vertex, k: p.level });
        }
        let n = r.get(p);
        if n > 0 {
            pending.insert(p, n);
        }
    }
    if !pending.is_empty() {
        steps.push(PlanStep::Multiply { q: pending });
    }
    Ok(BuildPlan { initial, steps })
}

/// Intermediate state while replaying a plan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanStage {
    pub j: ThresholdSet,
    pub r: PointMultiset,
    pub elements: BTreeSet<Monomial>,
}

/// Replays the set semantics of a plan, checking at every stage that `J`
/// stays upward closed, `Supp R ⊆ J`, and each `Q` lies on `∂J`. Returns
/// the state after every step (the first entry is the initial state).
pub fn replay_plan(datum: &RootDatum, plan: &BuildPlan) -> Result<Vec<PlanStage>> {
    plan.initial.validate(datum)?;
    let crystal = MonomialCrystal::new(datum);
    let mut stage = PlanStage {
        j: plan.initial.clone(),
        r: PointMultiset::new(),
        elements: BTreeSet::from([Monomial::one(datum)]),
    };
    let mut out = vec![stage.clone()];
    for step in &plan.steps {
        match step {
            PlanStep::Extend { i, k } => {
                let p = LatticePoint::new(datum, *i, *k)?;
                stage.j = stage.j.with_point(datum, p)?;
                stage.elements = extend_strings(&crystal, *i, &stage.elements);
            }
            PlanStep::Multiply { q } => {
                q.validate(datum)?;
                for (p, _) in q.iter() {
                    if stage.j.threshold(p.vertex) != Some(p.level) {
                        return Err(Error::Invalid(format!("multiplied point {p} is not on the boundary")));
                    }
                }
                let y = q.y_monomial(datum);
                stage.elements = stage.elements.iter().map(|m| m.mul(&y)).collect();
                stage.r = stage.r.sum(q);
            }
        }
        out.push(stage.clone());
    }
    Ok(out)
}

/// The inductive character formula: start from `1`, apply `π_i` for each
/// extension and multiply by `e^{wt Q}` for each multiplication.
pub fn char_by_plan(datum: &RootDatum, plan: &BuildPlan) -> GroupAlgebraElement {
    let mut ch = GroupAlgebraElement::one(datum);
    for step in &plan.steps {
        ch = match step {
            PlanStep::Extend { i, .. } => demazure_pi(datum, *i, &ch),
            PlanStep::Multiply { q } => ch.shifted(&q.weight(datum)),
        };
    }
    ch
}

/// `ch M(R) = π_{w◦} ch M(R, up(R))`.
pub fn full_character(datum: &RootDatum, r: &PointMultiset) -> Result<GroupAlgebraElement> {
    let plan = build_plan(datum, r, None)?;
    Ok(pi_longest(datum, &char_by_plan(datum, &plan)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanKind;
    use crate::crystal::character_of_set;

    fn sl4() -> RootDatum {
        RootDatum::new(CartanKind::A, 3).unwrap()
    }

    fn pt(i: usize, c: i64) -> LatticePoint {
        LatticePoint::raw(i, c)
    }

    #[test]
    fn up_closure_thresholds() {
        let d = sl4();
        let j = ThresholdSet::up_closure(&d, [pt(2, 2)]).unwrap();
        assert_eq!(j.thresholds(), &[Some(3), Some(2), Some(3)]);
        assert_eq!(j.boundary().unwrap(), vec![pt(1, 3), pt(2, 2), pt(3, 3)]);
        let empty = ThresholdSet::up_closure(&d, []).unwrap();
        assert_eq!(empty, ThresholdSet::empty(&d));
        assert_eq!(empty.boundary(), Err(Error::NoBoundary(1)));
        assert_eq!(j.shifted(2).boundary().unwrap(), vec![pt(1, 5), pt(2, 4), pt(3, 5)]);
    }

    #[test]
    fn validation_rejects_gaps() {
        let d = sl4();
        assert!(ThresholdSet::new(&d, vec![Some(1), Some(4), Some(3)]).is_err());
        assert!(ThresholdSet::new(&d, vec![Some(2), Some(2), Some(3)]).is_err());
        assert!(ThresholdSet::new(&d, vec![Some(1), None, None]).is_err());
        assert!(ThresholdSet::new(&d, vec![None, None, None]).is_ok());
    }

    #[test]
    fn complement_of_down_is_upward_closed() {
        let d = RootDatum::gl(5).unwrap();
        let j = ThresholdSet::complement_of_down(&d, [pt(1, -1)]).unwrap();
        assert_eq!(j.thresholds(), &[Some(1), Some(0), Some(-1), Some(-2)]);
        j.validate(&d).unwrap();
    }

    #[test]
    fn sl4_plan_stages() {
        let d = sl4();
        let r = PointMultiset::from_triples(&d, &[(1, 3, 1), (3, 1, 1), (3, 3, 1)]).unwrap();
        let plan = build_plan(&d, &r, None).unwrap();
        assert_eq!(plan.initial, ThresholdSet::up_closure(&d, [pt(2, 2)]).unwrap());
        let q = |t: &[(usize, i64, i64)]| PlanStep::Multiply { q: PointMultiset::from_triples(&d, t).unwrap() };
        assert_eq!(plan.steps, vec![q(&[(1, 3, 1), (3, 3, 1)]), PlanStep::Extend { i: 3, k: 1 }, q(&[(3, 1, 1)])]);
        let stages = replay_plan(&d, &plan).unwrap();
        let last = stages.last().unwrap();
        assert_eq!(last.elements.len(), 2);
        let direct: BTreeSet<Monomial> = truncate(&d, &r, &ThresholdSet::up_closure(&d, [pt(3, 1)]).unwrap())
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(last.elements, direct);
        let c = MonomialCrystal::new(&d);
        assert_eq!(character_of_set(&c, &last.elements), char_by_plan(&d, &plan));
    }

    #[test]
    fn empty_plan() {
        let d = sl4();
        let plan = build_plan(&d, &PointMultiset::new(), None).unwrap();
        assert!(plan.steps.is_empty());
        assert_eq!(char_by_plan(&d, &plan), GroupAlgebraElement::one(&d));
    }

    #[test]
    fn truncate_matches_filter() {
        let d = sl4();
        let r = PointMultiset::from_triples(&d, &[(1, 1, 1), (2, 2, 2), (3, 5, 1)]).unwrap();
        for j in [
            ThresholdSet::up_closure(&d, r.support()).unwrap(),
            ThresholdSet::up_closure(&d, [pt(1, -1)]).unwrap(),
            ThresholdSet::up_closure(&d, [pt(2, 0), pt(3, 3)]).unwrap(),
        ] {
            assert_eq!(truncate(&d, &r, &j).unwrap(), truncate_by_filter(&d, &r, &j, 100_000).unwrap());
        }
    }

    #[test]
    fn support_must_be_inside() {
        let d = sl4();
        let r = PointMultiset::from_triples(&d, &[(1, 1, 1)]).unwrap();
        let j = ThresholdSet::up_closure(&d, [pt(1, 3)]).unwrap();
        assert_eq!(truncate(&d, &r, &j), Err(Error::SupportNotContained));
    }

    #[test]
    fn threshold_json() {
        let d = sl4();
        let j = ThresholdSet::up_closure(&d, [pt(2, 2)]).unwrap();
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(s, r#"{"thresholds":{"1":3,"2":2,"3":3}}"#);
        assert_eq!(ThresholdSet::from_json(&d, &s).unwrap(), j);
    }
}
