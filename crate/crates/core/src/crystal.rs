//! A small crystal-graph engine: closures, highest weights, string
//! operations, tensor products, Demazure crystals and an axiom checker.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Debug, Write as _};
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{RootDatum, Weight};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::weightring::GroupAlgebraElement;

/// Default ceiling on the number of elements a closure may produce.
pub const DEFAULT_ELEMENT_LIMIT: usize = 1_000_000;

/// An upper seminormal crystal. Operators return `None` for `0`.
pub trait Crystal: Sync {
    type Elem: Clone + Ord + Hash + Debug + Send + Sync;

    fn datum(&self) -> &RootDatum;
    fn weight(&self, b: &Self::Elem) -> Weight;
    fn epsilon(&self, i: usize, b: &Self::Elem) -> i64;
    fn phi(&self, i: usize, b: &Self::Elem) -> i64;
    fn e(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;
    fn f(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;
    fn label(&self, b: &Self::Elem) -> String;
}

/// The crystal of all monomials over a root datum.
#[derive(Clone, Copy, Debug)]
pub struct MonomialCrystal<'a> {
    datum: &'a RootDatum,
}

impl<'a> MonomialCrystal<'a> {
    pub fn new(datum: &'a RootDatum) -> Self {
        MonomialCrystal { datum }
    }
}

impl Crystal for MonomialCrystal<'_> {
    type Elem = Monomial;

    fn datum(&self) -> &RootDatum {
        self.datum
    }
    fn weight(&self, b: &Monomial) -> Weight {
        b.weight().clone()
    }
    fn epsilon(&self, i: usize, b: &Monomial) -> i64 {
        b.epsilon(i)
    }
    fn phi(&self, i: usize, b: &Monomial) -> i64 {
        b.phi(i)
    }
    fn e(&self, i: usize, b: &Monomial) -> Option<Monomial> {
        b.e(self.datum, i)
    }
    fn f(&self, i: usize, b: &Monomial) -> Option<Monomial> {
        b.f(self.datum, i)
    }
    fn label(&self, b: &Monomial) -> String {
        b.variables_string()
    }
}

/// An element `left ⊗ right` of a tensor product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TensorElement<L, R> {
    pub left: L,
    pub right: R,
}

/// Tensor product of two crystals with the rules
/// `e_i(b1 ⊗ b2) = e_i b1 ⊗ b2` if `φ_i(b1) ≥ ε_i(b2)` (else act on `b2`) and
/// `f_i(b1 ⊗ b2) = f_i b1 ⊗ b2` if `φ_i(b1) > ε_i(b2)` (else act on `b2`).
#[derive(Clone, Copy, Debug)]
pub struct TensorProduct<'a, A, B> {
    pub left: &'a A,
    pub right: &'a B,
}

impl<'a, A: Crystal, B: Crystal> TensorProduct<'a, A, B> {
    pub fn new(left: &'a A, right: &'a B) -> Self {
        TensorProduct { left, right }
    }
}

impl<A: Crystal, B: Crystal> Crystal for TensorProduct<'_, A, B> {
    type Elem = TensorElement<A::Elem, B::Elem>;

    fn datum(&self) -> &RootDatum {
        self.left.datum()
    }
    fn weight(&self, b: &Self::Elem) -> Weight {
        self.left.weight(&b.left).plus(&self.right.weight(&b.right))
    }
    fn epsilon(&self, i: usize, b: &Self::Elem) -> i64 {
        let w1 = self.left.weight(&b.left);
        let pair = self.datum().pairing(i, &w1);
        self.left.epsilon(i, &b.left).max(self.right.epsilon(i, &b.right) - pair)
    }
    fn phi(&self, i: usize, b: &Self::Elem) -> i64 {
        let w2 = self.right.weight(&b.right);
        let pair = self.datum().pairing(i, &w2);
        self.right.phi(i, &b.right).max(self.left.phi(i, &b.left) + pair)
    }
    fn e(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        if self.left.phi(i, &b.left) >= self.right.epsilon(i, &b.right) {
            let l = self.left.e(i, &b.left)?;
            Some(TensorElement { left: l, right: b.right.clone() })
        } else {
            let r = self.right.e(i, &b.right)?;
            Some(TensorElement { left: b.left.clone(), right: r })
        }
    }
    fn f(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        if self.left.phi(i, &b.left) > self.right.epsilon(i, &b.right) {
            let l = self.left.f(i, &b.left)?;
            Some(TensorElement { left: l, right: b.right.clone() })
        } else {
            let r = self.right.f(i, &b.right)?;
            Some(TensorElement { left: b.left.clone(), right: r })
        }
    }
    fn label(&self, b: &Self::Elem) -> String {
        format!("{} ⊗ {}", self.left.label(&b.left), self.right.label(&b.right))
    }
}

/// A finite crystal graph. Elements are sorted; edges `(source, i, target)`
/// record `f_i(source) = target` and are sorted as well, so serialization
/// is reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph<E> {
    elements: Vec<E>,
    edges: Vec<(usize, usize, usize)>,
}

impl<E: Ord + Clone> CrystalGraph<E> {
    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, b: &E) -> Option<usize> {
        self.elements.binary_search(b).ok()
    }

    pub fn contains(&self, b: &E) -> bool {
        self.index_of(b).is_some()
    }

    pub fn element_set(&self) -> BTreeSet<E> {
        self.elements.iter().cloned().collect()
    }

    /// Elements with no incoming edge.
    pub fn highest_weights(&self) -> Vec<E> {
        let mut has_in = vec![false; self.elements.len()];
        for &(_, _, t) in &self.edges {
            has_in[t] = true;
        }
        self.elements.iter().zip(has_in).filter(|(_, h)| !h).map(|(b, _)| b.clone()).collect()
    }
}

/// Breadth-first closure of `seeds` under all `e_i` and `f_i`.
pub fn closure<C: Crystal>(
    crystal: &C,
    seeds: impl IntoIterator<Item = C::Elem>,
    limit: usize,
) -> Result<CrystalGraph<C::Elem>> {
    let datum = crystal.datum();
    let mut seen: BTreeSet<C::Elem> = BTreeSet::new();
    let mut frontier: Vec<C::Elem> = Vec::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            frontier.push(s);
        }
    }
    frontier.sort();
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for b in &frontier {
            for i in datum.vertices() {
                for nb in [crystal.e(i, b), crystal.f(i, b)].into_iter().flatten() {
                    if !seen.contains(&nb) {
                        next.insert(nb);
                    }
                }
            }
        }
        seen.extend(next.iter().cloned());
        if seen.len() > limit {
            return Err(Error::ClosureLimit(limit));
        }
        frontier = next.into_iter().collect();
    }
    Ok(induced_graph(crystal, seen))
}

/// The graph on `elements` with every `f_i` edge that stays inside the set.
pub fn induced_graph<C: Crystal>(crystal: &C, elements: impl IntoIterator<Item = C::Elem>) -> CrystalGraph<C::Elem> {
    let mut elements: Vec<C::Elem> = elements.into_iter().collect();
    elements.sort();
    elements.dedup();
    let n = crystal.datum().num_vertices();
    let edges: Vec<(usize, usize, usize)> = elements
        .par_iter()
        .enumerate()
        .flat_map_iter(|(s, b)| {
            let els = &elements;
            (1..=n).filter_map(move |i| {
                let t = crystal.f(i, b)?;
                els.binary_search(&t).ok().map(|t| (s, i, t))
            })
        })
        .collect();
    CrystalGraph { elements, edges }
}

/// Returns an element and a vertex whose `e_i` or `f_i` image leaves the
/// set, or `None` if the set is closed.
pub fn closure_violation<C: Crystal>(crystal: &C, set: &BTreeSet<C::Elem>) -> Option<(C::Elem, usize)> {
    let datum = crystal.datum();
    let items: Vec<&C::Elem> = set.iter().collect();
    items.par_iter().find_map_first(|b| {
        datum.vertices().find_map(|i| {
            let escapes = [crystal.e(i, b), crystal.f(i, b)].into_iter().flatten().any(|nb| !set.contains(&nb));
            escapes.then(|| ((*b).clone(), i))
        })
    })
}

/// Elements with `e_i(b) = 0` for every `i`.
pub fn primitive_elements<'x, C: Crystal>(
    crystal: &C,
    elements: impl IntoIterator<Item = &'x C::Elem>,
) -> Vec<C::Elem>
where
    C::Elem: 'x,
{
    let datum = crystal.datum();
    elements
        .into_iter()
        .filter(|b| datum.vertices().all(|i| crystal.e(i, b).is_none()))
        .cloned()
        .collect()
}

/// `D_i(X) = ⋃_{n ≥ 0} f_i^n(X)`
pub fn extend_strings<C: Crystal>(crystal: &C, i: usize, set: &BTreeSet<C::Elem>) -> BTreeSet<C::Elem> {
    let mut out = set.clone();
    for b in set {
        let mut cur = crystal.f(i, b);
        while let Some(x) = cur {
            cur = crystal.f(i, &x);
            out.insert(x);
        }
    }
    out
}

/// An `i`-string of the ambient crystal meeting a set in something other
/// than nothing, everything, or just its top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringViolation<E> {
    pub vertex: usize,
    /// The whole string, top element first.
    pub string: Vec<E>,
    /// Positions along the string that lie in the set.
    pub members: Vec<usize>,
}

impl<E: Debug> fmt::Display for StringViolation<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-string of length {} meets the set at positions {:?}", self.vertex, self.string.len(), self.members)
    }
}

/// Checks that every root string of `ambient` meets `set` in the empty
/// set, the whole string, or only its top element.
pub fn string_property<C: Crystal>(
    crystal: &C,
    set: &BTreeSet<C::Elem>,
    ambient: &CrystalGraph<C::Elem>,
) -> std::result::Result<(), StringViolation<C::Elem>> {
    let datum = crystal.datum();
    for i in datum.vertices() {
        for top in ambient.elements() {
            if crystal.e(i, top).is_some() {
                continue;
            }
            let mut string = vec![top.clone()];
            while let Some(next) = crystal.f(i, string.last().expect("nonempty")) {
                string.push(next);
            }
            let members: Vec<usize> = (0..string.len()).filter(|&k| set.contains(&string[k])).collect();
            let ok = members.is_empty() || members.len() == string.len() || members == [0];
            if !ok {
                return Err(StringViolation { vertex: i, string, members });
            }
        }
    }
    Ok(())
}

/// `Σ_{x ∈ X} e^{wt x}`
pub fn character_of_set<'x, C: Crystal>(
    crystal: &C,
    elements: impl IntoIterator<Item = &'x C::Elem>,
) -> GroupAlgebraElement
where
    C::Elem: 'x,
{
    let mut counts: BTreeMap<Weight, i64> = BTreeMap::new();
    for b in elements {
        *counts.entry(crystal.weight(b)).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

/// The monomial `b_λ = e^λ ∏_i y_{i,c(i)}^{⟨α_i^∨, λ⟩}` where `c(i)` is the
/// parity-matched level nearest to `baseline` (rounding up).
pub fn highest_weight_monomial(datum: &RootDatum, lambda: &Weight, baseline: i64) -> Result<Monomial> {
    datum.check_weight(lambda)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let exps: Vec<(usize, i64, i64)> = datum
        .vertices()
        .map(|i| {
            let c = baseline + (datum.parity(i) - baseline).rem_euclid(2);
            (i, c, datum.pairing(i, lambda))
        })
        .collect();
    Monomial::from_parts(datum, lambda.clone(), &exps)
}

/// `B_w(λ) = D_{i_1} ⋯ D_{i_r} {b_λ}` realized inside the monomial crystal.
pub fn demazure_crystal(datum: &RootDatum, lambda: &Weight, word: &[usize]) -> Result<BTreeSet<Monomial>> {
    demazure_crystal_at(datum, lambda, word, 0)
}

pub fn demazure_crystal_at(
    datum: &RootDatum,
    lambda: &Weight,
    word: &[usize],
    baseline: i64,
) -> Result<BTreeSet<Monomial>> {
    for &i in word {
        datum.check_vertex(i)?;
    }
    let crystal = MonomialCrystal::new(datum);
    let seed = highest_weight_monomial(datum, lambda, baseline)?;
    let mut set = BTreeSet::from([seed]);
    for &i in word.iter().rev() {
        set = extend_strings(&crystal, i, &set);
    }
    Ok(set)
}

/// All pairs of elements of two closed graphs, with tensor-product edges.
pub fn tensor_crystal<A: Crystal, B: Crystal>(
    left: &A,
    left_graph: &CrystalGraph<A::Elem>,
    right: &B,
    right_graph: &CrystalGraph<B::Elem>,
) -> CrystalGraph<TensorElement<A::Elem, B::Elem>> {
    let t = TensorProduct::new(left, right);
    let pairs = left_graph.elements().iter().flat_map(|l| {
        right_graph.elements().iter().map(move |r| TensorElement { left: l.clone(), right: r.clone() })
    });
    induced_graph(&t, pairs)
}

/// Exhaustively checks the crystal axioms on a closed graph:
/// `φ_i = ε_i + ⟨α_i^∨, wt⟩`, `e_i`/`f_i` are mutually inverse, weights
/// move by `±α_i`, `ε_i`/`φ_i` change by one along edges, the graph is
/// closed, and `ε_i`/`φ_i` count the steps to the end of each string.
pub fn check_axioms<C: Crystal>(crystal: &C, graph: &CrystalGraph<C::Elem>) -> std::result::Result<(), String> {
    let datum = crystal.datum();
    graph.elements().par_iter().try_for_each(|b| {
        for i in datum.vertices() {
            let wt = crystal.weight(b);
            let (eps, phi) = (crystal.epsilon(i, b), crystal.phi(i, b));
            let fail = |msg: &str| Err(format!("{msg} at {} for i = {i}", crystal.label(b)));
            if phi != eps + datum.pairing(i, &wt) {
                return fail("φ ≠ ε + ⟨α^∨, wt⟩");
            }
            if let Some(up) = crystal.e(i, b) {
                if !graph.contains(&up) {
                    return fail("e_i leaves the graph");
                }
                if crystal.f(i, &up).as_ref() != Some(b) {
                    return fail("f_i e_i ≠ id");
                }
                if crystal.weight(&up) != wt.plus(datum.simple_root(i)) {
                    return fail("e_i does not raise the weight by α_i");
                }
                if crystal.epsilon(i, &up) != eps - 1 || crystal.phi(i, &up) != phi + 1 {
                    return fail("ε/φ do not shift along an e_i edge");
                }
            }
            if let Some(down) = crystal.f(i, b) {
                if !graph.contains(&down) {
                    return fail("f_i leaves the graph");
                }
                if crystal.e(i, &down).as_ref() != Some(b) {
                    return fail("e_i f_i ≠ id");
                }
                if crystal.weight(&down) != wt.minus(datum.simple_root(i)) {
                    return fail("f_i does not lower the weight by α_i");
                }
            }
            let mut steps = 0;
            let mut cur = b.clone();
            while let Some(x) = crystal.e(i, &cur) {
                cur = x;
                steps += 1;
            }
            if steps != eps {
                return fail("ε_i is not the length of the e_i string");
            }
            let mut steps = 0;
            let mut cur = b.clone();
            while let Some(x) = crystal.f(i, &cur) {
                cur = x;
                steps += 1;
            }
            if steps != phi {
                return fail("φ_i is not the length of the f_i string");
            }
        }
        Ok(())
    })
}

/// Graphviz rendering with vertices in sorted order and edges labelled by
/// the vertex of the Dynkin diagram.
pub fn to_dot<C: Crystal>(crystal: &C, graph: &CrystalGraph<C::Elem>) -> String {
    let mut out = String::from("digraph crystal {\n");
    for (k, b) in graph.elements().iter().enumerate() {
        let label = crystal.label(b).replace('"', "\\\"");
        let _ = writeln!(out, "  n{k} [label=\"{label}\"];");
    }
    for &(s, i, t) in graph.edges() {
        let _ = writeln!(out, "  n{s} -> n{t} [label=\"{i}\"];");
    }
    out.push_str("}\n");
    out
}

/// JSON form `{"vertices": [...], "edges": [{"from", "to", "i"}]}`.
pub fn to_json<E: Ord + Clone + Serialize>(graph: &CrystalGraph<E>) -> serde_json::Value {
    let edges: Vec<serde_json::Value> = graph
        .edges()
        .iter()
        .map(|&(s, i, t)| serde_json::json!({"from": s, "to": t, "i": i}))
        .collect();
    serde_json::json!({ "vertices": graph.elements(), "edges": edges })
}
