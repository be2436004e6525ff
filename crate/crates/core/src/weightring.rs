//! The group algebra `Z[P]` of the weight lattice, Demazure operators and
//! decompositions into irreducible and Demazure characters.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::cartan::{RootDatum, Weight};
use crate::error::{Error, Result};

/// A finite integer combination `Σ c_λ e^λ`. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<Weight, i64>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e^λ`
    pub fn monomial(w: Weight) -> Self {
        Self::term(w, 1)
    }

    pub fn term(w: Weight, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    /// `e^0` in the lattice of `datum`.
    pub fn one(datum: &RootDatum) -> Self {
        Self::monomial(datum.zero())
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        self.add_term_ref(&w, c);
    }

    fn add_term_ref(&mut self, w: &Weight, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(w) {
            Some(e) => {
                *e += c;
                if *e == 0 {
                    self.terms.remove(w);
                }
            }
            None => {
                self.terms.insert(w.clone(), c);
            }
        }
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Sum of all coefficients, i.e. the dimension for a module character.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    /// Multiplies by `e^μ`.
    pub fn shifted(&self, mu: &Weight) -> Self {
        Self { terms: self.terms.iter().map(|(w, &c)| (w.plus(mu), c)).collect() }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Checks invariance under every simple reflection.
    pub fn is_weyl_invariant(&self, datum: &RootDatum) -> bool {
        datum.vertices().all(|i| {
            self.terms.iter().all(|(w, &c)| self.coefficient(&datum.reflect(i, w)) == c)
        })
    }

    /// For `GL_n`: multiplies each term by the power of `det` that makes its
    /// last coordinate zero. Useful to compare characters modulo `det`.
    pub fn normalize_mod_det(&self) -> Self {
        let mut out = Self::zero();
        for (w, &c) in &self.terms {
            let last = *w.0.last().unwrap_or(&0);
            out.add_term(Weight(w.0.iter().map(|x| x - last).collect()), c);
        }
        out
    }

    /// Human-readable rendering. `GL_n` characters are written as
    /// polynomials in `x_1, …, x_n`; other types as sums of `e^(…)` with
    /// fundamental-weight coordinates.
    pub fn render(&self, datum: &RootDatum) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        // largest weights first
        for (w, &c) in self.terms.iter().rev() {
            let body = if datum.is_gl() {
                let vars: Vec<String> = w
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(j, &e)| if e == 1 { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, e) })
                    .collect();
                if vars.is_empty() {
                    "1".to_string()
                } else {
                    vars.join(" ")
                }
            } else {
                format!("e^{}", datum.format_weight(w))
            };
            parts.push(match c {
                1 => body,
                -1 => format!("-{body}"),
                _ => format!("{c} {body}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }

    /// Map from rendered weight to coefficient, for JSON output.
    pub fn to_json_map(&self, datum: &RootDatum) -> BTreeMap<String, i64> {
        self.terms.iter().map(|(w, &c)| (datum.format_weight(w), c)).collect()
    }
}

impl FromIterator<(Weight, i64)> for GroupAlgebraElement {
    fn from_iter<T: IntoIterator<Item = (Weight, i64)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (w, c) in iter {
            out.add_term_ref(&w, c);
        }
        out
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c} e^{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl AddAssign<&GroupAlgebraElement> for GroupAlgebraElement {
    fn add_assign(&mut self, rhs: &GroupAlgebraElement) {
        for (w, &c) in &rhs.terms {
            self.add_term_ref(w, c);
        }
    }
}

impl SubAssign<&GroupAlgebraElement> for GroupAlgebraElement {
    fn sub_assign(&mut self, rhs: &GroupAlgebraElement) {
        for (w, &c) in &rhs.terms {
            self.add_term_ref(w, -c);
        }
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn add(self, rhs: Self) -> GroupAlgebraElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn sub(self, rhs: Self) -> GroupAlgebraElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        self.scaled(-1)
    }
}

impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn mul(self, rhs: Self) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero();
        for (a, &c) in &self.terms {
            for (b, &d) in &rhs.terms {
                out.add_term_ref(&a.plus(b), c * d);
            }
        }
        out
    }
}

/// The Demazure operator `π_i`, extended linearly from
/// `π_i e^λ = (e^λ − e^{s_i λ − α_i}) / (1 − e^{−α_i})`.
pub fn demazure_pi(datum: &RootDatum, i: usize, f: &GroupAlgebraElement) -> GroupAlgebraElement {
    let alpha = datum.simple_root(i);
    let mut out = GroupAlgebraElement::zero();
    for (w, c) in f.terms() {
        let m = datum.pairing(i, w);
        if m >= 0 {
            let mut cur = w.clone();
            for _ in 0..=m {
                out.add_term_ref(&cur, c);
                cur.add_scaled(alpha, -1);
            }
        } else if m <= -2 {
            let mut cur = w.plus(alpha);
            for _ in 0..(-m - 1) {
                out.add_term_ref(&cur, -c);
                cur.add_scaled(alpha, 1);
            }
        }
    }
    out
}

/// `π_{i_1} ⋯ π_{i_k} f`; the rightmost operator acts first.
pub fn apply_word(datum: &RootDatum, word: &[usize], f: &GroupAlgebraElement) -> GroupAlgebraElement {
    word.iter().rev().fold(f.clone(), |acc, &i| demazure_pi(datum, i, &acc))
}

/// `π_{w_0} f`, the Weyl character operator.
pub fn pi_longest(datum: &RootDatum, f: &GroupAlgebraElement) -> GroupAlgebraElement {
    apply_word(datum, datum.longest_element_word(), f)
}

/// Character of the irreducible module of highest weight `λ`.
pub fn irreducible_character(datum: &RootDatum, lambda: &Weight) -> Result<GroupAlgebraElement> {
    datum.check_weight(lambda)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(pi_longest(datum, &GroupAlgebraElement::monomial(lambda.clone())))
}

/// Demazure character `κ_μ = π_w e^{λ⁺}` where `μ = w λ⁺` and `w` is the
/// reduced word returned by [`RootDatum::dominant_representative`].
pub fn demazure_character(datum: &RootDatum, mu: &Weight) -> GroupAlgebraElement {
    let (dom, word) = datum.dominant_representative(mu);
    apply_word(datum, &word, &GroupAlgebraElement::monomial(dom))
}

/// Writes a Weyl-invariant `f` as `Σ c_λ χ_λ`, requiring all `c_λ ≥ 0`.
pub fn weyl_decompose(datum: &RootDatum, f: &GroupAlgebraElement) -> Result<BTreeMap<Weight, i64>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let (top, c) = rest
            .terms()
            .max_by_key(|(w, _)| (datum.height(w), (*w).clone()))
            .map(|(w, c)| (w.clone(), c))
            .expect("nonzero");
        if !datum.is_dominant(&top) {
            return Err(Error::Decomposition(format!(
                "not Weyl invariant: leading term e^{top} is not dominant"
            )));
        }
        if c < 0 {
            return Err(Error::Decomposition(format!("negative multiplicity {c} for χ_{top}")));
        }
        let chi = irreducible_character(datum, &top)?;
        rest -= &chi.scaled(c);
        out.insert(top, c);
    }
    Ok(out)
}

/// Writes `f` as `Σ c_μ κ_μ` with `c_μ ≥ 0`, peeling off the lowest term
/// in the dominance order at each step.
pub fn key_decompose(datum: &RootDatum, f: &GroupAlgebraElement) -> Result<BTreeMap<Weight, i64>> {
    let mut rest = f.clone();
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    let mut cache: HashMap<Weight, GroupAlgebraElement> = HashMap::new();
    let limit = 1_000_000usize;
    let mut steps = 0usize;
    while !rest.is_zero() {
        steps += 1;
        if steps > limit {
            return Err(Error::Decomposition("key decomposition did not terminate".into()));
        }
        let (low, c) = rest
            .terms()
            .min_by_key(|(w, _)| (datum.height(w), (*w).clone()))
            .map(|(w, c)| (w.clone(), c))
            .expect("nonzero");
        if c < 0 {
            return Err(Error::Decomposition(format!(
                "negative multiplicity {c} for the Demazure character κ_{low}"
            )));
        }
        let kappa = cache.entry(low.clone()).or_insert_with(|| demazure_character(datum, &low));
        rest -= &kappa.scaled(c);
        *out.entry(low).or_insert(0) += c;
    }
    Ok(out)
}

/// Recombines a decomposition into irreducible characters.
pub fn character_from_decomposition(
    datum: &RootDatum,
    decomposition: &BTreeMap<Weight, i64>,
) -> Result<GroupAlgebraElement> {
    let mut out = GroupAlgebraElement::zero();
    for (w, &c) in decomposition {
        out += &irreducible_character(datum, w)?.scaled(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanKind;

    fn e(v: &[i64]) -> GroupAlgebraElement {
        GroupAlgebraElement::monomial(Weight(v.to_vec()))
    }

    #[test]
    fn pi_on_sl2() {
        let d = RootDatum::new(CartanKind::A, 1).unwrap();
        assert_eq!(demazure_pi(&d, 1, &e(&[2])), &(&e(&[2]) + &e(&[0])) + &e(&[-2]));
        assert!(demazure_pi(&d, 1, &e(&[-1])).is_zero());
        assert_eq!(demazure_pi(&d, 1, &e(&[-3])), (&e(&[-1]) + &e(&[1])).scaled(-1));
    }

    #[test]
    fn sl3_adjoint_dimension() {
        let d = RootDatum::new(CartanKind::A, 2).unwrap();
        let chi = irreducible_character(&d, &Weight(vec![1, 1])).unwrap();
        assert_eq!(chi.total(), 8);
        assert_eq!(chi.coefficient(&Weight(vec![0, 0])), 2);
        assert!(chi.is_weyl_invariant(&d));
    }

    #[test]
    fn tensor_square_of_standard_sl3() {
        let d = RootDatum::new(CartanKind::A, 2).unwrap();
        let v = irreducible_character(&d, &Weight(vec![1, 0])).unwrap();
        let dec = weyl_decompose(&d, &(&v * &v)).unwrap();
        let expect: BTreeMap<Weight, i64> =
            [(Weight(vec![2, 0]), 1), (Weight(vec![0, 1]), 1)].into_iter().collect();
        assert_eq!(dec, expect);
    }

    #[test]
    fn weyl_decompose_rejects_non_invariant() {
        let d = RootDatum::new(CartanKind::A, 2).unwrap();
        assert!(weyl_decompose(&d, &e(&[-1, 0])).is_err());
        assert!(weyl_decompose(&d, &e(&[0, 0]).scaled(-1)).is_err());
    }

    #[test]
    fn key_decompose_of_demazure_characters() {
        let d = RootDatum::gl(3).unwrap();
        let f = &demazure_character(&d, &Weight(vec![0, 1, 2])) + &demazure_character(&d, &Weight(vec![1, 1, 0])).scaled(2);
        let dec = key_decompose(&d, &f).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[&Weight(vec![1, 1, 0])], 2);
        assert_eq!(dec[&Weight(vec![0, 1, 2])], 1);
    }

    #[test]
    fn gl_rendering_normalizes_det() {
        let d = RootDatum::gl(4).unwrap();
        let f = &e(&[3, 2, 2, 0]) + &e(&[3, 2, 1, 1]);
        assert_eq!(f.normalize_mod_det().render(&d), "x1^3 x2^2 x3^2 + x1^2 x2");
    }
}
