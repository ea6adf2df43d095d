//! Tensor words, multilinear evaluation, and the Koszul sign engine.
//!
//! This module is the single sign authority of the library. The rule is
//! `(f ⊗ g)(x ⊗ y) = (-1)^{|g||x|} f(x) ⊗ g(y)`, extended to any number of
//! factors; every diagram elsewhere is encoded as composites of
//! [`tensor_eval`] and the shift transports here, so no second sign
//! convention can drift out of step.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::{GradedMap, GradedModule};
use crate::scalar::Scalar;

/// A pure tensor of basis labels. Which modules the letters live in, and
/// with what suspension, is context supplied by the caller.
pub type Word = Vec<String>;

/// Degree of a word whose letters live in `Π^shift module`.
pub fn word_degree(module: &GradedModule, word: &[String], shift: i64) -> Result<i64> {
    let mut d = 0;
    for l in word {
        d += module.degree_of(l)? + shift;
    }
    Ok(d)
}

/// Sparse element of a tensor product, as words with coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<Word, Scalar>,
}

impl TensorElement {
    pub fn zero() -> TensorElement {
        TensorElement::default()
    }

    pub fn single(word: Word, coeff: Scalar) -> TensorElement {
        let mut t = TensorElement::zero();
        t.add_term(word, coeff);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, word: &[String]) -> Option<&Scalar> {
        self.terms.get(word)
    }

    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let updated = match self.terms.get(&word) {
            Some(c) => c.checked_add(&coeff).expect("coherent rings"),
            None => coeff,
        };
        if updated.is_zero() {
            self.terms.remove(&word);
        } else {
            self.terms.insert(word, updated);
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, factor: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.checked_mul(factor).expect("coherent rings"));
        }
        out
    }

    pub fn negated(&self) -> TensorElement {
        TensorElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.negated())).collect() }
    }

    pub fn signed(self, exponent: i64) -> TensorElement {
        if exponent.rem_euclid(2) == 0 {
            self
        } else {
            self.negated()
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.negated())
    }
}

/// Koszul sign exponent for applying `f_1 ⊗ ... ⊗ f_k` to `x_1 ⊗ ... ⊗ x_k`:
/// each `f_j` moves past `x_1, ..., x_{j-1}`.
pub fn koszul_exponent(map_degrees: &[i64], element_degrees: &[i64]) -> i64 {
    let mut exp = 0;
    let mut prefix = 0;
    for (j, fd) in map_degrees.iter().enumerate() {
        exp += fd * prefix;
        prefix += element_degrees.get(j).copied().unwrap_or(0);
    }
    exp
}

/// Applies an ordered list of single-slot maps to an element of the tensor
/// product of their sources, with the Koszul rule. Letters are read in the
/// maps' source modules; suspensions are handled by the caller reshaping
/// the maps, so only source degrees enter the sign bookkeeping here.
pub fn tensor_eval(maps: &[&GradedMap], element: &TensorElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (word, coeff) in element.terms() {
        if word.len() != maps.len() {
            return Err(Error::ArityMismatch { expected: maps.len(), got: word.len() });
        }
        let mut letter_degrees = Vec::with_capacity(word.len());
        for (l, f) in word.iter().zip(maps) {
            letter_degrees.push(f.source.degree_of(l)?);
        }
        let map_degrees: Vec<i64> = maps.iter().map(|f| f.degree).collect();
        let sign = koszul_exponent(&map_degrees, &letter_degrees);
        // images per slot, then multilinear expansion
        let mut partial: Vec<(Word, Scalar)> =
            vec![(Vec::with_capacity(word.len()), coeff.clone().signed(sign))];
        for (l, f) in word.iter().zip(maps) {
            let img = f.image_of(l)?;
            if img.is_zero() {
                partial.clear();
                break;
            }
            let mut next = Vec::with_capacity(partial.len() * img.terms().count());
            for (w, c) in &partial {
                for (tl, tc) in img.terms() {
                    let mut w2 = w.clone();
                    w2.push(tl.clone());
                    next.push((w2, c.checked_mul(tc)?));
                }
            }
            partial = next;
        }
        for (w, c) in partial {
            out.add_term(w, c);
        }
    }
    Ok(out)
}

/// An element of `Π^{outer} (Π^{s_1} M_1 ⊗ ... ⊗ Π^{s_k} M_k)`, stored as
/// words of base-module labels. The canonical shift transports move one `Π`
/// between a factor and the outer stack, producing only a sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedTensor {
    pub outer_shift: i64,
    pub factors: Vec<(GradedModule, i64)>,
    pub element: TensorElement,
}

impl ShiftedTensor {
    pub fn new(factors: Vec<(GradedModule, i64)>, element: TensorElement) -> ShiftedTensor {
        ShiftedTensor { outer_shift: 0, factors, element }
    }

    fn letter_degree(&self, i: usize, label: &str) -> Result<i64> {
        let (m, s) = &self.factors[i];
        Ok(m.degree_of(label)? + s)
    }

    /// `[m] ⊗ n -> [m ⊗ n]` and its right-factor analogue
    /// `m ⊗ [n] -> (-1)^{|m|} [m ⊗ n]`: pulls one suspension off factor
    /// `i` onto the outer stack, paying the Koszul sign for moving it past
    /// the letters to its left.
    pub fn transport_out(&self, i: usize) -> Result<ShiftedTensor> {
        if i >= self.factors.len() {
            return Err(Error::ShapeMismatch(format!("no tensor factor {i}")));
        }
        let mut factors = self.factors.clone();
        factors[i].1 -= 1;
        let mut element = TensorElement::zero();
        for (w, c) in self.element.terms() {
            if w.len() != self.factors.len() {
                return Err(Error::ArityMismatch { expected: self.factors.len(), got: w.len() });
            }
            let mut exp = 0;
            for (j, l) in w.iter().enumerate().take(i) {
                exp += self.letter_degree(j, l)?;
            }
            element.add_term(w.clone(), c.clone().signed(exp));
        }
        Ok(ShiftedTensor { outer_shift: self.outer_shift + 1, factors, element })
    }

    /// Inverse of [`transport_out`](Self::transport_out).
    pub fn transport_in(&self, i: usize) -> Result<ShiftedTensor> {
        if i >= self.factors.len() {
            return Err(Error::ShapeMismatch(format!("no tensor factor {i}")));
        }
        let mut factors = self.factors.clone();
        factors[i].1 += 1;
        let mut element = TensorElement::zero();
        for (w, c) in self.element.terms() {
            let mut exp = 0;
            for (j, l) in w.iter().enumerate().take(i) {
                exp += self.letter_degree(j, l)?;
            }
            element.add_term(w.clone(), c.clone().signed(exp));
        }
        Ok(ShiftedTensor { outer_shift: self.outer_shift - 1, factors, element })
    }

    /// Drops a rank-one degree-0 factor (a copy of `k` spanned by
    /// `unit_label`) from every word; the canonical `k ⊗ V ≅ V ≅ V ⊗ k`
    /// carries no sign.
    pub fn contract_unit(&self, i: usize, unit_label: &str) -> Result<ShiftedTensor> {
        let (m, s) = &self.factors[i];
        if *s != 0 || m.rank() != 1 || m.degree_of(unit_label)? != 0 {
            return Err(Error::ShapeMismatch("factor is not an unshifted copy of k".into()));
        }
        let mut factors = self.factors.clone();
        factors.remove(i);
        let mut element = TensorElement::zero();
        for (w, c) in self.element.terms() {
            if w[i] != unit_label {
                return Err(Error::UnknownLabel(w[i].clone()));
            }
            let mut w2 = w.clone();
            w2.remove(i);
            element.add_term(w2, c.clone());
        }
        Ok(ShiftedTensor { outer_shift: self.outer_shift, factors, element })
    }
}

/// The two canonical isomorphisms of a two-factor product, as a standalone
/// operation: `Left` sends `[m] ⊗ n -> [m ⊗ n]` (no sign), `Right` sends
/// `m ⊗ [n] -> (-1)^{|m|} [m ⊗ n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftSide {
    Left,
    Right,
}

pub fn transport_shift(input: &ShiftedTensor, side: ShiftSide) -> Result<ShiftedTensor> {
    if input.factors.len() != 2 {
        return Err(Error::ShapeMismatch("transport_shift expects two factors".into()));
    }
    match side {
        ShiftSide::Left => input.transport_out(0),
        ShiftSide::Right => input.transport_out(1),
    }
}

pub fn transport_shift_inverse(input: &ShiftedTensor, side: ShiftSide) -> Result<ShiftedTensor> {
    match side {
        ShiftSide::Left => input.transport_in(0),
        ShiftSide::Right => input.transport_in(1),
    }
}

/// All words of a given arity over a module's basis, in canonical order.
pub fn all_words(module: &GradedModule, arity: usize) -> Vec<Word> {
    let labels: Vec<String> = module.labels().cloned().collect();
    let mut words: Vec<Word> = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::with_capacity(words.len() * labels.len());
        for w in &words {
            for l in &labels {
                let mut w2 = w.clone();
                w2.push(l.clone());
                next.push(w2);
            }
        }
        words = next;
    }
    words
}
