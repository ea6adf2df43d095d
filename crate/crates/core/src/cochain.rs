//! The Hochschild cochain calculus on `Hoch(A,B) = ∏_{n≥1} Hom((ΠA)^{⊗n}, ΠB)`.
//!
//! Cochains are arity-truncated at `max_arity = N`. Coderivations and
//! coalgebra morphisms of the tensor coalgebra are never materialized as
//! matrices (they are exponentially large); they exist only through
//! [`phi_inv_apply`] and [`psi_inv_apply`] evaluated on demand. All
//! implemented identities are arity-lower-triangular, so truncation is
//! exact for conclusions about arities `<= N`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedModule};
use crate::scalar::{RingSpec, Scalar};
use crate::tensor::{all_words, word_degree, TensorElement, Word};

/// Element of the (nonunital) tensor coalgebra `Tco(ΠA)`: a sparse sum of
/// tensor words.
pub type TcoElement = TensorElement;

/// Arity-truncated element of `Hoch(A,B)`; the universal carrier for
/// structures `ν`, reduced parts `μ̄`, curvature sources `h`, and morphism
/// components `g`. Letters of component words are read in `ΠA`, outputs in
/// `ΠB`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub ring: RingSpec,
    pub source: GradedModule,
    pub target: GradedModule,
    pub degree: i64,
    pub max_arity: usize,
    components: BTreeMap<usize, BTreeMap<Word, GradedElement>>,
}

impl Cochain {
    pub fn zero(
        ring: RingSpec,
        source: GradedModule,
        target: GradedModule,
        degree: i64,
        max_arity: usize,
    ) -> Cochain {
        Cochain { ring, source, target, degree, max_arity, components: BTreeMap::new() }
    }

    /// The arity-1 identity cochain of degree 0 on `module`.
    pub fn identity(ring: RingSpec, module: &GradedModule, max_arity: usize) -> Cochain {
        let mut c = Cochain::zero(ring.clone(), module.clone(), module.clone(), 0, max_arity);
        for l in module.labels() {
            let d = module.degree_of(l).expect("own label") + 1;
            c.set_component(1, vec![l.clone()], GradedElement::single(l.clone(), ring.one(), d))
                .expect("identity entries are consistent");
        }
        c
    }

    /// Inserts one component value, enforcing the degree bookkeeping:
    /// an arity-`n` component maps words of shifted degree `d` to elements
    /// of `ΠB` in degree `d + degree`.
    pub fn set_component(&mut self, arity: usize, word: Word, output: GradedElement) -> Result<()> {
        if arity == 0 || arity > self.max_arity {
            return Err(Error::ArityOutOfRange(arity, self.max_arity));
        }
        if word.len() != arity {
            return Err(Error::ArityMismatch { expected: arity, got: word.len() });
        }
        let wd = word_degree(&self.source, &word, 1)?;
        if output.is_zero() {
            if let Some(comp) = self.components.get_mut(&arity) {
                comp.remove(&word);
                if comp.is_empty() {
                    self.components.remove(&arity);
                }
            }
            return Ok(());
        }
        output.validate_in(&self.target, 1)?;
        if output.degree() != Some(wd + self.degree) {
            return Err(Error::DegreeMismatch {
                expected: wd + self.degree,
                got: output.degree().unwrap_or(i64::MIN),
            });
        }
        self.components.entry(arity).or_default().insert(word, output);
        Ok(())
    }

    pub fn add_component(&mut self, arity: usize, word: Word, output: GradedElement) -> Result<()> {
        let current = self.eval_word(&word)?;
        self.set_component(arity, word, current.add(&output)?)
    }

    pub fn component(&self, arity: usize) -> Option<&BTreeMap<Word, GradedElement>> {
        self.components.get(&arity)
    }

    pub fn arities(&self) -> impl Iterator<Item = usize> + '_ {
        self.components.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Applies the arity-matching component to one word. Arities above the
    /// truncation are an error; missing components are zero.
    pub fn eval_word(&self, word: &[String]) -> Result<GradedElement> {
        let n = word.len();
        if n == 0 || n > self.max_arity {
            return Err(Error::ArityOutOfRange(n, self.max_arity));
        }
        Ok(self
            .components
            .get(&n)
            .and_then(|c| c.get(word))
            .cloned()
            .unwrap_or_default())
    }

    /// Linear extension of [`eval_word`](Self::eval_word) to a sum of words.
    pub fn eval_tco(&self, element: &TcoElement) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for (w, c) in element.terms() {
            let img = self.eval_word(w)?;
            if !img.is_zero() {
                out = out.add(&img.scaled(c)?)?;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_type(other)?;
        let mut out = self.clone();
        for (&a, comp) in &other.components {
            for (w, e) in comp {
                out.add_component(a, w.clone(), e.clone())?;
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Cochain {
        let components = self
            .components
            .iter()
            .map(|(&a, c)| (a, c.iter().map(|(w, e)| (w.clone(), e.negated())).collect()))
            .collect();
        Cochain { components, ..self.clone() }
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.negated())
    }

    pub fn scaled(&self, factor: &Scalar) -> Result<Cochain> {
        let mut out = Cochain { components: BTreeMap::new(), ..self.clone() };
        for (&a, comp) in &self.components {
            for (w, e) in comp {
                out.set_component(a, w.clone(), e.scaled(factor)?)?;
            }
        }
        Ok(out)
    }

    pub fn signed(self, exponent: i64) -> Cochain {
        if exponent.rem_euclid(2) == 0 {
            self
        } else {
            self.negated()
        }
    }

    fn check_same_type(&self, other: &Cochain) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::MixedRings(self.ring.to_string(), other.ring.to_string()));
        }
        if self.source != other.source || self.target != other.target {
            return Err(Error::TypeMismatch("cochains live on different modules".into()));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: other.degree });
        }
        if self.max_arity != other.max_arity {
            return Err(Error::TruncationMismatch(self.max_arity, other.max_arity));
        }
        Ok(())
    }

    /// Truncates (or extends, which only raises the bound) to `n`.
    pub fn truncated(&self, n: usize) -> Cochain {
        let components = self
            .components
            .iter()
            .filter(|(&a, _)| a <= n)
            .map(|(&a, c)| (a, c.clone()))
            .collect();
        Cochain { max_arity: n, components, ..self.clone() }
    }

    /// Extension along a source inclusion: the same components, read over a
    /// larger module (implicitly zero on all new words).
    pub fn with_source(&self, source: GradedModule) -> Result<Cochain> {
        for comp in self.components.values() {
            for w in comp.keys() {
                for l in w {
                    let d = source.degree_of(l)?;
                    if d != self.source.degree_of(l)? {
                        return Err(Error::DegreeMismatch {
                            expected: self.source.degree_of(l)?,
                            got: d,
                        });
                    }
                }
            }
        }
        Ok(Cochain { source, ..self.clone() })
    }

    /// Extension along a target inclusion.
    pub fn with_target(&self, target: GradedModule) -> Result<Cochain> {
        for comp in self.components.values() {
            for e in comp.values() {
                for (l, _) in e.terms() {
                    let d = target.degree_of(l)?;
                    if d != self.target.degree_of(l)? {
                        return Err(Error::DegreeMismatch {
                            expected: self.target.degree_of(l)?,
                            got: d,
                        });
                    }
                }
            }
        }
        Ok(Cochain { target, ..self.clone() })
    }

    /// Components whose word uses a label outside `keep` (for closure checks).
    pub fn support_outside_source(&self, keep: &dyn Fn(&str) -> bool) -> Vec<(usize, Word)> {
        let mut out = Vec::new();
        for (&a, comp) in &self.components {
            for w in comp.keys() {
                if w.iter().any(|l| !keep(l)) {
                    out.push((a, w.clone()));
                }
            }
        }
        out
    }

    /// Splits by target labels into (part into `keep`, rest), both typed on
    /// the given submodules.
    pub fn split_target(
        &self,
        keep: &dyn Fn(&str) -> bool,
        kept_target: GradedModule,
        rest_target: GradedModule,
    ) -> Result<(Cochain, Cochain)> {
        let mut a = Cochain::zero(
            self.ring.clone(),
            self.source.clone(),
            kept_target,
            self.degree,
            self.max_arity,
        );
        let mut b = Cochain::zero(
            self.ring.clone(),
            self.source.clone(),
            rest_target,
            self.degree,
            self.max_arity,
        );
        for (&ar, comp) in &self.components {
            for (w, e) in comp {
                let (ka, kb) = e.split_by_labels(keep);
                a.set_component(ar, w.clone(), ka)?;
                b.set_component(ar, w.clone(), kb)?;
            }
        }
        Ok((a, b))
    }

    /// Materializes a cochain from an evaluator, over every basis word of
    /// every arity up to the truncation.
    pub fn materialize(
        ring: RingSpec,
        source: GradedModule,
        target: GradedModule,
        degree: i64,
        max_arity: usize,
        mut eval: impl FnMut(&[String]) -> Result<GradedElement>,
    ) -> Result<Cochain> {
        let mut out = Cochain::zero(ring, source, target, degree, max_arity);
        for n in 1..=max_arity {
            for w in all_words(&out.source, n) {
                let img = eval(&w)?;
                out.set_component(n, w, img)?;
            }
        }
        Ok(out)
    }
}

/// Counit-extended cochain: `Homu(A,B) ≅ Hoch(A,B) ⊕ ΠB`, the arity-0
/// component being an element of `ΠB`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounitalCochain {
    pub base: Cochain,
    pub arity_zero: GradedElement,
}

impl CounitalCochain {
    pub fn new(base: Cochain, arity_zero: GradedElement) -> Result<CounitalCochain> {
        if !arity_zero.is_zero() {
            arity_zero.validate_in(&base.target, 1)?;
            if arity_zero.degree() != Some(base.degree) {
                return Err(Error::DegreeMismatch {
                    expected: base.degree,
                    got: arity_zero.degree().unwrap_or(i64::MIN),
                });
            }
        }
        Ok(CounitalCochain { base, arity_zero })
    }
}

/// Applies `1^{⊗j} ⊗ f^{a} ⊗ 1^{⊗(n-j-a)}` to `w`, paying the Koszul sign
/// for moving `f` past the first `j` letters.
fn insert_eval(f: &Cochain, w: &[String], j: usize, a: usize) -> Result<TcoElement> {
    let img = f.eval_word(&w[j..j + a])?;
    if img.is_zero() {
        return Ok(TcoElement::zero());
    }
    let prefix = word_degree(&f.source, &w[..j], 1)?;
    let sign = f.degree * prefix;
    let mut out = TcoElement::zero();
    for (l, c) in img.terms() {
        let mut word: Word = Vec::with_capacity(w.len() - a + 1);
        word.extend_from_slice(&w[..j]);
        word.push(l.clone());
        word.extend_from_slice(&w[j + a..]);
        out.add_term(word, c.clone().signed(sign));
    }
    Ok(out)
}

/// The coderivation `Φ^{-1}(f)` of `Tco(ΠA)` determined by `π₁ Φ^{-1}(f) = f`,
/// applied to one word: the sum of all single-slot insertions of components
/// of `f`.
pub fn phi_inv_apply(f: &Cochain, w: &[String]) -> Result<TcoElement> {
    if f.source != f.target {
        return Err(Error::TypeMismatch("coderivations need an endo-typed cochain".into()));
    }
    let n = w.len();
    if n == 0 || n > f.max_arity {
        return Err(Error::ArityOutOfRange(n, f.max_arity));
    }
    let mut out = TcoElement::zero();
    for a in f.arities().collect::<Vec<_>>() {
        if a > n {
            continue;
        }
        for j in 0..=(n - a) {
            out = out.add(&insert_eval(f, w, j, a)?);
        }
    }
    Ok(out)
}

/// The arity-`k` component of the coalgebra morphism `Ψ^{-1}(g)` determined
/// by `π₁ Ψ^{-1}(g) = g`, on one word: the sum over all compositions
/// `i_1 + ... + i_k = n` of `g^{i_1} ⊗ ... ⊗ g^{i_k}`. Defined only in
/// degree 0, where the Koszul signs all vanish.
pub fn psi_inv_apply(g: &Cochain, w: &[String], k: usize) -> Result<TcoElement> {
    if g.degree != 0 {
        return Err(Error::NonzeroDegree(g.degree));
    }
    let n = w.len();
    if n == 0 || n > g.max_arity {
        return Err(Error::ArityOutOfRange(n, g.max_arity));
    }
    if k == 0 {
        return Err(Error::ArityOutOfRange(0, n));
    }
    let mut out = TcoElement::zero();
    if k > n {
        return Ok(out);
    }
    for parts in compositions(n, k) {
        // apply g^{i_1} ⊗ ... ⊗ g^{i_k}; all factors have degree 0
        let mut expanded: Vec<(Word, Scalar)> = vec![(Vec::new(), g.ring.one())];
        let mut pos = 0;
        for &a in &parts {
            let img = g.eval_word(&w[pos..pos + a])?;
            pos += a;
            if img.is_zero() {
                expanded.clear();
                break;
            }
            let mut next = Vec::with_capacity(expanded.len() * img.terms().count());
            for (word, c) in &expanded {
                for (l, cc) in img.terms() {
                    let mut w2 = word.clone();
                    w2.push(l.clone());
                    next.push((w2, c.checked_mul(cc)?));
                }
            }
            expanded = next;
        }
        for (word, c) in expanded {
            out.add_term(word, c);
        }
    }
    Ok(out)
}

/// All ordered ways to write `n` as a sum of `k` positive parts.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 || k > n {
        return Vec::new();
    }
    if k == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in 1..=(n - k + 1) {
        for mut rest in compositions(n - first, k - 1) {
            let mut v = Vec::with_capacity(k);
            v.push(first);
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// The full morphism value `Ψ^{-1}(g)(w)` as a sum over all output arities.
pub fn psi_inv_apply_all(g: &Cochain, w: &[String]) -> Result<TcoElement> {
    let mut out = TcoElement::zero();
    for k in 1..=w.len() {
        out = out.add(&psi_inv_apply(g, w, k)?);
    }
    Ok(out)
}

/// Gerstenhaber product `(g ∘ f)^n = Σ_{i,j} g^i (1^{⊗j} ⊗ f^{n-i+1} ⊗ 1^{⊗(i-j-1)})`.
///
/// `f` must be endo-typed on `g`'s source and both truncations must agree;
/// the result is exact at the shared truncation since `(g∘f)^n` only reads
/// arities `<= n`.
pub fn gerst_product(g: &Cochain, f: &Cochain) -> Result<Cochain> {
    if f.source != f.target || f.source != g.source {
        return Err(Error::TypeMismatch(
            "gerst_product needs f endo-typed on g's source".into(),
        ));
    }
    if f.ring != g.ring {
        return Err(Error::MixedRings(g.ring.to_string(), f.ring.to_string()));
    }
    if f.max_arity != g.max_arity {
        return Err(Error::TruncationMismatch(g.max_arity, f.max_arity));
    }
    let f_arities: Vec<usize> = f.arities().collect();
    Cochain::materialize(
        g.ring.clone(),
        g.source.clone(),
        g.target.clone(),
        g.degree + f.degree,
        g.max_arity,
        |w| {
            let mut acc = GradedElement::zero();
            for &a in &f_arities {
                if a > w.len() {
                    continue;
                }
                for j in 0..=(w.len() - a) {
                    let inserted = insert_eval(f, w, j, a)?;
                    acc = acc.add(&g.eval_tco(&inserted)?)?;
                }
            }
            Ok(acc)
        },
    )
}

/// Graded commutator `[f,g] = f∘g - (-1)^{|f||g|} g∘f`.
pub fn gerst_bracket(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    if f.source != f.target || g.source != g.target || f.source != g.source {
        return Err(Error::TypeMismatch("bracket needs endo-typed cochains on one module".into()));
    }
    let fg = gerst_product(f, g)?;
    let gf = gerst_product(g, f)?;
    fg.sub(&gf.signed(f.degree * g.degree))
}

/// Star product `h * g = h Ψ^{-1}(g)` for `g` of degree 0.
pub fn star(h: &Cochain, g: &Cochain) -> Result<Cochain> {
    if g.degree != 0 {
        return Err(Error::NonzeroDegree(g.degree));
    }
    if h.source != g.target {
        return Err(Error::TypeMismatch("star needs h typed on g's target".into()));
    }
    if h.max_arity != g.max_arity {
        return Err(Error::TruncationMismatch(h.max_arity, g.max_arity));
    }
    Cochain::materialize(
        h.ring.clone(),
        g.source.clone(),
        h.target.clone(),
        h.degree,
        h.max_arity,
        |w| {
            let mut acc = GradedElement::zero();
            for k in 1..=w.len().min(h.max_arity) {
                acc = acc.add(&h.eval_tco(&psi_inv_apply(g, w, k)?)?)?;
            }
            Ok(acc)
        },
    )
}

/// A family of linear functionals `(ΠA)^{⊗n} -> k`. Curvatures `ξ` have
/// degree exactly `-2`; the degree `-1` functionals of curved-coalgebra
/// morphisms share the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureMap {
    pub ring: RingSpec,
    pub source: GradedModule,
    pub degree: i64,
    pub max_arity: usize,
    components: BTreeMap<usize, BTreeMap<Word, Scalar>>,
}

impl CurvatureMap {
    /// A curvature functional: degree is exactly `-2` in the Hom grading.
    pub fn curvature(ring: RingSpec, source: GradedModule, max_arity: usize) -> CurvatureMap {
        CurvatureMap { ring, source, degree: -2, max_arity, components: BTreeMap::new() }
    }

    /// General functional of the given degree (used for the `α` of curved
    /// morphisms, which has degree `-1`).
    pub fn functional(
        ring: RingSpec,
        source: GradedModule,
        degree: i64,
        max_arity: usize,
    ) -> CurvatureMap {
        CurvatureMap { ring, source, degree, max_arity, components: BTreeMap::new() }
    }

    pub fn set_value(&mut self, word: Word, value: Scalar) -> Result<()> {
        let n = word.len();
        if n == 0 || n > self.max_arity {
            return Err(Error::ArityOutOfRange(n, self.max_arity));
        }
        if value.is_zero() {
            if let Some(c) = self.components.get_mut(&n) {
                c.remove(&word);
                if c.is_empty() {
                    self.components.remove(&n);
                }
            }
            return Ok(());
        }
        // target k sits in degree 0: nonzero only on words of degree -degree
        let wd = word_degree(&self.source, &word, 1)?;
        if wd + self.degree != 0 {
            return Err(Error::DegreeMismatch { expected: -self.degree, got: wd });
        }
        self.components.entry(n).or_default().insert(word, value);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn eval_word(&self, word: &[String]) -> Result<Scalar> {
        let n = word.len();
        if n == 0 || n > self.max_arity {
            return Ok(self.ring.zero());
        }
        Ok(self
            .components
            .get(&n)
            .and_then(|c| c.get(word))
            .cloned()
            .unwrap_or_else(|| self.ring.zero()))
    }

    pub fn eval_tco(&self, element: &TcoElement) -> Result<Scalar> {
        let mut acc = self.ring.zero();
        for (w, c) in element.terms() {
            acc = acc.checked_add(&self.eval_word(w)?.checked_mul(c)?)?;
        }
        Ok(acc)
    }

    pub fn components(&self) -> &BTreeMap<usize, BTreeMap<Word, Scalar>> {
        &self.components
    }

    /// `s ∘ ξ` as a cochain with target the rank-one module spanned by
    /// `unit_label` in degree 0; degree rises by one.
    pub fn suspended_cochain(&self, unit_label: &str) -> Result<Cochain> {
        let target = GradedModule::unit_module(unit_label);
        let mut out = Cochain::zero(
            self.ring.clone(),
            self.source.clone(),
            target,
            self.degree + 1,
            self.max_arity,
        );
        for (&a, comp) in &self.components {
            for (w, v) in comp {
                out.set_component(
                    a,
                    w.clone(),
                    GradedElement::single(unit_label.to_string(), v.clone(), 1),
                )?;
            }
        }
        Ok(out)
    }

    /// `s^{-1} ∘ h` for a cochain `h` with rank-one target in degree 0;
    /// degree drops by one. Optionally negated, since curvatures are
    /// `ξ = -s^{-1} h`.
    pub fn desuspend_cochain(h: &Cochain, negate: bool) -> Result<CurvatureMap> {
        if h.target.rank() != 1 {
            return Err(Error::TypeMismatch("curvature source must have rank-one target".into()));
        }
        let unit = h.target.labels().next().expect("rank one").clone();
        if h.target.degree_of(&unit)? != 0 {
            return Err(Error::TypeMismatch("rank-one target must sit in degree 0".into()));
        }
        let mut out = CurvatureMap::functional(
            h.ring.clone(),
            h.source.clone(),
            h.degree - 1,
            h.max_arity,
        );
        for a in h.arities().collect::<Vec<_>>() {
            for (w, e) in h.component(a).expect("listed arity") {
                let v = e.coeff(&unit).cloned().unwrap_or_else(|| h.ring.zero());
                out.set_value(w.clone(), if negate { v.negated() } else { v })?;
            }
        }
        Ok(out)
    }
}

/// Nonunital comultiplication `Δ(w) = Σ_{i=1}^{n-1} (w_{<=i}) ⊗ (w_{>i})`.
pub fn comult(w: &[String]) -> Vec<(Word, Word)> {
    (1..w.len()).map(|i| (w[..i].to_vec(), w[i..].to_vec())).collect()
}

/// `ad ξ = (ξ ⊗ 1)Δ - (1 ⊗ ξ)Δ` with `k ⊗ C ≅ C`; a coderivation of degree
/// `|ξ|`. The second term pays the Koszul sign for sliding `ξ` past the
/// prefix.
pub fn ad_xi_apply(xi: &CurvatureMap, w: &[String]) -> Result<TcoElement> {
    let mut out = TcoElement::zero();
    for (pre, post) in comult(w) {
        let left = xi.eval_word(&pre)?;
        if !left.is_zero() {
            out.add_term(post.clone(), left);
        }
        let right = xi.eval_word(&post)?;
        if !right.is_zero() {
            let pre_deg = word_degree(&xi.source, &pre, 1)?;
            out.add_term(pre, right.negated().signed(xi.degree * pre_deg));
        }
    }
    Ok(out)
}

/// `α² = (α ⊗ α)Δ` composed with `k ⊗ k ≅ k`, for a functional `α`: the
/// convolution square `Σ α(pre)·α(post)`. Evaluation is sequential — the
/// first factor is consumed before the second `α` is applied — so no
/// crossing sign arises; for odd `α` this is the negative of the
/// simultaneous-application reading, and it is the convention under which
/// strictly unital morphisms translate exactly to curved morphisms.
pub fn functional_square(alpha: &CurvatureMap, w: &[String]) -> Result<Scalar> {
    let mut acc = alpha.ring.zero();
    for (pre, post) in comult(w) {
        let a = alpha.eval_word(&pre)?;
        if a.is_zero() {
            continue;
        }
        let b = alpha.eval_word(&post)?;
        if b.is_zero() {
            continue;
        }
        acc = acc.checked_add(&a.checked_mul(&b)?)?;
    }
    Ok(acc)
}
