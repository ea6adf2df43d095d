//! Representations of A-infinity algebras through adjoint families.
//!
//! A representation of `(A, ν)` on `(M, δ_M)` is kept as the family
//! `λ^{n+1}: (ΠA)^{⊗n} ⊗ M -> M` of degree `-1` maps, with `λ¹ = δ_M`;
//! `End M` is never materialized as a graded module. The defining
//! equations expand `λ ∘ φ^{-1}(λ)` into two staircase families (plus a
//! curvature term in the strictly unital case); the independent route
//! through cofree comodules lives in [`crate::comodule`].

use std::collections::BTreeMap;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedMap, GradedModule};
use crate::report::{Report, ResidualTerm, Violation};
use crate::scalar::{RingSpec, Scalar};
use crate::tensor::{all_words, word_degree, Word};
use crate::unital::SplitUnitAlgebra;

/// Family of maps `(Π source)^{⊗(n-1)} ⊗ M -> N` indexed by `n >= 1`,
/// all of one degree: `-1` for representations (`M = N`, `λ¹` the
/// differential), `0` for the adjoints of a morphism of representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointFamily {
    pub ring: RingSpec,
    pub source: GradedModule,
    pub module: GradedModule,
    pub target: GradedModule,
    pub degree: i64,
    pub max_arity: usize,
    maps: BTreeMap<usize, BTreeMap<(Word, String), GradedElement>>,
}

impl AdjointFamily {
    /// Representation-shaped family: degree `-1`, acting on `module`.
    pub fn new(
        ring: RingSpec,
        source: GradedModule,
        module: GradedModule,
        max_arity: usize,
    ) -> AdjointFamily {
        AdjointFamily {
            ring,
            source,
            target: module.clone(),
            module,
            degree: -1,
            max_arity,
            maps: BTreeMap::new(),
        }
    }

    /// Morphism-shaped family: degree 0, from `module` to `target`.
    pub fn morphism_family(
        ring: RingSpec,
        source: GradedModule,
        module: GradedModule,
        target: GradedModule,
        max_arity: usize,
    ) -> AdjointFamily {
        AdjointFamily { ring, source, module, target, degree: 0, max_arity, maps: BTreeMap::new() }
    }

    /// Sets `λ^n(word ⊗ m) = output` (the word has `n - 1` letters).
    pub fn set_value(
        &mut self,
        n: usize,
        word: Word,
        module_label: &str,
        output: GradedElement,
    ) -> Result<()> {
        if n == 0 || n > self.max_arity {
            return Err(Error::ArityOutOfRange(n, self.max_arity));
        }
        if word.len() != n - 1 {
            return Err(Error::ArityMismatch { expected: n - 1, got: word.len() });
        }
        let wd = word_degree(&self.source, &word, 1)?;
        let md = self.module.degree_of(module_label)?;
        let key = (word, module_label.to_string());
        if output.is_zero() {
            if let Some(c) = self.maps.get_mut(&n) {
                c.remove(&key);
                if c.is_empty() {
                    self.maps.remove(&n);
                }
            }
            return Ok(());
        }
        output.validate_in(&self.target, 0)?;
        let expected = wd + md + self.degree;
        if output.degree() != Some(expected) {
            return Err(Error::DegreeMismatch {
                expected,
                got: output.degree().unwrap_or(i64::MIN),
            });
        }
        self.maps.entry(n).or_default().insert(key, output);
        Ok(())
    }

    /// Installs a graded map as `λ¹` (empty word).
    pub fn set_differential(&mut self, d: &GradedMap) -> Result<()> {
        if d.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: d.degree });
        }
        let labels: Vec<String> = self.module.labels().cloned().collect();
        for l in &labels {
            self.set_value(1, Vec::new(), l, d.image_of(l)?)?;
        }
        Ok(())
    }

    pub fn value(&self, word: &[String], module_label: &str) -> GradedElement {
        self.maps
            .get(&(word.len() + 1))
            .and_then(|c| c.get(&(word.to_vec(), module_label.to_string())))
            .cloned()
            .unwrap_or_default()
    }

    /// Linear extension in the module slot.
    pub fn apply(&self, word: &[String], elt: &GradedElement) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for (l, c) in elt.terms() {
            let v = self.value(word, l);
            if !v.is_zero() {
                out = out.add(&v.scaled(c)?)?;
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.maps.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &(Word, String), &GradedElement)> {
        self.maps.iter().flat_map(|(&n, c)| c.iter().map(move |(k, v)| (n, k, v)))
    }

    /// `λ¹` as a graded map.
    pub fn differential(&self) -> Result<GradedMap> {
        let mut images = BTreeMap::new();
        for l in self.module.labels() {
            let img = self.value(&[], l);
            if !img.is_zero() {
                images.insert(l.clone(), img);
            }
        }
        GradedMap::from_images(self.module.clone(), self.target.clone(), self.degree, images)
    }
}

/// Adjoints of a morphism of representations `(M, λ_M) -> (N, λ_N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMorphismFamily {
    pub source: AdjointFamily,
    pub target: AdjointFamily,
    pub maps: AdjointFamily,
}

impl RepMorphismFamily {
    pub fn new(
        source: AdjointFamily,
        target: AdjointFamily,
        maps: AdjointFamily,
    ) -> Result<RepMorphismFamily> {
        if maps.degree != 0 {
            return Err(Error::DegreeMismatch { expected: 0, got: maps.degree });
        }
        if maps.module != source.module || maps.target != target.module {
            return Err(Error::TypeMismatch("morphism endpoints do not match".into()));
        }
        if maps.source != source.source || maps.source != target.source {
            return Err(Error::TypeMismatch("all families must share the algebra source".into()));
        }
        Ok(RepMorphismFamily { source, target, maps })
    }
}

fn element_residual(e: &GradedElement) -> Vec<ResidualTerm> {
    e.terms()
        .map(|(l, c)| ResidualTerm { word: vec![l.clone()], coeff: c.to_string() })
        .collect()
}

/// One representation equation `E_n(w ⊗ m)`: insertions of the structure
/// into the word followed by `λ`, plus the `λ ∘ (1 ⊗ λ)` staircase, plus
/// an optional curvature term `(s^{-1}h)(w)·m`.
fn rep_equation(
    lambda: &AdjointFamily,
    nu: &Cochain,
    curvature: Option<&crate::cochain::CurvatureMap>,
    w: &[String],
    m: &str,
) -> Result<GradedElement> {
    let n = w.len();
    let mut acc = GradedElement::zero();
    // insertions of ν^a at offset j, then λ^{n-a+2}
    for a in nu.arities().collect::<Vec<_>>() {
        if a > n {
            continue;
        }
        for j in 0..=(n - a) {
            let inner = nu.eval_word(&w[j..j + a])?;
            if inner.is_zero() {
                continue;
            }
            let prefix = word_degree(&lambda.source, &w[..j], 1)?;
            let sign = nu.degree * prefix;
            for (l, c) in inner.terms() {
                let mut word: Word = w[..j].to_vec();
                word.push(l.clone());
                word.extend_from_slice(&w[j + a..]);
                let v = lambda.value(&word, m);
                if !v.is_zero() {
                    acc = acc.add(&v.scaled(&c.clone().signed(sign))?)?;
                }
            }
        }
    }
    // staircase: λ^{i+1}(w_{<i} ⊗ λ^{n-i+1}(w_{>=i} ⊗ m))
    for i in 0..=n {
        let prefix = word_degree(&lambda.source, &w[..i], 1)?;
        let sign = lambda.degree * prefix;
        let inner = lambda.value(&w[i..], m);
        if inner.is_zero() {
            continue;
        }
        let outer = lambda.apply(&w[..i], &inner)?;
        if !outer.is_zero() {
            acc = acc.add(&outer.signed(sign))?;
        }
    }
    if let Some(xi) = curvature {
        let v = xi.eval_word(w)?;
        if !v.is_zero() {
            let md = lambda.module.degree_of(m)?;
            acc = acc.add(&GradedElement::single(m.to_string(), v, md))?;
        }
    }
    Ok(acc)
}

fn word_with_module(w: &[String], m: &str) -> Vec<String> {
    let mut out = w.to_vec();
    out.push(m.to_string());
    out
}

/// Representation check for a nonunital structure: empty iff the two
/// equation families vanish on every `(word, module basis)` pair with
/// word arity `<= N - 1`. At arity 0 this says `(λ¹)² = 0`.
pub fn check_representation(lambda: &AdjointFamily, nu: &Cochain) -> Result<Report> {
    if lambda.source != nu.source || nu.source != nu.target {
        return Err(Error::TypeMismatch("family and structure sources differ".into()));
    }
    if lambda.degree != -1 {
        return Err(Error::DegreeMismatch { expected: -1, got: lambda.degree });
    }
    let mut report = Report::new(lambda.max_arity);
    for n in 0..lambda.max_arity {
        for w in all_words(&lambda.source, n) {
            for m in lambda.module.labels() {
                let res = rep_equation(lambda, nu, None, &w, m)?;
                if !res.is_zero() {
                    report.push(Violation {
                        arity: n,
                        word: word_with_module(&w, m),
                        clause: "representation".into(),
                        residual: element_residual(&res),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Strictly unital representation check over `Ā`: the nonunital families
/// with `μ̄`, plus the curvature term `(s^{-1}h^n ⊗ 1)`.
pub fn check_su_representation(
    lambda_bar: &AdjointFamily,
    alg: &SplitUnitAlgebra,
) -> Result<Report> {
    if lambda_bar.source != alg.carrier.reduced {
        return Err(Error::TypeMismatch("family must live over the reduced module".into()));
    }
    if lambda_bar.degree != -1 {
        return Err(Error::DegreeMismatch { expected: -1, got: lambda_bar.degree });
    }
    let s_inv_h = crate::cochain::CurvatureMap::desuspend_cochain(&alg.h, false)?;
    let mut report = Report::new(lambda_bar.max_arity);
    for n in 0..lambda_bar.max_arity {
        for w in all_words(&lambda_bar.source, n) {
            for m in lambda_bar.module.labels() {
                let res = rep_equation(lambda_bar, &alg.mu_bar, Some(&s_inv_h), &w, m)?;
                if !res.is_zero() {
                    report.push(Violation {
                        arity: n,
                        word: word_with_module(&w, m),
                        clause: "su_representation".into(),
                        residual: element_residual(&res),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Morphism-of-representations check. The same function covers the
/// strictly unital variant: pass families over `Ā` and the reduced
/// structure `μ̄` (the unit contributions cancel identically there).
pub fn check_rep_morphism(fam: &RepMorphismFamily, nu: &Cochain) -> Result<Report> {
    let g = &fam.maps;
    let lam_m = &fam.source;
    let lam_n = &fam.target;
    let mut report = Report::new(g.max_arity);
    for n in 0..g.max_arity {
        for w in all_words(&g.source, n) {
            for m in g.module.labels() {
                let mut acc = GradedElement::zero();
                // g ∘ (ν-insertions)
                for a in nu.arities().collect::<Vec<_>>() {
                    if a > n {
                        continue;
                    }
                    for j in 0..=(n - a) {
                        let inner = nu.eval_word(&w[j..j + a])?;
                        if inner.is_zero() {
                            continue;
                        }
                        let prefix = word_degree(&g.source, &w[..j], 1)?;
                        let sign = nu.degree * prefix;
                        for (l, c) in inner.terms() {
                            let mut word: Word = w[..j].to_vec();
                            word.push(l.clone());
                            word.extend_from_slice(&w[j + a..]);
                            let v = g.value(&word, m);
                            if !v.is_zero() {
                                acc = acc.add(&v.scaled(&c.clone().signed(sign))?)?;
                            }
                        }
                    }
                }
                // + g-staircase over λ_M (inner λ moves past the prefix)
                for i in 0..=n {
                    let prefix = word_degree(&g.source, &w[..i], 1)?;
                    let inner = lam_m.value(&w[i..], m);
                    if !inner.is_zero() {
                        let outer = g.apply(&w[..i], &inner)?;
                        acc = acc.add(&outer.signed(lam_m.degree * prefix))?;
                    }
                }
                // − λ_N-staircase over g (inner g has degree 0: no signs)
                for i in 0..=n {
                    let inner = g.value(&w[i..], m);
                    if !inner.is_zero() {
                        let outer = lam_n.apply(&w[..i], &inner)?;
                        acc = acc.sub(&outer)?;
                    }
                }
                if !acc.is_zero() {
                    report.push(Violation {
                        arity: n,
                        word: word_with_module(&w, m),
                        clause: "rep_morphism".into(),
                        residual: element_residual(&acc),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Star composition of counital `Hom`-valued families on adjoints:
/// `(a ⋆ b)^{n+1} = (-1)^{|α|} Σ_i a^i (1^{⊗(i-1)} ⊗ b^{n-i+2})`, where
/// `|α| = degree(a) + 1` is the cochain degree of the left factor and the
/// inner family pays the usual Koszul sign crossing the prefix.
pub fn star_compose(alpha: &AdjointFamily, beta: &AdjointFamily) -> Result<AdjointFamily> {
    if alpha.module != beta.target {
        return Err(Error::TypeMismatch("star factors do not compose".into()));
    }
    if alpha.source != beta.source {
        return Err(Error::TypeMismatch("star factors live over different algebras".into()));
    }
    if alpha.max_arity != beta.max_arity {
        return Err(Error::TruncationMismatch(alpha.max_arity, beta.max_arity));
    }
    let global = alpha.degree + 1;
    let mut out = AdjointFamily {
        ring: alpha.ring.clone(),
        source: alpha.source.clone(),
        module: beta.module.clone(),
        target: alpha.target.clone(),
        degree: alpha.degree + beta.degree,
        max_arity: alpha.max_arity,
        maps: BTreeMap::new(),
    };
    let module_labels: Vec<String> = out.module.labels().cloned().collect();
    for n in 0..out.max_arity {
        for w in all_words(&out.source, n) {
            for m in &module_labels {
                let mut acc = GradedElement::zero();
                for i in 0..=n {
                    let prefix = word_degree(&out.source, &w[..i], 1)?;
                    let inner = beta.value(&w[i..], m);
                    if inner.is_zero() {
                        continue;
                    }
                    let outer = alpha.apply(&w[..i], &inner)?;
                    acc = acc.add(&outer.signed(beta.degree * prefix))?;
                }
                out.set_value(n + 1, w.clone(), m, acc.signed(global))?;
            }
        }
    }
    Ok(out)
}

/// The unit of `⋆`-composition of representation morphisms. With the
/// printed global sign the two-sided unit is `-id_M`, not `+id_M`; the
/// identity family `+id_M` is still a valid morphism.
pub fn star_unit(ring: &RingSpec, source: &GradedModule, module: &GradedModule, max_arity: usize) -> AdjointFamily {
    let mut u = AdjointFamily::morphism_family(
        ring.clone(),
        source.clone(),
        module.clone(),
        module.clone(),
        max_arity,
    );
    let minus_id = GradedMap::identity(module, ring).negated();
    u.set_differential(&minus_id).expect("degree 0 identity");
    u
}

/// Cochain into `Hom(M,N)` with a counital arity-0 part, stored pointwise
/// (the Hom module itself is never materialized). `comps[n][w]` is the map
/// `s^{-1} p^n(w): M -> N` of degree `|w| + degree - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndValuedCochain {
    pub ring: RingSpec,
    pub source: GradedModule,
    pub dom: GradedModule,
    pub cod: GradedModule,
    pub degree: i64,
    pub max_arity: usize,
    comps: BTreeMap<usize, BTreeMap<Word, GradedMap>>,
}

impl EndValuedCochain {
    pub fn new(
        ring: RingSpec,
        source: GradedModule,
        dom: GradedModule,
        cod: GradedModule,
        degree: i64,
        max_arity: usize,
    ) -> EndValuedCochain {
        EndValuedCochain { ring, source, dom, cod, degree, max_arity, comps: BTreeMap::new() }
    }

    pub fn set_component(&mut self, arity: usize, word: Word, map: GradedMap) -> Result<()> {
        if word.len() != arity {
            return Err(Error::ArityMismatch { expected: arity, got: word.len() });
        }
        let wd = word_degree(&self.source, &word, 1)?;
        if map.degree != wd + self.degree - 1 {
            return Err(Error::DegreeMismatch { expected: wd + self.degree - 1, got: map.degree });
        }
        if map.is_zero() {
            if let Some(c) = self.comps.get_mut(&arity) {
                c.remove(&word);
                if c.is_empty() {
                    self.comps.remove(&arity);
                }
            }
            return Ok(());
        }
        self.comps.entry(arity).or_default().insert(word, map);
        Ok(())
    }

    pub fn component(&self, word: &[String]) -> Option<&GradedMap> {
        self.comps.get(&word.len()).and_then(|c| c.get(word))
    }

    /// The adjoint family `λ^{n+1} = ev(s^{-1} p^n ⊗ 1)`: evaluate the
    /// suspended component, then apply. No sign arises — the right-hand
    /// identity factor has degree 0 and `ev` is applied to the whole.
    pub fn to_adjoints(&self) -> Result<AdjointFamily> {
        let mut fam = AdjointFamily {
            ring: self.ring.clone(),
            source: self.source.clone(),
            module: self.dom.clone(),
            target: self.cod.clone(),
            degree: self.degree - 1,
            max_arity: self.max_arity,
            maps: BTreeMap::new(),
        };
        for (&a, comp) in &self.comps {
            for (w, map) in comp {
                for m in self.dom.labels() {
                    fam.set_value(a + 1, w.clone(), m, map.image_of(m)?)?;
                }
            }
        }
        Ok(fam)
    }

    /// Inverse of [`to_adjoints`](Self::to_adjoints).
    pub fn from_adjoints(fam: &AdjointFamily) -> Result<EndValuedCochain> {
        let mut out = EndValuedCochain::new(
            fam.ring.clone(),
            fam.source.clone(),
            fam.module.clone(),
            fam.target.clone(),
            fam.degree + 1,
            fam.max_arity,
        );
        let mut by_word: BTreeMap<Word, BTreeMap<String, GradedElement>> = BTreeMap::new();
        for (_, (w, m), v) in fam.entries() {
            by_word.entry(w.clone()).or_default().insert(m.clone(), v.clone());
        }
        for (w, images) in by_word {
            let wd = word_degree(&fam.source, &w, 1)?;
            let map = GradedMap::from_images(
                fam.module.clone(),
                fam.target.clone(),
                wd + out.degree - 1,
                images,
            )?;
            let arity = w.len();
            out.set_component(arity, w, map)?;
        }
        Ok(out)
    }
}

/// System of endomorphisms `σ^n` of degree `2n - 1` with
/// `(σ⁰)² = 0`, `σ¹σ⁰ + σ⁰σ¹ = -f·id`, and `Σ_i σ^{n-i} σ^i = 0` for
/// `n >= 2`: exactly the strictly unital representations of the Koszul
/// complex on `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShamashSystem {
    pub f: Scalar,
    pub module: GradedModule,
    pub max_index: usize,
    sigma: BTreeMap<usize, GradedMap>,
}

impl ShamashSystem {
    /// Validating constructor; `sigma[n]` must have degree `2n - 1`. The
    /// `(σ⁰)² = 0` relation is the complex axiom on `δ_M = σ⁰`.
    pub fn new(
        f: Scalar,
        module: GradedModule,
        sigma: BTreeMap<usize, GradedMap>,
        max_index: usize,
    ) -> Result<ShamashSystem> {
        let sys = ShamashSystem::new_unchecked(f, module, sigma, max_index)?;
        let violations = sys.relation_violations()?;
        if let Some((n, _)) = violations.first() {
            return Err(Error::Invalid(format!("Shamash relation fails at n = {n}")));
        }
        Ok(sys)
    }

    pub fn new_unchecked(
        f: Scalar,
        module: GradedModule,
        sigma: BTreeMap<usize, GradedMap>,
        max_index: usize,
    ) -> Result<ShamashSystem> {
        for (&n, map) in &sigma {
            if n > max_index {
                return Err(Error::ArityOutOfRange(n, max_index));
            }
            if map.degree != 2 * n as i64 - 1 {
                return Err(Error::DegreeMismatch { expected: 2 * n as i64 - 1, got: map.degree });
            }
            if map.source != module || map.target != module {
                return Err(Error::TypeMismatch("σ must be an endomorphism of M".into()));
            }
        }
        Ok(ShamashSystem { f, module, max_index, sigma })
    }

    pub fn sigma(&self, n: usize) -> GradedMap {
        self.sigma
            .get(&n)
            .cloned()
            .unwrap_or_else(|| GradedMap::zero(self.module.clone(), self.module.clone(), 2 * n as i64 - 1))
    }

    pub fn sigmas(&self) -> &BTreeMap<usize, GradedMap> {
        &self.sigma
    }

    /// Returns `(n, residual map)` for every failed convolution relation
    /// `Σ_{i=0}^n σ^{n-i} σ^i = -f·id·[n = 1]`, checked for all `n` up to
    /// `2·max_index` (beyond the stored indices the maps are zero).
    pub fn relation_violations(&self) -> Result<Vec<(usize, GradedMap)>> {
        let mut out = Vec::new();
        for n in 0..=(2 * self.max_index) {
            let mut acc = GradedMap::zero(self.module.clone(), self.module.clone(), 2 * n as i64 - 2);
            for i in 0..=n {
                if self.sigma.contains_key(&(n - i)) && self.sigma.contains_key(&i) {
                    acc = acc.add(&self.sigma(n - i).compose(&self.sigma(i))?)?;
                }
            }
            if n == 1 {
                let f_id = GradedMap::identity(&self.module, &self.f.ring()).scaled(&self.f)?;
                acc = acc.add(&f_id)?;
            }
            if !acc.is_zero() {
                out.push((n, acc));
            }
        }
        Ok(out)
    }

    /// The adjoint family over the Koszul carrier: `σ^n = λ̄^{n+1}` through
    /// `M ≅ k[e]^{⊗n} ⊗ M` (no sign: the word spans a rank-one module in
    /// even degree).
    pub fn to_adjoint_family(&self, reduced: &GradedModule) -> Result<AdjointFamily> {
        let e = reduced
            .labels()
            .next()
            .ok_or_else(|| Error::TypeMismatch("Koszul carrier has empty reduced module".into()))?
            .clone();
        let mut fam = AdjointFamily::new(
            self.f.ring(),
            reduced.clone(),
            self.module.clone(),
            self.max_index + 1,
        );
        for (&n, map) in &self.sigma {
            let word: Word = vec![e.clone(); n];
            for m in self.module.labels() {
                fam.set_value(n + 1, word.clone(), m, map.image_of(m)?)?;
            }
        }
        Ok(fam)
    }

    /// Inverse direction: reads `σ^n` off an adjoint family over the
    /// rank-one reduced module.
    pub fn from_adjoint_family(f: Scalar, fam: &AdjointFamily) -> Result<ShamashSystem> {
        let e = fam
            .source
            .labels()
            .next()
            .ok_or_else(|| Error::TypeMismatch("Koszul carrier has empty reduced module".into()))?
            .clone();
        let mut sigma = BTreeMap::new();
        for n in 0..fam.max_arity {
            let word: Word = vec![e.clone(); n];
            let mut images = BTreeMap::new();
            for m in fam.module.labels() {
                let v = fam.value(&word, m);
                if !v.is_zero() {
                    images.insert(m.clone(), v);
                }
            }
            if !images.is_empty() {
                let map = GradedMap::from_images(
                    fam.module.clone(),
                    fam.module.clone(),
                    2 * n as i64 - 1,
                    images,
                )?;
                sigma.insert(n, map);
            }
        }
        ShamashSystem::new_unchecked(f, fam.module.clone(), sigma, fam.max_arity.saturating_sub(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::unital::koszul_build;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn ring() -> RingSpec {
        RingSpec::Integers
    }

    fn mod_xy() -> GradedModule {
        GradedModule::from_labels(&[("x", 0), ("y", 1)]).unwrap()
    }

    /// The f = 6 fixture: σ⁰(y) = 2x, σ¹(x) = -3y, everything else zero.
    fn shamash_fixture() -> ShamashSystem {
        let m = mod_xy();
        let s0 = GradedMap::from_entries(
            m.clone(),
            m.clone(),
            -1,
            &[("y".into(), "x".into(), ring().from_i64(2))],
        )
        .unwrap();
        let s1 = GradedMap::from_entries(
            m.clone(),
            m.clone(),
            1,
            &[("x".into(), "y".into(), ring().from_i64(-3))],
        )
        .unwrap();
        let mut sigma = BTreeMap::new();
        sigma.insert(0, s0);
        sigma.insert(1, s1);
        ShamashSystem::new(ring().from_i64(6), m, sigma, 3).unwrap()
    }

    #[test]
    fn shamash_fixture_relations_verified_by_hand() {
        // pre-build oracle: σ¹σ⁰ + σ⁰σ¹ = -6·id on both basis elements,
        // and all higher convolutions vanish
        let sys = shamash_fixture();
        assert!(sys.relation_violations().unwrap().is_empty());
        let s0 = sys.sigma(0);
        let s1 = sys.sigma(1);
        let anti = s1.compose(&s0).unwrap().add(&s0.compose(&s1).unwrap()).unwrap();
        let minus_six = GradedMap::identity(&sys.module, &ring())
            .scaled(&ring().from_i64(-6))
            .unwrap();
        assert_eq!(anti, minus_six);
        // zero system over f = 0 is valid
        let zero =
            ShamashSystem::new(ring().zero(), mod_xy(), BTreeMap::new(), 3).unwrap();
        assert!(zero.relation_violations().unwrap().is_empty());
    }

    #[test]
    fn shamash_fixture_is_su_representation() {
        let sys = shamash_fixture();
        let alg = koszul_build(&ring().from_i64(6), 4).unwrap();
        let fam = sys.to_adjoint_family(&alg.carrier.reduced).unwrap();
        assert!(check_su_representation(&fam, &alg).unwrap().is_empty());
        // perturbing σ⁰ by one entry produces a violation at family index 1
        let mut bad_sigma = sys.sigmas().clone();
        bad_sigma.insert(
            0,
            GradedMap::from_entries(
                sys.module.clone(),
                sys.module.clone(),
                -1,
                &[("y".into(), "x".into(), ring().from_i64(3))],
            )
            .unwrap(),
        );
        let bad = ShamashSystem::new_unchecked(ring().from_i64(6), sys.module.clone(), bad_sigma, 3)
            .unwrap();
        let bad_fam = bad.to_adjoint_family(&alg.carrier.reduced).unwrap();
        let report = check_su_representation(&bad_fam, &alg).unwrap();
        assert!(!report.is_empty());
        assert!(report.arities().contains(&1));
    }

    #[test]
    fn augmented_algebra_reduces_to_nonunital_rep() {
        // h = 0: the curvature term drops out, so a nonunital
        // representation of (Ā, μ̄) is exactly a strictly unital one
        let alg = koszul_build(&ring().zero(), 4).unwrap();
        assert!(alg.is_augmented());
        let m = mod_xy();
        let mut rng = StdRng::seed_from_u64(211);
        for i in 0..10 {
            let fam = gen::random_adjoint_family(
                &mut rng,
                &ring(),
                &alg.carrier.reduced,
                &m,
                4,
                0.5,
                i % 2 == 0,
            );
            let su = check_su_representation(&fam, &alg).unwrap().is_empty();
            let nonunital = check_representation(&fam, &alg.mu_bar).unwrap().is_empty();
            assert_eq!(su, nonunital);
        }
        // and the zero action with a genuine differential passes outright
        let mut lam = AdjointFamily::new(ring(), alg.carrier.reduced.clone(), m.clone(), 4);
        lam.set_differential(&gen::random_differential(&mut rng, &ring(), &m)).unwrap();
        assert!(check_su_representation(&lam, &alg).unwrap().is_empty());
    }

    #[test]
    fn shamash_relations_iff_su_check() {
        // dual-route equivalence on random candidates
        let alg = koszul_build(&ring().from_i64(6), 4).unwrap();
        let m = mod_xy();
        let mut rng = StdRng::seed_from_u64(107);
        for i in 0..30 {
            let mut sigma = BTreeMap::new();
            for n in 0..=2usize {
                let map = gen::random_graded_map(&mut rng, &ring(), &m, &m, 2 * n as i64 - 1, 0.6);
                if !map.is_zero() {
                    sigma.insert(n, map);
                }
            }
            let sys =
                ShamashSystem::new_unchecked(ring().from_i64(6), m.clone(), sigma, 3).unwrap();
            let relations_ok = sys.relation_violations().unwrap().is_empty();
            let fam = sys.to_adjoint_family(&alg.carrier.reduced).unwrap();
            let check_ok = check_su_representation(&fam, &alg).unwrap().is_empty();
            assert_eq!(relations_ok, check_ok, "candidate {i}");
        }
    }

    #[test]
    fn shamash_round_trip() {
        let sys = shamash_fixture();
        let alg = koszul_build(&ring().from_i64(6), 4).unwrap();
        let fam = sys.to_adjoint_family(&alg.carrier.reduced).unwrap();
        let back = ShamashSystem::from_adjoint_family(ring().from_i64(6), &fam).unwrap();
        assert_eq!(back.sigmas(), sys.sigmas());
    }

    #[test]
    fn dg_module_is_a_representation() {
        // A a dg-algebra, M a complex with the zero action: passes
        let a = GradedModule::from_labels(&[("u", 0), ("v", 1)]).unwrap();
        let m = mod_xy();
        let mut rng = StdRng::seed_from_u64(109);
        let nu = gen::random_dg_structure(&mut rng, &ring(), &a, 3);
        let mut lam = AdjointFamily::new(ring(), a.clone(), m.clone(), 3);
        lam.set_differential(&gen::random_differential(&mut rng, &ring(), &m)).unwrap();
        assert!(check_representation(&lam, &nu).unwrap().is_empty());
        // a family whose λ² is not a chain map over a structure with
        // ν¹[v] = [u]: the staircase leaves λ¹(λ²([v]⊗x)) = λ¹(y) = x
        let mut nu1 = Cochain::zero(ring(), a.clone(), a.clone(), -1, 3);
        nu1.set_component(1, vec!["v".into()], GradedElement::single("u".into(), ring().one(), 1))
            .unwrap();
        let mut bad = AdjointFamily::new(ring(), a.clone(), m.clone(), 3);
        let d = GradedMap::from_entries(
            m.clone(),
            m.clone(),
            -1,
            &[("y".into(), "x".into(), ring().one())],
        )
        .unwrap();
        bad.set_differential(&d).unwrap();
        bad.set_value(
            2,
            vec!["v".into()],
            "x",
            GradedElement::single("y".into(), ring().one(), 1),
        )
        .unwrap();
        let report = check_representation(&bad, &nu1).unwrap();
        assert!(!report.is_empty());
        assert!(report.arities().contains(&1));
    }

    #[test]
    fn square_nonzero_differential_flagged_at_arity_zero() {
        let a = GradedModule::from_labels(&[("u", 0)]).unwrap();
        let m = GradedModule::from_labels(&[("p", 0), ("q", 1), ("r", 2)]).unwrap();
        let nu = Cochain::zero(ring(), a.clone(), a.clone(), -1, 3);
        let d = GradedMap::from_entries(
            m.clone(),
            m.clone(),
            -1,
            &[
                ("r".into(), "q".into(), ring().one()),
                ("q".into(), "p".into(), ring().one()),
            ],
        )
        .unwrap();
        let mut lam = AdjointFamily::new(ring(), a, m, 3);
        lam.set_differential(&d).unwrap();
        let report = check_representation(&lam, &nu).unwrap();
        assert!(!report.is_empty());
        assert!(report.arities().contains(&0));
    }

    #[test]
    fn star_unit_is_two_sided() {
        let a = GradedModule::from_labels(&[("u", 0), ("v", 1)]).unwrap();
        let m = mod_xy();
        let n_mod = GradedModule::from_labels(&[("z", 0), ("w", 1)]).unwrap();
        let mut rng = StdRng::seed_from_u64(113);
        // a random degree-0 morphism family α: M -> N
        let mut alpha = AdjointFamily::morphism_family(ring(), a.clone(), m.clone(), n_mod.clone(), 3);
        for n in 1..=3usize {
            for w in all_words(&a, n - 1) {
                for ml in m.labels() {
                    let wd = word_degree(&a, &w, 1).unwrap();
                    let md = m.degree_of(ml).unwrap();
                    let img = gen::random_element(&mut rng, &ring(), &n_mod, wd + md, 0.7);
                    alpha.set_value(n, w.clone(), ml, img).unwrap();
                }
            }
        }
        let unit_m = star_unit(&ring(), &a, &m, 3);
        let unit_n = star_unit(&ring(), &a, &n_mod, 3);
        assert_eq!(star_compose(&alpha, &unit_m).unwrap(), alpha);
        assert_eq!(star_compose(&unit_n, &alpha).unwrap(), alpha);
    }

    #[test]
    fn star_arity_zero_collapse() {
        // both factors arity-0: (α⋆β)¹ = -α¹∘β¹ for degree-0 families
        // (the γ-sign (-1)^{|α⁰|} with |α⁰| = 1)
        let a = GradedModule::from_labels(&[("u", 0)]).unwrap();
        let m = mod_xy();
        let mut alpha = AdjointFamily::morphism_family(ring(), a.clone(), m.clone(), m.clone(), 3);
        let f = GradedMap::from_entries(
            m.clone(),
            m.clone(),
            0,
            &[("x".into(), "x".into(), ring().from_i64(2)), ("y".into(), "y".into(), ring().from_i64(2))],
        )
        .unwrap();
        alpha.set_differential(&f).unwrap();
        let mut beta = AdjointFamily::morphism_family(ring(), a.clone(), m.clone(), m.clone(), 3);
        let g = GradedMap::from_entries(
            m.clone(),
            m.clone(),
            0,
            &[("x".into(), "x".into(), ring().from_i64(3)), ("y".into(), "y".into(), ring().from_i64(5))],
        )
        .unwrap();
        beta.set_differential(&g).unwrap();
        let comp = star_compose(&alpha, &beta).unwrap();
        let expected = f.compose(&g).unwrap().negated();
        assert_eq!(comp.differential().unwrap(), expected);
    }

    #[test]
    fn morphism_checks_and_closure() {
        let a = GradedModule::from_labels(&[("u", 0), ("v", 1)]).unwrap();
        let m = mod_xy();
        let mut rng = StdRng::seed_from_u64(127);
        let nu = gen::random_dg_structure(&mut rng, &ring(), &a, 3);
        let mut lam = AdjointFamily::new(ring(), a.clone(), m.clone(), 3);
        lam.set_differential(&gen::random_differential(&mut rng, &ring(), &m)).unwrap();
        assert!(check_representation(&lam, &nu).unwrap().is_empty());
        // identity family is a morphism (any scalar multiple of id works)
        let mut id_fam = AdjointFamily::morphism_family(ring(), a.clone(), m.clone(), m.clone(), 3);
        id_fam.set_differential(&GradedMap::identity(&m, &ring())).unwrap();
        let fam = RepMorphismFamily::new(lam.clone(), lam.clone(), id_fam).unwrap();
        assert!(check_rep_morphism(&fam, &nu).unwrap().is_empty());
        // zero family is a morphism
        let zero_fam = AdjointFamily::morphism_family(ring(), a.clone(), m.clone(), m.clone(), 3);
        let fam0 = RepMorphismFamily::new(lam.clone(), lam.clone(), zero_fam).unwrap();
        assert!(check_rep_morphism(&fam0, &nu).unwrap().is_empty());
        // composition of two valid morphisms is a valid morphism
        let unit = star_unit(&ring(), &a, &m, 3);
        let composed = star_compose(&unit, &fam.maps).unwrap();
        let famc = RepMorphismFamily::new(lam.clone(), lam.clone(), composed).unwrap();
        assert!(check_rep_morphism(&famc, &nu).unwrap().is_empty());
        // a chain map failing equivariance: scale action only on one side
        let mut skew = AdjointFamily::morphism_family(ring(), a.clone(), m.clone(), m.clone(), 3);
        skew.set_differential(&GradedMap::identity(&m, &ring())).unwrap();
        let mut lam2 = lam.clone();
        // give the target representation an extra action entry
        lam2.set_value(
            2,
            vec!["v".into()],
            "x",
            GradedElement::single("y".into(), ring().one(), 1),
        )
        .unwrap();
        if check_representation(&lam2, &nu).unwrap().is_empty() {
            let fam2 = RepMorphismFamily::new(lam.clone(), lam2, skew).unwrap();
            let report = check_rep_morphism(&fam2, &nu).unwrap();
            assert!(!report.is_empty());
            assert!(report.arities().contains(&1));
        }
    }

    #[test]
    fn adjoint_round_trip() {
        let a = GradedModule::from_labels(&[("u", 0), ("v", 1)]).unwrap();
        let m = mod_xy();
        let mut rng = StdRng::seed_from_u64(131);
        for degree in [-1i64, 0] {
            let fam = if degree == -1 {
                gen::random_adjoint_family(&mut rng, &ring(), &a, &m, 3, 0.6, true)
            } else {
                let mut f = AdjointFamily::morphism_family(ring(), a.clone(), m.clone(), m.clone(), 3);
                f.set_differential(&GradedMap::identity(&m, &ring())).unwrap();
                f
            };
            let p = EndValuedCochain::from_adjoints(&fam).unwrap();
            let back = p.to_adjoints().unwrap();
            assert_eq!(back, fam);
            assert_eq!(p.degree, fam.degree + 1);
        }
    }
}
