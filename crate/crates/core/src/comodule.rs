//! Cofree (curved) dg-comodules over counital bar constructions, the
//! correspondence with representations, and matrix-factorization
//! extraction from height-one Shamash systems.
//!
//! A cofree comodule is `C ⊗ M` with comultiplication `Δ_C ⊗ 1`; its
//! coderivations over a fixed coderivation `d` of `C` biject with reduced
//! maps `C ⊗ M -> M` (adjoint families) via
//! `φ^{-1}(m) = d ⊗ 1 + (1 ⊗ m)(Δ_C ⊗ 1)`.

use std::collections::BTreeMap;

use crate::cochain::{phi_inv_apply, Cochain, CurvatureMap};
use crate::error::{Error, Result};
use crate::graded::{GradedMap, GradedModule};
use crate::rep::{AdjointFamily, ShamashSystem};
use crate::report::{Report, ResidualTerm, Violation};
use crate::scalar::{RingSpec, Scalar};
use crate::tensor::{all_words, word_degree, Word};
use crate::unital::CurvedCoalgebra;

/// Sparse element of `C ⊗ M`: words (possibly empty — the coaugmentation
/// generator) paired with module basis labels.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComoduleElement {
    terms: BTreeMap<(Word, String), Scalar>,
}

impl ComoduleElement {
    pub fn zero() -> ComoduleElement {
        ComoduleElement::default()
    }

    pub fn single(word: Word, label: String, coeff: Scalar) -> ComoduleElement {
        let mut e = ComoduleElement::zero();
        e.add_term(word, label, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, String), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, word: Word, label: String, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (word, label);
        let updated = match self.terms.get(&key) {
            Some(c) => c.checked_add(&coeff).expect("coherent rings"),
            None => coeff,
        };
        if updated.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, updated);
        }
    }

    pub fn add(&self, other: &ComoduleElement) -> ComoduleElement {
        let mut out = self.clone();
        for ((w, l), c) in &other.terms {
            out.add_term(w.clone(), l.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, factor: &Scalar) -> ComoduleElement {
        let mut out = ComoduleElement::zero();
        for ((w, l), c) in &self.terms {
            out.add_term(w.clone(), l.clone(), c.checked_mul(factor).expect("coherent rings"));
        }
        out
    }

    pub fn negated(&self) -> ComoduleElement {
        ComoduleElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.negated())).collect(),
        }
    }

    pub fn sub(&self, other: &ComoduleElement) -> ComoduleElement {
        self.add(&other.negated())
    }

    fn residual(&self) -> Vec<ResidualTerm> {
        self.terms
            .iter()
            .map(|((w, l), c)| {
                let mut word = w.clone();
                word.push(l.clone());
                ResidualTerm { word, coeff: c.to_string() }
            })
            .collect()
    }
}

/// The cofree comodule `Baru ⊗ M` over a counital bar construction: the
/// coalgebra side is a structure cochain (`ν` or `μ̄`) whose coderivation
/// is `Φ^{-1}` extended by zero on the coaugmentation generator, plus an
/// optional curvature for the curved case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofreeComodule {
    pub ring: RingSpec,
    pub structure: Cochain,
    pub xi: Option<CurvatureMap>,
    pub fiber: GradedModule,
    pub max_arity: usize,
}

impl CofreeComodule {
    pub fn over_bar(structure: Cochain, fiber: GradedModule) -> Result<CofreeComodule> {
        if structure.source != structure.target {
            return Err(Error::TypeMismatch("bar structure must be endo-typed".into()));
        }
        Ok(CofreeComodule {
            ring: structure.ring.clone(),
            max_arity: structure.max_arity,
            structure,
            xi: None,
            fiber,
        })
    }

    pub fn over_curved_bar(bar: &CurvedCoalgebra, fiber: GradedModule) -> CofreeComodule {
        CofreeComodule {
            ring: bar.mu_bar.ring.clone(),
            structure: bar.mu_bar.clone(),
            xi: Some(bar.xi.clone()),
            fiber,
            max_arity: bar.max_arity,
        }
    }

    pub fn coalgebra_module(&self) -> &GradedModule {
        &self.structure.source
    }

    /// `d(w)` on the coalgebra side; zero on the coaugmentation generator.
    pub fn d_coalgebra(&self, w: &[String]) -> Result<crate::cochain::TcoElement> {
        if w.is_empty() {
            return Ok(crate::cochain::TcoElement::zero());
        }
        phi_inv_apply(&self.structure, w)
    }

    /// `Δ_P(w ⊗ m) = Σ_{i=0}^{n} (w_{<i}) ⊗ (w_{>=i} ⊗ m)` as (prefix,
    /// suffix) splits; the fiber never participates in signs here.
    pub fn comult(&self, w: &[String]) -> Vec<(Word, Word)> {
        (0..=w.len()).map(|i| (w[..i].to_vec(), w[i..].to_vec())).collect()
    }
}

/// A coderivation of a cofree comodule presented by its reduced adjoint
/// family: `d_P = d ⊗ 1 + (1 ⊗ λ)(Δ_C ⊗ 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleCoderivation {
    pub comodule: CofreeComodule,
    pub reduced: AdjointFamily,
}

impl ComoduleCoderivation {
    pub fn new(comodule: CofreeComodule, reduced: AdjointFamily) -> Result<ComoduleCoderivation> {
        if reduced.source != *comodule.coalgebra_module() || reduced.module != comodule.fiber {
            return Err(Error::TypeMismatch("adjoint family does not match the comodule".into()));
        }
        if reduced.degree != -1 {
            return Err(Error::DegreeMismatch { expected: -1, got: reduced.degree });
        }
        Ok(ComoduleCoderivation { comodule, reduced })
    }

    /// Applies `d_P` to a basis element `(word, m)`.
    pub fn apply_basis(&self, word: &[String], m: &str) -> Result<ComoduleElement> {
        if word.len() + 1 > self.comodule.max_arity {
            return Err(Error::ArityOutOfRange(word.len(), self.comodule.max_arity - 1));
        }
        let mut out = ComoduleElement::zero();
        // d ⊗ 1 (no sign: the identity factor has degree 0)
        for (w2, c) in self.comodule.d_coalgebra(word)?.terms() {
            out.add_term(w2.clone(), m.to_string(), c.clone());
        }
        // (1 ⊗ λ)(Δ_C ⊗ 1): λ slides past the prefix
        for (pre, post) in self.comodule.comult(word) {
            let prefix = word_degree(self.comodule.coalgebra_module(), &pre, 1)?;
            let inner = self.reduced.value(&post, m);
            if inner.is_zero() {
                continue;
            }
            for (l, c) in inner.terms() {
                out.add_term(pre.clone(), l.clone(), c.clone().signed(self.reduced.degree * prefix));
            }
        }
        Ok(out)
    }

    pub fn apply(&self, elt: &ComoduleElement) -> Result<ComoduleElement> {
        let mut out = ComoduleElement::zero();
        for ((w, m), c) in elt.terms() {
            out = out.add(&self.apply_basis(w, m)?.scaled(c));
        }
        Ok(out)
    }

    /// `φ(d_P) = (ε ⊗ 1) d_P`: recovers the reduced adjoint family.
    pub fn corner(&self, word: &[String], m: &str) -> Result<crate::graded::GradedElement> {
        let full = self.apply_basis(word, m)?;
        let mut out = crate::graded::GradedElement::zero();
        for ((w, l), c) in full.terms() {
            if w.is_empty() {
                let d = self.comodule.fiber.degree_of(l)?;
                out.add_term(l.clone(), c.clone(), d)?;
            }
        }
        Ok(out)
    }
}

/// `L_ξ = (ξ ⊗ 1) Δ_P` on a basis element.
pub fn l_xi_apply(
    comodule: &CofreeComodule,
    xi: &CurvatureMap,
    word: &[String],
    m: &str,
) -> Result<ComoduleElement> {
    let mut out = ComoduleElement::zero();
    for (pre, post) in comodule.comult(word) {
        if pre.is_empty() {
            continue;
        }
        let v = xi.eval_word(&pre)?;
        if !v.is_zero() {
            out.add_term(post.clone(), m.to_string(), v);
        }
    }
    Ok(out)
}

fn check_square(
    coder: &ComoduleCoderivation,
    xi: Option<&CurvatureMap>,
    clause: &str,
) -> Result<Report> {
    let comodule = &coder.comodule;
    let mut report = Report::new(comodule.max_arity);
    for n in 0..comodule.max_arity {
        for w in all_words(comodule.coalgebra_module(), n) {
            for m in comodule.fiber.labels() {
                let once = coder.apply_basis(&w, m)?;
                let twice = coder.apply(&once)?;
                let expected = match xi {
                    Some(xi) => l_xi_apply(comodule, xi, &w, m)?,
                    None => ComoduleElement::zero(),
                };
                let residual = twice.sub(&expected);
                if !residual.is_zero() {
                    let mut word = w.clone();
                    word.push(m.clone());
                    report.push(Violation {
                        arity: n,
                        word,
                        clause: clause.into(),
                        residual: residual.residual(),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Uncurved comodule check: `d_P² = 0` on every basis element.
pub fn check_dg_comodule(coder: &ComoduleCoderivation) -> Result<Report> {
    check_square(coder, None, "d_squared_zero")
}

/// Curved comodule check: `d_P² = L_ξ` on every basis element.
pub fn check_curved_comodule(coder: &ComoduleCoderivation, xi: &CurvatureMap) -> Result<Report> {
    check_square(coder, Some(xi), "d_squared_equals_L_xi")
}

/// `ψ^{-1}(g) = (1 ⊗ g)Δ_P` for a degree-0 adjoint family `g`, applied to
/// a basis element (degree 0 means no Koszul signs).
pub fn psi_inv_comodule(
    comodule: &CofreeComodule,
    g: &AdjointFamily,
    word: &[String],
    m: &str,
) -> Result<ComoduleElement> {
    let mut out = ComoduleElement::zero();
    for (pre, post) in comodule.comult(word) {
        let inner = g.value(&post, m);
        if inner.is_zero() {
            continue;
        }
        for (l, c) in inner.terms() {
            out.add_term(pre.clone(), l.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Morphism check on the comodule side: `ψ^{-1}(g) ∘ d_M = d_N ∘ ψ^{-1}(g)`
/// on every basis element.
pub fn comodule_morphism_check(
    g: &AdjointFamily,
    coder_m: &ComoduleCoderivation,
    coder_n: &ComoduleCoderivation,
) -> Result<Report> {
    if g.degree != 0 {
        return Err(Error::DegreeMismatch { expected: 0, got: g.degree });
    }
    let comodule_m = &coder_m.comodule;
    let comodule_n = &coder_n.comodule;
    if g.module != comodule_m.fiber || g.target != comodule_n.fiber {
        return Err(Error::TypeMismatch("morphism endpoints do not match the comodules".into()));
    }
    let mut report = Report::new(comodule_m.max_arity);
    for n in 0..comodule_m.max_arity {
        for w in all_words(comodule_m.coalgebra_module(), n) {
            for m in comodule_m.fiber.labels() {
                // ψ^{-1}(g)(d_M(w ⊗ m))
                let mut lhs = ComoduleElement::zero();
                for ((w2, l), c) in coder_m.apply_basis(&w, m)?.terms() {
                    lhs = lhs.add(&psi_inv_comodule(comodule_m, g, w2, l)?.scaled(c));
                }
                // d_N(ψ^{-1}(g)(w ⊗ m))
                let mut rhs = ComoduleElement::zero();
                for ((w2, l), c) in psi_inv_comodule(comodule_m, g, &w, m)?.terms() {
                    rhs = rhs.add(&coder_n.apply_basis(w2, l)?.scaled(c));
                }
                let residual = lhs.sub(&rhs);
                if !residual.is_zero() {
                    let mut word = w.clone();
                    word.push(m.clone());
                    report.push(Violation {
                        arity: n,
                        word,
                        clause: "comodule_morphism".into(),
                        residual: residual.residual(),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// A matrix factorization of `f`: maps `φ: even -> odd` and
/// `ψ: odd -> even` with both composites equal to `f·id` exactly. The
/// modules carry the parity-collapsed grading (even labels in degree 0,
/// odd labels in degree 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFactorization {
    pub even: GradedModule,
    pub odd: GradedModule,
    pub phi: GradedMap,
    pub psi: GradedMap,
    pub f: Scalar,
}

/// Extracts the matrix factorization of `f` from a Shamash system with
/// `σ^n = 0` for `n >= 2`: split `M` by parity and restrict
/// `D = σ⁰ + σ¹`, negating the odd-to-even leg so both composites are
/// `+f·id`.
pub fn matrix_factorization(sys: &ShamashSystem) -> Result<MatrixFactorization> {
    for (&n, map) in sys.sigmas() {
        if n >= 2 && !map.is_zero() {
            return Err(Error::HigherSigmaNonzero(n));
        }
    }
    let ring = sys.f.ring();
    let mut even_labels = Vec::new();
    let mut odd_labels = Vec::new();
    for l in sys.module.labels() {
        if sys.module.degree_of(l)?.rem_euclid(2) == 0 {
            even_labels.push((l.clone(), 0));
        } else {
            odd_labels.push((l.clone(), 1));
        }
    }
    let even = GradedModule::from_labels(
        &even_labels.iter().map(|(l, d)| (l.as_str(), *d)).collect::<Vec<_>>(),
    )?;
    let odd = GradedModule::from_labels(
        &odd_labels.iter().map(|(l, d)| (l.as_str(), *d)).collect::<Vec<_>>(),
    )?;
    let legs = [sys.sigma(0), sys.sigma(1)];
    // σ⁰ + σ¹ is degree-inhomogeneous over M but parity-swapping, so it is
    // a single homogeneous map in the collapsed grading
    let collapse = |source: &GradedModule,
                    target: &GradedModule,
                    negate: bool|
     -> Result<GradedMap> {
        let mut entries = Vec::new();
        for l in source.labels() {
            for leg in &legs {
                let img = leg.image_of(l)?;
                for (tl, c) in img.terms() {
                    if !target.has_label(tl) {
                        return Err(Error::NotFactorizing(format!(
                            "σ⁰+σ¹ does not swap parity at {l} -> {tl}"
                        )));
                    }
                    entries.push((
                        l.clone(),
                        tl.clone(),
                        if negate { c.negated() } else { c.clone() },
                    ));
                }
            }
        }
        GradedMap::from_entries(
            source.clone(),
            target.clone(),
            if negate { -1 } else { 1 },
            &entries,
        )
    };
    let phi = collapse(&even, &odd, false)?;
    let psi = collapse(&odd, &even, true)?;
    let psi_phi = psi.compose(&phi)?;
    let phi_psi = phi.compose(&psi)?;
    let f_even = GradedMap::identity(&even, &ring).scaled(&sys.f)?;
    let f_odd = GradedMap::identity(&odd, &ring).scaled(&sys.f)?;
    if psi_phi != f_even {
        return Err(Error::NotFactorizing("ψφ != f·id on the even part".into()));
    }
    if phi_psi != f_odd {
        return Err(Error::NotFactorizing("φψ != f·id on the odd part".into()));
    }
    Ok(MatrixFactorization { even, odd, phi, psi, f: sys.f.clone() })
}
