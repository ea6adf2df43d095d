//! Strictly unital structures through split units.
//!
//! A split unit gives `A = Ā ⊕ k·1`, and every strictly unital element of
//! `Hoch(A,A)_{-1}` decomposes uniquely as `μ̄ + h + μ_su` with
//! `μ̄ ∈ Hoch(Ā,Ā)`, `h ∈ Hoch(Ā,k)`, and `μ_su` the trivial strictly
//! unital structure. Such an element is an A-infinity structure exactly
//! when `(μ̄+h)` is a Maurer-Cartan element of `(Hoch(Ā,A), [μ_su,-])`,
//! which is what [`mc_check_su`] tests — in squaring form, so no division
//! by two happens anywhere.
//!
//! The curved bar construction of a valid algebra is
//! `(Tco(ΠĀ), Φ^{-1}(μ̄), ξ = -s^{-1}h)` with `d² = ad ξ` and `ξ d = 0`.

use crate::cochain::{
    ad_xi_apply, functional_square, gerst_bracket, gerst_product, phi_inv_apply,
    psi_inv_apply_all, Cochain, CurvatureMap, TcoElement,
};
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedMap, GradedModule};
use crate::report::{Report, ResidualTerm, Violation};
use crate::scalar::{RingSpec, Scalar};
use crate::tensor::{all_words, ShiftedTensor, TensorElement};

/// A graded module with a split unit: a basis label of degree 0 spanning a
/// free rank-one summand, with the fixed splitting `A = Ā ⊕ k·1` realized
/// by inclusion and projection maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitUnitModule {
    pub ambient: GradedModule,
    pub unit_label: String,
    pub reduced: GradedModule,
    pub inclusion: GradedMap,
    pub projection: GradedMap,
}

impl SplitUnitModule {
    pub fn new(ring: &RingSpec, ambient: GradedModule, unit_label: &str) -> Result<SplitUnitModule> {
        if ambient.degree_of(unit_label)? != 0 {
            return Err(Error::TypeMismatch("the unit must sit in degree 0".into()));
        }
        let reduced = ambient.without_label(unit_label)?;
        let id_entries: Vec<(String, String, Scalar)> = reduced
            .labels()
            .map(|l| (l.clone(), l.clone(), ring.one()))
            .collect();
        let inclusion =
            GradedMap::from_entries(reduced.clone(), ambient.clone(), 0, &id_entries)?;
        let projection =
            GradedMap::from_entries(ambient.clone(), reduced.clone(), 0, &id_entries)?;
        Ok(SplitUnitModule {
            ambient,
            unit_label: unit_label.to_string(),
            reduced,
            inclusion,
            projection,
        })
    }

    pub fn is_reduced_label(&self, label: &str) -> bool {
        self.reduced.has_label(label)
    }

    /// The rank-one module `k·1` of the splitting.
    pub fn unit_module(&self) -> GradedModule {
        GradedModule::unit_module(&self.unit_label)
    }
}

/// The trivial strictly unital structure `μ_su`: zero except in arity 2,
/// where it realizes the three unit summands through the canonical shift
/// transports (`Πk ⊗ ΠĀ`, `ΠĀ ⊗ Πk`, and `Πk ⊗ Πk`, each landing in
/// `Π²(...)` and desuspended into `ΠA`). The resulting values are the
/// strict unit laws: `μ_su²[1|a] = [a]` and `μ_su²[a|1] = (-1)^{|a|}[a]`.
pub fn mu_su_build(
    ring: &RingSpec,
    carrier: &SplitUnitModule,
    max_arity: usize,
) -> Result<Cochain> {
    let ambient = &carrier.ambient;
    let unit = &carrier.unit_label;
    let unit_mod = carrier.unit_module();
    let mut out = Cochain::zero(
        ring.clone(),
        ambient.clone(),
        ambient.clone(),
        -1,
        max_arity,
    );

    // unit on the left (including the unit ⊗ unit summand):
    // Πk ⊗ ΠX -> Π(k ⊗ ΠX) = Π²X -> ΠX
    for a in ambient.labels() {
        let start = ShiftedTensor::new(
            vec![(unit_mod.clone(), 1), (ambient.clone(), 1)],
            TensorElement::single(vec![unit.clone(), a.clone()], ring.one()),
        );
        let moved = start.transport_out(0)?.contract_unit(0, unit)?;
        let coeff = moved
            .element
            .coeff(std::slice::from_ref(a))
            .cloned()
            .unwrap_or_else(|| ring.zero());
        let d = ambient.degree_of(a)? + 1;
        out.set_component(2, vec![unit.clone(), a.clone()], GradedElement::single(a.clone(), coeff, d))?;
    }

    // unit on the right: ΠX ⊗ Πk, with the suspension of the first factor
    // pulled out before the unit's, then pushed back in after contraction
    for a in carrier.reduced.labels() {
        let start = ShiftedTensor::new(
            vec![(ambient.clone(), 1), (unit_mod.clone(), 1)],
            TensorElement::single(vec![a.clone(), unit.clone()], ring.one()),
        );
        let moved = start
            .transport_out(0)?
            .transport_out(1)?
            .contract_unit(1, unit)?
            .transport_in(0)?;
        let coeff = moved
            .element
            .coeff(std::slice::from_ref(a))
            .cloned()
            .unwrap_or_else(|| ring.zero());
        let d = ambient.degree_of(a)? + 1;
        out.set_component(2, vec![a.clone(), unit.clone()], GradedElement::single(a.clone(), coeff, d))?;
    }

    Ok(out)
}

/// Verifies strict unitality of `ν` (unit laws at arity 2, vanishing on
/// unit-containing words at every other arity) and returns the unique
/// decomposition `ν = (μ̄ + h) + μ_su` as `(μ̄, h)` with `μ̄ ∈ Hoch(Ā,Ā)`
/// and `h ∈ Hoch(Ā,k)`.
pub fn decompose_strictly_unital(
    nu: &Cochain,
    carrier: &SplitUnitModule,
) -> Result<(Cochain, Cochain)> {
    let ambient = &carrier.ambient;
    let unit = &carrier.unit_label;
    if nu.source != *ambient || nu.target != *ambient {
        return Err(Error::TypeMismatch("structure does not live on the carrier".into()));
    }
    if nu.degree != -1 {
        return Err(Error::DegreeMismatch { expected: -1, got: nu.degree });
    }
    // unit laws: ν²[1|a] = [a], ν²[a|1] = (-1)^{|a|}[a]
    for a in ambient.labels() {
        let d = ambient.degree_of(a)? + 1;
        let expected = GradedElement::single(a.clone(), nu.ring.one(), d);
        if nu.eval_word(&[unit.clone(), a.clone()])? != expected {
            return Err(Error::NotStrictlyUnital { arity: 2, word: vec![unit.clone(), a.clone()] });
        }
        if a != unit {
            let expected_right = expected.signed(ambient.degree_of(a)?);
            if nu.eval_word(&[a.clone(), unit.clone()])? != expected_right {
                return Err(Error::NotStrictlyUnital {
                    arity: 2,
                    word: vec![a.clone(), unit.clone()],
                });
            }
        }
    }
    // every other arity kills unit-containing words
    for n in 1..=nu.max_arity {
        if n == 2 {
            continue;
        }
        for w in all_words(ambient, n) {
            if w.iter().any(|l| l == unit) && !nu.eval_word(&w)?.is_zero() {
                return Err(Error::NotStrictlyUnital { arity: n, word: w });
            }
        }
    }
    // μ = ν - μ_su restricted to Ā-words, split through A = Ā ⊕ k·1
    let mu_su = mu_su_build(&nu.ring, carrier, nu.max_arity)?;
    let mu = nu.sub(&mu_su)?;
    let mut reduced_mu = Cochain::zero(
        nu.ring.clone(),
        carrier.reduced.clone(),
        ambient.clone(),
        -1,
        nu.max_arity,
    );
    for n in 1..=nu.max_arity {
        for w in all_words(&carrier.reduced, n) {
            reduced_mu.set_component(n, w.clone(), mu.eval_word(&w)?)?;
        }
    }
    let is_reduced = |l: &str| l != unit.as_str();
    reduced_mu.split_target(&is_reduced, carrier.reduced.clone(), carrier.unit_module())
}

/// Assembles `ν = μ̄ + h + μ_su` back over the full carrier; exact inverse
/// of [`decompose_strictly_unital`].
pub fn assemble_strictly_unital(
    carrier: &SplitUnitModule,
    mu_bar: &Cochain,
    h: &Cochain,
) -> Result<Cochain> {
    let ambient = carrier.ambient.clone();
    let ext_mu = mu_bar.with_source(ambient.clone())?.with_target(ambient.clone())?;
    let ext_h = h.with_source(ambient.clone())?.with_target(ambient.clone())?;
    let mu_su = mu_su_build(&mu_bar.ring, carrier, mu_bar.max_arity)?;
    ext_mu.add(&ext_h)?.add(&mu_su)
}

fn element_residual(e: &GradedElement) -> Vec<ResidualTerm> {
    e.terms()
        .map(|(l, c)| ResidualTerm { word: vec![l.clone()], coeff: c.to_string() })
        .collect()
}

fn tco_residual(t: &TcoElement) -> Vec<ResidualTerm> {
    t.terms()
        .map(|(w, c)| ResidualTerm { word: w.clone(), coeff: c.to_string() })
        .collect()
}

fn report_cochain(report: &mut Report, c: &Cochain, clause: &str) {
    for n in c.arities().collect::<Vec<_>>() {
        for (w, e) in c.component(n).expect("listed arity") {
            report.push(Violation {
                arity: n,
                word: w.clone(),
                clause: clause.into(),
                residual: element_residual(e),
            });
        }
    }
}

/// Maurer-Cartan check for a strictly unital candidate: empty iff
/// `[μ_su, μ̄+h] + (μ̄+h)∘(μ̄+h) = 0` up to the truncation.
pub fn mc_check_su(carrier: &SplitUnitModule, mu_bar: &Cochain, h: &Cochain) -> Result<Report> {
    let ambient = carrier.ambient.clone();
    let ext = mu_bar
        .with_source(ambient.clone())?
        .with_target(ambient.clone())?
        .add(&h.with_source(ambient.clone())?.with_target(ambient)?)?;
    let mu_su = mu_su_build(&mu_bar.ring, carrier, mu_bar.max_arity)?;
    let residual = gerst_bracket(&mu_su, &ext)?.add(&gerst_product(&ext, &ext)?)?;
    let mut report = Report::new(mu_bar.max_arity);
    report_cochain(&mut report, &residual, "maurer-cartan");
    Ok(report)
}

/// An A-infinity algebra with split unit, stored in decomposed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitUnitAlgebra {
    pub carrier: SplitUnitModule,
    pub mu_bar: Cochain,
    pub h: Cochain,
    pub max_arity: usize,
}

impl SplitUnitAlgebra {
    /// Validating constructor: type checks plus an empty Maurer-Cartan
    /// report.
    pub fn new(
        carrier: SplitUnitModule,
        mu_bar: Cochain,
        h: Cochain,
        max_arity: usize,
    ) -> Result<SplitUnitAlgebra> {
        let alg = SplitUnitAlgebra::new_unchecked(carrier, mu_bar, h, max_arity)?;
        let report = mc_check_su(&alg.carrier, &alg.mu_bar, &alg.h)?;
        if !report.is_empty() {
            return Err(Error::NotMaurerCartan(report.total(), report.checked_up_to));
        }
        Ok(alg)
    }

    /// Type checks only; for negative tests and checker inputs.
    pub fn new_unchecked(
        carrier: SplitUnitModule,
        mu_bar: Cochain,
        h: Cochain,
        max_arity: usize,
    ) -> Result<SplitUnitAlgebra> {
        if mu_bar.source != carrier.reduced || mu_bar.target != carrier.reduced {
            return Err(Error::TypeMismatch("μ̄ must be endo-typed on the reduced module".into()));
        }
        if h.source != carrier.reduced || h.target != carrier.unit_module() {
            return Err(Error::TypeMismatch("h must map reduced words to the unit line".into()));
        }
        if mu_bar.degree != -1 || h.degree != -1 {
            return Err(Error::DegreeMismatch {
                expected: -1,
                got: if mu_bar.degree != -1 { mu_bar.degree } else { h.degree },
            });
        }
        if mu_bar.ring != h.ring {
            return Err(Error::MixedRings(mu_bar.ring.to_string(), h.ring.to_string()));
        }
        if mu_bar.max_arity != max_arity || h.max_arity != max_arity {
            return Err(Error::TruncationMismatch(mu_bar.max_arity, max_arity));
        }
        Ok(SplitUnitAlgebra { carrier, mu_bar, h, max_arity })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.mu_bar.ring
    }

    /// `h = 0` means the fixed splitting is an augmentation.
    pub fn is_augmented(&self) -> bool {
        self.h.is_zero()
    }

    /// The assembled structure `ν = μ̄ + h + μ_su` on the full carrier.
    pub fn assembled(&self) -> Result<Cochain> {
        assemble_strictly_unital(&self.carrier, &self.mu_bar, &self.h)
    }
}

/// Checks the structural bracket identities of the split-unit setting on
/// arbitrary `μ̄, μ̄' ∈ Hoch(Ā,Ā)_{-1}` and `h, h' ∈ Hoch(Ā,k)_{-1}`:
/// `[μ̄, μ_su] = 0`, `[h, h'] = 0`, `[μ_su, h]` lands in `Hoch(Ā,Ā)` with
/// the two-term contraction form, and `[μ̄, h]` lands in `Hoch(Ā,k)`.
pub fn bracket_structure_check(
    carrier: &SplitUnitModule,
    mu_bar: &Cochain,
    mu_bar2: &Cochain,
    h: &Cochain,
    h2: &Cochain,
) -> Result<Report> {
    let ambient = carrier.ambient.clone();
    let unit = carrier.unit_label.clone();
    let n_max = mu_bar.max_arity;
    let ring = mu_bar.ring.clone();
    let ext = |c: &Cochain| -> Result<Cochain> {
        c.with_source(ambient.clone())?.with_target(ambient.clone())
    };
    let mu_su = mu_su_build(&ring, carrier, n_max)?;
    let mut report = Report::new(n_max);

    let b1 = gerst_bracket(&ext(mu_bar)?, &mu_su)?;
    report_cochain(&mut report, &b1, "mu_bar_mu_su");
    let _ = mu_bar2;

    let b2 = gerst_bracket(&ext(h)?, &ext(h2)?)?;
    report_cochain(&mut report, &b2, "h_h_prime");

    // [μ_su, h]: compare with the explicit two-term contraction
    // (s^{-1}h)(x_1..x_n)·[x_{n+1}] - (s^{-1}h)(x_2..x_{n+1})·[x_1]
    let b3 = gerst_bracket(&mu_su, &ext(h)?)?;
    let s_inv_h = CurvatureMap::desuspend_cochain(h, false)?;
    for n in 2..=n_max {
        for w in all_words(&carrier.reduced, n) {
            let mut expected = GradedElement::zero();
            let left = s_inv_h.eval_word(&w[..n - 1])?;
            if !left.is_zero() {
                let d = carrier.reduced.degree_of(&w[n - 1])? + 1;
                expected.add_term(w[n - 1].clone(), left, d)?;
            }
            let right = s_inv_h.eval_word(&w[1..])?;
            if !right.is_zero() {
                let d = carrier.reduced.degree_of(&w[0])? + 1;
                expected.add_term(w[0].clone(), right.negated(), d)?;
            }
            let got = b3.eval_word(&w)?;
            if got != expected {
                report.push(Violation {
                    arity: n,
                    word: w.clone(),
                    clause: "mu_su_h_form".into(),
                    residual: element_residual(&got.sub(&expected)?),
                });
            }
        }
    }
    // and it must vanish on unit-containing words
    for (n, w) in b3.support_outside_source(&|l| l != unit.as_str()) {
        report.push(Violation {
            arity: n,
            word: w.clone(),
            clause: "mu_su_h_support".into(),
            residual: element_residual(&b3.eval_word(&w)?),
        });
    }

    // [μ̄, h] lands in Hoch(Ā, k): no reduced-label output, no unit words
    let b4 = gerst_bracket(&ext(mu_bar)?, &ext(h)?)?;
    for n in b4.arities().collect::<Vec<_>>() {
        for (w, e) in b4.component(n).expect("listed arity") {
            let off_unit_target = e.terms().any(|(l, _)| l != &unit);
            let unit_word = w.iter().any(|l| l == &unit);
            if off_unit_target || unit_word {
                report.push(Violation {
                    arity: n,
                    word: w.clone(),
                    clause: "mu_bar_h_target".into(),
                    residual: element_residual(e),
                });
            }
        }
    }
    Ok(report)
}

/// The curved bar construction data `(Tco(ΠĀ), d = Φ^{-1}(μ̄), ξ)`. The
/// coderivation is applied lazily through [`CurvedCoalgebra::d_apply`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvedCoalgebra {
    pub reduced: GradedModule,
    pub mu_bar: Cochain,
    pub xi: CurvatureMap,
    pub max_arity: usize,
}

impl CurvedCoalgebra {
    pub fn new_unchecked(mu_bar: Cochain, xi: CurvatureMap, max_arity: usize) -> Result<CurvedCoalgebra> {
        if mu_bar.source != mu_bar.target || mu_bar.source != xi.source {
            return Err(Error::TypeMismatch("coderivation and curvature carriers differ".into()));
        }
        if xi.degree != -2 {
            return Err(Error::DegreeMismatch { expected: -2, got: xi.degree });
        }
        Ok(CurvedCoalgebra { reduced: mu_bar.source.clone(), mu_bar, xi, max_arity })
    }

    pub fn d_apply(&self, w: &[String]) -> Result<TcoElement> {
        phi_inv_apply(&self.mu_bar, w)
    }

    pub fn d_apply_tco(&self, t: &TcoElement) -> Result<TcoElement> {
        let mut out = TcoElement::zero();
        for (w, c) in t.terms() {
            out = out.add(&self.d_apply(w)?.scaled(c));
        }
        Ok(out)
    }
}

/// Curved bar construction of a valid algebra:
/// `(Tco(ΠĀ), Φ^{-1}(μ̄), ξ = -s^{-1} h)`.
pub fn curved_bar(alg: &SplitUnitAlgebra) -> Result<CurvedCoalgebra> {
    let report = mc_check_su(&alg.carrier, &alg.mu_bar, &alg.h)?;
    if !report.is_empty() {
        return Err(Error::NotMaurerCartan(report.total(), report.checked_up_to));
    }
    let xi = CurvatureMap::desuspend_cochain(&alg.h, true)?;
    CurvedCoalgebra::new_unchecked(alg.mu_bar.clone(), xi, alg.max_arity)
}

/// Checks the curved dg-coalgebra equations `d² = ad ξ` and `ξ d = 0` on
/// every word up to the truncation.
pub fn check_curved_coalgebra(c: &CurvedCoalgebra) -> Result<Report> {
    let mut report = Report::new(c.max_arity);
    for n in 1..=c.max_arity {
        for w in all_words(&c.reduced, n) {
            let d1 = c.d_apply(&w)?;
            let d2 = c.d_apply_tco(&d1)?;
            let residual = d2.sub(&ad_xi_apply(&c.xi, &w)?);
            if !residual.is_zero() {
                report.push(Violation {
                    arity: n,
                    word: w.clone(),
                    clause: "d_squared_equals_ad_xi".into(),
                    residual: tco_residual(&residual),
                });
            }
            let xid = c.xi.eval_tco(&d1)?;
            if !xid.is_zero() {
                report.push(Violation {
                    arity: n,
                    word: w.clone(),
                    clause: "xi_d_zero".into(),
                    residual: vec![ResidualTerm { word: Vec::new(), coeff: xid.to_string() }],
                });
            }
        }
    }
    Ok(report)
}

/// The trivial strictly unital morphism `g_su: A -> B`, nonzero only in
/// arity 1 where it sends the unit line to the unit line.
pub fn g_su_build(
    ring: &RingSpec,
    source: &SplitUnitModule,
    target_module: &GradedModule,
    target_unit: &str,
    max_arity: usize,
) -> Result<Cochain> {
    if target_module.degree_of(target_unit)? != 0 {
        return Err(Error::TypeMismatch("target unit must sit in degree 0".into()));
    }
    let mut out = Cochain::zero(
        ring.clone(),
        source.ambient.clone(),
        target_module.clone(),
        0,
        max_arity,
    );
    out.set_component(
        1,
        vec![source.unit_label.clone()],
        GradedElement::single(target_unit.to_string(), ring.one(), 1),
    )?;
    Ok(out)
}

/// Definitional strictly unital morphism check: assembles
/// `G = ḡ + a + g_su ∈ Hoch(A,B)_0` and reports where
/// `ν_B * G != G ∘ ν_A` on full-carrier words.
pub fn su_morphism_check(
    g_bar: &Cochain,
    a: &Cochain,
    alg_a: &SplitUnitAlgebra,
    alg_b: &SplitUnitAlgebra,
) -> Result<Report> {
    if g_bar.degree != 0 || a.degree != 0 {
        return Err(Error::NonzeroDegree(if g_bar.degree != 0 { g_bar.degree } else { a.degree }));
    }
    if g_bar.source != alg_a.carrier.reduced || g_bar.target != alg_b.carrier.reduced {
        return Err(Error::TypeMismatch("ḡ must map reduced A-words into reduced B".into()));
    }
    if a.source != alg_a.carrier.reduced || a.target != alg_b.carrier.unit_module() {
        return Err(Error::TypeMismatch("a must map reduced A-words to the unit line of B".into()));
    }
    let amb_a = alg_a.carrier.ambient.clone();
    let amb_b = alg_b.carrier.ambient.clone();
    let full = g_bar
        .with_source(amb_a.clone())?
        .with_target(amb_b.clone())?
        .add(&a.with_source(amb_a.clone())?.with_target(amb_b.clone())?)?
        .add(&g_su_build(
            &g_bar.ring,
            &alg_a.carrier,
            &amb_b,
            &alg_b.carrier.unit_label,
            g_bar.max_arity,
        )?)?;
    crate::ainf::check_morphism(&full, &alg_a.assembled()?, &alg_b.assembled()?)
}

/// Underlying morphism criterion usable when `B` has a strict but not
/// necessarily split unit: `ν_B * g = g ∘ μ̄_A + g_su ∘ h_A` for
/// `g ∈ Hoch(Ā_A, B)_0`.
pub fn check_su_morphism_lemma(
    g: &Cochain,
    nu_b: &Cochain,
    mu_bar_a: &Cochain,
    h_a: &Cochain,
    target_unit: &str,
) -> Result<Report> {
    let lhs = crate::cochain::star(nu_b, g)?;
    let g_mu = gerst_product(g, mu_bar_a)?;
    // (g_su ∘ h)(w) = (s^{-1}h)(w)·[1_B]; all three terms have degree -1
    let s_inv_h = CurvatureMap::desuspend_cochain(h_a, false)?;
    let unit_deg = nu_b.source.degree_of(target_unit)? + 1;
    let mut gsu_h = Cochain::zero(
        g.ring.clone(),
        g.source.clone(),
        g.target.clone(),
        -1,
        g.max_arity,
    );
    for n in 1..=g.max_arity {
        for w in all_words(&g.source, n) {
            let v = s_inv_h.eval_word(&w)?;
            if !v.is_zero() {
                gsu_h.set_component(
                    n,
                    w,
                    GradedElement::single(target_unit.to_string(), v, unit_deg),
                )?;
            }
        }
    }
    let diff = lhs.sub(&g_mu.add(&gsu_h)?)?;
    let mut report = Report::new(g.max_arity);
    report_cochain(&mut report, &diff, "su_morphism_lemma");
    Ok(report)
}

/// A morphism of curved dg-coalgebras `(γ, α)` with `γ = Ψ^{-1}(ḡ)` applied
/// lazily and `α` a degree `-1` functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvedMorphism {
    pub g_bar: Cochain,
    pub alpha: CurvatureMap,
    pub source: CurvedCoalgebra,
    pub target: CurvedCoalgebra,
}

impl CurvedMorphism {
    pub fn gamma_apply(&self, t: &TcoElement) -> Result<TcoElement> {
        let mut out = TcoElement::zero();
        for (w, c) in t.terms() {
            out = out.add(&psi_inv_apply_all(&self.g_bar, w)?.scaled(c));
        }
        Ok(out)
    }
}

/// Checks the two curved-morphism equations on every word up to the
/// truncation: `d_D γ = γ d_C + γ ad α` and `ξ_D γ - α² = α d_C + ξ_C`.
pub fn check_curved_morphism(m: &CurvedMorphism) -> Result<Report> {
    let mut report = Report::new(m.g_bar.max_arity);
    for n in 1..=m.g_bar.max_arity {
        for w in all_words(&m.source.reduced, n) {
            let gw = psi_inv_apply_all(&m.g_bar, &w)?;
            let lhs = m.target.d_apply_tco(&gw)?;
            let rhs = m
                .gamma_apply(&m.source.d_apply(&w)?)?
                .add(&m.gamma_apply(&ad_xi_apply(&m.alpha, &w)?)?);
            let residual = lhs.sub(&rhs);
            if !residual.is_zero() {
                report.push(Violation {
                    arity: n,
                    word: w.clone(),
                    clause: "curved_morphism_d".into(),
                    residual: tco_residual(&residual),
                });
            }
            let scalar_lhs = m.target.xi.eval_tco(&gw)?.checked_sub(&functional_square(&m.alpha, &w)?)?;
            let scalar_rhs = m
                .alpha
                .eval_tco(&m.source.d_apply(&w)?)?
                .checked_add(&m.source.xi.eval_word(&w)?)?;
            let sres = scalar_lhs.checked_sub(&scalar_rhs)?;
            if !sres.is_zero() {
                report.push(Violation {
                    arity: n,
                    word: w.clone(),
                    clause: "curved_morphism_xi".into(),
                    residual: vec![ResidualTerm { word: Vec::new(), coeff: sres.to_string() }],
                });
            }
        }
    }
    Ok(report)
}

/// Translates a strictly unital morphism into the corresponding curved
/// morphism `(Ψ^{-1}(ḡ), -s^{-1}a)`, after verifying it is one.
pub fn su_morphism_to_curved(
    g_bar: &Cochain,
    a: &Cochain,
    alg_a: &SplitUnitAlgebra,
    alg_b: &SplitUnitAlgebra,
) -> Result<CurvedMorphism> {
    let report = su_morphism_check(g_bar, a, alg_a, alg_b)?;
    if !report.is_empty() {
        return Err(Error::Invalid(format!(
            "not a strictly unital morphism: {} violation(s)",
            report.total()
        )));
    }
    let alpha = CurvatureMap::desuspend_cochain(a, true)?;
    Ok(CurvedMorphism {
        g_bar: g_bar.clone(),
        alpha,
        source: curved_bar(alg_a)?,
        target: curved_bar(alg_b)?,
    })
}

/// The differential `[μ̄+h+μ_su, -]` of the reduced Hochschild cochains,
/// computed in `Hoch(A,A)` and restricted back; errors if the result fails
/// to land in `Hoch(Ā,A)` (which cannot happen over a valid algebra).
pub fn reduced_hoch_diff(alg: &SplitUnitAlgebra, f: &Cochain) -> Result<Cochain> {
    if f.source != alg.carrier.reduced || f.target != alg.carrier.ambient {
        return Err(Error::TypeMismatch("f must live in Hoch(Ā, A)".into()));
    }
    let ambient = alg.carrier.ambient.clone();
    let nu = alg.assembled()?;
    let ext = f.with_source(ambient.clone())?;
    let bracket = gerst_bracket(&nu, &ext)?;
    let unit = alg.carrier.unit_label.clone();
    let outside = bracket.support_outside_source(&|l| l != unit.as_str());
    if !outside.is_empty() {
        return Err(Error::TypeMismatch(format!(
            "bracket escapes the reduced cochains on {} word(s)",
            outside.len()
        )));
    }
    let mut out = Cochain::zero(
        f.ring.clone(),
        alg.carrier.reduced.clone(),
        ambient,
        bracket.degree,
        f.max_arity,
    );
    for n in 1..=f.max_arity {
        for w in all_words(&alg.carrier.reduced, n) {
            out.set_component(n, w.clone(), bracket.eval_word(&w)?)?;
        }
    }
    Ok(out)
}

/// The Koszul complex on `f ∈ k`: basis `{1}` in degree 0 and `{e}` in
/// degree 1, `m¹(e) = f·1`, `m²` the unital product with `e² = 0`.
pub fn koszul_build(f: &Scalar, max_arity: usize) -> Result<SplitUnitAlgebra> {
    let ring = f.ring();
    let ambient = GradedModule::from_labels(&[("1", 0), ("e", 1)])?;
    let carrier = SplitUnitModule::new(&ring, ambient.clone(), "1")?;
    let mut fam = crate::ainf::MFamily::new(ring.clone(), ambient.clone(), max_arity);
    fam.set_value(
        1,
        vec!["e".into()],
        GradedElement::single("1".into(), f.clone(), 0),
    )?;
    for w in all_words(&ambient, 2) {
        let out = match (w[0].as_str(), w[1].as_str()) {
            ("1", "1") => GradedElement::single("1".into(), ring.one(), 0),
            ("1", "e") | ("e", "1") => GradedElement::single("e".into(), ring.one(), 1),
            _ => GradedElement::zero(),
        };
        fam.set_value(2, w, out)?;
    }
    let nu = fam.to_nu()?;
    let (mu_bar, h) = decompose_strictly_unital(&nu, &carrier)?;
    SplitUnitAlgebra::new(carrier, mu_bar, h, max_arity)
}
