//! Nonunital A-infinity structures, morphisms, the bar construction, and
//! the Hochschild dg-Lie algebra.
//!
//! A structure is a degree `-1` cochain `ν` with `ν ∘ ν = 0`; the check
//! never divides by two — it tests the squaring form directly, which is
//! valid over any ring. The square of the bar differential is derived via
//! the pre-Lie identity as `Φ^{-1}(ν)² = Φ^{-1}(ν ∘ ν)`.

use std::collections::BTreeMap;

use crate::cochain::{gerst_bracket, gerst_product, phi_inv_apply, star, Cochain, TcoElement};
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedModule};
use crate::report::{Report, ResidualTerm, Violation};
use crate::scalar::RingSpec;
use crate::tensor::{all_words, word_degree, Word};

/// A graded module with a validated A-infinity structure `ν` on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AInfinityStructure {
    pub module: GradedModule,
    pub nu: Cochain,
}

impl AInfinityStructure {
    /// Validating constructor: `ν` must be endo-typed of degree `-1` with an
    /// empty Stasheff report up to its truncation.
    pub fn new(module: GradedModule, nu: Cochain) -> Result<AInfinityStructure> {
        let report = check_stasheff(&nu, nu.max_arity)?;
        if !report.is_empty() {
            return Err(Error::NotMaurerCartan(report.total(), report.checked_up_to));
        }
        if nu.source != module {
            return Err(Error::TypeMismatch("structure module differs from cochain source".into()));
        }
        Ok(AInfinityStructure { module, nu })
    }

    /// Skips validation, for negative tests and checker inputs.
    pub fn new_unchecked(module: GradedModule, nu: Cochain) -> AInfinityStructure {
        AInfinityStructure { module, nu }
    }

    pub fn max_arity(&self) -> usize {
        self.nu.max_arity
    }
}

/// A validated morphism of A-infinity structures: `g` of degree 0 with
/// `ν_B * g = g ∘ ν_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AInfinityMorphism {
    pub source: AInfinityStructure,
    pub target: AInfinityStructure,
    pub g: Cochain,
}

impl AInfinityMorphism {
    pub fn new(
        source: AInfinityStructure,
        target: AInfinityStructure,
        g: Cochain,
    ) -> Result<AInfinityMorphism> {
        let report = check_morphism(&g, &source.nu, &target.nu)?;
        if !report.is_empty() {
            return Err(Error::TypeMismatch(format!(
                "not an A-infinity morphism: {} violation(s)",
                report.total()
            )));
        }
        Ok(AInfinityMorphism { source, target, g })
    }
}

/// The (optionally counital) bar construction `(Tco(ΠA), Φ^{-1}(ν))`. The
/// coderivation is applied lazily through [`bar_d_apply`]; in the counital
/// case the empty word is the coaugmentation generator and `d(1) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarConstruction {
    pub structure: AInfinityStructure,
    pub counital: bool,
}

impl BarConstruction {
    pub fn new(structure: AInfinityStructure, counital: bool) -> BarConstruction {
        BarConstruction { structure, counital }
    }
}

/// `d(w) = Φ^{-1}(ν)(w)`, with `d(1) = 0` on the counital generator.
pub fn bar_d_apply(bar: &BarConstruction, w: &[String]) -> Result<TcoElement> {
    if w.is_empty() {
        if bar.counital {
            return Ok(TcoElement::zero());
        }
        return Err(Error::ArityOutOfRange(0, bar.structure.max_arity()));
    }
    phi_inv_apply(&bar.structure.nu, w)
}

fn element_residual(e: &GradedElement) -> Vec<ResidualTerm> {
    e.terms()
        .map(|(l, c)| ResidualTerm { word: vec![l.clone()], coeff: c.to_string() })
        .collect()
}

/// Diagnostic Stasheff check: the report lists every basis word of arity
/// `<= max_arity` where `(ν ∘ ν)(w) != 0`.
pub fn check_stasheff(nu: &Cochain, max_arity: usize) -> Result<Report> {
    if nu.source != nu.target {
        return Err(Error::TypeMismatch("structure cochain must be endo-typed".into()));
    }
    if nu.degree != -1 {
        return Err(Error::DegreeMismatch { expected: -1, got: nu.degree });
    }
    let square = gerst_product(&nu.truncated(max_arity), &nu.truncated(max_arity))?;
    let mut report = Report::new(max_arity);
    for n in square.arities().collect::<Vec<_>>() {
        for (w, e) in square.component(n).expect("listed arity") {
            report.push(Violation {
                arity: n,
                word: w.clone(),
                clause: "stasheff".into(),
                residual: element_residual(e),
            });
        }
    }
    Ok(report)
}

/// Morphism check: empty iff `(ν_B * g)^n = (g ∘ ν_A)^n` on all words,
/// `n <= N`.
pub fn check_morphism(g: &Cochain, nu_a: &Cochain, nu_b: &Cochain) -> Result<Report> {
    if g.source != nu_a.source || g.target != nu_b.source {
        return Err(Error::TypeMismatch("morphism endpoints do not match structures".into()));
    }
    let lhs = star(nu_b, g)?;
    let rhs = gerst_product(g, nu_a)?;
    let diff = lhs.sub(&rhs)?;
    let mut report = Report::new(g.max_arity);
    for n in diff.arities().collect::<Vec<_>>() {
        for (w, e) in diff.component(n).expect("listed arity") {
            report.push(Violation {
                arity: n,
                word: w.clone(),
                clause: "morphism".into(),
                residual: element_residual(e),
            });
        }
    }
    Ok(report)
}

/// The Hochschild differential `[ν, -]` of the dg-Lie algebra
/// `(Hoch(A,A), [ν,-])`.
pub fn hoch_diff(nu: &Cochain, f: &Cochain) -> Result<Cochain> {
    gerst_bracket(nu, f)
}

/// Family of degree `n-2` multilinear maps `m^n: A^{⊗n} -> A`, the
/// unshifted avatar of a structure cochain.
///
/// The conversion uses `ν^n = (-1)^{n(n-1)/2} s m^n (s^{-1})^{⊗n}`; part
/// of the literature instead normalizes `ν^n = -s m^n (s^{-1})^{⊗n}`,
/// which is not implemented here and has no conversion shim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MFamily {
    pub ring: RingSpec,
    pub module: GradedModule,
    pub max_arity: usize,
    maps: BTreeMap<usize, BTreeMap<Word, GradedElement>>,
}

impl MFamily {
    pub fn new(ring: RingSpec, module: GradedModule, max_arity: usize) -> MFamily {
        MFamily { ring, module, max_arity, maps: BTreeMap::new() }
    }

    /// Sets `m^n(word) = output`; `m^n` has degree `n - 2`.
    pub fn set_value(&mut self, arity: usize, word: Word, output: GradedElement) -> Result<()> {
        if arity == 0 || arity > self.max_arity {
            return Err(Error::ArityOutOfRange(arity, self.max_arity));
        }
        if word.len() != arity {
            return Err(Error::ArityMismatch { expected: arity, got: word.len() });
        }
        let wd = word_degree(&self.module, &word, 0)?;
        if output.is_zero() {
            if let Some(c) = self.maps.get_mut(&arity) {
                c.remove(&word);
                if c.is_empty() {
                    self.maps.remove(&arity);
                }
            }
            return Ok(());
        }
        output.validate_in(&self.module, 0)?;
        let expected = wd + arity as i64 - 2;
        if output.degree() != Some(expected) {
            return Err(Error::DegreeMismatch {
                expected,
                got: output.degree().unwrap_or(i64::MIN),
            });
        }
        self.maps.entry(arity).or_default().insert(word, output);
        Ok(())
    }

    pub fn value(&self, word: &[String]) -> GradedElement {
        self.maps
            .get(&word.len())
            .and_then(|c| c.get(word))
            .cloned()
            .unwrap_or_default()
    }

    pub fn arities(&self) -> impl Iterator<Item = usize> + '_ {
        self.maps.keys().copied()
    }

    /// `ν^n = (-1)^{n(n-1)/2} s m^n (s^{-1})^{⊗n}`. On a word `[x_1|...|x_n]`
    /// the two suspension conventions combine to the sign
    /// `(-1)^{Σ_i (n-i)|x_i|}`, which is what the Koszul engine produces for
    /// `(s^{-1})^{⊗n}` followed by the global `(-1)^{n(n-1)/2}`.
    pub fn to_nu(&self) -> Result<Cochain> {
        let mut nu = Cochain::zero(
            self.ring.clone(),
            self.module.clone(),
            self.module.clone(),
            -1,
            self.max_arity,
        );
        for (&n, comp) in &self.maps {
            let global = crate::graded::iterated_suspension_inverse_sign_exponent(n);
            for (w, m_out) in comp {
                // (s^{-1})^{⊗n} on [x_1|...|x_n]: each s^{-1} (degree -1)
                // moves past the shifted letters to its left
                let mut desus_exp = 0;
                let mut prefix = 0;
                for l in w {
                    desus_exp -= prefix;
                    prefix += self.module.degree_of(l)? + 1;
                }
                // then m^n (no sign), then s (no sign); reshift the output
                let mut shifted = GradedElement::zero();
                if let Some(d) = m_out.degree() {
                    for (l, c) in m_out.terms() {
                        shifted.add_term(l.clone(), c.clone().signed(global + desus_exp), d + 1)?;
                    }
                }
                nu.set_component(n, w.clone(), shifted)?;
            }
        }
        Ok(nu)
    }

    /// Inverse conversion `m^n = s^{-1} ν^n s^{⊗n}`.
    pub fn from_nu(nu: &Cochain) -> Result<MFamily> {
        if nu.source != nu.target {
            return Err(Error::TypeMismatch("m-family needs an endo-typed cochain".into()));
        }
        if nu.degree != -1 {
            return Err(Error::DegreeMismatch { expected: -1, got: nu.degree });
        }
        let mut fam = MFamily::new(nu.ring.clone(), nu.source.clone(), nu.max_arity);
        for n in nu.arities().collect::<Vec<_>>() {
            for (w, out) in nu.component(n).expect("listed arity") {
                // s^{⊗n} on x_1 ⊗ ... ⊗ x_n: each s moves past unshifted letters
                let mut sus_exp = 0;
                let mut prefix = 0;
                for l in w {
                    sus_exp += prefix;
                    prefix += fam.module.degree_of(l)?;
                }
                let mut unshifted = GradedElement::zero();
                if let Some(d) = out.degree() {
                    for (l, c) in out.terms() {
                        unshifted.add_term(l.clone(), c.clone().signed(sus_exp), d - 1)?;
                    }
                }
                fam.set_value(n, w.clone(), unshifted)?;
            }
        }
        Ok(fam)
    }
}

/// Builds the structure cochain of a dg-algebra presented by a differential
/// (as `m^1` values) and an associative product (as `m^2` values).
pub fn dg_algebra_nu(
    ring: &RingSpec,
    module: &GradedModule,
    max_arity: usize,
    m1: &dyn Fn(&str) -> GradedElement,
    m2: &dyn Fn(&str, &str) -> GradedElement,
) -> Result<Cochain> {
    let mut fam = MFamily::new(ring.clone(), module.clone(), max_arity);
    for l in module.labels() {
        fam.set_value(1, vec![l.clone()], m1(l))?;
    }
    for w in all_words(module, 2) {
        fam.set_value(2, w.clone(), m2(&w[0], &w[1]))?;
    }
    fam.to_nu()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::scalar::Scalar;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn ring() -> RingSpec {
        RingSpec::Integers
    }

    /// The dg-algebra `Z[x]/(x²)` with `|x| = 1` and zero differential.
    fn exterior_algebra(max_arity: usize) -> Cochain {
        let m = GradedModule::from_labels(&[("1", 0), ("x", 1)]).unwrap();
        dg_algebra_nu(
            &ring(),
            &m,
            max_arity,
            &|_| GradedElement::zero(),
            &|a, b| match (a, b) {
                ("1", "1") => GradedElement::single("1".into(), ring().one(), 0),
                ("1", "x") | ("x", "1") => GradedElement::single("x".into(), ring().one(), 1),
                _ => GradedElement::zero(),
            },
        )
        .unwrap()
    }

    #[test]
    fn m_nu_conversion_signs() {
        // n = 1: ν¹ = s m¹ s^{-1}, sign +1
        let m = GradedModule::from_labels(&[("a", 0), ("b", 1)]).unwrap();
        let mut fam = MFamily::new(ring(), m.clone(), 4);
        fam.set_value(1, vec!["b".into()], GradedElement::single("a".into(), ring().from_i64(3), 0))
            .unwrap();
        // n = 2: the global sign (-1)^{n(n-1)/2} = -1 combines with the
        // Koszul sign of (s^{-1})^{⊗2} to (-1)^{|x_1|} on elements
        fam.set_value(
            2,
            vec!["b".into(), "a".into()],
            GradedElement::single("b".into(), ring().from_i64(5), 1),
        )
        .unwrap();
        let nu = fam.to_nu().unwrap();
        assert_eq!(
            nu.eval_word(&["b".into()]).unwrap(),
            GradedElement::single("a".into(), ring().from_i64(3), 1)
        );
        // ν²[b|a] = (-1)^{|b|} s m²(b,a) = -5[b]
        assert_eq!(
            nu.eval_word(&["b".into(), "a".into()]).unwrap(),
            GradedElement::single("b".into(), ring().from_i64(-5), 2)
        );
        // strict unit laws from the unital product pattern: ν²[1|a] = [a]
        let nu_ext = exterior_algebra(4);
        assert_eq!(
            nu_ext.eval_word(&["1".into(), "x".into()]).unwrap(),
            GradedElement::single("x".into(), ring().one(), 2)
        );
        // ν²[x|1] = (-1)^{|x|}[x] = -[x]
        assert_eq!(
            nu_ext.eval_word(&["x".into(), "1".into()]).unwrap(),
            GradedElement::single("x".into(), ring().from_i64(-1), 2)
        );
    }

    #[test]
    fn m_nu_round_trip() {
        let m = GradedModule::from_labels(&[("a", 0), ("b", 1)]).unwrap();
        let mut rng = StdRng::seed_from_u64(61);
        for _ in 0..5 {
            let nu = gen::random_cochain(&mut rng, &ring(), &m, &m, -1, 4, 0.6);
            let fam = MFamily::from_nu(&nu).unwrap();
            assert_eq!(fam.to_nu().unwrap(), nu);
        }
    }

    #[test]
    fn stasheff_dg_algebra_passes() {
        let nu = exterior_algebra(5);
        assert!(check_stasheff(&nu, 5).unwrap().is_empty());
        // ν = 0 passes trivially
        let m = GradedModule::from_labels(&[("a", 0)]).unwrap();
        let zero = Cochain::zero(ring(), m.clone(), m, -1, 4);
        assert!(check_stasheff(&zero, 4).unwrap().is_empty());
    }

    #[test]
    fn stasheff_mutation_detected() {
        let nu = exterior_algebra(4);
        let mut rng = StdRng::seed_from_u64(67);
        let mut found_violation = false;
        for _ in 0..10 {
            let mutated = gen::mutate_cochain(&mut rng, &nu).unwrap();
            if mutated == nu {
                continue;
            }
            let report = check_stasheff(&mutated, 4).unwrap();
            // a mutated structure may occasionally stay valid; record when not
            if !report.is_empty() {
                found_violation = true;
                assert!(report.arities().iter().all(|&a| a <= 4));
                // the Φ^{-1}-square oracle agrees word by word
                let bar = BarConstruction::new(
                    AInfinityStructure::new_unchecked(mutated.source.clone(), mutated.clone()),
                    false,
                );
                let mut square_nonzero = false;
                for n in 1..=4usize {
                    for w in all_words(&mutated.source, n) {
                        let d1 = bar_d_apply(&bar, &w).unwrap();
                        let mut d2 = TcoElement::zero();
                        for (word, c) in d1.terms() {
                            d2 = d2.add(&bar_d_apply(&bar, word).unwrap().scaled(c));
                        }
                        if !d2.is_zero() {
                            square_nonzero = true;
                        }
                    }
                }
                assert!(square_nonzero);
            }
        }
        assert!(found_violation);
    }

    #[test]
    fn stasheff_iff_bar_square_zero() {
        // the equivalence both ways on random (mostly invalid) candidates
        let m = GradedModule::from_labels(&[("a", 0), ("b", 1)]).unwrap();
        let mut rng = StdRng::seed_from_u64(71);
        for i in 0..8 {
            let nu = if i % 3 == 0 {
                gen::random_dg_structure(&mut rng, &ring(), &m, 3)
            } else {
                gen::random_cochain(&mut rng, &ring(), &m, &m, -1, 3, 0.5)
            };
            let stasheff_ok = check_stasheff(&nu, 3).unwrap().is_empty();
            let bar = BarConstruction::new(
                AInfinityStructure::new_unchecked(m.clone(), nu.clone()),
                false,
            );
            let mut square_zero = true;
            for n in 1..=3usize {
                for w in all_words(&m, n) {
                    let d1 = bar_d_apply(&bar, &w).unwrap();
                    let mut d2 = TcoElement::zero();
                    for (word, c) in d1.terms() {
                        d2 = d2.add(&bar_d_apply(&bar, word).unwrap().scaled(c));
                    }
                    if !d2.is_zero() {
                        square_zero = false;
                    }
                }
            }
            assert_eq!(stasheff_ok, square_zero, "candidate {i}");
        }
    }

    #[test]
    fn bar_d_basics() {
        let nu = exterior_algebra(4);
        let st = AInfinityStructure::new(nu.source.clone(), nu.clone()).unwrap();
        let bar = BarConstruction::new(st, true);
        // arity-1 word [a] -> [ν¹ a] (zero differential here)
        assert!(bar_d_apply(&bar, &["x".into()]).unwrap().is_zero());
        // counital generator -> 0
        assert!(bar_d_apply(&bar, &[]).unwrap().is_zero());
        // d² = 0 on all words of arity <= 4 for Z[x]/(x²)
        for n in 1..=4usize {
            for w in all_words(&nu.source, n) {
                let d1 = bar_d_apply(&bar, &w).unwrap();
                let mut d2 = TcoElement::zero();
                for (word, c) in d1.terms() {
                    d2 = d2.add(&bar_d_apply(&bar, word).unwrap().scaled(c));
                }
                assert!(d2.is_zero(), "word {:?}", w);
            }
        }
    }

    #[test]
    fn morphism_checks() {
        let nu = exterior_algebra(4);
        let st = AInfinityStructure::new(nu.source.clone(), nu.clone()).unwrap();
        // identity morphism passes
        let id = Cochain::identity(ring(), &nu.source, 4);
        assert!(check_morphism(&id, &st.nu, &st.nu).unwrap().is_empty());
        let _ = AInfinityMorphism::new(st.clone(), st.clone(), id).unwrap();
        // zero morphism between nonzero structures passes (both sides vanish)
        let zero = Cochain::zero(ring(), nu.source.clone(), nu.source.clone(), 0, 4);
        assert!(check_morphism(&zero, &st.nu, &st.nu).unwrap().is_empty());
        // scaling the unit breaks multiplicativity: g¹[1] = 2[1] makes
        // ν(g1 ⊗ g1) = 4[1] differ from g(ν[1|1]) = 2[1] at arity 2
        let mut g = Cochain::zero(ring(), nu.source.clone(), nu.source.clone(), 0, 4);
        g.set_component(1, vec!["1".into()], GradedElement::single("1".into(), ring().from_i64(2), 1))
            .unwrap();
        g.set_component(1, vec!["x".into()], GradedElement::single("x".into(), ring().from_i64(2), 2))
            .unwrap();
        let report = check_morphism(&g, &st.nu, &st.nu).unwrap();
        assert!(!report.is_empty());
        assert_eq!(report.arities(), vec![2]);
    }

    #[test]
    fn hoch_diff_laws() {
        let m = GradedModule::from_labels(&[("a", 0), ("b", 1)]).unwrap();
        let mut rng = StdRng::seed_from_u64(73);
        let nu = gen::random_dg_structure(&mut rng, &ring(), &m, 3);
        // [ν,ν] = 2(ν∘ν) = 0
        assert!(gerst_bracket(&nu, &nu).unwrap().is_zero());
        // [ν,[ν,f]] = 0 for random f; e.g. over Z and over Z/2
        for test_ring in [RingSpec::Integers, RingSpec::integers_mod(2).unwrap()] {
            let nu_r = map_ring(&nu, &test_ring);
            for deg in [-1i64, 0] {
                let f = gen::random_cochain(&mut rng, &test_ring, &m, &m, deg, 3, 0.6);
                let once = hoch_diff(&nu_r, &f).unwrap();
                let twice = hoch_diff(&nu_r, &once).unwrap();
                assert!(twice.is_zero(), "ring {test_ring} degree {deg}");
            }
        }
        // f = 0 -> 0
        let zero = Cochain::zero(ring(), m.clone(), m.clone(), 0, 3);
        assert!(hoch_diff(&nu, &zero).unwrap().is_zero());
        // derivation of the bracket: [ν,[f,g]] = [[ν,f],g] + (-1)^{|f|}[f,[ν,g]]
        let f = gen::random_cochain(&mut rng, &ring(), &m, &m, -1, 3, 0.6);
        let g = gen::random_cochain(&mut rng, &ring(), &m, &m, 0, 3, 0.6);
        let lhs = hoch_diff(&nu, &gerst_bracket(&f, &g).unwrap()).unwrap();
        let rhs = gerst_bracket(&hoch_diff(&nu, &f).unwrap(), &g)
            .unwrap()
            .add(&gerst_bracket(&f, &hoch_diff(&nu, &g).unwrap()).unwrap().signed(f.degree))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    /// Re-coefficient a cochain into another ring by parsing the canonical
    /// string form (integers embed anywhere).
    fn map_ring(c: &Cochain, ring: &RingSpec) -> Cochain {
        let mut out = Cochain::zero(
            ring.clone(),
            c.source.clone(),
            c.target.clone(),
            c.degree,
            c.max_arity,
        );
        for n in c.arities().collect::<Vec<_>>() {
            for (w, e) in c.component(n).unwrap() {
                let mut mapped = GradedElement::zero();
                if let Some(d) = e.degree() {
                    for (l, coeff) in e.terms() {
                        let v: Scalar = ring.parse(&coeff.to_string()).unwrap();
                        mapped.add_term(l.clone(), v, d).unwrap();
                    }
                }
                out.set_component(n, w.clone(), mapped).unwrap();
            }
        }
        out
    }

    #[test]
    fn bar_functoriality() {
        // π₁ Ψ^{-1}(g) Φ^{-1}(ν_A) = π₁ Φ^{-1}(ν_B) Ψ^{-1}(g) for a valid morphism
        use crate::cochain::{psi_inv_apply_all, phi_inv_apply};
        let nu = exterior_algebra(4);
        let g = Cochain::identity(ring(), &nu.source, 4);
        for n in 1..=4usize {
            for w in all_words(&nu.source, n) {
                let mut lhs = TcoElement::zero();
                for (word, c) in phi_inv_apply(&nu, &w).unwrap().terms() {
                    lhs = lhs.add(&psi_inv_apply_all(&g, word).unwrap().scaled(c));
                }
                let mut rhs = TcoElement::zero();
                for (word, c) in psi_inv_apply_all(&g, &w).unwrap().terms() {
                    rhs = rhs.add(&phi_inv_apply(&nu, word).unwrap().scaled(c));
                }
                assert_eq!(lhs, rhs);
            }
        }
    }
}
