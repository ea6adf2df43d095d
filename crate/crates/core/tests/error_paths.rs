//! Typed error paths: malformed inputs are rejected with the documented
//! error, never silently coerced.

use std::collections::BTreeMap;

use ainfty::ainf::MFamily;
use ainfty::cochain::{gerst_bracket, gerst_product, psi_inv_apply, star, Cochain};
use ainfty::deform::theta_build;
use ainfty::error::Error;
use ainfty::graded::{GradedElement, GradedMap, GradedModule};
use ainfty::rep::{AdjointFamily, ShamashSystem};
use ainfty::tensor::{tensor_eval, TensorElement};
use ainfty::unital::{curved_bar, koszul_build, SplitUnitAlgebra, SplitUnitModule};
use ainfty::RingSpec;

fn ring() -> RingSpec {
    RingSpec::Integers
}

fn mod_ab() -> GradedModule {
    GradedModule::from_labels(&[("a", 0), ("b", 1)]).unwrap()
}

#[test]
fn tensor_eval_arity_mismatch() {
    let m = mod_ab();
    let id = GradedMap::identity(&m, &ring());
    let elt = TensorElement::single(vec!["a".into(), "b".into(), "a".into()], ring().one());
    assert!(matches!(
        tensor_eval(&[&id, &id], &elt),
        Err(Error::ArityMismatch { expected: 2, got: 3 })
    ));
}

#[test]
fn cochain_type_and_truncation_errors() {
    let m = mod_ab();
    let other = GradedModule::from_labels(&[("c", 0)]).unwrap();
    let f = Cochain::zero(ring(), m.clone(), m.clone(), -1, 3);
    let g_wrong_module = Cochain::zero(ring(), other.clone(), other, -1, 3);
    assert!(matches!(
        gerst_product(&f, &g_wrong_module),
        Err(Error::TypeMismatch(_))
    ));
    let g_wrong_truncation = Cochain::zero(ring(), m.clone(), m.clone(), -1, 4);
    assert!(matches!(
        gerst_product(&f, &g_wrong_truncation),
        Err(Error::TruncationMismatch(3, 4))
    ));
    let q = Cochain::zero(RingSpec::Rationals, m.clone(), m.clone(), -1, 3);
    assert!(matches!(gerst_product(&f, &q), Err(Error::MixedRings(_, _))));
    // brackets need endo-typed cochains
    let unit_target = Cochain::zero(ring(), m.clone(), GradedModule::unit_module("1"), -1, 3);
    assert!(matches!(gerst_bracket(&f, &unit_target), Err(Error::TypeMismatch(_))));
}

#[test]
fn psi_inv_and_star_demand_degree_zero() {
    let m = mod_ab();
    let g = Cochain::zero(ring(), m.clone(), m.clone(), -1, 3);
    assert!(matches!(
        psi_inv_apply(&g, &["a".into()], 1),
        Err(Error::NonzeroDegree(-1))
    ));
    let h = Cochain::zero(ring(), m.clone(), m.clone(), -1, 3);
    assert!(matches!(star(&h, &g), Err(Error::NonzeroDegree(-1))));
}

#[test]
fn m_family_degree_mismatch() {
    let m = mod_ab();
    let mut fam = MFamily::new(ring(), m, 3);
    // m¹ has degree -1, so b (degree 1) cannot map to b
    let bad = GradedElement::single("b".into(), ring().one(), 1);
    assert!(matches!(
        fam.set_value(1, vec!["b".into()], bad),
        Err(Error::DegreeMismatch { expected: 0, got: 1 })
    ));
}

#[test]
fn curved_bar_requires_maurer_cartan() {
    let alg = koszul_build(&ring().from_i64(2), 3).unwrap();
    // corrupt μ̄ behind the validator's back
    let mut bad_mu = alg.mu_bar.clone();
    bad_mu
        .set_component(
            2,
            vec!["e".into(), "e".into()],
            GradedElement::single("e".into(), ring().one(), 3),
        )
        .unwrap_err(); // no degree-3 slot on the rank-one carrier
    // a genuinely corruptible carrier: the two-element Koszul complex
    let pair = ainfty::gen::koszul_pair(&ring().from_i64(2), &ring().from_i64(5), 3);
    let mut bad_h = pair.h.clone();
    bad_h
        .add_component(
            1,
            vec!["e1".into()],
            GradedElement::single("1".into(), ring().one(), 1),
        )
        .unwrap();
    let broken =
        SplitUnitAlgebra::new_unchecked(pair.carrier.clone(), pair.mu_bar.clone(), bad_h, 3)
            .unwrap();
    assert!(matches!(curved_bar(&broken), Err(Error::NotMaurerCartan(_, _))));
    // and the validating constructor refuses it outright
    assert!(matches!(
        SplitUnitAlgebra::new(pair.carrier.clone(), pair.mu_bar.clone(), broken.h.clone(), 3),
        Err(Error::NotMaurerCartan(_, _))
    ));
}

#[test]
fn adjoint_family_degree_bookkeeping() {
    let a = mod_ab();
    let m = GradedModule::from_labels(&[("x", 0), ("y", 1)]).unwrap();
    let mut fam = AdjointFamily::new(ring(), a, m, 3);
    // λ² on ([a] ⊗ x) must land in degree 1 + 0 - 1 = 0
    let bad = GradedElement::single("y".into(), ring().one(), 1);
    assert!(matches!(
        fam.set_value(2, vec!["a".into()], "x", bad),
        Err(Error::DegreeMismatch { expected: 0, got: 1 })
    ));
    let wrong_word_len = GradedElement::single("x".into(), ring().one(), 0);
    assert!(matches!(
        fam.set_value(3, vec!["a".into()], "x", wrong_word_len),
        Err(Error::ArityMismatch { expected: 2, got: 1 })
    ));
}

#[test]
fn shamash_validator_rejects_broken_relations() {
    let m = GradedModule::from_labels(&[("x", 0), ("y", 1)]).unwrap();
    let s0 = GradedMap::from_entries(
        m.clone(),
        m.clone(),
        -1,
        &[("y".into(), "x".into(), ring().one())],
    )
    .unwrap();
    let mut sigma = BTreeMap::new();
    sigma.insert(0, s0);
    // σ¹ = 0 but f = 6: σ¹σ⁰ + σ⁰σ¹ = 0 ≠ -6·id
    assert!(ShamashSystem::new(ring().from_i64(6), m, sigma, 3).is_err());
}

#[test]
fn theta_requires_matching_shapes() {
    let m = mod_ab();
    let nu = Cochain::zero(ring(), m.clone(), m.clone(), -1, 3);
    let eta_wrong_degree = Cochain::zero(ring(), m.clone(), m.clone(), 0, 3);
    assert!(matches!(
        theta_build(&nu, &eta_wrong_degree),
        Err(Error::DegreeMismatch { expected: -1, got: 0 })
    ));
    let eta_wrong_truncation = Cochain::zero(ring(), m.clone(), m.clone(), -1, 4);
    assert!(matches!(
        theta_build(&nu, &eta_wrong_truncation),
        Err(Error::TruncationMismatch(3, 4))
    ));
    // dual rings do not nest
    let dual = RingSpec::dual(ring()).unwrap();
    assert!(RingSpec::dual(dual.clone()).is_err());
    let nu_dual = Cochain::zero(dual.clone(), m.clone(), m.clone(), -1, 3);
    let eta_dual = Cochain::zero(dual, m.clone(), m.clone(), -1, 3);
    assert!(theta_build(&nu_dual, &eta_dual).is_err());
}

#[test]
fn split_unit_module_requires_degree_zero_unit() {
    let bad = GradedModule::from_labels(&[("1", 1), ("e", 2)]).unwrap();
    assert!(matches!(
        SplitUnitModule::new(&ring(), bad, "1"),
        Err(Error::TypeMismatch(_))
    ));
    let missing = GradedModule::from_labels(&[("e", 1)]).unwrap();
    assert!(matches!(
        SplitUnitModule::new(&ring(), missing, "1"),
        Err(Error::UnknownLabel(_))
    ));
}
