//! The equivalences behind every checker hold over arbitrary commutative
//! rings: nothing in the library divides by two, and the squaring forms
//! are used throughout. These tests run the dual routes over Z/2, Z/4,
//! and Z/6 — rings where a hidden halving or a 2-torsion slip would show
//! up immediately — plus Z and Q for contrast.

use rand::rngs::StdRng;
use rand::SeedableRng;

use ainfty::ainf::{bar_d_apply, check_stasheff, AInfinityStructure, BarConstruction};
use ainfty::cochain::{gerst_product, phi_inv_apply, TcoElement};
use ainfty::comodule::{
    check_curved_comodule, check_dg_comodule, CofreeComodule, ComoduleCoderivation,
};
use ainfty::deform::{cocycle_residual, first_order_check, gauge_action, FirstOrderDeformation};
use ainfty::gen;
use ainfty::graded::GradedModule;
use ainfty::rep::{check_representation, check_su_representation};
use ainfty::tensor::all_words;
use ainfty::unital::{
    assemble_strictly_unital, curved_bar, koszul_build, mc_check_su, SplitUnitModule,
};
use ainfty::RingSpec;

fn rings() -> Vec<RingSpec> {
    vec![
        RingSpec::integers_mod(2).unwrap(),
        RingSpec::integers_mod(4).unwrap(),
        RingSpec::integers_mod(6).unwrap(),
        RingSpec::Integers,
        RingSpec::Rationals,
    ]
}

#[test]
fn bar_square_is_phi_inv_of_the_gerstenhaber_square() {
    // Φ^{-1}(ν)² = Φ^{-1}(ν ∘ ν) on every word, for arbitrary (also
    // invalid) degree -1 cochains: the identity behind deriving d² = 0
    // from ν∘ν = 0 without dividing by two.
    let m = GradedModule::from_labels(&[("a", 0), ("b", 1)]).unwrap();
    for ring in rings() {
        let mut rng = StdRng::seed_from_u64(31_337);
        for _ in 0..4 {
            let nu = gen::random_cochain(&mut rng, &ring, &m, &m, -1, 4, 0.5);
            let square = gerst_product(&nu, &nu).unwrap();
            for n in 1..=4usize {
                for w in all_words(&m, n) {
                    let d1 = phi_inv_apply(&nu, &w).unwrap();
                    let mut d2 = TcoElement::zero();
                    for (word, c) in d1.terms() {
                        d2 = d2.add(&phi_inv_apply(&nu, word).unwrap().scaled(c));
                    }
                    let rhs = phi_inv_apply(&square, &w).unwrap();
                    assert_eq!(d2, rhs, "ring {ring}, word {w:?}");
                }
            }
        }
    }
}

#[test]
fn mc_iff_stasheff_over_non_fields() {
    for ring in rings() {
        let mut rng = StdRng::seed_from_u64(41_001);
        let carrier = SplitUnitModule::new(
            &ring,
            GradedModule::from_labels(&[("1", 0), ("x", 1), ("y", 2)]).unwrap(),
            "1",
        )
        .unwrap();
        let mut valid = 0;
        let mut invalid = 0;
        for _ in 0..8 {
            let (mu_bar, h) = gen::random_su_candidate(&mut rng, &ring, &carrier, 4, 0.4);
            let mc = mc_check_su(&carrier, &mu_bar, &h).unwrap().is_empty();
            let nu = assemble_strictly_unital(&carrier, &mu_bar, &h).unwrap();
            let stasheff = check_stasheff(&nu, 4).unwrap().is_empty();
            assert_eq!(mc, stasheff, "ring {ring}");
            if mc {
                valid += 1;
            } else {
                invalid += 1;
            }
        }
        let alg = gen::trivial_product_algebra(&mut rng, &ring, &carrier, 4);
        assert!(mc_check_su(&carrier, &alg.mu_bar, &alg.h).unwrap().is_empty());
        let _ = (valid, invalid);
    }
}

#[test]
fn koszul_and_curved_bar_over_z2_and_z4() {
    // over Z/2 the curvature -f equals f; the defining equations must
    // still hold on the nose
    for (ring, f) in [
        (RingSpec::integers_mod(2).unwrap(), 1i64),
        (RingSpec::integers_mod(4).unwrap(), 2),
        (RingSpec::integers_mod(4).unwrap(), 3),
    ] {
        let alg = koszul_build(&ring.from_i64(f), 6).unwrap();
        let bar = curved_bar(&alg).unwrap();
        assert!(ainfty::unital::check_curved_coalgebra(&bar).unwrap().is_empty());
        assert_eq!(
            bar.xi.eval_word(&["e".into()]).unwrap(),
            ring.from_i64(f).negated(),
            "ring {ring}, f = {f}"
        );
        // the nonunital bar of the assembled structure also squares to zero
        let nu = alg.assembled().unwrap();
        let st = AInfinityStructure::new(nu.source.clone(), nu.clone()).unwrap();
        let bar_full = BarConstruction::new(st, true);
        for n in 1..=4usize {
            for w in all_words(&nu.source, n) {
                let d1 = bar_d_apply(&bar_full, &w).unwrap();
                let mut d2 = TcoElement::zero();
                for (word, c) in d1.terms() {
                    d2 = d2.add(&bar_d_apply(&bar_full, word).unwrap().scaled(c));
                }
                assert!(d2.is_zero(), "ring {ring}, f = {f}, word {w:?}");
            }
        }
    }
}

#[test]
fn representation_dual_routes_over_non_fields() {
    let a = GradedModule::from_labels(&[("u", 0), ("v", 1)]).unwrap();
    let m = GradedModule::from_labels(&[("x", 0), ("y", 1)]).unwrap();
    for ring in rings() {
        let mut rng = StdRng::seed_from_u64(43_001);
        let nu = gen::random_dg_structure(&mut rng, &ring, &a, 4);
        for i in 0..6 {
            let fam = gen::random_adjoint_family(&mut rng, &ring, &a, &m, 4, 0.4, i % 2 == 0);
            let rep_ok = check_representation(&fam, &nu).unwrap().is_empty();
            let comodule = CofreeComodule::over_bar(nu.clone(), m.clone()).unwrap();
            let coder = ComoduleCoderivation::new(comodule, fam).unwrap();
            assert_eq!(
                rep_ok,
                check_dg_comodule(&coder).unwrap().is_empty(),
                "ring {ring}, candidate {i}"
            );
        }
        // strictly unital: Koszul on a ring element that may be a zero divisor
        let alg = koszul_build(&ring.from_i64(2), 4).unwrap();
        let bar = curved_bar(&alg).unwrap();
        for i in 0..6 {
            let fam = gen::random_adjoint_family(
                &mut rng,
                &ring,
                &alg.carrier.reduced,
                &m,
                4,
                0.4,
                i % 2 == 0,
            );
            let su_ok = check_su_representation(&fam, &alg).unwrap().is_empty();
            let comodule = CofreeComodule::over_curved_bar(&bar, m.clone());
            let coder = ComoduleCoderivation::new(comodule, fam).unwrap();
            assert_eq!(
                su_ok,
                check_curved_comodule(&coder, &bar.xi).unwrap().is_empty(),
                "ring {ring}, candidate {i}"
            );
        }
    }
}

#[test]
fn deformation_control_over_z2() {
    // gauge invariance rests on [ν,[ν,α]] = 0, which must hold without
    // any factor-of-two argument
    let m = GradedModule::from_labels(&[("a", 0), ("b", 1)]).unwrap();
    for ring in rings() {
        let mut rng = StdRng::seed_from_u64(47_001);
        let nu = gen::random_dg_structure(&mut rng, &ring, &m, 3);
        for i in 0..6 {
            let alpha = gen::random_cochain(&mut rng, &ring, &m, &m, 0, 3, 0.6);
            let eta = ainfty::ainf::hoch_diff(&nu, &alpha).unwrap();
            let def = FirstOrderDeformation::new_unchecked(nu.clone(), eta);
            assert!(first_order_check(&def).unwrap().is_empty(), "ring {ring}, round {i}");
            let beta = gen::random_cochain(&mut rng, &ring, &m, &m, 0, 3, 0.6);
            let moved = gauge_action(&beta, &def).unwrap();
            assert!(first_order_check(&moved).unwrap().is_empty(), "ring {ring}, round {i}");
            // and the two routes agree on arbitrary candidates
            let eta2 = gen::random_cochain(&mut rng, &ring, &m, &m, -1, 3, 0.5);
            let cand = FirstOrderDeformation::new_unchecked(nu.clone(), eta2);
            assert_eq!(
                first_order_check(&cand).unwrap().is_empty(),
                cocycle_residual(&cand).unwrap().is_zero(),
                "ring {ring}, round {i}"
            );
        }
    }
}
