//! Seeded random generators for modules, maps, cochains, and structures.
//!
//! Used by the property tests and the acceptance suite; all generation is
//! deterministic given the seed.

use rand::rngs::StdRng;
use rand::Rng;

use crate::ainf;
use crate::cochain::{Cochain, CurvatureMap};
use crate::graded::{GradedElement, GradedMap, GradedModule};
use crate::rep::AdjointFamily;
use crate::scalar::{RingSpec, Scalar};
use crate::tensor::all_words;
use crate::unital::{SplitUnitAlgebra, SplitUnitModule};

/// Small nonzero-biased scalar.
pub fn random_scalar(rng: &mut StdRng, ring: &RingSpec) -> Scalar {
    match ring {
        RingSpec::Rationals => {
            let p = rng.gen_range(-4i64..=4);
            let q = rng.gen_range(1i64..=3);
            ring.parse(&format!("{p}/{q}")).expect("valid fraction")
        }
        RingSpec::IntegersMod(m) => {
            let m: i64 = m.to_string().parse().unwrap_or(5);
            ring.from_i64(rng.gen_range(0..m))
        }
        RingSpec::Integers => ring.from_i64(rng.gen_range(-4i64..=4)),
        RingSpec::Dual(base) => {
            let a = random_scalar(rng, base);
            let b = random_scalar(rng, base);
            a.with_dual_part(&b).expect("same base ring")
        }
    }
}

/// Random module with labels `m0, m1, ...` in degrees from the given range.
pub fn random_module(
    rng: &mut StdRng,
    rank: usize,
    degrees: std::ops::RangeInclusive<i64>,
) -> GradedModule {
    let labels: Vec<(String, i64)> = (0..rank)
        .map(|i| (format!("m{i}"), rng.gen_range(degrees.clone())))
        .collect();
    let refs: Vec<(&str, i64)> = labels.iter().map(|(l, d)| (l.as_str(), *d)).collect();
    GradedModule::from_labels(&refs).expect("fresh labels")
}

/// Random element of `Π target` in the given (shifted) degree.
pub fn random_shifted_element(
    rng: &mut StdRng,
    ring: &RingSpec,
    target: &GradedModule,
    shifted_degree: i64,
    density: f64,
) -> GradedElement {
    let mut out = GradedElement::zero();
    for l in target.labels() {
        let d = target.degree_of(l).expect("own label") + 1;
        if d == shifted_degree && rng.gen_bool(density) {
            let c = random_scalar(rng, ring);
            out.add_term(l.clone(), c, d).expect("homogeneous by construction");
        }
    }
    out
}

/// Random element of `target` (no suspension) in the given degree.
pub fn random_element(
    rng: &mut StdRng,
    ring: &RingSpec,
    target: &GradedModule,
    degree: i64,
    density: f64,
) -> GradedElement {
    let mut out = GradedElement::zero();
    for l in target.labels() {
        let d = target.degree_of(l).expect("own label");
        if d == degree && rng.gen_bool(density) {
            out.add_term(l.clone(), random_scalar(rng, ring), d).expect("homogeneous");
        }
    }
    out
}

/// Random cochain in `Hoch(source, target)` of the given degree.
pub fn random_cochain(
    rng: &mut StdRng,
    ring: &RingSpec,
    source: &GradedModule,
    target: &GradedModule,
    degree: i64,
    max_arity: usize,
    density: f64,
) -> Cochain {
    let mut out = Cochain::zero(ring.clone(), source.clone(), target.clone(), degree, max_arity);
    for n in 1..=max_arity {
        for w in all_words(source, n) {
            if !rng.gen_bool(density) {
                continue;
            }
            let wd = crate::tensor::word_degree(source, &w, 1).expect("known labels");
            let e = random_shifted_element(rng, ring, target, wd + degree, 0.8);
            out.set_component(n, w, e).expect("degree-consistent by construction");
        }
    }
    out
}

/// Random graded map of the given degree.
pub fn random_graded_map(
    rng: &mut StdRng,
    ring: &RingSpec,
    source: &GradedModule,
    target: &GradedModule,
    degree: i64,
    density: f64,
) -> GradedMap {
    let mut entries = Vec::new();
    for from in source.labels() {
        let fd = source.degree_of(from).expect("own label");
        for to in target.labels() {
            if target.degree_of(to).expect("own label") == fd + degree && rng.gen_bool(density) {
                entries.push((from.clone(), to.clone(), random_scalar(rng, ring)));
            }
        }
    }
    GradedMap::from_entries(source.clone(), target.clone(), degree, &entries)
        .expect("degree-consistent by construction")
}

/// Random degree `-1` differential with `d² = 0`, built by splitting the
/// basis in two and mapping one half into the other only.
pub fn random_differential(rng: &mut StdRng, ring: &RingSpec, module: &GradedModule) -> GradedMap {
    let labels: Vec<String> = module.labels().cloned().collect();
    let killed: Vec<bool> = labels.iter().map(|_| rng.gen_bool(0.5)).collect();
    let mut entries = Vec::new();
    for (i, from) in labels.iter().enumerate() {
        if killed[i] {
            continue;
        }
        let fd = module.degree_of(from).expect("own label");
        for (j, to) in labels.iter().enumerate() {
            if !killed[j] {
                continue;
            }
            if module.degree_of(to).expect("own label") == fd - 1 && rng.gen_bool(0.7) {
                entries.push((from.clone(), to.clone(), random_scalar(rng, ring)));
            }
        }
    }
    GradedMap::from_entries(module.clone(), module.clone(), -1, &entries)
        .expect("degree-consistent by construction")
}

/// Random curvature functional (degree -2).
pub fn random_curvature(
    rng: &mut StdRng,
    ring: &RingSpec,
    source: &GradedModule,
    max_arity: usize,
    density: f64,
) -> CurvatureMap {
    let mut out = CurvatureMap::curvature(ring.clone(), source.clone(), max_arity);
    for n in 1..=max_arity {
        for w in all_words(source, n) {
            let wd = crate::tensor::word_degree(source, &w, 1).expect("known labels");
            if wd == 2 && rng.gen_bool(density) {
                out.set_value(w, random_scalar(rng, ring)).expect("degree two word");
            }
        }
    }
    out
}

/// Random degree `-1` functional (the `α` of curved morphisms).
pub fn random_alpha(
    rng: &mut StdRng,
    ring: &RingSpec,
    source: &GradedModule,
    max_arity: usize,
    density: f64,
) -> CurvatureMap {
    let mut out = CurvatureMap::functional(ring.clone(), source.clone(), -1, max_arity);
    for n in 1..=max_arity {
        for w in all_words(source, n) {
            let wd = crate::tensor::word_degree(source, &w, 1).expect("known labels");
            if wd == 1 && rng.gen_bool(density) {
                out.set_value(w, random_scalar(rng, ring)).expect("degree one word");
            }
        }
    }
    out
}

/// Bumps one coefficient of a cochain by a basis-aligned unit at a random
/// slot; `None` if no slot admits a nonzero entry.
pub fn mutate_cochain(rng: &mut StdRng, c: &Cochain) -> Option<Cochain> {
    let mut slots = Vec::new();
    for n in 1..=c.max_arity {
        for w in all_words(&c.source, n) {
            let wd = crate::tensor::word_degree(&c.source, &w, 1).ok()?;
            for l in c.target.labels() {
                if c.target.degree_of(l).ok()? + 1 == wd + c.degree {
                    slots.push((n, w.clone(), l.clone(), wd + c.degree));
                }
            }
        }
    }
    if slots.is_empty() {
        return None;
    }
    let (n, w, l, d) = slots[rng.gen_range(0..slots.len())].clone();
    let mut out = c.clone();
    let bump = GradedElement::single(l, c.ring.one(), d);
    out.add_component(n, w, bump).ok()?;
    Some(out)
}

/// A dg-algebra with trivial products on the reduced part: `Ā·Ā = 0`, a
/// square-zero differential on `Ā`, and the unit acting canonically.
/// Always a valid strictly unital (in fact augmented) structure.
pub fn trivial_product_algebra(
    rng: &mut StdRng,
    ring: &RingSpec,
    carrier: &SplitUnitModule,
    max_arity: usize,
) -> SplitUnitAlgebra {
    let reduced = carrier.reduced.clone();
    let d = random_differential(rng, ring, &reduced);
    let mut mu_bar = Cochain::zero(ring.clone(), reduced.clone(), reduced.clone(), -1, max_arity);
    for l in reduced.labels() {
        let img = d.image_of(l).expect("own label");
        if img.is_zero() {
            continue;
        }
        let mut shifted = GradedElement::zero();
        for (tl, c) in img.terms() {
            shifted
                .add_term(tl.clone(), c.clone(), reduced.degree_of(tl).expect("own label") + 1)
                .expect("homogeneous");
        }
        mu_bar.set_component(1, vec![l.clone()], shifted).expect("degree -1 component");
    }
    let h = Cochain::zero(
        ring.clone(),
        reduced,
        GradedModule::unit_module(&carrier.unit_label),
        -1,
        max_arity,
    );
    SplitUnitAlgebra::new(carrier.clone(), mu_bar, h, max_arity)
        .expect("trivial products satisfy Maurer-Cartan")
}

/// Random strictly unital candidate `(μ̄, h)`: usually not Maurer-Cartan.
pub fn random_su_candidate(
    rng: &mut StdRng,
    ring: &RingSpec,
    carrier: &SplitUnitModule,
    max_arity: usize,
    density: f64,
) -> (Cochain, Cochain) {
    let mu_bar = random_cochain(
        rng,
        ring,
        &carrier.reduced,
        &carrier.reduced,
        -1,
        max_arity,
        density,
    );
    let unit_target = GradedModule::unit_module(&carrier.unit_label);
    let h = random_cochain(rng, ring, &carrier.reduced, &unit_target, -1, max_arity, density);
    (mu_bar, h)
}

/// Random adjoint family over `source`-words acting on `module`. The
/// arity-1 map is a genuine square-zero differential when
/// `valid_differential` is set.
pub fn random_adjoint_family(
    rng: &mut StdRng,
    ring: &RingSpec,
    source: &GradedModule,
    module: &GradedModule,
    max_arity: usize,
    density: f64,
    valid_differential: bool,
) -> AdjointFamily {
    let mut fam = AdjointFamily::new(ring.clone(), source.clone(), module.clone(), max_arity);
    let d = if valid_differential {
        random_differential(rng, ring, module)
    } else {
        random_graded_map(rng, ring, module, module, -1, density)
    };
    fam.set_differential(&d).expect("degree -1 differential");
    for n in 2..=max_arity {
        for w in all_words(source, n - 1) {
            for ml in module.labels() {
                if rng.gen_bool(density) {
                    let wd = crate::tensor::word_degree(source, &w, 1).expect("known labels");
                    let md = module.degree_of(ml).expect("own label");
                    let img = random_element(rng, ring, module, wd + md - 1, 0.8);
                    fam.set_value(n, w.clone(), ml, img).expect("degree consistent");
                }
            }
        }
    }
    fam
}

/// The Koszul complex on a pair `(f1, f2)`: the exterior algebra on two
/// generators in degree 1 with `d(e1) = f1`, `d(e2) = f2`, and
/// `d(e12) = f1·e2 - f2·e1`. A strictly unital structure whose curved bar
/// construction has a nonzero coderivation, unlike the one-element case.
pub fn koszul_pair(f1: &Scalar, f2: &Scalar, max_arity: usize) -> SplitUnitAlgebra {
    let ring = f1.ring();
    let ambient = GradedModule::from_labels(&[("1", 0), ("e1", 1), ("e2", 1), ("e12", 2)])
        .expect("fresh labels");
    let carrier = SplitUnitModule::new(&ring, ambient.clone(), "1").expect("unit in degree 0");
    let mut fam = crate::ainf::MFamily::new(ring.clone(), ambient.clone(), max_arity);
    fam.set_value(1, vec!["e1".into()], GradedElement::single("1".into(), f1.clone(), 0))
        .expect("degree -1");
    fam.set_value(1, vec!["e2".into()], GradedElement::single("1".into(), f2.clone(), 0))
        .expect("degree -1");
    let mut de12 = GradedElement::single("e2".into(), f1.clone(), 1);
    de12.add_term("e1".into(), f2.negated(), 1).expect("homogeneous");
    fam.set_value(1, vec!["e12".into()], de12).expect("degree -1");
    let product = |a: &str, b: &str| -> GradedElement {
        match (a, b) {
            ("1", other) | (other, "1") => GradedElement::single(
                other.into(),
                ring.one(),
                ambient.degree_of(other).expect("own label"),
            ),
            ("e1", "e2") => GradedElement::single("e12".into(), ring.one(), 2),
            ("e2", "e1") => GradedElement::single("e12".into(), ring.one(), 2).negated(),
            _ => GradedElement::zero(),
        }
    };
    for w in all_words(&ambient, 2) {
        fam.set_value(2, w.clone(), product(&w[0], &w[1])).expect("degree 0 product");
    }
    let nu = fam.to_nu().expect("well-typed family");
    let (mu_bar, h) =
        crate::unital::decompose_strictly_unital(&nu, &carrier).expect("strictly unital");
    SplitUnitAlgebra::new(carrier, mu_bar, h, max_arity).expect("Koszul complexes are A-infinity")
}

/// Random valid nonunital structure: a complex plus zero higher products.
pub fn random_dg_structure(
    rng: &mut StdRng,
    ring: &RingSpec,
    module: &GradedModule,
    max_arity: usize,
) -> Cochain {
    let d = random_differential(rng, ring, module);
    let mut nu = Cochain::zero(ring.clone(), module.clone(), module.clone(), -1, max_arity);
    for l in module.labels() {
        let img = d.image_of(l).expect("own label");
        if img.is_zero() {
            continue;
        }
        let mut shifted = GradedElement::zero();
        for (tl, c) in img.terms() {
            shifted
                .add_term(tl.clone(), c.clone(), module.degree_of(tl).expect("own label") + 1)
                .expect("homogeneous");
        }
        nu.set_component(1, vec![l.clone()], shifted).expect("degree -1");
    }
    debug_assert!(ainf::check_stasheff(&nu, max_arity).expect("well typed").is_empty());
    nu
}
