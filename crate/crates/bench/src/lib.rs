//! Shared fixtures for the criterion benchmarks.

use ainfty::gen;
use ainfty::graded::GradedModule;
use ainfty::unital::{koszul_build, SplitUnitAlgebra};
use ainfty::{Cochain, RingSpec};
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn rank2_module() -> GradedModule {
    GradedModule::from_labels(&[("a", 0), ("b", 1)]).expect("fresh labels")
}

pub fn random_structure_pair(max_arity: usize) -> (Cochain, Cochain) {
    let ring = RingSpec::integers_mod(5).expect("modulus 5");
    let m = rank2_module();
    let mut rng = StdRng::seed_from_u64(1);
    let f = gen::random_cochain(&mut rng, &ring, &m, &m, -1, max_arity, 0.5);
    let g = gen::random_cochain(&mut rng, &ring, &m, &m, -1, max_arity, 0.5);
    (f, g)
}

pub fn koszul_algebra(max_arity: usize) -> SplitUnitAlgebra {
    koszul_build(&RingSpec::Integers.from_i64(6), max_arity).expect("Koszul complex")
}
