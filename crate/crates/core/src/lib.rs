//! Exact-arithmetic calculus for strictly unital A-infinity algebras.
//!
//! Everything is computed over an exact commutative base ring (`Z`, `Q`,
//! `Z/m`, or dual numbers over one of these); there is no floating point
//! anywhere. Graded modules are finite rank and free with labeled bases,
//! and all operators are arity-truncated at a user-chosen bound `N`. The
//! implemented identities are arity-lower-triangular, so every verdict
//! "valid up to arity N" is exact, not approximate.
//!
//! The layers, bottom up:
//!
//! * [`scalar`], [`graded`], [`tensor`] — exact scalars, graded modules and
//!   maps, tensor words, and the Koszul sign engine all other modules use.
//! * [`cochain`] — the Hochschild cochain calculus: Gerstenhaber product and
//!   bracket, the coderivation and coalgebra-morphism correspondences, the
//!   star product, and `ad ξ` for curvature functionals.
//! * [`ainf`] — A-infinity structures, morphisms, the bar construction, and
//!   the `m ↔ ν` conversion.
//! * [`unital`] — split units, the trivial structure `μ_su`, Maurer-Cartan
//!   characterization of strictly unital structures, and the curved bar
//!   construction.
//! * [`rep`], [`comodule`] — representations as adjoint families, Shamash
//!   systems, cofree (curved) comodules, and matrix factorizations.
//! * [`deform`] — first-order (dual-number) deformation theory.
//! * [`json`], [`gen`] — file schemas and seeded random generators.
//!
//! ```
//! use ainfty::unital::{check_curved_coalgebra, curved_bar, koszul_build};
//! use ainfty::RingSpec;
//!
//! // the Koszul complex on 3 ∈ Z, truncated at arity 6
//! let alg = koszul_build(&RingSpec::Integers.from_i64(3), 6)?;
//! assert!(alg.mu_bar.is_zero());
//!
//! // its curved bar construction has zero coderivation and curvature
//! // ξ(T) = -3 on the degree-2 generator, with d² = ad ξ and ξd = 0
//! let bar = curved_bar(&alg)?;
//! assert_eq!(bar.xi.eval_word(&["e".into()])?.to_string(), "-3");
//! assert!(check_curved_coalgebra(&bar)?.is_empty());
//! # Ok::<(), ainfty::Error>(())
//! ```

pub mod ainf;
pub mod cochain;
pub mod comodule;
pub mod deform;
pub mod error;
pub mod gen;
pub mod graded;
pub mod json;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod unital;

pub use ainf::{AInfinityMorphism, AInfinityStructure, BarConstruction, MFamily};
pub use cochain::{Cochain, CounitalCochain, CurvatureMap, TcoElement};
pub use comodule::{CofreeComodule, ComoduleCoderivation, MatrixFactorization};
pub use deform::{DualScalar, FirstOrderDeformation};
pub use error::{Error, Result};
pub use graded::{GradedElement, GradedMap, GradedModule, ShiftedModule};
pub use rep::{AdjointFamily, EndValuedCochain, RepMorphismFamily, ShamashSystem};
pub use report::{Report, Violation};
pub use scalar::{RingSpec, Scalar};
pub use tensor::{ShiftedTensor, TensorElement, Word};
pub use unital::{CurvedCoalgebra, CurvedMorphism, SplitUnitAlgebra, SplitUnitModule};
