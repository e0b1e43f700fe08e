//! Symmetric 2-groups presented by 2-term complexes `delta: C1 -> C0`.
//!
//! The groupoid modeled by a complex has the elements of `C0` as objects and
//! `x -> y` morphisms the `c` in `C1` with `y = x + delta(c)`; tensor is
//! addition. 1-morphisms are strict chain maps, 2-morphisms additive
//! homotopies. With these, `pi0 = coker(delta)` and `pi1 = ker(delta)`, and
//! faithfulness, fullness and essential surjectivity reduce to injectivity and
//! surjectivity of the induced maps on `pi0` and `pi1`.

mod exact;
mod invariants;
mod limits;
mod morphism;
mod projective;

pub use exact::{is_2exact, is_extension, two_exactness_witnesses, ExtensionReport, TwoExactnessCert};
pub use invariants::{
    canonical_h, dis, dis_hom, is_essentially_surjective, is_faithful, is_full, pi0, pi0_hom, pi1, pi1_hom,
    pi1_with_inclusion,
};
pub use limits::{cokernel2, kernel2, Cokernel2, Kernel2};
pub use morphism::{check_2morphism, ChainMap, Complex, Homotopy};
pub use projective::{is_discrete_free, lift_discrete_free, projective_presentation, PresentationCert};
