use super::morphism::{ChainMap, Complex};
use crate::abgroup::{cokernel, kernel, AbGroup, AbHom};
use crate::scalar::Int;

/// `G_dis`: the complex `0 -> G`.
pub fn dis<T: Int>(g: &AbGroup<T>) -> Complex<T> {
    Complex::new(AbHom::zero(AbGroup::zero(), g.clone()))
}

/// `f_dis: dis(src) -> dis(dst)`.
pub fn dis_hom<T: Int>(f: &AbHom<T>) -> ChainMap<T> {
    let src = dis(f.src());
    let dst = dis(f.dst());
    let f1 = AbHom::zero(AbGroup::zero(), AbGroup::zero());
    ChainMap::new_unchecked(src, dst, f1, f.clone())
}

/// Isomorphism classes of objects, with the quotient map from `c0`.
pub fn pi0<T: Int>(a: &Complex<T>) -> (AbGroup<T>, AbHom<T>) {
    cokernel(a.delta())
}

/// Automorphisms of the unit object.
pub fn pi1<T: Int>(a: &Complex<T>) -> AbGroup<T> {
    kernel(a.delta()).0
}

pub fn pi1_with_inclusion<T: Int>(a: &Complex<T>) -> (AbGroup<T>, AbHom<T>) {
    kernel(a.delta())
}

/// `[x] -> [f0(x)]`. The quotient maps are identities on generators, so the
/// induced map has the same matrix as `f0`.
pub fn pi0_hom<T: Int>(f: &ChainMap<T>) -> AbHom<T> {
    let (src, _) = pi0(f.src());
    let (dst, _) = pi0(f.dst());
    AbHom::new(src, dst, f.f0().matrix().clone()).expect("chain maps descend to pi0")
}

/// Restriction of `f1` to the kernels of the differentials.
pub fn pi1_hom<T: Int>(f: &ChainMap<T>) -> AbHom<T> {
    let (_, incl_src) = pi1_with_inclusion(f.src());
    let (_, incl_dst) = pi1_with_inclusion(f.dst());
    f.f1()
        .compose(&incl_src)
        .and_then(|g| g.factor_through_injection(&incl_dst))
        .expect("chain maps preserve the kernel of delta")
}

pub fn is_faithful<T: Int>(f: &ChainMap<T>) -> bool {
    pi1_hom(f).is_injective()
}

pub fn is_full<T: Int>(f: &ChainMap<T>) -> bool {
    pi1_hom(f).is_surjective() && pi0_hom(f).is_injective()
}

pub fn is_essentially_surjective<T: Int>(f: &ChainMap<T>) -> bool {
    pi0_hom(f).is_surjective()
}

/// `H: A -> dis(pi0(A))`, sending an object to its class.
pub fn canonical_h<T: Int>(a: &Complex<T>) -> ChainMap<T> {
    let (g, proj) = pi0(a);
    let f1 = AbHom::zero(a.c1().clone(), AbGroup::zero());
    let h = ChainMap::new_unchecked(a.clone(), dis(&g), f1, proj);
    debug_assert!(is_full(&h) && is_essentially_surjective(&h));
    h
}
