//! Kernels and cokernels of chain maps, as truncated mapping cones.

use super::morphism::{ChainMap, Complex, Homotopy};
use crate::abgroup::{kernel, AbHom};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::scalar::Int;

#[derive(Clone, Debug)]
pub struct Kernel2<T: Int> {
    pub complex: Complex<T>,
    pub incl: ChainMap<T>,
    /// `F ∘ incl => 0`
    pub eps: Homotopy<T>,
    /// Degree-0 group of the kernel as a subgroup of `src.c0 + dst.c1`.
    pub pairs: AbHom<T>,
}

#[derive(Clone, Debug)]
pub struct Cokernel2<T: Int> {
    pub complex: Complex<T>,
    pub proj: ChainMap<T>,
    /// `proj ∘ F => 0`
    pub pi: Homotopy<T>,
}

/// `K0 = {(a0, b1) : f0(a0) + delta'(b1) = 0}`, `K1 = src.c1`,
/// `delta_K(a1) = (delta(a1), -f1(a1))`.
pub fn kernel2<T: Int>(f: &ChainMap<T>) -> Result<Kernel2<T>> {
    let (a, b) = (f.src(), f.dst());
    let constraint = AbHom::copair(f.f0(), b.delta())?;
    let (_, pairs) = kernel(&constraint);
    let boundary = AbHom::pair(a.delta(), &f.f1().neg())?;
    let delta_k = boundary.factor_through_injection(&pairs)?;
    let k = Complex::new(delta_k);

    let first = AbHom::project_first(a.c0(), b.c1()).compose(&pairs)?;
    let incl = ChainMap::new(k.clone(), a.clone(), AbHom::identity(a.c1().clone()), first)?;
    let second = AbHom::project_second(a.c0(), b.c1()).compose(&pairs)?;
    let eps = Homotopy::to_zero(&f.compose(&incl)?, second)?;
    debug_assert!(super::check_2morphism(&eps));
    Ok(Kernel2 { complex: k, incl, eps, pairs })
}

/// `Q0 = dst.c0`, `Q1 = (dst.c1 + src.c0) / <(f1(a1), -delta(a1))>`,
/// `delta_Q(b1, a0) = delta'(b1) + f0(a0)`.
pub fn cokernel2<T: Int>(f: &ChainMap<T>) -> Result<Cokernel2<T>> {
    let (a, b) = (f.src(), f.dst());
    let relators = AbHom::pair(f.f1(), &a.delta().neg())?;
    let q1 = b.c1().direct_sum(a.c0()).with_relations(&relators.matrix().transpose())?;
    let delta_q = AbHom::new(q1.clone(), b.c0().clone(), b.delta().matrix().hstack(f.f0().matrix()))?;
    let q = Complex::new(delta_q);

    let (n1, n0) = (b.c1().gens(), a.c0().gens());
    let level1 = Matrix::identity(n1).vstack(&Matrix::zeros(n0, n1));
    let proj = ChainMap::new(
        b.clone(),
        q.clone(),
        AbHom::new(b.c1().clone(), q1.clone(), level1)?,
        AbHom::identity(b.c0().clone()),
    )?;
    let t = AbHom::new(a.c0().clone(), q1, Matrix::zeros(n1, n0).vstack(&Matrix::identity(n0).neg()))?;
    let pi = Homotopy::to_zero(&proj.compose(f)?, t)?;
    debug_assert!(super::check_2morphism(&pi));
    Ok(Cokernel2 { complex: q, proj, pi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::AbGroup;
    use crate::sgp2::{check_2morphism, dis, dis_hom, is_essentially_surjective, is_faithful, pi0, pi1};
    use num_bigint::BigInt;

    type G = AbGroup<BigInt>;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let a = Complex::new(AbHom::new(G::free(1), G::cyclic(b(4)), Matrix::from_i64(&[&[2]])).unwrap());
        let k = kernel2(&ChainMap::identity(&a)).unwrap();
        assert!(pi0(&k.complex).0.is_trivial());
        assert!(pi1(&k.complex).is_trivial());
        assert!(is_faithful(&k.incl));
        assert!(check_2morphism(&k.eps));
    }

    #[test]
    fn kernel_of_reduction() {
        let red = AbHom::new(G::free(1), G::cyclic(b(2)), Matrix::from_i64(&[&[1]])).unwrap();
        let k = kernel2(&dis_hom(&red)).unwrap();
        let p0 = pi0(&k.complex).0;
        assert_eq!((p0.free_rank(), p0.invariant_factors().len()), (1, 0));
        assert!(pi1(&k.complex).is_trivial());
    }

    #[test]
    fn kernel_of_zero_map() {
        let d = dis(&G::cyclic(b(2)));
        let k = kernel2(&ChainMap::zero(&d, &d)).unwrap();
        assert_eq!(pi0(&k.complex).0.invariant_factors(), &[b(2)]);
        assert!(pi1(&k.complex).is_trivial());
    }

    #[test]
    fn cokernel_examples() {
        let a = Complex::new(AbHom::new(G::free(1), G::cyclic(b(4)), Matrix::from_i64(&[&[2]])).unwrap());
        let q = cokernel2(&ChainMap::identity(&a)).unwrap();
        assert!(pi0(&q.complex).0.is_trivial());
        assert!(pi1(&q.complex).is_trivial());

        let two = AbHom::new(G::free(1), G::free(1), Matrix::from_i64(&[&[2]])).unwrap();
        let q = cokernel2(&dis_hom(&two)).unwrap();
        assert_eq!(pi0(&q.complex).0.invariant_factors(), &[b(2)]);
        assert!(is_essentially_surjective(&q.proj));
        assert!(check_2morphism(&q.pi));

        let d = dis(&G::cyclic(b(3)));
        let q = cokernel2(&ChainMap::zero(&d, &d)).unwrap();
        assert_eq!(pi0(&q.complex).0.invariant_factors(), &[b(3)]);
        assert_eq!(pi1(&q.complex).invariant_factors(), &[b(3)]);
    }
}
