//! 2-exactness and extensions of symmetric 2-groups.

use super::invariants::{is_essentially_surjective, is_faithful, is_full};
use super::limits::{cokernel2, kernel2, Cokernel2, Kernel2};
use super::morphism::{check_2morphism, ChainMap, Homotopy};
use crate::abgroup::AbHom;
use crate::error::{Error, Result};
use crate::scalar::Int;

/// Comparison maps `Γ0: A -> Ker Σ` and `Σ0: Coker Γ -> C` with their verdicts.
#[derive(Clone, Debug)]
pub struct TwoExactnessCert<T: Int> {
    pub kernel: Kernel2<T>,
    pub cokernel: Cokernel2<T>,
    pub gamma0: ChainMap<T>,
    pub sigma0: ChainMap<T>,
    pub gamma0_full: bool,
    pub gamma0_essentially_surjective: bool,
    pub gamma0_faithful: bool,
    pub sigma0_full: bool,
    pub sigma0_faithful: bool,
    pub sigma0_essentially_surjective: bool,
}

impl<T: Int> TwoExactnessCert<T> {
    /// `Γ0` full and essentially surjective.
    pub fn condition1(&self) -> bool {
        self.gamma0_full && self.gamma0_essentially_surjective
    }

    /// `Σ0` full and faithful.
    pub fn condition2(&self) -> bool {
        self.sigma0_full && self.sigma0_faithful
    }

    pub fn gamma0_equivalence(&self) -> bool {
        self.gamma0_full && self.gamma0_faithful && self.gamma0_essentially_surjective
    }

    pub fn sigma0_equivalence(&self) -> bool {
        self.sigma0_full && self.sigma0_faithful && self.sigma0_essentially_surjective
    }

    /// True when the stored flags match a fresh evaluation of the stored maps.
    pub fn is_consistent(&self) -> bool {
        self.gamma0_full == is_full(&self.gamma0)
            && self.gamma0_essentially_surjective == is_essentially_surjective(&self.gamma0)
            && self.gamma0_faithful == is_faithful(&self.gamma0)
            && self.sigma0_full == is_full(&self.sigma0)
            && self.sigma0_faithful == is_faithful(&self.sigma0)
            && self.sigma0_essentially_surjective == is_essentially_surjective(&self.sigma0)
    }
}

fn validate_null_homotopy<T: Int>(gamma: &ChainMap<T>, sigma: &ChainMap<T>, phi: &Homotopy<T>) -> Result<()> {
    let composite = sigma.compose(gamma)?;
    let parallel = phi.src().src() == composite.src() && phi.src().dst() == composite.dst();
    if !parallel
        || !phi.src().equals(&composite)
        || !phi.dst().equals(&ChainMap::zero(composite.src(), composite.dst()))
        || !check_2morphism(phi)
    {
        return Err(Error::InvalidNullHomotopy);
    }
    Ok(())
}

pub fn two_exactness_witnesses<T: Int>(
    gamma: &ChainMap<T>,
    sigma: &ChainMap<T>,
    phi: &Homotopy<T>,
) -> Result<TwoExactnessCert<T>> {
    validate_null_homotopy(gamma, sigma, phi)?;
    let (a, c) = (gamma.src(), sigma.dst());

    // Γ0: a0 -> (γ0(a0), φ(a0)) on objects, γ1 on morphisms.
    let kernel = kernel2(sigma)?;
    let level0 = AbHom::pair(gamma.f0(), phi.t())?.factor_through_injection(&kernel.pairs)?;
    let gamma0 = ChainMap::new(a.clone(), kernel.complex.clone(), gamma.f1().clone(), level0)?;

    // Σ0: σ0 on objects, (b1, a0) -> σ1(b1) - φ(a0) on morphisms.
    let cokernel = cokernel2(gamma)?;
    let q1 = cokernel.complex.c1().clone();
    let level1 = AbHom::new(q1, c.c1().clone(), sigma.f1().matrix().hstack(&phi.t().matrix().neg()))?;
    let sigma0 = ChainMap::new(cokernel.complex.clone(), c.clone(), level1, sigma.f0().clone())?;

    Ok(TwoExactnessCert {
        gamma0_full: is_full(&gamma0),
        gamma0_essentially_surjective: is_essentially_surjective(&gamma0),
        gamma0_faithful: is_faithful(&gamma0),
        sigma0_full: is_full(&sigma0),
        sigma0_faithful: is_faithful(&sigma0),
        sigma0_essentially_surjective: is_essentially_surjective(&sigma0),
        kernel,
        cokernel,
        gamma0,
        sigma0,
    })
}

/// Evaluates condition 1 (`Γ0` full and essentially surjective); debug builds
/// also assert that condition 2 (`Σ0` full and faithful) agrees.
pub fn is_2exact<T: Int>(gamma: &ChainMap<T>, sigma: &ChainMap<T>, phi: &Homotopy<T>) -> Result<bool> {
    let cert = two_exactness_witnesses(gamma, sigma, phi)?;
    debug_assert_eq!(cert.condition1(), cert.condition2(), "2-exactness conditions disagree");
    Ok(cert.condition1())
}

/// The three equivalent characterisations of an extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    /// 2-exact, `Γ` faithful, `Σ` essentially surjective.
    pub condition1: bool,
    /// `Γ0` an equivalence, `Σ` essentially surjective.
    pub condition2: bool,
    /// `Γ` faithful, `Σ0` an equivalence.
    pub condition3: bool,
}

impl ExtensionReport {
    pub fn agree(&self) -> bool {
        self.condition1 == self.condition2 && self.condition2 == self.condition3
    }
}

pub fn is_extension<T: Int>(gamma: &ChainMap<T>, sigma: &ChainMap<T>, phi: &Homotopy<T>) -> Result<ExtensionReport> {
    let cert = two_exactness_witnesses(gamma, sigma, phi)?;
    let faithful = is_faithful(gamma);
    let ess_surj = is_essentially_surjective(sigma);
    let report = ExtensionReport {
        condition1: cert.condition1() && faithful && ess_surj,
        condition2: cert.gamma0_equivalence() && ess_surj,
        condition3: faithful && cert.sigma0_equivalence(),
    };
    debug_assert!(report.agree(), "extension conditions disagree: {report:?}");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::AbGroup;
    use crate::matrix::Matrix;
    use crate::sgp2::{dis, dis_hom, Complex};
    use num_bigint::BigInt;

    type G = AbGroup<BigInt>;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn null(gamma: &ChainMap<BigInt>, sigma: &ChainMap<BigInt>) -> Homotopy<BigInt> {
        let comp = sigma.compose(gamma).unwrap();
        let t = AbHom::zero(comp.src().c0().clone(), comp.dst().c1().clone());
        Homotopy::to_zero(&comp, t).unwrap()
    }

    fn times_two_then_reduce() -> (ChainMap<BigInt>, ChainMap<BigInt>) {
        let two = AbHom::new(G::free(1), G::free(1), Matrix::from_i64(&[&[2]])).unwrap();
        let red = AbHom::new(G::free(1), G::cyclic(b(2)), Matrix::from_i64(&[&[1]])).unwrap();
        (dis_hom(&two), dis_hom(&red))
    }

    #[test]
    fn short_exact_sequence_is_extension() {
        let (g, s) = times_two_then_reduce();
        let phi = null(&g, &s);
        assert!(is_2exact(&g, &s, &phi).unwrap());
        let r = is_extension(&g, &s, &phi).unwrap();
        assert!(r.condition1 && r.agree());
    }

    #[test]
    fn kernel_and_cokernel_sequences_are_exact() {
        let a = Complex::new(AbHom::new(G::free(2), G::cyclic(b(6)), Matrix::from_i64(&[&[2, 3]])).unwrap());
        let c = dis(&G::cyclic(b(3)));
        let f0 = AbHom::new(G::cyclic(b(6)), G::cyclic(b(3)), Matrix::from_i64(&[&[1]])).unwrap();
        let f1 = AbHom::zero(a.c1().clone(), G::zero());
        // f0 ∘ delta = (2, 3) mod 3 = (2, 0) is nonzero, so this is not a chain map.
        assert_eq!(ChainMap::new(a.clone(), c.clone(), f1, f0).unwrap_err(), Error::NotChainMap);

        let sigma = crate::sgp2::canonical_h(&a);
        let k = kernel2(&sigma).unwrap();
        let cert = two_exactness_witnesses(&k.incl, &sigma, &k.eps).unwrap();
        assert!(cert.gamma0_full && cert.gamma0_essentially_surjective);
        assert!(cert.is_consistent());

        let q = cokernel2(&sigma).unwrap();
        let cert = two_exactness_witnesses(&sigma, &q.proj, &q.pi).unwrap();
        assert!(cert.sigma0_full && cert.sigma0_faithful);
    }

    #[test]
    fn zero_maps_are_not_exact() {
        let d = dis(&G::cyclic(b(2)));
        let z = ChainMap::zero(&d, &d);
        let phi = null(&z, &z);
        let cert = two_exactness_witnesses(&z, &z, &phi).unwrap();
        assert!(!cert.gamma0_essentially_surjective);
        assert!(!is_2exact(&z, &z, &phi).unwrap());
    }

    #[test]
    fn trivial_extension_of_zero() {
        let bg = dis(&G::cyclic(b(5)));
        let zero = dis(&G::zero());
        let gamma = ChainMap::zero(&zero, &bg);
        let sigma = ChainMap::identity(&bg);
        let phi = null(&gamma, &sigma);
        assert!(is_extension(&gamma, &sigma, &phi).unwrap().condition1);
    }

    #[test]
    fn identity_composite_is_rejected() {
        let bg = dis(&G::cyclic(b(5)));
        let id = ChainMap::identity(&bg);
        let phi = null(&id, &id);
        assert_eq!(is_extension(&id, &id, &phi), Err(Error::InvalidNullHomotopy));

        let zero = dis(&G::zero());
        let id0 = ChainMap::identity(&zero);
        let phi0 = null(&id0, &id0);
        assert!(is_extension(&id0, &id0, &phi0).unwrap().condition1);
    }
}
