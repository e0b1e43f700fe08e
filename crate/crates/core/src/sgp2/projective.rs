//! Discrete free 2-groups, their lifting property, and projective presentations.

use super::invariants::{canonical_h, dis, dis_hom, is_essentially_surjective, pi0, pi0_hom, pi1};
use super::morphism::{check_2morphism, ChainMap, Complex, Homotopy};
use crate::abgroup::{free_cover, lift_free, solve_preimage, AbGroup, AbHom};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Int;

/// `pi1 = 0`, `delta = 0` and `pi0` torsion free: `P` is `dis` of a free group.
pub fn is_discrete_free<T: Int>(p: &Complex<T>) -> bool {
    p.delta().is_zero_map() && pi1(p).is_trivial() && pi0(p).0.is_free()
}

/// Solves the lifting problem against an essentially surjective `f: A -> B`:
/// returns `G': P -> A` and `h: F ∘ G' => G`.
///
/// Works one canonical free generator `e` of `P.c0` at a time: lift the class
/// of `G(e)` through `pi0(F)`, take the representative object of that class,
/// then solve for the morphism of `B` connecting its image to `G(e)`.
pub fn lift_discrete_free<T: Int>(g: &ChainMap<T>, f: &ChainMap<T>) -> Result<(ChainMap<T>, Homotopy<T>)> {
    let (p, a, b) = (g.src(), f.src(), f.dst());
    if g.dst() != b {
        return Err(Error::Endpoints("G and F must share their codomain".into()));
    }
    if !is_discrete_free(p) {
        return Err(Error::NotDiscreteFree);
    }
    if !is_essentially_surjective(f) {
        return Err(Error::NotEssentiallySurjective);
    }

    let canon = p.c0().canonical();
    let basis = AbGroup::free(canon.len());
    let (pi0_b, _) = pi0(b);
    let (_, proj_a) = pi0(a);
    let g_on_basis = g.f0().matrix().mul(&canon.from);
    let g_classes = AbHom::new(basis, pi0_b, g_on_basis.clone())?;
    let lifted = lift_free(&g_classes, &pi0_hom(f))?;

    let mut objects = Vec::with_capacity(canon.len());
    let mut witnesses = Vec::with_capacity(canon.len());
    for i in 0..canon.len() {
        let obj = solve_preimage(&proj_a, &lifted.image_of_generator(i))?;
        let target = g_on_basis.column(i);
        let gap: Vec<T> = target.iter().zip(f.f0().apply(&obj)).map(|(x, y)| x.clone() - y).collect();
        witnesses.push(solve_preimage(b.delta(), &gap)?);
        objects.push(obj);
    }

    let level0 = Matrix::from_columns(a.c0().gens(), &objects).mul(&canon.to);
    let level1 = AbHom::zero(p.c1().clone(), a.c1().clone());
    let g_prime = ChainMap::new(p.clone(), a.clone(), level1, AbHom::new(p.c0().clone(), a.c0().clone(), level0)?)?;
    let t = Matrix::from_columns(b.c1().gens(), &witnesses).mul(&canon.to);
    let t = AbHom::new(p.c0().clone(), b.c1().clone(), t)?;
    let h = Homotopy::new(f.compose(&g_prime)?, g.clone(), t)?;
    debug_assert!(check_2morphism(&h));
    Ok((g_prime, h))
}

#[derive(Clone, Debug)]
pub struct PresentationCert<T: Int> {
    pub p_discrete_free: bool,
    pub f_essentially_surjective: bool,
    /// `H ∘ F` equals `dis(cover)` on the nose, so the identity 2-morphism
    /// witnesses the triangle.
    pub triangle_strict: bool,
    pub cover: AbHom<T>,
    pub triangle: Homotopy<T>,
}

impl<T: Int> PresentationCert<T> {
    pub fn holds(&self) -> bool {
        self.p_discrete_free && self.f_essentially_surjective && self.triangle_strict
    }
}

/// `F: dis(Z^k) -> A` essentially surjective, `k` the number of canonical
/// generators of `pi0(A)`.
pub fn projective_presentation<T: Int>(a: &Complex<T>) -> Result<(Complex<T>, ChainMap<T>, PresentationCert<T>)> {
    let (g, proj) = pi0(a);
    let (free, cover) = free_cover(&g);
    let p = dis(&free);
    let objects =
        (0..free.gens()).map(|i| solve_preimage(&proj, &cover.image_of_generator(i))).collect::<Result<Vec<_>>>()?;
    let f0 = AbHom::from_images(free.clone(), a.c0().clone(), &objects)?;
    let f1 = AbHom::zero(p.c1().clone(), a.c1().clone());
    let f = ChainMap::new(p.clone(), a.clone(), f1, f0)?;

    let composite = canonical_h(a).compose(&f)?;
    let discrete_cover = dis_hom(&cover);
    let triangle = Homotopy::identity(&composite);
    let triangle_strict = composite.equals(&discrete_cover) && {
        let h = Homotopy::new(composite.clone(), discrete_cover, triangle.t().clone())?;
        check_2morphism(&h)
    };
    let cert = PresentationCert {
        p_discrete_free: is_discrete_free(&p),
        f_essentially_surjective: is_essentially_surjective(&f),
        triangle_strict,
        cover,
        triangle,
    };
    Ok((p, f, cert))
}
