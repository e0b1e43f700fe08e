use super::module::{FinMod, ModHom};
use super::ring::FinRing;
use super::{invalid, restrict_table};
use crate::error::{Error, Result};

/// 2-term complex `delta: m1 -> m0` of finite modules over one ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mod2 {
    delta: ModHom,
}

impl Mod2 {
    pub fn new(delta: ModHom) -> Self {
        Mod2 { delta }
    }

    pub fn from_tables(m1: FinMod, m0: FinMod, delta: Vec<usize>) -> Result<Self> {
        Ok(Mod2 { delta: ModHom::new(m1, m0, delta)? })
    }

    pub fn ring(&self) -> &FinRing {
        self.delta.src().ring()
    }

    pub fn m1(&self) -> &FinMod {
        self.delta.src()
    }

    pub fn m0(&self) -> &FinMod {
        self.delta.dst()
    }

    pub fn delta(&self) -> &ModHom {
        &self.delta
    }
}

/// Strict level-wise morphism of 2-modules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mod2Hom {
    src: Mod2,
    dst: Mod2,
    f1: ModHom,
    f0: ModHom,
}

impl Mod2Hom {
    pub fn new(src: Mod2, dst: Mod2, f1: ModHom, f0: ModHom) -> Result<Self> {
        if f1.src() != src.m1() || f1.dst() != dst.m1() || f0.src() != src.m0() || f0.dst() != dst.m0() {
            return Err(Error::Endpoints("2-module hom levels".into()));
        }
        if (0..src.m1().size()).any(|x| f0.apply(src.delta().apply(x)) != dst.delta().apply(f1.apply(x))) {
            return Err(Error::NotChainMap);
        }
        Ok(Mod2Hom { src, dst, f1, f0 })
    }

    pub fn from_tables(src: Mod2, dst: Mod2, f1: Vec<usize>, f0: Vec<usize>) -> Result<Self> {
        let f1 = ModHom::new(src.m1().clone(), dst.m1().clone(), f1)?;
        let f0 = ModHom::new(src.m0().clone(), dst.m0().clone(), f0)?;
        Mod2Hom::new(src, dst, f1, f0)
    }

    pub fn identity(m: &Mod2) -> Self {
        Mod2Hom { src: m.clone(), dst: m.clone(), f1: ModHom::identity(m.m1()), f0: ModHom::identity(m.m0()) }
    }

    pub fn zero(src: &Mod2, dst: &Mod2) -> Self {
        Mod2Hom {
            src: src.clone(),
            dst: dst.clone(),
            f1: ModHom::zero(src.m1(), dst.m1()),
            f0: ModHom::zero(src.m0(), dst.m0()),
        }
    }

    pub fn src(&self) -> &Mod2 {
        &self.src
    }

    pub fn dst(&self) -> &Mod2 {
        &self.dst
    }

    pub fn f1(&self) -> &ModHom {
        &self.f1
    }

    pub fn f0(&self) -> &ModHom {
        &self.f0
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Mod2Hom) -> Result<Mod2Hom> {
        Ok(Mod2Hom {
            src: inner.src.clone(),
            dst: self.dst.clone(),
            f1: self.f1.compose(&inner.f1)?,
            f0: self.f0.compose(&inner.f0)?,
        })
    }
}

/// `t: F => G` with `g0 = f0 + delta' ∘ t` and `t ∘ delta = g1 - f1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModHomotopy {
    src: Mod2Hom,
    dst: Mod2Hom,
    t: ModHom,
}

impl ModHomotopy {
    pub fn new(src: Mod2Hom, dst: Mod2Hom, t: ModHom) -> Result<Self> {
        if src.src != dst.src || src.dst != dst.dst {
            return Err(Error::Endpoints("homotopy between non-parallel maps".into()));
        }
        if t.src() != src.src.m0() || t.dst() != src.dst.m1() {
            return Err(Error::Endpoints("homotopy must map src.m0 to dst.m1".into()));
        }
        Ok(ModHomotopy { src, dst, t })
    }

    pub fn src(&self) -> &Mod2Hom {
        &self.src
    }

    pub fn dst(&self) -> &Mod2Hom {
        &self.dst
    }

    pub fn t(&self) -> &ModHom {
        &self.t
    }
}

pub fn check_mod_2morphism(h: &ModHomotopy) -> bool {
    let (f, g, t) = (&h.src, &h.dst, &h.t);
    let (a, b) = (&f.src, &f.dst);
    let objects = (0..a.m0().size()).all(|x| g.f0.apply(x) == b.m0().add(f.f0.apply(x), b.delta().apply(t.apply(x))));
    objects && (0..a.m1().size()).all(|y| t.apply(a.delta().apply(y)) == b.m1().sub(g.f1.apply(y), f.f1.apply(y)))
}

pub(crate) fn image_mask(f: &ModHom) -> Vec<bool> {
    let mut mask = vec![false; f.dst().size()];
    f.map().iter().for_each(|&y| mask[y] = true);
    mask
}

/// `m0 / image(delta)` with its projection; the quotient's module axioms are re-checked.
pub fn pi0_module_with_projection(m: &Mod2) -> Result<(FinMod, ModHom)> {
    m.m0().quotient(&image_mask(m.delta()))
}

pub fn pi0_module(m: &Mod2) -> Result<FinMod> {
    pi0_module_with_projection(m).map(|(q, _)| q)
}

/// `ker(delta)` with the restricted action.
pub fn pi1_module(m: &Mod2) -> Result<FinMod> {
    let m1 = m.m1();
    let zero = m.m0().zero();
    let members: Vec<usize> = (0..m1.size()).filter(|&x| m.delta().apply(x) == zero).collect();
    let mut pos = vec![usize::MAX; m1.size()];
    members.iter().enumerate().for_each(|(i, &x)| pos[x] = i);
    let ring_rows: Vec<usize> = (0..m.ring().size()).collect();
    let add = restrict_table(m1.add_table(), &members, &members, &pos);
    let act = restrict_table(m1.act_table(), &ring_rows, &members, &pos);
    FinMod::new(m.ring().clone(), members.len(), add, act)
}

/// `N_dis`: `0 -> N`.
pub fn dis_module(n: &FinMod) -> Mod2 {
    Mod2::new(ModHom::zero(&FinMod::zero_module(n.ring()), n))
}

pub fn dis_module_hom(f: &ModHom) -> Mod2Hom {
    let (src, dst) = (dis_module(f.src()), dis_module(f.dst()));
    let f1 = ModHom::zero(src.m1(), dst.m1());
    Mod2Hom { src, dst, f1, f0: f.clone() }
}

/// Induced map `[m] -> [f0(m)]` on `pi0`.
pub fn pi0_module_hom(f: &Mod2Hom) -> Result<ModHom> {
    let (q_src, proj_src) = pi0_module_with_projection(f.src())?;
    let (q_dst, proj_dst) = pi0_module_with_projection(f.dst())?;
    let reps = f.src().m0().coset_representatives(&image_mask(f.src().delta()));
    let map = reps.iter().map(|&r| proj_dst.apply(f.f0().apply(r))).collect();
    debug_assert!((0..f.src().m0().size())
        .all(|x| proj_dst.apply(f.f0().apply(x)) == proj_dst.apply(f.f0().apply(reps[proj_src.apply(x)]))));
    ModHom::new(q_src, q_dst, map)
}

/// Every object of the target is isomorphic to an image object.
pub fn is_mod_essentially_surjective(f: &Mod2Hom) -> bool {
    let b = f.dst();
    let mut reached = vec![false; b.m0().size()];
    for x in 0..f.src().m0().size() {
        let fx = f.f0().apply(x);
        for c in 0..b.m1().size() {
            reached[b.m0().add(fx, b.delta().apply(c))] = true;
        }
    }
    reached.into_iter().all(|r| r)
}

/// `H: M -> dis(pi0(M))`, sending an object to its class.
pub fn canonical_quotient_mod(m: &Mod2) -> Result<Mod2Hom> {
    let (q, proj) = pi0_module_with_projection(m)?;
    let dst = dis_module(&q);
    let f1 = ModHom::zero(m.m1(), dst.m1());
    Mod2Hom::new(m.clone(), dst, f1, proj)
}

pub(crate) fn require_same_target(g: &Mod2Hom, f: &Mod2Hom) -> Result<()> {
    if g.dst() != f.dst() {
        return invalid("G and F must share their codomain");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FinRing {
        FinRing::zmod(2)
    }

    #[test]
    fn pi_modules() {
        let r = FinRing::zmod(4);
        let n = FinMod::regular(&r);
        let d = dis_module(&n);
        assert_eq!(pi0_module(&d).unwrap(), n);
        assert_eq!(pi1_module(&d).unwrap().size(), 1);

        let id = Mod2::new(ModHom::identity(&n));
        assert_eq!(pi0_module(&id).unwrap().size(), 1);
        assert_eq!(pi1_module(&id).unwrap().size(), 1);

        // Z/2 -> (Z/2)^2, m -> (m, 0); (1, 0) sits at index 2.
        let f = FinMod::free(&z2(), 2);
        let m = Mod2::from_tables(FinMod::regular(&z2()), f, vec![0, 2]).unwrap();
        assert_eq!(pi0_module(&m).unwrap(), FinMod::regular(&z2()));
        assert_eq!(pi1_module(&m).unwrap().size(), 1);

        let zero = Mod2::from_tables(n.clone(), n.clone(), vec![0; 4]).unwrap();
        assert_eq!(pi1_module(&zero).unwrap(), n);
    }

    #[test]
    fn double_dis_round_trip() {
        let n = FinMod::free(&FinRing::f2_dual_numbers(), 1);
        let d = dis_module(&n);
        assert_eq!(dis_module(&pi0_module(&d).unwrap()), d);
    }

    #[test]
    fn dis_hom_essential_surjectivity() {
        let r = FinRing::zmod(4);
        let m = FinMod::regular(&r);
        let (q, proj) = m.quotient(&m.submodule(&[2])).unwrap();
        let f = dis_module_hom(&proj);
        assert!(is_mod_essentially_surjective(&f));
        assert_eq!(pi0_module_hom(&f).unwrap().map(), proj.map());
        let zero = dis_module_hom(&ModHom::zero(&m, &q));
        assert!(!is_mod_essentially_surjective(&zero));
        assert!(pi0_module_hom(&zero).unwrap().map().iter().all(|&x| x == 0));
        let id = Mod2Hom::identity(&dis_module(&m));
        assert_eq!(pi0_module_hom(&id).unwrap(), ModHom::identity(&m));
    }

    #[test]
    fn homotopy_check() {
        let r = z2();
        let m = Mod2::new(ModHom::identity(&FinMod::regular(&r)));
        let id = Mod2Hom::identity(&m);
        let zero = Mod2Hom::zero(&m, &m);
        // identity => 0 via t = -id
        let t = ModHom::identity(m.m0());
        let h = ModHomotopy::new(id.clone(), zero.clone(), t).unwrap();
        assert!(check_mod_2morphism(&h));
        let h = ModHomotopy::new(id, zero, ModHom::zero(m.m0(), m.m1())).unwrap();
        assert!(!check_mod_2morphism(&h));
    }

    #[test]
    fn chain_square_enforced() {
        let r = z2();
        let n = FinMod::regular(&r);
        let a = Mod2::new(ModHom::identity(&n));
        let b = dis_module(&n);
        let f1 = ModHom::zero(a.m1(), b.m1());
        assert_eq!(
            Mod2Hom::new(a.clone(), b.clone(), f1.clone(), ModHom::identity(&n)).unwrap_err(),
            Error::NotChainMap
        );
        assert!(Mod2Hom::new(a, b, f1, ModHom::zero(&n, &n)).is_ok());
    }
}
