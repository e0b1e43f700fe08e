use std::fmt;

use crate::abgroup::{AbGroup, AbHom};
use crate::error::{Error, Result};
use crate::scalar::Int;

/// A symmetric 2-group, presented by `delta: c1 -> c0`.
#[derive(Clone, PartialEq, Eq)]
pub struct Complex<T: Int> {
    delta: AbHom<T>,
}

impl<T: Int> Complex<T> {
    pub fn new(delta: AbHom<T>) -> Self {
        Complex { delta }
    }

    /// The zero complex `0 -> 0`.
    pub fn zero() -> Self {
        Complex::new(AbHom::zero(AbGroup::zero(), AbGroup::zero()))
    }

    pub fn c1(&self) -> &AbGroup<T> {
        self.delta.src()
    }

    pub fn c0(&self) -> &AbGroup<T> {
        self.delta.dst()
    }

    pub fn delta(&self) -> &AbHom<T> {
        &self.delta
    }

    pub fn is_finite(&self) -> bool {
        self.c0().is_finite() && self.c1().is_finite()
    }
}

impl<T: Int> fmt::Debug for Complex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex({:?})", self.delta.matrix())?;
        write!(f, "[{} -> {}]", self.c1(), self.c0())
    }
}

/// Strict 1-morphism: a commuting pair `(f1, f0)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainMap<T: Int> {
    src: Complex<T>,
    dst: Complex<T>,
    f1: AbHom<T>,
    f0: AbHom<T>,
}

impl<T: Int> ChainMap<T> {
    /// Checks endpoints and `f0 ∘ delta_src = delta_dst ∘ f1`.
    pub fn new(src: Complex<T>, dst: Complex<T>, f1: AbHom<T>, f0: AbHom<T>) -> Result<Self> {
        if f1.src() != src.c1() || f1.dst() != dst.c1() {
            return Err(Error::Endpoints("f1 does not run between the degree-1 groups".into()));
        }
        if f0.src() != src.c0() || f0.dst() != dst.c0() {
            return Err(Error::Endpoints("f0 does not run between the degree-0 groups".into()));
        }
        let map = ChainMap { src, dst, f1, f0 };
        if !map.square_commutes() {
            return Err(Error::NotChainMap);
        }
        Ok(map)
    }

    pub(crate) fn new_unchecked(src: Complex<T>, dst: Complex<T>, f1: AbHom<T>, f0: AbHom<T>) -> Self {
        let map = ChainMap { src, dst, f1, f0 };
        debug_assert!(map.square_commutes());
        map
    }

    fn square_commutes(&self) -> bool {
        let left = self.f0.compose(self.src.delta()).expect("endpoints checked");
        let right = self.dst.delta().compose(&self.f1).expect("endpoints checked");
        left.equals(&right)
    }

    pub fn identity(a: &Complex<T>) -> Self {
        ChainMap {
            src: a.clone(),
            dst: a.clone(),
            f1: AbHom::identity(a.c1().clone()),
            f0: AbHom::identity(a.c0().clone()),
        }
    }

    pub fn zero(src: &Complex<T>, dst: &Complex<T>) -> Self {
        ChainMap {
            src: src.clone(),
            dst: dst.clone(),
            f1: AbHom::zero(src.c1().clone(), dst.c1().clone()),
            f0: AbHom::zero(src.c0().clone(), dst.c0().clone()),
        }
    }

    pub fn src(&self) -> &Complex<T> {
        &self.src
    }

    pub fn dst(&self) -> &Complex<T> {
        &self.dst
    }

    pub fn f1(&self) -> &AbHom<T> {
        &self.f1
    }

    pub fn f0(&self) -> &AbHom<T> {
        &self.f0
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &ChainMap<T>) -> Result<ChainMap<T>> {
        if inner.dst != self.src {
            return Err(Error::Endpoints("chain maps are not composable".into()));
        }
        Ok(ChainMap {
            src: inner.src.clone(),
            dst: self.dst.clone(),
            f1: self.f1.compose(&inner.f1)?,
            f0: self.f0.compose(&inner.f0)?,
        })
    }

    /// Equal as strict maps (both levels equal modulo relations).
    pub fn equals(&self, other: &ChainMap<T>) -> bool {
        self.f1.equals(&other.f1) && self.f0.equals(&other.f0)
    }
}

/// 2-morphism `t: src => dst` between parallel chain maps.
///
/// Convention: `dst.f0 = src.f0 + delta ∘ t` and `t ∘ delta = dst.f1 - src.f1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Homotopy<T: Int> {
    src: ChainMap<T>,
    dst: ChainMap<T>,
    t: AbHom<T>,
}

impl<T: Int> Homotopy<T> {
    /// Checks endpoints only; use [`check_2morphism`] for the identities.
    pub fn new(src: ChainMap<T>, dst: ChainMap<T>, t: AbHom<T>) -> Result<Self> {
        if src.src != dst.src || src.dst != dst.dst {
            return Err(Error::Endpoints("homotopy between non-parallel chain maps".into()));
        }
        if t.src() != src.src.c0() || t.dst() != src.dst.c1() {
            return Err(Error::Endpoints("homotopy must map source degree 0 to target degree 1".into()));
        }
        Ok(Homotopy { src, dst, t })
    }

    /// The identity 2-morphism on `f`.
    pub fn identity(f: &ChainMap<T>) -> Self {
        let t = AbHom::zero(f.src.c0().clone(), f.dst.c1().clone());
        Homotopy { src: f.clone(), dst: f.clone(), t }
    }

    /// A candidate null homotopy `t: f => 0`.
    pub fn to_zero(f: &ChainMap<T>, t: AbHom<T>) -> Result<Self> {
        let zero = ChainMap::zero(&f.src, &f.dst);
        Homotopy::new(f.clone(), zero, t)
    }

    pub fn src(&self) -> &ChainMap<T> {
        &self.src
    }

    pub fn dst(&self) -> &ChainMap<T> {
        &self.dst
    }

    pub fn t(&self) -> &AbHom<T> {
        &self.t
    }
}

/// True iff both homotopy identities hold as maps.
pub fn check_2morphism<T: Int>(h: &Homotopy<T>) -> bool {
    let (f, g, t) = (&h.src, &h.dst, &h.t);
    let delta_t = f.dst.delta().compose(t).expect("endpoints checked");
    let objects = f.f0.add(&delta_t).expect("endpoints checked").equals(&g.f0);
    let t_delta = t.compose(f.src.delta()).expect("endpoints checked");
    let naturality = t_delta.equals(&g.f1.sub(&f.f1).expect("endpoints checked"));
    objects && naturality
}
