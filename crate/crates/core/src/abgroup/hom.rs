use std::fmt;

use super::AbGroup;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Int;
use crate::snf::smith_normal_form;

/// Homomorphism of presented groups, stored on generators.
///
/// `matrix` is `dst.gens x src.gens`; column `j` is the image of source
/// generator `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct AbHom<T: Int> {
    src: AbGroup<T>,
    dst: AbGroup<T>,
    matrix: Matrix<T>,
}

impl<T: Int> AbHom<T> {
    /// Checks the shape and that every source relator maps to zero.
    pub fn new(src: AbGroup<T>, dst: AbGroup<T>, matrix: Matrix<T>) -> Result<Self> {
        if matrix.shape() != (dst.gens(), src.gens()) {
            return Err(Error::Dimension(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                dst.gens(),
                src.gens()
            )));
        }
        for i in 0..src.rels().rows() {
            let image = matrix.mul_vec(src.rels().row(i));
            if !dst.is_zero(&image) {
                return Err(Error::NotWellDefined(format!("relator {i} does not map to zero")));
            }
        }
        Ok(AbHom { src, dst, matrix })
    }

    /// Builds a hom from generator images without re-checking relators.
    /// Callers must know the result is well defined.
    pub(crate) fn new_unchecked(src: AbGroup<T>, dst: AbGroup<T>, matrix: Matrix<T>) -> Self {
        debug_assert_eq!(matrix.shape(), (dst.gens(), src.gens()));
        AbHom { src, dst, matrix }
    }

    pub fn from_images(src: AbGroup<T>, dst: AbGroup<T>, images: &[Vec<T>]) -> Result<Self> {
        if images.len() != src.gens() {
            return Err(Error::Dimension(format!("{} images for {} generators", images.len(), src.gens())));
        }
        let m = Matrix::from_columns(dst.gens(), images);
        Self::new(src, dst, m)
    }

    pub fn zero(src: AbGroup<T>, dst: AbGroup<T>) -> Self {
        let m = Matrix::zeros(dst.gens(), src.gens());
        AbHom { src, dst, matrix: m }
    }

    pub fn identity(g: AbGroup<T>) -> Self {
        let m = Matrix::identity(g.gens());
        AbHom { src: g.clone(), dst: g, matrix: m }
    }

    pub fn src(&self) -> &AbGroup<T> {
        &self.src
    }

    pub fn dst(&self) -> &AbGroup<T> {
        &self.dst
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        self.matrix.mul_vec(x)
    }

    pub fn image_of_generator(&self, j: usize) -> Vec<T> {
        self.matrix.column(j)
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &AbHom<T>) -> Result<AbHom<T>> {
        if inner.dst != self.src {
            return Err(Error::Endpoints("composite: codomain of inner map differs from domain of outer".into()));
        }
        Ok(AbHom::new_unchecked(inner.src.clone(), self.dst.clone(), self.matrix.mul(&inner.matrix)))
    }

    fn same_endpoints(&self, other: &AbHom<T>) -> Result<()> {
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::Endpoints("homs have different domain or codomain".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &AbHom<T>) -> Result<AbHom<T>> {
        self.same_endpoints(other)?;
        Ok(AbHom::new_unchecked(self.src.clone(), self.dst.clone(), self.matrix.add(&other.matrix)))
    }

    pub fn sub(&self, other: &AbHom<T>) -> Result<AbHom<T>> {
        self.same_endpoints(other)?;
        Ok(AbHom::new_unchecked(self.src.clone(), self.dst.clone(), self.matrix.sub(&other.matrix)))
    }

    pub fn neg(&self) -> AbHom<T> {
        AbHom::new_unchecked(self.src.clone(), self.dst.clone(), self.matrix.neg())
    }

    /// Equality as homomorphisms: same endpoints and equal generator images
    /// modulo the target relations.
    pub fn equals(&self, other: &AbHom<T>) -> bool {
        self.src == other.src
            && self.dst == other.dst
            && (0..self.src.gens())
                .all(|j| self.dst.elements_equal(&self.image_of_generator(j), &other.image_of_generator(j)))
    }

    pub fn is_zero_map(&self) -> bool {
        (0..self.src.gens()).all(|j| self.dst.is_zero(&self.image_of_generator(j)))
    }

    pub fn is_surjective(&self) -> bool {
        cokernel(self).0.is_trivial()
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).0.is_trivial()
    }

    /// `(f, g): A + B -> C`
    pub fn copair(f: &AbHom<T>, g: &AbHom<T>) -> Result<AbHom<T>> {
        if f.dst != g.dst {
            return Err(Error::Endpoints("copair: codomains differ".into()));
        }
        Ok(AbHom::new_unchecked(f.src.direct_sum(&g.src), f.dst.clone(), f.matrix.hstack(&g.matrix)))
    }

    /// `(f; g): A -> B + C`
    pub fn pair(f: &AbHom<T>, g: &AbHom<T>) -> Result<AbHom<T>> {
        if f.src != g.src {
            return Err(Error::Endpoints("pair: domains differ".into()));
        }
        Ok(AbHom::new_unchecked(f.src.clone(), f.dst.direct_sum(&g.dst), f.matrix.vstack(&g.matrix)))
    }

    /// Projection of `a + b` onto the first summand.
    pub fn project_first(a: &AbGroup<T>, b: &AbGroup<T>) -> AbHom<T> {
        let m = Matrix::identity(a.gens()).hstack(&Matrix::zeros(a.gens(), b.gens()));
        AbHom::new_unchecked(a.direct_sum(b), a.clone(), m)
    }

    /// Projection of `a + b` onto the second summand.
    pub fn project_second(a: &AbGroup<T>, b: &AbGroup<T>) -> AbHom<T> {
        let m = Matrix::zeros(b.gens(), a.gens()).hstack(&Matrix::identity(b.gens()));
        AbHom::new_unchecked(a.direct_sum(b), b.clone(), m)
    }

    /// Lifts `self: X -> Y` through an injective `incl: K -> Y` whose image
    /// contains the image of `self`.
    pub fn factor_through_injection(&self, incl: &AbHom<T>) -> Result<AbHom<T>> {
        if incl.dst != self.dst {
            return Err(Error::Endpoints("factor: codomains differ".into()));
        }
        let images = (0..self.src.gens())
            .map(|j| solve_preimage(incl, &self.image_of_generator(j)))
            .collect::<Result<Vec<_>>>()?;
        AbHom::from_images(self.src.clone(), incl.src.clone(), &images)
    }
}

impl<T: Int> fmt::Debug for AbHom<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbHom({} -> {}, {:?})", self.src, self.dst, self.matrix)
    }
}

/// Finds `x` in `f.src` with `f(x) = y` in `f.dst`.
///
/// Deterministic: zero when `y` is zero, otherwise the SNF back-substitution
/// solution of `[M | R_dst^T] z = y` with free coordinates set to zero.
pub fn solve_preimage<T: Int>(f: &AbHom<T>, y: &[T]) -> Result<Vec<T>> {
    if y.len() != f.dst.gens() {
        return Err(Error::Dimension(format!("element has {} coordinates, expected {}", y.len(), f.dst.gens())));
    }
    if f.dst.is_zero(y) {
        return Ok(f.src.zero_element());
    }
    let system = f.matrix.hstack(&f.dst.rels().transpose());
    let z = smith_normal_form(&system).solve(y).ok_or(Error::NoSolution)?;
    Ok(z[..f.src.gens()].to_vec())
}

/// Kernel of `f`, in canonical presentation, with its inclusion into `f.src`.
pub fn kernel<T: Int>(f: &AbHom<T>) -> (AbGroup<T>, AbHom<T>) {
    let n = f.src.gens();
    // {x : M x in rowspan(R_dst)} as a lattice in Z^n.
    let system = f.matrix.hstack(&f.dst.rels().transpose().neg());
    let basis = smith_normal_form(&system).kernel_basis();
    let rows: Vec<usize> = (0..n).collect();
    let lattice = basis.select_rows(&rows);
    let q = lattice.cols();
    // Relations among the lattice generators: c with lattice*c in rowspan(R_src).
    let rel_system = lattice.hstack(&f.src.rels().transpose().neg());
    let rel_basis = smith_normal_form(&rel_system).kernel_basis();
    let rel_rows: Vec<usize> = (0..q).collect();
    let rels = rel_basis.select_rows(&rel_rows).transpose().without_zero_rows();
    let raw = AbGroup::new(q, rels).expect("kernel presentation shape");
    let canon = raw.canonical_group();
    let incl = lattice.mul(&raw.canonical().from);
    (canon.clone(), AbHom::new_unchecked(canon, f.src.clone(), incl))
}

/// Cokernel of `f`: `f.dst` with the columns of `f` adjoined as relators;
/// the projection is the identity on generators.
pub fn cokernel<T: Int>(f: &AbHom<T>) -> (AbGroup<T>, AbHom<T>) {
    let q = f.dst.with_relations(&f.matrix.transpose()).expect("cokernel presentation shape");
    let proj = AbHom::new_unchecked(f.dst.clone(), q.clone(), Matrix::identity(f.dst.gens()));
    (q, proj)
}

/// Free group on the canonical generators of `g`, with its surjection onto `g`.
pub fn free_cover<T: Int>(g: &AbGroup<T>) -> (AbGroup<T>, AbHom<T>) {
    let c = g.canonical();
    let p = AbGroup::free(c.len());
    let cover = AbHom::new_unchecked(p.clone(), g.clone(), c.from.clone());
    (p, cover)
}

/// Given `g: P -> B` with `P` free and a surjection `f: A -> B`, returns
/// `g': P -> A` with `f ∘ g' = g`, one preimage per basis generator.
pub fn lift_free<T: Int>(g: &AbHom<T>, f: &AbHom<T>) -> Result<AbHom<T>> {
    if !g.src.is_free_presentation() {
        return Err(Error::NotFree);
    }
    if g.dst != f.dst {
        return Err(Error::Endpoints("lift: g and f have different codomains".into()));
    }
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let images = (0..g.src.gens()).map(|j| solve_preimage(f, &g.image_of_generator(j))).collect::<Result<Vec<_>>>()?;
    Ok(AbHom::new_unchecked(g.src.clone(), f.src.clone(), Matrix::from_columns(f.src.gens(), &images)))
}
