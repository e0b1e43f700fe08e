//! Finitely generated abelian groups in presentation form.
//!
//! A group is `Z^n / rowspan(rels)`; elements are integer coordinate vectors on
//! the `n` generators. The Smith form of the relation matrix is computed on
//! first use and cached, and every equality or membership test goes through it.

mod hom;

use std::fmt;
use std::sync::OnceLock;

pub use hom::{cokernel, free_cover, kernel, lift_free, solve_preimage, AbHom};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Int;
use crate::snf::smith_normal_form;

pub struct AbGroup<T> {
    gens: usize,
    rels: Matrix<T>,
    canonical: OnceLock<Canonical<T>>,
}

/// Invariant-factor decomposition of a presented group.
///
/// Canonical coordinates are indexed by the generators that survive the Smith
/// form: torsion coordinates first (moduli `d_1 | d_2 | ...`, all `>= 2`),
/// then `rank` free coordinates (modulus 0).
#[derive(Clone, Debug)]
pub struct Canonical<T> {
    pub factors: Vec<T>,
    pub rank: usize,
    /// `k x n`: presentation coordinates to canonical coordinates.
    pub to: Matrix<T>,
    /// `n x k`: canonical coordinates to presentation coordinates.
    pub from: Matrix<T>,
}

impl<T: Int> Canonical<T> {
    pub fn len(&self) -> usize {
        self.factors.len() + self.rank
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Modulus of canonical coordinate `i` (0 for free coordinates).
    pub fn modulus(&self, i: usize) -> T {
        self.factors.get(i).cloned().unwrap_or_else(T::zero)
    }
}

impl<T: Int> AbGroup<T> {
    pub fn new(gens: usize, rels: Matrix<T>) -> Result<Self> {
        if rels.cols() != gens {
            return Err(Error::Dimension(format!("relation matrix has {} columns for {gens} generators", rels.cols())));
        }
        Ok(AbGroup { gens, rels, canonical: OnceLock::new() })
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn free(n: usize) -> Self {
        AbGroup { gens: n, rels: Matrix::zeros(0, n), canonical: OnceLock::new() }
    }

    /// `Z/n`; `cyclic(0)` is `Z`.
    pub fn cyclic(n: T) -> Self {
        AbGroup { gens: 1, rels: Matrix::from_vec(1, 1, vec![n]).unwrap(), canonical: OnceLock::new() }
    }

    /// `Z/d_1 + ... + Z/d_t + Z^rank` in diagonal presentation.
    pub fn from_invariants(moduli: &[T], rank: usize) -> Self {
        let n = moduli.len() + rank;
        AbGroup { gens: n, rels: Matrix::diagonal(moduli.len(), n, moduli), canonical: OnceLock::new() }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn rels(&self) -> &Matrix<T> {
        &self.rels
    }

    /// True when every relator is zero, i.e. the presentation itself is free.
    pub fn is_free_presentation(&self) -> bool {
        self.rels.is_zero()
    }

    pub fn canonical(&self) -> &Canonical<T> {
        self.canonical.get_or_init(|| compute_canonical(self.gens, &self.rels))
    }

    pub fn invariant_factors(&self) -> &[T] {
        &self.canonical().factors
    }

    pub fn free_rank(&self) -> usize {
        self.canonical().rank
    }

    pub fn is_trivial(&self) -> bool {
        self.canonical().is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Free as an abstract group (no torsion), whatever the presentation.
    pub fn is_free(&self) -> bool {
        self.invariant_factors().is_empty()
    }

    pub fn order(&self) -> Option<T> {
        self.is_finite().then(|| self.invariant_factors().iter().fold(T::one(), |a, d| a * d.clone()))
    }

    pub fn is_isomorphic(&self, other: &AbGroup<T>) -> bool {
        let (a, b) = (self.canonical(), other.canonical());
        a.factors == b.factors && a.rank == b.rank
    }

    /// The canonical presentation `Z/d_1 + ... + Z^r` of this group.
    pub fn canonical_group(&self) -> AbGroup<T> {
        let c = self.canonical();
        Self::from_invariants(&c.factors, c.rank)
    }

    pub fn zero_element(&self) -> Vec<T> {
        vec![T::zero(); self.gens]
    }

    pub fn basis_element(&self, i: usize) -> Vec<T> {
        let mut e = self.zero_element();
        e[i] = T::one();
        e
    }

    fn check_len(&self, x: &[T]) {
        assert_eq!(x.len(), self.gens, "element has {} coordinates, group has {} generators", x.len(), self.gens);
    }

    /// Canonical coordinates of `x`, torsion entries reduced into `[0, d)`.
    /// Two elements are equal in the group iff their reductions coincide.
    pub fn reduce(&self, x: &[T]) -> Vec<T> {
        self.check_len(x);
        let c = self.canonical();
        let mut y = c.to.mul_vec(x);
        for (yi, d) in y.iter_mut().zip(&c.factors) {
            *yi = yi.mod_floor(d);
        }
        y
    }

    /// Smallest presentation-coordinate representative for canonical data.
    pub fn normalize(&self, x: &[T]) -> Vec<T> {
        let y = self.reduce(x);
        self.canonical().from.mul_vec(&y)
    }

    pub fn is_zero(&self, x: &[T]) -> bool {
        self.reduce(x).iter().all(|v| v.is_zero())
    }

    pub fn elements_equal(&self, a: &[T], b: &[T]) -> bool {
        self.check_len(a);
        self.check_len(b);
        let diff: Vec<T> = a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect();
        self.is_zero(&diff)
    }

    pub fn add(&self, a: &[T], b: &[T]) -> Vec<T> {
        a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
    }

    pub fn neg(&self, a: &[T]) -> Vec<T> {
        a.iter().map(|x| -x.clone()).collect()
    }

    /// All elements of a finite group, as presentation coordinates, in
    /// lexicographic order of their canonical coordinates.
    pub fn enumerate_elements(&self) -> Result<Vec<Vec<T>>> {
        Ok(self.enumerate_canonical()?.iter().map(|y| self.canonical().from.mul_vec(y)).collect())
    }

    /// All canonical coordinate tuples of a finite group, lexicographically.
    pub fn enumerate_canonical(&self) -> Result<Vec<Vec<T>>> {
        if !self.is_finite() {
            return Err(Error::Infinite);
        }
        let factors = &self.canonical().factors;
        let mut out = vec![Vec::new()];
        for d in factors {
            let mut next = Vec::new();
            for prefix in &out {
                let mut k = T::zero();
                while k < *d {
                    let mut v: Vec<T> = prefix.clone();
                    v.push(k.clone());
                    next.push(v);
                    k = k + T::one();
                }
            }
            out = next;
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &AbGroup<T>) -> AbGroup<T> {
        AbGroup { gens: self.gens + other.gens, rels: self.rels.block_diag(&other.rels), canonical: OnceLock::new() }
    }

    /// Same generators with extra relators appended.
    pub fn with_relations(&self, extra: &Matrix<T>) -> Result<AbGroup<T>> {
        AbGroup::new(self.gens, self.rels.vstack(extra))
    }
}

fn compute_canonical<T: Int>(n: usize, rels: &Matrix<T>) -> Canonical<T> {
    let snf = smith_normal_form(rels);
    let diag = snf.diagonal();
    let modulus = |i: usize| diag.get(i).cloned().unwrap_or_else(T::zero);
    let kept: Vec<usize> = (0..n).filter(|&i| !modulus(i).is_one()).collect();
    let factors: Vec<T> = kept.iter().map(|&i| modulus(i)).filter(|d| !d.is_zero()).collect();
    let rank = kept.len() - factors.len();
    let mut to = Matrix::zeros(kept.len(), n);
    let mut from = Matrix::zeros(n, kept.len());
    for (a, &i) in kept.iter().enumerate() {
        for j in 0..n {
            to[(a, j)] = snf.v[(j, i)].clone();
            from[(j, a)] = snf.v_inv[(i, j)].clone();
        }
    }
    Canonical { factors, rank, to, from }
}

impl<T: Int> Clone for AbGroup<T> {
    fn clone(&self) -> Self {
        AbGroup { gens: self.gens, rels: self.rels.clone(), canonical: self.canonical.clone() }
    }
}

/// Structural equality of presentations (not isomorphism).
impl<T: Int> PartialEq for AbGroup<T> {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.rels == other.rels
    }
}

impl<T: Int> Eq for AbGroup<T> {}

impl<T: Int> fmt::Debug for AbGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AbGroup").field("gens", &self.gens).field("rels", &self.rels).finish()
    }
}

impl<T: Int> fmt::Display for AbGroup<T> {
    /// Invariant-factor notation, e.g. `Z/2 + Z/4 + Z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        let mut parts: Vec<String> = c.factors.iter().map(|d| format!("Z/{d}")).collect();
        match c.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
