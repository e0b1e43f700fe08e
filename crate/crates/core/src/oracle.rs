//! Brute-force groupoid model of finite complexes.
//!
//! Everything here works on explicit tables of objects and morphisms and
//! decides properties straight from their definitions, so it can be used to
//! cross-check the pi0/pi1 formulas in [`crate::sgp2`]. Only group arithmetic
//! (reduction to canonical coordinates) is shared with the main code.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::abgroup::{AbGroup, AbHom};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Int;
use crate::sgp2::{ChainMap, Complex, Homotopy};

/// Default search-space guard for [`oracle_lift_search`].
pub const DEFAULT_CANDIDATE_CAP: u64 = 10_000_000;

/// Finite group with elements indexed in lexicographic order of canonical
/// coordinates (first coordinate most significant).
#[derive(Clone, Debug)]
pub struct FiniteGroup<T: Int> {
    group: AbGroup<T>,
    moduli: Vec<u64>,
    size: usize,
}

impl<T: Int> FiniteGroup<T> {
    pub fn new(group: &AbGroup<T>) -> Result<Self> {
        if !group.is_finite() {
            return Err(Error::Infinite);
        }
        let moduli: Vec<u64> = group
            .invariant_factors()
            .iter()
            .map(|d| d.to_u64().ok_or(Error::Overflow { cap: u64::MAX }))
            .collect::<Result<_>>()?;
        let size = moduli.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d as usize));
        let size = size.ok_or(Error::Overflow { cap: usize::MAX as u64 })?;
        Ok(FiniteGroup { group: group.clone(), moduli, size })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn group(&self) -> &AbGroup<T> {
        &self.group
    }

    fn decode(&self, mut idx: usize) -> Vec<u64> {
        let mut coords = vec![0; self.moduli.len()];
        for (c, &d) in coords.iter_mut().zip(&self.moduli).rev() {
            *c = (idx % d as usize) as u64;
            idx /= d as usize;
        }
        coords
    }

    fn encode(&self, coords: &[u64]) -> usize {
        coords.iter().zip(&self.moduli).fold(0usize, |acc, (&c, &d)| acc * d as usize + c as usize)
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = x.iter().zip(&y).zip(&self.moduli).map(|((p, q), d)| (p + q) % d).collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let x = self.decode(a);
        let s: Vec<u64> = x.iter().zip(&self.moduli).map(|(p, d)| (d - p) % d).collect();
        self.encode(&s)
    }

    /// `k * a` for an arbitrary integer `k`.
    pub fn scale(&self, a: usize, k: &T) -> usize {
        let x = self.decode(a);
        let s: Vec<u64> = x
            .iter()
            .zip(&self.moduli)
            .map(|(&p, &d)| {
                let km = k.mod_floor(&T::from_u64(d).expect("modulus fits")).to_u64().expect("reduced");
                ((km as u128 * p as u128) % d as u128) as u64
            })
            .collect();
        self.encode(&s)
    }

    /// Index of the element with presentation coordinates `x`.
    pub fn index_of(&self, x: &[T]) -> usize {
        let y = self.group.reduce(x);
        let coords: Vec<u64> = y.iter().map(|v| v.to_u64().expect("reduced coordinate")).collect();
        self.encode(&coords)
    }

    /// Presentation coordinates of element `idx`.
    pub fn element(&self, idx: usize) -> Vec<T> {
        let coords: Vec<T> = self.decode(idx).into_iter().map(|c| T::from_u64(c).expect("fits")).collect();
        self.group.canonical().from.mul_vec(&coords)
    }

    /// Evaluates `sum_j coeffs[j] * images[j]`.
    pub fn combine(&self, coeffs: &[T], images: &[usize]) -> usize {
        coeffs.iter().zip(images).fold(0, |acc, (k, &img)| self.add(acc, self.scale(img, k)))
    }

    /// Index map of a hom out of this group.
    pub fn hom_table(&self, f: &AbHom<T>, target: &FiniteGroup<T>) -> Vec<usize> {
        (0..self.size).map(|i| target.index_of(&f.apply(&self.element(i)))).collect()
    }
}

/// A finite complex written out as an explicit groupoid.
///
/// Objects are the elements of `c0`, labels the elements of `c1`; the
/// morphism `(x, c)` goes from `x` to `x + delta(c)`. Composition adds labels
/// and the tensor product adds both coordinates.
#[derive(Clone, Debug)]
pub struct TableGroupoid<T: Int> {
    pub objects: FiniteGroup<T>,
    pub labels: FiniteGroup<T>,
    /// `(source, target, label)` for morphism index `x * |labels| + c`.
    pub morphisms: Vec<(usize, usize, usize)>,
    /// Object tensor table.
    pub tensor: Vec<Vec<usize>>,
    /// Label addition table; composing `(x, c)` with `(y, c')` gives `(x, c + c')`.
    pub compose: Vec<Vec<usize>>,
    /// Image of each label under `delta`.
    pub delta: Vec<usize>,
}

impl<T: Int> TableGroupoid<T> {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn target(&self, x: usize, c: usize) -> usize {
        self.tensor[x][self.delta[c]]
    }

    /// Number of isomorphism classes of objects, by orbit enumeration.
    pub fn isomorphism_classes(&self) -> usize {
        let mut seen = vec![false; self.object_count()];
        let mut classes = 0;
        for x in 0..self.object_count() {
            if seen[x] {
                continue;
            }
            classes += 1;
            for c in 0..self.labels.len() {
                seen[self.target(x, c)] = true;
            }
        }
        classes
    }

    /// Re-checks the symmetric 2-group axioms on the tables. Returns the first
    /// violated axiom.
    pub fn verify_axioms(&self) -> std::result::Result<(), String> {
        let n = self.object_count();
        let m = self.labels.len();
        let t = &self.tensor;
        let c = &self.compose;
        for x in 0..n {
            if t[x][0] != x || t[0][x] != x {
                return Err(format!("unit fails at object {x}"));
            }
            if !(0..n).any(|y| t[x][y] == 0) {
                return Err(format!("object {x} has no tensor inverse"));
            }
            for y in 0..n {
                if t[x][y] != t[y][x] {
                    return Err(format!("symmetry fails at ({x}, {y})"));
                }
                for z in 0..n {
                    if t[t[x][y]][z] != t[x][t[y][z]] {
                        return Err(format!("associativity fails at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        for a in 0..m {
            if c[a][0] != a || c[0][a] != a {
                return Err(format!("identity morphism fails at label {a}"));
            }
            if !(0..m).any(|b| c[a][b] == 0) {
                return Err(format!("label {a} has no inverse morphism"));
            }
            for b in 0..m {
                if c[a][b] != c[b][a] {
                    return Err(format!("composition not commutative at ({a}, {b})"));
                }
                for d in 0..m {
                    if c[c[a][b]][d] != c[a][c[b][d]] {
                        return Err(format!("composition not associative at ({a}, {b}, {d})"));
                    }
                }
            }
        }
        // Morphisms compose along targets, and the tensor is a bifunctor.
        for x in 0..n {
            for a in 0..m {
                let y = self.target(x, a);
                if self.morphisms[x * m + a] != (x, y, a) {
                    return Err(format!("morphism table corrupt at ({x}, {a})"));
                }
                for b in 0..m {
                    if self.target(y, b) != self.target(x, c[a][b]) {
                        return Err(format!("composite has wrong target at ({x}, {a}, {b})"));
                    }
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                if self.delta[c[a][b]] != t[self.delta[a]][self.delta[b]] {
                    return Err(format!("tensor of morphisms has wrong target at labels ({a}, {b})"));
                }
            }
        }
        // Interchange (g∘f)⊗(g'∘f') = (g⊗g')∘(f⊗f') on labels; the braiding is
        // the identity label, so naturality and the hexagons reduce to this.
        if m.pow(4) <= 2_000_000 {
            for a in 0..m {
                for b in 0..m {
                    for a2 in 0..m {
                        for b2 in 0..m {
                            if c[c[a][b]][c[a2][b2]] != c[c[a][a2]][c[b][b2]] {
                                return Err(format!("interchange fails at ({a}, {b}, {a2}, {b2})"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Writes out a finite complex as a groupoid.
pub fn materialize<T: Int>(a: &Complex<T>) -> Result<TableGroupoid<T>> {
    let objects = FiniteGroup::new(a.c0())?;
    let labels = FiniteGroup::new(a.c1())?;
    let (n, m) = (objects.len(), labels.len());
    let tensor: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| objects.add(x, y)).collect()).collect();
    let compose: Vec<Vec<usize>> = (0..m).map(|x| (0..m).map(|y| labels.add(x, y)).collect()).collect();
    let delta = labels.hom_table(a.delta(), &objects);
    let mut morphisms = Vec::with_capacity(n * m);
    for x in 0..n {
        for (c, &dc) in delta.iter().enumerate() {
            morphisms.push((x, tensor[x][dc], c));
        }
    }
    Ok(TableGroupoid { objects, labels, morphisms, tensor, compose, delta })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PredicateKind {
    Faithful,
    Full,
    EssentiallySurjective,
}

impl PredicateKind {
    pub const ALL: [PredicateKind; 3] = [Self::Faithful, Self::Full, Self::EssentiallySurjective];

    pub fn name(self) -> &'static str {
        match self {
            Self::Faithful => "faithful",
            Self::Full => "full",
            Self::EssentiallySurjective => "esssurj",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub verdict: bool,
    pub src_objects: usize,
    pub src_morphisms: usize,
    pub dst_objects: usize,
    pub dst_morphisms: usize,
}

/// Decides a functor property of `f` by enumerating objects and hom-sets.
pub fn oracle_predicate<T: Int>(f: &ChainMap<T>, kind: PredicateKind) -> Result<OracleVerdict> {
    let a = materialize(f.src())?;
    let b = materialize(f.dst())?;
    Ok(predicate_on_tables(&a, &b, f, kind))
}

fn predicate_on_tables<T: Int>(
    a: &TableGroupoid<T>,
    b: &TableGroupoid<T>,
    f: &ChainMap<T>,
    kind: PredicateKind,
) -> OracleVerdict {
    let on_objects = a.objects.hom_table(f.f0(), &b.objects);
    let on_labels = a.labels.hom_table(f.f1(), &b.labels);
    let (na, ma) = (a.object_count(), a.labels.len());
    let (nb, mb) = (b.object_count(), b.labels.len());

    let verdict = match kind {
        PredicateKind::Faithful => (0..na).all(|x| {
            // two distinct morphisms x -> y with the same image
            (0..ma).all(|c| (c + 1..ma).all(|c2| a.target(x, c) != a.target(x, c2) || on_labels[c] != on_labels[c2]))
        }),
        PredicateKind::Full => (0..na).all(|x| {
            let fx = on_objects[x];
            let mut hit: Vec<HashSet<usize>> = vec![HashSet::new(); na];
            for c in 0..ma {
                hit[a.target(x, c)].insert(on_labels[c]);
            }
            (0..na).all(|y| {
                let fy = on_objects[y];
                (0..mb).all(|c| b.target(fx, c) != fy || hit[y].contains(&c))
            })
        }),
        PredicateKind::EssentiallySurjective => {
            let mut reached = vec![false; nb];
            for &fx in &on_objects {
                for c in 0..mb {
                    reached[b.target(fx, c)] = true;
                }
            }
            reached.into_iter().all(|r| r)
        }
    };
    OracleVerdict {
        verdict,
        src_objects: na,
        src_morphisms: a.morphism_count(),
        dst_objects: nb,
        dst_morphisms: b.morphism_count(),
    }
}

#[derive(Clone, Debug)]
pub struct VerifyAllReport {
    pub axioms_src: std::result::Result<(), String>,
    pub axioms_dst: std::result::Result<(), String>,
    /// `(kind, oracle verdict, pi0/pi1 verdict)`
    pub predicates: Vec<(PredicateKind, bool, bool)>,
    pub src_objects: usize,
    pub src_morphisms: usize,
    pub dst_objects: usize,
    pub dst_morphisms: usize,
}

impl VerifyAllReport {
    pub fn all_agree(&self) -> bool {
        self.axioms_src.is_ok() && self.axioms_dst.is_ok() && self.predicates.iter().all(|(_, o, s)| o == s)
    }
}

/// Axiom checks on both endpoints plus oracle-vs-formula agreement for every predicate.
pub fn verify_all<T: Int>(f: &ChainMap<T>) -> Result<VerifyAllReport> {
    let a = materialize(f.src())?;
    let b = materialize(f.dst())?;
    let predicates = PredicateKind::ALL
        .iter()
        .map(|&k| {
            let fast = match k {
                PredicateKind::Faithful => crate::sgp2::is_faithful(f),
                PredicateKind::Full => crate::sgp2::is_full(f),
                PredicateKind::EssentiallySurjective => crate::sgp2::is_essentially_surjective(f),
            };
            (k, predicate_on_tables(&a, &b, f, k).verdict, fast)
        })
        .collect();
    Ok(VerifyAllReport {
        axioms_src: a.verify_axioms(),
        axioms_dst: b.verify_axioms(),
        predicates,
        src_objects: a.object_count(),
        src_morphisms: a.morphism_count(),
        dst_objects: b.object_count(),
        dst_morphisms: b.morphism_count(),
    })
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub cap: u64,
    /// Worker threads; results do not depend on this.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { cap: DEFAULT_CANDIDATE_CAP, jobs: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct LiftSearch<T: Int> {
    pub found: Option<(ChainMap<T>, Homotopy<T>)>,
    /// Lexicographic rank of the witness plus one, or the whole space on NotFound.
    pub candidates: u64,
    pub space: u64,
}

/// Exhaustive search for `G': P -> A` and `h: F ∘ G' => G`.
///
/// Candidates are tuples of generator images `(g1, g0, t)` ranging over the
/// finite groups `A.c1`, `A.c0`, `B.c1`, ordered lexicographically. `A` and `B`
/// must be finite; `P` only needs finitely many generators. Exceeding the cap
/// before a witness is found is an error, never a silent NotFound.
pub fn oracle_lift_search<T: Int>(g: &ChainMap<T>, f: &ChainMap<T>, opts: SearchOptions) -> Result<LiftSearch<T>> {
    let (p, b) = (g.src(), f.dst());
    if g.dst() != b {
        return Err(Error::Endpoints("G and F must share their codomain".into()));
    }
    let ctx = LiftContext::new(g, f)?;
    let (p1, p0) = (p.c1().gens(), p.c0().gens());
    let pow = |base: usize, e: usize| -> Option<u64> { (base as u64).checked_pow(e as u32) };
    let g_space = pow(ctx.a1.len(), p1).zip(pow(ctx.a0.len(), p0)).and_then(|(x, y)| x.checked_mul(y));
    let t_space = pow(ctx.b1.len(), p0);
    let (g_space, t_space) = match (g_space, t_space) {
        (Some(x), Some(y)) if x.checked_mul(y).is_some() => (x, y),
        _ => return Err(Error::Overflow { cap: opts.cap }),
    };
    let space = g_space * t_space;

    // Ok(Some((rank, g1, g0, t))) on a hit; Err(first index past the cap).
    type Hit = (u64, Vec<usize>, Vec<usize>, Vec<usize>);
    let search_block = |gi: u64| -> std::result::Result<Option<Hit>, u64> {
        let start = gi * t_space;
        if start >= opts.cap {
            return Err(start);
        }
        let (g1, g0) = ctx.split_g(gi);
        if !ctx.valid_chain_map(&g1, &g0) {
            return Ok(None);
        }
        for ti in 0..t_space {
            if start + ti >= opts.cap {
                return Err(start + ti);
            }
            let t = digits(ti, ctx.b1.len(), p0);
            if ctx.valid_homotopy(&g1, &g0, &t) {
                return Ok(Some((start + ti, g1, g0, t)));
            }
        }
        Ok(None)
    };

    let chunk = (opts.jobs.max(1) as u64) * 32;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs.max(1)).build().ok();
    let mut gi = 0;
    while gi < g_space {
        let end = (gi + chunk).min(g_space);
        let results: Vec<_> = match (&pool, opts.jobs > 1) {
            (Some(pool), true) => pool.install(|| (gi..end).into_par_iter().map(search_block).collect()),
            _ => (gi..end).map(search_block).collect(),
        };
        for r in results {
            match r {
                Ok(Some((rank, g1, g0, t))) => {
                    let (gp, h) = ctx.build(&g1, &g0, &t)?;
                    return Ok(LiftSearch { found: Some((gp, h)), candidates: rank + 1, space });
                }
                Ok(None) => {}
                Err(_) => return Err(Error::Overflow { cap: opts.cap }),
            }
        }
        gi = end;
    }
    if space > opts.cap {
        return Err(Error::Overflow { cap: opts.cap });
    }
    Ok(LiftSearch { found: None, candidates: space, space })
}

/// Base-`base` digits of `n`, most significant first.
fn digits(mut n: u64, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut().rev() {
        *d = (n % base as u64) as usize;
        n /= base as u64;
    }
    out
}

struct LiftContext<'a, T: Int> {
    g: &'a ChainMap<T>,
    f: &'a ChainMap<T>,
    a1: FiniteGroup<T>,
    a0: FiniteGroup<T>,
    b1: FiniteGroup<T>,
    b0: FiniteGroup<T>,
    delta_a: Vec<usize>,
    delta_b: Vec<usize>,
    f0: Vec<usize>,
    f1: Vec<usize>,
    /// `G` on the generators of `P.c0` / `P.c1`, as indices in `B.c0` / `B.c1`.
    g0_gens: Vec<usize>,
    g1_gens: Vec<usize>,
}

impl<'a, T: Int> LiftContext<'a, T> {
    fn new(g: &'a ChainMap<T>, f: &'a ChainMap<T>) -> Result<Self> {
        let (p, a, b) = (g.src(), f.src(), f.dst());
        let a1 = FiniteGroup::new(a.c1())?;
        let a0 = FiniteGroup::new(a.c0())?;
        let b1 = FiniteGroup::new(b.c1())?;
        let b0 = FiniteGroup::new(b.c0())?;
        let delta_a = a1.hom_table(a.delta(), &a0);
        let delta_b = b1.hom_table(b.delta(), &b0);
        let f0 = a0.hom_table(f.f0(), &b0);
        let f1 = a1.hom_table(f.f1(), &b1);
        let g0_gens = (0..p.c0().gens()).map(|i| b0.index_of(&g.f0().image_of_generator(i))).collect();
        let g1_gens = (0..p.c1().gens()).map(|i| b1.index_of(&g.f1().image_of_generator(i))).collect();
        Ok(LiftContext { g, f, a1, a0, b1, b0, delta_a, delta_b, f0, f1, g0_gens, g1_gens })
    }

    fn split_g(&self, gi: u64) -> (Vec<usize>, Vec<usize>) {
        let p = self.g.src();
        let (p1, p0) = (p.c1().gens(), p.c0().gens());
        let t0 = (self.a0.len() as u64).pow(p0 as u32);
        (digits(gi / t0, self.a1.len(), p1), digits(gi % t0, self.a0.len(), p0))
    }

    fn respects(rels: &Matrix<T>, target: &FiniteGroup<T>, images: &[usize]) -> bool {
        (0..rels.rows()).all(|r| target.combine(rels.row(r), images) == 0)
    }

    fn valid_chain_map(&self, g1: &[usize], g0: &[usize]) -> bool {
        let p = self.g.src();
        if !Self::respects(p.c1().rels(), &self.a1, g1) || !Self::respects(p.c0().rels(), &self.a0, g0) {
            return false;
        }
        // g0 ∘ delta_P = delta_A ∘ g1 on each generator of P.c1
        (0..p.c1().gens()).all(|j| {
            let lhs = self.a0.combine(&p.delta().image_of_generator(j), g0);
            lhs == self.delta_a[g1[j]]
        })
    }

    fn valid_homotopy(&self, g1: &[usize], g0: &[usize], t: &[usize]) -> bool {
        let p = self.g.src();
        if !Self::respects(p.c0().rels(), &self.b1, t) {
            return false;
        }
        let objects = (0..p.c0().gens()).all(|i| self.g0_gens[i] == self.b0.add(self.f0[g0[i]], self.delta_b[t[i]]));
        objects
            && (0..p.c1().gens()).all(|j| {
                let lhs = self.b1.combine(&p.delta().image_of_generator(j), t);
                lhs == self.b1.add(self.g1_gens[j], self.b1.neg(self.f1[g1[j]]))
            })
    }

    fn build(&self, g1: &[usize], g0: &[usize], t: &[usize]) -> Result<(ChainMap<T>, Homotopy<T>)> {
        let (p, a, b) = (self.g.src(), self.f.src(), self.f.dst());
        let images =
            |grp: &FiniteGroup<T>, idx: &[usize]| -> Vec<Vec<T>> { idx.iter().map(|&i| grp.element(i)).collect() };
        let h1 = AbHom::from_images(p.c1().clone(), a.c1().clone(), &images(&self.a1, g1))?;
        let h0 = AbHom::from_images(p.c0().clone(), a.c0().clone(), &images(&self.a0, g0))?;
        let gp = ChainMap::new(p.clone(), a.clone(), h1, h0)?;
        let th = AbHom::from_images(p.c0().clone(), b.c1().clone(), &images(&self.b1, t))?;
        let h = Homotopy::new(self.f.compose(&gp)?, self.g.clone(), th)?;
        Ok((gp, h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgp2::{check_2morphism, dis, dis_hom, lift_discrete_free};
    use num_bigint::BigInt;

    type G = AbGroup<BigInt>;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn cx(c1: G, c0: G, rows: &[&[i64]]) -> Complex<BigInt> {
        Complex::new(AbHom::new(c1, c0, Matrix::from_i64(rows)).unwrap())
    }

    #[test]
    fn materialize_counts() {
        let d = materialize(&dis(&G::cyclic(b(2)))).unwrap();
        assert_eq!((d.object_count(), d.morphism_count()), (2, 2));
        assert!(d.verify_axioms().is_ok());

        let z = materialize(&cx(G::cyclic(b(2)), G::cyclic(b(2)), &[&[0]])).unwrap();
        assert_eq!((z.object_count(), z.morphism_count()), (2, 4));

        let t = materialize(&cx(G::cyclic(b(4)), G::cyclic(b(4)), &[&[2]])).unwrap();
        assert_eq!((t.object_count(), t.morphism_count()), (4, 16));
        assert_eq!(t.isomorphism_classes(), 2);
        assert!(t.verify_axioms().is_ok());
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mut t = materialize(&cx(G::cyclic(b(4)), G::cyclic(b(4)), &[&[2]])).unwrap();
        t.tensor[1][2] = 0;
        assert!(t.verify_axioms().is_err());
    }

    #[test]
    fn infinite_rejected() {
        assert_eq!(materialize(&dis(&G::free(1))).unwrap_err(), Error::Infinite);
    }

    #[test]
    fn predicate_examples() {
        let a = cx(G::cyclic(b(4)), G::cyclic(b(4)), &[&[2]]);
        let id = ChainMap::identity(&a);
        for k in PredicateKind::ALL {
            assert!(oracle_predicate(&id, k).unwrap().verdict);
        }
        let red = dis_hom(&AbHom::new(G::cyclic(b(4)), G::cyclic(b(2)), Matrix::from_i64(&[&[1]])).unwrap());
        // 0 and 2 both map to 0, but A has no morphism 0 -> 2: not full.
        assert!(oracle_predicate(&red, PredicateKind::Faithful).unwrap().verdict);
        assert!(!oracle_predicate(&red, PredicateKind::Full).unwrap().verdict);
        assert!(oracle_predicate(&red, PredicateKind::EssentiallySurjective).unwrap().verdict);
        assert!(verify_all(&red).unwrap().all_agree());
        let d = dis(&G::cyclic(b(2)));
        let zero = ChainMap::zero(&d, &d);
        assert!(!oracle_predicate(&zero, PredicateKind::EssentiallySurjective).unwrap().verdict);
        assert!(verify_all(&zero).unwrap().all_agree());
    }

    #[test]
    fn lift_search_identity() {
        let a = cx(G::cyclic(b(2)), G::cyclic(b(4)), &[&[2]]);
        let g = ChainMap::identity(&a);
        let r = oracle_lift_search(&g, &ChainMap::identity(&a), SearchOptions::default()).unwrap();
        let (gp, h) = r.found.unwrap();
        assert!(gp.equals(&g));
        assert!(h.t().is_zero_map());
        assert!(check_2morphism(&h));
    }

    #[test]
    fn lift_search_agrees_with_construction() {
        // P = dis(Z) is infinite but homs out of it are determined by one image.
        let red = dis_hom(&AbHom::new(G::cyclic(b(6)), G::cyclic(b(3)), Matrix::from_i64(&[&[1]])).unwrap());
        let g = dis_hom(&AbHom::new(G::free(1), G::cyclic(b(3)), Matrix::from_i64(&[&[2]])).unwrap());
        let r = oracle_lift_search(&g, &red, SearchOptions::default()).unwrap();
        assert!(r.found.is_some());
        assert!(lift_discrete_free(&g, &red).is_ok());
        assert_eq!(r.space, 6);
    }

    #[test]
    fn lift_search_not_found_and_overflow() {
        let d = dis(&G::cyclic(b(3)));
        let zero = ChainMap::zero(&d, &d);
        let g = ChainMap::identity(&d);
        let r = oracle_lift_search(&g, &zero, SearchOptions::default()).unwrap();
        assert!(r.found.is_none());
        assert_eq!(r.candidates, r.space);

        let opts = SearchOptions { cap: 2, jobs: 1 };
        assert_eq!(oracle_lift_search(&g, &zero, opts).unwrap_err(), Error::Overflow { cap: 2 });
    }

    #[test]
    fn jobs_do_not_change_witness() {
        let a = cx(G::cyclic(b(2)), G::from_invariants(&[b(2), b(2)], 0), &[&[1], &[0]]);
        let h = crate::sgp2::canonical_h(&a);
        let g = ChainMap::new(
            dis(&G::cyclic(b(2))),
            h.dst().clone(),
            AbHom::zero(G::zero(), G::zero()),
            AbHom::new(G::cyclic(b(2)), h.dst().c0().clone(), Matrix::from_i64(&[&[1], &[1]])).unwrap(),
        )
        .unwrap();
        let one = oracle_lift_search(&g, &h, SearchOptions { cap: 1000, jobs: 1 }).unwrap();
        let four = oracle_lift_search(&g, &h, SearchOptions { cap: 1000, jobs: 4 }).unwrap();
        assert!(one.found.is_some());
        assert_eq!(one.candidates, four.candidates);
        assert_eq!(one.found.map(|x| x.0), four.found.map(|x| x.0));
    }
}
