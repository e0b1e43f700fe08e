use super::ring::FinRing;
use super::{check_abelian_group, check_map, check_shape, cosets, find_zero, invalid, negation, quotient_table};
use crate::error::{Error, Result};

/// Finite left module over a [`FinRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinMod {
    ring: FinRing,
    size: usize,
    add: Vec<Vec<usize>>,
    act: Vec<Vec<usize>>,
    zero: usize,
    neg: Vec<usize>,
}

impl FinMod {
    pub fn new(ring: FinRing, size: usize, add: Vec<Vec<usize>>, act: Vec<Vec<usize>>) -> Result<Self> {
        check_shape("module addition", &add, size, size, size)?;
        let zero = find_zero(&add).ok_or_else(|| Error::InvalidTable("module has no additive identity".into()))?;
        let neg = check_abelian_group("module addition", size, &add, zero)?;
        let k = ring.size();
        check_shape("module action", &act, k, size, size)?;
        for r in 0..k {
            for m in 0..size {
                for n in 0..size {
                    if act[r][add[m][n]] != add[act[r][m]][act[r][n]] {
                        return invalid(format!("r(m+n) != rm+rn at ({r}, {m}, {n})"));
                    }
                }
                for s in 0..k {
                    if act[ring.add(r, s)][m] != add[act[r][m]][act[s][m]] {
                        return invalid(format!("(r+s)m != rm+sm at ({r}, {s}, {m})"));
                    }
                    if act[ring.mul(r, s)][m] != act[r][act[s][m]] {
                        return invalid(format!("(rs)m != r(sm) at ({r}, {s}, {m})"));
                    }
                }
            }
        }
        if (0..size).any(|m| act[ring.one()][m] != m) {
            return invalid("1m != m");
        }
        Ok(FinMod { ring, size, add, act, zero, neg })
    }

    /// Skips the axiom checks; for tables built from already valid structures.
    pub(crate) fn new_unchecked(ring: FinRing, add: Vec<Vec<usize>>, act: Vec<Vec<usize>>) -> Self {
        let zero = find_zero(&add).expect("module has a zero");
        let neg = negation(&add, zero);
        let m = FinMod { ring, size: add.len(), add, act, zero, neg };
        debug_assert!(m.size > 64 || FinMod::new(m.ring.clone(), m.size, m.add.clone(), m.act.clone()).is_ok());
        m
    }

    pub fn zero_module(ring: &FinRing) -> Self {
        FinMod::new_unchecked(ring.clone(), vec![vec![0]], vec![vec![0]; ring.size()])
    }

    /// `R` as a left module over itself.
    pub fn regular(ring: &FinRing) -> Self {
        FinMod::free(ring, 1)
    }

    /// `R^n`, element `(c_1, ..., c_n)` at index `sum c_i k^(n-i)` (first coordinate most significant).
    pub fn free(ring: &FinRing, n: usize) -> Self {
        let k = ring.size();
        let size = k.pow(n as u32);
        let coords: Vec<Vec<usize>> = (0..size).map(|i| free_coords(k, n, i)).collect();
        let encode = |c: &[usize]| c.iter().fold(0, |acc, &x| acc * k + x);
        let add = coords
            .iter()
            .map(|a| {
                coords
                    .iter()
                    .map(|b| encode(&a.iter().zip(b).map(|(&x, &y)| ring.add(x, y)).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let act = (0..k)
            .map(|r| coords.iter().map(|a| encode(&a.iter().map(|&x| ring.mul(r, x)).collect::<Vec<_>>())).collect())
            .collect();
        FinMod::new_unchecked(ring.clone(), add, act)
    }

    /// Index of the `i`-th standard basis vector of `R^n`.
    pub fn free_basis(ring: &FinRing, n: usize) -> Vec<usize> {
        let k = ring.size();
        (0..n).map(|i| ring.one() * k.pow((n - 1 - i) as u32)).collect()
    }

    pub fn ring(&self) -> &FinRing {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn act_table(&self) -> &[Vec<usize>] {
        &self.act
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add[a][self.neg[b]]
    }

    pub fn act(&self, r: usize, m: usize) -> usize {
        self.act[r][m]
    }

    /// `sum_i coeffs[i] * elems[i]`.
    pub fn combine(&self, coeffs: &[usize], elems: &[usize]) -> usize {
        coeffs.iter().zip(elems).fold(self.zero, |acc, (&r, &m)| self.add(acc, self.act(r, m)))
    }

    /// Membership mask of the submodule generated by `gens`.
    pub fn submodule(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.size];
        mask[self.zero] = true;
        let mut members = vec![self.zero];
        for &g in gens {
            let multiples: Vec<usize> = (0..self.ring.size()).map(|r| self.act(r, g)).collect();
            let mut next = Vec::new();
            for &s in &members {
                for &x in &multiples {
                    let y = self.add(s, x);
                    if !mask[y] {
                        mask[y] = true;
                        next.push(y);
                    }
                }
            }
            members.extend(next);
        }
        mask
    }

    /// Quotient by a submodule mask, with the projection. Representatives are
    /// the lowest index in each coset.
    pub fn quotient(&self, sub: &[bool]) -> Result<(FinMod, ModHom)> {
        if sub.len() != self.size || !is_submodule(self, sub) {
            return invalid("quotient requires a submodule");
        }
        let (reps, class_of) = cosets(&self.add, sub);
        let ring_reps: Vec<usize> = (0..self.ring.size()).collect();
        let add = quotient_table(&self.add, &reps, &reps, &class_of);
        let act = quotient_table(&self.act, &ring_reps, &reps, &class_of);
        let q = FinMod::new(self.ring.clone(), reps.len(), add, act)?;
        let proj = ModHom::new(self.clone(), q.clone(), class_of)?;
        Ok((q, proj))
    }

    /// Coset representatives matching the quotient's element order.
    pub fn coset_representatives(&self, sub: &[bool]) -> Vec<usize> {
        cosets(&self.add, sub).0
    }
}

fn is_submodule(m: &FinMod, sub: &[bool]) -> bool {
    sub[m.zero()]
        && (0..m.size()).filter(|&x| sub[x]).all(|x| {
            (0..m.size()).filter(|&y| sub[y]).all(|y| sub[m.add(x, y)])
                && (0..m.ring().size()).all(|r| sub[m.act(r, x)])
        })
}

pub(crate) fn free_coords(k: usize, n: usize, mut idx: usize) -> Vec<usize> {
    let mut c = vec![0; n];
    for x in c.iter_mut().rev() {
        *x = idx % k;
        idx /= k;
    }
    c
}

/// `R`-linear map between finite modules over the same ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModHom {
    src: FinMod,
    dst: FinMod,
    map: Vec<usize>,
}

impl ModHom {
    pub fn new(src: FinMod, dst: FinMod, map: Vec<usize>) -> Result<Self> {
        if src.ring() != dst.ring() {
            return invalid("module hom endpoints are over different rings");
        }
        check_map("module hom", &map, src.size(), dst.size())?;
        for a in 0..src.size() {
            for b in 0..src.size() {
                if map[src.add(a, b)] != dst.add(map[a], map[b]) {
                    return invalid(format!("module hom not additive at ({a}, {b})"));
                }
            }
            for r in 0..src.ring().size() {
                if map[src.act(r, a)] != dst.act(r, map[a]) {
                    return invalid(format!("module hom not R-linear at ({r}, {a})"));
                }
            }
        }
        Ok(ModHom { src, dst, map })
    }

    pub fn identity(m: &FinMod) -> Self {
        ModHom { src: m.clone(), dst: m.clone(), map: (0..m.size()).collect() }
    }

    pub fn zero(src: &FinMod, dst: &FinMod) -> Self {
        ModHom { src: src.clone(), dst: dst.clone(), map: vec![dst.zero(); src.size()] }
    }

    /// The unique linear map sending `basis[i]` to `images[i]`, provided the
    /// basis spans and the assignment is consistent.
    pub fn extend_linearly(src: &FinMod, basis: &[usize], dst: &FinMod, images: &[usize]) -> Result<Self> {
        let k = src.ring().size();
        let n = basis.len();
        let mut map = vec![usize::MAX; src.size()];
        for idx in 0..k.pow(n as u32) {
            let c = free_coords(k, n, idx);
            let (x, y) = (src.combine(&c, basis), dst.combine(&c, images));
            if map[x] == usize::MAX {
                map[x] = y;
            } else if map[x] != y {
                return Err(Error::NotWellDefined("basis images violate a relation".into()));
            }
        }
        if map.contains(&usize::MAX) {
            return invalid("basis does not span the source");
        }
        ModHom::new(src.clone(), dst.clone(), map)
    }

    pub fn src(&self) -> &FinMod {
        &self.src
    }

    pub fn dst(&self) -> &FinMod {
        &self.dst
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ModHom) -> Result<ModHom> {
        if inner.dst != self.src {
            return Err(Error::Endpoints("module hom composition".into()));
        }
        let map = inner.map.iter().map(|&x| self.map[x]).collect();
        Ok(ModHom { src: inner.src.clone(), dst: self.dst.clone(), map })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.dst.size()];
        self.map.iter().for_each(|&y| hit[y] = true);
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        self.map.iter().filter(|&&y| y == self.dst.zero()).count() == 1
    }
}
