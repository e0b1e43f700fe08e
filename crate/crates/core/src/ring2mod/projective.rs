use super::mod2::{
    canonical_quotient_mod, dis_module, dis_module_hom, image_mask, is_mod_essentially_surjective,
    pi0_module_with_projection, require_same_target, Mod2, Mod2Hom, ModHomotopy,
};
use super::module::{FinMod, ModHom};
use crate::error::{Error, Result};

/// A basis of `m` when it is free, found by lowest-index search.
///
/// `R^n` has `k^n` elements, so `n` generators that span are automatically a
/// basis. Modules whose tables coincide with the standard `R^n` get the
/// standard basis without searching.
pub fn find_basis(m: &FinMod) -> Option<Vec<usize>> {
    let k = m.ring().size();
    if k == 1 {
        return (m.size() == 1).then(Vec::new);
    }
    let mut n = 0;
    let mut size = 1;
    while size < m.size() {
        size *= k;
        n += 1;
    }
    if size != m.size() {
        return None;
    }
    let standard = FinMod::free(m.ring(), n);
    if standard.add_table() == m.add_table() && standard.act_table() == m.act_table() {
        return Some(FinMod::free_basis(m.ring(), n));
    }
    let mut chosen = Vec::with_capacity(n);
    search_basis(m, n, 0, &mut chosen).then_some(chosen)
}

fn search_basis(m: &FinMod, n: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == n {
        return m.submodule(chosen).into_iter().all(|b| b);
    }
    let span = m.submodule(chosen);
    for x in start..m.size() {
        if span[x] {
            continue;
        }
        chosen.push(x);
        if search_basis(m, n, x + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `m1 = 0` and `m0` free.
pub fn is_discrete_free_mod(p: &Mod2) -> bool {
    p.m1().size() == 1 && find_basis(p.m0()).is_some()
}

/// Greedy cover `R^q -> N`: repeatedly adjoin the lowest-index element outside
/// the submodule generated so far.
pub fn free_cover_mod(n: &FinMod) -> (FinMod, ModHom) {
    let gens = greedy_generators(n);
    let free = FinMod::free(n.ring(), gens.len());
    let basis = FinMod::free_basis(n.ring(), gens.len());
    let cover = ModHom::extend_linearly(&free, &basis, n, &gens).expect("free modules have no relations");
    debug_assert!(cover.is_surjective());
    (free, cover)
}

fn greedy_generators(n: &FinMod) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = n.submodule(&gens);
    while let Some(x) = (0..n.size()).find(|&x| !span[x]) {
        gens.push(x);
        span = n.submodule(&gens);
    }
    gens
}

/// Solves the lifting problem for a discrete free `P`: returns `G': P -> B`
/// and `h: F ∘ G' => G`.
///
/// For each basis element, takes the lowest-index object of `B` whose image is
/// isomorphic to `G(e)` and the lowest-index morphism witnessing it.
pub fn lift_discrete_free_mod(g: &Mod2Hom, f: &Mod2Hom) -> Result<(Mod2Hom, ModHomotopy)> {
    require_same_target(g, f)?;
    let p = g.src();
    let basis = (p.m1().size() == 1).then(|| find_basis(p.m0())).flatten().ok_or(Error::NotDiscreteFree)?;
    if !is_mod_essentially_surjective(f) {
        return Err(Error::NotEssentiallySurjective);
    }
    let (b, c) = (f.src(), f.dst());
    let mut objects = Vec::with_capacity(basis.len());
    let mut witnesses = Vec::with_capacity(basis.len());
    for &e in &basis {
        let target = g.f0().apply(e);
        let (x, w) = (0..b.m0().size())
            .find_map(|x| {
                let fx = f.f0().apply(x);
                (0..c.m1().size()).find(|&w| c.m0().add(fx, c.delta().apply(w)) == target).map(|w| (x, w))
            })
            .expect("essential surjectivity guarantees a preimage class");
        objects.push(x);
        witnesses.push(w);
    }
    let level0 = ModHom::extend_linearly(p.m0(), &basis, b.m0(), &objects)?;
    let level1 = ModHom::zero(p.m1(), b.m1());
    let g_prime = Mod2Hom::new(p.clone(), b.clone(), level1, level0)?;
    let t = ModHom::extend_linearly(p.m0(), &basis, c.m1(), &witnesses)?;
    let h = ModHomotopy::new(f.compose(&g_prime)?, g.clone(), t)?;
    debug_assert!(super::check_mod_2morphism(&h));
    Ok((g_prime, h))
}

#[derive(Clone, Debug)]
pub struct ModPresentationCert {
    pub p_discrete_free: bool,
    pub f_essentially_surjective: bool,
    /// `H ∘ F` equals `dis(cover)` exactly.
    pub triangle_strict: bool,
    pub cover: ModHom,
}

impl ModPresentationCert {
    pub fn holds(&self) -> bool {
        self.p_discrete_free && self.f_essentially_surjective && self.triangle_strict
    }
}

/// `F: dis(R^q) -> M` essentially surjective, sending each basis vector to the
/// lowest-index object in the class chosen by the greedy cover of `pi0(M)`.
pub fn module_projective_presentation(m: &Mod2) -> Result<(Mod2, Mod2Hom, ModPresentationCert)> {
    let (q, _) = pi0_module_with_projection(m)?;
    let (free, cover) = free_cover_mod(&q);
    let reps = m.m0().coset_representatives(&image_mask(m.delta()));
    let basis = FinMod::free_basis(m.ring(), greedy_generators(&q).len());
    let objects: Vec<usize> = basis.iter().map(|&e| reps[cover.apply(e)]).collect();
    let p = dis_module(&free);
    let f0 = ModHom::extend_linearly(&free, &basis, m.m0(), &objects)?;
    let f = Mod2Hom::new(p.clone(), m.clone(), ModHom::zero(p.m1(), m.m1()), f0)?;

    let composite = canonical_quotient_mod(m)?.compose(&f)?;
    let cert = ModPresentationCert {
        p_discrete_free: is_discrete_free_mod(&p),
        f_essentially_surjective: is_mod_essentially_surjective(&f),
        triangle_strict: composite == dis_module_hom(&cover),
        cover,
    };
    Ok((p, f, cert))
}
