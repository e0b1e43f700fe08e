//! Random finite modules and 2-modules over small rings.

use picard2::ring2mod::{dis_module, FinMod, FinRing, Mod2, Mod2Hom, ModHom};
use rand::Rng as _;

use crate::Rng;

/// `Z/2`, `Z/3`, `Z/4`, `Z/6` and `F_2[x]/(x^2)`.
pub fn small_rings() -> Vec<(&'static str, FinRing)> {
    vec![
        ("Z/2", FinRing::zmod(2)),
        ("Z/3", FinRing::zmod(3)),
        ("Z/4", FinRing::zmod(4)),
        ("Z/6", FinRing::zmod(6)),
        ("F2[x]/(x^2)", FinRing::f2_dual_numbers()),
    ]
}

/// `R^n / S` for a random submodule `S` on at most two generators, with
/// `R^n` of size at most 64 and the quotient of size at most `max_size`.
/// Returns the module and the images of the standard basis, which generate.
pub fn random_module(rng: &mut Rng, ring: &FinRing, max_size: usize) -> (FinMod, Vec<usize>) {
    let k = ring.size();
    let max_rank = (0..).take_while(|&n| k.pow(n) <= 64).last().unwrap_or(0) as usize;
    loop {
        let n = rng.gen_range(0..=max_rank);
        let free = FinMod::free(ring, n);
        let basis = FinMod::free_basis(ring, n);
        let relations: Vec<usize> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..free.size())).collect();
        let (q, proj) = free.quotient(&free.submodule(&relations)).expect("submodule mask");
        if q.size() <= max_size {
            let gens = basis.iter().map(|&e| proj.apply(e)).collect();
            return (q, gens);
        }
    }
}

/// Linear map out of a module generated by `gens`, with random images;
/// retries until the images respect the relations, then falls back to zero.
pub fn random_module_hom(rng: &mut Rng, src: &FinMod, gens: &[usize], dst: &FinMod) -> ModHom {
    for _ in 0..20 {
        let images: Vec<usize> = gens.iter().map(|_| rng.gen_range(0..dst.size())).collect();
        if let Ok(h) = ModHom::extend_linearly(src, gens, dst, &images) {
            return h;
        }
    }
    ModHom::zero(src, dst)
}

/// 2-module with both levels of size at most `max_size`.
pub fn random_mod2(rng: &mut Rng, ring: &FinRing, max_size: usize) -> Mod2 {
    let (m1, g1) = random_module(rng, ring, max_size);
    let (m0, _) = random_module(rng, ring, max_size);
    Mod2::new(random_module_hom(rng, &m1, &g1, &m0))
}

/// `dis(R^k) -> dst` with random images of the basis.
pub fn map_from_discrete_free_mod(rng: &mut Rng, k: usize, dst: &Mod2) -> Mod2Hom {
    let free = FinMod::free(dst.ring(), k);
    let basis = FinMod::free_basis(dst.ring(), k);
    let p = dis_module(&free);
    let f0 = random_module_hom(rng, &free, &basis, dst.m0());
    let f1 = ModHom::zero(p.m1(), dst.m1());
    Mod2Hom::new(p, dst.clone(), f1, f0).expect("discrete source")
}
