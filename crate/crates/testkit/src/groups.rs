//! Random groups, homs, complexes, chain maps and triples.
//!
//! Groups come with scrambled presentations: a diagonal presentation is
//! conjugated by random unimodular matrices and padded with redundant
//! generators and relations, so canonical forms are never handed in directly.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use picard2::abgroup::AbGroup;
use picard2::sgp2::{check_2morphism, cokernel2, kernel2, pi0, ChainMap, Complex, Homotopy};
use picard2::{BigInt, ChainHom, FinGenAbGroup, IntHom, IntHomotopy, IntMatrix, PicardComplex};
use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::Rng;

fn b(x: i64) -> BigInt {
    BigInt::from(x)
}

/// All divisibility chains `d_1 | d_2 | ...` with `d_i >= 2`, each at most
/// `max_factor`, of length at most `max_len` and product at most `max_order`.
pub fn factor_chains(max_factor: u64, max_len: usize, max_order: u64) -> Vec<Vec<u64>> {
    fn extend(chain: &mut Vec<u64>, max_factor: u64, max_len: usize, budget: u64, out: &mut Vec<Vec<u64>>) {
        out.push(chain.clone());
        if chain.len() == max_len {
            return;
        }
        let last = chain.last().copied().unwrap_or(1);
        let mut d = last.max(2);
        while d <= max_factor && d <= budget {
            if d % last == 0 {
                chain.push(d);
                extend(chain, max_factor, max_len, budget / d, out);
                chain.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_factor, max_len, max_order, &mut out);
    out
}

/// Random unimodular `n x n` matrix: a short product of elementary operations.
pub fn unimodular(rng: &mut Rng, n: usize) -> IntMatrix {
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| b((i == j) as i64)).collect()).collect();
    if n > 0 {
        for _ in 0..rng.gen_range(0..=2 * n) {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            match rng.gen_range(0..4) {
                0 => m.swap(i, j),
                1 => m[i].iter_mut().for_each(|x| *x = -x.clone()),
                _ if i != j => {
                    let c = b(rng.gen_range(-2..=2));
                    let src = m[j].clone();
                    for (x, y) in m[i].iter_mut().zip(src) {
                        *x += &c * y;
                    }
                }
                _ => {}
            }
        }
    }
    IntMatrix::from_rows(n, m).expect("square")
}

/// `Z^rank + Z/d_1 + ...`, presented on extra trivial generators and with
/// redundant relations, then scrambled on both sides.
pub fn scrambled_group(rng: &mut Rng, factors: &[u64], rank: usize) -> FinGenAbGroup {
    let trivial = rng.gen_range(0..=1);
    let n = factors.len() + rank + trivial;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, &d) in factors.iter().enumerate() {
        let mut r = vec![b(0); n];
        r[i] = b(d as i64);
        rows.push(r);
    }
    for k in 0..trivial {
        let mut r = vec![b(0); n];
        r[factors.len() + rank + k] = b(1);
        rows.push(r);
    }
    if !rows.is_empty() && rng.gen_bool(0.5) {
        let mut extra = vec![b(0); n];
        for r in &rows {
            let c = b(rng.gen_range(-2..=2));
            for (x, y) in extra.iter_mut().zip(r) {
                *x += &c * y;
            }
        }
        rows.push(extra);
    }
    let m = rows.len();
    let rels = IntMatrix::from_rows(n, rows).expect("rectangular");
    let scrambled = unimodular(rng, m).mul(&rels).mul(&unimodular(rng, n));
    AbGroup::new(n, scrambled).expect("valid presentation")
}

/// Finite group of order at most `max_order`, uniform over isomorphism types.
pub fn finite_group(rng: &mut Rng, max_order: u64) -> FinGenAbGroup {
    let chains = factor_chains(max_order, usize::MAX, max_order);
    let chain = chains.choose(rng).expect("trivial chain is always present").clone();
    scrambled_group(rng, &chain, 0)
}

/// Like [`finite_group`], restricted to orders of the form `2^a 3^b`, so
/// that two such groups usually admit non-zero homs.
pub fn smooth_group(rng: &mut Rng, max_order: u64) -> FinGenAbGroup {
    let smooth = |d: &u64| {
        let mut d = *d;
        for p in [2, 3] {
            while d.is_multiple_of(p) {
                d /= p;
            }
        }
        d == 1
    };
    let chains: Vec<Vec<u64>> =
        factor_chains(max_order, usize::MAX, max_order).into_iter().filter(|c| c.iter().all(smooth)).collect();
    let chain = chains.choose(rng).expect("trivial chain is always present").clone();
    scrambled_group(rng, &chain, 0)
}

/// Invariant factors at most 6 (at most two of them) and free rank at most 2.
pub fn mixed_group(rng: &mut Rng) -> FinGenAbGroup {
    let chains = factor_chains(6, 2, 36);
    let chain = chains.choose(rng).expect("non-empty").clone();
    let rank = rng.gen_range(0..=2);
    scrambled_group(rng, &chain, rank)
}

/// Random hom chosen on canonical generators: the image of a generator of
/// order `d` is a combination of target generators of order `e` with
/// coefficients divisible by `e / gcd(e, d)`, so every choice is well defined.
pub fn random_hom(rng: &mut Rng, src: &FinGenAbGroup, dst: &FinGenAbGroup) -> IntHom {
    let (cs, cd) = (src.canonical(), dst.canonical());
    let images: Vec<Vec<BigInt>> = (0..cs.len())
        .map(|i| {
            let d = cs.modulus(i);
            let y: Vec<BigInt> = (0..cd.len())
                .map(|j| {
                    let e = cd.modulus(j);
                    if e.is_zero() {
                        if d.is_zero() {
                            b(rng.gen_range(-2..=2))
                        } else {
                            b(0)
                        }
                    } else {
                        let step = &e / e.gcd(&d);
                        let e = e.to_i64().expect("small modulus");
                        b(rng.gen_range(0..e)) * step
                    }
                })
                .collect();
            cd.from.mul_vec(&y)
        })
        .collect();
    hom_from_canonical_images(src, dst, &images)
}

/// Hom sending canonical generator `i` of `src` to `images[i]` (presentation
/// coordinates of `dst`).
pub fn hom_from_canonical_images(src: &FinGenAbGroup, dst: &FinGenAbGroup, images: &[Vec<BigInt>]) -> IntHom {
    let y = IntMatrix::from_columns(dst.gens(), images);
    let m = y.mul(&src.canonical().to);
    IntHom::new(src.clone(), dst.clone(), m).expect("canonical images are well defined")
}

/// Elements `y` of `g` with `d * y = 0`.
fn killed_by(g: &FinGenAbGroup, elements: &[Vec<BigInt>], d: &BigInt) -> Vec<Vec<BigInt>> {
    elements.iter().filter(|y| g.is_zero(&y.iter().map(|x| x * d).collect::<Vec<_>>())).cloned().collect()
}

pub fn random_complex(rng: &mut Rng, c1: FinGenAbGroup, c0: FinGenAbGroup) -> PicardComplex {
    let delta = random_hom(rng, &c1, &c0);
    Complex::new(delta)
}

pub fn finite_complex(rng: &mut Rng, max_order: u64) -> PicardComplex {
    let c1 = finite_group(rng, max_order);
    let c0 = finite_group(rng, max_order);
    random_complex(rng, c1, c0)
}

pub fn mixed_complex(rng: &mut Rng) -> PicardComplex {
    let c1 = mixed_group(rng);
    let c0 = mixed_group(rng);
    random_complex(rng, c1, c0)
}

/// Chain map `a -> dst`; `f1` is drawn from the exhaustive list of admissible
/// images of each canonical generator of `a.c1`. Needs `dst.c1` finite.
///
/// The first `tries` attempts use an arbitrary `f0`. After that `f0` factors
/// through `pi0(a)`, so `f0 ∘ delta = 0` and `f1 = 0` is always admissible.
pub fn random_chain_map(rng: &mut Rng, a: &PicardComplex, dst: &PicardComplex, tries: usize) -> ChainHom {
    let elements = dst.c1().enumerate_elements().expect("finite target level 1");
    let c1 = a.c1().canonical();
    let (q, proj) = pi0(a);
    for attempt in 0..=tries {
        let f0 = if attempt < tries {
            random_hom(rng, a.c0(), dst.c0())
        } else {
            random_hom(rng, &q, dst.c0()).compose(&proj).expect("composable")
        };
        let mut images = Vec::with_capacity(c1.len());
        for i in 0..c1.len() {
            let g = c1.from.column(i);
            let target = f0.apply(&a.delta().apply(&g));
            let options: Vec<Vec<BigInt>> = killed_by(dst.c1(), &elements, &c1.modulus(i))
                .into_iter()
                .filter(|y| dst.c0().elements_equal(&dst.delta().apply(y), &target))
                .collect();
            match options.choose(rng) {
                Some(y) => images.push(y.clone()),
                None => break,
            }
        }
        if images.len() == c1.len() {
            let f1 = hom_from_canonical_images(a.c1(), dst.c1(), &images);
            return ChainMap::new(a.clone(), dst.clone(), f1, f0).expect("constructed to commute");
        }
    }
    unreachable!("f1 = 0 is admissible once f0 kills the image of delta")
}

/// Finite complex whose groups are mostly of `{2,3}`-smooth order.
pub fn related_complex(rng: &mut Rng, max_order: u64) -> PicardComplex {
    let pick = |rng: &mut Rng| {
        if rng.gen_bool(0.7) {
            smooth_group(rng, max_order)
        } else {
            finite_group(rng, max_order)
        }
    };
    let c1 = pick(rng);
    let c0 = pick(rng);
    random_complex(rng, c1, c0)
}

/// Chain map between two fresh finite complexes with groups of order at most
/// `max_order`; sometimes an endomorphism.
pub fn finite_chain_map(rng: &mut Rng, max_order: u64) -> ChainHom {
    let a = related_complex(rng, max_order);
    let dst = if rng.gen_bool(0.25) { a.clone() } else { related_complex(rng, max_order) };
    random_chain_map(rng, &a, &dst, 4)
}

/// `(gamma, sigma, phi)` with `phi: sigma ∘ gamma => 0`.
pub type Triple = (ChainHom, ChainHom, IntHomotopy);

/// A third of the triples are kernel inclusions, a third cokernel projections
/// and the rest random composable pairs with a null homotopy found by search.
pub fn random_triple(rng: &mut Rng, max_order: u64) -> Triple {
    match rng.gen_range(0..3) {
        0 => {
            let f = finite_chain_map(rng, max_order);
            let k = kernel2(&f).expect("kernel of a chain map");
            (k.incl, f, k.eps)
        }
        1 => {
            let f = finite_chain_map(rng, max_order);
            let c = cokernel2(&f).expect("cokernel of a chain map");
            (f, c.proj, c.pi)
        }
        _ => loop {
            let a = related_complex(rng, max_order);
            let bc = related_complex(rng, max_order);
            let c = related_complex(rng, max_order);
            let gamma = random_chain_map(rng, &a, &bc, 6);
            let sigma = random_chain_map(rng, &bc, &c, 6);
            if let Some(phi) = null_homotopy(rng, &gamma, &sigma) {
                return (gamma, sigma, phi);
            }
        },
    }
}

/// Searches `t: A0 -> C1` with `delta_C t = -sigma0 gamma0` generator by
/// generator, then checks `t delta_A = -sigma1 gamma1`.
pub fn null_homotopy(rng: &mut Rng, gamma: &ChainHom, sigma: &ChainHom) -> Option<IntHomotopy> {
    let composite = sigma.compose(gamma).ok()?;
    let (a, c) = (composite.src(), composite.dst());
    let elements = c.c1().enumerate_elements().ok()?;
    let ca = a.c0().canonical();
    for _ in 0..4 {
        let mut images = Vec::with_capacity(ca.len());
        for i in 0..ca.len() {
            let g = ca.from.column(i);
            let target = c.c0().neg(&composite.f0().apply(&g));
            let options: Vec<Vec<BigInt>> = killed_by(c.c1(), &elements, &ca.modulus(i))
                .into_iter()
                .filter(|y| c.c0().elements_equal(&c.delta().apply(y), &target))
                .collect();
            images.push(options.choose(rng)?.clone());
        }
        let t = hom_from_canonical_images(a.c0(), c.c1(), &images);
        let phi = Homotopy::to_zero(&composite, t).ok()?;
        if check_2morphism(&phi) {
            return Some(phi);
        }
    }
    None
}

/// `dis(Z^k) -> dst` with arbitrary images of the basis.
pub fn map_from_discrete_free(rng: &mut Rng, k: usize, dst: &PicardComplex) -> ChainHom {
    let p = picard2::sgp2::dis(&AbGroup::free(k));
    let f0 = random_hom(rng, p.c0(), dst.c0());
    let f1 = IntHom::zero(p.c1().clone(), dst.c1().clone());
    ChainMap::new(p, dst.clone(), f1, f0).expect("discrete source")
}

/// `|x| == 1`
pub fn is_unit(x: &BigInt) -> bool {
    x.is_one() || (-x).is_one()
}
