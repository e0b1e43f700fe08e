//! Table validators are compared with brute-force axiom checks written out
//! independently below; quotient constructions are re-validated.

use std::collections::BTreeSet;

use picard2::ring2mod::{
    dis_module, dis_module_hom, dis_ring, is_mod_essentially_surjective, pi0_module, pi0_module_hom,
    pi0_module_with_projection, pi0_ring, pi0_ring_with_projection, pi1_module, FinGroupTable, FinMod, FinRing, Mod2,
    Mod2Hom, ModHom, Strict2Ring,
};
use picard2_testkit::modules::{random_mod2, random_module, random_module_hom, small_rings};
use picard2_testkit::{rng, Rng};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng as _;

type Table = Vec<Vec<usize>>;

fn shaped(t: &[Vec<usize>], rows: usize, cols: usize, bound: usize) -> bool {
    t.len() == rows && t.iter().all(|r| r.len() == cols && r.iter().all(|&x| x < bound))
}

fn group_ok(n: usize, add: &[Vec<usize>], zero: usize) -> bool {
    if n == 0 || !shaped(add, n, n, n) || zero >= n {
        return false;
    }
    let all = 0..n;
    all.clone().all(|x| add[zero][x] == x && add[x][zero] == x && (0..n).any(|y| add[x][y] == zero))
        && all.clone().all(|x| (0..n).all(|y| add[x][y] == add[y][x]))
        && all.clone().all(|x| (0..n).all(|y| (0..n).all(|z| add[add[x][y]][z] == add[x][add[y][z]])))
}

fn ring_ok(n: usize, add: &[Vec<usize>], mul: &[Vec<usize>], zero: usize, one: usize) -> bool {
    if !group_ok(n, add, zero) || !shaped(mul, n, n, n) || one >= n {
        return false;
    }
    (0..n).all(|a| mul[one][a] == a && mul[a][one] == a)
        && (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    mul[mul[a][b]][c] == mul[a][mul[b][c]]
                        && mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
                        && mul[add[a][b]][c] == add[mul[a][c]][mul[b][c]]
                })
            })
        })
}

fn module_ok(r: &FinRing, n: usize, add: &[Vec<usize>], act: &[Vec<usize>]) -> bool {
    let Some(zero) = (0..n).find(|&z| add.get(z).is_some_and(|row| row.iter().enumerate().all(|(x, &y)| x == y)))
    else {
        return false;
    };
    if !group_ok(n, add, zero) || !shaped(act, r.size(), n, n) {
        return false;
    }
    let k = r.size();
    (0..n).all(|m| act[r.one()][m] == m)
        && (0..k).all(|a| {
            (0..n).all(|m| {
                (0..n).all(|p| act[a][add[m][p]] == add[act[a][m]][act[a][p]])
                    && (0..k).all(|b| {
                        act[r.add(a, b)][m] == add[act[a][m]][act[b][m]] && act[r.mul(a, b)][m] == act[a][act[b][m]]
                    })
            })
        })
}

fn linear_ok(src: &FinMod, dst: &FinMod, map: &[usize]) -> bool {
    map.len() == src.size()
        && map.iter().all(|&y| y < dst.size())
        && (0..src.size()).all(|x| {
            (0..src.size()).all(|y| map[src.add(x, y)] == dst.add(map[x], map[y]))
                && (0..src.ring().size()).all(|r| map[src.act(r, x)] == dst.act(r, map[x]))
        })
}

struct TwoRingTables {
    r1: FinGroupTable,
    delta: Vec<usize>,
    left: Table,
    right: Table,
}

fn two_ring_ok(r0: &FinRing, t: &TwoRingTables) -> bool {
    let (n1, n0) = (t.r1.size(), r0.size());
    let (add, d, l, rt) = (|a, b| t.r1.add(a, b), &t.delta, &t.left, &t.right);
    if d.len() != n1 || d.iter().any(|&x| x >= n0) || !shaped(l, n0, n1, n1) || !shaped(rt, n1, n0, n1) {
        return false;
    }
    let pairs = (0..n1).all(|s| (0..n1).all(|u| d[add(s, u)] == r0.add(d[s], d[u]) && l[d[s]][u] == rt[s][d[u]]));
    let actions = (0..n0).all(|r| {
        l[r0.one()].iter().enumerate().all(|(s, &x)| x == s)
            && (0..n1).all(|s| {
                rt[s][r0.one()] == s
                    && d[l[r][s]] == r0.mul(r, d[s])
                    && d[rt[s][r]] == r0.mul(d[s], r)
                    && (0..n1).all(|u| {
                        l[r][add(s, u)] == add(l[r][s], l[r][u]) && rt[add(s, u)][r] == add(rt[s][r], rt[u][r])
                    })
                    && (0..n0).all(|q| {
                        l[r0.add(r, q)][s] == add(l[r][s], l[q][s])
                            && rt[s][r0.add(r, q)] == add(rt[s][r], rt[s][q])
                            && l[r0.mul(r, q)][s] == l[r][l[q][s]]
                            && rt[s][r0.mul(r, q)] == rt[rt[s][r]][q]
                            && l[r][rt[s][q]] == rt[l[r][s]][q]
                    })
            })
    });
    let image: BTreeSet<usize> = d.iter().copied().collect();
    let ideal = image.iter().all(|&a| (0..n0).all(|r| image.contains(&r0.mul(r, a)) && image.contains(&r0.mul(a, r))));
    pairs && actions && ideal
}

/// `I + R/I -> R`, `(i, m) -> i`, for the principal ideal `I = Ra` of a
/// commutative ring; `R/I` is annihilated by `I`, so the Peiffer identity holds.
fn ideal_two_ring(ring: &FinRing, a: usize, with_quotient: bool) -> TwoRingTables {
    let k = ring.size();
    let ideal: Vec<usize> = (0..k).map(|r| ring.mul(r, a)).collect::<BTreeSet<_>>().into_iter().collect();
    let idx = |x: usize| ideal.iter().position(|&y| y == x).expect("ideal is closed");
    let class = |x: usize| (0..k).find(|&y| ideal.iter().any(|&i| ring.add(y, i) == x)).expect("coset");
    let reps: Vec<usize> = if with_quotient {
        (0..k).map(class).collect::<BTreeSet<_>>().into_iter().collect()
    } else {
        vec![ring.zero()]
    };
    let rep_idx = |x: usize| reps.iter().position(|&y| y == class(x)).unwrap_or(0);
    let q = reps.len();
    let elems: Vec<(usize, usize)> = (0..ideal.len() * q).map(|e| (e / q, e % q)).collect();
    let pack = |i: usize, m: usize| idx(i) * q + if with_quotient { rep_idx(m) } else { 0 };
    let add: Table = elems
        .iter()
        .map(|&(i, m)| {
            elems.iter().map(|&(j, n)| pack(ring.add(ideal[i], ideal[j]), ring.add(reps[m], reps[n]))).collect()
        })
        .collect();
    let left: Table = (0..k)
        .map(|r| elems.iter().map(|&(i, m)| pack(ring.mul(r, ideal[i]), ring.mul(r, reps[m]))).collect())
        .collect();
    let right: Table = elems
        .iter()
        .map(|&(i, m)| (0..k).map(|r| pack(ring.mul(ideal[i], r), ring.mul(reps[m], r))).collect())
        .collect();
    let zero = pack(ring.zero(), ring.zero());
    TwoRingTables {
        r1: FinGroupTable::new(elems.len(), add, zero).expect("product of groups"),
        delta: elems.iter().map(|&(i, _)| ideal[i]).collect(),
        left,
        right,
    }
}

fn any_ring(rng: &mut Rng) -> FinRing {
    small_rings().choose(rng).unwrap().1.clone()
}

fn corrupt(rng: &mut Rng, table: &mut [Vec<usize>], bound: usize) {
    let i = rng.gen_range(0..table.len());
    let j = rng.gen_range(0..table[i].len());
    table[i][j] = rng.gen_range(0..=bound);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_validator_matches_axioms(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = any_ring(&mut rng);
        let (mut add, mut mul) = (r.add_table().to_vec(), r.mul_table().to_vec());
        let target_add = rng.gen_bool(0.5);
        corrupt(&mut rng, if target_add { &mut add } else { &mut mul }, r.size());
        let changed = add != r.add_table() || mul != r.mul_table();
        let verdict = FinRing::new(r.size(), add.clone(), mul.clone(), r.zero(), r.one()).is_ok();
        prop_assert_eq!(verdict, ring_ok(r.size(), &add, &mul, r.zero(), r.one()));
        // A single changed entry of a group table or of a biadditive table
        // with a unit never gives another ring.
        prop_assert_eq!(verdict, !changed);
    }

    #[test]
    fn module_validator_matches_axioms(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = any_ring(&mut rng);
        let (m, _) = random_module(&mut rng, &r, 16);
        let (mut add, mut act) = (m.add_table().to_vec(), m.act_table().to_vec());
        let target_add = rng.gen_bool(0.5);
        corrupt(&mut rng, if target_add { &mut add } else { &mut act }, m.size());
        let changed = add != m.add_table() || act != m.act_table();
        let verdict = FinMod::new(r.clone(), m.size(), add.clone(), act.clone()).is_ok();
        prop_assert_eq!(verdict, module_ok(&r, m.size(), &add, &act));
        if m.size() > 1 {
            prop_assert_eq!(verdict, !changed);
        }
    }

    #[test]
    fn hom_validators_match_linearity(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let ring = any_ring(&mut rng);
        let m = random_mod2(&mut rng, &ring, 16);
        let mut delta = m.delta().map().to_vec();
        let i = rng.gen_range(0..delta.len());
        delta[i] = rng.gen_range(0..=m.m0().size());
        let verdict = Mod2::from_tables(m.m1().clone(), m.m0().clone(), delta.clone()).is_ok();
        prop_assert_eq!(verdict, linear_ok(m.m1(), m.m0(), &delta));

        let id = Mod2Hom::identity(&m);
        let mut f0 = id.f0().map().to_vec();
        let i = rng.gen_range(0..f0.len());
        f0[i] = rng.gen_range(0..m.m0().size());
        let commutes = (0..m.m1().size()).all(|x| m.delta().apply(x) == f0[m.delta().apply(x)]);
        let verdict = Mod2Hom::from_tables(m.clone(), m.clone(), id.f1().map().to_vec(), f0.clone()).is_ok();
        prop_assert_eq!(verdict, linear_ok(m.m0(), m.m0(), &f0) && commutes);
    }

    #[test]
    fn two_ring_validator_matches_axioms(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = any_ring(&mut rng);
        let a = rng.gen_range(0..r.size());
        let mut t = ideal_two_ring(&r, a, rng.gen_bool(0.5));
        let build = |t: &TwoRingTables| {
            Strict2Ring::new(t.r1.clone(), r.clone(), t.delta.clone(), t.left.clone(), t.right.clone())
        };
        prop_assert!(build(&t).is_ok() && two_ring_ok(&r, &t));
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..t.delta.len());
                t.delta[i] = rng.gen_range(0..=r.size());
            }
            1 => corrupt(&mut rng, &mut t.left, t.r1.size()),
            _ => corrupt(&mut rng, &mut t.right, t.r1.size()),
        }
        prop_assert_eq!(build(&t).is_ok(), two_ring_ok(&r, &t));
    }

    #[test]
    fn pi0_of_a_two_ring_is_a_ring(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = any_ring(&mut rng);
        let a = rng.gen_range(0..r.size());
        let t = ideal_two_ring(&r, a, rng.gen_bool(0.5));
        let two = Strict2Ring::new(t.r1, r.clone(), t.delta.clone(), t.left, t.right).unwrap();
        let (q, proj) = pi0_ring_with_projection(&two).unwrap();
        let image: BTreeSet<usize> = t.delta.iter().copied().collect();
        prop_assert_eq!(q.size() * image.len(), r.size());
        prop_assert!(ring_ok(q.size(), q.add_table(), q.mul_table(), q.zero(), q.one()));
        for x in 0..r.size() {
            for y in 0..r.size() {
                prop_assert_eq!(proj[r.mul(x, y)], q.mul(proj[x], proj[y]));
                prop_assert_eq!(proj[r.add(x, y)], q.add(proj[x], proj[y]));
            }
        }
    }

    #[test]
    fn pi0_and_pi1_of_a_two_module_are_modules(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let ring = any_ring(&mut rng);
        let m = random_mod2(&mut rng, &ring, 16);
        let r = m.ring();
        let (q, proj) = pi0_module_with_projection(&m).unwrap();
        let image: BTreeSet<usize> = (0..m.m1().size()).map(|x| m.delta().apply(x)).collect();
        prop_assert_eq!(q.size() * image.len(), m.m0().size());
        prop_assert!(module_ok(r, q.size(), q.add_table(), q.act_table()));
        prop_assert!(proj.is_surjective() && linear_ok(m.m0(), &q, proj.map()));
        let k = pi1_module(&m).unwrap();
        let kernel = (0..m.m1().size()).filter(|&x| m.delta().apply(x) == m.m0().zero()).count();
        prop_assert_eq!(k.size(), kernel);
        prop_assert!(module_ok(r, k.size(), k.add_table(), k.act_table()));
    }

    #[test]
    fn discrete_round_trips(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = any_ring(&mut rng);
        prop_assert_eq!(&pi0_ring(&dis_ring(&r)).unwrap(), &r);
        let (n, _) = random_module(&mut rng, &r, 16);
        let back = pi0_module(&dis_module(&n)).unwrap();
        prop_assert_eq!(&back, &n);
        prop_assert_eq!(dis_module(&back), dis_module(&n));
    }

    #[test]
    fn surjections_survive_dis_and_pi0(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = any_ring(&mut rng);
        let (m, gens) = random_module(&mut rng, &r, 16);
        let f = if rng.gen_bool(0.5) {
            let sub: Vec<usize> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..m.size())).collect();
            m.quotient(&m.submodule(&sub)).unwrap().1
        } else {
            let (n, _) = random_module(&mut rng, &r, 16);
            random_module_hom(&mut rng, &m, &gens, &n)
        };
        let lifted = dis_module_hom(&f);
        prop_assert_eq!(is_mod_essentially_surjective(&lifted), f.is_surjective());
        if f.is_surjective() {
            let back: ModHom = pi0_module_hom(&lifted).unwrap();
            prop_assert!(back.is_surjective());
            prop_assert_eq!(back.map(), f.map());
        }
    }
}
