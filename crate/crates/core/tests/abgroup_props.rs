use std::collections::HashSet;

use num_traits::Zero;
use picard2::abgroup::{cokernel, kernel, lift_free, solve_preimage, AbGroup, AbHom};
use picard2::snf::smith_normal_form;
use picard2::{BigInt, Error, FinGenAbGroup, IntMatrix};
use picard2_testkit::groups::{factor_chains, finite_group, is_unit, mixed_group, random_hom, scrambled_group};
use picard2_testkit::reference::{determinant, determinantal_diagonal, elementary_diagonal, to_matrix};
use picard2_testkit::rng;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng as _;

fn entries(bound: i64) -> impl Strategy<Value = (usize, usize, Vec<Vec<i64>>)> {
    (0usize..=4, 0usize..=4).prop_flat_map(move |(m, n)| {
        (Just(m), Just(n), proptest::collection::vec(proptest::collection::vec(-bound..=bound, n), m))
    })
}

fn order(g: &FinGenAbGroup) -> usize {
    g.enumerate_elements().unwrap().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_diagonalises_with_unimodular_transforms((m, n, e) in entries(10)) {
        let a = to_matrix(m, n, &e);
        let s = smith_normal_form(&a);
        prop_assert_eq!(&s.u.mul(&a).mul(&s.v), &s.d);
        prop_assert!(is_unit(&determinant(&s.u)) && is_unit(&determinant(&s.v)));
        prop_assert_eq!(s.u_inv.mul(&s.u), IntMatrix::identity(m));
        prop_assert_eq!(s.v_inv.mul(&s.v), IntMatrix::identity(n));
        let diag: Vec<i128> = s.diagonal().iter().map(|x| i128::try_from(x).unwrap()).collect();
        prop_assert_eq!(&diag, &elementary_diagonal(&e, n));
        prop_assert_eq!(&diag, &determinantal_diagonal(&e, n));
        prop_assert_eq!(s.rank, diag.iter().filter(|&&x| x != 0).count());
    }

    #[test]
    fn snf_is_exact_for_large_entries((m, n, e) in entries(1_000_000_000)) {
        let a = to_matrix(m, n, &e);
        let s = smith_normal_form(&a);
        prop_assert_eq!(&s.u.mul(&a).mul(&s.v), &s.d);
        prop_assert!(is_unit(&determinant(&s.u)) && is_unit(&determinant(&s.v)));
        let d = s.diagonal();
        for w in d.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
    }

    #[test]
    fn snf_agrees_across_integer_types((m, n, e) in entries(10)) {
        let big = smith_normal_form(&to_matrix(m, n, &e));
        let small = smith_normal_form(&IntMatrix::from_vec(m, n, e.concat().into_iter().map(BigInt::from).collect())
            .unwrap()
            .map(|x| i64::try_from(x).unwrap()));
        prop_assert_eq!(big.d.map(|x| i64::try_from(x).unwrap()), small.d);
        prop_assert_eq!(big.u.map(|x| i64::try_from(x).unwrap()), small.u);
    }

    #[test]
    fn canonical_form_ignores_the_presentation(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let chains = factor_chains(12, 3, 200);
        let chain = chains.choose(&mut rng).unwrap().clone();
        let rank = rng.gen_range(0..=2);
        let g = scrambled_group(&mut rng, &chain, rank);
        let h = scrambled_group(&mut rng, &chain, rank);
        let want: Vec<BigInt> = chain.iter().map(|&d| BigInt::from(d)).collect();
        prop_assert_eq!(g.invariant_factors(), &want[..]);
        prop_assert_eq!(g.free_rank(), rank);
        prop_assert!(g.is_isomorphic(&h));
        let c = g.canonical_group();
        prop_assert_eq!(c.invariant_factors(), g.invariant_factors());
        let cc = c.canonical_group();
        prop_assert_eq!(cc.rels(), c.rels());
    }

    #[test]
    fn reduce_is_a_normal_form(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = mixed_group(&mut rng);
        let x: Vec<BigInt> = (0..g.gens()).map(|_| BigInt::from(rng.gen_range(-20..=20))).collect();
        let y = g.normalize(&x);
        prop_assert_eq!(g.reduce(&y), g.reduce(&x));
        prop_assert_eq!(g.normalize(&y), y.clone());
        prop_assert!(g.elements_equal(&x, &y));
        prop_assert!(g.is_zero(&g.add(&x, &g.neg(&x))));
    }

    #[test]
    fn order_matches_enumeration(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = finite_group(&mut rng, 36);
        let elements = g.enumerate_elements().unwrap();
        prop_assert_eq!(BigInt::from(elements.len()), g.order().unwrap());
        let distinct: HashSet<Vec<BigInt>> = elements.iter().map(|x| g.reduce(x)).collect();
        prop_assert_eq!(distinct.len(), elements.len());
    }

    #[test]
    fn kernel_and_cokernel_contracts(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (a, b) = (finite_group(&mut rng, 36), finite_group(&mut rng, 36));
        let f = random_hom(&mut rng, &a, &b);
        let (k, incl) = kernel(&f);
        let (q, proj) = cokernel(&f);
        prop_assert!(incl.is_injective() && proj.is_surjective());
        prop_assert!(f.compose(&incl).unwrap().is_zero_map());
        prop_assert!(proj.compose(&f).unwrap().is_zero_map());
        let image: HashSet<Vec<BigInt>> =
            a.enumerate_elements().unwrap().iter().map(|x| b.reduce(&f.apply(x))).collect();
        prop_assert_eq!(order(&a), order(&k) * image.len());
        prop_assert_eq!(order(&b), image.len() * order(&q));
    }

    #[test]
    fn kernel_and_cokernel_of_infinite_groups(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (a, b) = (mixed_group(&mut rng), mixed_group(&mut rng));
        let f = random_hom(&mut rng, &a, &b);
        let (_, incl) = kernel(&f);
        let (_, proj) = cokernel(&f);
        prop_assert!(incl.is_injective() && proj.is_surjective());
        prop_assert!(f.compose(&incl).unwrap().is_zero_map());
        prop_assert!(proj.compose(&f).unwrap().is_zero_map());
    }

    #[test]
    fn solve_preimage_fails_exactly_outside_the_image(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (a, b) = (finite_group(&mut rng, 24), finite_group(&mut rng, 24));
        let f = random_hom(&mut rng, &a, &b);
        let image: HashSet<Vec<BigInt>> =
            a.enumerate_elements().unwrap().iter().map(|x| b.reduce(&f.apply(x))).collect();
        for y in b.enumerate_elements().unwrap() {
            match solve_preimage(&f, &y) {
                Ok(x) => prop_assert!(b.elements_equal(&f.apply(&x), &y)),
                Err(Error::NoSolution) => prop_assert!(!image.contains(&b.reduce(&y))),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }

    #[test]
    fn lift_free_factors_through_surjections(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let b = mixed_group(&mut rng);
        let c = mixed_group(&mut rng);
        let f = if rng.gen_bool(0.5) {
            AbHom::project_first(&b, &c)
        } else {
            // Free cover of b, extended by zero on c.
            let cover = picard2::abgroup::free_cover(&b).1;
            AbHom::copair(&cover, &AbHom::zero(c.clone(), b.clone())).unwrap()
        };
        prop_assert!(f.is_surjective());
        let p = AbGroup::free(rng.gen_range(0..=3));
        let g = random_hom(&mut rng, &p, &b);
        let lifted = lift_free(&g, &f).unwrap();
        prop_assert!(f.compose(&lifted).unwrap().equals(&g));
    }
}
