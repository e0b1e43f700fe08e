use picard2::abgroup::{cokernel, free_cover, kernel, AbGroup, AbHom};
use picard2::json::{chain_map_from_json, chain_map_to_json, complex_from_json, complex_to_json};
use picard2::oracle::{oracle_predicate, PredicateKind};
use picard2::sgp2::{
    canonical_h, check_2morphism, cokernel2, dis, dis_hom, is_discrete_free, is_essentially_surjective, is_extension,
    is_faithful, is_full, kernel2, lift_discrete_free, pi0, pi0_hom, pi1, pi1_hom, projective_presentation,
    two_exactness_witnesses, Complex,
};
use picard2::{ChainHom, Error, PicardComplex};
use picard2_testkit::groups::{
    finite_chain_map, map_from_discrete_free, mixed_complex, random_hom, random_triple, scrambled_group,
};
use picard2_testkit::{rng, Rng};
use proptest::prelude::*;
use rand::Rng as _;

fn surjection_onto(rng: &mut Rng, b: &PicardComplex) -> ChainHom {
    // Cokernel projections and canonical quotients are essentially surjective
    // by construction; random maps only sometimes.
    match rng.gen_range(0..3) {
        0 => canonical_h(b),
        1 => projective_presentation(b).unwrap().1,
        _ => {
            let f = finite_chain_map(rng, 24);
            cokernel2(&f).unwrap().proj
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn predicates_agree_with_the_oracle(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = finite_chain_map(&mut rng, 24);
        let formula = [is_faithful(&f), is_full(&f), is_essentially_surjective(&f)];
        for (kind, want) in PredicateKind::ALL.into_iter().zip(formula) {
            prop_assert_eq!(oracle_predicate(&f, kind).unwrap().verdict, want, "{}", kind.name());
        }
    }

    #[test]
    fn kernel_and_cokernel_satisfy_their_contracts(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = finite_chain_map(&mut rng, 36);
        let k = kernel2(&f).unwrap();
        let c = cokernel2(&f).unwrap();
        prop_assert!(is_faithful(&k.incl));
        prop_assert!(is_essentially_surjective(&c.proj));
        prop_assert!(check_2morphism(&k.eps) && check_2morphism(&c.pi));
        prop_assert!(pi0(&c.complex).0.is_isomorphic(&cokernel(&pi0_hom(&f)).0));
        prop_assert!(pi1(&k.complex).is_isomorphic(&kernel(&pi1_hom(&f)).0));
    }

    #[test]
    fn exactness_conditions_are_equivalent(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let (gamma, sigma, phi) = random_triple(&mut rng, 12);
        let cert = two_exactness_witnesses(&gamma, &sigma, &phi).unwrap();
        prop_assert_eq!(cert.condition1(), cert.condition2());
        prop_assert!(cert.is_consistent());
        prop_assert!(is_extension(&gamma, &sigma, &phi).unwrap().agree());
    }

    #[test]
    fn kernel_triples_are_exact(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = finite_chain_map(&mut rng, 24);
        let k = kernel2(&f).unwrap();
        let c = cokernel2(&f).unwrap();
        prop_assert!(two_exactness_witnesses(&k.incl, &f, &k.eps).unwrap().condition1());
        prop_assert!(two_exactness_witnesses(&f, &c.proj, &c.pi).unwrap().condition2());
    }

    #[test]
    fn presentations_are_projective_and_strict(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let a = mixed_complex(&mut rng);
        let (p, f, cert) = projective_presentation(&a).unwrap();
        prop_assert!(cert.holds());
        prop_assert!(is_discrete_free(&p) && is_essentially_surjective(&f));
        let cover = free_cover(&pi0(&a).0).1;
        prop_assert!(canonical_h(&a).compose(&f).unwrap().equals(&dis_hom(&cover)));
        prop_assert!(check_2morphism(&cert.triangle));
    }

    #[test]
    fn canonical_quotient_is_full_and_essentially_surjective(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let h = canonical_h(&mixed_complex(&mut rng));
        prop_assert!(is_full(&h) && is_essentially_surjective(&h));
    }

    #[test]
    fn surjections_and_essential_surjections(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let a = mixed_complex(&mut rng);
        // Cokernel projections of groups are surjective.
        let (_, q) = cokernel(&random_hom(&mut rng, a.c1(), a.c0()));
        prop_assert!(is_essentially_surjective(&dis_hom(&q)));
        let f = finite_chain_map(&mut rng, 24);
        if oracle_predicate(&f, PredicateKind::EssentiallySurjective).unwrap().verdict {
            prop_assert!(pi0_hom(&f).is_surjective());
        }
    }

    #[test]
    fn discrete_free_complexes_have_free_pi0(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let rank = rng.gen_range(0..=3);
        let c1 = scrambled_group(&mut rng, &[], 0);
        let c0 = scrambled_group(&mut rng, &[], rank);
        let p = Complex::new(AbHom::zero(c1, c0));
        prop_assert!(is_discrete_free(&p));
        let g = pi0(&p).0;
        prop_assert!(g.is_free() && g.free_rank() == rank);
        let a = mixed_complex(&mut rng);
        if is_discrete_free(&a) {
            prop_assert!(pi0(&a).0.is_free());
        }
    }

    #[test]
    fn lifts_out_of_discrete_free_complexes(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let b = mixed_complex(&mut rng);
        let f = surjection_onto(&mut rng, &b);
        prop_assert!(is_essentially_surjective(&f));
        let k = rng.gen_range(0..=3);
        let g = map_from_discrete_free(&mut rng, k, f.dst());
        let (g_prime, h) = lift_discrete_free(&g, &f).unwrap();
        prop_assert!(check_2morphism(&h));
        prop_assert!(h.src().equals(&f.compose(&g_prime).unwrap()));
        prop_assert!(h.dst().equals(&g));
    }

    #[test]
    fn lifts_need_essential_surjectivity(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = finite_chain_map(&mut rng, 24);
        let g = map_from_discrete_free(&mut rng, 1, f.dst());
        match lift_discrete_free(&g, &f) {
            Ok((_, h)) => prop_assert!(check_2morphism(&h)),
            Err(e) => {
                prop_assert!(!is_essentially_surjective(&f));
                prop_assert!(matches!(e, Error::NotEssentiallySurjective), "{e}");
            }
        }
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let a = mixed_complex(&mut rng);
        let back: PicardComplex = complex_from_json(&complex_to_json(&a), "$").unwrap();
        prop_assert!(back == a);
        let f = finite_chain_map(&mut rng, 24);
        let back: ChainHom = chain_map_from_json(&chain_map_to_json(&f), "$").unwrap();
        prop_assert!(back.equals(&f));
    }
}

#[test]
fn dis_of_free_groups_is_discrete_free() {
    for n in 0..4 {
        assert!(is_discrete_free(&dis(&AbGroup::<picard2::BigInt>::free(n))));
    }
    assert!(!is_discrete_free(&dis(&AbGroup::<picard2::BigInt>::cyclic(2.into()))));
}
