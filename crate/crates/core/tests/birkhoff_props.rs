mod common;

use common::{count_ideals, random_poset, rng};
use dclat_core::birkhoff::{
    build_j, build_m, extract_j, extract_m, verify_corollary8, verify_fundamental, verify_fundamental_poset,
};
use dclat_core::graph::{color_set, isomorphism, Recoloring};
use dclat_core::substructure::{thm11_forward, thm11_reverse, verify_subordinate_theorem, weak_subposet};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ideal_count_matches_brute_force(seed in any::<u64>(), n in 0usize..10, d in 0.0f64..1.0) {
        let p = random_poset(&mut rng(seed), n, d, 3);
        let expected = count_ideals(&p);
        prop_assert_eq!(build_j(&p).unwrap().len(), expected);
        prop_assert_eq!(build_m(&p).unwrap().len(), expected);
    }

    #[test]
    fn round_trips(seed in any::<u64>(), n in 0usize..8, d in 0.0f64..0.8) {
        let p = random_poset(&mut rng(seed), n, d, 3);
        let jl = build_j(&p).unwrap();
        let post = jl.verify_postconditions();
        prop_assert!(post.holds(), "{}", post);
        let l = jl.lattice();
        prop_assert!(isomorphism(&extract_j(&l).unwrap().poset, &p).is_some());
        prop_assert!(isomorphism(&extract_m(&build_m(&p).unwrap().lattice()).unwrap().poset, &p).is_some());
        let r = verify_fundamental_poset(&p).unwrap();
        prop_assert!(r.holds(), "{}", r);
        let r = verify_fundamental(&l).unwrap();
        prop_assert!(r.holds(), "{}", r);
    }

    #[test]
    fn corollary8(s1 in any::<u64>(), s2 in any::<u64>(), n in 0usize..5, m in 0usize..4) {
        let p = random_poset(&mut rng(s1), n, 0.4, 3);
        let q = random_poset(&mut rng(s2), m, 0.4, 3);
        let sigma = Recoloring::from_pairs([(1, 2), (2, 7), (3, 2)]);
        let r = verify_corollary8(&p, &q, &sigma).unwrap();
        prop_assert!(r.holds(), "{}", r);
    }

    #[test]
    fn subordinates(seed in any::<u64>(), n in 0usize..6, mask in 0u32..8) {
        let p = random_poset(&mut rng(seed), n, 0.4, 3);
        let colors = color_set((1..=3).filter(|c| mask >> (c - 1) & 1 == 1));
        let r = verify_subordinate_theorem(&p, &colors).unwrap();
        prop_assert!(r.holds(), "{}", r);
    }

    #[test]
    fn weak_subposet_round_trip(seed in any::<u64>(), n in 1usize..7) {
        let mut g = rng(seed);
        let p = random_poset(&mut g, n, 0.5, 2);
        let mut rel = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && p.leq(x, y).unwrap() && g.gen_bool(0.5) {
                    rel.push((x, y));
                }
            }
        }
        let q = weak_subposet(&p, &rel).unwrap();
        let fwd = thm11_forward(&p, &q).unwrap();
        prop_assert!(fwd.report.holds(), "{}", fwd.report);
        let rev = thm11_reverse(&fwd.l_view, &fwd.embedding).unwrap();
        prop_assert!(rev.report.holds(), "{}", rev.report);
        prop_assert!(isomorphism(rev.q_prime.as_ref().unwrap(), &q).is_some());
    }
}
