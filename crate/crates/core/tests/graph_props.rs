mod common;

use common::{closure_matrix, random_poset, rng};
use dclat_core::birkhoff::build_j;
use dclat_core::graph::{is_isomorphism, isomorphism, EdgeColoredPoset, Poset, Recoloring, VertexColoredPoset};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn poset(seed: u64, n: usize, density: f64) -> VertexColoredPoset {
    random_poset(&mut rng(seed), n, density, 3)
}

fn small_lattice(seed: u64) -> EdgeColoredPoset {
    build_j(&poset(seed, 3, 0.4)).unwrap().into_poset()
}

/// Same structure under shuffled vertex ids and fresh labels.
fn shuffled(p: &VertexColoredPoset, seed: u64) -> VertexColoredPoset {
    let mut perm: Vec<usize> = (0..p.len()).collect();
    perm.shuffle(&mut rng(seed));
    let mut inv = vec![0; p.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    let labels = perm.iter().map(|&old| format!("w{old}")).collect();
    let tags = perm.iter().map(|&old| p.vertex_color(old)).collect();
    let edges = p.edges().map(|e| (inv[e.lower], inv[e.upper], ())).collect();
    Poset::new(labels, tags, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leq_matches_floyd_warshall(seed in any::<u64>(), n in 0usize..10, d in 0.0f64..1.0) {
        let p = poset(seed, n, d);
        let m = closure_matrix(&p);
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(p.leq(x, y).unwrap(), m[x][y]);
            }
        }
    }

    #[test]
    fn covers_are_reduced(seed in any::<u64>(), n in 0usize..10, d in 0.0f64..1.0) {
        let p = poset(seed, n, d);
        let m = closure_matrix(&p);
        for e in p.edges() {
            let between = (0..n).any(|z| z != e.lower && z != e.upper && m[e.lower][z] && m[z][e.upper]);
            prop_assert!(!between);
        }
    }

    #[test]
    fn dual_is_an_involution(seed in any::<u64>(), n in 0usize..9) {
        let p = poset(seed, n, 0.3);
        let back = p.dual().dual();
        prop_assert!(isomorphism(&p, &back).is_some());
        let undone = p.dual().undual();
        prop_assert_eq!(undone.labels(), p.labels());
        let l = small_lattice(seed);
        prop_assert!(isomorphism(&l, &l.dual().dual()).is_some());
    }

    #[test]
    fn recolor_commutes_with_dual(seed in any::<u64>(), n in 0usize..9, shift in 1u32..5) {
        let p = poset(seed, n, 0.3);
        let sigma = Recoloring::from_pairs((1..=3).map(|c| (c, c + shift)));
        let a = p.recolor(&sigma).unwrap().dual();
        let b = p.dual().recolor(&sigma).unwrap();
        prop_assert!(isomorphism(&a, &b).is_some());
    }

    #[test]
    fn sum_is_commutative_and_associative(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (poset(s1, 3, 0.5), poset(s2, 4, 0.5), poset(s3, 2, 0.5));
        let ab = Poset::disjoint_sum(&a, &b);
        prop_assert!(isomorphism(&ab, &Poset::disjoint_sum(&b, &a)).is_some());
        let left = Poset::disjoint_sum(&ab, &c);
        let right = Poset::disjoint_sum(&a, &Poset::disjoint_sum(&b, &c));
        prop_assert!(isomorphism(&left, &right).is_some());
        prop_assert_eq!(left.len(), 9);
    }

    #[test]
    fn product_is_commutative_and_associative(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (small_lattice(s1), small_lattice(s2), small_lattice(s3));
        let ab = EdgeColoredPoset::cartesian_product(&a, &b);
        prop_assert!(isomorphism(&ab, &EdgeColoredPoset::cartesian_product(&b, &a)).is_some());
        let left = EdgeColoredPoset::cartesian_product(&ab, &c);
        let right = EdgeColoredPoset::cartesian_product(&a, &EdgeColoredPoset::cartesian_product(&b, &c));
        prop_assert!(isomorphism(&left, &right).is_some());
        prop_assert_eq!(left.len(), a.len() * b.len() * c.len());
        prop_assert_eq!(
            left.edge_count(),
            a.edge_count() * b.len() * c.len() + a.len() * b.edge_count() * c.len() + a.len() * b.len() * c.edge_count()
        );
    }

    #[test]
    fn isomorphism_survives_shuffling(seed in any::<u64>(), n in 0usize..10, d in 0.0f64..0.6) {
        let p = poset(seed, n, d);
        let q = shuffled(&p, seed ^ 0x5eed);
        let f = isomorphism(&p, &q);
        prop_assert!(f.is_some());
        prop_assert!(is_isomorphism(&p, &q, &f.unwrap()));
    }
}

#[test]
fn recoloring_breaks_isomorphism() {
    let p = poset(7, 5, 0.4);
    let sigma = Recoloring::from_pairs([(1, 9), (2, 9), (3, 9)]);
    let q = p.recolor(&sigma).unwrap();
    assert!(isomorphism(&p, &q).is_none());
}
