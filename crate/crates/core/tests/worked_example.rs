mod common;

use common::{example_l, example_p};
use dclat_core::birkhoff::{build_j, extract_j};
use dclat_core::graph::{color_set, isomorphism};
use dclat_core::lattice::{ancestor_interval_boolean, descendant_interval_boolean, DistributiveLattice};
use dclat_core::paths::{distance, verify_prop3, DEFAULT_PATH_CAP};
use dclat_core::substructure::{decompose, enumerate_subordinates};

fn lattice() -> DistributiveLattice {
    DistributiveLattice::from_poset(example_l()).unwrap()
}

/// All subsets of `items` with at most `k` members.
fn small_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &x in items {
        let grown: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.len() < k)
            .map(|s| [s.clone(), vec![x]].concat())
            .collect();
        out.extend(grown);
    }
    out
}

#[test]
fn lattice_of_ideals_matches_drawing() {
    let built = build_j(&example_p()).unwrap();
    assert_eq!(built.len(), 15);
    assert_eq!(built.length(), 6);
    assert!(isomorphism(built.poset(), &example_l()).is_some());
    let l = lattice();
    assert!(isomorphism(&extract_j(&l).unwrap().poset, &example_p()).is_some());
    assert_eq!(distance(l.poset(), l.min(), l.max()).unwrap(), 6);
}

#[test]
fn two_components() {
    let d = decompose(&lattice(), &color_set([2]), true).unwrap();
    let mut sizes: Vec<usize> = d.components.iter().map(|c| c.vertices.len()).collect();
    assert!(d.report.holds(), "{}", d.report);
    assert_eq!(sizes, vec![3, 6, 4, 2]);
    sizes.sort_unstable();
    assert_eq!(sizes.iter().sum::<usize>(), 15);
    let subs = enumerate_subordinates(&example_p(), &color_set([2])).unwrap();
    let mut lifted: Vec<usize> = subs.iter().map(|s| build_j(&s.q).unwrap().len()).collect();
    lifted.sort_unstable();
    assert_eq!(lifted, sizes);
}

#[test]
fn boolean_intervals() {
    let l = lattice();
    let p = l.poset();
    for t in 0..l.len() {
        let below: Vec<usize> = p.down(t).iter().map(|&(w, _)| w).collect();
        for d in small_subsets(&below, 3) {
            let v = descendant_interval_boolean(&l, t, &d).unwrap();
            assert!(v.holds(), "t={t} D={d:?}: {v:?}");
        }
        let above: Vec<usize> = p.up(t).iter().map(|&(w, _)| w).collect();
        for a in small_subsets(&above, 3) {
            assert!(ancestor_interval_boolean(&l, t, &a).unwrap().holds());
        }
    }
}

#[test]
fn ascending_paths_share_colors() {
    let l = lattice().into_modular();
    for s in 0..l.len() {
        for t in 0..l.len() {
            if l.le(s, t) {
                let r = verify_prop3(&l, s, t, DEFAULT_PATH_CAP).unwrap();
                assert!(r.holds(), "{r}");
            }
        }
    }
}
