#![allow(dead_code)]

use dclat_core::graph::{Color, EdgeColoredPoset, Poset, VertexColoredPoset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Relations sampled over a shuffled linear order, then reduced.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize, density: f64, colors: u32) -> VertexColoredPoset {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel.push((order[i], order[j]));
            }
        }
    }
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    let tags = (0..n).map(|_| Color(rng.gen_range(1..=colors))).collect();
    Poset::from_relations(labels, tags, &rel).unwrap()
}

/// Transitive closure by Floyd-Warshall over the cover relation.
pub fn closure_matrix<V: dclat_core::graph::Tag, E: dclat_core::graph::Tag>(p: &Poset<V, E>) -> Vec<Vec<bool>> {
    let n = p.len();
    let mut m = vec![vec![false; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = true;
    }
    for e in p.edges() {
        m[e.lower][e.upper] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if m[i][k] {
                for j in 0..n {
                    if m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
    }
    m
}

/// Down-closed subsets, counted by brute force over all subsets.
pub fn count_ideals(p: &VertexColoredPoset) -> usize {
    let n = p.len();
    let m = closure_matrix(p);
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|y| s >> y & 1 == 0 || (0..n).all(|x| !m[x][y] || s >> x & 1 == 1)))
        .count()
}

/// Intersection-closed family of subsets of `0..k` (with the full set),
/// ordered by inclusion: every finite lattice arises this way.
pub fn random_lattice(rng: &mut ChaCha8Rng, k: usize, generators: usize) -> EdgeColoredPoset {
    let full = (1u32 << k) - 1;
    let mut sets = vec![full];
    for _ in 0..generators {
        let s = rng.gen_range(0..=full);
        let mut add = vec![s];
        while let Some(x) = add.pop() {
            if !sets.contains(&x) {
                add.extend(sets.iter().map(|&y| x & y));
                sets.push(x);
            }
        }
    }
    sets.sort_unstable_by_key(|&s| (s.count_ones(), s));
    let n = sets.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (sets[a], sets[b]);
            let below = x != y && x & y == x;
            if below && !sets.iter().any(|&z| z != x && z != y && x & z == x && z & y == z) {
                edges.push((a, b, Color(1)));
            }
        }
    }
    let labels = sets.iter().map(|s| format!("s{s}")).collect();
    Poset::new(labels, vec![(); n], edges).unwrap()
}

pub fn m3() -> EdgeColoredPoset {
    dclat_core::graph::edge_poset(
        &["0", "a", "b", "c", "1"],
        &[
            ("0", "a", 1),
            ("0", "b", 1),
            ("0", "c", 1),
            ("a", "1", 1),
            ("b", "1", 1),
            ("c", "1", 1),
        ],
    )
    .unwrap()
}

pub fn n5() -> EdgeColoredPoset {
    dclat_core::graph::edge_poset(
        &["0", "a", "b", "c", "1"],
        &[
            ("0", "a", 1),
            ("a", "b", 1),
            ("b", "1", 1),
            ("0", "c", 1),
            ("c", "1", 1),
        ],
    )
    .unwrap()
}

pub fn example_p() -> VertexColoredPoset {
    dclat_core::graph::vertex_poset(
        &[("v1", 2), ("v2", 2), ("v3", 1), ("v4", 1), ("v5", 1), ("v6", 2)],
        &[
            ("v5", "v4"),
            ("v4", "v3"),
            ("v2", "v1"),
            ("v5", "v2"),
            ("v4", "v1"),
            ("v6", "v3"),
        ],
    )
    .unwrap()
}

pub fn example_l() -> EdgeColoredPoset {
    let names: Vec<String> = (0..15).map(|i| format!("L{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let e = [
        (14, 12, 2),
        (14, 13, 1),
        (13, 11, 2),
        (13, 9, 2),
        (13, 10, 1),
        (12, 9, 1),
        (9, 7, 2),
        (9, 6, 1),
        (10, 6, 2),
        (10, 8, 2),
        (11, 7, 2),
        (11, 8, 1),
        (6, 3, 1),
        (6, 4, 2),
        (7, 4, 1),
        (8, 4, 2),
        (8, 5, 2),
        (4, 1, 1),
        (4, 2, 2),
        (3, 1, 2),
        (5, 2, 2),
        (1, 0, 2),
        (2, 0, 1),
    ];
    let covers: Vec<(&str, &str, u32)> = e.iter().map(|&(a, b, c)| (refs[a], refs[b], c)).collect();
    dclat_core::graph::edge_poset(&refs, &covers).unwrap()
}
