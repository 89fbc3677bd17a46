//! Colored isomorphism by iterated refinement plus backtracking.

use super::color::Tag;
use super::poset::Poset;

type Signature<V, E> = (usize, V, Vec<(bool, E, usize)>);

/// Joint color refinement of both graphs. Returns per-vertex class ids
/// (shared numbering) or `None` as soon as the class histograms differ.
fn refine<V: Tag, E: Tag>(a: &Poset<V, E>, b: &Poset<V, E>) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut ca = vec![0usize; a.len()];
    let mut cb = vec![0usize; b.len()];
    let mut classes = 0usize;
    loop {
        let sig = |p: &Poset<V, E>, cls: &[usize], v: usize| -> Signature<V, E> {
            let mut nb: Vec<(bool, E, usize)> = p
                .up(v)
                .iter()
                .map(|&(w, t)| (true, t, cls[w]))
                .chain(p.down(v).iter().map(|&(w, t)| (false, t, cls[w])))
                .collect();
            nb.sort_unstable();
            (cls[v], p.vertex_tag(v), nb)
        };
        let sa: Vec<_> = (0..a.len()).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.len()).map(|v| sig(b, &cb, v)).collect();
        let mut all: Vec<&Signature<V, E>> = sa.iter().chain(sb.iter()).collect();
        all.sort_unstable();
        all.dedup();
        let id = |s: &Signature<V, E>| all.binary_search(&s).unwrap();
        let na: Vec<usize> = sa.iter().map(id).collect();
        let nb: Vec<usize> = sb.iter().map(id).collect();
        let mut ha = vec![0usize; all.len()];
        let mut hb = vec![0usize; all.len()];
        na.iter().for_each(|&c| ha[c] += 1);
        nb.iter().for_each(|&c| hb[c] += 1);
        if ha != hb {
            return None;
        }
        let stable = all.len() == classes;
        classes = all.len();
        ca = na;
        cb = nb;
        if stable {
            return Some((ca, cb));
        }
    }
}

/// Searches for a bijection `f` from `a` to `b` preserving vertex payloads,
/// cover edges and edge payloads. Returns `f` as `f[a_id] = b_id`.
pub fn isomorphism<V: Tag, E: Tag>(a: &Poset<V, E>, b: &Poset<V, E>) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (ca, cb) = refine(a, b)?;
    let n = a.len();

    let classes = ca.iter().chain(cb.iter()).max().map_or(0, |m| m + 1);
    let mut class_size = vec![0usize; classes];
    ca.iter().for_each(|&c| class_size[c] += 1);

    // Visit order: prefer vertices with many already-ordered neighbours, then
    // small classes, then low id.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[ca[v]], v))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for w in a.neighbours(next) {
            links[w] += 1;
        }
    }

    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (w, &c) in cb.iter().enumerate() {
        by_class[c].push(w);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(a, b, &ca, &by_class, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search<V: Tag, E: Tag>(
    a: &Poset<V, E>,
    b: &Poset<V, E>,
    ca: &[usize],
    by_class: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for &w in &by_class[ca[u]] {
        if used[w] {
            continue;
        }
        let consistent = a
            .up(u)
            .iter()
            .all(|&(x, t)| map[x] == usize::MAX || b.edge_tag(w, map[x]) == Some(t))
            && a.down(u)
                .iter()
                .all(|&(x, t)| map[x] == usize::MAX || b.edge_tag(map[x], w) == Some(t));
        if !consistent {
            continue;
        }
        map[u] = w;
        used[w] = true;
        if search(a, b, ca, by_class, order, depth + 1, map, used) {
            return true;
        }
        map[u] = usize::MAX;
        used[w] = false;
    }
    false
}

/// Checks that `f` is a payload-preserving isomorphism from `a` to `b`.
pub fn is_isomorphism<V: Tag, E: Tag>(a: &Poset<V, E>, b: &Poset<V, E>, f: &[usize]) -> bool {
    if a.len() != b.len() || f.len() != a.len() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut hit = vec![false; b.len()];
    for &w in f {
        if w >= b.len() || std::mem::replace(&mut hit[w], true) {
            return false;
        }
    }
    (0..a.len()).all(|v| a.vertex_tag(v) == b.vertex_tag(f[v]))
        && a.edges().all(|e| b.edge_tag(f[e.lower], f[e.upper]) == Some(e.tag))
}

impl<V: Tag, E: Tag> Poset<V, E> {
    pub fn isomorphic_to(&self, other: &Self) -> bool {
        isomorphism(self, other).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge_poset, vertex_poset};

    #[test]
    fn chains_with_different_colors() {
        let a = edge_poset(&["a", "b"], &[("a", "b", 1)]).unwrap();
        let b = edge_poset(&["a", "b"], &[("a", "b", 2)]).unwrap();
        assert!(isomorphism(&a, &b).is_none());
        assert_eq!(isomorphism(&a, &a), Some(vec![0, 1]));
    }

    #[test]
    fn relabelled_vertex_poset() {
        let p = vertex_poset(&[("x", 1), ("y", 2), ("z", 1)], &[("x", "y"), ("z", "y")]).unwrap();
        let q = vertex_poset(&[("y", 2), ("z", 1), ("x", 1)], &[("z", "y"), ("x", "y")]).unwrap();
        let f = isomorphism(&p, &q).unwrap();
        assert!(is_isomorphism(&p, &q, &f));
        let r = vertex_poset(&[("y", 2), ("z", 2), ("x", 1)], &[("z", "y"), ("x", "y")]).unwrap();
        assert!(isomorphism(&p, &r).is_none());
    }

    #[test]
    fn direction_matters() {
        // a vee and a co-vee have the same undirected shape
        let vee = edge_poset(&["r", "s", "t"], &[("r", "s", 1), ("r", "t", 1)]).unwrap();
        let covee = edge_poset(&["s", "t", "u"], &[("s", "u", 1), ("t", "u", 1)]).unwrap();
        assert!(isomorphism(&vee, &covee).is_none());
    }
}
