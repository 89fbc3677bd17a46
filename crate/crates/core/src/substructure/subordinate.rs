//! `J`-subordinates of a vertex-colored poset and the components of
//! `J_color(P)` they describe.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;

use crate::birkhoff::{build_j, irreducibles, order_ideals, IdealLattice, Provenance, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::graph::{format_colors, isomorphism, ColorSet, VertexColoredPoset};
use crate::lattice::LatticeView;
use crate::report::Report;

/// Largest poset the definition-driven search accepts.
pub const SEARCH_LIMIT: usize = 12;

/// `Q_J(t)` with its witness ideal `r = t − D_J(t)`.
#[derive(Clone, Debug)]
pub struct JSubordinate {
    /// Lattice id of `t`.
    pub t: usize,
    pub d: FixedBitSet,
    pub a: FixedBitSet,
    /// `A_J(t) ∪ D_J(t)` as a vertex set of `P`.
    pub q_set: FixedBitSet,
    /// `Q_J(t)` in the induced order with inherited colors.
    pub q: VertexColoredPoset,
    pub r: FixedBitSet,
    /// Lattice ids of `comp_J(t)`, ascending.
    pub component: Vec<usize>,
    /// Greedy peeling of `J`-colored maximal elements of `t` (and adding of
    /// `J`-colored minimal elements outside `t`) reproduces `D` and `A`.
    pub largest_checked: bool,
}

fn component_of(l: &IdealLattice, t: usize, colors: &ColorSet) -> Vec<usize> {
    let p = l.poset();
    let mut seen = vec![false; p.len()];
    seen[t] = true;
    let mut stack = vec![t];
    let mut out = vec![t];
    while let Some(v) = stack.pop() {
        for &(w, c) in p.up(v).iter().chain(p.down(v)) {
            if colors.contains(&c) && !std::mem::replace(&mut seen[w], true) {
                stack.push(w);
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Removes `J`-colored maximal elements from `t` until none remain.
fn greedy_delete(p: &VertexColoredPoset, t: &FixedBitSet, colors: &ColorSet) -> FixedBitSet {
    let mut cur = t.clone();
    loop {
        let next = cur
            .ones()
            .find(|&v| colors.contains(&p.vertex_color(v)) && p.up(v).iter().all(|&(w, _)| !cur.contains(w)));
        match next {
            Some(v) => cur.set(v, false),
            None => break,
        }
    }
    let mut d = t.clone();
    d.difference_with(&cur);
    d
}

/// Adds `J`-colored minimal elements outside `t` until none remain.
fn greedy_add(p: &VertexColoredPoset, t: &FixedBitSet, colors: &ColorSet) -> FixedBitSet {
    let mut cur = t.clone();
    loop {
        let next = (0..p.len()).find(|&v| {
            !cur.contains(v) && colors.contains(&p.vertex_color(v)) && p.down(v).iter().all(|&(w, _)| cur.contains(w))
        });
        match next {
            Some(v) => cur.insert(v),
            None => break,
        }
    }
    let mut a = cur;
    a.difference_with(t);
    a
}

/// `D_J(t)`, `A_J(t)` and `Q_J(t)` for an element `t` of `L = J_color(P)`.
pub fn subordinate_of(l: &IdealLattice, t: usize, colors: &ColorSet) -> Result<JSubordinate> {
    l.poset().check(t)?;
    let p = l.source();
    let component = component_of(l, t, colors);
    // The component is a sublattice, so its extremes have least and greatest size.
    let lo = *component.iter().min_by_key(|&&v| l.rank_of(v)).unwrap();
    let hi = *component.iter().max_by_key(|&&v| l.rank_of(v)).unwrap();
    let te = l.element(t);
    let mut d = te.clone();
    d.difference_with(l.element(lo));
    let mut a = l.element(hi).clone();
    a.difference_with(te);
    let mut q_set = d.clone();
    q_set.union_with(&a);
    let ids: Vec<usize> = q_set.ones().collect();
    let largest_checked = greedy_delete(p, te, colors) == d && greedy_add(p, te, colors) == a;
    Ok(JSubordinate {
        t,
        q: p.induced_order(&ids),
        r: l.element(lo).clone(),
        d,
        a,
        q_set,
        component,
        largest_checked,
    })
}

/// One subordinate per distinct `Q_J(t)` vertex set, in order of first `t`.
pub fn enumerate_subordinates(p: &VertexColoredPoset, colors: &ColorSet) -> Result<Vec<JSubordinate>> {
    let l = build_j(p)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in 0..l.len() {
        let s = subordinate_of(&l, t, colors)?;
        if seen.insert(s.q_set.ones().collect::<Vec<_>>()) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Checks the definition for `q` with witness ideal `r`.
pub fn is_j_subordinate(p: &VertexColoredPoset, q: &FixedBitSet, r: &FixedBitSet, colors: &ColorSet) -> bool {
    let is_ideal = |s: &FixedBitSet| s.ones().all(|v| p.down(v).iter().all(|&(w, _)| s.contains(w)));
    if !q.ones().all(|v| colors.contains(&p.vertex_color(v))) || !r.is_disjoint(q) || !is_ideal(r) {
        return false;
    }
    let mut rq = r.clone();
    rq.union_with(q);
    if !is_ideal(&rq) {
        return false;
    }
    let r_max_ok = r
        .ones()
        .filter(|&v| p.up(v).iter().all(|&(w, _)| !r.contains(w)))
        .all(|v| !colors.contains(&p.vertex_color(v)));
    let rest_min_ok = (0..p.len())
        .filter(|&v| !rq.contains(v) && p.down(v).iter().all(|&(w, _)| rq.contains(w)))
        .all(|v| !colors.contains(&p.vertex_color(v)));
    r_max_ok && rest_min_ok
}

/// Every `J`-subordinate vertex set, by trying all ideal pairs `r ⊆ y`
/// with `Q = y − r`. Exponential; limited to [`SEARCH_LIMIT`] vertices.
pub fn definition_search_subordinates(p: &VertexColoredPoset, colors: &ColorSet) -> Result<BTreeSet<Vec<usize>>> {
    if p.len() > SEARCH_LIMIT {
        return Err(Error::HypothesisViolated(format!(
            "definition search is limited to {SEARCH_LIMIT} vertices"
        )));
    }
    let ideals = order_ideals(p, DEFAULT_SIZE_CAP)?;
    let mut out = BTreeSet::new();
    for r in &ideals {
        for y in ideals.iter().filter(|y| r.is_subset(y)) {
            let mut q = y.clone();
            q.difference_with(r);
            if is_j_subordinate(p, &q, r, colors) {
                out.insert(q.ones().collect());
            }
        }
    }
    Ok(out)
}

/// Both parts of the closing theorem for one `(P, J)`:
/// every `Q_J(t)` is a `J`-subordinate and they are all of them; and each
/// component `comp_J(t)` is `J_color(Q_J(t))` via `x ↦ x ∪ r`.
pub fn verify_subordinate_theorem(p: &VertexColoredPoset, colors: &ColorSet) -> Result<Report> {
    let mut report = Report::new(format!("subordinates for colors {}", format_colors(colors)));
    let l = build_j(p)?;
    let subs: Vec<JSubordinate> = (0..l.len())
        .map(|t| subordinate_of(&l, t, colors))
        .collect::<Result<_>>()?;

    // Part 1.
    let mut found = BTreeSet::new();
    for s in &subs {
        let name = || l.poset().label(s.t).to_string();
        report.check(is_j_subordinate(p, &s.q_set, &s.r, colors), || {
            format!("Q_J({}) fails the definition", name())
        });
        report.check(s.largest_checked, || {
            format!("D/A for {} are not the largest sets", name())
        });
        found.insert(s.q_set.ones().collect::<Vec<_>>());
    }
    if p.len() <= SEARCH_LIMIT {
        let by_definition = definition_search_subordinates(p, colors)?;
        report.check(found == by_definition, || {
            format!(
                "{} sets from the lattice vs {} by definition",
                found.len(),
                by_definition.len()
            )
        });
    }

    // Part 2, once per component (Q_J(t) must not depend on the choice of t).
    let mut by_component: BTreeMap<Vec<usize>, &JSubordinate> = BTreeMap::new();
    for s in &subs {
        match by_component.get(&s.component) {
            Some(first) => {
                report.check(first.q_set == s.q_set, || {
                    format!("Q_J differs inside the component of {}", l.poset().label(s.t))
                });
            }
            None => {
                by_component.insert(s.component.clone(), s);
            }
        }
    }
    for (comp, s) in &by_component {
        let comp_poset = l.poset().induced_subgraph(comp).filter_edges(|c| colors.contains(&c));
        let jq = build_j(&s.q)?;
        report.check(isomorphism(&comp_poset, jq.poset()).is_some(), || {
            format!("comp_J({}) is not J_color(Q_J)", l.poset().label(s.t))
        });
        let view = LatticeView::trusted(comp_poset.clone());
        let jc = irreducibles(&view, Provenance::Join)?;
        report.check(isomorphism(&jc.poset, &s.q).is_some(), || {
            format!("j_color(comp_J({})) is not Q_J", l.poset().label(s.t))
        });
        // φ(x) = x ∪ r, edge by edge.
        let q_ids: Vec<usize> = s.q_set.ones().collect();
        let lift = |x: &FixedBitSet| {
            let mut y = s.r.clone();
            for i in x.ones() {
                y.insert(q_ids[i]);
            }
            l.index_of(&y)
        };
        let images: Vec<Option<usize>> = jq.elements().iter().map(lift).collect();
        let mut hit: Vec<usize> = images.iter().flatten().copied().collect();
        hit.sort_unstable();
        report.check(images.iter().all(Option::is_some) && &hit == comp, || {
            format!("x -> x ∪ r does not map onto comp_J({})", l.poset().label(s.t))
        });
        for e in jq.poset().edges() {
            let (a, b) = (images[e.lower], images[e.upper]);
            let ok = matches!((a, b), (Some(a), Some(b)) if l.poset().edge_color(a, b) == Some(e.tag));
            report.check(ok, || format!("x -> x ∪ r breaks edge {} -> {}", e.lower, e.upper));
        }
    }
    report.note(format!(
        "{} elements, {} components, {} distinct subordinates",
        l.len(),
        by_component.len(),
        found.len()
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{color_set, vertex_poset};

    fn small() -> VertexColoredPoset {
        vertex_poset(&[("a", 1), ("b", 2), ("c", 1)], &[("a", "b"), ("c", "b")]).unwrap()
    }

    #[test]
    fn empty_color_set() {
        let l = build_j(&small()).unwrap();
        for t in 0..l.len() {
            let s = subordinate_of(&l, t, &ColorSet::new()).unwrap();
            assert_eq!(s.q_set.count_ones(..), 0);
            assert_eq!(&s.r, l.element(t));
        }
    }

    #[test]
    fn all_colors_span_everything() {
        let l = build_j(&small()).unwrap();
        let s = subordinate_of(&l, 2, &color_set([1, 2])).unwrap();
        assert_eq!(s.q.len(), 3);
        assert_eq!(s.component.len(), l.len());
    }

    #[test]
    fn theorem_on_small_poset() {
        for colors in [vec![], vec![1], vec![2], vec![1, 2]] {
            let r = verify_subordinate_theorem(&small(), &color_set(colors)).unwrap();
            assert!(r.holds(), "{r}");
        }
    }

    #[test]
    fn empty_poset() {
        let subs = enumerate_subordinates(&VertexColoredPoset::empty(), &color_set([1])).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].q.len(), 0);
    }
}
