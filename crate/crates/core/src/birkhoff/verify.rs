use fixedbitset::FixedBitSet;

use super::ideal::{build_j, build_m, IdealLattice, Mode};
use super::irreducible::{extract_j, extract_m, irreducibles, Provenance};
use crate::error::Result;
use crate::graph::{isomorphism, ColorSet, EdgeColoredPoset, Poset, Recoloring, Tag, VertexColoredPoset};
use crate::lattice::{DistributiveLattice, LatticeView};
use crate::paths::diamond_violation;
use crate::report::Report;

fn iso_check<V: Tag, E: Tag>(r: &mut Report, what: &str, a: &Poset<V, E>, b: &Poset<V, E>) -> bool {
    match isomorphism(a, b) {
        Some(_) => {
            r.note(format!(
                "{what}: isomorphic ({} vertices, {} edges)",
                a.len(),
                a.edge_count()
            ));
            true
        }
        None => {
            r.fail(format!("{what}: not isomorphic"));
            false
        }
    }
}

/// `L ≅ J_color(j_color(L)) ≅ M_color(m_color(L))`.
pub fn verify_fundamental(l: &DistributiveLattice) -> Result<Report> {
    let mut r = Report::new("fundamental theorem (lattice side)");
    let j = extract_j(l)?;
    let m = extract_m(l)?;
    r.check(j.poset.len() == l.length(), || {
        "|j(L)| differs from the length of L".into()
    });
    r.check(m.poset.len() == l.length(), || {
        "|m(L)| differs from the length of L".into()
    });
    iso_check(&mut r, "L vs J(j(L))", l.poset(), build_j(&j.poset)?.poset());
    iso_check(&mut r, "L vs M(m(L))", l.poset(), build_m(&m.poset)?.poset());
    Ok(r)
}

/// `P ≅ j_color(J_color(P)) ≅ m_color(M_color(P))`, plus the principal
/// ideal map `v ↦ ⟨v⟩` as an explicit witness for the first.
pub fn verify_fundamental_poset(p: &VertexColoredPoset) -> Result<Report> {
    let mut r = Report::new("fundamental theorem (poset side)");
    let jl = build_j(p)?;
    let jv = jl.lattice();
    let j = extract_j(&jv)?;
    iso_check(&mut r, "P vs j(J(P))", p, &j.poset);
    // ψ(v) = ⟨v⟩ must land on exactly the join irreducibles.
    let mut principal: Vec<usize> = (0..p.len())
        .map(|v| jl.index_of(&jl.principal(v)).expect("principal ideals are ideals"))
        .collect();
    principal.sort_unstable();
    r.check(principal == j.elements, || {
        "join irreducibles are not the principal ideals".into()
    });

    let ml = build_m(p)?;
    let m = extract_m(&ml.lattice())?;
    iso_check(&mut r, "P vs m(M(P))", p, &m.poset);
    Ok(r)
}

/// A distributive lattice is `J_color` of some poset iff it is
/// diamond-colored; returns that poset (already checked) as the witness.
pub fn is_birkhoff_representable(l: &DistributiveLattice) -> Result<Option<VertexColoredPoset>> {
    if diamond_violation(l.poset()).is_some() {
        return Ok(None);
    }
    let p = extract_j(l)?.poset;
    let rebuilt = build_j(&p)?;
    Ok(isomorphism(l.poset(), rebuilt.poset()).map(|_| p))
}

/// The identities relating `J_color`, `M_color`, `j_color`, `m_color` to
/// dual, recoloring, disjoint sum and product. `sigma` must cover the colors
/// of both posets.
pub fn verify_corollary8(p: &VertexColoredPoset, q: &VertexColoredPoset, sigma: &Recoloring) -> Result<Report> {
    let mut r = Report::new("interaction with dual, recoloring, sum and product");
    let jp = build_j(p)?;
    let jq = build_j(q)?;
    let mp = build_m(p)?;
    let mq = build_m(q)?;

    // Part 1: the two constructions agree, and so do the two extractions.
    iso_check(&mut r, "J(P) vs M(P)", jp.poset(), mp.poset());
    let lp = jp.lattice();
    iso_check(
        &mut r,
        "j(L) vs m(L) for L = J(P)",
        &extract_j(&lp)?.poset,
        &extract_m(&lp)?.poset,
    );

    // Part 2.
    let sum = VertexColoredPoset::disjoint_sum(p, q);
    iso_check(
        &mut r,
        "J(P*) vs J(P)*",
        build_j(&p.dual())?.poset(),
        &jp.poset().dual(),
    );
    iso_check(
        &mut r,
        "J(P^s) vs J(P)^s",
        build_j(&p.recolor(sigma)?)?.poset(),
        &jp.poset().recolor(sigma)?,
    );
    iso_check(
        &mut r,
        "J(P+Q) vs J(P)xJ(Q)",
        build_j(&sum)?.poset(),
        &EdgeColoredPoset::cartesian_product(jp.poset(), jq.poset()),
    );
    iso_check(
        &mut r,
        "M(P*) vs M(P)*",
        build_m(&p.dual())?.poset(),
        &mp.poset().dual(),
    );
    iso_check(
        &mut r,
        "M(P^s) vs M(P)^s",
        build_m(&p.recolor(sigma)?)?.poset(),
        &mp.poset().recolor(sigma)?,
    );
    iso_check(
        &mut r,
        "M(P+Q) vs M(P)xM(Q)",
        build_m(&sum)?.poset(),
        &EdgeColoredPoset::cartesian_product(mp.poset(), mq.poset()),
    );

    // Part 3, with L = J(P) and K = J(Q). Dual, recolored and product
    // lattices are distributive and diamond-colored whenever L and K are.
    let lk = trusted(EdgeColoredPoset::cartesian_product(jp.poset(), jq.poset()));
    let l_dual = trusted(jp.poset().dual());
    let l_sigma = trusted(jp.poset().recolor(sigma)?);
    let jl = irreducibles(&lp, Provenance::Join)?.poset;
    let jk = irreducibles(&jq.lattice(), Provenance::Join)?.poset;
    let ml = irreducibles(&lp, Provenance::Meet)?.poset;
    let mk = irreducibles(&jq.lattice(), Provenance::Meet)?.poset;
    iso_check(
        &mut r,
        "j(L*) vs j(L)*",
        &irreducibles(&l_dual, Provenance::Join)?.poset,
        &jl.dual(),
    );
    iso_check(
        &mut r,
        "j(L^s) vs j(L)^s",
        &irreducibles(&l_sigma, Provenance::Join)?.poset,
        &jl.recolor(sigma)?,
    );
    iso_check(
        &mut r,
        "j(LxK) vs j(L)+j(K)",
        &irreducibles(&lk, Provenance::Join)?.poset,
        &VertexColoredPoset::disjoint_sum(&jl, &jk),
    );
    iso_check(
        &mut r,
        "m(L*) vs m(L)*",
        &irreducibles(&l_dual, Provenance::Meet)?.poset,
        &ml.dual(),
    );
    iso_check(
        &mut r,
        "m(L^s) vs m(L)^s",
        &irreducibles(&l_sigma, Provenance::Meet)?.poset,
        &ml.recolor(sigma)?,
    );
    iso_check(
        &mut r,
        "m(LxK) vs m(L)+m(K)",
        &irreducibles(&lk, Provenance::Meet)?.poset,
        &VertexColoredPoset::disjoint_sum(&ml, &mk),
    );
    Ok(r)
}

fn trusted(p: EdgeColoredPoset) -> LatticeView {
    LatticeView::trusted(p)
}

/// Colors of the edges above and below an element, predicted from the
/// subset and observed on the Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorProfile {
    pub up: ColorSet,
    pub down: ColorSet,
    pub observed_up: ColorSet,
    pub observed_down: ColorSet,
}

impl ColorProfile {
    pub fn consistent(&self) -> bool {
        self.up == self.observed_up && self.down == self.observed_down
    }
}

/// For an ideal `x`: edges below come from maximal elements of `x`, edges
/// above from minimal elements of `P − x`. Filters swap the roles.
pub fn cover_color_profile(l: &IdealLattice, x: usize) -> Result<ColorProfile> {
    l.poset().check(x)?;
    let p = l.source();
    let set: &FixedBitSet = l.element(x);
    let top_of = |v: usize, within: bool| p.up(v).iter().all(|&(w, _)| set.contains(w) != within);
    let bottom_of = |v: usize, within: bool| p.down(v).iter().all(|&(w, _)| set.contains(w) != within);
    let mut inside_max = ColorSet::new();
    let mut inside_min = ColorSet::new();
    let mut outside_min = ColorSet::new();
    let mut outside_max = ColorSet::new();
    for v in 0..p.len() {
        let c = p.vertex_color(v);
        if set.contains(v) {
            if top_of(v, true) {
                inside_max.insert(c);
            }
            if bottom_of(v, true) {
                inside_min.insert(c);
            }
        } else {
            // addable to an ideal: all lower covers inside
            if p.down(v).iter().all(|&(w, _)| set.contains(w)) {
                outside_min.insert(c);
            }
            if p.up(v).iter().all(|&(w, _)| set.contains(w)) {
                outside_max.insert(c);
            }
        }
    }
    let (up, down) = match l.mode() {
        Mode::Ideal => (outside_min, inside_max),
        Mode::Filter => (inside_min, outside_max),
    };
    let g = l.poset();
    Ok(ColorProfile {
        up,
        down,
        observed_up: g.up(x).iter().map(|&(_, c)| c).collect(),
        observed_down: g.down(x).iter().map(|&(_, c)| c).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birkhoff::antichain;
    use crate::graph::{color_set, vertex_poset, Color};

    fn small() -> VertexColoredPoset {
        vertex_poset(&[("a", 1), ("b", 2), ("c", 1)], &[("a", "b"), ("c", "b")]).unwrap()
    }

    #[test]
    fn round_trips_on_small_poset() {
        let r = verify_fundamental_poset(&small()).unwrap();
        assert!(r.holds(), "{r}");
        let l = build_j(&small()).unwrap().lattice();
        assert!(verify_fundamental(&l).unwrap().holds());
        assert!(is_birkhoff_representable(&l).unwrap().is_some());
    }

    #[test]
    fn corollary8_on_small_instance() {
        let q = antichain(2, Color(2));
        let sigma = Recoloring::from_pairs([(1, 5), (2, 1)]);
        let r = verify_corollary8(&small(), &q, &sigma).unwrap();
        assert!(r.holds(), "{r}");
        assert_eq!(r.lines.len(), 14);
    }

    #[test]
    fn profiles_match_edges() {
        for mode in [Mode::Ideal, Mode::Filter] {
            let l = crate::birkhoff::build_with_cap(&small(), mode, 100).unwrap();
            for x in 0..l.len() {
                assert!(cover_color_profile(&l, x).unwrap().consistent());
            }
        }
        let l = build_j(&small()).unwrap();
        let empty = cover_color_profile(&l, l.bottom()).unwrap();
        assert!(empty.down.is_empty());
        assert_eq!(empty.up, color_set([1]));
    }
}
