//! Full-length sublattices versus weak subposets on the same colored vertices.

use super::sublattice::{check_sublattice, lemma9_check, SublatticeEmbedding};
use crate::birkhoff::{build_j, irreducibles, IdealLattice, Provenance};
use crate::error::{Error, Result};
use crate::graph::{isomorphism, Poset, VertexColoredPoset};
use crate::lattice::LatticeView;
use crate::report::Report;

/// Normalizes a relation list on `p`'s vertices into a vertex-colored poset
/// on the same vertices and colors, rejecting any relation that `p` lacks.
pub fn weak_subposet(p: &VertexColoredPoset, relations: &[(usize, usize)]) -> Result<VertexColoredPoset> {
    for &(x, y) in relations {
        p.check(x)?;
        p.check(y)?;
        if x == y || !p.leq(x, y)? {
            return Err(Error::NotWeakSubposet(format!(
                "`{}` < `{}` does not hold in the parent",
                p.label(x),
                p.label(y)
            )));
        }
    }
    Poset::from_relations(p.labels().to_vec(), p.vertex_tags().to_vec(), relations)
}

/// `q` rewritten onto `p`'s vertex ids, after checking that both have the
/// same labels with the same colors and that every relation of `q` holds in `p`.
fn align(p: &VertexColoredPoset, q: &VertexColoredPoset) -> Result<VertexColoredPoset> {
    if p.len() != q.len() {
        return Err(Error::NotWeakSubposet("vertex sets differ in size".into()));
    }
    let mut to_p = vec![0; q.len()];
    for (v, name) in q.labels().iter().enumerate() {
        let pv = p
            .id(name)
            .map_err(|_| Error::NotWeakSubposet(format!("`{name}` is not a vertex of the parent")))?;
        if p.vertex_color(pv) != q.vertex_color(v) {
            return Err(Error::NotWeakSubposet(format!("`{name}` has a different color")));
        }
        to_p[v] = pv;
    }
    let relations: Vec<(usize, usize)> = q.edges().map(|e| (to_p[e.lower], to_p[e.upper])).collect();
    weak_subposet(p, &relations)
}

#[derive(Clone, Debug)]
pub struct Thm11Forward {
    /// `J_color(P)`.
    pub k: IdealLattice,
    /// `J_color(Q)`.
    pub l: IdealLattice,
    pub l_view: LatticeView,
    pub embedding: SublatticeEmbedding,
    pub report: Report,
}

/// With `Q` a weak subposet of `P` on the same colored vertices, `J(P)` is a
/// full-length edge-colored sublattice of `J(Q)`.
pub fn thm11_forward(p: &VertexColoredPoset, q: &VertexColoredPoset) -> Result<Thm11Forward> {
    let q = align(p, q)?;
    let k = build_j(p)?;
    let l = build_j(&q)?;
    let mut report = Report::new("weak subposet gives full-length sublattice");
    let missing = k.elements().iter().position(|x| l.index_of(x).is_none());
    report.check(missing.is_none(), || {
        format!("ideal {} of P is not an ideal of Q", k.poset().label(missing.unwrap()))
    });
    let l_view = l.lattice().into_modular().into_view();
    let embedding = check_sublattice(k.poset(), &l_view)?;
    report.check(embedding.full_length, || "embedding is not full-length".into());
    report.check(embedding.edge_colored, || "embedding is not edge-colored".into());
    report.absorb(lemma9_check(&embedding, &l_view)?);
    report.note(format!("|J(P)| = {}, |J(Q)| = {}", k.len(), l.len()));
    Ok(Thm11Forward {
        k,
        l,
        l_view,
        embedding,
        report,
    })
}

#[derive(Clone, Debug)]
pub struct Thm11Reverse {
    /// `j_color(L)`.
    pub q: VertexColoredPoset,
    /// `j_color(K)`.
    pub p: VertexColoredPoset,
    /// `phi[u]` is the `P` vertex `w_x` for `Q` vertex `u`.
    pub phi: Vec<usize>,
    /// `P`'s vertices ordered by transporting `Q` along `phi`.
    pub q_prime: Option<VertexColoredPoset>,
    pub report: Report,
}

/// From a full-length edge-colored sublattice `K` of a diamond-colored
/// distributive `L`, recovers `φ: j(L) → j(K)` and the weak subposet `Q'`.
pub fn thm11_reverse(l: &LatticeView, emb: &SublatticeEmbedding) -> Result<Thm11Reverse> {
    let mut report = Report::new("full-length sublattice gives weak subposet");
    if !emb.full_length || !emb.edge_colored {
        return Err(Error::HypothesisViolated(
            "need a full-length edge-colored sublattice".into(),
        ));
    }
    let jl = irreducibles(l, Provenance::Join)?;
    let jk = irreducibles(&emb.sub, Provenance::Join)?;

    let mut phi = Vec::with_capacity(jl.elements.len());
    for (u, &x) in jl.elements.iter().enumerate() {
        // F_x = {y in K : x <=_L y}, and its minimal elements.
        let f: Vec<usize> = (0..emb.inclusion.len())
            .filter(|&y| l.le(x, emb.inclusion[y]))
            .collect();
        let minimal: Vec<usize> = f
            .iter()
            .copied()
            .filter(|&y| !f.iter().any(|&z| z != y && emb.sub.le(z, y)))
            .collect();
        if !report.check(minimal.len() == 1, || {
            format!("{} minimal elements above `{}`", minimal.len(), l.poset().label(x))
        }) {
            continue;
        }
        let w = minimal[0];
        match jk.elements.iter().position(|&e| e == w) {
            Some(pw) => {
                report.check(jk.poset.vertex_color(pw) == jl.poset.vertex_color(u), || {
                    format!("phi changes the color of `{}`", l.poset().label(x))
                });
                phi.push(pw);
            }
            None => report.fail(format!("w for `{}` is not join irreducible in K", l.poset().label(x))),
        }
    }
    let complete = phi.len() == jl.elements.len();
    let mut sorted = phi.clone();
    sorted.sort_unstable();
    sorted.dedup();
    report.check(
        complete && sorted.len() == jk.elements.len() && sorted.len() == phi.len(),
        || "phi is not a bijection".into(),
    );

    let mut q_prime = None;
    if report.holds() {
        let n = phi.len();
        let mut relations = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && jl.poset.leq(u, v)? {
                    report.check(jk.poset.leq(phi[u], phi[v])?, || {
                        format!(
                            "phi is not monotone on `{}` <= `{}`",
                            jl.poset.label(u),
                            jl.poset.label(v)
                        )
                    });
                    relations.push((phi[u], phi[v]));
                }
            }
        }
        if report.holds() {
            let qp = weak_subposet(&jk.poset, &relations);
            match qp {
                Ok(qp) => {
                    report.check(isomorphism(&qp, &jl.poset).is_some(), || {
                        "Q' is not isomorphic to Q".into()
                    });
                    q_prime = Some(qp);
                }
                Err(e) => report.fail(format!("Q' is not a weak subposet of P: {e}")),
            }
        }
    }
    report.note(format!("|j(L)| = {}, |j(K)| = {}", jl.poset.len(), jk.poset.len()));
    Ok(Thm11Reverse {
        q: jl.poset,
        p: jk.poset,
        phi,
        q_prime,
        report,
    })
}
