use crate::error::{Error, Result};
use crate::graph::EdgeColoredPoset;
use crate::lattice::LatticeView;
use crate::report::Report;

/// A lattice `K` whose vertices are (by label) vertices of a lattice `L`,
/// with meets and joins agreeing.
#[derive(Clone, Debug)]
pub struct SublatticeEmbedding {
    pub sub: LatticeView,
    /// `inclusion[k]` is the parent id of `K`'s vertex `k`.
    pub inclusion: Vec<usize>,
    /// Both ranked with the same length.
    pub full_length: bool,
    /// Every cover of `K` is a cover of `L` with the same color.
    pub edge_colored: bool,
}

/// Checks `K ⊆ L` pairwise for meet/join agreement. `K` must be a lattice
/// in its own order; failing that is reported as not a sublattice.
pub fn check_sublattice(k: &EdgeColoredPoset, l: &LatticeView) -> Result<SublatticeEmbedding> {
    let inclusion = k
        .labels()
        .iter()
        .map(|name| {
            l.poset()
                .id(name)
                .map_err(|_| Error::NotASublattice(format!("`{name}` is not a vertex of the parent")))
        })
        .collect::<Result<Vec<_>>>()?;
    let sub = LatticeView::new(k.clone())
        .map_err(|e| Error::NotASublattice(format!("not a lattice in its own order: {e}")))?;
    let n = k.len();
    for x in 0..n {
        for y in x + 1..n {
            let (fx, fy) = (inclusion[x], inclusion[y]);
            let meet_ok = inclusion[sub.meet_id(x, y)] == l.meet_id(fx, fy);
            let join_ok = inclusion[sub.join_id(x, y)] == l.join_id(fx, fy);
            if !(meet_ok && join_ok) {
                return Err(Error::NotASublattice(format!(
                    "{} of `{}` and `{}` differs",
                    if meet_ok { "join" } else { "meet" },
                    k.label(x),
                    k.label(y)
                )));
            }
        }
    }
    let full_length = match (sub.rank(), l.rank()) {
        (Ok(a), Ok(b)) => a.length() == b.length(),
        _ => false,
    };
    let edge_colored = k
        .edges()
        .all(|e| l.poset().edge_color(inclusion[e.lower], inclusion[e.upper]) == Some(e.tag));
    Ok(SublatticeEmbedding {
        sub,
        inclusion,
        full_length,
        edge_colored,
    })
}

/// Rank agreement and cover agreement for a full-length sublattice. A
/// non-full-length input is reported as failing, not as an error.
pub fn lemma9_check(emb: &SublatticeEmbedding, l: &LatticeView) -> Result<Report> {
    let mut r = Report::new("full-length sublattice ranks and covers");
    if !r.check(emb.full_length, || "sublattice is not full-length".into()) {
        return Ok(r);
    }
    let rk = emb.sub.rank()?;
    let rl = l.rank()?;
    let k = emb.sub.poset();
    for x in 0..k.len() {
        let fx = emb.inclusion[x];
        r.check(rk.of(x) == rl.of(fx), || {
            format!("rank of `{}` is {} in K but {} in L", k.label(x), rk.of(x), rl.of(fx))
        });
        for y in 0..k.len() {
            let in_k = k.is_cover(x, y);
            let in_l = l.poset().is_cover(fx, emb.inclusion[y]);
            r.check(in_k == in_l, || {
                format!(
                    "cover `{}` -> `{}` disagrees (K {in_k}, L {in_l})",
                    k.label(x),
                    k.label(y)
                )
            });
        }
    }
    r.note(format!("{} elements, length {}", k.len(), rk.length()));
    Ok(r)
}

/// Smallest superset of `seed` closed under the parent's meets and joins.
pub fn closure(l: &LatticeView, seed: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; l.len()];
    let mut members: Vec<usize> = Vec::new();
    for &s in seed {
        if !std::mem::replace(&mut inside[s], true) {
            members.push(s);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let y = members[j];
            for z in [l.join_id(x, y), l.meet_id(x, y)] {
                if !std::mem::replace(&mut inside[z], true) {
                    members.push(z);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}
