//! Cartesian products of diamond-colored lattices and their meet/join-closed
//! subsets.

use std::collections::VecDeque;

use super::sublattice::check_sublattice;
use crate::error::{Error, Result};
use crate::graph::EdgeColoredPoset;
use crate::lattice::LatticeView;
use crate::paths::diamond_violation;
use crate::report::Report;

/// Mixed-radix id of a tuple in `product_of(factors)`.
pub fn tuple_id(sizes: &[usize], tuple: &[usize]) -> usize {
    tuple.iter().zip(sizes).fold(0, |acc, (&t, &n)| acc * n + t)
}

pub fn tuple_of(sizes: &[usize], mut id: usize) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for (slot, &n) in out.iter_mut().zip(sizes).rev() {
        *slot = id % n;
        id /= n;
    }
    out
}

/// Checks the product facts (lattice, rank additivity, length, extremes,
/// componentwise operations, modularity or distributivity, diamond-coloring)
/// and then, for `k` given as coordinate tuples, the hypotheses and
/// conclusion of the closure criterion. Failed hypotheses are errors.
pub fn prop10_product_closure(factors: &[EdgeColoredPoset], k: &[Vec<usize>]) -> Result<Report> {
    let hyp = |what: String| Error::HypothesisViolated(what);
    let mut r = Report::new("product closure");
    let mut views = Vec::with_capacity(factors.len());
    let mut all_distributive = true;
    for (q, f) in factors.iter().enumerate() {
        let v = LatticeView::new(f.clone()).map_err(|e| hyp(format!("factor {q}: {e}")))?;
        v.check_modular().map_err(|e| hyp(format!("factor {q}: {e}")))?;
        if let Some(d) = diamond_violation(f) {
            return Err(hyp(format!("factor {q}: {}", d.to_error(f))));
        }
        all_distributive &= v.is_distributive();
        views.push(v);
    }
    let sizes: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    let product = EdgeColoredPoset::product_of(factors);
    let l = LatticeView::new(product)?;
    let rho = l.rank()?;

    // Part 1.
    let ranks: Vec<_> = views.iter().map(|v| v.rank().cloned()).collect::<Result<_>>()?;
    let length: usize = ranks.iter().map(|rq| rq.length()).sum();
    r.check(rho.length() == length, || {
        format!("length {} is not {length}", rho.length())
    });
    let mins: Vec<usize> = views.iter().map(|v| v.min()).collect();
    let maxs: Vec<usize> = views.iter().map(|v| v.max()).collect();
    r.check(l.min() == tuple_id(&sizes, &mins), || {
        "min is not the tuple of mins".into()
    });
    r.check(l.max() == tuple_id(&sizes, &maxs), || {
        "max is not the tuple of maxes".into()
    });
    for s in 0..l.len() {
        let ts = tuple_of(&sizes, s);
        let sum: usize = ts.iter().zip(&ranks).map(|(&x, rq)| rq.of(x)).sum();
        r.check(rho.of(s) == sum, || {
            format!("rank of {} is not additive", l.poset().label(s))
        });
        for t in s + 1..l.len() {
            let tt = tuple_of(&sizes, t);
            let join: Vec<usize> = (0..sizes.len()).map(|q| views[q].join_id(ts[q], tt[q])).collect();
            let meet: Vec<usize> = (0..sizes.len()).map(|q| views[q].meet_id(ts[q], tt[q])).collect();
            r.check(l.join_id(s, t) == tuple_id(&sizes, &join), || {
                "join is not componentwise".into()
            });
            r.check(l.meet_id(s, t) == tuple_id(&sizes, &meet), || {
                "meet is not componentwise".into()
            });
        }
    }
    if let Err(e) = l.check_modular() {
        r.fail(format!("product: {e}"));
    }
    if all_distributive {
        if let Err(e) = l.check_distributive() {
            r.fail(format!("product: {e}"));
        }
    }
    r.check(diamond_violation(l.poset()).is_none(), || {
        "product is not diamond-colored".into()
    });
    r.note(format!(
        "product of {} factors: {} elements, length {length}",
        factors.len(),
        l.len()
    ));

    // Part 2 hypotheses.
    let mut ids = Vec::with_capacity(k.len());
    for tuple in k {
        if tuple.len() != sizes.len() || tuple.iter().zip(&sizes).any(|(&x, &n)| x >= n) {
            return Err(hyp(format!("{tuple:?} is not a vertex of the product")));
        }
        ids.push(tuple_id(&sizes, tuple));
    }
    ids.sort_unstable();
    ids.dedup();
    let mut inside = vec![false; l.len()];
    ids.iter().for_each(|&i| inside[i] = true);
    for &s in &ids {
        for &t in &ids {
            if !inside[l.join_id(s, t)] || !inside[l.meet_id(s, t)] {
                return Err(hyp(format!(
                    "not closed: `{}` and `{}`",
                    l.poset().label(s),
                    l.poset().label(t)
                )));
            }
        }
    }
    if !inside[l.min()] || !inside[l.max()] {
        return Err(hyp("min or max of the product is missing".into()));
    }
    let mut seen = vec![false; l.len()];
    seen[l.min()] = true;
    let mut queue = VecDeque::from([l.min()]);
    while let Some(v) = queue.pop_front() {
        for w in l.poset().neighbours(v) {
            if inside[w] && !std::mem::replace(&mut seen[w], true) {
                queue.push_back(w);
            }
        }
    }
    if !seen[l.max()] {
        return Err(hyp("no path from min to max inside the subset".into()));
    }

    // Part 2 conclusion.
    let sub = l.poset().induced_subgraph(&ids);
    match check_sublattice(&sub, &l) {
        Ok(emb) => {
            r.check(emb.full_length, || "subset is not full-length".into());
            if let Err(e) = emb.sub.check_modular() {
                r.fail(format!("subset: {e}"));
            }
            if all_distributive {
                if let Err(e) = emb.sub.check_distributive() {
                    r.fail(format!("subset: {e}"));
                }
            }
            r.check(diamond_violation(&sub).is_none(), || {
                "subset is not diamond-colored".into()
            });
            r.note(format!(
                "subset of {} elements is a full-length {} sublattice",
                ids.len(),
                if all_distributive { "distributive" } else { "modular" }
            ));
        }
        Err(e) => r.fail(e.to_string()),
    }
    Ok(r)
}
