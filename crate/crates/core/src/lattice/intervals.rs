//! Intervals spanned by a set of lower (or upper) covers of one element.

use crate::birkhoff::{build_j, build_m};
use crate::error::{Error, Result};
use crate::graph::{isomorphism, Color, Poset, VertexColoredPoset};

use super::{DistributiveLattice, LatticeView};

/// Outcome of scanning every `x` against the interval criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalVerdict {
    /// `∧D` for descendants, `∨A` for ancestors.
    pub r: usize,
    /// The interval between `r` and `t` matches the colored construction
    /// and contains the given covers.
    pub holds_at_r: bool,
    pub boolean: bool,
    /// Elements other than `r` that also satisfy the criterion.
    pub other_matches: Vec<usize>,
    /// Elements strictly inside the interval whose sub-interval is still
    /// isomorphic to the construction (should be none).
    pub iso_inside: Vec<usize>,
}

impl IntervalVerdict {
    pub fn holds(&self) -> bool {
        self.holds_at_r && self.boolean && self.other_matches.is_empty() && self.iso_inside.is_empty()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Below,
    Above,
}

/// The covers in `set` as a colored antichain, colored by their edge to `t`.
fn cover_antichain(l: &LatticeView, t: usize, set: &[usize], side: Side) -> Result<VertexColoredPoset> {
    let p = l.poset();
    let mut colors = Vec::with_capacity(set.len());
    let mut seen = std::collections::BTreeSet::new();
    for &s in set {
        p.check(s)?;
        let c: Option<Color> = match side {
            Side::Below => p.edge_color(s, t),
            Side::Above => p.edge_color(t, s),
        };
        let Some(c) = c else {
            return Err(Error::InvalidDescendantSet(format!(
                "`{}` is not {} `{}`",
                p.label(s),
                if side == Side::Below {
                    "covered by"
                } else {
                    "a cover of"
                },
                p.label(t)
            )));
        };
        if !seen.insert(s) {
            return Err(Error::InvalidDescendantSet(format!("`{}` listed twice", p.label(s))));
        }
        colors.push(c);
    }
    let labels = set.iter().map(|&s| p.label(s).to_string()).collect();
    Ok(Poset::from_parts_unchecked(labels, colors, Vec::new()))
}

fn scan(l: &DistributiveLattice, t: usize, set: &[usize], side: Side) -> Result<IntervalVerdict> {
    let view: &LatticeView = l;
    view.poset().check(t)?;
    let antichain = cover_antichain(view, t, set, side)?;
    let model = match side {
        Side::Below => build_m(&antichain)?,
        Side::Above => build_j(&antichain)?,
    };
    // An empty set spans the one-element interval [t, t].
    let r = if set.is_empty() {
        t
    } else {
        match side {
            Side::Below => view.meet_all(set)?,
            Side::Above => view.join_all(set)?,
        }
    };
    let interval_of = |x: usize| match side {
        Side::Below => view.interval_ids(x, t),
        Side::Above => view.interval_ids(t, x),
    };
    let matches = |x: usize| -> Result<(bool, bool)> {
        let ids = interval_of(x)?;
        let sub = view.poset().induced_subgraph(&ids);
        let iso = isomorphism(&sub, model.poset()).is_some();
        let contains = set.iter().all(|s| ids.binary_search(s).is_ok());
        Ok((iso, contains))
    };
    let (iso_r, contains_r) = matches(r)?;
    let boolean = LatticeView::trusted(view.interval(
        if side == Side::Below { r } else { t },
        if side == Side::Below { t } else { r },
    )?)
    .is_boolean();

    let candidates: Vec<usize> = (0..view.len())
        .filter(|&x| {
            x != r
                && if side == Side::Below {
                    view.le(x, t)
                } else {
                    view.le(t, x)
                }
        })
        .collect();
    let mut other_matches = Vec::new();
    let mut iso_inside = Vec::new();
    for x in candidates {
        let (iso, contains) = matches(x)?;
        if iso && contains {
            other_matches.push(x);
        }
        let inside = match side {
            Side::Below => view.le(r, x),
            Side::Above => view.le(x, r),
        };
        if iso && inside {
            iso_inside.push(x);
        }
    }
    Ok(IntervalVerdict {
        r,
        holds_at_r: iso_r && contains_r,
        boolean,
        other_matches,
        iso_inside,
    })
}

/// For `D` a set of elements covered by `t`: `[x, t] ≅ M_color(D)` with
/// `D ⊆ [x, t]` exactly when `x = ∧D`, and that interval is Boolean.
pub fn descendant_interval_boolean(l: &DistributiveLattice, t: usize, d: &[usize]) -> Result<IntervalVerdict> {
    scan(l, t, d, Side::Below)
}

/// Dual of [`descendant_interval_boolean`] for a set `A` of covers of `t`,
/// with `u = ∨A` and `[t, u] ≅ J_color(A)`.
pub fn ancestor_interval_boolean(l: &DistributiveLattice, t: usize, a: &[usize]) -> Result<IntervalVerdict> {
    scan(l, t, a, Side::Above)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_poset;

    fn b2() -> DistributiveLattice {
        DistributiveLattice::from_poset(
            edge_poset(
                &["r", "s", "t", "u"],
                &[("r", "s", 1), ("r", "t", 2), ("s", "u", 2), ("t", "u", 1)],
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn both_descendants_of_top() {
        let v = descendant_interval_boolean(&b2(), 3, &[1, 2]).unwrap();
        assert_eq!(v.r, 0);
        assert!(v.holds(), "{v:?}");
    }

    #[test]
    fn single_descendant() {
        let v = descendant_interval_boolean(&b2(), 3, &[1]).unwrap();
        assert_eq!(v.r, 1);
        assert!(v.holds(), "{v:?}");
        let a = ancestor_interval_boolean(&b2(), 0, &[1, 2]).unwrap();
        assert_eq!(a.r, 3);
        assert!(a.holds());
    }

    #[test]
    fn empty_set_is_the_point() {
        let v = descendant_interval_boolean(&b2(), 1, &[]).unwrap();
        assert_eq!(v.r, 1);
        assert!(v.holds());
    }

    #[test]
    fn non_descendant_rejected() {
        assert!(matches!(
            descendant_interval_boolean(&b2(), 3, &[0]),
            Err(Error::InvalidDescendantSet(_))
        ));
    }
}
