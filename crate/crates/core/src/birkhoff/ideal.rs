use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredPoset, Poset, VertexColoredPoset};
use crate::lattice::{DistributiveLattice, LatticeView};
use crate::paths::diamond_violation;
use crate::report::Report;

pub const DEFAULT_SIZE_CAP: usize = 1 << 20;

/// Whether lattice elements are order ideals or filters of the source.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Ideal,
    Filter,
}

/// `J_color(P)` (ideals by inclusion) or `M_color(P)` (filters by reverse
/// inclusion), keeping the vertex subset behind every lattice element.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    source: VertexColoredPoset,
    mode: Mode,
    elements: Vec<FixedBitSet>,
    index: HashMap<FixedBitSet, usize>,
    poset: EdgeColoredPoset,
}

/// Orders bitsets by their value as binary numbers (bit `i` = vertex `i`).
pub fn numeric_cmp(a: &FixedBitSet, b: &FixedBitSet) -> std::cmp::Ordering {
    a.as_slice().iter().rev().cmp(b.as_slice().iter().rev())
}

/// All order ideals of `p`, by depth-first include/exclude choices along a
/// linear extension. Fails once more than `cap` ideals exist.
pub fn order_ideals(p: &VertexColoredPoset, cap: usize) -> Result<Vec<FixedBitSet>> {
    let order = p.linear_extension();
    let mut out = Vec::new();
    let mut current = FixedBitSet::with_capacity(p.len());
    fn go(
        p: &VertexColoredPoset,
        order: &[usize],
        i: usize,
        current: &mut FixedBitSet,
        out: &mut Vec<FixedBitSet>,
        cap: usize,
    ) -> Result<()> {
        if i == order.len() {
            if out.len() == cap {
                return Err(Error::SizeCapExceeded(cap));
            }
            out.push(current.clone());
            return Ok(());
        }
        go(p, order, i + 1, current, out, cap)?;
        let v = order[i];
        if p.down(v).iter().all(|&(w, _)| current.contains(w)) {
            current.insert(v);
            go(p, order, i + 1, current, out, cap)?;
            current.set(v, false);
        }
        Ok(())
    }
    go(p, &order, 0, &mut current, &mut out, cap)?;
    out.sort_by(numeric_cmp);
    Ok(out)
}

/// `{u1,u2}` with source labels in id order.
pub fn subset_label(p: &VertexColoredPoset, set: &FixedBitSet) -> String {
    let names: Vec<&str> = set.ones().map(|v| p.label(v)).collect();
    format!("{{{}}}", names.join(","))
}

impl IdealLattice {
    fn build(p: &VertexColoredPoset, mode: Mode, cap: usize) -> Result<Self> {
        let n = p.len();
        let mut elements = order_ideals(p, cap)?;
        if mode == Mode::Filter {
            for e in &mut elements {
                e.toggle_range(..);
            }
            elements.sort_by(numeric_cmp);
        }
        let index: HashMap<FixedBitSet, usize> = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let mut edges = Vec::new();
        for (yi, y) in elements.iter().enumerate() {
            for v in y.ones() {
                // Ideal mode: v maximal in y gives (y - v) -> y.
                // Filter mode: v minimal in y gives y -> (y - v).
                let extremal = match mode {
                    Mode::Ideal => p.up(v).iter().all(|&(w, _)| !y.contains(w)),
                    Mode::Filter => p.down(v).iter().all(|&(w, _)| !y.contains(w)),
                };
                if !extremal {
                    continue;
                }
                let mut x = y.clone();
                x.set(v, false);
                let xi = index[&x];
                let color = p.vertex_color(v);
                match mode {
                    Mode::Ideal => edges.push((xi, yi, color)),
                    Mode::Filter => edges.push((yi, xi, color)),
                }
            }
        }
        debug_assert!(elements.iter().all(|e| e.len() == n));
        let labels = elements.iter().map(|e| subset_label(p, e)).collect();
        let poset = Poset::from_parts_unchecked(labels, vec![(); elements.len()], edges);
        let lattice = IdealLattice {
            source: p.clone(),
            mode,
            elements,
            index,
            poset,
        };
        // Cheap structural guarantee; the full distributive scan lives in
        // `verify_postconditions`.
        if let Some(d) = diamond_violation(&lattice.poset) {
            return Err(d.to_error(&lattice.poset));
        }
        Ok(lattice)
    }

    pub fn source(&self) -> &VertexColoredPoset {
        &self.source
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn elements(&self) -> &[FixedBitSet] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &FixedBitSet {
        &self.elements[i]
    }

    pub fn index_of(&self, set: &FixedBitSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn poset(&self) -> &EdgeColoredPoset {
        &self.poset
    }

    pub fn into_poset(self) -> EdgeColoredPoset {
        self.poset
    }

    /// The lattice view (join/meet tables). Distributive by construction.
    pub fn lattice(&self) -> DistributiveLattice {
        DistributiveLattice::trusted(LatticeView::trusted(self.poset.clone()))
    }

    /// `|x|` for ideals, `|P| − |x|` for filters.
    pub fn rank_of(&self, i: usize) -> usize {
        let size = self.elements[i].count_ones(..);
        match self.mode {
            Mode::Ideal => size,
            Mode::Filter => self.source.len() - size,
        }
    }

    pub fn length(&self) -> usize {
        self.source.len()
    }

    /// `∅` for ideals and `P` for filters.
    pub fn bottom(&self) -> usize {
        match self.mode {
            Mode::Ideal => 0,
            Mode::Filter => self.len() - 1,
        }
    }

    pub fn top(&self) -> usize {
        match self.mode {
            Mode::Ideal => self.len() - 1,
            Mode::Filter => 0,
        }
    }

    /// `⟨v⟩`: the principal ideal (or filter) generated by `v`.
    pub fn principal(&self, v: usize) -> FixedBitSet {
        match self.mode {
            Mode::Ideal => self.source.down_closure(v),
            Mode::Filter => self.source.up_closure(v),
        }
    }

    /// Full postcondition check: lattice, distributive, diamond-colored,
    /// rank formula, extremes and the single-vertex edge rule.
    pub fn verify_postconditions(&self) -> Report {
        let mut r = Report::new(match self.mode {
            Mode::Ideal => "J_color postconditions",
            Mode::Filter => "M_color postconditions",
        });
        let view = match LatticeView::new(self.poset.clone()) {
            Ok(v) => v,
            Err(e) => {
                r.fail(e.to_string());
                return r;
            }
        };
        if let Err(e) = view.check_distributive() {
            r.fail(e.to_string());
        }
        r.check(diamond_violation(&self.poset).is_none(), || {
            "not diamond-colored".into()
        });
        match view.rank() {
            Ok(rho) => {
                let bad = (0..self.len()).find(|&i| rho.of(i) != self.rank_of(i));
                r.check(bad.is_none(), || {
                    format!("rank of element {} is not its size rule", bad.unwrap())
                });
                r.check(rho.length() == self.source.len(), || "length differs from |P|".into());
            }
            Err(e) => r.fail(e.to_string()),
        }
        r.check(view.min() == self.bottom() && view.max() == self.top(), || {
            "wrong extremes".into()
        });
        for e in self.poset.edges() {
            let (big, small) = match self.mode {
                Mode::Ideal => (&self.elements[e.upper], &self.elements[e.lower]),
                Mode::Filter => (&self.elements[e.lower], &self.elements[e.upper]),
            };
            let diff: Vec<usize> = big.difference(small).collect();
            let ok = small.is_subset(big) && diff.len() == 1 && self.source.vertex_color(diff[0]) == e.tag;
            r.check(ok, || format!("edge {} -> {} breaks the edge rule", e.lower, e.upper));
        }
        r.note(format!("{} elements, length {}", self.len(), self.length()));
        r
    }
}

/// `J_color(P)`.
pub fn build_j(p: &VertexColoredPoset) -> Result<IdealLattice> {
    IdealLattice::build(p, Mode::Ideal, DEFAULT_SIZE_CAP)
}

/// `M_color(P)`.
pub fn build_m(p: &VertexColoredPoset) -> Result<IdealLattice> {
    IdealLattice::build(p, Mode::Filter, DEFAULT_SIZE_CAP)
}

pub fn build_with_cap(p: &VertexColoredPoset, mode: Mode, cap: usize) -> Result<IdealLattice> {
    IdealLattice::build(p, mode, cap)
}

/// The colors of a vertex-colored antichain, for Boolean examples.
pub fn antichain(n: usize, color: Color) -> VertexColoredPoset {
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    Poset::from_parts_unchecked(labels, vec![color; n], Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_poset;

    #[test]
    fn empty_poset_gives_one_element() {
        let j = build_j(&VertexColoredPoset::empty()).unwrap();
        assert_eq!(j.len(), 1);
        assert_eq!(j.poset().label(0), "{}");
    }

    #[test]
    fn antichain_gives_boolean() {
        let j = build_j(&antichain(3, Color(1))).unwrap();
        assert_eq!(j.len(), 8);
        assert!(j.verify_postconditions().holds());
        assert!(j.lattice().is_boolean());
        let m = build_m(&antichain(3, Color(1))).unwrap();
        assert!(m.verify_postconditions().holds(), "{}", m.verify_postconditions());
    }

    #[test]
    fn chain_ideals_in_numeric_order() {
        let p = vertex_poset(&[("a", 1), ("b", 2)], &[("a", "b")]).unwrap();
        let j = build_j(&p).unwrap();
        let labels: Vec<&str> = j.poset().labels().iter().map(String::as_str).collect();
        assert_eq!(labels, ["{}", "{a}", "{a,b}"]);
        let m = build_m(&p).unwrap();
        let labels: Vec<&str> = m.poset().labels().iter().map(String::as_str).collect();
        assert_eq!(labels, ["{}", "{b}", "{a,b}"]);
        assert_eq!((m.bottom(), m.top()), (2, 0));
        assert_eq!(m.poset().edge_color(2, 1), Some(Color(1)));
    }

    #[test]
    fn size_cap() {
        assert_eq!(
            build_with_cap(&antichain(4, Color(1)), Mode::Ideal, 15).unwrap_err(),
            Error::SizeCapExceeded(15)
        );
    }
}
