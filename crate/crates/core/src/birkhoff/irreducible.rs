use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::graph::{Poset, VertexColoredPoset};
use crate::lattice::{DistributiveLattice, LatticeView};
use crate::paths::diamond_violation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Join,
    Meet,
}

/// `j_color(L)` or `m_color(L)` together with the lattice ids it came from.
#[derive(Clone, Debug)]
pub struct IrreduciblePoset {
    pub poset: VertexColoredPoset,
    pub provenance: Provenance,
    /// `elements[i]` is the lattice id of poset vertex `i`.
    pub elements: Vec<usize>,
}

/// Join irreducibles cover exactly one element; meet irreducibles are
/// covered by exactly one. Each takes the color of that unique edge, and the
/// order is the one induced from the lattice. Only diamond-coloring is
/// checked here; distributivity is the caller's business.
pub fn irreducibles(l: &LatticeView, provenance: Provenance) -> Result<IrreduciblePoset> {
    let p = l.poset();
    if let Some(d) = diamond_violation(p) {
        return Err(d.to_error(p));
    }
    let mut elements = Vec::new();
    let mut colors = Vec::new();
    for x in 0..p.len() {
        let side = match provenance {
            Provenance::Join => p.down(x),
            Provenance::Meet => p.up(x),
        };
        if let [(_, c)] = side {
            elements.push(x);
            colors.push(*c);
        }
    }
    let k = elements.len();
    let above: Vec<FixedBitSet> = elements
        .iter()
        .map(|&x| {
            let mut set = FixedBitSet::with_capacity(k);
            for (j, &y) in elements.iter().enumerate() {
                set.set(j, l.le(x, y));
            }
            set
        })
        .collect();
    let labels = elements.iter().map(|&x| p.label(x).to_string()).collect();
    Ok(IrreduciblePoset {
        poset: Poset::from_up_sets(labels, colors, &above),
        provenance,
        elements,
    })
}

/// `j_color(L)`.
pub fn extract_j(l: &DistributiveLattice) -> Result<IrreduciblePoset> {
    irreducibles(l, Provenance::Join)
}

/// `m_color(L)`.
pub fn extract_m(l: &DistributiveLattice) -> Result<IrreduciblePoset> {
    irreducibles(l, Provenance::Meet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birkhoff::{antichain, build_j};
    use crate::graph::{edge_poset, Color};
    use crate::Error;

    #[test]
    fn chain_irreducibles() {
        let l = DistributiveLattice::from_poset(edge_poset(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3)]).unwrap())
            .unwrap();
        let j = extract_j(&l).unwrap();
        assert_eq!(j.elements, vec![1, 2]);
        assert_eq!(j.poset.vertex_tags(), &[Color(3), Color(3)]);
        assert!(j.poset.leq(0, 1).unwrap());
        let m = extract_m(&l).unwrap();
        assert_eq!(m.elements, vec![0, 1]);
    }

    #[test]
    fn boolean_gives_antichain() {
        let l = build_j(&antichain(3, Color(1))).unwrap().lattice();
        let j = extract_j(&l).unwrap();
        assert_eq!(j.poset.len(), 3);
        assert_eq!(j.poset.edge_count(), 0);
    }

    #[test]
    fn refuses_mismatched_diamond() {
        let l = DistributiveLattice::from_poset(
            edge_poset(
                &["r", "s", "t", "u"],
                &[("r", "s", 1), ("r", "t", 1), ("s", "u", 2), ("t", "u", 2)],
            )
            .unwrap(),
        )
        .unwrap();
        assert!(matches!(extract_j(&l), Err(Error::NotDiamondColored { .. })));
    }
}
