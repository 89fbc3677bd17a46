use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::EdgeColoredPoset;
use crate::paths::{compute_rank, RankFunction};

/// Join/meet tables are materialised up to this many elements.
const TABLE_LIMIT: usize = 1 << 11;

/// An edge-colored poset known to be a lattice, with its reachability
/// closure and (when small enough) full join and meet tables.
#[derive(Clone, Debug)]
pub struct LatticeView {
    poset: EdgeColoredPoset,
    topo: Vec<usize>,
    pos: Vec<usize>,
    /// `above[v]` holds the topo positions of every `y >= v`.
    above: Vec<FixedBitSet>,
    /// `below[v]` holds reversed topo positions (`n-1-pos`) of every `y <= v`.
    below: Vec<FixedBitSet>,
    min: usize,
    max: usize,
    rank: std::result::Result<RankFunction, Error>,
    join_table: Option<Vec<u32>>,
    meet_table: Option<Vec<u32>>,
}

impl LatticeView {
    /// Checks that every pair has a least upper bound and that there is a
    /// least element (so greatest lower bounds exist too). The witness is the
    /// first failing pair in id order.
    pub fn new(poset: EdgeColoredPoset) -> Result<Self> {
        LatticeView::build(poset, true)
    }

    /// Skips the pairwise least-upper-bound scan, for posets that are
    /// lattices by construction.
    pub(crate) fn trusted(poset: EdgeColoredPoset) -> Self {
        LatticeView::build(poset, false).expect("lattice by construction")
    }

    fn build(poset: EdgeColoredPoset, verify: bool) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::NotConnected);
        }
        let topo = poset.linear_extension();
        let mut pos = vec![0; n];
        for (i, &v) in topo.iter().enumerate() {
            pos[v] = i;
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &v in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(pos[v]);
            for &(w, _) in poset.up(v) {
                set.union_with(&above[w]);
            }
            above[v] = set;
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for &v in &topo {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(n - 1 - pos[v]);
            for &(w, _) in poset.down(v) {
                set.union_with(&below[w]);
            }
            below[v] = set;
        }

        let label = |v: usize| poset.label(v).to_string();
        let mins = poset.minimal_elements();
        if mins.len() > 1 {
            return Err(Error::NotALattice {
                a: label(mins[0]),
                b: label(mins[1]),
                bound: "greatest lower bound",
            });
        }
        let maxs = poset.maximal_elements();
        if maxs.len() > 1 {
            return Err(Error::NotALattice {
                a: label(maxs[0]),
                b: label(maxs[1]),
                bound: "least upper bound",
            });
        }

        let lub = |s: usize, t: usize| -> Option<usize> {
            let mut common = above[s].clone();
            common.intersect_with(&above[t]);
            let first = common.minimum()?;
            let cand = topo[first];
            common.is_subset(&above[cand]).then_some(cand)
        };
        let bad = verify
            .then(|| {
                (0..n)
                    .into_par_iter()
                    .find_map_first(|s| (s + 1..n).find_map(|t| lub(s, t).is_none().then_some((s, t))))
            })
            .flatten();
        if let Some((s, t)) = bad {
            return Err(Error::NotALattice {
                a: label(s),
                b: label(t),
                bound: "least upper bound",
            });
        }

        let mut view = LatticeView {
            min: mins[0],
            max: maxs[0],
            rank: compute_rank(&poset),
            poset,
            topo,
            pos,
            above,
            below,
            join_table: None,
            meet_table: None,
        };
        if n <= TABLE_LIMIT {
            let joins: Vec<u32> = (0..n * n)
                .into_par_iter()
                .map(|i| view.join_scan(i / n, i % n) as u32)
                .collect();
            let meets: Vec<u32> = (0..n * n)
                .into_par_iter()
                .map(|i| view.meet_scan(i / n, i % n) as u32)
                .collect();
            view.join_table = Some(joins);
            view.meet_table = Some(meets);
        }
        Ok(view)
    }

    fn join_scan(&self, s: usize, t: usize) -> usize {
        let mut common = self.above[s].clone();
        common.intersect_with(&self.above[t]);
        self.topo[common.minimum().expect("lattice")]
    }

    fn meet_scan(&self, s: usize, t: usize) -> usize {
        let n = self.len();
        let mut common = self.below[s].clone();
        common.intersect_with(&self.below[t]);
        self.topo[n - 1 - common.minimum().expect("lattice")]
    }

    pub fn poset(&self) -> &EdgeColoredPoset {
        &self.poset
    }

    pub fn into_poset(self) -> EdgeColoredPoset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn min(&self) -> usize {
        self.min
    }

    pub fn max(&self) -> usize {
        self.max
    }

    /// `s ∨ t` on ids known to be in range.
    pub fn join_id(&self, s: usize, t: usize) -> usize {
        match &self.join_table {
            Some(tab) => tab[s * self.len() + t] as usize,
            None => self.join_scan(s, t),
        }
    }

    /// `s ∧ t` on ids known to be in range.
    pub fn meet_id(&self, s: usize, t: usize) -> usize {
        match &self.meet_table {
            Some(tab) => tab[s * self.len() + t] as usize,
            None => self.meet_scan(s, t),
        }
    }

    /// `s <= t` on ids known to be in range.
    pub fn le(&self, s: usize, t: usize) -> bool {
        self.above[s].contains(self.pos[t])
    }

    pub fn join(&self, s: usize, t: usize) -> Result<usize> {
        self.poset.check(s)?;
        self.poset.check(t)?;
        Ok(self.join_id(s, t))
    }

    pub fn meet(&self, s: usize, t: usize) -> Result<usize> {
        self.poset.check(s)?;
        self.poset.check(t)?;
        Ok(self.meet_id(s, t))
    }

    pub fn leq(&self, s: usize, t: usize) -> Result<bool> {
        self.poset.check(s)?;
        self.poset.check(t)?;
        Ok(self.le(s, t))
    }

    /// Join of a set; the empty join is `min`.
    pub fn join_all(&self, set: &[usize]) -> Result<usize> {
        set.iter().try_fold(self.min, |acc, &x| self.join(acc, x))
    }

    /// Meet of a set; the empty meet is `max`.
    pub fn meet_all(&self, set: &[usize]) -> Result<usize> {
        set.iter().try_fold(self.max, |acc, &x| self.meet(acc, x))
    }

    pub fn rank(&self) -> Result<&RankFunction> {
        self.rank.as_ref().map_err(Clone::clone)
    }

    pub fn is_ranked(&self) -> bool {
        self.rank.is_ok()
    }

    /// Ids of `{x : s <= x <= t}`, ascending.
    pub fn interval_ids(&self, s: usize, t: usize) -> Result<Vec<usize>> {
        if !self.leq(s, t)? {
            return Err(Error::IncomparableEndpoints(
                self.poset.label(s).to_string(),
                self.poset.label(t).to_string(),
            ));
        }
        Ok((0..self.len()).filter(|&x| self.le(s, x) && self.le(x, t)).collect())
    }

    /// The interval `[s, t]` as the induced subgraph of the Hasse diagram.
    /// Intervals are convex, so these are exactly its covers.
    pub fn interval(&self, s: usize, t: usize) -> Result<EdgeColoredPoset> {
        Ok(self.poset.induced_subgraph(&self.interval_ids(s, t)?))
    }

    /// First pair violating `2ρ(s∨t) − ρ(s) − ρ(t) = ρ(s) + ρ(t) − 2ρ(s∧t)`.
    pub fn check_modular(&self) -> Result<()> {
        let rho = self.rank()?;
        let n = self.len();
        let r = |v: usize| rho.of(v) as i64;
        let bad = (0..n).into_par_iter().find_map_first(|s| {
            (s + 1..n).find_map(|t| {
                let up = 2 * r(self.join_id(s, t)) - r(s) - r(t);
                let down = r(s) + r(t) - 2 * r(self.meet_id(s, t));
                (up != down).then_some((s, t))
            })
        });
        match bad {
            None => Ok(()),
            Some((s, t)) => Err(Error::NotModular {
                s: self.poset.label(s).to_string(),
                t: self.poset.label(t).to_string(),
            }),
        }
    }

    pub fn is_modular(&self) -> bool {
        self.check_modular().is_ok()
    }

    /// Scans all triples against both distributive identities.
    pub fn check_distributive(&self) -> Result<()> {
        let n = self.len();
        let bad = (0..n).into_par_iter().find_map_first(|r| {
            for s in 0..n {
                for t in 0..n {
                    let join_over_meet =
                        self.join_id(r, self.meet_id(s, t)) == self.meet_id(self.join_id(r, s), self.join_id(r, t));
                    let meet_over_join =
                        self.meet_id(r, self.join_id(s, t)) == self.join_id(self.meet_id(r, s), self.meet_id(r, t));
                    if !(join_over_meet && meet_over_join) {
                        return Some((r, s, t));
                    }
                }
            }
            None
        });
        match bad {
            None => Ok(()),
            Some((r, s, t)) => Err(Error::NotDistributive {
                r: self.poset.label(r).to_string(),
                s: self.poset.label(s).to_string(),
                t: self.poset.label(t).to_string(),
            }),
        }
    }

    pub fn is_distributive(&self) -> bool {
        self.check_distributive().is_ok()
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.poset.up(self.min).iter().map(|&(a, _)| a).collect()
    }

    /// Whether the uncolored order is a subset lattice: `x ↦ {atoms ≤ x}`
    /// must be an order isomorphism onto all subsets of the atoms.
    pub fn is_boolean(&self) -> bool {
        let atoms = self.atoms();
        let k = atoms.len();
        if k >= usize::BITS as usize - 1 || self.len() != 1usize << k {
            return false;
        }
        let code: Vec<usize> = (0..self.len())
            .map(|x| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &a)| self.le(a, x))
                    .fold(0usize, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let mut seen = vec![false; self.len()];
        for &c in &code {
            if std::mem::replace(&mut seen[c], true) {
                return false;
            }
        }
        (0..self.len())
            .into_par_iter()
            .all(|x| (0..self.len()).all(|y| (code[x] & !code[y] == 0) == self.le(x, y)))
    }
}

/// A lattice that passed [`LatticeView::check_modular`].
#[derive(Clone, Debug)]
pub struct ModularLattice(LatticeView);

impl ModularLattice {
    pub fn new(view: LatticeView) -> Result<Self> {
        view.check_modular()?;
        Ok(ModularLattice(view))
    }

    pub fn from_poset(p: EdgeColoredPoset) -> Result<Self> {
        ModularLattice::new(LatticeView::new(p)?)
    }

    pub fn view(&self) -> &LatticeView {
        &self.0
    }

    pub fn into_view(self) -> LatticeView {
        self.0
    }

    pub fn rank_fn(&self) -> &RankFunction {
        self.0.rank.as_ref().expect("modular lattices are ranked")
    }

    pub fn length(&self) -> usize {
        self.rank_fn().length()
    }
}

impl std::ops::Deref for ModularLattice {
    type Target = LatticeView;
    fn deref(&self) -> &LatticeView {
        &self.0
    }
}

/// A lattice that passed [`LatticeView::check_distributive`] (hence modular).
#[derive(Clone, Debug)]
pub struct DistributiveLattice(ModularLattice);

impl DistributiveLattice {
    pub fn new(view: LatticeView) -> Result<Self> {
        view.check_distributive()?;
        // Distributive lattices are modular; checking keeps the wrapper honest.
        Ok(DistributiveLattice(ModularLattice::new(view)?))
    }

    pub fn from_poset(p: EdgeColoredPoset) -> Result<Self> {
        DistributiveLattice::new(LatticeView::new(p)?)
    }

    /// For constructions that are distributive by construction (ideal lattices).
    pub(crate) fn trusted(view: LatticeView) -> Self {
        debug_assert!(view.is_ranked());
        DistributiveLattice(ModularLattice(view))
    }

    pub fn as_modular(&self) -> &ModularLattice {
        &self.0
    }

    pub fn into_modular(self) -> ModularLattice {
        self.0
    }
}

impl std::ops::Deref for DistributiveLattice {
    type Target = ModularLattice;
    fn deref(&self) -> &ModularLattice {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_poset;

    pub(crate) fn m3() -> EdgeColoredPoset {
        edge_poset(
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

    fn n5() -> EdgeColoredPoset {
        edge_poset(
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

    #[test]
    fn m3_modular_not_distributive() {
        let l = LatticeView::new(m3()).unwrap();
        assert!(l.is_modular());
        assert_eq!(
            l.check_distributive(),
            Err(Error::NotDistributive {
                r: "a".into(),
                s: "b".into(),
                t: "c".into()
            })
        );
        assert!(!l.is_boolean());
    }

    #[test]
    fn n5_not_modular() {
        let l = LatticeView::new(n5()).unwrap();
        assert!(matches!(l.check_modular(), Err(Error::NotRanked { .. })));
        assert!(!l.is_distributive());
    }

    #[test]
    fn two_maxima_is_not_a_lattice() {
        let p = edge_poset(&["0", "a", "b"], &[("0", "a", 1), ("0", "b", 1)]).unwrap();
        assert!(matches!(LatticeView::new(p), Err(Error::NotALattice { .. })));
        // bowtie: a, b both below c and d
        let bow = edge_poset(
            &["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a", 1),
                ("0", "b", 1),
                ("a", "c", 1),
                ("a", "d", 1),
                ("b", "c", 1),
                ("b", "d", 1),
                ("c", "1", 1),
                ("d", "1", 1),
            ],
        )
        .unwrap();
        assert_eq!(
            LatticeView::new(bow).unwrap_err(),
            Error::NotALattice {
                a: "a".into(),
                b: "b".into(),
                bound: "least upper bound"
            }
        );
    }

    #[test]
    fn empty_joins_and_meets() {
        let l = LatticeView::new(m3()).unwrap();
        assert_eq!(l.join_all(&[]).unwrap(), l.min());
        assert_eq!(l.meet_all(&[]).unwrap(), l.max());
        assert_eq!(l.join(1, 2).unwrap(), 4);
        assert_eq!(l.meet(1, 2).unwrap(), 0);
        assert_eq!(l.join(1, 9), Err(Error::UnknownVertex("#9".into())));
    }

    #[test]
    fn intervals() {
        let l = LatticeView::new(m3()).unwrap();
        assert_eq!(l.interval(1, 1).unwrap().len(), 1);
        assert_eq!(l.interval(0, 4).unwrap().len(), 5);
        assert!(matches!(l.interval(1, 2), Err(Error::IncomparableEndpoints(..))));
    }
}
