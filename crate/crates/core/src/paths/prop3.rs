//! Ascending paths between comparable elements of a diamond-colored modular
//! lattice: same length, same color multiset, and matching outer colors.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Color;
use crate::lattice::ModularLattice;
use crate::paths::diamond_violation;
use crate::report::Report;

pub const DEFAULT_PATH_CAP: usize = 100_000;

/// Every saturated chain from `s` up to `t`, as vertex lists, in
/// lexicographic order. Errors once more than `cap` chains exist.
pub fn ascending_paths(l: &ModularLattice, s: usize, t: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let p = l.poset();
    if !l.leq(s, t)? {
        return Err(Error::IncomparableEndpoints(
            p.label(s).to_string(),
            p.label(t).to_string(),
        ));
    }
    let mut out = Vec::new();
    let mut stack = vec![s];
    fn walk(l: &ModularLattice, t: usize, cap: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> Result<()> {
        let v = *stack.last().unwrap();
        if v == t {
            if out.len() == cap {
                return Err(Error::EnumerationCapExceeded(cap));
            }
            out.push(stack.clone());
            return Ok(());
        }
        for &(w, _) in l.poset().up(v) {
            if l.le(w, t) {
                stack.push(w);
                walk(l, t, cap, stack, out)?;
                stack.pop();
            }
        }
        Ok(())
    }
    walk(l, t, cap, &mut stack, &mut out)?;
    Ok(out)
}

/// Checks the invariants for one pair `s <= t`. Pairs of a first-step vertex
/// and a last-step vertex that are comparable are only counted.
pub fn verify_prop3(l: &ModularLattice, s: usize, t: usize, cap: usize) -> Result<Report> {
    let p = l.poset();
    if let Some(d) = diamond_violation(p) {
        return Err(d.to_error(p));
    }
    let paths = ascending_paths(l, s, t, cap)?;
    let mut report = Report::new(format!("ascending paths {} -> {}", p.label(s), p.label(t)));
    let color = |a: usize, b: usize| p.edge_color(a, b).unwrap();
    let multiset = |path: &[usize]| -> BTreeMap<Color, usize> {
        let mut m = BTreeMap::new();
        for w in path.windows(2) {
            *m.entry(color(w[0], w[1])).or_insert(0) += 1;
        }
        m
    };
    let reference = multiset(&paths[0]);
    let len = paths[0].len() - 1;
    for path in &paths[1..] {
        report.check(path.len() - 1 == len, || {
            format!("path lengths {} and {} differ", len, path.len() - 1)
        });
        let m = multiset(path);
        report.check(m == reference, || {
            format!("color multisets {reference:?} and {m:?} differ")
        });
    }
    report.note(format!("{} paths of length {len}", paths.len()));

    if len >= 2 {
        // First steps (r_1, i_1) and last steps (r'_{p-1}, j_p) over all paths.
        let firsts: BTreeSet<(usize, Color)> = paths.iter().map(|q| (q[1], color(q[0], q[1]))).collect();
        let lasts: BTreeSet<(usize, Color)> = paths.iter().map(|q| (q[len - 1], color(q[len - 1], q[len]))).collect();
        let (mut checked, mut comparable) = (0, 0);
        for &(r1, i1) in &firsts {
            for &(rl, jp) in &lasts {
                if l.le(r1, rl) || l.le(rl, r1) {
                    comparable += 1;
                    continue;
                }
                checked += 1;
                report.check(i1 == jp, || {
                    format!(
                        "`{}` and `{}` incomparable but colors {i1} != {jp}",
                        p.label(r1),
                        p.label(rl)
                    )
                });
            }
        }
        report.note(format!(
            "{checked} incomparable first/last pairs checked, {comparable} comparable pairs recorded"
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_poset;

    #[test]
    fn diamond_paths_swap_colors() {
        let l = ModularLattice::from_poset(
            edge_poset(
                &["r", "s", "t", "u"],
                &[("r", "s", 1), ("r", "t", 2), ("s", "u", 2), ("t", "u", 1)],
            )
            .unwrap(),
        )
        .unwrap();
        let paths = ascending_paths(&l, 0, 3, 10).unwrap();
        assert_eq!(paths, vec![vec![0, 1, 3], vec![0, 2, 3]]);
        let r = verify_prop3(&l, 0, 3, 10).unwrap();
        assert!(r.holds(), "{r}");
        assert_eq!(ascending_paths(&l, 0, 3, 1), Err(Error::EnumerationCapExceeded(1)));
    }

    #[test]
    fn chain_has_one_path() {
        let l =
            ModularLattice::from_poset(edge_poset(&["a", "b", "c"], &[("a", "b", 1), ("b", "c", 2)]).unwrap()).unwrap();
        assert_eq!(ascending_paths(&l, 0, 2, 10).unwrap().len(), 1);
        assert!(verify_prop3(&l, 0, 2, 10).unwrap().holds());
        assert!(verify_prop3(&l, 1, 1, 10).unwrap().holds());
    }
}
