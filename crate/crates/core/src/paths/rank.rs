use std::collections::VecDeque;

use super::path::Path;
use crate::error::{Error, Result};
use crate::graph::{EdgeColoredPoset, Poset, Tag};

/// Surjective `ρ: R → {0, …, l}` with `ρ(t) = ρ(s) + 1` on every cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    rank: Vec<usize>,
    length: usize,
}

impl RankFunction {
    pub fn of(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.rank
    }
}

/// The unique rank function of a connected ranked poset, found by levelling
/// the Hasse diagram breadth-first from vertex 0.
pub fn compute_rank<V: Tag, E: Tag>(p: &Poset<V, E>) -> Result<RankFunction> {
    let n = p.len();
    if n == 0 {
        return Err(Error::NotConnected);
    }
    let mut level: Vec<Option<i64>> = vec![None; n];
    level[0] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        let lv = level[v].unwrap();
        let ups = p.up(v).iter().map(|&(w, _)| (w, lv + 1));
        let downs = p.down(v).iter().map(|&(w, _)| (w, lv - 1));
        for (w, want) in ups.chain(downs) {
            match level[w] {
                None => {
                    level[w] = Some(want);
                    reached += 1;
                    queue.push_back(w);
                }
                Some(have) if have != want => {
                    let (lower, upper) = if want > lv { (v, w) } else { (w, v) };
                    return Err(Error::NotRanked {
                        lower: p.label(lower).to_string(),
                        upper: p.label(upper).to_string(),
                    });
                }
                Some(_) => {}
            }
        }
    }
    if reached < n {
        return Err(Error::NotConnected);
    }
    let lo = level.iter().map(|l| l.unwrap()).min().unwrap();
    let rank: Vec<usize> = level.iter().map(|l| (l.unwrap() - lo) as usize).collect();
    let length = *rank.iter().max().unwrap();
    Ok(RankFunction { rank, length })
}

/// `ρ(s) + Σ_i (a_i − d_i)` for a path starting at `s`.
pub fn rank_via_path(p: &EdgeColoredPoset, path: &Path) -> Result<i64> {
    path.validate(p)?;
    let rho = compute_rank(p)?;
    Ok(rho.of(path.start()) as i64 + path.net_ascent())
}

/// Breadth-first distance in the undirected Hasse diagram.
pub fn distance<V: Tag, E: Tag>(p: &Poset<V, E>, s: usize, t: usize) -> Result<usize> {
    p.check(s)?;
    p.check(t)?;
    bfs_distances(p, s)[t].ok_or_else(|| Error::NotConnectedPair(p.label(s).to_string(), p.label(t).to_string()))
}

/// Distances from `s` to every vertex (`None` when unreachable).
pub fn bfs_distances<V: Tag, E: Tag>(p: &Poset<V, E>, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; p.len()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for w in p.neighbours(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// A shortest path from `s` to `t`, preferring low ids at each step.
pub fn shortest_path(p: &EdgeColoredPoset, s: usize, t: usize) -> Result<Path> {
    let d = distance(p, s, t)?;
    let from_t = bfs_distances(p, t);
    let mut walk = vec![s];
    let mut at = s;
    for remaining in (0..d).rev() {
        let mut next: Vec<usize> = p.neighbours(at).filter(|&w| from_t[w] == Some(remaining)).collect();
        next.sort_unstable();
        at = next[0];
        walk.push(at);
    }
    Path::from_vertices(p, &walk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_poset;

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
    fn chain_ranks() {
        let p = edge_poset(&["a", "b", "c"], &[("a", "b", 1), ("b", "c", 2)]).unwrap();
        let r = compute_rank(&p).unwrap();
        assert_eq!(r.as_slice(), &[0, 1, 2]);
        assert_eq!(r.length(), 2);
    }

    #[test]
    fn pentagon_is_not_ranked() {
        assert!(matches!(compute_rank(&n5()), Err(Error::NotRanked { .. })));
    }

    #[test]
    fn disconnected() {
        let p = edge_poset(&["a", "b"], &[]).unwrap();
        assert_eq!(compute_rank(&p), Err(Error::NotConnected));
        assert_eq!(distance(&p, 0, 1), Err(Error::NotConnectedPair("a".into(), "b".into())));
    }

    #[test]
    fn shortest_paths_have_bfs_length() {
        let p = n5();
        for s in 0..5 {
            for t in 0..5 {
                let path = shortest_path(&p, s, t).unwrap();
                assert_eq!(path.len(), distance(&p, s, t).unwrap());
                assert_eq!((path.start(), path.end()), (s, t));
            }
        }
    }
}
