use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredPoset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Up,
    Down,
}

/// One step of a path: move to `to` along a cover edge of `color`, going up
/// (`x → to`) or down (`to → x`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub to: usize,
    pub dir: Direction,
    pub color: Color,
}

/// A walk in the Hasse diagram of an edge-colored poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    steps: Vec<Step>,
}

impl Path {
    pub fn trivial(start: usize) -> Self {
        Path {
            start,
            steps: Vec::new(),
        }
    }

    /// Builds the path through `vertices`, looking up each cover and its
    /// color. Fails if two consecutive vertices are not joined by a cover.
    pub fn from_vertices(p: &EdgeColoredPoset, vertices: &[usize]) -> Result<Self> {
        let (&start, rest) = vertices
            .split_first()
            .ok_or_else(|| Error::InvalidPath("a path needs at least one vertex".into()))?;
        p.check(start)?;
        let mut steps = Vec::with_capacity(rest.len());
        let mut at = start;
        for &next in rest {
            p.check(next)?;
            let step = if let Some(color) = p.edge_color(at, next) {
                Step {
                    to: next,
                    dir: Direction::Up,
                    color,
                }
            } else if let Some(color) = p.edge_color(next, at) {
                Step {
                    to: next,
                    dir: Direction::Down,
                    color,
                }
            } else {
                return Err(Error::InvalidPath(format!(
                    "`{}` and `{}` are not joined by a cover",
                    p.label(at),
                    p.label(next)
                )));
            };
            steps.push(step);
            at = next;
        }
        Ok(Path { start, steps })
    }

    /// Checks every step against the covers of `p`.
    pub fn validate(&self, p: &EdgeColoredPoset) -> Result<()> {
        let mut at = p.check(self.start)?;
        for s in &self.steps {
            p.check(s.to)?;
            let found = match s.dir {
                Direction::Up => p.edge_color(at, s.to),
                Direction::Down => p.edge_color(s.to, at),
            };
            if found != Some(s.color) {
                return Err(Error::InvalidPath(format!(
                    "no {:?} cover of color {} between `{}` and `{}`",
                    s.dir,
                    s.color,
                    p.label(at),
                    p.label(s.to)
                )));
            }
            at = s.to;
        }
        Ok(())
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, |s| s.to)
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn vertices(&self) -> Vec<usize> {
        std::iter::once(self.start)
            .chain(self.steps.iter().map(|s| s.to))
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.steps.len() + 1);
        self.vertices().into_iter().all(|v| seen.insert(v))
    }

    /// Simple, with all ascents before all descents.
    pub fn is_mountain(&self) -> bool {
        self.is_simple()
            && !self
                .steps
                .windows(2)
                .any(|w| w[0].dir == Direction::Down && w[1].dir == Direction::Up)
    }

    /// Simple, with all descents before all ascents.
    pub fn is_valley(&self) -> bool {
        self.is_simple()
            && !self
                .steps
                .windows(2)
                .any(|w| w[0].dir == Direction::Up && w[1].dir == Direction::Down)
    }

    pub fn is_ascending(&self) -> bool {
        self.steps.iter().all(|s| s.dir == Direction::Up)
    }

    /// Highest vertex of a mountain path.
    pub fn apex(&self) -> usize {
        let k = self.steps.iter().take_while(|s| s.dir == Direction::Up).count();
        self.vertices()[k]
    }

    /// Lowest vertex of a valley path.
    pub fn nadir(&self) -> usize {
        let k = self.steps.iter().take_while(|s| s.dir == Direction::Down).count();
        self.vertices()[k]
    }

    /// `a_i` and `d_i` for every color that occurs on the path.
    pub fn ascent_descent_counts(&self) -> BTreeMap<Color, (usize, usize)> {
        let mut counts = BTreeMap::new();
        for s in &self.steps {
            let e = counts.entry(s.color).or_insert((0, 0));
            match s.dir {
                Direction::Up => e.0 += 1,
                Direction::Down => e.1 += 1,
            }
        }
        counts
    }

    /// `Σ_i (a_i − d_i)`, the rank change along the path in a ranked poset.
    pub fn net_ascent(&self) -> i64 {
        self.steps
            .iter()
            .map(|s| if s.dir == Direction::Up { 1 } else { -1 })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_poset;

    fn chain121() -> EdgeColoredPoset {
        edge_poset(&["a", "b", "c", "d"], &[("a", "b", 1), ("b", "c", 2), ("c", "d", 1)]).unwrap()
    }

    #[test]
    fn counts_on_ascending_chain() {
        let p = chain121();
        let path = Path::from_vertices(&p, &[0, 1, 2, 3]).unwrap();
        let counts = path.ascent_descent_counts();
        assert_eq!(counts[&Color(1)], (2, 0));
        assert_eq!(counts[&Color(2)], (1, 0));
        assert!(path.is_mountain() && path.is_ascending());
        assert!(Path::trivial(2).ascent_descent_counts().is_empty());
    }

    #[test]
    fn rejects_gaps() {
        let p = chain121();
        assert!(matches!(Path::from_vertices(&p, &[0, 2]), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn down_and_up() {
        let p = chain121();
        let path = Path::from_vertices(&p, &[2, 1, 2]).unwrap();
        assert!(!path.is_simple());
        assert_eq!(path.net_ascent(), 0);
        assert_eq!(path.ascent_descent_counts()[&Color(2)], (1, 1));
    }
}
