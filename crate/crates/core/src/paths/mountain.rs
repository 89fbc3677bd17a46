//! Mountain-ization and valley-ization of paths in a modular lattice.

use super::path::{Direction, Path};
use crate::error::{Error, Result};
use crate::lattice::ModularLattice;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Mountain,
    Valley,
}

/// Rewrites a simple path into a simple mountain path with the same
/// endpoints and no more steps. For a shortest path the apex is `s ∨ t`.
pub fn mountainize(l: &ModularLattice, path: &Path) -> Result<Path> {
    reshape(l, path, Shape::Mountain)
}

/// Dual of [`mountainize`]: the result is a valley path, with nadir `s ∧ t`
/// when the input is shortest.
pub fn valleyize(l: &ModularLattice, path: &Path) -> Result<Path> {
    reshape(l, path, Shape::Valley)
}

fn reshape(l: &ModularLattice, path: &Path, shape: Shape) -> Result<Path> {
    let p = l.poset();
    path.validate(p)?;
    if !path.is_simple() {
        return Err(Error::InvalidPath("input path is not simple".into()));
    }
    // Mountain-ization removes valleys x_{j-1} <- x_j -> x_{j+1}; the dual
    // removes peaks.
    let (inward, outward) = match shape {
        Shape::Mountain => (Direction::Down, Direction::Up),
        Shape::Valley => (Direction::Up, Direction::Down),
    };
    let mut xs = path.vertices();
    loop {
        let current = Path::from_vertices(p, &xs)?;
        let steps = current.steps();
        // step j-1 goes x_{j-1} -> x_j, step j goes x_j -> x_{j+1}
        let Some(j) = (1..xs.len().saturating_sub(1)).find(|&j| steps[j - 1].dir == inward && steps[j].dir == outward)
        else {
            return Ok(current);
        };
        // The unique element covering (resp. covered by) both neighbours.
        let x = match shape {
            Shape::Mountain => l.join_id(xs[j - 1], xs[j + 1]),
            Shape::Valley => l.meet_id(xs[j - 1], xs[j + 1]),
        };
        if j >= 2 && xs[j - 2] == x {
            xs.drain(j - 1..=j);
        } else if j + 2 < xs.len() && xs[j + 2] == x {
            xs.drain(j..=j + 1);
        } else {
            xs[j] = x;
            // On a non-shortest path x can already lie elsewhere on the
            // path; cut the loop so the path stays simple.
            if let Some(i) = (0..xs.len()).find(|&i| i != j && xs[i] == x) {
                let (a, b) = (i.min(j), i.max(j));
                xs.drain(a + 1..=b);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_poset;

    fn b2() -> ModularLattice {
        ModularLattice::from_poset(
            edge_poset(
                &["r", "s", "t", "u"],
                &[("r", "s", 1), ("r", "t", 2), ("s", "u", 2), ("t", "u", 1)],
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn valley_becomes_mountain() {
        let l = b2();
        let valley = Path::from_vertices(l.poset(), &[1, 0, 2]).unwrap();
        let m = mountainize(&l, &valley).unwrap();
        assert_eq!(m.vertices(), vec![1, 3, 2]);
        assert!(m.is_mountain());
        assert_eq!(m.apex(), 3);
        let back = valleyize(&l, &m).unwrap();
        assert_eq!(back.vertices(), vec![1, 0, 2]);
    }

    #[test]
    fn mountains_are_fixed() {
        let l = b2();
        let up = Path::from_vertices(l.poset(), &[0, 1, 3]).unwrap();
        assert_eq!(mountainize(&l, &up).unwrap(), up);
    }

    #[test]
    fn rejects_non_simple_input() {
        let l = b2();
        let walk = Path::from_vertices(l.poset(), &[0, 1, 0]).unwrap();
        assert!(matches!(mountainize(&l, &walk), Err(Error::InvalidPath(_))));
    }
}
