//! Instance generators. Everything random is driven by a seeded ChaCha8
//! stream, so equal specs give equal structures.

use dclat_core::birkhoff::{antichain, build_j};
use dclat_core::graph::{Color, EdgeColoredPoset, Poset, VertexColoredPoset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dcp::Structure;
use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    /// `n + 1` elements in a single edge-colored chain.
    Chain {
        n: usize,
        color: u32,
    },
    Antichain {
        n: usize,
        color: u32,
    },
    /// `J_color` of a one-colored antichain.
    Boolean {
        n: usize,
        color: u32,
    },
    Random {
        n: usize,
        p: f64,
        seed: u64,
        palette: Vec<u32>,
    },
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            GeneratorSpec::Random { p, palette, n, .. } => {
                if !(0.0..=1.0).contains(p) {
                    return Err(CliError::InvalidSpec(format!("probability {p} is outside [0, 1]")));
                }
                if palette.is_empty() && *n > 0 {
                    return Err(CliError::InvalidSpec("empty color palette".into()));
                }
                Ok(())
            }
            GeneratorSpec::Boolean { n, .. } if *n > 20 => {
                Err(CliError::InvalidSpec(format!("boolean({n}) is too large")))
            }
            _ => Ok(()),
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Structure> {
    spec.validate()?;
    Ok(match spec {
        GeneratorSpec::Chain { n, color } => Structure::Edge(chain(*n, *color)),
        GeneratorSpec::Antichain { n, color } => Structure::Vertex(antichain(*n, Color(*color))),
        GeneratorSpec::Boolean { n, color } => Structure::Edge(boolean(*n, *color)?),
        GeneratorSpec::Random { n, p, seed, palette } => {
            Structure::Vertex(random_poset(&mut ChaCha8Rng::seed_from_u64(*seed), *n, *p, palette))
        }
    })
}

pub fn chain(n: usize, color: u32) -> EdgeColoredPoset {
    let labels = (0..=n).map(|i| format!("c{i}")).collect();
    let edges = (0..n).map(|i| (i, i + 1, Color(color))).collect();
    Poset::new(labels, vec![(); n + 1], edges).expect("a chain is a valid cover graph")
}

pub fn boolean(n: usize, color: u32) -> Result<EdgeColoredPoset> {
    Ok(build_j(&antichain(n, Color(color)))?.into_poset())
}

/// Uniform linear order, each compatible pair kept with probability `p`,
/// reduced, colors drawn uniformly from `palette`.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize, p: f64, palette: &[u32]) -> VertexColoredPoset {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                relations.push((order[i], order[j]));
            }
        }
    }
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    let tags = (0..n)
        .map(|_| Color(*palette.choose(rng).expect("palette is not empty")))
        .collect();
    Poset::from_relations(labels, tags, &relations).expect("relations follow a linear order")
}

/// Lattice of an intersection-closed family of subsets of `0..k` (with the
/// full set), ordered by inclusion. Every finite lattice arises this way;
/// covers get colors from `palette` at random.
pub fn random_lattice(rng: &mut ChaCha8Rng, k: usize, generators: usize, palette: &[u32]) -> EdgeColoredPoset {
    assert!(k < 32, "subsets are stored as u32 masks");
    let full = if k == 0 { 0 } else { u32::MAX >> (32 - k) };
    let mut family = vec![full];
    for _ in 0..generators {
        let mut pending = vec![rng.gen_range(0..=full)];
        while let Some(x) = pending.pop() {
            if !family.contains(&x) {
                pending.extend(family.iter().map(|&y| x & y));
                family.push(x);
            }
        }
    }
    family.sort_unstable_by_key(|&s| (s.count_ones(), s));
    let subset = |a: u32, b: u32| a & b == a;
    let mut edges = Vec::new();
    for (i, &x) in family.iter().enumerate() {
        for (j, &y) in family.iter().enumerate() {
            if x != y && subset(x, y) && !family.iter().any(|&z| z != x && z != y && subset(x, z) && subset(z, y)) {
                edges.push((i, j, Color(*palette.choose(rng).expect("palette is not empty"))));
            }
        }
    }
    let labels = family.iter().map(|s| format!("s{s}")).collect();
    Poset::new(labels, vec![(); family.len()], edges).expect("inclusion covers are reduced")
}

#[cfg(test)]
mod tests {
    use super::*;
    use dclat_core::lattice::LatticeView;

    #[test]
    fn sizes() {
        assert_eq!(chain(0, 1).len(), 1);
        assert_eq!(chain(4, 1).edge_count(), 4);
        assert_eq!(boolean(3, 1).unwrap().len(), 8);
        assert_eq!(boolean(0, 1).unwrap().len(), 1);
    }

    #[test]
    fn random_is_reproducible() {
        let spec = GeneratorSpec::Random {
            n: 6,
            p: 0.3,
            seed: 42,
            palette: vec![1, 2],
        };
        let (a, b) = (generate(&spec).unwrap(), generate(&spec).unwrap());
        assert_eq!(crate::dcp::emit(&a), crate::dcp::emit(&b));
    }

    #[test]
    fn bad_specs() {
        let spec = GeneratorSpec::Random {
            n: 3,
            p: 1.5,
            seed: 0,
            palette: vec![1],
        };
        assert!(matches!(generate(&spec), Err(CliError::InvalidSpec(_))));
        let spec = GeneratorSpec::Random {
            n: 3,
            p: 0.5,
            seed: 0,
            palette: vec![],
        };
        assert!(matches!(generate(&spec), Err(CliError::InvalidSpec(_))));
    }

    #[test]
    fn closure_families_are_lattices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let l = random_lattice(&mut rng, 4, 5, &[1, 2]);
            LatticeView::new(l).unwrap();
        }
    }
}
