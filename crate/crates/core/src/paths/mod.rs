mod diamond;
mod mountain;
mod path;
mod prop3;
mod rank;

pub use diamond::{
    balance_violation, check_diamond_colored, check_topographically_balanced, diamond_violation, diamonds, Diamond,
    UnbalancedVee, VeeKind,
};
pub use mountain::{mountainize, valleyize};
pub use path::{Direction, Path, Step};
pub use prop3::{ascending_paths, verify_prop3, DEFAULT_PATH_CAP};
pub use rank::{bfs_distances, compute_rank, distance, rank_via_path, shortest_path, RankFunction};

use crate::lattice::ModularLattice;

/// `2ρ(s∨t) − ρ(s) − ρ(t)`, the graph distance in a modular lattice.
pub fn distance_modular(l: &ModularLattice, s: usize, t: usize) -> crate::Result<usize> {
    let j = l.join(s, t)?;
    let rho = l.rank_fn();
    Ok(2 * rho.of(j) - rho.of(s) - rho.of(t))
}
