mod intervals;
mod view;

pub use intervals::{ancestor_interval_boolean, descendant_interval_boolean, IntervalVerdict};
pub use view::{DistributiveLattice, LatticeView, ModularLattice};
