//! `J`-components: connected pieces of the Hasse diagram after dropping
//! every edge whose color is outside `J`.

use super::sublattice::check_sublattice;
use crate::error::Result;
use crate::graph::{format_colors, ColorSet, EdgeColoredPoset};
use crate::lattice::{LatticeView, ModularLattice};
use crate::paths::{bfs_distances, diamond_violation};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct Component {
    /// Parent ids, ascending.
    pub vertices: Vec<usize>,
    /// Parent ids of the component's least and greatest elements.
    pub min: usize,
    pub max: usize,
    /// The component's own Hasse diagram (only `J`-colored edges).
    pub poset: EdgeColoredPoset,
}

#[derive(Clone, Debug)]
pub struct JComponentDecomposition {
    pub colors: ColorSet,
    /// Ordered by smallest member.
    pub components: Vec<Component>,
    /// `component_of[v]` indexes `components`.
    pub component_of: Vec<usize>,
    pub report: Report,
}

/// Splits `L` into `J`-components and verifies each one: a lattice, a
/// sublattice of `L` on `L`'s own covers, modular, diamond-colored, and
/// distances inside it equal to distances in `L`. With `distributive`
/// set, each component's distributivity is scanned as well.
pub fn decompose(l: &ModularLattice, colors: &ColorSet, distributive: bool) -> Result<JComponentDecomposition> {
    let p = l.poset();
    let j_only = p.filter_edges(|c| colors.contains(&c));
    let parts = j_only.components();
    let mut component_of = vec![0; p.len()];
    let mut report = Report::new(format!("components for colors {}", format_colors(colors)));
    let mut components = Vec::with_capacity(parts.len());
    let full_dist: Vec<Vec<Option<usize>>> = (0..p.len()).map(|s| bfs_distances(p, s)).collect();
    for (ci, vertices) in parts.into_iter().enumerate() {
        for &v in &vertices {
            component_of[v] = ci;
        }
        let poset = j_only.induced_subgraph(&vertices);
        let name = |v: usize| p.label(v).to_string();
        let view = match check_sublattice(&poset, l) {
            Ok(emb) => {
                report.check(emb.edge_colored, || format!("component {ci} uses non-parent edges"));
                emb.sub
            }
            Err(e) => {
                report.fail(format!("component {ci}: {e}"));
                continue;
            }
        };
        let (min, max) = (vertices[view.min()], vertices[view.max()]);
        if let Err(e) = view.check_modular() {
            report.fail(format!("component {ci}: {e}"));
        }
        if distributive {
            if let Err(e) = view.check_distributive() {
                report.fail(format!("component {ci}: {e}"));
            }
        }
        report.check(diamond_violation(&poset).is_none(), || {
            format!("component {ci} is not diamond-colored")
        });
        for (a, &x) in vertices.iter().enumerate() {
            let inner = bfs_distances(&poset, a);
            for (b, &y) in vertices.iter().enumerate() {
                report.check(inner[b] == full_dist[x][y], || {
                    format!("distance {} -> {} is shorter outside the component", name(x), name(y))
                });
            }
        }
        report.note(format!(
            "component {ci}: {} elements, min `{}`, max `{}`",
            vertices.len(),
            name(min),
            name(max)
        ));
        components.push(Component {
            vertices,
            min,
            max,
            poset,
        });
    }
    Ok(JComponentDecomposition {
        colors: colors.clone(),
        components,
        component_of,
        report,
    })
}

/// Modular-lattice decomposition.
pub fn j_components(l: &ModularLattice, colors: &ColorSet) -> Result<JComponentDecomposition> {
    decompose(l, colors, false)
}

/// Components of `J`-colored edges without any verification, as parent-id lists.
pub fn component_sets(l: &LatticeView, colors: &ColorSet) -> Vec<Vec<usize>> {
    l.poset().filter_edges(|c| colors.contains(&c)).components()
}
