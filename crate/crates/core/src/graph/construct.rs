//! Dual, recoloring, disjoint sum and Cartesian product.

use super::color::{Recoloring, Tag};
use super::poset::Poset;
use crate::error::Result;

impl<V: Tag, E: Tag> Poset<V, E> {
    /// Reverses every cover and stars every label. Vertex and edge payloads
    /// are kept as they are.
    pub fn dual(&self) -> Self {
        let labels = self.labels().iter().map(|l| format!("{l}*")).collect();
        let edges: Vec<_> = self.edges().map(|e| (e.upper, e.lower, e.tag)).collect();
        Poset::from_parts_unchecked(labels, self.vertex_tags().to_vec(), edges)
    }

    /// Inverse of [`Poset::dual`] on labels: strips one trailing `*` where present.
    pub fn undual(&self) -> Self {
        let labels = self
            .labels()
            .iter()
            .map(|l| l.strip_suffix('*').unwrap_or(l).to_string())
            .collect();
        let edges: Vec<_> = self.edges().map(|e| (e.upper, e.lower, e.tag)).collect();
        Poset::from_parts_unchecked(labels, self.vertex_tags().to_vec(), edges)
    }

    /// Applies `sigma` to every color on vertices and edges.
    pub fn recolor(&self, sigma: &Recoloring) -> Result<Self> {
        let tags = self
            .vertex_tags()
            .iter()
            .map(|t| t.recolor(sigma))
            .collect::<Result<Vec<_>>>()?;
        let edges = self
            .edges()
            .map(|e| Ok((e.lower, e.upper, e.tag.recolor(sigma)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poset::from_parts_unchecked(self.labels().to_vec(), tags, edges))
    }

    /// `a ⊕ b`. Left labels get an `L.` prefix and right labels `R.`, so the
    /// vertex sets are always disjoint. Left ids come first.
    pub fn disjoint_sum(a: &Self, b: &Self) -> Self {
        let n = a.len();
        let labels = a
            .labels()
            .iter()
            .map(|l| format!("L.{l}"))
            .chain(b.labels().iter().map(|l| format!("R.{l}")))
            .collect();
        let tags = a.vertex_tags().iter().chain(b.vertex_tags()).copied().collect();
        let edges: Vec<_> = a
            .edges()
            .map(|e| (e.lower, e.upper, e.tag))
            .chain(b.edges().map(|e| (e.lower + n, e.upper + n, e.tag)))
            .collect();
        Poset::from_parts_unchecked(labels, tags, edges)
    }
}

impl<E: Tag> Poset<(), E> {
    /// `a × b`: vertex `(s,t)` has id `s * |b| + t`; `(s,t) → (s',t)` for every
    /// cover `s → s'` of `a` and `(s,t) → (s,t')` for every cover `t → t'` of `b`,
    /// with the factor's edge payload.
    pub fn cartesian_product(a: &Self, b: &Self) -> Self {
        let m = b.len();
        let mut labels = Vec::with_capacity(a.len() * m);
        for s in a.labels() {
            for t in b.labels() {
                labels.push(format!("({s},{t})"));
            }
        }
        let mut edges = Vec::new();
        for e in a.edges() {
            for t in 0..m {
                edges.push((e.lower * m + t, e.upper * m + t, e.tag));
            }
        }
        for s in 0..a.len() {
            for e in b.edges() {
                edges.push((s * m + e.lower, s * m + e.upper, e.tag));
            }
        }
        Poset::from_parts_unchecked(labels, vec![(); a.len() * m], edges)
    }

    /// Product of a list of factors; an empty list yields the one-element poset.
    pub fn product_of(factors: &[Self]) -> Self {
        let mut acc = Poset::singleton();
        for (i, f) in factors.iter().enumerate() {
            acc = if i == 0 {
                f.clone()
            } else {
                Poset::cartesian_product(&acc, f)
            };
        }
        acc
    }

    /// One vertex labelled `()`, the unit of `×` up to isomorphism.
    pub fn singleton() -> Self {
        Poset::from_parts_unchecked(vec!["()".to_string()], vec![()], Vec::new())
    }
}

impl<V: Tag, E: Tag> Poset<V, E> {
    pub fn empty() -> Self {
        Poset::from_parts_unchecked(Vec::new(), Vec::new(), Vec::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge_poset, Color, EdgeColoredPoset};

    #[test]
    fn dual_of_single_edge() {
        let p = edge_poset(&["a", "b"], &[("a", "b", 1)]).unwrap();
        let d = p.dual();
        assert_eq!(d.labels(), &["a*".to_string(), "b*".to_string()]);
        assert_eq!(d.edge_tag(1, 0), Some(Color(1)));
        assert_eq!(d.undual(), p);
    }

    #[test]
    fn product_of_two_edges_is_a_diamond() {
        let a = edge_poset(&["0", "1"], &[("0", "1", 1)]).unwrap();
        let b = edge_poset(&["0", "1"], &[("0", "1", 2)]).unwrap();
        let d = EdgeColoredPoset::cartesian_product(&a, &b);
        // ids: (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3
        let edges: Vec<_> = d.edges().map(|e| (e.lower, e.upper, e.tag.0)).collect();
        assert_eq!(edges, vec![(0, 1, 2), (0, 2, 1), (1, 3, 1), (2, 3, 2)]);
        assert_eq!(d.label(1), "(0,1)");
    }

    #[test]
    fn collapsing_recoloring() {
        let b2 = edge_poset(
            &["0", "a", "b", "1"],
            &[("0", "a", 1), ("0", "b", 2), ("a", "1", 2), ("b", "1", 1)],
        )
        .unwrap();
        let sigma = Recoloring::from_pairs([(1, 1), (2, 1)]);
        let r = b2.recolor(&sigma).unwrap();
        assert!(r.edges().all(|e| e.tag == Color(1)));
        let partial = Recoloring::from_pairs([(1, 1)]);
        assert_eq!(b2.recolor(&partial), Err(crate::Error::MissingColorMapping(Color(2))));
    }

    #[test]
    fn sum_with_empty() {
        let p = edge_poset(&["a", "b"], &[("a", "b", 1)]).unwrap();
        let s = EdgeColoredPoset::disjoint_sum(&p, &EdgeColoredPoset::empty());
        assert_eq!(s.len(), 2);
        assert_eq!(s.label(0), "L.a");
        assert_eq!(s.edge_count(), 1);
    }
}
