use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use super::color::{Color, ColorSet, Tag};
use crate::error::{Error, Result};

/// A finite poset given by its cover relation (its Hasse diagram), with a
/// payload `V` on every vertex and `E` on every cover edge.
///
/// Vertices get dense ids in declaration order. The cover list is always
/// acyclic, loop-free, simple and transitively reduced; the checked
/// constructors reject anything else instead of repairing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset<V: Tag, E: Tag> {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    vertex_tags: Vec<V>,
    /// Upper covers of each vertex, sorted by id.
    up: Vec<Vec<(usize, E)>>,
    /// Lower covers of each vertex, sorted by id.
    down: Vec<Vec<(usize, E)>>,
}

/// The `P` side of the correspondence: colors live on vertices.
pub type VertexColoredPoset = Poset<Color, ()>;
/// The `L` side of the correspondence: colors live on cover edges.
pub type EdgeColoredPoset = Poset<(), Color>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge<E> {
    pub lower: usize,
    pub upper: usize,
    pub tag: E,
}

impl<V: Tag, E: Tag> Poset<V, E> {
    /// Validating constructor. `edges` are `(lower, upper, tag)` triples over
    /// indices into `labels`.
    pub fn new(labels: Vec<String>, vertex_tags: Vec<V>, edges: Vec<(usize, usize, E)>) -> Result<Self> {
        assert_eq!(labels.len(), vertex_tags.len(), "one tag per vertex");
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        let mut up: Vec<Vec<(usize, E)>> = vec![Vec::new(); n];
        let mut down: Vec<Vec<(usize, E)>> = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for &(a, b, tag) in &edges {
            if a >= n {
                return Err(Error::UnknownVertex(format!("#{a}")));
            }
            if b >= n {
                return Err(Error::UnknownVertex(format!("#{b}")));
            }
            if a == b {
                return Err(Error::SelfLoop(labels[a].clone()));
            }
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateEdge(labels[a].clone(), labels[b].clone()));
            }
            up[a].push((b, tag));
            down[b].push((a, tag));
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
        }
        let poset = Poset {
            labels,
            index,
            vertex_tags,
            up,
            down,
        };
        poset.validate_order()?;
        Ok(poset)
    }

    /// Constructor for callers that build covers which are reduced and
    /// acyclic by construction (ideal lattices, products, duals).
    pub(crate) fn from_parts_unchecked(
        labels: Vec<String>,
        vertex_tags: Vec<V>,
        edges: impl IntoIterator<Item = (usize, usize, E)>,
    ) -> Self {
        let n = labels.len();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut up: Vec<Vec<(usize, E)>> = vec![Vec::new(); n];
        let mut down: Vec<Vec<(usize, E)>> = vec![Vec::new(); n];
        for (a, b, tag) in edges {
            up[a].push((b, tag));
            down[b].push((a, tag));
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
        }
        let poset = Poset {
            labels,
            index,
            vertex_tags,
            up,
            down,
        };
        debug_assert!(poset.validate_order().is_ok());
        poset
    }

    fn validate_order(&self) -> Result<()> {
        let n = self.len();
        let mut indeg: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(w, _) in &self.up[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(Error::Cycle(self.labels[stuck].clone()));
        }
        let above = self.above_sets_from_order(&order);
        for x in 0..n {
            for &(y, _) in &self.up[x] {
                if let Some(&(z, _)) = self.up[x].iter().find(|&&(z, _)| z != y && above[z].contains(y)) {
                    return Err(Error::NonReducedEdge {
                        lower: self.labels[x].clone(),
                        upper: self.labels[y].clone(),
                        via: self.labels[z].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    fn above_sets_from_order(&self, topo: &[usize]) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &v in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(v);
            for &(w, _) in &self.up[v] {
                set.union_with(&above[w]);
            }
            above[v] = set;
        }
        above
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn id(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub(crate) fn check(&self, v: usize) -> Result<usize> {
        if v < self.len() {
            Ok(v)
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }

    pub fn vertex_tag(&self, v: usize) -> V {
        self.vertex_tags[v]
    }

    pub fn vertex_tags(&self) -> &[V] {
        &self.vertex_tags
    }

    pub fn up(&self, v: usize) -> &[(usize, E)] {
        &self.up[v]
    }

    pub fn down(&self, v: usize) -> &[(usize, E)] {
        &self.down[v]
    }

    pub fn edge_tag(&self, lower: usize, upper: usize) -> Option<E> {
        self.up[lower]
            .binary_search_by_key(&upper, |&(w, _)| w)
            .ok()
            .map(|i| self.up[lower][i].1)
    }

    pub fn is_cover(&self, lower: usize, upper: usize) -> bool {
        self.edge_tag(lower, upper).is_some()
    }

    /// Cover edges sorted by `(lower, upper)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge<E>> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(lower, ups)| ups.iter().map(move |&(upper, tag)| Edge { lower, upper, tag }))
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Deterministic linear extension: Kahn's algorithm, smallest id first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut indeg: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &(w, _) in &self.up[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        order
    }

    /// Reflexive up-sets `{y : x <= y}` for every vertex, as bitsets over ids.
    pub fn above_sets(&self) -> Vec<FixedBitSet> {
        self.above_sets_from_order(&self.linear_extension())
    }

    /// Reflexive down-sets `{y : y <= x}` for every vertex.
    pub fn below_sets(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for v in self.linear_extension() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(v);
            for &(w, _) in &self.down[v] {
                set.union_with(&below[w]);
            }
            below[v] = set;
        }
        below
    }

    /// `{y : x <= y}` by graph search from `x`.
    pub fn up_closure(&self, x: usize) -> FixedBitSet {
        self.closure(x, &self.up)
    }

    /// `{y : y <= x}` by graph search from `x`.
    pub fn down_closure(&self, x: usize) -> FixedBitSet {
        self.closure(x, &self.down)
    }

    fn closure(&self, x: usize, adj: &[Vec<(usize, E)>]) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut stack = vec![x];
        seen.insert(x);
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen.put(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Reflexive-transitive closure of the cover relation.
    pub fn leq(&self, x: usize, y: usize) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(x == y || self.up_closure(x).contains(y))
    }

    /// Elements covered by `x`.
    pub fn descendants(&self, x: usize) -> Result<Vec<usize>> {
        Ok(self.down[self.check(x)?].iter().map(|&(w, _)| w).collect())
    }

    /// Elements covering `x`.
    pub fn ancestors(&self, x: usize) -> Result<Vec<usize>> {
        Ok(self.up[self.check(x)?].iter().map(|&(w, _)| w).collect())
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.down[v].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.up[v].is_empty()).collect()
    }

    /// Undirected neighbours of `v` in the Hasse diagram.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[v].iter().chain(self.down[v].iter()).map(|&(w, _)| w)
    }

    /// Connected components of the undirected Hasse diagram restricted to
    /// edges accepted by `keep`, each sorted, ordered by smallest member.
    pub fn components_by<F: Fn(E) -> bool>(&self, keep: F) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &(w, tag) in self.up[v].iter().chain(self.down[v].iter()) {
                    if keep(tag) && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_by(|_| true)
    }

    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.components().len() == 1
    }

    /// The subgraph of the Hasse diagram induced on `vertices` (kept in the
    /// given order). Covers between kept vertices survive; this equals the
    /// Hasse diagram of the induced order when the subset is convex.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let tags = vertices.iter().map(|&v| self.vertex_tags[v]).collect();
        let edges = vertices.iter().flat_map(|&v| {
            let pos = &pos;
            self.up[v]
                .iter()
                .filter(move |&&(w, _)| pos[w] != usize::MAX)
                .map(move |&(w, tag)| (pos[v], pos[w], tag))
        });
        let edges: Vec<_> = edges.collect();
        Poset::from_parts_unchecked(labels, tags, edges)
    }

    /// Drops every cover whose payload fails `keep`. Removing covers from a
    /// reduced acyclic graph keeps it reduced and acyclic.
    pub fn filter_edges<F: Fn(E) -> bool>(&self, keep: F) -> Self {
        let edges: Vec<_> = self
            .edges()
            .filter(|e| keep(e.tag))
            .map(|e| (e.lower, e.upper, e.tag))
            .collect();
        Poset::from_parts_unchecked(self.labels.clone(), self.vertex_tags.clone(), edges)
    }

    /// Same structure with every label rewritten by `f`.
    pub fn relabel<F: FnMut(&str) -> String>(&self, mut f: F) -> Result<Self> {
        let labels: Vec<String> = self.labels.iter().map(|l| f(l)).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        Ok(Poset {
            labels,
            index,
            vertex_tags: self.vertex_tags.clone(),
            up: self.up.clone(),
            down: self.down.clone(),
        })
    }

    /// Every color occurring on a vertex or an edge.
    pub fn colors(&self) -> ColorSet {
        let mut set: ColorSet = self.vertex_tags.iter().filter_map(|t| t.color()).collect();
        set.extend(self.edges().filter_map(|e| e.tag.color()));
        set
    }
}

impl<V: Tag> Poset<V, ()> {
    /// Builds the Hasse diagram of the order generated by `relations`
    /// (pairs `(lower, upper)`), taking the transitive closure and then the
    /// transitive reduction. Fails on cycles or loops.
    pub fn from_relations(labels: Vec<String>, vertex_tags: Vec<V>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::new();
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::UnknownVertex(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::SelfLoop(labels[a].clone()));
            }
            if seen.insert((a, b)) {
                edges.push((a, b, ()));
            }
        }
        // Validate acyclicity on the raw relation graph, then reduce.
        let raw = Poset::from_parts_unchecked_raw(labels, vertex_tags, edges);
        let order = raw.acyclic_order()?;
        let above = raw.above_sets_from_order(&order);
        let mut kept = Vec::new();
        for x in 0..n {
            // strict up-set of x
            let mut strict = above[x].clone();
            strict.set(x, false);
            for y in strict.ones() {
                // y covers x iff no z with x < z < y
                let covered = strict.ones().any(|z| z != y && above[z].contains(y));
                if !covered {
                    kept.push((x, y, ()));
                }
            }
        }
        Ok(Poset::from_parts_unchecked(raw.labels, raw.vertex_tags, kept))
    }

    /// The subposet on `vertices` (in the given order) with the induced order.
    pub fn induced_order(&self, vertices: &[usize]) -> Self {
        let all = self.above_sets();
        let above: Vec<FixedBitSet> = vertices
            .iter()
            .map(|&x| {
                let mut set = FixedBitSet::with_capacity(vertices.len());
                for (j, &y) in vertices.iter().enumerate() {
                    set.set(j, all[x].contains(y));
                }
                set
            })
            .collect();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let tags = vertices.iter().map(|&v| self.vertex_tags[v]).collect();
        Poset::from_up_sets(labels, tags, &above)
    }

    /// Builds the Hasse diagram of an order given as reflexive up-sets.
    pub(crate) fn from_up_sets(labels: Vec<String>, vertex_tags: Vec<V>, above: &[FixedBitSet]) -> Self {
        let n = labels.len();
        let mut kept = Vec::new();
        for x in 0..n {
            let mut strict = above[x].clone();
            strict.set(x, false);
            for y in strict.ones() {
                if !strict.ones().any(|z| z != y && above[z].contains(y)) {
                    kept.push((x, y, ()));
                }
            }
        }
        Poset::from_parts_unchecked(labels, vertex_tags, kept)
    }
}

impl<V: Tag, E: Tag> Poset<V, E> {
    fn from_parts_unchecked_raw(labels: Vec<String>, vertex_tags: Vec<V>, edges: Vec<(usize, usize, E)>) -> Self {
        let n = labels.len();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut up: Vec<Vec<(usize, E)>> = vec![Vec::new(); n];
        let mut down: Vec<Vec<(usize, E)>> = vec![Vec::new(); n];
        for (a, b, tag) in edges {
            up[a].push((b, tag));
            down[b].push((a, tag));
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
        }
        Poset {
            labels,
            index,
            vertex_tags,
            up,
            down,
        }
    }

    fn acyclic_order(&self) -> Result<Vec<usize>> {
        let order = self.linear_extension();
        if order.len() < self.len() {
            let placed: BTreeSet<usize> = order.iter().copied().collect();
            let stuck = (0..self.len()).find(|v| !placed.contains(v)).unwrap();
            return Err(Error::Cycle(self.labels[stuck].clone()));
        }
        Ok(order)
    }
}

impl<E: Tag> Poset<Color, E> {
    pub fn vertex_color(&self, v: usize) -> Color {
        self.vertex_tags[v]
    }
}

impl<V: Tag> Poset<V, Color> {
    pub fn edge_color(&self, lower: usize, upper: usize) -> Option<Color> {
        self.edge_tag(lower, upper)
    }
}

/// Label-based builder, mainly for hand-written fixtures.
#[derive(Debug, Default)]
pub struct PosetBuilder<V, E> {
    labels: Vec<String>,
    tags: Vec<V>,
    edges: Vec<(String, String, E)>,
}

impl<V: Tag, E: Tag> PosetBuilder<V, E> {
    pub fn new() -> Self {
        PosetBuilder {
            labels: Vec::new(),
            tags: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn vertex(mut self, label: impl Into<String>, tag: V) -> Self {
        self.labels.push(label.into());
        self.tags.push(tag);
        self
    }

    pub fn edge(mut self, lower: impl Into<String>, upper: impl Into<String>, tag: E) -> Self {
        self.edges.push((lower.into(), upper.into(), tag));
        self
    }

    pub fn build(self) -> Result<Poset<V, E>> {
        let index: HashMap<&str, usize> = self.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (a, b, tag) in &self.edges {
            let a = *index.get(a.as_str()).ok_or_else(|| Error::UnknownVertex(a.clone()))?;
            let b = *index.get(b.as_str()).ok_or_else(|| Error::UnknownVertex(b.clone()))?;
            edges.push((a, b, *tag));
        }
        Poset::new(self.labels, self.tags, edges)
    }
}

/// Vertex-colored poset from `(label, color)` vertices and `(lower, upper)` covers.
pub fn vertex_poset(vertices: &[(&str, u32)], covers: &[(&str, &str)]) -> Result<VertexColoredPoset> {
    let mut b = PosetBuilder::new();
    for &(l, c) in vertices {
        b = b.vertex(l, Color(c));
    }
    for &(x, y) in covers {
        b = b.edge(x, y, ());
    }
    b.build()
}

/// Edge-colored poset from vertex labels and `(lower, upper, color)` covers.
pub fn edge_poset(vertices: &[&str], covers: &[(&str, &str, u32)]) -> Result<EdgeColoredPoset> {
    let mut b = PosetBuilder::new();
    for &l in vertices {
        b = b.vertex(l, ());
    }
    for &(x, y, c) in covers {
        b = b.edge(x, y, Color(c));
    }
    b.build()
}
