use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// A color drawn from the index set of a structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub u32);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Color {
    fn from(c: u32) -> Self {
        Color(c)
    }
}

/// A finite set of colors, e.g. the `J` in a `J`-component.
pub type ColorSet = BTreeSet<Color>;

pub fn color_set<I: IntoIterator<Item = u32>>(colors: I) -> ColorSet {
    colors.into_iter().map(Color).collect()
}

/// `{1,3}`.
pub fn format_colors(set: &ColorSet) -> String {
    let parts: Vec<String> = set.iter().map(|c| c.0.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// A total map between color sets. Applying it to a structure that uses a
/// color outside the domain fails with [`Error::MissingColorMapping`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Recoloring {
    mapping: BTreeMap<Color, Color>,
}

impl Recoloring {
    pub fn new(mapping: BTreeMap<Color, Color>) -> Self {
        Recoloring { mapping }
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        Recoloring {
            mapping: pairs.into_iter().map(|(a, b)| (Color(a), Color(b))).collect(),
        }
    }

    pub fn identity_on(colors: &ColorSet) -> Self {
        Recoloring {
            mapping: colors.iter().map(|&c| (c, c)).collect(),
        }
    }

    pub fn apply(&self, c: Color) -> Result<Color> {
        self.mapping.get(&c).copied().ok_or(Error::MissingColorMapping(c))
    }

    pub fn domain(&self) -> impl Iterator<Item = Color> + '_ {
        self.mapping.keys().copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Color, Color)> + '_ {
        self.mapping.iter().map(|(&a, &b)| (a, b))
    }
}

/// Payload carried by a vertex or an edge: either a [`Color`] or nothing.
///
/// Vertex-colored posets are `Poset<Color, ()>` and edge-colored posets are
/// `Poset<(), Color>`, so the structural operations are written once.
pub trait Tag: Copy + Eq + Ord + std::hash::Hash + fmt::Debug + Send + Sync + 'static {
    fn color(self) -> Option<Color>;
    fn recolor(self, sigma: &Recoloring) -> Result<Self>;
}

impl Tag for Color {
    fn color(self) -> Option<Color> {
        Some(self)
    }

    fn recolor(self, sigma: &Recoloring) -> Result<Self> {
        sigma.apply(self)
    }
}

impl Tag for () {
    fn color(self) -> Option<Color> {
        None
    }

    fn recolor(self, _sigma: &Recoloring) -> Result<Self> {
        Ok(())
    }
}
