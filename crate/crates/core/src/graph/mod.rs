mod color;
mod construct;
mod iso;
mod poset;

pub use color::{color_set, format_colors, Color, ColorSet, Recoloring, Tag};
pub use iso::{is_isomorphism, isomorphism};
pub use poset::{edge_poset, vertex_poset, Edge, EdgeColoredPoset, Poset, PosetBuilder, VertexColoredPoset};
