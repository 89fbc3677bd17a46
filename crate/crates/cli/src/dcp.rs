//! DCP: a line-oriented text format for colored posets.
//!
//! ```text
//! type vertex-poset          # or edge-lattice
//! vertex a color 1
//! vertex b color 2
//! edge a b                   # a is covered by b
//! ```
//!
//! In a `vertex-poset` every vertex carries a color and no edge does; in an
//! `edge-lattice` it is the other way round. Names are any run of
//! non-whitespace characters without `#`.

use std::collections::HashMap;
use std::fmt::Write;

use dclat_core::graph::{Color, EdgeColoredPoset, Poset, Tag, VertexColoredPoset};
use dclat_core::Error;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    VertexPoset,
    EdgeLattice,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::VertexPoset => "vertex-poset",
            Kind::EdgeLattice => "edge-lattice",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Vertex {
        name: String,
        color: Option<u32>,
        at: Pos,
    },
    Edge {
        lower: String,
        upper: String,
        color: Option<u32>,
        at: Pos,
        upper_at: Pos,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcpDocument {
    pub kind: Kind,
    pub decls: Vec<Decl>,
}

/// A parsed and validated structure.
#[derive(Clone, Debug)]
pub enum Structure {
    Vertex(VertexColoredPoset),
    Edge(EdgeColoredPoset),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Vertex(_) => Kind::VertexPoset,
            Structure::Edge(_) => Kind::EdgeLattice,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Structure::Vertex(p) => p.len(),
            Structure::Edge(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label(&self, v: usize) -> &str {
        match self {
            Structure::Vertex(p) => p.label(v),
            Structure::Edge(p) => p.label(v),
        }
    }

    pub fn id(&self, name: &str) -> Result<usize> {
        Ok(match self {
            Structure::Vertex(p) => p.id(name)?,
            Structure::Edge(p) => p.id(name)?,
        })
    }

    pub fn as_vertex(&self) -> Result<&VertexColoredPoset> {
        match self {
            Structure::Vertex(p) => Ok(p),
            Structure::Edge(_) => Err(CliError::Usage("expected a vertex-poset".into())),
        }
    }

    pub fn as_edge(&self) -> Result<&EdgeColoredPoset> {
        match self {
            Structure::Edge(p) => Ok(p),
            Structure::Vertex(_) => Err(CliError::Usage("expected an edge-lattice".into())),
        }
    }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Whitespace-separated tokens with 1-based columns, stopping at `#`.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in code.char_indices().chain(std::iter::once((code.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((code[..s].chars().count() + 1, &code[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn color_suffix(rest: &[(usize, &str)], line: usize) -> Result<Option<u32>> {
    match rest {
        [] => Ok(None),
        [(c, "color")] => Err(syntax(line, *c, "`color` needs a value")),
        [(_, "color"), (c, v)] => v
            .parse::<u32>()
            .map(Some)
            .map_err(|_| syntax(line, *c, format!("`{v}` is not a non-negative integer"))),
        [(_, "color"), _, (c, extra), ..] | [(c, extra), ..] => Err(syntax(line, *c, format!("unexpected `{extra}`"))),
    }
}

/// Syntax only: statements and their positions.
pub fn parse_document(text: &str) -> Result<DcpDocument> {
    let mut kind = None;
    let mut decls = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = tokens(raw);
        let Some(&(col, keyword)) = toks.first() else { continue };
        match keyword {
            "type" => {
                if kind.is_some() {
                    return Err(syntax(line, col, "`type` given twice"));
                }
                kind = Some(match toks.get(1) {
                    Some((_, "vertex-poset")) => Kind::VertexPoset,
                    Some((_, "edge-lattice")) => Kind::EdgeLattice,
                    Some((c, other)) => return Err(syntax(line, *c, format!("unknown type `{other}`"))),
                    None => return Err(syntax(line, col, "`type` needs vertex-poset or edge-lattice")),
                });
                if let Some((c, extra)) = toks.get(2) {
                    return Err(syntax(line, *c, format!("unexpected `{extra}`")));
                }
            }
            _ if kind.is_none() => return Err(syntax(line, col, "the first statement must be `type`")),
            "vertex" => {
                let Some(&(ncol, name)) = toks.get(1) else {
                    return Err(syntax(line, col, "`vertex` needs a name"));
                };
                let color = color_suffix(&toks[2..], line)?;
                decls.push(Decl::Vertex {
                    name: name.into(),
                    color,
                    at: Pos { line, col: ncol },
                });
            }
            "edge" => {
                let (Some(&(lcol, lower)), Some(&(ucol, upper))) = (toks.get(1), toks.get(2)) else {
                    return Err(syntax(line, col, "`edge` needs two names"));
                };
                let color = color_suffix(&toks[3..], line)?;
                decls.push(Decl::Edge {
                    lower: lower.into(),
                    upper: upper.into(),
                    color,
                    at: Pos { line, col: lcol },
                    upper_at: Pos { line, col: ucol },
                });
            }
            other => return Err(syntax(line, col, format!("unknown statement `{other}`"))),
        }
    }
    let kind = kind.ok_or_else(|| syntax(1, 1, "missing `type` statement"))?;
    Ok(DcpDocument { kind, decls })
}

fn invalid(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Validation { line, msg: msg.into() }
}

impl DcpDocument {
    /// Semantic checks and construction.
    pub fn build(&self) -> Result<Structure> {
        let mut names = Vec::new();
        let mut colors = Vec::new();
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut edge_lines = Vec::new();
        let vertex_kind = self.kind == Kind::VertexPoset;
        for d in &self.decls {
            match d {
                Decl::Vertex { name, color, at } => {
                    if index.insert(name, names.len()).is_some() {
                        return Err(invalid(at.line, format!("vertex `{name}` declared twice")));
                    }
                    match (vertex_kind, color) {
                        (true, None) => return Err(invalid(at.line, format!("vertex `{name}` has no color"))),
                        (false, Some(_)) => return Err(invalid(at.line, "vertices of an edge-lattice carry no color")),
                        _ => {}
                    }
                    names.push(name.clone());
                    colors.push(Color(color.unwrap_or(0)));
                }
                Decl::Edge {
                    lower,
                    upper,
                    color,
                    at,
                    upper_at,
                } => {
                    let lo = *index
                        .get(lower.as_str())
                        .ok_or_else(|| invalid(at.line, format!("col {}: undeclared vertex `{lower}`", at.col)))?;
                    let up = *index.get(upper.as_str()).ok_or_else(|| {
                        invalid(at.line, format!("col {}: undeclared vertex `{upper}`", upper_at.col))
                    })?;
                    match (vertex_kind, color) {
                        (true, Some(_)) => return Err(invalid(at.line, "edges of a vertex-poset carry no color")),
                        (false, None) => {
                            return Err(invalid(at.line, format!("edge `{lower}` -> `{upper}` has no color")))
                        }
                        _ => {}
                    }
                    edges.push((lo, up, Color(color.unwrap_or(0))));
                    edge_lines.push(at.line);
                }
            }
        }
        let locate = |e: Error| -> CliError {
            let pair = match &e {
                Error::SelfLoop(a) => Some((a.clone(), a.clone())),
                Error::DuplicateEdge(a, b) => Some((a.clone(), b.clone())),
                Error::NonReducedEdge { lower, upper, .. } => Some((lower.clone(), upper.clone())),
                _ => None,
            };
            let line = pair
                .and_then(|(a, b)| {
                    let (a, b) = (index[a.as_str()], index[b.as_str()]);
                    // The last declaration of a duplicate is the offending one.
                    edges
                        .iter()
                        .rposition(|&(x, y, _)| x == a && y == b)
                        .map(|k| edge_lines[k])
                })
                .unwrap_or(0);
            invalid(line, e.to_string())
        };
        let n = names.len();
        Ok(if vertex_kind {
            let e = edges.iter().map(|&(a, b, _)| (a, b, ())).collect();
            Structure::Vertex(Poset::new(names, colors, e).map_err(locate)?)
        } else {
            Structure::Edge(Poset::new(names, vec![(); n], edges.clone()).map_err(locate)?)
        })
    }
}

pub fn parse(text: &str) -> Result<Structure> {
    parse_document(text)?.build()
}

fn emit_poset<V: Tag, E: Tag>(p: &Poset<V, E>, kind: Kind, vcolor: bool) -> String {
    let mut out = format!("type {}\n", kind.keyword());
    for v in 0..p.len() {
        match p.vertex_tag(v).color() {
            Some(c) if vcolor => writeln!(out, "vertex {} color {}", p.label(v), c.0),
            _ => writeln!(out, "vertex {}", p.label(v)),
        }
        .unwrap();
    }
    let mut edges: Vec<_> = p.edges().map(|e| (e.lower, e.upper, e.tag.color())).collect();
    edges.sort_unstable();
    for (a, b, c) in edges {
        match c {
            Some(c) => writeln!(out, "edge {} {} color {}", p.label(a), p.label(b), c.0),
            None => writeln!(out, "edge {} {}", p.label(a), p.label(b)),
        }
        .unwrap();
    }
    out
}

/// Canonical text: vertices in id order, edges sorted by (lower, upper, color).
pub fn emit(s: &Structure) -> String {
    match s {
        Structure::Vertex(p) => emit_poset(p, Kind::VertexPoset, true),
        Structure::Edge(p) => emit_poset(p, Kind::EdgeLattice, false),
    }
}
