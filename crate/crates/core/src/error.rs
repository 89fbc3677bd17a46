use thiserror::Error;

use crate::graph::Color;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("edge `{0}` -> `{1}` declared twice")]
    DuplicateEdge(String, String),
    #[error("cover relation has a cycle through `{0}`")]
    Cycle(String),
    #[error("edge `{lower}` -> `{upper}` is implied by the chain through `{via}`")]
    NonReducedEdge { lower: String, upper: String, via: String },
    #[error("recoloring is undefined on color {0}")]
    MissingColorMapping(Color),

    #[error("poset is not connected")]
    NotConnected,
    #[error("poset is not ranked: edge `{lower}` -> `{upper}` conflicts with the level assignment")]
    NotRanked { lower: String, upper: String },
    #[error("`{0}` and `{1}` lie in different components")]
    NotConnectedPair(String, String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("path enumeration exceeded the cap of {0} paths")]
    EnumerationCapExceeded(usize),

    #[error("not a lattice: `{a}` and `{b}` have no unique {bound}")]
    NotALattice { a: String, b: String, bound: &'static str },
    #[error("not modular: rank equation fails for `{s}` and `{t}`")]
    NotModular { s: String, t: String },
    #[error("not distributive: identity fails for (`{r}`, `{s}`, `{t}`)")]
    NotDistributive { r: String, s: String, t: String },
    #[error("not diamond-colored: diamond `{bottom}` < `{left}`, `{right}` < `{top}` has mismatched parallel edges")]
    NotDiamondColored {
        bottom: String,
        left: String,
        right: String,
        top: String,
    },
    #[error("`{0}` is not below `{1}`")]
    IncomparableEndpoints(String, String),
    #[error("invalid descendant/ancestor set: {0}")]
    InvalidDescendantSet(String),

    #[error("lattice would exceed the cap of {0} elements")]
    SizeCapExceeded(usize),

    #[error("not a sublattice: {0}")]
    NotASublattice(String),
    #[error("not a weak subposet: {0}")]
    NotWeakSubposet(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}
