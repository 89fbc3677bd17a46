mod components;
mod product;
mod sublattice;
mod subordinate;
mod thm11;

pub use components::{component_sets, decompose, j_components, Component, JComponentDecomposition};
pub use product::{prop10_product_closure, tuple_id, tuple_of};
pub use sublattice::{check_sublattice, closure, lemma9_check, SublatticeEmbedding};
pub use subordinate::{
    definition_search_subordinates, enumerate_subordinates, is_j_subordinate, subordinate_of,
    verify_subordinate_theorem, JSubordinate, SEARCH_LIMIT,
};
pub use thm11::{thm11_forward, thm11_reverse, weak_subposet, Thm11Forward, Thm11Reverse};
