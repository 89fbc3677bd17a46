mod ideal;
mod irreducible;
mod verify;

pub use ideal::{
    antichain, build_j, build_m, build_with_cap, numeric_cmp, order_ideals, subset_label, IdealLattice, Mode,
    DEFAULT_SIZE_CAP,
};
pub use irreducible::{extract_j, extract_m, irreducibles, IrreduciblePoset, Provenance};
pub use verify::{
    cover_color_profile, is_birkhoff_representable, verify_corollary8, verify_fundamental, verify_fundamental_poset,
    ColorProfile,
};
