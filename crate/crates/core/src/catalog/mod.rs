//! Named subalgebras of g2*: the two parabolic families, gl(2) normal forms,
//! conjugation formulas, auxiliary representations, and the Berger catalog.

pub mod adjoint;
pub mod entries;
pub mod family;
pub mod gl2;
pub mod invariants;

pub use entries::{all_entries, entry, entry_with, theorem_entries, CatalogEntry, Theorem};
pub use family::{h_type1, h_type2, TypeIElement, TypeIIElement};
