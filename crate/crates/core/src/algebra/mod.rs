//! Groups, multiplicative Lie algebras and maps between them.

mod endo;
mod group;
mod maps;
mod mla;
mod star;

pub use endo::{aut_group, end_mla, AutGroup, EndMla, DEFAULT_END_CAP};
pub use group::{verify_group, FiniteGroup};
pub use maps::{
    enumerate_group_homs, enumerate_mla_homs, group_hom_report, mla_hom_report, GroupMap,
};
pub use mla::{verify_mla_parts, verify_mla_with_cap, MultLieAlgebra};
pub use star::star_completion;
