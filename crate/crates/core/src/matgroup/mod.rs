//! Finite groups of 2x2 matrices over a finite ring: `E2(A)`, `SL2(A)`,
//! `B(A)`, `T(A)`, `N(A)`, `PE2(A)`, and their abelianizations.

mod abelian;
mod mat2;
mod subgroups;
mod table;

pub use abelian::{abelianization, abelianization_all_pairs, normal_closure, subgroup_closure, Abelianization};
pub use mat2::Mat2;
pub use subgroups::{stabilizer_of_infinity, standard_subgroups, verify_stabilizers, StandardSubgroups};
pub use table::{
    central_quotient, elementary_generators, elementary_group, generate_closure, sl2_and_e2, sl2_by_filter, GElem,
    GroupTable, DEFAULT_GROUP_CAP,
};
