//! Finite commutative rings from a small specification language, and the
//! unit-group data derived from them.

mod additive;
mod local;
mod ring;
mod spec;
mod units;

pub use additive::{
    a_lower, a_lower_relations, a_lower_relations_narrow, additive_generators, additive_words, m_subgroup,
    tilde_extension, AddQuotient, AddSubgroup,
};
pub use local::{local_decomposition, LocalDecomposition, LocalFactor};
pub use ring::{build_ring, find_isomorphism, least_irreducible, Elem, FiniteRing, DEFAULT_RING_CAP};
pub use spec::{parse_ring_spec, Atom, RingSpec};
pub use units::{unit_data, w_set, UnitData, WSet};
