//! The complex of unimodular vectors in general position on which `E2(A)`
//! acts, its homology and its coinvariants.

mod complex;
mod orbits;
mod points;

pub use complex::{build_y_complex, Basis, ChainComplexY, DEFAULT_BASIS_CAP, MAX_DEGREE};
pub use orbits::{canonicalize_tuple, small_generators, y_coinvariants, Canonical, Coinvariants};
pub use points::{proj_points, ProjLine, NO_POINT};
