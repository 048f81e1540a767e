//! Grothendieck-Witt groups of a finite ring on the geometric and the presented
//! side, and the low differentials of the spectral sequence for `E2(A)` acting on
//! unimodular vectors.

mod barwitt;
mod d1;
mod d2;
mod gw;
mod h1;

pub use barwitt::{bar_witt_suite, d2_on_basis, i_squared, pontryagin, w_relations, BarWitt, ISquared, Pontryagin};
pub use d1::{d1_differentials, D1Report};
pub use d2::{d2_differential, replay_d2_proof, target_coords, target_group, D2Replay, D2Value};
#[allow(unused_imports)]
pub(crate) use gw::{boundary2, kernel_coinvariants};
pub use gw::{grothendieck_witt, x_simplex, GrothendieckWitt};
pub use h1::{h1_compare, H1Report};
