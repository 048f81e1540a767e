//! Low degree bar chains for `E2(A)` in coinvariants, tensor chains with
//! coefficients in the complex of unimodular vectors, and the explicit cycles
//! built from diagonal, unipotent and Weyl matrices.

mod chain;
mod connecting;
mod cycles;

pub use chain::{bar_boundary, verify_cycle, BarChain, TensorChain};
pub use connecting::{connecting_replay, ConnectingReport};
pub use cycles::{f_cycle, g_cycle, h_cycle, r_chain, shuffle_product, standard_cycles};
