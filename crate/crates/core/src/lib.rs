pub mod barhom;
pub mod bloch;
pub mod check;
pub mod error;
pub mod invariants;
pub mod lab;
pub mod matgroup;
pub mod report;
pub mod ringkit;
pub mod unimod;
pub mod zlinalg;

pub use error::{Error, Result};
pub use lab::{Caps, Lab};
