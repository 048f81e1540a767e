//! Scissors congruence style groups of a finite ring: the presented group on
//! five-term relations, its geometric counterpart in degree two of the complex of
//! unimodular vectors, and the refined Bloch groups cut out by `lambda_1`, `lambda_2`.

mod geom;
mod rpbar;
mod symsq;

pub use geom::{eta_map, refined_bloch, rp_geometric, symbol_tuple, Eta, EtaReport, RefinedBloch, RpGeom};
pub use rpbar::{
    check_lambda_bar, class_product, five_term_element, lambda_bar_maps, rp_bar_presentation, symbol_index,
    symbol_of, LambdaBar, LambdaBarCheck, RpBar,
};
pub use symsq::SymSq;
