#![allow(dead_code)]

use e2homlab::ringkit::{build_ring, parse_ring_spec, FiniteRing, UnitData};

pub fn ring(spec: &str) -> FiniteRing {
    build_ring(&parse_ring_spec(spec).unwrap()).unwrap()
}

pub fn ring_units(spec: &str) -> (FiniteRing, UnitData) {
    let r = ring(spec);
    let u = UnitData::new(&r);
    (r, u)
}

pub fn elem(r: &FiniteRing, label: &str) -> usize {
    r.parse_elem(label).unwrap_or_else(|| panic!("no element {label}"))
}
