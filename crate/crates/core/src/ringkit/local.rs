use serde::Serialize;

use super::ring::{Elem, FiniteRing};
use super::units::UnitData;

/// A local factor `A e` for a primitive idempotent `e`.
#[derive(Clone, Debug, Serialize)]
pub struct LocalFactor {
    /// Label of the primitive idempotent.
    pub idempotent: String,
    #[serde(skip)]
    pub idempotent_id: Elem,
    #[serde(skip)]
    pub elements: Vec<Elem>,
    pub order: usize,
    pub residue_field_size: usize,
    pub description: String,
}

impl LocalFactor {
    /// The projection `A -> A e`.
    pub fn project(&self, ring: &FiniteRing, x: Elem) -> Elem {
        ring.mul(x, self.idempotent_id)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalDecomposition {
    pub factors: Vec<LocalFactor>,
    #[serde(skip)]
    pub jacobson: Vec<Elem>,
    pub universal: bool,
}

impl LocalDecomposition {
    pub fn new(ring: &FiniteRing, units: &UnitData) -> Self {
        let one = ring.one();
        let jacobson: Vec<Elem> = ring
            .elements()
            .filter(|&x| ring.elements().all(|y| units.is_unit(ring.add(one, ring.mul(x, y)))))
            .collect();
        let mut in_j = vec![false; ring.order()];
        for &x in &jacobson {
            in_j[x] = true;
        }
        let idempotents: Vec<Elem> = ring
            .elements()
            .filter(|&e| e != ring.zero() && ring.mul(e, e) == e)
            .collect();
        let primitive: Vec<Elem> = idempotents
            .iter()
            .copied()
            .filter(|&e| idempotents.iter().all(|&f| f == e || ring.mul(e, f) != f))
            .collect();
        let mut factors: Vec<LocalFactor> = primitive
            .iter()
            .map(|&e| {
                let mut elements: Vec<Elem> = ring.elements().map(|x| ring.mul(x, e)).collect();
                elements.sort_unstable();
                elements.dedup();
                let radical = elements.iter().filter(|&&x| in_j[x]).count();
                let order = elements.len();
                let residue = order / radical;
                let mut additive_order = 1;
                let mut acc = e;
                while acc != ring.zero() {
                    acc = ring.add(acc, e);
                    additive_order += 1;
                }
                let description = if additive_order == order {
                    format!("Z/{order}")
                } else if residue == order {
                    format!("GF({order})")
                } else {
                    format!("local ring of order {order}")
                };
                LocalFactor {
                    idempotent: ring.label(e).to_string(),
                    idempotent_id: e,
                    elements,
                    order,
                    residue_field_size: residue,
                    description,
                }
            })
            .collect();
        factors.sort_by_key(|f| (f.residue_field_size, f.order, f.idempotent_id));
        let twos = factors.iter().filter(|f| f.residue_field_size == 2).count();
        let threes = factors.iter().filter(|f| f.residue_field_size == 3).count();
        let universal = twos < 2 && !(twos >= 1 && threes >= 1);
        LocalDecomposition {
            factors,
            jacobson,
            universal,
        }
    }

    pub fn residue_sizes(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.residue_field_size).collect()
    }

    pub fn is_local(&self) -> bool {
        self.factors.len() == 1
    }
}

pub fn local_decomposition(ring: &FiniteRing) -> LocalDecomposition {
    LocalDecomposition::new(ring, &UnitData::new(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringkit::{build_ring, parse_ring_spec};

    fn decomp(s: &str) -> LocalDecomposition {
        local_decomposition(&build_ring(&parse_ring_spec(s).unwrap()).unwrap())
    }

    #[test]
    fn z12() {
        let d = decomp("Z/12");
        let names: Vec<&str> = d.factors.iter().map(|f| f.description.as_str()).collect();
        assert_eq!(names, vec!["Z/4", "Z/3"]);
        assert_eq!(d.residue_sizes(), vec![2, 3]);
        assert!(!d.universal);
    }

    #[test]
    fn local_rings() {
        let d = decomp("GF(25)");
        assert_eq!(d.residue_sizes(), vec![25]);
        assert!(d.universal);
        let d = decomp("Z/8");
        assert_eq!(d.residue_sizes(), vec![2]);
        assert_eq!(d.jacobson, vec![0, 2, 4, 6]);
        assert!(d.universal);
        assert!(!decomp("Z/2 x Z/2").universal);
        assert!(decomp("GF(4) x GF(5)").universal);
        assert!(decomp("Z/3 x Z/3").universal);
    }

    #[test]
    fn factor_sizes_multiply() {
        for s in ["Z/12", "Z/2 x Z/2 x Z/3", "GF(4) x Z/9", "Z/30"] {
            let d = decomp(s);
            let total: usize = d.factors.iter().map(|f| f.order).product();
            assert_eq!(total, parse_ring_spec(s).unwrap().order().unwrap() as usize);
        }
    }
}
