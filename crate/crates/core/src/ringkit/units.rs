use num_bigint::BigInt;

use super::ring::{Elem, FiniteRing};
use crate::zlinalg::AbGroup;

const NONE: usize = usize::MAX;

/// Units, inverses, squares and square classes of a finite ring.
#[derive(Clone, Debug)]
pub struct UnitData {
    pub units: Vec<Elem>,
    inverse: Vec<usize>,
    /// `(A^x)^2`, sorted
    pub squares: Vec<Elem>,
    class_of: Vec<usize>,
    /// least element of each square class; class 0 is the class of 1
    pub class_reps: Vec<Elem>,
    class_members: Vec<Vec<Elem>>,
}

impl UnitData {
    pub fn new(ring: &FiniteRing) -> Self {
        let n = ring.order();
        let mut inverse = vec![NONE; n];
        for x in ring.elements() {
            if let Some(y) = ring.elements().find(|&y| ring.mul(x, y) == ring.one()) {
                inverse[x] = y;
            }
        }
        let units: Vec<Elem> = ring.elements().filter(|&x| inverse[x] != NONE).collect();
        let mut is_square = vec![false; n];
        for &u in &units {
            is_square[ring.mul(u, u)] = true;
        }
        let squares: Vec<Elem> = ring.elements().filter(|&x| is_square[x]).collect();
        let mut class_of = vec![NONE; n];
        let mut class_reps = Vec::new();
        let mut class_members = Vec::new();
        let mut assign = |start: Elem, class_of: &mut Vec<usize>| {
            let id = class_reps.len();
            let mut members: Vec<Elem> = squares.iter().map(|&s| ring.mul(start, s)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = id;
            }
            class_reps.push(members[0]);
            class_members.push(members);
        };
        assign(ring.one(), &mut class_of);
        for &u in &units {
            if class_of[u] == NONE {
                assign(u, &mut class_of);
            }
        }
        UnitData {
            units,
            inverse,
            squares,
            class_of,
            class_reps,
            class_members,
        }
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.inverse[x] != NONE
    }

    pub fn inv(&self, x: Elem) -> Option<Elem> {
        (self.inverse[x] != NONE).then_some(self.inverse[x])
    }

    /// Square class `<a>` of a unit, as an index into `class_reps`.
    pub fn class_of(&self, a: Elem) -> usize {
        let c = self.class_of[a];
        assert!(c != NONE, "square class of a non-unit");
        c
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn class_members(&self, c: usize) -> &[Elem] {
        &self.class_members[c]
    }

    pub fn class_mul(&self, ring: &FiniteRing, c: usize, d: usize) -> usize {
        self.class_of(ring.mul(self.class_reps[c], self.class_reps[d]))
    }

    /// `G_A` as an abstract group; it is always an elementary abelian 2-group.
    pub fn square_class_group(&self) -> AbGroup {
        let r = self.class_count().trailing_zeros() as usize;
        debug_assert_eq!(1usize << r, self.class_count());
        AbGroup::from_invariants(std::iter::repeat_n(BigInt::from(2), r))
    }

    /// `mu_n(A) = {a : a^n = 1}`.
    pub fn mu(&self, ring: &FiniteRing, n: u64) -> Vec<Elem> {
        self.units.iter().copied().filter(|&u| ring.pow(u, n) == ring.one()).collect()
    }

    /// Structure of the unit group, from counting elements killed by each prime power.
    pub fn unit_group(&self, ring: &FiniteRing) -> AbGroup {
        AbGroup::from_torsion_counts(self.units.len() as u64, |m| self.mu(ring, m).len() as u64)
    }
}

/// `W_A = {a : a(1 - a) is a unit}`.
#[derive(Clone, Debug)]
pub struct WSet {
    pub members: Vec<Elem>,
    member: Vec<bool>,
}

impl WSet {
    pub fn new(ring: &FiniteRing, units: &UnitData) -> Self {
        let member: Vec<bool> = ring
            .elements()
            .map(|a| units.is_unit(ring.mul(a, ring.sub(ring.one(), a))))
            .collect();
        let members = ring.elements().filter(|&a| member[a]).collect();
        WSet { members, member }
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.member[a]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, a: Elem) -> Option<usize> {
        self.members.binary_search(&a).ok()
    }
}

pub fn unit_data(ring: &FiniteRing) -> UnitData {
    UnitData::new(ring)
}

pub fn w_set(ring: &FiniteRing) -> WSet {
    WSet::new(ring, &UnitData::new(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringkit::{build_ring, parse_ring_spec};

    fn ring(s: &str) -> FiniteRing {
        build_ring(&parse_ring_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn z12_units() {
        let r = ring("Z/12");
        let u = unit_data(&r);
        assert_eq!(u.units, vec![1, 5, 7, 11]);
        assert_eq!(u.squares, vec![1]);
        assert_eq!(u.class_count(), 4);
        assert_eq!(u.class_reps, vec![1, 5, 7, 11]);
    }

    #[test]
    fn z8_roots_of_unity() {
        let r = ring("Z/8");
        let u = unit_data(&r);
        assert_eq!(u.mu(&r, 2), vec![1, 3, 5, 7]);
        assert_eq!(u.unit_group(&r).to_small(), vec![2, 2]);
    }

    #[test]
    fn w_sets() {
        assert_eq!(w_set(&ring("GF(5)")).members, vec![2, 3, 4]);
        assert_eq!(w_set(&ring("Z/9")).members, vec![2, 5, 8]);
        assert!(w_set(&ring("GF(2)")).is_empty());
    }

    #[test]
    fn w_members_are_units() {
        for s in ["GF(7)", "Z/25", "GF(4) x GF(5)", "F3[t]/t^2"] {
            let r = ring(s);
            let u = unit_data(&r);
            let w = WSet::new(&r, &u);
            for &a in &w.members {
                assert!(u.is_unit(a) && u.is_unit(r.sub(r.one(), a)));
            }
            assert!(!w.contains(r.zero()) && !w.contains(r.one()));
        }
    }
}
