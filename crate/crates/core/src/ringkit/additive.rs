use num_bigint::BigInt;

use super::ring::{Elem, FiniteRing};
use super::units::UnitData;
use crate::zlinalg::{AbGroup, Presentation};

/// Greedy additive generating set: scan elements in order, keep those outside the current span.
pub fn additive_generators(ring: &FiniteRing) -> Vec<Elem> {
    let mut span = vec![false; ring.order()];
    span[ring.zero()] = true;
    let mut members = vec![ring.zero()];
    let mut gens = Vec::new();
    for x in ring.elements() {
        if span[x] {
            continue;
        }
        gens.push(x);
        let mut next = members.clone();
        for &m in &members {
            let mut y = ring.add(m, x);
            while !span[y] {
                span[y] = true;
                next.push(y);
                y = ring.add(y, x);
            }
        }
        members = next;
    }
    gens
}

/// For each element, nonnegative coefficients expressing it in `gens`.
pub fn additive_words(ring: &FiniteRing, gens: &[Elem]) -> Vec<Vec<usize>> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; ring.order()];
    words[ring.zero()] = Some(vec![0; gens.len()]);
    let mut reached = vec![ring.zero()];
    for (i, &g) in gens.iter().enumerate() {
        let mut next = reached.clone();
        for &m in &reached {
            let base = words[m].clone().expect("reached");
            let mut y = ring.add(m, g);
            let mut k = 1;
            while words[y].is_none() {
                let mut w = base.clone();
                w[i] = k;
                words[y] = Some(w);
                next.push(y);
                y = ring.add(y, g);
                k += 1;
            }
        }
        reached = next;
    }
    words.into_iter().map(|w| w.expect("generators span A")).collect()
}

/// Additive subgroup of a ring, as a membership table plus the generators it was built from.
#[derive(Clone, Debug)]
pub struct AddSubgroup {
    member: Vec<bool>,
    pub gens: Vec<Elem>,
    size: usize,
}

impl AddSubgroup {
    pub fn generated_by(ring: &FiniteRing, gens: impl IntoIterator<Item = Elem>) -> Self {
        let mut gens: Vec<Elem> = gens.into_iter().collect();
        gens.sort_unstable();
        gens.dedup();
        let mut member = vec![false; ring.order()];
        member[ring.zero()] = true;
        let mut elems = vec![ring.zero()];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in &gens {
                let y = ring.add(x, g);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        AddSubgroup {
            size: elems.len(),
            member,
            gens,
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.member[x]
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset_of(&self, other: &AddSubgroup) -> bool {
        self.member.iter().zip(&other.member).all(|(&a, &b)| !a || b)
    }

    pub fn elements(&self) -> Vec<Elem> {
        (0..self.member.len()).filter(|&x| self.member[x]).collect()
    }
}

/// `(A, +)` modulo an additive subgroup, with canonical coordinates of every element.
#[derive(Clone, Debug)]
pub struct AddQuotient {
    pub group: AbGroup,
    coords: Vec<Vec<BigInt>>,
}

impl AddQuotient {
    pub fn new(ring: &FiniteRing, sub: &AddSubgroup) -> Self {
        let n = ring.order();
        let gens = additive_generators(ring);
        let mut p = Presentation::new(n);
        p.push(vec![(ring.zero() as u32, 1)]).expect("small");
        for x in ring.elements() {
            for &s in &gens {
                p.push(vec![(x as u32, 1), (s as u32, 1), (ring.add(x, s) as u32, -1)])
                    .expect("small");
            }
        }
        for &m in &sub.gens {
            p.push(vec![(m as u32, 1)]).expect("small");
        }
        let q = p.reduce();
        let coords = ring
            .elements()
            .map(|x| q.project_sparse(&vec![(x as u32, 1)]))
            .collect();
        AddQuotient {
            group: q.group().clone(),
            coords,
        }
    }

    pub fn coords(&self, x: Elem) -> &[BigInt] {
        &self.coords[x]
    }

    pub fn is_zero(&self, x: Elem) -> bool {
        self.group.is_zero_element(&self.coords[x])
    }
}

/// `M`: generated by `x(a^2 - 1)` and `3(b + 1)(c + 1)`, `x` in A and `a, b, c` units.
pub fn m_subgroup(ring: &FiniteRing, units: &UnitData) -> AddSubgroup {
    let one = ring.one();
    let mut gens = Vec::new();
    for &a in &units.units {
        let t = ring.sub(ring.mul(a, a), one);
        gens.extend(ring.elements().map(|x| ring.mul(x, t)));
    }
    for &b in &units.units {
        for &c in &units.units {
            gens.push(ring.scale(3, ring.mul(ring.add(b, one), ring.add(c, one))));
        }
    }
    AddSubgroup::generated_by(ring, gens)
}

/// Relation subgroup of `A_{A^x}`: generated by all `(a^2 - 1) x`.
pub fn a_lower_relations(ring: &FiniteRing, units: &UnitData) -> AddSubgroup {
    let one = ring.one();
    let mut gens = Vec::new();
    for &a in &units.units {
        let t = ring.sub(ring.mul(a, a), one);
        gens.extend(ring.elements().map(|x| ring.mul(x, t)));
    }
    AddSubgroup::generated_by(ring, gens)
}

/// The narrower reading: the additive span of the elements `a^2 - 1` alone.
pub fn a_lower_relations_narrow(ring: &FiniteRing, units: &UnitData) -> AddSubgroup {
    let one = ring.one();
    AddSubgroup::generated_by(
        ring,
        units.units.iter().map(|&a| ring.sub(ring.mul(a, a), one)),
    )
}

pub fn a_lower(ring: &FiniteRing, units: &UnitData) -> AddQuotient {
    AddQuotient::new(ring, &a_lower_relations(ring, units))
}

/// `Z/gcd(n^2, 2n)`.
pub fn tilde_extension(n: u64) -> AbGroup {
    assert!(n >= 1);
    let (a, b) = (n * n, 2 * n);
    let g = num_integer::gcd(a, b);
    AbGroup::cyclic(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringkit::{build_ring, parse_ring_spec, unit_data};

    fn ring(s: &str) -> FiniteRing {
        build_ring(&parse_ring_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn words_rebuild_elements() {
        for s in ["Z/12", "GF(9)", "Z/2 x Z/4", "F3[t]/t^2"] {
            let r = ring(s);
            let g = additive_generators(&r);
            let w = additive_words(&r, &g);
            for x in r.elements() {
                let y = w[x]
                    .iter()
                    .zip(&g)
                    .fold(r.zero(), |acc, (&k, &s)| r.add(acc, r.scale(k as i64, s)));
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn m_examples() {
        let r = ring("Z/4");
        let m = m_subgroup(&r, &unit_data(&r));
        assert_eq!(m.len(), 1);
        assert_eq!(AddQuotient::new(&r, &m).group.to_small(), vec![4]);
        let r = ring("GF(4)");
        assert_eq!(m_subgroup(&r, &unit_data(&r)).len(), 4);
        let r = ring("GF(3)");
        let m = m_subgroup(&r, &unit_data(&r));
        assert_eq!(AddQuotient::new(&r, &m).group.to_small(), vec![3]);
    }

    #[test]
    fn a_lower_examples() {
        let r = ring("GF(5)");
        assert!(a_lower(&r, &unit_data(&r)).group.is_trivial());
        let r = ring("Z/8");
        assert_eq!(a_lower(&r, &unit_data(&r)).group.to_small(), vec![8]);
        let r = ring("GF(2)");
        assert_eq!(a_lower(&r, &unit_data(&r)).group.to_small(), vec![2]);
    }

    #[test]
    fn tilde() {
        assert_eq!(tilde_extension(6).to_small(), vec![12]);
        assert_eq!(tilde_extension(5).to_small(), vec![5]);
        assert!(tilde_extension(1).is_trivial());
    }
}
