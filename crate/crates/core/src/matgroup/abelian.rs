use num_bigint::BigInt;

use super::table::{GElem, GroupTable};
use crate::error::{Error, Result};
use crate::ringkit::FiniteRing;
use crate::zlinalg::{AbGroup, Presentation};

/// Membership table of the subgroup generated by `gens`.
pub fn subgroup_closure(ring: &FiniteRing, g: &GroupTable, gens: &[GElem]) -> Vec<bool> {
    let mut member = vec![false; g.len()];
    member[g.identity() as usize] = true;
    let mut elems = vec![g.identity()];
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for &s in gens {
            let y = g.mul(ring, x, s);
            if !member[y as usize] {
                member[y as usize] = true;
                elems.push(y);
            }
        }
        i += 1;
    }
    member
}

/// Normal closure of `seeds` in `g`.
pub fn normal_closure(ring: &FiniteRing, g: &GroupTable, seeds: &[GElem]) -> Vec<bool> {
    let conj_by: Vec<(GElem, GElem)> = g.generator_elems().into_iter().map(|s| (s, g.inv(s))).collect();
    let mut gens: Vec<GElem> = Vec::new();
    let mut member = subgroup_closure(ring, g, &gens);
    let mut pending: Vec<GElem> = seeds.to_vec();
    loop {
        while let Some(c) = pending.pop() {
            if !member[c as usize] {
                gens.push(c);
                member = subgroup_closure(ring, g, &gens);
            }
        }
        for &d in &gens {
            for &(s, si) in &conj_by {
                let x = g.mul(ring, g.mul(ring, s, d), si);
                if !member[x as usize] {
                    pending.push(x);
                }
            }
        }
        if pending.is_empty() {
            return member;
        }
    }
}

/// `G^ab` with coordinates for every group element.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub group: AbGroup,
    pub commutator_order: usize,
    coset_of: Vec<u32>,
    coset_coords: Vec<Vec<BigInt>>,
}

impl Abelianization {
    pub fn coords(&self, g: GElem) -> &[BigInt] {
        &self.coset_coords[self.coset_of[g as usize] as usize]
    }

    pub fn in_commutator(&self, g: GElem) -> bool {
        self.coset_of[g as usize] == 0
    }

    pub fn order(&self) -> usize {
        self.coset_coords.len()
    }
}

/// Abelianization: commutator subgroup as the normal closure of generator
/// commutators, structure by counting elements killed by prime powers, and
/// coordinates from a presentation on the cosets. The two structure
/// computations must agree.
pub fn abelianization(ring: &FiniteRing, g: &GroupTable) -> Result<Abelianization> {
    let gens = g.generator_elems();
    let mut seeds = Vec::new();
    for (i, &s) in gens.iter().enumerate() {
        for &t in &gens[i + 1..] {
            seeds.push(g.commutator(ring, s, t));
        }
    }
    seeds.sort_unstable();
    seeds.dedup();
    let k_member = normal_closure(ring, g, &seeds);
    finish(ring, g, &k_member)
}

/// Same as [`abelianization`] but with the commutator subgroup generated by all commutators.
pub fn abelianization_all_pairs(ring: &FiniteRing, g: &GroupTable) -> Result<Abelianization> {
    let mut comms: Vec<GElem> = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            comms.push(g.commutator(ring, a, b));
        }
    }
    comms.sort_unstable();
    comms.dedup();
    let k_member = subgroup_closure(ring, g, &comms);
    finish(ring, g, &k_member)
}

fn finish(ring: &FiniteRing, g: &GroupTable, k_member: &[bool]) -> Result<Abelianization> {
    let k: Vec<GElem> = g.elements().filter(|&x| k_member[x as usize]).collect();
    let mut coset_of = vec![u32::MAX; g.len()];
    let mut reps: Vec<GElem> = Vec::new();
    for x in g.elements() {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &y in &k {
            coset_of[g.mul(ring, x, y) as usize] = id;
        }
    }
    let q = reps.len();
    let cmul = |a: usize, b: usize| -> usize { coset_of[g.mul(ring, reps[a], reps[b]) as usize] as usize };
    let killed_by = |m: u64| -> u64 {
        (0..q)
            .filter(|&c| coset_of[g.pow(ring, reps[c], m) as usize] == 0)
            .count() as u64
    };
    let counted = AbGroup::from_torsion_counts(q as u64, killed_by);

    let mut images: Vec<usize> = g.generator_elems().iter().map(|&s| coset_of[s as usize] as usize).collect();
    images.sort_unstable();
    images.dedup();
    let mut p = Presentation::new(q);
    p.push(vec![(0, 1)])?;
    for c in 0..q {
        for &t in &images {
            p.push(vec![(c as u32, 1), (t as u32, 1), (cmul(c, t) as u32, -1)])?;
        }
    }
    let quotient = p.reduce();
    if quotient.group() != &counted {
        return Err(Error::CheckFailed(format!(
            "abelianization structures disagree: counting gives {counted}, presentation gives {}",
            quotient.group()
        )));
    }
    let coset_coords = (0..q).map(|c| quotient.project_sparse(&vec![(c as u32, 1)])).collect();
    Ok(Abelianization {
        group: counted,
        commutator_order: k.len(),
        coset_of,
        coset_coords,
    })
}
