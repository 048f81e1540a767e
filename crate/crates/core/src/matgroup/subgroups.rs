use super::mat2::Mat2;
use super::table::{GElem, GroupTable};
use crate::error::Result;
use crate::ringkit::{FiniteRing, UnitData};

/// `B(A)` (upper triangular), `T(A)` (diagonal) and `N(A)` (upper unipotent).
#[derive(Clone, Debug)]
pub struct StandardSubgroups {
    pub b: GroupTable,
    pub t: GroupTable,
    pub n: GroupTable,
}

fn diag_gens(ring: &FiniteRing, units: &UnitData) -> Vec<(String, Mat2)> {
    units
        .units
        .iter()
        .filter(|&&a| a != ring.one())
        .map(|&a| (format!("D({})", ring.label(a)), Mat2::diag(ring, units, a)))
        .collect()
}

fn unipotent_gens(ring: &FiniteRing) -> Vec<(String, Mat2)> {
    ring.elements()
        .filter(|&x| x != ring.zero())
        .map(|x| (format!("E12({})", ring.label(x)), Mat2::e12(ring, x)))
        .collect()
}

pub fn standard_subgroups(ring: &FiniteRing, units: &UnitData, cap: usize) -> Result<StandardSubgroups> {
    let mut bg = diag_gens(ring, units);
    bg.extend(unipotent_gens(ring));
    Ok(StandardSubgroups {
        b: GroupTable::generate(ring, units, bg, cap)?,
        t: GroupTable::generate(ring, units, diag_gens(ring, units), cap)?,
        n: GroupTable::generate(ring, units, unipotent_gens(ring), cap)?,
    })
}

/// Elements of `g` fixing the projective point `<e1>`: lower-left entry zero.
pub fn stabilizer_of_infinity(ring: &FiniteRing, g: &GroupTable) -> Vec<GElem> {
    g.elements().filter(|&x| g.matrix(x).0[2] == ring.zero()).collect()
}

/// Checks that `B` and `T` are exactly the stabilizers of `<e1>` and of `(<e1>, <e2>)` inside `e2`.
pub fn verify_stabilizers(ring: &FiniteRing, e2: &GroupTable, s: &StandardSubgroups) -> bool {
    let stab = stabilizer_of_infinity(ring, e2);
    let b_ok = stab.len() == s.b.len()
        && stab.iter().all(|&x| s.b.contains(ring, &e2.matrix(x)))
        && s.b.elements().all(|x| e2.contains(ring, &s.b.matrix(x)));
    let stab2: Vec<GElem> = stab
        .into_iter()
        .filter(|&x| e2.matrix(x).0[1] == ring.zero())
        .collect();
    let t_ok = stab2.len() == s.t.len() && stab2.iter().all(|&x| s.t.contains(ring, &e2.matrix(x)));
    let n_ok = s.n.elements().all(|x| {
        let [a, _, c, d] = s.n.matrix(x).0;
        a == ring.one() && d == ring.one() && c == ring.zero()
    });
    b_ok && t_ok && n_ok
}
