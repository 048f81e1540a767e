use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::lab::Lab;
use crate::matgroup::Mat2;
use crate::ringkit::{a_lower_relations, local_decomposition, m_subgroup, AddQuotient};
use crate::zlinalg::AbGroup;

use super::d2::{target_coords, target_group};

/// `H_1(E2(A), Z)` against `A/M`.
#[derive(Clone, Debug, Serialize)]
pub struct H1Report {
    pub ring: String,
    pub universal: bool,
    pub a_mod_m: AbGroup,
    pub h1: AbGroup,
    pub isomorphic: bool,
    /// `x -> E12(x)` kills `M` and hits every class of `H_1`
    pub surjection: bool,
    /// `(G_A + A_{A^x}) / <(<b>, 3(b - 1))>`
    pub d2_cokernel: AbGroup,
    /// `x -> (<1>, x)` and `(c, x) -> x - 3 r_c + 3` are mutually inverse
    pub explicit_iso: bool,
}

impl H1Report {
    pub fn ok(&self) -> bool {
        self.surjection && self.explicit_iso && (!self.universal || self.isomorphic)
    }
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn h1_compare(lab: &Lab) -> Result<H1Report> {
    let r = &lab.ring;
    let u = &lab.units;
    let m = m_subgroup(r, u);
    let am = AddQuotient::new(r, &m);
    let ab = lab.e2_ab()?;

    let mut images = Vec::new();
    let mut kills_m = true;
    for x in r.elements() {
        let c = ab.coords(lab.e2_elem(&Mat2::e12(r, x))?).to_vec();
        if m.contains(x) && !ab.group.is_zero_element(&c) {
            kills_m = false;
        }
        images.push(c);
    }
    let onto = ab.group.quotient_by(&images).group().is_trivial();

    // the explicit isomorphism between A/M and the cokernel of d2 on I_A
    let tg = target_group(lab);
    let rels: Vec<Vec<BigInt>> = u
        .units
        .iter()
        .map(|&b| target_coords(lab, u.class_of(b), r.scale(3, r.sub(b, r.one()))))
        .collect();
    let q = tg.quotient_by(&rels);
    let qg = q.group();
    let phi = |x| q.project_dense(&target_coords(lab, 0, x));
    let psi_elem = |c: usize, x| {
        let rc = u.class_reps[c];
        r.add(r.sub(x, r.scale(3, rc)), r.from_int(3))
    };
    let psi = |c: usize, x| am.coords(psi_elem(c, x)).to_vec();
    let zero_q = |v: &[BigInt]| qg.is_zero_element(v);
    let zero_am = |v: &[BigInt]| am.group.is_zero_element(v);

    let mut ok = true;
    // phi is well defined on A/M
    ok &= m.elements().into_iter().all(|x| zero_q(&phi(x)));
    // psi is well defined: relations of A_{A^x}, choice of class member, and the relations of q
    ok &= a_lower_relations(r, u).elements().into_iter().all(|x| am.is_zero(x));
    for c in 0..u.class_count() {
        let rc = u.class_reps[c];
        for &v in u.class_members(c) {
            ok &= am.is_zero(r.scale(3, r.sub(v, rc)));
        }
        for d in 0..u.class_count() {
            let cd = u.class_mul(r, c, d);
            let lhs = psi(cd, r.zero());
            let rhs: Vec<BigInt> = psi(c, r.zero()).iter().zip(psi(d, r.zero())).map(|(a, b)| a + b).collect();
            ok &= zero_am(&sub(&lhs, &rhs));
        }
    }
    for &b in &u.units {
        ok &= am.is_zero(psi_elem(u.class_of(b), r.scale(3, r.sub(b, r.one()))));
    }
    // both composites are the identity
    for x in r.elements() {
        ok &= zero_am(&sub(&psi(0, x), am.coords(x)));
        for c in 0..u.class_count() {
            let back = phi(psi_elem(c, x));
            ok &= zero_q(&sub(&back, &q.project_dense(&target_coords(lab, c, x))));
        }
    }
    ok &= *qg == am.group;

    Ok(H1Report {
        ring: lab.label(),
        universal: local_decomposition(r).universal,
        isomorphic: am.group == ab.group,
        a_mod_m: am.group.clone(),
        h1: ab.group.clone(),
        surjection: kills_m && onto,
        d2_cokernel: qg.clone(),
        explicit_iso: ok,
    })
}
