use num_bigint::BigInt;
use serde::Serialize;

use super::chain::{BarChain, TensorChain};
use super::cycles::{f_cycle, r_chain};
use crate::error::{Error, Result};
use crate::invariants::{pontryagin, GrothendieckWitt};
use crate::lab::Lab;
use crate::ringkit::Elem;

/// Replay of the connecting maps taking the cycle `F(a, b)` to `GW(A)`.
#[derive(Clone, Debug, Serialize)]
pub struct ConnectingReport {
    pub a: String,
    pub b: String,
    /// `U_z = -[D(z)] (x) inf + d((R_z - R_1) (x) inf)` for `z = ab, a, b`
    pub u_identities: [bool; 3],
    /// `d(F(a, b) (x) inf) = U_ab - U_a - U_b`
    pub f_identity: bool,
    pub class: Vec<BigInt>,
    pub pontryagin: Vec<BigInt>,
    pub agrees: bool,
}

impl ConnectingReport {
    pub fn ok(&self) -> bool {
        self.u_identities.iter().all(|&b| b) && self.f_identity && self.agrees
    }
}

/// `C_z = [g_z^-1] - [h_z^-1] - [g_1^-1] + [h_1^-1]`.
fn c_chain(lab: &Lab, z: Elem) -> Result<BarChain> {
    let one = lab.ring.one();
    let mut c = BarChain::zero(1);
    for (k, m) in [
        (1, lab.mat_inv(&lab.g(z))),
        (-1, lab.mat_inv(&lab.h(z))),
        (-1, lab.mat_inv(&lab.g(one))),
        (1, lab.mat_inv(&lab.h(one))),
    ] {
        c.add_term(vec![lab.e2_elem(&m)?], k);
    }
    Ok(c.normalized(lab.e2()?))
}

pub fn connecting_replay(lab: &Lab, gw: &GrothendieckWitt, a: Elem, b: Elem) -> Result<ConnectingReport> {
    if !lab.two_is_unit() {
        return Err(Error::Precondition(format!("2 is not a unit in {}", lab.label())));
    }
    let r = &lab.ring;
    let e2 = lab.e2()?;
    let y = lab.complex_to(2)?;
    let pts = &y.points;
    let inf = pts.infinity(r);
    let zero = pts.zero_point(r);
    let r1 = r_chain(lab, r.one())?;

    let mut u_identities = [false; 3];
    let mut u_sum = TensorChain::zero(1, 0);
    let mut lift_sum = TensorChain::zero(1, 1);
    let ab = r.mul(a, b);
    for (i, (z, sign)) in [(ab, 1), (a, -1), (b, -1)].into_iter().enumerate() {
        let c = c_chain(lab, z)?;
        let edge = TensorChain::from_bar(&c, &[inf, zero]);
        let u = edge.simplex_boundary();
        let mut rz = r_chain(lab, z)?;
        rz.add_scaled(&r1, -1);
        let mut stated = TensorChain::from_bar(&rz, &[inf]).bar_boundary(r, e2, pts);
        stated.add_term(vec![lab.e2_elem(&lab.d(z))?], vec![inf], -1);
        u_identities[i] = u.normalized(e2) == stated.normalized(e2);
        u_sum.add_scaled(&u, sign);
        lift_sum.add_scaled(&edge, sign);
    }
    let f = TensorChain::from_bar(&f_cycle(lab, a, b)?, &[inf]).bar_boundary(r, e2, pts);
    let f_identity = f == u_sum;

    // push the edge chains down through the bar differential and read off a 1-cycle of Y
    let down = lift_sum.bar_boundary(r, e2, pts);
    let mut z: Vec<(u32, i64)> = Vec::new();
    for (s, c) in down.coefficient_chain() {
        let idx = y.index(&s).ok_or_else(|| Error::CheckFailed("edge outside the complex".into()))?;
        let c: i64 = c.try_into().map_err(|_| Error::Overflow)?;
        z.push((idx as u32, c));
    }
    let z = crate::zlinalg::sparse::normalize(z)?;
    let class = gw.group.normalize(&gw.class_of_cycle(y, &z)?);
    let p = pontryagin(lab, gw, a, b)?.class;
    Ok(ConnectingReport {
        a: r.label(a).to_string(),
        b: r.label(b).to_string(),
        u_identities,
        f_identity,
        agrees: gw.group.is_zero_element(&class.iter().zip(&p).map(|(x, y)| x - y).collect::<Vec<_>>()),
        class,
        pontryagin: p,
    })
}
