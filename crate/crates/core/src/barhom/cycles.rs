use super::chain::BarChain;
use crate::error::{Error, Result};
use crate::lab::Lab;
use crate::matgroup::{GElem, Mat2};
use crate::ringkit::Elem;

fn require_two_unit(lab: &Lab) -> Result<()> {
    if lab.two_is_unit() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("2 is not a unit in {}", lab.label())))
    }
}

fn require_unit(lab: &Lab, z: Elem) -> Result<()> {
    if lab.units.is_unit(z) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not a unit", lab.ring.label(z))))
    }
}

fn pair(lab: &Lab, a: &Mat2, b: &Mat2) -> Result<Vec<GElem>> {
    Ok(vec![lab.e2_elem(a)?, lab.e2_elem(b)?])
}

/// The eleven term chain `R_z`; needs `2` and `z` to be units.
pub fn r_chain(lab: &Lab, z: Elem) -> Result<BarChain> {
    require_two_unit(lab)?;
    require_unit(lab, z)?;
    let r = &lab.ring;
    let w = lab.w_mat();
    let wi = lab.mat_inv(&w);
    let hz = lab.h(z);
    let hzi = lab.mat_inv(&hz);
    let dz = lab.d(z);
    let dzi = lab.mat_inv(&dz);
    let two = r.from_int(2);
    let d2 = lab.d(two);
    let d2i = lab.mat_inv(&d2);
    let gzi = lab.mat_inv(&lab.g(z));
    let h_zinv = lab.h(lab.inv(z));
    let terms: [(i64, Mat2, Mat2); 11] = [
        (1, w, gzi),
        (-1, w, hzi),
        (-1, lab.mat_mul(&[hzi, dzi]), lab.mat_mul(&[w, hzi])),
        (1, h_zinv, wi),
        (-1, hzi, dzi),
        (1, lab.mat_mul(&[dz, hz]), dzi),
        (-1, lab.mat_mul(&[dz, hz]), hzi),
        (2, hzi, hzi),
        (1, lab.mat_mul(&[hzi, hzi]), lab.mat_mul(&[hzi, hzi])),
        (1, lab.mat_mul(&[d2, hzi, d2i]), d2),
        (-1, d2, hzi),
    ];
    let mut out = BarChain::zero(2);
    for (c, a, b) in terms {
        out.add_term(pair(lab, &a, &b)?, c);
    }
    Ok(out.normalized(lab.e2()?))
}

/// `F(a, b) = [D(a)|D(b)] + R_ab - R_a - R_b + R_1`.
pub fn f_cycle(lab: &Lab, a: Elem, b: Elem) -> Result<BarChain> {
    require_unit(lab, a)?;
    require_unit(lab, b)?;
    let mut out = BarChain::single(pair(lab, &lab.d(a), &lab.d(b))?);
    out.add_scaled(&r_chain(lab, lab.ring.mul(a, b))?, 1);
    out.add_scaled(&r_chain(lab, a)?, -1);
    out.add_scaled(&r_chain(lab, b)?, -1);
    out.add_scaled(&r_chain(lab, lab.ring.one())?, 1);
    Ok(out.normalized(lab.e2()?))
}

/// `G(x, y) = [E12(x)|E12(y)] - [E12(y)|E12(x)]`.
pub fn g_cycle(lab: &Lab, x: Elem, y: Elem) -> Result<BarChain> {
    let ex = Mat2::e12(&lab.ring, x);
    let ey = Mat2::e12(&lab.ring, y);
    let mut out = BarChain::single(pair(lab, &ex, &ey)?);
    out.add_term(pair(lab, &ey, &ex)?, -1);
    Ok(out.normalized(lab.e2()?))
}

/// `H(a, b) = [D(a)|D(b)] - [D(b)|D(a)]`.
pub fn h_cycle(lab: &Lab, a: Elem, b: Elem) -> Result<BarChain> {
    require_unit(lab, a)?;
    require_unit(lab, b)?;
    let mut out = BarChain::single(pair(lab, &lab.d(a), &lab.d(b))?);
    out.add_term(pair(lab, &lab.d(b), &lab.d(a))?, -1);
    Ok(out.normalized(lab.e2()?))
}

/// `(F(a, b), G(x, y), H(a, b))`; `F` needs `2` to be a unit.
pub fn standard_cycles(lab: &Lab, a: Elem, b: Elem, x: Elem, y: Elem) -> Result<(BarChain, BarChain, BarChain)> {
    Ok((f_cycle(lab, a, b)?, g_cycle(lab, x, y)?, h_cycle(lab, a, b)?))
}

/// Shuffle of `[c]` with a 2-chain: `[c|g|h] - [g|c|h] + [g|h|c]` for each term.
pub fn shuffle_product(lab: &Lab, c: GElem, z: &BarChain) -> Result<BarChain> {
    assert_eq!(z.k, 2, "shuffle with a 2-chain");
    let e2 = lab.e2()?;
    let r = &lab.ring;
    for s in e2.generator_elems() {
        if e2.mul(r, c, s) != e2.mul(r, s, c) {
            return Err(Error::Precondition("shuffle element is not central".into()));
        }
    }
    let mut out = BarChain::zero(3);
    for (t, coef) in z.terms() {
        let (g, h) = (t[0], t[1]);
        out.add_term(vec![c, g, h], coef.clone());
        out.add_term(vec![g, c, h], -coef.clone());
        out.add_term(vec![g, h, c], coef.clone());
    }
    Ok(out.normalized(lab.e2()?))
}
