use num_bigint::BigInt;
use serde::Serialize;

use crate::barhom::{BarChain, TensorChain};
use crate::error::{Error, Result};
use crate::lab::Lab;
use crate::matgroup::Mat2;
use crate::ringkit::Elem;
use crate::zlinalg::AbGroup;

/// An element `(<u>, x)` of `G_A + A_{A^x}`, with `x` a representative in `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct D2Value {
    pub class: usize,
    pub x: Elem,
}

impl D2Value {
    /// Replaces `x` by the least ring element with the same class in `A_{A^x}`.
    pub fn new(lab: &Lab, class: usize, x: Elem) -> Self {
        let q = lab.a_lower();
        let x = lab.ring.elements().find(|&y| q.coords(y) == q.coords(x)).unwrap_or(x);
        D2Value { class, x }
    }

    pub fn coords(&self, lab: &Lab) -> Vec<BigInt> {
        target_coords(lab, self.class, self.x)
    }

    pub fn label(&self, lab: &Lab) -> String {
        format!(
            "(<{}>, {})",
            lab.ring.label(lab.units.class_reps[self.class]),
            lab.ring.label(self.x)
        )
    }
}

/// `G_A + A_{A^x}` as an abstract group.
pub fn target_group(lab: &Lab) -> AbGroup {
    lab.class_plus_lower().group().clone()
}

pub fn target_coords(lab: &Lab, class: usize, x: Elem) -> Vec<BigInt> {
    let mut v = lab.classes().coords(class).to_vec();
    v.extend_from_slice(lab.a_lower().coords(x));
    lab.class_plus_lower().project_dense(&v)
}

fn same(lab: &Lab, a: &[BigInt], b: &[BigInt]) -> bool {
    let g = target_group(lab);
    let d: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    g.is_zero_element(&d)
}

/// Closed form `3(<a>, 1 - a)`; the first slot is written multiplicatively, so it is `<a>^3 = <a>`.
pub fn d2_differential(lab: &Lab, a: Elem) -> Result<D2Value> {
    if !lab.units.is_unit(a) {
        return Err(Error::Precondition(format!("{} is not a unit", lab.ring.label(a))));
    }
    let r = &lab.ring;
    Ok(D2Value::new(lab, lab.units.class_of(r.pow(a, 3)), r.scale(3, r.sub(r.one(), a))))
}

/// `psi([[u, y], [0, u^-1]]) = (<u>, u^-1 y)`.
fn psi(lab: &Lab, m: &Mat2) -> Vec<BigInt> {
    let [u, y, c, _] = m.0;
    assert_eq!(c, lab.ring.zero(), "psi is defined on upper triangular matrices");
    target_coords(lab, lab.units.class_of(u), lab.ring.mul(lab.inv(u), y))
}

pub(crate) fn bar1(lab: &Lab, terms: &[(i64, Mat2)]) -> Result<BarChain> {
    let mut c = BarChain::zero(1);
    for (k, m) in terms {
        c.add_term(vec![lab.e2_elem(m)?], *k);
    }
    Ok(c.normalized(lab.e2()?))
}

pub(crate) fn bar2(lab: &Lab, terms: &[(i64, Mat2, Mat2)]) -> Result<BarChain> {
    let mut c = BarChain::zero(2);
    for (k, a, b) in terms {
        c.add_term(vec![lab.e2_elem(a)?, lab.e2_elem(b)?], *k);
    }
    Ok(c.normalized(lab.e2()?))
}

/// Outcome of replaying the chain level computation of `d2(<<a>>)`.
#[derive(Clone, Debug, Serialize)]
pub struct D2Replay {
    pub unit: String,
    /// `(d (x) id)` of the lift equals the cycle `X_a` pushed into `Y_1`
    pub lift: bool,
    /// each added null element evaluates to the stated boundary and the running sum to the stated chain
    pub null_elements: [bool; 3],
    /// matrix identities used along the way
    pub identities: bool,
    /// the final chain's class in `B(A)^ab` equals that of the collapsed product matrix
    pub collapse: bool,
    pub value: String,
    pub formula: String,
    pub matches_formula: bool,
}

impl D2Replay {
    pub fn ok(&self) -> bool {
        self.lift && self.null_elements.iter().all(|&b| b) && self.identities && self.collapse && self.matches_formula
    }
}

pub fn replay_d2_proof(lab: &Lab, a: Elem) -> Result<D2Replay> {
    let formula = d2_differential(lab, a)?;
    let r = &lab.ring;
    let e2 = lab.e2()?;
    let y = lab.complex_to(2)?;
    let pts = &y.points;
    let inf = pts.infinity(r);
    let zero = pts.zero_point(r);
    let one = r.one();
    let ai = lab.inv(a);

    let w = lab.w_mat();
    let inv = |m: &Mat2| lab.mat_inv(m);
    let g_a_i = inv(&lab.g(a));
    let g_1_i = inv(&lab.g(one));
    let h_a_i = inv(&lab.h(a));
    let h_1_i = inv(&lab.h(one));
    let h_ai = lab.h(ai);
    let h_1 = lab.h(one);
    let b_a = lab.mat_mul(&[inv(&lab.d(a)), inv(&lab.h(ai))]);
    let mw = w.neg(r);
    let mul = |ms: &[Mat2]| lab.mat_mul(ms);

    // the lift of X_a through d (x) id
    let c = bar1(lab, &[(1, g_a_i), (-1, h_a_i), (-1, g_1_i), (1, h_1_i)])?;
    let lifted = TensorChain::from_bar(&c, &[inf, zero]).bar_boundary(r, e2, pts);
    let mut x_a = TensorChain::zero(0, 1);
    for (t, k) in [(pts.affine(r, a), 1), (pts.affine(r, one), -1)] {
        let s = [inf, zero, t];
        for (i, sign) in [(0usize, 1i64), (1, -1), (2, 1)] {
            let mut face = s.to_vec();
            face.remove(i);
            x_a.add_term(vec![], face, sign * k);
        }
    }
    let lift = lifted == x_a;

    let s0 = TensorChain::from_bar(&c, &[inf, zero]).simplex_boundary();
    let on_inf = |b: &BarChain| TensorChain::from_bar(b, &[inf]);

    let n1 = on_inf(&bar2(lab, &[(1, w, h_a_i), (-1, w, g_a_i), (1, w, g_1_i), (-1, w, h_1_i)])?)
        .bar_boundary(r, e2, pts);
    let mut s1 = s0.clone();
    s1.add_scaled(&n1, 1);
    let want1 = on_inf(&bar1(
        lab,
        &[
            (1, mul(&[w, g_a_i])),
            (-1, mul(&[w, h_a_i])),
            (-1, mul(&[w, g_1_i])),
            (1, mul(&[w, h_1_i])),
            (-1, g_a_i),
            (1, h_a_i),
            (1, g_1_i),
            (-1, h_1_i),
        ],
    )?);
    let step1 = s1 == want1;

    let n2 = on_inf(&bar2(lab, &[(1, b_a, mul(&[w, h_a_i])), (-1, h_1_i, mul(&[w, h_1_i]))])?)
        .bar_boundary(r, e2, pts);
    let mut s2 = s1.clone();
    s2.add_scaled(&n2, 1);
    let want2 = on_inf(&bar1(
        lab,
        &[(1, b_a), (-1, h_1_i), (-1, g_a_i), (1, h_a_i), (1, g_1_i), (-1, h_1_i)],
    )?);
    let step2 = s2 == want2;

    let n3 = on_inf(&bar2(lab, &[(1, h_1, mw), (-1, h_ai, mw)])?).bar_boundary(r, e2, pts);
    let n3_stated = on_inf(&bar1(lab, &[(1, g_a_i), (-1, h_ai), (-1, g_1_i), (1, h_1)])?);
    let mut s3 = s2.clone();
    s3.add_scaled(&n3, 1);
    let want3 = on_inf(&bar1(
        lab,
        &[(1, b_a), (-1, h_1_i), (1, h_a_i), (-1, h_1_i), (-1, h_ai), (1, h_1)],
    )?);
    let step3 = n3 == n3_stated && s3 == want3;

    let lower_left_zero = |m: &Mat2| m.0[2] == r.zero();
    let identities = mul(&[b_a, w, h_a_i]) == mul(&[w, g_a_i]) && lower_left_zero(&b_a);

    // collapse with the relations of B(A)^ab and compare with the closed matrix
    let std = lab.standard()?;
    let bab = lab.b_ab()?;
    let product = mul(&[b_a, h_1, h_a_i, h_1, inv(&h_ai), h_1]);
    let closed = Mat2::diag(r, &lab.units, ai).mul(
        r,
        &Mat2::e12(r, r.add(r.sub(r.scale(-2, a), ai), r.from_int(3))),
    );
    let mut chain_ab = vec![BigInt::from(0); bab.group.ngens()];
    let mut chain_psi = vec![BigInt::from(0); target_group(lab).ngens()];
    let mut all_in_b = true;
    for ((t, s), k) in s3.terms() {
        let m = e2.matrix(t[0]);
        if s.as_slice() != [inf] || !lower_left_zero(&m) {
            all_in_b = false;
            continue;
        }
        for (acc, x) in chain_ab.iter_mut().zip(bab.coords(std.b.get(r, &m))) {
            *acc += k * x;
        }
        for (acc, x) in chain_psi.iter_mut().zip(psi(lab, &m)) {
            *acc += k * x;
        }
    }
    let prod_ab = bab.coords(std.b.get(r, &product));
    let diff: Vec<BigInt> = chain_ab.iter().zip(prod_ab).map(|(x, y)| x - y).collect();
    let collapse = all_in_b && product == closed && bab.group.is_zero_element(&diff);

    let value_psi = psi(lab, &closed);
    let matches_formula = same(lab, &chain_psi, &value_psi) && same(lab, &value_psi, &formula.coords(lab));
    let c_entry = closed.0[1];
    Ok(D2Replay {
        unit: r.label(a).to_string(),
        lift,
        null_elements: [step1, step2, step3],
        identities,
        collapse,
        value: D2Value::new(lab, lab.units.class_of(ai), c_entry).label(lab),
        formula: formula.label(lab),
        matches_formula,
    })
}
