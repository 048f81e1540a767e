use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::lab::Lab;
use crate::ringkit::Elem;
use crate::zlinalg::AbGroup;

/// The first differential `T(A) -> B(A)^ab`, `D(a) -> w D(a) w^-1 D(a)^-1`, evaluated in the
/// computed abelianization of `B(A)`.
#[derive(Clone, Debug, Serialize)]
pub struct D1Report {
    pub b_ab: AbGroup,
    /// units `a` with `D(a)` in the kernel, as labels
    pub kernel: Vec<String>,
    pub mu2: Vec<String>,
    pub kernel_is_mu2: bool,
    pub cokernel: AbGroup,
    pub expected_cokernel: AbGroup,
    pub cokernel_matches: bool,
}

impl D1Report {
    pub fn ok(&self) -> bool {
        self.kernel_is_mu2 && self.cokernel_matches
    }
}

pub fn d1_differentials(lab: &Lab) -> Result<D1Report> {
    let r = &lab.ring;
    let std = lab.standard()?;
    let bab = lab.b_ab()?;
    let w = lab.w_mat();
    let wi = lab.mat_inv(&w);
    let mut images: Vec<Vec<BigInt>> = Vec::new();
    let mut kernel: Vec<Elem> = Vec::new();
    for &a in &lab.units.units {
        let da = lab.d(a);
        let sigma = lab.mat_mul(&[w, da, wi]);
        let x = bab.coords(std.b.get(r, &sigma));
        let y = bab.coords(std.b.get(r, &da));
        let diff: Vec<BigInt> = x.iter().zip(y).map(|(p, q)| p - q).collect();
        let diff = bab.group.normalize(&diff);
        if bab.group.is_zero_element(&diff) {
            kernel.push(a);
        }
        images.push(diff);
    }
    let cokernel = bab.group.quotient_by(&images).group().clone();
    let expected_cokernel = lab.classes().group.direct_sum(&lab.a_lower().group);
    let mu2 = lab.units.mu(r, 2);
    let labels = |v: &[Elem]| v.iter().map(|&x| r.label(x).to_string()).collect::<Vec<_>>();
    Ok(D1Report {
        b_ab: bab.group.clone(),
        kernel_is_mu2: kernel == mu2,
        kernel: labels(&kernel),
        mu2: labels(&mu2),
        cokernel_matches: cokernel == expected_cokernel,
        cokernel,
        expected_cokernel,
    })
}
