use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lab::Lab;
use crate::ringkit::{local_decomposition, Elem};
use crate::zlinalg::{AbGroup, Presentation};

use super::d2::{target_coords, target_group};
use super::gw::GrothendieckWitt;

/// `GW-bar(A)`, `I-bar(A)`, `I-bar^2(A)` and the comparison with `GW(A)`.
#[derive(Clone, Debug, Serialize)]
pub struct BarWitt {
    pub ring: String,
    pub g_a: AbGroup,
    pub gw_bar: AbGroup,
    pub i_bar: AbGroup,
    pub i_bar_sq: AbGroup,
    pub i_bar_mod_sq: AbGroup,
    pub i_bar_mod_sq_is_g: bool,
    /// the relations `g <<a>><<1-a>>` die in `GW(A)`
    pub comparison_well_defined: bool,
    pub eps_compatible: bool,
    pub comparison_surjective: bool,
    /// `I(A)` modulo the image of `I-bar(A)`
    pub i_cokernel: AbGroup,
    pub h1_y_coinvariants: AbGroup,
    pub exact_end: bool,
    /// number of relations `g <<a>><<1-a>>` imposed
    pub w_relations: usize,
}

impl BarWitt {
    pub fn ok(&self) -> bool {
        self.i_bar_mod_sq_is_g && self.comparison_well_defined && self.eps_compatible && self.exact_end
    }
}

/// The relations `g <<a>><<1-a>>` of `Z[G_A]` as sparse vectors on the class basis.
pub fn w_relations(lab: &Lab) -> Vec<Vec<(u32, i64)>> {
    let r = &lab.ring;
    let u = &lab.units;
    let mut out = Vec::new();
    for g in 0..u.class_count() {
        for &a in &lab.w.members {
            let ca = u.class_of(a);
            let cb = u.class_of(r.sub(r.one(), a));
            let t = |c| u.class_mul(r, g, c) as u32;
            out.push(vec![
                (t(u.class_mul(r, ca, cb)), 1),
                (t(ca), -1),
                (t(cb), -1),
                (g as u32, 1),
            ]);
        }
    }
    out
}

/// Rewrites a vector on the class basis with zero augmentation in the basis `<<c>>`, `c != 0`.
fn to_i_basis(v: &[(u32, i64)]) -> Vec<(u32, i64)> {
    v.iter().filter(|&&(c, _)| c != 0).map(|&(c, k)| (c - 1, k)).collect()
}

pub fn bar_witt_suite(lab: &Lab, gw: &GrothendieckWitt) -> Result<BarWitt> {
    let u = &lab.units;
    let r = &lab.ring;
    let n = u.class_count();
    let rels = w_relations(lab);

    let mut p = Presentation::new(n);
    for rel in &rels {
        p.push(rel.clone())?;
    }
    let gw_bar = p.reduce().group().clone();

    // I-bar on the free basis <<c>> of I_A
    let mut pi = Presentation::new(n - 1);
    for rel in &rels {
        pi.push(to_i_basis(rel))?;
    }
    let qi = pi.reduce();
    let i_bar = qi.group().clone();
    let mut products = Vec::new();
    for g in 1..n {
        for h in 1..n {
            let gh = u.class_mul(r, g, h) as u32;
            products.push(to_i_basis(&[(gh, 1), (g as u32, -1), (h as u32, -1)]));
        }
    }
    let prod_coords: Vec<Vec<BigInt>> = products.iter().map(|v| qi.project_sparse(v)).collect();
    let i_bar_sq = i_bar.subgroup(&prod_coords);
    let mut pq = pi.clone();
    for v in &products {
        pq.push(v.clone())?;
    }
    let i_bar_mod_sq = pq.reduce().group().clone();

    // comparison with GW(A) through the symbols
    let symbols: Vec<Vec<BigInt>> = (0..n).map(|c| gw.symbol(lab, c)).collect::<Result<_>>()?;
    let image_of = |v: &[(u32, i64)]| {
        let mut acc = vec![BigInt::zero(); gw.group.ngens()];
        for &(c, k) in v {
            for (a, s) in acc.iter_mut().zip(&symbols[c as usize]) {
                *a += s * k;
            }
        }
        acc
    };
    let comparison_well_defined = rels.iter().all(|rel| gw.group.is_zero_element(&image_of(rel)));
    let eps_compatible = symbols.iter().all(|s| gw.eps(s).is_one());
    let comparison_surjective = gw.group.quotient_by(&symbols).group().is_trivial();

    let pfisters: Vec<Vec<BigInt>> = (1..n).map(|c| image_of(&[(c as u32, 1), (0, -1)])).collect();
    let mod_image = gw.group.quotient_by(&pfisters);
    let projected: Vec<Vec<BigInt>> = gw.i_gens.iter().map(|x| mod_image.project_dense(x)).collect();
    let i_cokernel = mod_image.group().subgroup(&projected);
    let h1_y = gw.h1_y_coinvariants(lab)?;

    Ok(BarWitt {
        ring: lab.label(),
        g_a: lab.classes().group.clone(),
        gw_bar,
        i_bar,
        i_bar_sq,
        i_bar_mod_sq_is_g: i_bar_mod_sq == lab.classes().group,
        i_bar_mod_sq,
        comparison_well_defined,
        eps_compatible,
        comparison_surjective,
        exact_end: i_cokernel == h1_y,
        i_cokernel,
        h1_y_coinvariants: h1_y,
        w_relations: rels.len(),
    })
}

/// `d2` on the free basis `<<c>>` of `I_A`, as coordinates in `G_A + A_{A^x}`.
pub fn d2_on_basis(lab: &Lab) -> Vec<Vec<BigInt>> {
    let r = &lab.ring;
    (1..lab.units.class_count())
        .map(|c| {
            let rc = lab.units.class_reps[c];
            target_coords(lab, c, r.scale(3, r.sub(r.one(), rc)))
        })
        .collect()
}

/// `I^2(A)` inside `GW(A)`.
#[derive(Clone, Debug, Serialize)]
pub struct ISquared {
    pub group: AbGroup,
    /// generators in `GW(A)` coordinates
    pub generators: Vec<Vec<BigInt>>,
    /// relations among the `<<a>>` in `GW(A)` are killed by `d2`
    pub consistent: bool,
}

impl ISquared {
    pub fn contains(&self, gw: &GrothendieckWitt, x: &[BigInt]) -> bool {
        let q = gw.group.quotient_by(&self.generators);
        q.group().is_zero_element(&q.project_dense(x))
    }
}

pub fn i_squared(lab: &Lab, gw: &GrothendieckWitt) -> Result<ISquared> {
    if !local_decomposition(&lab.ring).universal {
        return Err(Error::Precondition(format!(
            "{} is not universal for GE2; the classes <<a>> need not generate I(A)",
            lab.label()
        )));
    }
    let n = lab.units.class_count();
    let free = AbGroup::free(n - 1);
    let pf: Vec<Vec<BigInt>> = (1..n)
        .map(|c| gw.pfister(lab, lab.units.class_reps[c]))
        .collect::<Result<_>>()?;
    let d2 = d2_on_basis(lab);
    let tg = target_group(lab);
    let to_gw = |v: &[BigInt]| {
        let mut acc = vec![BigInt::zero(); gw.group.ngens()];
        for (k, p) in v.iter().zip(&pf) {
            for (a, x) in acc.iter_mut().zip(p) {
                *a += k * x;
            }
        }
        gw.group.normalize(&acc)
    };
    let to_t = |v: &[BigInt]| {
        let mut acc = vec![BigInt::zero(); tg.ngens()];
        for (k, p) in v.iter().zip(&d2) {
            for (a, x) in acc.iter_mut().zip(p) {
                *a += k * x;
            }
        }
        acc
    };
    let relations = free.kernel_of(&gw.group, &pf);
    let consistent = relations.iter().all(|v| tg.is_zero_element(&to_t(v)));
    let generators: Vec<Vec<BigInt>> = free.kernel_of(&tg, &d2).iter().map(|v| to_gw(v)).collect();
    Ok(ISquared {
        group: gw.group.subgroup(&generators),
        generators,
        consistent,
    })
}

/// `<<a>><<b>>` in `GW(A)`, with its augmentation and whether `d2` kills it.
#[derive(Clone, Debug, Serialize)]
pub struct Pontryagin {
    pub class: Vec<BigInt>,
    pub eps: BigInt,
    /// `d2(<<ab>> - <<a>> - <<b>>) = 0` in `G_A + A_{A^x}`
    pub d2_vanishes: bool,
}

pub fn pontryagin(lab: &Lab, gw: &GrothendieckWitt, a: Elem, b: Elem) -> Result<Pontryagin> {
    let r = &lab.ring;
    for x in [a, b] {
        if !lab.units.is_unit(x) {
            return Err(Error::Precondition(format!("{} is not a unit", r.label(x))));
        }
    }
    let ab = r.mul(a, b);
    let [pab, pa, pb] = [ab, a, b].map(|x| gw.pfister(lab, x));
    let (pab, pa, pb) = (pab?, pa?, pb?);
    let raw: Vec<BigInt> = pab.iter().zip(&pa).zip(&pb).map(|((x, y), z)| x - y - z).collect();
    let class = gw.group.normalize(&raw);
    let u = &lab.units;
    let tg = target_group(lab);
    let val = |x: Elem| target_coords(lab, u.class_of(x), r.scale(3, r.sub(r.one(), x)));
    let [vab, va, vb] = [ab, a, b].map(val);
    let d: Vec<BigInt> = vab.iter().zip(&va).zip(&vb).map(|((x, y), z)| x - y - z).collect();
    Ok(Pontryagin {
        eps: gw.eps(&class),
        class,
        d2_vanishes: tg.is_zero_element(&d),
    })
}
