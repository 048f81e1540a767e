use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::rpbar::{apply, class_product, symbol_of, LambdaBar, RpBar};
use super::symsq::SymSq;
use crate::error::{Error, Result};
use crate::invariants::kernel_coinvariants;
use crate::lab::Lab;
use crate::unimod::{canonicalize_tuple, ChainComplexY};
use crate::zlinalg::sparse::to_big;
use crate::zlinalg::{direct_sum_presentation, AbGroup, Quotient, SparseKernel, SparseVec};

/// `RP(A) = H_0(E2(A), Z_2)` with `lambda_1` into `Z[G_A]`.
#[derive(Clone, Debug)]
pub struct RpGeom {
    kernel: SparseKernel,
    quotient: Quotient,
    /// square class of every degree 2 basis tuple
    y2_class: Vec<usize>,
    /// `lambda_1` on the canonical generators of the group
    pub lambda1: Vec<Vec<BigInt>>,
    /// `RP_1(A) = ker lambda_1`, in group coordinates
    pub rp1_gens: Vec<Vec<BigInt>>,
    /// `lambda_1` sends every degree 3 boundary into `I_A^2`
    pub boundaries_in_i2: bool,
}

impl RpGeom {
    pub fn group(&self) -> &AbGroup {
        self.quotient.group()
    }

    pub fn rp1(&self) -> AbGroup {
        self.group().subgroup(&self.rp1_gens)
    }

    /// `lambda_1` of a 2-chain, read off through the orbit of each tuple.
    pub fn lambda1_of_chain(&self, lab: &Lab, z: &SparseVec) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); lab.units.class_count()];
        for &(i, c) in z {
            v[self.y2_class[i as usize]] += c;
        }
        v
    }

    /// Class of a 2-cycle.
    pub fn class_of_cycle(&self, z: &SparseVec) -> Result<Vec<BigInt>> {
        let coords = self.kernel.coordinates(z)?;
        Ok(self.quotient.project_sparse(&coords))
    }
}

pub fn rp_geometric(lab: &Lab) -> Result<RpGeom> {
    let y = lab.complex_to(3)?;
    let (kernel, relations) = kernel_coinvariants(lab, y, 2)?;
    let quotient = relations.reduce();
    let y2_class: Vec<usize> = (0..y.rank(2))
        .map(|i| canonicalize_tuple(&lab.ring, &lab.units, y, y.basis(2).get(i)).class)
        .collect();
    let n = lab.units.class_count();
    let chain_lambda = |z: &SparseVec| {
        let mut v = vec![BigInt::zero(); n];
        for &(i, c) in z {
            v[y2_class[i as usize]] += c;
        }
        v
    };
    let basis_lambda: Vec<Vec<BigInt>> = kernel.basis().iter().map(chain_lambda).collect();
    let lambda1: Vec<Vec<BigInt>> = (0..quotient.group().ngens())
        .map(|k| apply(&basis_lambda, n, &quotient.lift(k)))
        .collect();
    let rp1_gens = quotient.group().kernel_of(&AbGroup::free(n), &lambda1);
    let i2 = AbGroup::free(n).quotient_by(&i_squared_span(lab));
    let boundaries_in_i2 = y
        .boundary(3)
        .iter()
        .all(|col| i2.group().is_zero_element(&i2.project_dense(&chain_lambda(col))));
    Ok(RpGeom {
        kernel,
        quotient,
        y2_class,
        lambda1,
        rp1_gens,
        boundaries_in_i2,
    })
}

/// Spanning set of `I_A^2` inside `Z[G_A]`.
pub fn i_squared_span(lab: &Lab) -> Vec<Vec<BigInt>> {
    let reps = &lab.units.class_reps;
    let mut out = Vec::new();
    for g in 0..reps.len() {
        for &a in reps {
            for &b in reps {
                out.push(class_product(lab, g, a, b));
            }
        }
    }
    out
}

/// The tuple `(inf, 0, r_g, r_g x)` representing `<g>[x]'`.
pub fn symbol_tuple(lab: &Lab, y: &ChainComplexY, g: usize, x: crate::ringkit::Elem) -> Vec<u32> {
    let r = &lab.ring;
    let pts = &y.points;
    let rg = lab.units.class_reps[g];
    vec![pts.infinity(r), pts.zero_point(r), pts.affine(r, rg), pts.affine(r, r.mul(rg, x))]
}

/// `eta: RP-bar(A) -> RP(A)` and what is known about it.
#[derive(Clone, Debug, Serialize)]
pub struct EtaReport {
    pub rp_bar: AbGroup,
    pub rp: AbGroup,
    /// every five-term relation lands on zero
    pub well_defined: bool,
    /// `lambda-bar_1 = lambda_1 . eta` on all symbols
    pub lambda_compatible: bool,
    /// sign of the degree 3 boundary used for `eta`; with the plain boundary
    /// `lambda_1 . eta` comes out as `-lambda-bar_1`
    pub boundary_sign: i32,
    pub surjective: bool,
    /// surjective with isomorphic source and target
    pub bijective: bool,
    /// `H_1`, `H_2`, `H_3` of the complex, where computable
    pub y_homology: Vec<Option<AbGroup>>,
    /// set exactly when the computed `H_1 = H_2 = H_3 = 0`
    pub iso: bool,
}

pub struct Eta {
    /// images of the symbols in `RP(A)` coordinates
    pub images: Vec<Vec<BigInt>>,
    pub report: EtaReport,
}

const BOUNDARY_SIGN: i32 = -1;

pub fn eta_map(lab: &Lab, rp_bar: &RpBar, geom: &RpGeom, lb: &LambdaBar) -> Result<Eta> {
    let y = lab.complex_to(3)?;
    let mut images = Vec::with_capacity(rp_bar.symbols);
    let mut lambda_compatible = true;
    for s in 0..rp_bar.symbols as u32 {
        let (g, x) = symbol_of(lab, s);
        let bd: SparseVec = y
            .boundary_of(&symbol_tuple(lab, y, g, x))
            .into_iter()
            .map(|(i, c)| (i, BOUNDARY_SIGN as i64 * c))
            .collect();
        lambda_compatible &= geom.lambda1_of_chain(lab, &bd) == lb.lambda1[s as usize];
        images.push(geom.class_of_cycle(&bd)?);
    }
    let rp = geom.group();
    let well_defined = rp_bar
        .relations
        .iter()
        .all(|v| rp.is_zero_element(&apply(&images, rp.ngens(), &to_big(v))));
    let gen_images: Vec<Vec<BigInt>> = (0..rp_bar.group().ngens())
        .map(|k| apply(&images, rp.ngens(), &rp_bar.quotient.lift(k)))
        .collect();
    let surjective = rp.quotient_by(&gen_images).group().is_trivial();
    let y_homology: Vec<Option<AbGroup>> = (1..=3)
        .map(|k| (k < y.max_degree()).then(|| y.homology(k)).transpose())
        .collect::<Result<_>>()?;
    let iso = y_homology.iter().all(|h| h.as_ref().is_some_and(AbGroup::is_trivial));
    Ok(Eta {
        images,
        report: EtaReport {
            rp_bar: rp_bar.group().clone(),
            rp: rp.clone(),
            well_defined,
            lambda_compatible,
            boundary_sign: BOUNDARY_SIGN,
            surjective,
            bijective: surjective && rp_bar.group() == rp,
            y_homology,
            iso,
        },
    })
}

/// `RB(A)`, `RB-bar(A)` and the map between them.
#[derive(Clone, Debug, Serialize)]
pub struct RefinedBloch {
    pub rp1: AbGroup,
    pub rp_bar1: AbGroup,
    pub rb: AbGroup,
    pub rb_bar: AbGroup,
    /// `lambda_2` defined through symbols is constant on the fibres of `eta`
    pub lambda2_well_defined: bool,
    /// `RB-bar -> RB` is onto
    pub comparison_surjective: bool,
    /// `alpha` of `x ^ (1 - x)` is `2 (x (x) (1 - x))` on every symbol
    pub alpha_compatible: bool,
    pub alpha_well_defined: bool,
}

pub fn refined_bloch(lab: &Lab, rp_bar: &RpBar, geom: &RpGeom, lb: &LambdaBar, eta: &Eta, sym: &SymSq) -> Result<RefinedBloch> {
    if !eta.report.surjective {
        return Err(Error::Precondition(format!("eta is not surjective for {}", lab.label())));
    }
    let n = lab.units.class_count();
    let q = &rp_bar.quotient;
    let gens = q.group().ngens();
    let rp = geom.group();
    let lift_apply = |imgs: &[Vec<BigInt>], width: usize| -> Vec<Vec<BigInt>> {
        (0..gens).map(|k| apply(imgs, width, &q.lift(k))).collect()
    };
    let l1 = lift_apply(&lb.lambda1, n);
    let l2 = lift_apply(&lb.lambda2, lb.s2.ngens());
    let et = lift_apply(&eta.images, rp.ngens());

    let rp_bar1_gens = q.group().kernel_of(&AbGroup::free(n), &l1);
    let both = direct_sum_presentation(&[&AbGroup::free(n), &lb.s2]);
    let l12: Vec<Vec<BigInt>> = l1
        .iter()
        .zip(&l2)
        .map(|(a, b)| both.project_dense(&[a.clone(), b.clone()].concat()))
        .collect();
    let rb_bar_gens = q.group().kernel_of(both.group(), &l12);

    let combine = |v: &[BigInt], imgs: &[Vec<BigInt>], width: usize| {
        let mut acc = vec![BigInt::zero(); width];
        for (k, img) in v.iter().zip(imgs) {
            for (a, x) in acc.iter_mut().zip(img) {
                *a += k * x;
            }
        }
        acc
    };
    let ker_eta = q.group().kernel_of(rp, &et);
    let lambda2_well_defined = ker_eta
        .iter()
        .all(|v| lb.s2.is_zero_element(&combine(v, &l2, lb.s2.ngens())));
    let rb_gens: Vec<Vec<BigInt>> = rb_bar_gens.iter().map(|v| combine(v, &et, rp.ngens())).collect();
    let rb = rp.subgroup(&rb_gens);
    let in_rp1 = rb_gens.iter().all(|v| combine(v, &geom.lambda1, n).iter().all(Zero::is_zero));

    // RB computed on RP-bar / ker eta, a copy of RP on which lambda_2 is defined directly
    let rp1 = geom.rp1();
    let mut comparison_surjective = false;
    if lambda2_well_defined {
        let copy = q.group().quotient_by(&ker_eta);
        let pulled = |k: usize, imgs: &[Vec<BigInt>], width: usize| {
            let mut acc = vec![BigInt::zero(); width];
            for (i, c) in copy.lift(k) {
                for (a, x) in acc.iter_mut().zip(&imgs[i as usize]) {
                    *a += &c * x;
                }
            }
            acc
        };
        let cg = copy.group().ngens();
        let joint: Vec<Vec<BigInt>> = (0..cg)
            .map(|k| both.project_dense(&[pulled(k, &l1, n), pulled(k, &l2, lb.s2.ngens())].concat()))
            .collect();
        let eta_copy: Vec<Vec<BigInt>> = (0..cg).map(|k| pulled(k, &et, rp.ngens())).collect();
        let rb_direct: Vec<Vec<BigInt>> = copy
            .group()
            .kernel_of(both.group(), &joint)
            .iter()
            .map(|v| combine(v, &eta_copy, rp.ngens()))
            .collect();
        let quot = rp.quotient_by(&rb_gens);
        comparison_surjective = in_rp1
            && rb_direct
                .iter()
                .all(|v| quot.group().is_zero_element(&quot.project_dense(v)));
    }

    let r = &lab.ring;
    let alpha_compatible = lab.w.members.iter().all(|&x| {
        let y = r.sub(r.one(), x);
        let lhs = sym.alpha(&sym.wedge(lab, x, y));
        let t = sym.tensor(lab, x, y);
        let rhs: Vec<BigInt> = t.iter().map(|c| c * 2).collect();
        sym.s2_group().is_zero_element(&lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect::<Vec<_>>())
    });
    Ok(RefinedBloch {
        rp1,
        rp_bar1: q.group().subgroup(&rp_bar1_gens),
        rb,
        rb_bar: q.group().subgroup(&rb_bar_gens),
        lambda2_well_defined,
        comparison_surjective,
        alpha_compatible,
        alpha_well_defined: sym.alpha_well_defined,
    })
}
