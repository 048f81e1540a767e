use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Result;
use crate::lab::Lab;
use crate::ringkit::Elem;
use crate::zlinalg::{AbGroup, Presentation, Quotient};

/// `S^2(A^x)`, the wedge quotient `(A^x ^ A^x)/(mu_2 ^ A^x)` and `alpha: a ^ b -> 2 (a (x) b)`.
///
/// Both are quotients of `A^x (x) A^x`, presented on pairs `(i, j)` of cyclic factors of `A^x`.
#[derive(Clone, Debug)]
pub struct SymSq {
    orders: Vec<i64>,
    s2: Quotient,
    wedge: Quotient,
    /// `alpha` on the wedge generators, in `S^2` coordinates
    alpha: Vec<Vec<BigInt>>,
    pub alpha_well_defined: bool,
}

impl SymSq {
    pub fn new(lab: &Lab) -> Result<Self> {
        let orders = lab.unit_coords().group.invariants_i64();
        let m = orders.len();
        let idx = |i: usize, j: usize| (i * m + j) as u32;
        let mut tensor = Presentation::new(m * m);
        for i in 0..m {
            for j in 0..m {
                tensor.push(vec![(idx(i, j), orders[i].gcd(&orders[j]))])?;
            }
        }
        let mut sym = tensor.clone();
        let mut alt = tensor.clone();
        for i in 0..m {
            for j in i..m {
                sym.push(vec![(idx(i, j), 1), (idx(j, i), 1)])?;
                alt.push(vec![(idx(i, j), 1), (idx(j, i), 1)])?;
            }
            alt.push(vec![(idx(i, i), 1)])?;
        }
        let s2 = sym.reduce();
        let mut out = SymSq {
            orders,
            s2,
            wedge: tensor.reduce(),
            alpha: Vec::new(),
            alpha_well_defined: false,
        };
        for &mu in &lab.units.mu(&lab.ring, 2) {
            for &u in &lab.units.units {
                alt.push(out.sparse_tensor(lab, mu, u))?;
            }
        }
        out.wedge = alt.reduce();
        out.alpha = (0..out.wedge.group().ngens())
            .map(|k| {
                let lift: Vec<(u32, BigInt)> = out.wedge.lift(k).into_iter().map(|(i, c)| (i, c * 2)).collect();
                out.s2.project(&lift)
            })
            .collect();
        out.alpha_well_defined = out.wedge.group().is_well_defined_hom(out.s2.group(), &out.alpha);
        Ok(out)
    }

    fn sparse_tensor(&self, lab: &Lab, a: Elem, b: Elem) -> Vec<(u32, i64)> {
        let uc = lab.unit_coords();
        let ca = uc.coords(lab.unit_index(a));
        let cb = uc.coords(lab.unit_index(b));
        let m = self.orders.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let c = &ca[i] * &cb[j];
                if !c.is_zero() {
                    let c: i64 = (c % self.orders[i].gcd(&self.orders[j])).try_into().expect("small");
                    out.push(((i * m + j) as u32, c));
                }
            }
        }
        out
    }

    pub fn s2_group(&self) -> &AbGroup {
        self.s2.group()
    }

    pub fn wedge_group(&self) -> &AbGroup {
        self.wedge.group()
    }

    /// `a (x) b` in `S^2(A^x)`.
    pub fn tensor(&self, lab: &Lab, a: Elem, b: Elem) -> Vec<BigInt> {
        self.s2.project_sparse(&self.sparse_tensor(lab, a, b))
    }

    /// `a ^ b` in the wedge quotient.
    pub fn wedge(&self, lab: &Lab, a: Elem, b: Elem) -> Vec<BigInt> {
        self.wedge.project_sparse(&self.sparse_tensor(lab, a, b))
    }

    pub fn alpha(&self, w: &[BigInt]) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); self.s2.group().ngens()];
        for (k, img) in w.iter().zip(&self.alpha) {
            for (a, x) in acc.iter_mut().zip(img) {
                *a += k * x;
            }
        }
        self.s2.group().normalize(&acc)
    }
}
