use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lab::Lab;
use crate::ringkit::Elem;
use crate::unimod::{small_generators, ChainComplexY};
use crate::zlinalg::sparse::{axpy, normalize};
use crate::zlinalg::{AbGroup, Presentation, Quotient, SparseKernel, SparseVec};

/// `GW(A) = H_0(E2(A), Z_1)` with its augmentation and fundamental ideal.
#[derive(Clone, Debug)]
pub struct GrothendieckWitt {
    kernel: SparseKernel,
    relations: Presentation,
    quotient: Quotient,
    eps_gen: Vec<BigInt>,
    pub group: AbGroup,
    /// generators of `I(A)` in group coordinates
    pub i_gens: Vec<Vec<BigInt>>,
}

/// Coinvariants of the kernel of a boundary map: the presentation on kernel
/// coordinates with relations `g z - z` for generators `g` and kernel basis vectors `z`.
pub(crate) fn kernel_coinvariants(lab: &Lab, y: &ChainComplexY, k: usize) -> Result<(SparseKernel, Presentation)> {
    let kernel = SparseKernel::new(y.rank(k - 1), y.boundary(k))?;
    let mut p = Presentation::new(kernel.rank());
    for g in small_generators(&lab.ring) {
        for z in kernel.basis() {
            let moved = y.act_chain(&lab.ring, &g, k, z);
            let diff = axpy(&moved, -1, z)?;
            let coords = kernel.coordinates(&diff)?;
            if !coords.is_empty() {
                p.relations.push(coords);
            }
        }
    }
    Ok((kernel, p))
}

/// `sum of faces` of a 2-simplex given as a tuple of points, in the `Y_1` basis.
pub(crate) fn boundary2(y: &ChainComplexY, t: &[u32]) -> SparseVec {
    y.boundary_of(t)
}

impl GrothendieckWitt {
    pub fn new(lab: &Lab) -> Result<Self> {
        let y = lab.complex_to(2)?;
        let (kernel, relations) = kernel_coinvariants(lab, y, 1)?;
        let quotient = relations.reduce();
        let group = quotient.group().clone();
        let eps_basis: Vec<BigInt> = kernel
            .basis()
            .iter()
            .map(|z| BigInt::from(z.iter().map(|&(_, c)| c).sum::<i64>()))
            .collect();
        let eps_gen: Vec<BigInt> = (0..group.ngens())
            .map(|k| {
                quotient
                    .lift(k)
                    .iter()
                    .map(|(j, c)| c * &eps_basis[*j as usize])
                    .sum()
            })
            .collect();
        let i_gens = group.kernel_of(
            &AbGroup::free(1),
            &eps_gen.iter().map(|e| vec![e.clone()]).collect::<Vec<_>>(),
        );
        Ok(GrothendieckWitt {
            kernel,
            relations,
            quotient,
            eps_gen,
            group,
            i_gens,
        })
    }

    pub fn z1_rank(&self) -> usize {
        self.kernel.rank()
    }

    /// Class of a 1-cycle of `Y_1`.
    pub fn class_of_cycle(&self, y: &ChainComplexY, z: &SparseVec) -> Result<Vec<BigInt>> {
        let mut bd: Vec<(u32, i64)> = Vec::new();
        let d1 = y.boundary(1);
        for &(i, c) in z {
            for &(j, x) in &d1[i as usize] {
                bd.push((j, x.checked_mul(c).ok_or(Error::Overflow)?));
            }
        }
        if !normalize(bd)?.is_empty() {
            return Err(Error::CheckFailed("chain is not a cycle".into()));
        }
        let coords = self.kernel.coordinates(z)?;
        Ok(self.quotient.project_sparse(&coords))
    }

    /// Augmentation of a class.
    pub fn eps(&self, x: &[BigInt]) -> BigInt {
        x.iter().zip(&self.eps_gen).map(|(a, b)| a * b).sum()
    }

    pub fn eps_generators(&self) -> &[BigInt] {
        &self.eps_gen
    }

    /// Whether the augmentation is onto `Z`.
    pub fn eps_surjective(&self) -> bool {
        let g = self.eps_gen.iter().fold(BigInt::zero(), |acc, e| num_integer::Integer::gcd(&acc, e));
        g == BigInt::from(1)
    }

    /// `I(A)` as an abstract group.
    pub fn i_group(&self) -> AbGroup {
        self.group.subgroup(&self.i_gens)
    }

    /// Image of `<a>` in `GW(A)`: the class of the boundary of `(inf, 0, a)`.
    pub fn symbol_of_unit(&self, lab: &Lab, a: Elem) -> Result<Vec<BigInt>> {
        let y = lab.complex_to(2)?;
        let t = x_simplex(lab, y, a);
        self.class_of_cycle(y, &boundary2(y, &t))
    }

    /// Image of the square class `c` in `GW(A)`.
    pub fn symbol(&self, lab: &Lab, c: usize) -> Result<Vec<BigInt>> {
        self.symbol_of_unit(lab, lab.units.class_reps[c])
    }

    /// `<<a>> = <a> - <1>` as the class of the boundary of `X_a - X_1`.
    pub fn pfister(&self, lab: &Lab, a: Elem) -> Result<Vec<BigInt>> {
        let y = lab.complex_to(2)?;
        let za = boundary2(y, &x_simplex(lab, y, a));
        let z1 = boundary2(y, &x_simplex(lab, y, lab.ring.one()));
        self.class_of_cycle(y, &axpy(&za, -1, &z1)?)
    }

    /// `H_1(Y)` coinvariants: `GW(A)` modulo the classes of all 1-boundaries.
    pub fn h1_y_coinvariants(&self, lab: &Lab) -> Result<AbGroup> {
        let y = lab.complex_to(2)?;
        let mut p = self.relations.clone();
        for col in y.boundary(2) {
            let coords = self.kernel.coordinates(col)?;
            if !coords.is_empty() {
                p.relations.push(coords);
            }
        }
        Ok(p.reduce().group().clone())
    }
}

/// The tuple `(inf, 0, a)`.
pub fn x_simplex(lab: &Lab, y: &ChainComplexY, a: Elem) -> Vec<u32> {
    let pts = &y.points;
    vec![pts.infinity(&lab.ring), pts.zero_point(&lab.ring), pts.affine(&lab.ring, a)]
}

pub fn grothendieck_witt(lab: &Lab) -> Result<GrothendieckWitt> {
    GrothendieckWitt::new(lab)
}
