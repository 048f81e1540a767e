//! Exact integer lattice algebra.

mod abgroup;
mod matrix;
mod smith;
pub mod sparse;

pub use abgroup::{factorize, AbGroup};
pub use matrix::{to_bigints, IntMatrix};
pub use smith::{kernel_basis, smith_normal_form, smith_normal_form_with, solve_in_lattice, SmithForm, Transforms};
pub use sparse::{Presentation, Quotient, SparseKernel, SparseVec};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// `Z^ambient_rank` modulo the column span of `relations`.
pub fn quotient_structure(ambient_rank: usize, relations: &IntMatrix) -> Quotient {
    assert_eq!(relations.rows(), ambient_rank, "relations must have ambient_rank rows");
    let mut p = Presentation::new(ambient_rank);
    let small = relations.max_abs() < BigInt::from(i64::MAX / 4);
    if !small {
        return dense_only(ambient_rank, relations);
    }
    for j in 0..relations.cols() {
        let col: Vec<(u32, i64)> = (0..ambient_rank)
            .filter(|&i| !relations[(i, j)].is_zero())
            .map(|i| (i as u32, relations[(i, j)].to_i64().expect("checked above")))
            .collect();
        p.push(col).expect("entries are small");
    }
    p.reduce()
}

fn dense_only(ambient_rank: usize, relations: &IntMatrix) -> Quotient {
    sparse::dense_from_matrix(ambient_rank, relations)
}

/// Homology `ker d_in / im d_out` of `Z^n` where `d_in: Z^n -> Z^m` and `d_out: Z^l -> Z^n`.
/// Both maps are given by sparse columns.
pub fn homology(n: usize, d_in_rank: usize, d_out: &[SparseVec]) -> AbGroup {
    let mut p = Presentation::new(n);
    for c in d_out {
        p.push(c.clone()).expect("normalized column");
    }
    let q = p.reduce();
    let torsion = q.group().torsion();
    let free = n - d_in_rank - q.relation_rank();
    torsion.direct_sum(&AbGroup::free(free))
}

/// `G_1 + ... + G_k` presented on the concatenated canonical coordinates of the summands,
/// so that a coordinate vector of the sum is the concatenation of the parts.
pub fn direct_sum_presentation(groups: &[&AbGroup]) -> Quotient {
    let orders: Vec<i64> = groups.iter().flat_map(|g| g.invariants_i64()).collect();
    let mut p = Presentation::new(orders.len());
    for (i, &d) in orders.iter().enumerate() {
        if d != 0 {
            p.push(vec![(i as u32, d)]).expect("small");
        }
    }
    p.reduce()
}

/// A finite abelian group given by its operation on `0..n`, with canonical
/// coordinates for every element.
#[derive(Clone, Debug)]
pub struct TableGroup {
    pub group: AbGroup,
    coords: Vec<Vec<BigInt>>,
}

impl TableGroup {
    /// `gens` must generate; `identity` is the neutral element.
    pub fn new(n: usize, identity: usize, gens: &[usize], op: impl Fn(usize, usize) -> usize) -> Self {
        let mut p = Presentation::new(n);
        p.push(vec![(identity as u32, 1)]).expect("small");
        for x in 0..n {
            for &s in gens {
                let y = op(x, s);
                p.push(vec![(x as u32, 1), (s as u32, 1), (y as u32, -1)]).expect("small");
            }
        }
        let q = p.reduce();
        let coords = (0..n).map(|x| q.project_sparse(&vec![(x as u32, 1)])).collect();
        TableGroup {
            group: q.group().clone(),
            coords,
        }
    }

    pub fn coords(&self, x: usize) -> &[BigInt] {
        &self.coords[x]
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}
