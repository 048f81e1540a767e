use once_cell::sync::OnceCell;

use super::points::ProjLine;
use crate::error::{Error, Result};
use crate::matgroup::Mat2;
use crate::ringkit::{FiniteRing, UnitData};
use crate::zlinalg::{AbGroup, Presentation, Quotient, SparseVec};

pub const MAX_DEGREE: usize = 4;
pub const DEFAULT_BASIS_CAP: usize = 1_000_000;

/// Ordered tuples of points, pairwise in general position, sorted lexicographically.
#[derive(Clone, Debug)]
pub struct Basis {
    width: usize,
    flat: Vec<u32>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.flat.len() / self.width
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.flat[i * self.width..(i + 1) * self.width]
    }

    pub fn index_of(&self, t: &[u32]) -> Option<usize> {
        debug_assert_eq!(t.len(), self.width);
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(t) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.flat.chunks_exact(self.width)
    }
}

/// The complex `Y_*(A^2)` up to a fixed degree, with lazily assembled boundaries.
#[derive(Debug)]
pub struct ChainComplexY {
    pub points: ProjLine,
    bases: Vec<Basis>,
    boundaries: Vec<OnceCell<Vec<SparseVec>>>,
    images: Vec<OnceCell<Quotient>>,
    /// first degree that was requested but not built because of the cap
    truncated: Option<(usize, usize)>,
}

impl ChainComplexY {
    pub fn build(ring: &FiniteRing, units: &UnitData, max_degree: usize, cap: usize) -> Result<Self> {
        Self::build_inner(ring, units, max_degree, cap, false)
    }

    /// Like [`build`](Self::build), but stops below the first degree whose basis exceeds the cap.
    pub fn build_truncated(ring: &FiniteRing, units: &UnitData, max_degree: usize, cap: usize) -> Result<Self> {
        Self::build_inner(ring, units, max_degree, cap, true)
    }

    fn build_inner(ring: &FiniteRing, units: &UnitData, max_degree: usize, cap: usize, truncate: bool) -> Result<Self> {
        if max_degree > MAX_DEGREE {
            return Err(Error::Precondition(format!(
                "degree {max_degree} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        let points = ProjLine::new(ring, units);
        let p = points.len() as u32;
        let mut bases = vec![Basis {
            width: 1,
            flat: (0..p).collect(),
        }];
        let mut truncated = None;
        'degrees: for k in 1..=max_degree {
            let prev = &bases[k - 1];
            let mut flat = Vec::new();
            let mut count = 0usize;
            for t in prev.iter() {
                for q in 0..p {
                    if t.iter().all(|&x| x != q && points.in_general_position(x, q)) {
                        count += 1;
                        if count > cap {
                            if truncate {
                                truncated = Some((k, count));
                                break 'degrees;
                            }
                            return Err(Error::CapExceeded {
                                what: "complex basis",
                                size: count,
                                cap,
                            });
                        }
                        flat.extend_from_slice(t);
                        flat.push(q);
                    }
                }
            }
            bases.push(Basis { width: k + 1, flat });
        }
        let built = bases.len() - 1;
        let boundaries = (0..=built).map(|_| OnceCell::new()).collect();
        let images = (0..=built + 1).map(|_| OnceCell::new()).collect();
        Ok(ChainComplexY {
            points,
            bases,
            boundaries,
            images,
            truncated,
        })
    }

    /// Degree and partial basis size at which a truncated build stopped.
    pub fn truncated(&self) -> Option<(usize, usize)> {
        self.truncated
    }

    /// Fails with the cap error when degree `k` was not built.
    pub fn require(&self, k: usize, cap: usize) -> Result<()> {
        if k <= self.max_degree() {
            return Ok(());
        }
        match self.truncated {
            Some((_, size)) => Err(Error::CapExceeded {
                what: "complex basis",
                size,
                cap,
            }),
            None => Err(Error::Precondition(format!("the complex was built only to degree {}", self.max_degree()))),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, k: usize) -> &Basis {
        &self.bases[k]
    }

    pub fn rank(&self, k: usize) -> usize {
        self.bases[k].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.bases.iter().map(Basis::len).collect()
    }

    /// Alternating face sum of a tuple, in the basis of the degree below.
    pub fn boundary_of(&self, t: &[u32]) -> SparseVec {
        let k = t.len() - 1;
        assert!(k >= 1);
        let below = &self.bases[k - 1];
        let mut face = Vec::with_capacity(k);
        let mut out: Vec<(u32, i64)> = Vec::with_capacity(k + 1);
        for i in 0..=k {
            face.clear();
            face.extend(t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x));
            let idx = below.index_of(&face).expect("faces of a basis tuple are basis tuples");
            out.push((idx as u32, if i % 2 == 0 { 1 } else { -1 }));
        }
        crate::zlinalg::sparse::normalize(out).expect("coefficients are +-1")
    }

    /// Columns of `d_k : Y_k -> Y_{k-1}`, `k >= 1`.
    pub fn boundary(&self, k: usize) -> &[SparseVec] {
        assert!(k >= 1 && k <= self.max_degree());
        self.boundaries[k].get_or_init(|| self.bases[k].iter().map(|t| self.boundary_of(t)).collect())
    }

    /// Augmentation `Y_0 -> Z`.
    pub fn augmentation(&self, c: &SparseVec) -> i64 {
        c.iter().map(|&(_, x)| x).sum()
    }

    /// `Y_{k-1} / im d_k`, `k >= 1`.
    pub fn cokernel(&self, k: usize) -> &Quotient {
        self.images[k].get_or_init(|| {
            let mut p = Presentation::new(self.rank(k - 1));
            for c in self.boundary(k) {
                p.relations.push(c.clone());
            }
            p.reduce()
        })
    }

    pub fn boundary_rank(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.cokernel(k).relation_rank()
        }
    }

    /// `H_k(Y)`; needs `k + 1 <= max_degree`.
    pub fn homology(&self, k: usize) -> Result<AbGroup> {
        if k + 1 > self.max_degree() {
            return Err(Error::Precondition(format!(
                "H_{k} needs the complex up to degree {}",
                k + 1
            )));
        }
        let q = self.cokernel(k + 1);
        let torsion = q.group().torsion();
        let free = self.rank(k) - self.boundary_rank(k) - q.relation_rank();
        Ok(torsion.direct_sum(&AbGroup::free(free)))
    }

    pub fn act_tuple(&self, ring: &FiniteRing, g: &Mat2, t: &[u32]) -> Vec<u32> {
        t.iter().map(|&p| self.points.act(ring, g, p)).collect()
    }

    pub fn act(&self, ring: &FiniteRing, g: &Mat2, k: usize, i: usize) -> usize {
        let t = self.act_tuple(ring, g, self.bases[k].get(i));
        self.bases[k].index_of(&t).expect("the action preserves general position")
    }

    /// Action of `g` on a sparse chain of degree `k`.
    pub fn act_chain(&self, ring: &FiniteRing, g: &Mat2, k: usize, c: &SparseVec) -> SparseVec {
        let moved = c.iter().map(|&(i, x)| (self.act(ring, g, k, i as usize) as u32, x)).collect();
        crate::zlinalg::sparse::normalize(moved).expect("permutation keeps coefficients")
    }

    pub fn index(&self, t: &[u32]) -> Option<usize> {
        self.bases.get(t.len() - 1)?.index_of(t)
    }
}

pub fn build_y_complex(ring: &FiniteRing, units: &UnitData, max_degree: usize) -> Result<ChainComplexY> {
    ChainComplexY::build(ring, units, max_degree, DEFAULT_BASIS_CAP)
}
