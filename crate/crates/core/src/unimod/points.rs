use crate::matgroup::Mat2;
use crate::ringkit::{Elem, FiniteRing, UnitData};

pub const NO_POINT: u32 = u32::MAX;

/// Projective line `P^1(A)`: scaling classes of unimodular vectors.
#[derive(Clone, Debug)]
pub struct ProjLine {
    n: usize,
    /// canonical representatives, sorted
    reps: Vec<(Elem, Elem)>,
    /// point index of every vector of `A^2`, or `NO_POINT`
    point_of: Vec<u32>,
    /// `general[i * len + j]`: representatives of points i and j have unit determinant
    general: Vec<bool>,
}

impl ProjLine {
    pub fn new(ring: &FiniteRing, units: &UnitData) -> Self {
        let n = ring.order();
        // multiples[y] = A y as a membership table
        let multiples: Vec<Vec<bool>> = ring
            .elements()
            .map(|y| {
                let mut m = vec![false; n];
                for a in ring.elements() {
                    m[ring.mul(a, y)] = true;
                }
                m
            })
            .collect();
        let unimodular = |x: Elem, y: Elem| -> bool {
            ring.elements()
                .any(|a| multiples[y][ring.sub(ring.one(), ring.mul(a, x))])
        };
        let mut canon: Vec<Option<(Elem, Elem)>> = vec![None; n * n];
        let mut reps = Vec::new();
        for x in ring.elements() {
            for y in ring.elements() {
                if canon[x * n + y].is_some() || !unimodular(x, y) {
                    continue;
                }
                let orbit: Vec<(Elem, Elem)> =
                    units.units.iter().map(|&l| (ring.mul(l, x), ring.mul(l, y))).collect();
                let rep = *orbit.iter().min().expect("units are nonempty");
                for &(a, b) in &orbit {
                    canon[a * n + b] = Some(rep);
                }
                reps.push(rep);
            }
        }
        reps.sort_unstable();
        reps.dedup();
        let mut point_of = vec![NO_POINT; n * n];
        for (v, c) in canon.iter().enumerate() {
            if let Some(rep) = c {
                point_of[v] = reps.binary_search(rep).expect("rep recorded") as u32;
            }
        }
        let len = reps.len();
        let mut general = vec![false; len * len];
        for i in 0..len {
            for j in 0..len {
                let m = Mat2::new(reps[i].0, reps[j].0, reps[i].1, reps[j].1);
                general[i * len + j] = units.is_unit(m.det(ring));
            }
        }
        ProjLine {
            n,
            reps,
            point_of,
            general,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, p: u32) -> (Elem, Elem) {
        self.reps[p as usize]
    }

    pub fn reps(&self) -> &[(Elem, Elem)] {
        &self.reps
    }

    /// Point of a unimodular vector.
    pub fn point(&self, v: (Elem, Elem)) -> u32 {
        let p = self.point_of[v.0 * self.n + v.1];
        assert!(p != NO_POINT, "vector is not unimodular");
        p
    }

    pub fn try_point(&self, v: (Elem, Elem)) -> Option<u32> {
        let p = self.point_of[v.0 * self.n + v.1];
        (p != NO_POINT).then_some(p)
    }

    pub fn in_general_position(&self, p: u32, q: u32) -> bool {
        self.general[p as usize * self.reps.len() + q as usize]
    }

    pub fn act(&self, ring: &FiniteRing, g: &Mat2, p: u32) -> u32 {
        self.point(g.apply(ring, self.rep(p)))
    }

    /// `infinity = <e1>`
    pub fn infinity(&self, ring: &FiniteRing) -> u32 {
        self.point((ring.one(), ring.zero()))
    }

    /// `0 = <e2>`
    pub fn zero_point(&self, ring: &FiniteRing) -> u32 {
        self.point((ring.zero(), ring.one()))
    }

    /// `a = <e1 + a e2>`
    pub fn affine(&self, ring: &FiniteRing, a: Elem) -> u32 {
        self.point((ring.one(), a))
    }
}

pub fn proj_points(ring: &FiniteRing, units: &UnitData) -> ProjLine {
    ProjLine::new(ring, units)
}
