use super::complex::ChainComplexY;
use crate::matgroup::Mat2;
use crate::ringkit::{additive_generators, Elem, FiniteRing, UnitData};
use crate::zlinalg::AbGroup;

/// Normal form of a 2- or 3-simplex under `E2(A)`.
///
/// Degree 2 tuples go to `(inf, 0, r)` with `r` the least member of a square
/// class; degree 3 tuples to `(inf, 0, r, r x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub class: usize,
    pub x: Option<Elem>,
    /// `transporter * tuple` is the normal form
    pub transporter: Mat2,
}

fn square_root(ring: &FiniteRing, units: &UnitData, s: Elem) -> Elem {
    *units
        .units
        .iter()
        .find(|&&c| ring.mul(c, c) == s)
        .expect("element of the square class of 1")
}

fn affine_coordinate(ring: &FiniteRing, units: &UnitData, v: (Elem, Elem)) -> Elem {
    let si = units.inv(v.0).expect("point in general position with 0");
    ring.mul(v.1, si)
}

/// Normal form of a tuple of 3 or 4 points in general position.
pub fn canonicalize_tuple(ring: &FiniteRing, units: &UnitData, y: &ChainComplexY, t: &[u32]) -> Canonical {
    assert!(t.len() == 3 || t.len() == 4, "normal forms exist in degrees 2 and 3");
    let pts = &y.points;
    let u = pts.rep(t[0]);
    let v = pts.rep(t[1]);
    let d = Mat2::new(u.0, v.0, u.1, v.1).det(ring);
    let di = units.inv(d).expect("first two points in general position");
    let h = Mat2::new(u.0, ring.mul(v.0, di), u.1, ring.mul(v.1, di));
    let hinv = h.inv(ring, units).expect("determinant one");
    let a = affine_coordinate(ring, units, hinv.apply(ring, pts.rep(t[2])));
    let class = units.class_of(a);
    let r = units.class_reps[class];
    let c = square_root(ring, units, ring.mul(a, units.inv(r).expect("unit")));
    let transporter = Mat2::diag(ring, units, c).mul(ring, &hinv);
    let x = (t.len() == 4).then(|| {
        let b = affine_coordinate(ring, units, transporter.apply(ring, pts.rep(t[3])));
        ring.mul(b, units.inv(r).expect("unit"))
    });
    Canonical { class, x, transporter }
}

/// Generators `E12(s)`, `E21(s)` for `s` in an additive generating set; they generate `E2(A)`.
pub fn small_generators(ring: &FiniteRing) -> Vec<Mat2> {
    let gens = additive_generators(ring);
    let mut out: Vec<Mat2> = gens.iter().map(|&s| Mat2::e12(ring, s)).collect();
    out.extend(gens.iter().map(|&s| Mat2::e21(ring, s)));
    out
}

/// `(Y_k)_{E2}` as orbits of the permutation basis.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub orbit_of: Vec<u32>,
    /// least basis index of each orbit
    pub reps: Vec<usize>,
}

impl Coinvariants {
    pub fn group(&self) -> AbGroup {
        AbGroup::free(self.reps.len())
    }

    pub fn orbit_count(&self) -> usize {
        self.reps.len()
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[parent[x as usize] as usize];
        parent[x as usize] = p;
        x = p;
    }
    x
}

pub fn y_coinvariants(ring: &FiniteRing, y: &ChainComplexY, k: usize) -> Coinvariants {
    let basis = y.basis(k);
    let n = basis.len();
    let point_perms: Vec<Vec<u32>> = small_generators(ring)
        .iter()
        .map(|g| (0..y.points.len() as u32).map(|p| y.points.act(ring, g, p)).collect())
        .collect();
    let mut parent: Vec<u32> = (0..n as u32).collect();
    let mut moved = vec![0u32; k + 1];
    for i in 0..n {
        let t = basis.get(i);
        for perm in &point_perms {
            for (m, &p) in moved.iter_mut().zip(t) {
                *m = perm[p as usize];
            }
            let j = basis.index_of(&moved).expect("action preserves the basis") as u32;
            let (a, b) = (find(&mut parent, i as u32), find(&mut parent, j));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    let mut orbit_of = vec![0u32; n];
    let mut reps = Vec::new();
    let mut label = vec![u32::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i as u32) as usize;
        if label[root] == u32::MAX {
            label[root] = reps.len() as u32;
            reps.push(i);
        }
        orbit_of[i] = label[root];
    }
    Coinvariants { orbit_of, reps }
}
