use crate::ringkit::{Elem, FiniteRing, UnitData};

/// 2x2 matrix `[[a, b], [c, d]]` over a fixed ring, stored as element identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2(pub [Elem; 4]);

impl Mat2 {
    pub fn new(a: Elem, b: Elem, c: Elem, d: Elem) -> Self {
        Mat2([a, b, c, d])
    }

    pub fn identity(r: &FiniteRing) -> Self {
        Mat2::new(r.one(), r.zero(), r.zero(), r.one())
    }

    pub fn minus_identity(r: &FiniteRing) -> Self {
        let m = r.neg(r.one());
        Mat2::new(m, r.zero(), r.zero(), m)
    }

    /// `E12(x) = [[1, x], [0, 1]]`
    pub fn e12(r: &FiniteRing, x: Elem) -> Self {
        Mat2::new(r.one(), x, r.zero(), r.one())
    }

    /// `E21(x) = [[1, 0], [x, 1]]`
    pub fn e21(r: &FiniteRing, x: Elem) -> Self {
        Mat2::new(r.one(), r.zero(), x, r.one())
    }

    /// `D(a) = diag(a, a^-1)`
    pub fn diag(r: &FiniteRing, u: &UnitData, a: Elem) -> Self {
        Mat2::new(a, r.zero(), r.zero(), u.inv(a).expect("D(a) needs a unit"))
    }

    /// `w = [[0, 1], [-1, 0]]`
    pub fn w(r: &FiniteRing) -> Self {
        Mat2::new(r.zero(), r.one(), r.neg(r.one()), r.zero())
    }

    /// `g_z = [[0, 1], [-1, z]]`
    pub fn g(r: &FiniteRing, z: Elem) -> Self {
        Mat2::new(r.zero(), r.one(), r.neg(r.one()), z)
    }

    /// `h_z = [[1, z^-1], [0, 1]]`
    pub fn h(r: &FiniteRing, u: &UnitData, z: Elem) -> Self {
        Mat2::e12(r, u.inv(z).expect("h_z needs a unit"))
    }

    pub fn mul(&self, r: &FiniteRing, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Mat2::new(
            r.add(r.mul(a, e), r.mul(b, g)),
            r.add(r.mul(a, f), r.mul(b, h)),
            r.add(r.mul(c, e), r.mul(d, g)),
            r.add(r.mul(c, f), r.mul(d, h)),
        )
    }

    pub fn det(&self, r: &FiniteRing) -> Elem {
        let [a, b, c, d] = self.0;
        r.sub(r.mul(a, d), r.mul(b, c))
    }

    pub fn inv(&self, r: &FiniteRing, u: &UnitData) -> Option<Mat2> {
        let di = u.inv(self.det(r))?;
        let [a, b, c, d] = self.0;
        Some(Mat2::new(
            r.mul(d, di),
            r.mul(r.neg(b), di),
            r.mul(r.neg(c), di),
            r.mul(a, di),
        ))
    }

    pub fn neg(&self, r: &FiniteRing) -> Mat2 {
        Mat2(self.0.map(|x| r.neg(x)))
    }

    pub fn apply(&self, r: &FiniteRing, v: (Elem, Elem)) -> (Elem, Elem) {
        let [a, b, c, d] = self.0;
        (r.add(r.mul(a, v.0), r.mul(b, v.1)), r.add(r.mul(c, v.0), r.mul(d, v.1)))
    }

    pub fn key(&self, n: usize) -> u64 {
        let n = n as u64;
        self.0.iter().fold(0u64, |acc, &x| acc * n + x as u64)
    }

    pub fn label(&self, r: &FiniteRing) -> String {
        let [a, b, c, d] = self.0;
        format!("[[{}, {}], [{}, {}]]", r.label(a), r.label(b), r.label(c), r.label(d))
    }
}
