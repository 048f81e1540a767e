//! Per-ring context: the ring together with lazily computed groups, complexes
//! and quotients that several computations share.

use once_cell::sync::OnceCell;

use crate::error::Result;
use crate::matgroup::{
    abelianization, elementary_group, standard_subgroups, Abelianization, GElem, GroupTable, Mat2,
    StandardSubgroups, DEFAULT_GROUP_CAP,
};
use crate::ringkit::{
    a_lower, build_ring, parse_ring_spec, unit_data, AddQuotient, Elem, FiniteRing, UnitData, WSet,
    DEFAULT_RING_CAP,
};
use crate::unimod::{ChainComplexY, DEFAULT_BASIS_CAP, MAX_DEGREE};
use crate::zlinalg::{direct_sum_presentation, Quotient, TableGroup};

/// Size limits for one ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub ring: usize,
    pub group: usize,
    pub basis: usize,
    pub degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring: DEFAULT_RING_CAP,
            group: DEFAULT_GROUP_CAP,
            basis: DEFAULT_BASIS_CAP,
            degree: MAX_DEGREE,
        }
    }
}

#[derive(Debug)]
pub struct Lab {
    pub ring: FiniteRing,
    pub units: UnitData,
    pub w: WSet,
    pub caps: Caps,
    e2: OnceCell<GroupTable>,
    e2_ab: OnceCell<Abelianization>,
    std: OnceCell<StandardSubgroups>,
    b_ab: OnceCell<Abelianization>,
    complex: OnceCell<ChainComplexY>,
    a_lower: OnceCell<AddQuotient>,
    classes: OnceCell<TableGroup>,
    unit_coords: OnceCell<TableGroup>,
    sum: OnceCell<Quotient>,
}

impl Lab {
    pub fn new(ring: FiniteRing, caps: Caps) -> Self {
        let units = unit_data(&ring);
        let w = WSet::new(&ring, &units);
        Lab {
            ring,
            units,
            w,
            caps,
            e2: OnceCell::new(),
            e2_ab: OnceCell::new(),
            std: OnceCell::new(),
            b_ab: OnceCell::new(),
            complex: OnceCell::new(),
            a_lower: OnceCell::new(),
            classes: OnceCell::new(),
            unit_coords: OnceCell::new(),
            sum: OnceCell::new(),
        }
    }

    pub fn from_spec(spec: &str, caps: Caps) -> Result<Self> {
        let spec = parse_ring_spec(spec)?;
        let ring = FiniteRing::build_with_cap(&spec, caps.ring)?;
        Ok(Lab::new(ring, caps))
    }

    pub fn from_spec_default(spec: &str) -> Result<Self> {
        Ok(Lab::new(build_ring(&parse_ring_spec(spec)?)?, Caps::default()))
    }

    pub fn label(&self) -> String {
        self.ring.spec().to_string()
    }

    pub fn e2(&self) -> Result<&GroupTable> {
        self.e2
            .get_or_try_init(|| elementary_group(&self.ring, &self.units, self.caps.group))
    }

    pub fn e2_ab(&self) -> Result<&Abelianization> {
        self.e2_ab
            .get_or_try_init(|| abelianization(&self.ring, self.e2()?))
    }

    pub fn standard(&self) -> Result<&StandardSubgroups> {
        self.std
            .get_or_try_init(|| standard_subgroups(&self.ring, &self.units, self.caps.group))
    }

    pub fn b_ab(&self) -> Result<&Abelianization> {
        self.b_ab
            .get_or_try_init(|| abelianization(&self.ring, &self.standard()?.b))
    }

    /// The complex up to the largest degree within the caps.
    pub fn complex(&self) -> Result<&ChainComplexY> {
        self.complex.get_or_try_init(|| {
            ChainComplexY::build_truncated(&self.ring, &self.units, self.caps.degree, self.caps.basis)
        })
    }

    /// The complex, failing unless degree `k` is available.
    pub fn complex_to(&self, k: usize) -> Result<&ChainComplexY> {
        let y = self.complex()?;
        y.require(k, self.caps.basis)?;
        Ok(y)
    }

    pub fn a_lower(&self) -> &AddQuotient {
        self.a_lower.get_or_init(|| a_lower(&self.ring, &self.units))
    }

    /// `G_A` with coordinates of each square class.
    pub fn classes(&self) -> &TableGroup {
        self.classes.get_or_init(|| {
            let n = self.units.class_count();
            let gens: Vec<usize> = (0..n).collect();
            TableGroup::new(n, 0, &gens, |c, d| self.units.class_mul(&self.ring, c, d))
        })
    }

    /// `A^x` with coordinates; elements indexed by position in `units.units`.
    pub fn unit_coords(&self) -> &TableGroup {
        self.unit_coords.get_or_init(|| {
            let us = &self.units.units;
            let pos = |x: Elem| us.binary_search(&x).expect("unit");
            let gens: Vec<usize> = (0..us.len()).collect();
            TableGroup::new(us.len(), pos(self.ring.one()), &gens, |i, j| {
                pos(self.ring.mul(us[i], us[j]))
            })
        })
    }

    /// `G_A + A_{A^x}`, presented on the concatenated coordinates of both summands.
    pub fn class_plus_lower(&self) -> &Quotient {
        self.sum
            .get_or_init(|| direct_sum_presentation(&[&self.classes().group, &self.a_lower().group]))
    }

    pub fn unit_index(&self, u: Elem) -> usize {
        self.units.units.binary_search(&u).expect("unit")
    }

    pub fn two_is_unit(&self) -> bool {
        self.units.is_unit(self.ring.from_int(2))
    }

    pub fn inv(&self, u: Elem) -> Elem {
        self.units.inv(u).expect("unit")
    }

    /// Index of a matrix in `E2(A)`.
    pub fn e2_elem(&self, m: &Mat2) -> Result<GElem> {
        let e2 = self.e2()?;
        e2.find(&self.ring, m).ok_or_else(|| {
            crate::Error::CheckFailed(format!("{} is not in E2", m.label(&self.ring)))
        })
    }

    pub fn d(&self, a: Elem) -> Mat2 {
        Mat2::diag(&self.ring, &self.units, a)
    }

    pub fn g(&self, z: Elem) -> Mat2 {
        Mat2::g(&self.ring, z)
    }

    pub fn h(&self, z: Elem) -> Mat2 {
        Mat2::h(&self.ring, &self.units, z)
    }

    pub fn w_mat(&self) -> Mat2 {
        Mat2::w(&self.ring)
    }

    pub fn mat_inv(&self, m: &Mat2) -> Mat2 {
        m.inv(&self.ring, &self.units).expect("invertible")
    }

    pub fn mat_mul(&self, ms: &[Mat2]) -> Mat2 {
        ms.iter()
            .fold(Mat2::identity(&self.ring), |acc, m| acc.mul(&self.ring, m))
    }
}
