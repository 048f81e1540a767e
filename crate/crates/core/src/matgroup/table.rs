use std::collections::HashMap;

use super::mat2::Mat2;
use crate::error::{Error, Result};
use crate::ringkit::{FiniteRing, UnitData};

pub const DEFAULT_GROUP_CAP: usize = 50_000;

/// Index of an element in a [`GroupTable`].
pub type GElem = u32;

/// A finite group of 2x2 matrices enumerated by breadth-first closure.
///
/// In the projective case elements are classes `{g, -g}` represented by the
/// member with the smaller key.
#[derive(Clone, Debug)]
pub struct GroupTable {
    n: usize,
    elems: Vec<Mat2>,
    index: HashMap<u64, GElem>,
    inverse: Vec<GElem>,
    generators: Vec<Mat2>,
    gen_labels: Vec<String>,
    /// element = parent * generator; the identity points to itself
    parent: Vec<(GElem, u32)>,
    projective: bool,
    identity: GElem,
}

impl GroupTable {
    pub fn generate(
        ring: &FiniteRing,
        units: &UnitData,
        generators: Vec<(String, Mat2)>,
        cap: usize,
    ) -> Result<Self> {
        Self::generate_inner(ring, units, generators, cap, false)
    }

    /// Closure in `GL2(A)/{+-1}`.
    pub fn generate_projective(
        ring: &FiniteRing,
        units: &UnitData,
        generators: Vec<(String, Mat2)>,
        cap: usize,
    ) -> Result<Self> {
        Self::generate_inner(ring, units, generators, cap, true)
    }

    fn generate_inner(
        ring: &FiniteRing,
        units: &UnitData,
        generators: Vec<(String, Mat2)>,
        cap: usize,
        projective: bool,
    ) -> Result<Self> {
        let n = ring.order();
        for (l, g) in &generators {
            if units.inv(g.det(ring)).is_none() {
                return Err(Error::Precondition(format!("generator {l} is not invertible")));
            }
        }
        let norm = |m: Mat2| -> Mat2 {
            if projective {
                let m2 = m.neg(ring);
                if m2.key(n) < m.key(n) {
                    return m2;
                }
            }
            m
        };
        let (gen_labels, gens): (Vec<String>, Vec<Mat2>) =
            generators.into_iter().map(|(l, g)| (l, norm(g))).unzip();
        let id = norm(Mat2::identity(ring));
        let mut elems = vec![id];
        let mut index = HashMap::new();
        index.insert(id.key(n), 0);
        let mut parent = vec![(0, u32::MAX)];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for (s, g) in gens.iter().enumerate() {
                let y = norm(x.mul(ring, g));
                let k = y.key(n);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                    if elems.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "group closure",
                            size: elems.len() + 1,
                            cap,
                        });
                    }
                    e.insert(elems.len() as GElem);
                    elems.push(y);
                    parent.push((i as GElem, s as u32));
                }
            }
            i += 1;
        }
        let inverse = elems
            .iter()
            .map(|m| {
                let mi = norm(m.inv(ring, units).expect("closure of invertible matrices"));
                index[&mi.key(n)]
            })
            .collect();
        Ok(GroupTable {
            n,
            elems,
            index,
            inverse,
            generators: gens,
            gen_labels,
            parent,
            projective,
            identity: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    pub fn identity(&self) -> GElem {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = GElem> {
        0..self.elems.len() as GElem
    }

    pub fn matrix(&self, g: GElem) -> Mat2 {
        self.elems[g as usize]
    }

    pub fn generators(&self) -> &[Mat2] {
        &self.generators
    }

    pub fn generator_elems(&self) -> Vec<GElem> {
        self.generators.iter().map(|g| self.index[&g.key(self.n)]).collect()
    }

    pub fn generator_label(&self, s: usize) -> &str {
        &self.gen_labels[s]
    }

    fn normalize(&self, ring: &FiniteRing, m: Mat2) -> Mat2 {
        if self.projective {
            let m2 = m.neg(ring);
            if m2.key(self.n) < m.key(self.n) {
                return m2;
            }
        }
        m
    }

    /// Index of a matrix, if it belongs to the group.
    pub fn find(&self, ring: &FiniteRing, m: &Mat2) -> Option<GElem> {
        let m = self.normalize(ring, *m);
        self.index.get(&m.key(self.n)).copied()
    }

    pub fn contains(&self, ring: &FiniteRing, m: &Mat2) -> bool {
        self.find(ring, m).is_some()
    }

    /// Like [`find`](Self::find) for matrices that must be present.
    pub fn get(&self, ring: &FiniteRing, m: &Mat2) -> GElem {
        self.find(ring, m)
            .unwrap_or_else(|| panic!("matrix {} is not in the group", m.label(ring)))
    }

    pub fn mul(&self, ring: &FiniteRing, a: GElem, b: GElem) -> GElem {
        let m = self.elems[a as usize].mul(ring, &self.elems[b as usize]);
        self.get(ring, &m)
    }

    pub fn inv(&self, g: GElem) -> GElem {
        self.inverse[g as usize]
    }

    pub fn pow(&self, ring: &FiniteRing, g: GElem, mut e: u64) -> GElem {
        let mut acc = self.identity;
        let mut base = g;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(ring, acc, base);
            }
            base = self.mul(ring, base, base);
            e >>= 1;
        }
        acc
    }

    pub fn commutator(&self, ring: &FiniteRing, a: GElem, b: GElem) -> GElem {
        let ab = self.mul(ring, a, b);
        let ai_bi = self.mul(ring, self.inv(a), self.inv(b));
        self.mul(ring, ab, ai_bi)
    }

    /// Generator indices whose product, left to right, is the element.
    pub fn word(&self, g: GElem) -> Vec<usize> {
        let mut out = Vec::new();
        let mut x = g;
        while x != self.identity {
            let (p, s) = self.parent[x as usize];
            out.push(s as usize);
            x = p;
        }
        out.reverse();
        out
    }

    /// The word of an element with runs collapsed, e.g. `E12(1)^2 E21(2)`; `1` for the identity.
    pub fn word_string(&self, g: GElem) -> String {
        let w = self.word(g);
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let l = &self.gen_labels[w[i]];
            parts.push(if j - i == 1 {
                l.clone()
            } else {
                format!("{l}^{}", j - i)
            });
            i = j;
        }
        parts.join(" ")
    }

    /// Set equality of the underlying matrix sets.
    pub fn same_elements(&self, other: &GroupTable) -> bool {
        self.len() == other.len() && self.elems.iter().all(|m| other.index.contains_key(&m.key(self.n)))
    }
}

/// `E2(A)`: the closure of all `E12(x)`, `E21(x)`.
pub fn elementary_group(ring: &FiniteRing, units: &UnitData, cap: usize) -> Result<GroupTable> {
    GroupTable::generate(ring, units, elementary_generators(ring), cap)
}

pub fn elementary_generators(ring: &FiniteRing) -> Vec<(String, Mat2)> {
    let mut gens = Vec::new();
    for x in ring.elements().filter(|&x| x != ring.zero()) {
        gens.push((format!("E12({})", ring.label(x)), Mat2::e12(ring, x)));
    }
    for x in ring.elements().filter(|&x| x != ring.zero()) {
        gens.push((format!("E21({})", ring.label(x)), Mat2::e21(ring, x)));
    }
    gens
}

/// Closure with the given generators, for callers that already hold the ring data.
pub fn generate_closure(
    ring: &FiniteRing,
    units: &UnitData,
    generators: Vec<(String, Mat2)>,
    cap: usize,
) -> Result<GroupTable> {
    GroupTable::generate(ring, units, generators, cap)
}

/// Number of determinant-one matrices, by filtering all of `M2(A)`.
pub fn sl2_by_filter(ring: &FiniteRing) -> Vec<Mat2> {
    let mut out = Vec::new();
    let one = ring.one();
    for a in ring.elements() {
        for b in ring.elements() {
            for c in ring.elements() {
                let bc = ring.mul(b, c);
                for d in ring.elements() {
                    if ring.sub(ring.mul(a, d), bc) == one {
                        out.push(Mat2::new(a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

/// `SL2(A)` by filtering, `E2(A)` by closure, and whether they coincide.
pub fn sl2_and_e2(ring: &FiniteRing, units: &UnitData, cap: usize) -> Result<(Vec<Mat2>, GroupTable, bool)> {
    let e2 = elementary_group(ring, units, cap)?;
    let sl2 = sl2_by_filter(ring);
    let equal = sl2.len() == e2.len() && sl2.iter().all(|m| e2.contains(ring, m));
    Ok((sl2, e2, equal))
}

/// `PE2(A) = E2(A)/{+-1}`.
pub fn central_quotient(ring: &FiniteRing, units: &UnitData, cap: usize) -> Result<GroupTable> {
    GroupTable::generate_projective(ring, units, elementary_generators(ring), cap)
}
