use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matgroup::{GElem, GroupTable};
use crate::ringkit::FiniteRing;
use crate::unimod::ProjLine;

fn add_to<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    *map.entry(key).or_insert_with(BigInt::zero) += c;
}

fn prune<K: Ord + Clone>(map: &mut BTreeMap<K, BigInt>) {
    map.retain(|_, v| !v.is_zero());
}

/// Integer combination of bar tuples `[g1|...|gk]` in `B_k(G) (x)_G Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarChain {
    pub k: usize,
    terms: BTreeMap<Vec<GElem>, BigInt>,
}

impl BarChain {
    pub fn zero(k: usize) -> Self {
        BarChain {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(tuple: Vec<GElem>) -> Self {
        let mut c = BarChain::zero(tuple.len());
        c.add_term(tuple, 1);
        c
    }

    pub fn add_term(&mut self, tuple: Vec<GElem>, c: impl Into<BigInt>) {
        assert_eq!(tuple.len(), self.k, "bar degree mismatch");
        add_to(&mut self.terms, tuple, &c.into());
        prune(&mut self.terms);
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, other: &BarChain, s: impl Into<BigInt>) {
        assert_eq!(self.k, other.k, "bar degree mismatch");
        let s = s.into();
        for (t, c) in &other.terms {
            add_to(&mut self.terms, t.clone(), &(c * &s));
        }
        prune(&mut self.terms);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<GElem>, &BigInt)> {
        self.terms.iter()
    }

    /// Drops tuples with an identity entry; these span the degenerate subcomplex.
    pub fn normalized(&self, g: &GroupTable) -> BarChain {
        let e = g.identity();
        let mut out = self.clone();
        out.terms.retain(|t, _| !t.contains(&e));
        out
    }

    pub fn display(&self, g: &GroupTable) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let body: Vec<String> = t.iter().map(|&x| g.word_string(x)).collect();
            let sign = if c < &BigInt::zero() { "-" } else if i > 0 { "+" } else { "" };
            let mag = c.magnitude();
            let coef = if mag.is_one() { String::new() } else { mag.to_string() };
            out.push_str(&format!("{}{}{}[{}]", if i > 0 { " " } else { "" }, sign, coef, body.join("|")));
        }
        out
    }
}

impl fmt::Display for BarChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let body: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                format!("{c}[{}]", body.join("|"))
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Boundary in the normalized complex `B_*(G) (x)_G Z`. Degree one boundaries vanish
/// since both outer faces become the empty tuple.
pub fn bar_boundary(ring: &FiniteRing, g: &GroupTable, c: &BarChain) -> BarChain {
    let k = c.k;
    assert!(k >= 1, "bar boundary needs degree at least one");
    let mut out = BarChain::zero(k - 1);
    for (t, coef) in &c.normalized(g).terms {
        for i in 0..=k {
            let face: Vec<GElem> = if i == 0 {
                t[1..].to_vec()
            } else if i == k {
                t[..k - 1].to_vec()
            } else {
                let mut f = t[..i - 1].to_vec();
                f.push(g.mul(ring, t[i - 1], t[i]));
                f.extend_from_slice(&t[i + 1..]);
                f
            };
            let s = if i % 2 == 0 { coef.clone() } else { -coef.clone() };
            add_to(&mut out.terms, face, &s);
        }
    }
    prune(&mut out.terms);
    out.normalized(g)
}

pub fn verify_cycle(ring: &FiniteRing, g: &GroupTable, c: &BarChain) -> bool {
    bar_boundary(ring, g, c).is_zero()
}

/// Integer combination of `[g1|...|gk] (x) s` in `B_k(G) (x)_G Y_n`, with `s` a tuple of points.
///
/// The module `Y_n` is made a right module by `s.g = g^-1 s`, so a leading group
/// element moves across the tensor sign as its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorChain {
    pub k: usize,
    pub n: usize,
    terms: BTreeMap<(Vec<GElem>, Vec<u32>), BigInt>,
}

impl TensorChain {
    pub fn zero(k: usize, n: usize) -> Self {
        TensorChain {
            k,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, tuple: Vec<GElem>, simplex: Vec<u32>, c: impl Into<BigInt>) {
        assert_eq!(tuple.len(), self.k, "bar degree mismatch");
        assert_eq!(simplex.len(), self.n + 1, "simplex degree mismatch");
        add_to(&mut self.terms, (tuple, simplex), &c.into());
        prune(&mut self.terms);
    }

    /// `chain (x) s`
    pub fn from_bar(c: &BarChain, simplex: &[u32]) -> Self {
        let mut out = TensorChain::zero(c.k, simplex.len() - 1);
        for (t, coef) in c.terms() {
            out.add_term(t.clone(), simplex.to_vec(), coef.clone());
        }
        out
    }

    pub fn add_scaled(&mut self, other: &TensorChain, s: impl Into<BigInt>) {
        assert_eq!((self.k, self.n), (other.k, other.n), "degree mismatch");
        let s = s.into();
        for (key, c) in &other.terms {
            add_to(&mut self.terms, key.clone(), &(c * &s));
        }
        prune(&mut self.terms);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<GElem>, Vec<u32>), &BigInt)> {
        self.terms.iter()
    }

    /// Drops terms whose bar tuple has an identity entry.
    pub fn normalized(&self, g: &GroupTable) -> TensorChain {
        let e = g.identity();
        let mut out = self.clone();
        out.terms.retain(|(t, _), _| !t.contains(&e));
        out
    }

    /// Bar part of the boundary: `d (x) id`, in the normalized bar resolution.
    pub fn bar_boundary(&self, ring: &FiniteRing, g: &GroupTable, pts: &ProjLine) -> TensorChain {
        let k = self.k;
        assert!(k >= 1);
        let mut out = TensorChain::zero(k - 1, self.n);
        for ((t, s), coef) in &self.normalized(g).terms {
            let first_inv = g.matrix(g.inv(t[0]));
            let moved: Vec<u32> = s.iter().map(|&p| pts.act(ring, &first_inv, p)).collect();
            add_to(&mut out.terms, (t[1..].to_vec(), moved), coef);
            for i in 1..k {
                let mut f = t[..i - 1].to_vec();
                f.push(g.mul(ring, t[i - 1], t[i]));
                f.extend_from_slice(&t[i + 1..]);
                let c = if i % 2 == 0 { coef.clone() } else { -coef.clone() };
                add_to(&mut out.terms, (f, s.clone()), &c);
            }
            let c = if k % 2 == 0 { coef.clone() } else { -coef.clone() };
            add_to(&mut out.terms, (t[..k - 1].to_vec(), s.clone()), &c);
        }
        prune(&mut out.terms);
        out.normalized(g)
    }

    /// Simplicial part of the boundary: `id (x) d`.
    pub fn simplex_boundary(&self) -> TensorChain {
        assert!(self.n >= 1);
        let mut out = TensorChain::zero(self.k, self.n - 1);
        for ((t, s), coef) in &self.terms {
            for i in 0..=self.n {
                let mut face = s.clone();
                face.remove(i);
                let c = if i % 2 == 0 { coef.clone() } else { -coef.clone() };
                add_to(&mut out.terms, (t.clone(), face), &c);
            }
        }
        prune(&mut out.terms);
        out
    }

    /// Total boundary pieces `(d (x) id, (-1)^k id (x) d)`; either may be absent at the edges.
    pub fn total_boundary_parts(
        &self,
        ring: &FiniteRing,
        g: &GroupTable,
        pts: &ProjLine,
    ) -> (Option<TensorChain>, Option<TensorChain>) {
        let bar = (self.k >= 1).then(|| self.bar_boundary(ring, g, pts));
        let simp = (self.n >= 1).then(|| {
            let mut s = self.simplex_boundary();
            if self.k % 2 == 1 {
                let neg = s.clone();
                s = TensorChain::zero(s.k, s.n);
                s.add_scaled(&neg, -1);
            }
            s
        });
        (bar, simp)
    }

    /// `id (x) augmentation` on degree zero coefficients.
    pub fn augment(&self) -> BarChain {
        assert_eq!(self.n, 0);
        let mut out = BarChain::zero(self.k);
        for ((t, _), c) in &self.terms {
            add_to(&mut out.terms, t.clone(), c);
        }
        prune(&mut out.terms);
        out
    }

    /// The single degree zero bar tuple part, as a chain of simplices (for `k = 0`).
    pub fn coefficient_chain(&self) -> BTreeMap<Vec<u32>, BigInt> {
        assert_eq!(self.k, 0);
        self.terms.iter().map(|((_, s), c)| (s.clone(), c.clone())).collect()
    }
}
