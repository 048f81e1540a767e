use std::fmt;

use super::spec::{Atom, RingSpec};
use crate::error::{Error, Result};

pub const DEFAULT_RING_CAP: usize = 4096;
/// Tables store identifiers as `u16`.
const HARD_LIMIT: usize = 1 << 16;

/// Element identifier, dense in `0..n`.
pub type Elem = usize;

/// Finite commutative ring given by addition and multiplication tables.
#[derive(Clone)]
pub struct FiniteRing {
    spec: RingSpec,
    n: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    one: Elem,
    labels: Vec<String>,
    /// component sizes, most significant first
    radix: Vec<usize>,
}

struct Component {
    n: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    labels: Vec<String>,
}

fn digits(mut x: usize, p: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(c: &[usize], p: usize) -> usize {
    c.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Product of polynomials over F_p given as coefficient vectors (low degree first).
fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `f`.
fn poly_rem(mut a: Vec<usize>, f: &[usize], p: usize) -> Vec<usize> {
    let d = f.len() - 1;
    while a.len() > d {
        let lead = a.pop().expect("nonempty");
        if lead == 0 {
            continue;
        }
        let shift = a.len() - d;
        for (i, &c) in f[..d].iter().enumerate() {
            a[shift + i] = (a[shift + i] + (p - lead) * c) % p;
        }
    }
    a.resize(d, 0);
    a
}

/// Monic polynomial of degree `d` with lower coefficients given by the base-`p` digits of `code`.
fn monic(code: usize, p: usize, d: usize) -> Vec<usize> {
    let mut f = digits(code, p, d);
    f.push(1);
    f
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let d = f.len() - 1;
    for e in 1..=d / 2 {
        for code in 0..p.pow(e as u32) {
            let g = monic(code, p, e);
            if poly_rem(f.to_vec(), &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Monic irreducible of degree `d` over F_p whose lower coefficient vector,
/// read as a base-`p` number, is least.
pub fn least_irreducible(p: usize, d: usize) -> Vec<usize> {
    (0..p.pow(d as u32))
        .map(|code| monic(code, p, d))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

fn poly_label(c: &[usize]) -> String {
    if c.len() == 1 {
        return c[0].to_string();
    }
    let mut terms = Vec::new();
    for (i, &x) in c.iter().enumerate().rev() {
        if x == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        terms.push(match (x, i) {
            (_, 0) => x.to_string(),
            (1, _) => mono,
            _ => format!("{x}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn polynomial_component(p: usize, len: usize, reduce: impl Fn(Vec<usize>) -> Vec<usize>) -> Component {
    let n = p.pow(len as u32);
    let elems: Vec<Vec<usize>> = (0..n).map(|x| digits(x, p, len)).collect();
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            let s: Vec<usize> = elems[x].iter().zip(&elems[y]).map(|(a, b)| (a + b) % p).collect();
            add[x * n + y] = undigits(&s, p) as u16;
            let m = reduce(poly_mul(&elems[x], &elems[y], p));
            mul[x * n + y] = undigits(&m, p) as u16;
        }
    }
    let labels = elems.iter().map(|c| poly_label(c)).collect();
    Component { n, add, mul, labels }
}

fn component(atom: &Atom) -> Component {
    match *atom {
        Atom::Modular(n) => {
            let n = n as usize;
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            for x in 0..n {
                for y in 0..n {
                    add[x * n + y] = ((x + y) % n) as u16;
                    mul[x * n + y] = ((x * y) % n) as u16;
                }
            }
            Component {
                n,
                add,
                mul,
                labels: (0..n).map(|x| x.to_string()).collect(),
            }
        }
        Atom::Field { p, d } => {
            let (p, d) = (p as usize, d as usize);
            let f = least_irreducible(p, d);
            polynomial_component(p, d, |prod| poly_rem(prod, &f, p))
        }
        Atom::Truncated { p, k } => {
            let (p, k) = (p as usize, k as usize);
            polynomial_component(p, k, |mut prod| {
                prod.resize(k.max(prod.len()), 0);
                prod.truncate(k);
                prod
            })
        }
    }
}

impl FiniteRing {
    pub fn build(spec: &RingSpec) -> Result<Self> {
        Self::build_with_cap(spec, DEFAULT_RING_CAP)
    }

    pub fn build_with_cap(spec: &RingSpec, cap: usize) -> Result<Self> {
        let size = spec.order().map(|o| o as usize).unwrap_or(usize::MAX);
        let cap = cap.min(HARD_LIMIT);
        if size > cap {
            return Err(Error::CapExceeded {
                what: "ring",
                size,
                cap,
            });
        }
        let comps: Vec<Component> = spec.atoms.iter().map(component).collect();
        let radix: Vec<usize> = comps.iter().map(|c| c.n).collect();
        let n = size;
        let split = |mut x: usize| -> Vec<usize> {
            let mut out = vec![0; radix.len()];
            for (i, r) in radix.iter().enumerate().rev() {
                out[i] = x % r;
                x /= r;
            }
            out
        };
        let join = |parts: &[usize]| -> usize { parts.iter().zip(&radix).fold(0, |acc, (x, r)| acc * r + x) };
        let parts: Vec<Vec<usize>> = (0..n).map(split).collect();
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let mut buf_a = vec![0; radix.len()];
        let mut buf_m = vec![0; radix.len()];
        for x in 0..n {
            for y in 0..n {
                for (i, c) in comps.iter().enumerate() {
                    let (a, b) = (parts[x][i], parts[y][i]);
                    buf_a[i] = c.add[a * c.n + b] as usize;
                    buf_m[i] = c.mul[a * c.n + b] as usize;
                }
                add[x * n + y] = join(&buf_a) as u16;
                mul[x * n + y] = join(&buf_m) as u16;
            }
        }
        let zero = 0;
        let one = join(&vec![1; radix.len()]);
        let neg = (0..n)
            .map(|x| (0..n).find(|&y| add[x * n + y] as usize == zero).expect("additive inverse") as u16)
            .collect();
        let labels = (0..n)
            .map(|x| {
                if comps.len() == 1 {
                    comps[0].labels[x].clone()
                } else {
                    let l: Vec<&str> = parts[x].iter().zip(&comps).map(|(&a, c)| c.labels[a].as_str()).collect();
                    format!("({})", l.join(","))
                }
            })
            .collect();
        Ok(FiniteRing {
            spec: spec.clone(),
            n,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            radix,
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x * self.n + y] as Elem
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x * self.n + y] as Elem
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x] as Elem
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    /// `k * 1` for an integer `k`.
    pub fn from_int(&self, k: i64) -> Elem {
        let mut acc = self.zero;
        for _ in 0..k.unsigned_abs() {
            acc = self.add(acc, self.one);
        }
        if k < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    /// `k * x` for an integer `k`.
    pub fn scale(&self, k: i64, x: Elem) -> Elem {
        self.mul(self.from_int(k), x)
    }

    pub fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Additive order of one.
    pub fn characteristic(&self) -> usize {
        let mut k = 1;
        let mut acc = self.one;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    /// Element with the given label, if any.
    pub fn parse_elem(&self, label: &str) -> Option<Elem> {
        let l = label.replace(' ', "");
        self.labels.iter().position(|s| *s == l)
    }

    /// Component sizes of the product, most significant first.
    pub fn component_sizes(&self) -> &[usize] {
        &self.radix
    }

    /// Exhaustive check of the commutative ring axioms.
    pub fn check_axioms(&self) -> bool {
        let n = self.n;
        if self.zero == self.one {
            return false;
        }
        for x in 0..n {
            if self.add(x, self.zero) != x || self.mul(x, self.one) != x || self.add(x, self.neg(x)) != self.zero {
                return false;
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) || self.mul(x, y) != self.mul(y, x) {
                    return false;
                }
                for z in 0..n {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z))
                        || self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z))
                        || self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.spec, self.n)
    }
}

pub fn build_ring(spec: &RingSpec) -> Result<FiniteRing> {
    FiniteRing::build(spec)
}

/// Brute-force ring isomorphism search; returns the image of each element of `a`.
/// Images are fixed on a greedy additive generating set, so this is only meant for small rings.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<Elem>> {
    if a.order() != b.order() {
        return None;
    }
    let gens = super::additive::additive_generators(a);
    let words = super::additive::additive_words(a, &gens);
    let n = b.order();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let map: Vec<Elem> = words
            .iter()
            .map(|w| {
                w.iter()
                    .zip(&choice)
                    .fold(b.zero(), |acc, (&k, &img)| b.add(acc, b.scale(k as i64, img)))
            })
            .collect();
        let bijective = {
            let mut seen = vec![false; n];
            map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        };
        if bijective
            && map[a.one()] == b.one()
            && a.elements().all(|x| {
                a.elements().all(|y| {
                    map[a.add(x, y)] == b.add(map[x], map[y]) && map[a.mul(x, y)] == b.mul(map[x], map[y])
                })
            })
        {
            return Some(map);
        }
        // next tuple
        let mut i = 0;
        loop {
            if i == choice.len() {
                return None;
            }
            choice[i] += 1;
            if choice[i] < n {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringkit::parse_ring_spec;

    fn ring(s: &str) -> FiniteRing {
        build_ring(&parse_ring_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn modular_arithmetic() {
        let r = ring("Z/4");
        assert_eq!(r.order(), 4);
        assert_eq!(r.add(2, 3), 1);
        assert_eq!(r.mul(2, 2), 0);
        assert!(r.check_axioms());
    }

    #[test]
    fn truncated_polynomials() {
        let r = ring("F2[t]/t^2");
        let t = r.parse_elem("t").unwrap();
        let one_plus_t = r.parse_elem("t+1").unwrap();
        assert_eq!(r.mul(t, t), r.zero());
        assert_eq!(r.mul(one_plus_t, one_plus_t), r.one());
        assert!(r.check_axioms());
    }

    #[test]
    fn field_modulus_choice() {
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(least_irreducible(2, 3), vec![1, 1, 0, 1]);
        for q in ["GF(4)", "GF(8)", "GF(9)", "GF(25)"] {
            let r = ring(q);
            let nonzero_invertible = r
                .elements()
                .filter(|&x| x != r.zero())
                .all(|x| r.elements().any(|y| r.mul(x, y) == r.one()));
            assert!(nonzero_invertible, "{q}");
        }
    }

    #[test]
    fn product_is_isomorphic_to_crt() {
        let a = ring("Z/2 x Z/3");
        let b = ring("Z/6");
        assert_eq!(a.order(), 6);
        assert!(a.check_axioms());
        assert!(find_isomorphism(&a, &b).is_some());
        assert!(find_isomorphism(&ring("Z/4"), &ring("Z/2 x Z/2")).is_none());
        assert!(find_isomorphism(&ring("Z/4"), &ring("F2[t]/t^2")).is_none());
    }

    #[test]
    fn cap_is_enforced() {
        let spec = parse_ring_spec("GF(64) x GF(64) x Z/2").unwrap();
        assert!(matches!(build_ring(&spec), Err(Error::CapExceeded { .. })));
    }
}
