use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::symsq::SymSq;
use crate::error::{Error, Result};
use crate::lab::Lab;
use crate::ringkit::Elem;
use crate::zlinalg::{AbGroup, Presentation, Quotient, SparseVec};

/// `RP-bar(A)`: symbols `<g>[x]`, `g` in `G_A` and `x` in `W_A`, modulo the translated
/// five-term relations. The symbol `<g>[x]` has index `g |W| + pos(x)`.
#[derive(Clone, Debug)]
pub struct RpBar {
    pub symbols: usize,
    /// untranslated relations, one per admissible pair
    pub relations: Vec<SparseVec>,
    pub quotient: Quotient,
    /// pairs `(a, b)` with `a, b, a/b` in `W` but some argument outside `W`
    pub skipped: usize,
}

impl RpBar {
    pub fn group(&self) -> &AbGroup {
        self.quotient.group()
    }
}

/// Symbol index of `<g>[x]`.
pub fn symbol_index(lab: &Lab, g: usize, x: Elem) -> Option<u32> {
    let p = lab.w.position(x)?;
    Some((g * lab.w.len() + p) as u32)
}

/// `(g, x)` of a symbol index.
pub fn symbol_of(lab: &Lab, s: u32) -> (usize, Elem) {
    let n = lab.w.len();
    (s as usize / n, lab.w.members[s as usize % n])
}

fn five_terms(lab: &Lab, a: Elem, b: Elem) -> Option<[(usize, Elem, i64); 5]> {
    let r = &lab.ring;
    let u = &lab.units;
    let one = r.one();
    let ai = u.inv(a)?;
    let bi = u.inv(b)?;
    let div = |x: Elem, y: Elem| u.inv(y).map(|yi| r.mul(x, yi));
    let terms = [
        (0, a, 1),
        (0, b, -1),
        (u.class_of(a), div(b, a)?, 1),
        (u.class_of(r.sub(ai, one)), div(r.sub(one, ai), r.sub(one, bi))?, -1),
        (u.class_of(r.sub(one, a)), div(r.sub(one, a), r.sub(one, b))?, 1),
    ];
    terms.iter().all(|t| lab.w.contains(t.1)).then_some(terms)
}

fn translate(lab: &Lab, g: usize, terms: &[(usize, Elem, i64)]) -> Result<SparseVec> {
    let v = terms
        .iter()
        .map(|&(h, x, c)| {
            let s = symbol_index(lab, lab.units.class_mul(&lab.ring, g, h), x).expect("checked argument");
            (s, c)
        })
        .collect();
    crate::zlinalg::sparse::normalize(v)
}

fn admissible(lab: &Lab, a: Elem, b: Elem) -> bool {
    let w = &lab.w;
    w.contains(a)
        && w.contains(b)
        && lab.units.inv(a).is_some_and(|ai| w.contains(lab.ring.mul(b, ai)))
}

/// The five-term relation for the pair `(a, b)` as a vector on symbols.
pub fn five_term_element(lab: &Lab, a: Elem, b: Elem) -> Result<SparseVec> {
    let r = &lab.ring;
    if !admissible(lab, a, b) {
        return Err(Error::Precondition(format!(
            "need {}, {} and their quotient in W",
            r.label(a),
            r.label(b)
        )));
    }
    let terms = five_terms(lab, a, b).ok_or_else(|| {
        Error::Precondition(format!("a five-term argument for ({}, {}) leaves W", r.label(a), r.label(b)))
    })?;
    translate(lab, 0, &terms)
}

pub fn rp_bar_presentation(lab: &Lab) -> Result<RpBar> {
    let n = lab.units.class_count();
    let symbols = n * lab.w.len();
    let mut p = Presentation::new(symbols);
    let mut relations = Vec::new();
    let mut skipped = 0;
    for &a in &lab.w.members {
        for &b in &lab.w.members {
            if !admissible(lab, a, b) {
                continue;
            }
            let Some(terms) = five_terms(lab, a, b) else {
                skipped += 1;
                continue;
            };
            relations.push(translate(lab, 0, &terms)?);
            for g in 0..n {
                p.push(translate(lab, g, &terms)?)?;
            }
        }
    }
    Ok(RpBar {
        symbols,
        relations,
        quotient: p.reduce(),
        skipped,
    })
}

/// `lambda-bar_1` and `lambda-bar_2` on every symbol.
#[derive(Clone, Debug)]
pub struct LambdaBar {
    /// `<g><<x>><<1-x>>` on the class basis of `Z[G_A]`
    pub lambda1: Vec<Vec<BigInt>>,
    /// `x (x) (1 - x)` in `S^2(A^x)`
    pub lambda2: Vec<Vec<BigInt>>,
    pub s2: AbGroup,
}

/// The Pfister-type product `<g><<x>><<y>>` in `Z[G_A]`.
pub fn class_product(lab: &Lab, g: usize, x: Elem, y: Elem) -> Vec<BigInt> {
    let r = &lab.ring;
    let u = &lab.units;
    let mut v = vec![BigInt::zero(); u.class_count()];
    for (z, c) in [(r.mul(x, y), 1), (x, -1), (y, -1), (r.one(), 1)] {
        v[u.class_mul(r, g, u.class_of(z))] += c;
    }
    v
}

pub fn lambda_bar_maps(lab: &Lab, sym: &SymSq) -> LambdaBar {
    let r = &lab.ring;
    let n = lab.units.class_count() * lab.w.len();
    let mut lambda1 = Vec::with_capacity(n);
    let mut lambda2 = Vec::with_capacity(n);
    for s in 0..n as u32 {
        let (g, x) = symbol_of(lab, s);
        let y = r.sub(r.one(), x);
        lambda1.push(class_product(lab, g, x, y));
        lambda2.push(sym.tensor(lab, x, y));
    }
    LambdaBar {
        lambda1,
        lambda2,
        s2: sym.s2_group().clone(),
    }
}

/// Applies a map given by its values on symbols to a sparse symbol vector.
pub fn apply(images: &[Vec<BigInt>], width: usize, v: &[(u32, BigInt)]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); width];
    for (s, c) in v {
        for (a, x) in acc.iter_mut().zip(&images[*s as usize]) {
            *a += c * x;
        }
    }
    acc
}

/// Whether both maps kill every translated five-term relation.
#[derive(Clone, Debug, Serialize)]
pub struct LambdaBarCheck {
    pub relations: usize,
    pub lambda1_kills: bool,
    pub lambda2_kills: bool,
}

pub fn check_lambda_bar(lab: &Lab, rp: &RpBar, lb: &LambdaBar) -> Result<LambdaBarCheck> {
    let n = lab.units.class_count();
    let mut l1 = true;
    let mut l2 = true;
    let mut count = 0;
    for &a in &lab.w.members {
        for &b in &lab.w.members {
            if !admissible(lab, a, b) {
                continue;
            }
            let Some(terms) = five_terms(lab, a, b) else { continue };
            for g in 0..n {
                let v = crate::zlinalg::sparse::to_big(&translate(lab, g, &terms)?);
                l1 &= apply(&lb.lambda1, n, &v).iter().all(Zero::is_zero);
                l2 &= lb.s2.is_zero_element(&apply(&lb.lambda2, lb.s2.ngens(), &v));
                count += 1;
            }
        }
    }
    debug_assert_eq!(count, rp.relations.len() * n);
    Ok(LambdaBarCheck {
        relations: count,
        lambda1_kills: l1,
        lambda2_kills: l2,
    })
}
