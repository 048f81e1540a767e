use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::matrix::IntMatrix;
use super::smith::{kernel_basis, smith_normal_form_with, Transforms};
use super::sparse::{reduce_mod, Presentation, Quotient};

/// Finitely generated abelian group `Z/d_1 + ... + Z/d_k`, `d_1 | d_2 | ...`,
/// with `d_i = 0` standing for a free summand. Factors equal to one are dropped.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AbGroup {
    invariants: Vec<BigInt>,
}

impl AbGroup {
    pub fn trivial() -> Self {
        AbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbGroup {
            invariants: vec![BigInt::zero(); rank],
        }
    }

    pub fn cyclic(n: u64) -> Self {
        AbGroup::from_invariants([BigInt::from(n)])
    }

    /// Normalizes an arbitrary list of cyclic orders (`0` = infinite cyclic).
    pub fn from_invariants<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        let (free, orders): (Vec<BigInt>, Vec<BigInt>) =
            orders.into_iter().filter(|d| !d.is_one()).map(|d| d.abs()).partition(Zero::is_zero);
        let mut m = IntMatrix::zeros(orders.len(), orders.len());
        for (i, d) in orders.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        let mut diagonal = smith_normal_form_with(&m, Transforms::NONE).diagonal;
        diagonal.retain(|d| !d.is_zero());
        diagonal.extend(free);
        AbGroup::from_sorted_invariants(diagonal)
    }

    pub fn from_small(orders: &[u64]) -> Self {
        AbGroup::from_invariants(orders.iter().map(|&d| BigInt::from(d)))
    }

    /// Trusts the caller that the list is already a divisibility chain with zeros last.
    pub(crate) fn from_sorted_invariants(invariants: Vec<BigInt>) -> Self {
        let invariants: Vec<BigInt> = invariants.into_iter().filter(|d| !d.is_one()).collect();
        debug_assert!(invariants
            .windows(2)
            .all(|w| w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero())));
        AbGroup { invariants }
    }

    /// Structure of a finite abelian group of the given order from the
    /// function `m -> #{x : m x = 0}`, evaluated at prime powers dividing the order.
    pub fn from_torsion_counts(order: u64, killed_by: impl Fn(u64) -> u64) -> Self {
        assert!(order >= 1);
        let mut per_prime: Vec<Vec<u64>> = Vec::new();
        for (p, e) in factorize(order) {
            let mut prev_log = 0u32;
            let mut at_least = Vec::new();
            for k in 1..=e {
                let c = killed_by(p.pow(k));
                let log = exact_log(c, p).expect("torsion count is a power of the prime");
                at_least.push(log - prev_log);
                prev_log = log;
            }
            // at_least[k-1] = number of cyclic p-parts of exponent >= k
            let parts = at_least.first().copied().unwrap_or(0) as usize;
            let mut exps = vec![0u32; parts];
            for (k, &cnt) in at_least.iter().enumerate() {
                for x in exps.iter_mut().take(cnt as usize) {
                    *x = k as u32 + 1;
                }
            }
            per_prime.push(exps.into_iter().map(|x| p.pow(x)).collect());
        }
        let width = per_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut inv = vec![1u64; width];
        for parts in &per_prime {
            for (j, q) in parts.iter().enumerate() {
                inv[j] *= q;
            }
        }
        inv.reverse();
        AbGroup::from_sorted_invariants(inv.into_iter().map(BigInt::from).collect())
    }

    pub fn invariants(&self) -> &[BigInt] {
        &self.invariants
    }

    pub fn invariants_i64(&self) -> Vec<i64> {
        self.invariants
            .iter()
            .map(|d| d.to_i64().expect("invariant factor fits in i64"))
            .collect()
    }

    /// Number of canonical coordinates.
    pub fn ngens(&self) -> usize {
        self.invariants.len()
    }

    pub fn free_rank(&self) -> usize {
        self.invariants.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion(&self) -> AbGroup {
        AbGroup {
            invariants: self.invariants.iter().filter(|d| !d.is_zero()).cloned().collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariants.iter().fold(BigInt::one(), |a, d| a * d))
    }

    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        AbGroup::from_invariants(self.invariants.iter().chain(&other.invariants).cloned())
    }

    /// Reduces coordinates modulo the invariant factors.
    pub fn normalize(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.ngens());
        coords
            .iter()
            .zip(&self.invariants)
            .map(|(x, d)| reduce_mod(x.clone(), d))
            .collect()
    }

    pub fn is_zero_element(&self, coords: &[BigInt]) -> bool {
        self.normalize(coords).iter().all(Zero::is_zero)
    }

    /// Presentation of this group on its canonical generators.
    pub fn presentation(&self) -> Presentation {
        let mut p = Presentation::new(self.ngens());
        for (i, d) in self.invariants.iter().enumerate() {
            if !d.is_zero() {
                let d = d.to_i64().expect("invariant factor fits in i64");
                p.push(vec![(i as u32, d)]).expect("single entry");
            }
        }
        p
    }

    /// Quotient by the subgroup generated by `elements` (canonical coordinates).
    pub fn quotient_by(&self, elements: &[Vec<BigInt>]) -> Quotient {
        let mut p = self.presentation();
        for e in elements {
            let v: Vec<(u32, i64)> = self
                .normalize(e)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i as u32, x.to_i64().expect("coordinate fits in i64")))
                .collect();
            p.push(v).expect("normalized coordinates are small");
        }
        p.reduce()
    }

    /// Isomorphism type of the subgroup generated by `elements`.
    pub fn subgroup(&self, elements: &[Vec<BigInt>]) -> AbGroup {
        let s = elements.len();
        if s == 0 {
            return AbGroup::trivial();
        }
        // relations among the generators: kernel of [G | D] restricted to the first s coordinates
        let k = self.ngens();
        let mut m = IntMatrix::zeros(k, s + k);
        for (j, e) in elements.iter().enumerate() {
            for (i, x) in self.normalize(e).into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        for (i, d) in self.invariants.iter().enumerate() {
            m[(i, s + i)] = d.clone();
        }
        let ker = kernel_basis(&m);
        let rels: Vec<usize> = (0..s).collect();
        let rel = ker.select_rows(&rels);
        let snf = smith_normal_form_with(&rel, Transforms::NONE);
        let mut orders: Vec<BigInt> = snf.diagonal.clone();
        orders.resize(s, BigInt::zero());
        AbGroup::from_invariants(orders)
    }

    /// Generators (canonical coordinates of `self`) of the kernel of the
    /// homomorphism to `target` sending the i-th canonical generator to `images[i]`.
    pub fn kernel_of(&self, target: &AbGroup, images: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let a = self.ngens();
        assert_eq!(images.len(), a, "one image per generator");
        let b = target.ngens();
        let mut m = IntMatrix::zeros(b, a + b);
        for (j, img) in images.iter().enumerate() {
            for (i, x) in target.normalize(img).into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        for (i, d) in target.invariants.iter().enumerate() {
            m[(i, a + i)] = d.clone();
        }
        let ker = kernel_basis(&m);
        (0..ker.cols())
            .map(|c| self.normalize(&(0..a).map(|r| ker[(r, c)].clone()).collect::<Vec<_>>()))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect()
    }

    /// Whether the homomorphism given by `images` is well defined, i.e. sends each `d_i e_i` to zero.
    pub fn is_well_defined_hom(&self, target: &AbGroup, images: &[Vec<BigInt>]) -> bool {
        self.invariants.iter().zip(images).all(|(d, img)| {
            let scaled: Vec<BigInt> = img.iter().map(|x| x * d).collect();
            target.is_zero_element(&scaled)
        })
    }

    /// Structure as a list like `[2, 4, 0]` of `u64`, for compact reporting.
    pub fn to_small(&self) -> Vec<u64> {
        self.invariants
            .iter()
            .map(|d| d.to_u64().expect("invariant factor fits in u64"))
            .collect()
    }

    /// Primary decomposition: prime power orders of the cyclic factors of the torsion part.
    pub fn primary_parts(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for d in self.invariants.iter().filter(|d| !d.is_zero()) {
            let mut n = d.clone();
            let mut p = BigInt::from(2);
            while &p * &p <= n {
                if n.is_multiple_of(&p) {
                    let mut q = BigInt::one();
                    while n.is_multiple_of(&p) {
                        n /= &p;
                        q *= &p;
                    }
                    out.push(q);
                }
                p += 1;
            }
            if n > BigInt::one() {
                out.push(n);
            }
        }
        out.sort();
        out
    }
}

/// Prime factorization of a positive integer, primes increasing.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn exact_log(mut c: u64, p: u64) -> Option<u32> {
    let mut k = 0;
    while c > 1 {
        if c % p != 0 {
            return None;
        }
        c /= p;
        k += 1;
    }
    (c == 1).then_some(k)
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariants.is_empty() {
            return write!(f, "0");
        }
        let mut counts: BTreeMap<usize, (String, usize)> = BTreeMap::new();
        for (i, d) in self.invariants.iter().enumerate() {
            let name = if d.is_zero() {
                "Z".to_string()
            } else {
                format!("Z/{d}")
            };
            match counts.values_mut().find(|(n, _)| *n == name) {
                Some((_, c)) => *c += 1,
                None => {
                    counts.insert(i, (name, 1));
                }
            }
        }
        let parts: Vec<String> = counts
            .into_values()
            .map(|(n, c)| if c == 1 { n } else { format!("({n})^{c}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbGroup({self})")
    }
}

impl Serialize for AbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.invariants.iter().map(|d| d.to_u64().expect("invariant factor fits in u64")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn normalization() {
        assert_eq!(AbGroup::from_small(&[2, 3]).to_small(), vec![6]);
        assert_eq!(AbGroup::from_small(&[0, 4, 2, 1]).to_small(), vec![2, 4, 0]);
        assert!(AbGroup::from_small(&[1, 1]).is_trivial());
        assert_eq!(AbGroup::from_small(&[2, 4, 0]).to_string(), "Z/2 + Z/4 + Z");
        assert_eq!(AbGroup::from_small(&[2, 2]).to_string(), "(Z/2)^2");
    }

    #[test]
    fn torsion_counts() {
        // Z/2 + Z/4: killed by 2 -> 4 elements, by 4 -> 8
        let g = AbGroup::from_torsion_counts(8, |m| match m {
            2 => 4,
            4 => 8,
            8 => 8,
            _ => unreachable!(),
        });
        assert_eq!(g.to_small(), vec![2, 4]);
        let g = AbGroup::from_torsion_counts(12, |m| match m {
            2 => 2,
            4 => 4,
            3 => 3,
            _ => unreachable!(),
        });
        assert_eq!(g.to_small(), vec![12]);
        assert!(AbGroup::from_torsion_counts(1, |_| 1).is_trivial());
    }

    #[test]
    fn subgroups_and_kernels() {
        let a = AbGroup::from_small(&[4, 0]);
        // <(2, 0)> is Z/2, <(0, 3)> is Z
        assert_eq!(a.subgroup(&[big(&[2, 0])]).to_small(), vec![2]);
        assert_eq!(a.subgroup(&[big(&[1, 3]), big(&[0, 6])]).to_small(), vec![2, 0]);
        let q = a.quotient_by(&[big(&[2, 0]), big(&[0, 3])]);
        assert_eq!(q.group().to_small(), vec![6]);
        // Z/4 -> Z/2 reduction: kernel generated by 2
        let z4 = AbGroup::cyclic(4);
        let z2 = AbGroup::cyclic(2);
        let ker = z4.kernel_of(&z2, &[big(&[1])]);
        assert_eq!(z4.subgroup(&ker).to_small(), vec![2]);
        assert!(z4.is_well_defined_hom(&z2, &[big(&[1])]));
        assert!(!z2.is_well_defined_hom(&z4, &[big(&[1])]));
    }

    #[test]
    fn primary() {
        assert_eq!(
            AbGroup::from_small(&[6, 12]).primary_parts(),
            big(&[2, 3, 3, 4])
        );
    }
}
