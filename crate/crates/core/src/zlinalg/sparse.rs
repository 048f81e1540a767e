//! Sparse integer elimination: Tietze reduction of presentations and
//! systematic kernel bases.
//!
//! Both routines pivot only on entries of absolute value one and keep
//! coefficients in `i64` with checked arithmetic. Whatever cannot be reduced
//! that way is handed to the dense big-integer Smith form. If a machine-word
//! operation would overflow, `Error::Overflow` is returned and the callers in
//! this module fall back to the dense path, so results are always exact.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::abgroup::AbGroup;
use super::matrix::IntMatrix;
use super::smith::{smith_normal_form_with, Transforms};
use crate::error::{Error, Result};

/// Sparse integer vector: `(index, coefficient)` pairs sorted by index, no zero coefficients.
pub type SparseVec = Vec<(u32, i64)>;

const NONE: u32 = u32::MAX;

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize(mut v: Vec<(u32, i64)>) -> Result<SparseVec> {
    v.sort_unstable_by_key(|&(i, _)| i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = acc.checked_add(c).ok_or(Error::Overflow)?,
            _ => out.push((i, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    Ok(out)
}

/// `a + k * b`
pub fn axpy(a: &SparseVec, k: i64, b: &SparseVec) -> Result<SparseVec> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            let c = b[j].1.checked_mul(k).ok_or(Error::Overflow)?;
            out.push((b[j].0, c));
            j += 1;
        } else {
            let c = b[j]
                .1
                .checked_mul(k)
                .and_then(|c| c.checked_add(a[i].1))
                .ok_or(Error::Overflow)?;
            if c != 0 {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

fn coefficient(v: &SparseVec, idx: u32) -> i64 {
    v.binary_search_by_key(&idx, |&(i, _)| i)
        .map(|p| v[p].1)
        .unwrap_or(0)
}

pub fn to_big(v: &SparseVec) -> Vec<(u32, BigInt)> {
    v.iter().map(|&(i, c)| (i, BigInt::from(c))).collect()
}

/// Free abelian group on `generators` modulo the span of `relations`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<SparseVec>,
}

impl Presentation {
    pub fn new(generators: usize) -> Self {
        Presentation {
            generators,
            relations: Vec::new(),
        }
    }

    pub fn push(&mut self, relation: Vec<(u32, i64)>) -> Result<()> {
        let r = normalize(relation)?;
        debug_assert!(r.iter().all(|&(i, _)| (i as usize) < self.generators));
        if !r.is_empty() {
            self.relations.push(r);
        }
        Ok(())
    }

    /// Reduces the presentation to invariant factors with a projection to canonical coordinates.
    pub fn reduce(&self) -> Quotient {
        match tietze(self) {
            Ok(q) => q,
            Err(Error::Overflow) => dense_quotient(self),
            Err(e) => unreachable!("tietze only reports overflow: {e}"),
        }
    }
}

#[derive(Clone, Debug)]
enum Coordinate {
    /// Row of the dense left transform, over `dense_gens`.
    Dense { row: Vec<BigInt>, lift: Vec<BigInt> },
    /// A generator untouched by every relation.
    Passthrough(u32),
}

/// Result of reducing a presentation: the abelian group and a projection
/// from ambient vectors onto canonical coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    group: AbGroup,
    ambient: usize,
    relation_rank: usize,
    subs: Vec<(u32, SparseVec)>,
    elim_order: Vec<u32>,
    dense_gens: Vec<u32>,
    dense_pos: BTreeMap<u32, usize>,
    coords: Vec<Coordinate>,
}

impl Quotient {
    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    /// Rank of the lattice spanned by the relations.
    pub fn relation_rank(&self) -> usize {
        self.relation_rank
    }

    pub fn project_sparse(&self, v: &SparseVec) -> Vec<BigInt> {
        self.project(&to_big(v))
    }

    pub fn project_dense(&self, v: &[BigInt]) -> Vec<BigInt> {
        let sparse: Vec<(u32, BigInt)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i as u32, x.clone()))
            .collect();
        self.project(&sparse)
    }

    /// Canonical coordinates of the class of an ambient vector.
    pub fn project(&self, v: &[(u32, BigInt)]) -> Vec<BigInt> {
        let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
        let mut heap = BinaryHeap::new();
        for (i, c) in v {
            assert!((*i as usize) < self.ambient, "index outside the ambient lattice");
            *acc.entry(*i).or_insert_with(BigInt::zero) += c;
            let o = self.elim_order[*i as usize];
            if o != NONE {
                heap.push(Reverse(o));
            }
        }
        while let Some(Reverse(o)) = heap.pop() {
            let (g, expr) = &self.subs[o as usize];
            let Some(x) = acc.remove(g) else { continue };
            if x.is_zero() {
                continue;
            }
            for &(j, e) in expr {
                let slot = acc.entry(j).or_insert_with(BigInt::zero);
                *slot += &x * e;
                let oj = self.elim_order[j as usize];
                if oj != NONE {
                    debug_assert!(oj > o);
                    heap.push(Reverse(oj));
                }
            }
        }
        let mut dense = vec![BigInt::zero(); self.dense_gens.len()];
        for (g, x) in &acc {
            if let Some(&p) = self.dense_pos.get(g) {
                dense[p] = x.clone();
            }
        }
        self.coords
            .iter()
            .zip(self.group.invariants())
            .map(|(c, d)| {
                let raw = match c {
                    Coordinate::Dense { row, .. } => {
                        let mut s = BigInt::zero();
                        for (a, b) in row.iter().zip(&dense) {
                            if !a.is_zero() && !b.is_zero() {
                                s += a * b;
                            }
                        }
                        s
                    }
                    Coordinate::Passthrough(g) => acc.get(g).cloned().unwrap_or_default(),
                };
                reduce_mod(raw, d)
            })
            .collect()
    }

    /// An ambient vector whose class is the `k`-th canonical generator.
    pub fn lift(&self, k: usize) -> Vec<(u32, BigInt)> {
        match &self.coords[k] {
            Coordinate::Passthrough(g) => vec![(*g, BigInt::one())],
            Coordinate::Dense { lift, .. } => self
                .dense_gens
                .iter()
                .zip(lift)
                .filter(|(_, x)| !x.is_zero())
                .map(|(&g, x)| (g, x.clone()))
                .collect(),
        }
    }

    pub fn is_zero_class(&self, v: &SparseVec) -> bool {
        self.project_sparse(v).iter().all(Zero::is_zero)
    }
}

pub(crate) fn reduce_mod(x: BigInt, d: &BigInt) -> BigInt {
    if d.is_zero() {
        x
    } else {
        let r = x % d;
        if r.is_negative() {
            r + d
        } else {
            r
        }
    }
}

fn tietze(p: &Presentation) -> Result<Quotient> {
    let n = p.generators;
    let mut rels: Vec<SparseVec> = p.relations.clone();
    let m = rels.len();
    let mut alive = vec![true; m];
    let mut cols: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (id, r) in rels.iter().enumerate() {
        for &(g, _) in r {
            cols[g as usize].push(id as u32);
        }
    }
    let mut queue: BTreeSet<(usize, u32)> = BTreeSet::new();
    let mut queued_len: Vec<usize> = vec![usize::MAX; m];
    for (id, r) in rels.iter().enumerate() {
        queue.insert((r.len(), id as u32));
        queued_len[id] = r.len();
    }
    let mut parked: BTreeSet<u32> = BTreeSet::new();
    let mut subs: Vec<(u32, SparseVec)> = Vec::new();
    let mut elim_order = vec![NONE; n];

    while let Some((_, id)) = queue.pop_first() {
        let idu = id as usize;
        queued_len[idu] = usize::MAX;
        let pivot = rels[idu]
            .iter()
            .filter(|(_, c)| c.abs() == 1)
            .min_by_key(|&&(g, _)| (cols[g as usize].len(), g))
            .copied();
        let Some((g, c)) = pivot else {
            parked.insert(id);
            continue;
        };
        let r = std::mem::take(&mut rels[idu]);
        alive[idu] = false;
        let mut users = std::mem::take(&mut cols[g as usize]);
        users.sort_unstable();
        users.dedup();
        for s in users {
            let su = s as usize;
            if s == id || !alive[su] {
                continue;
            }
            let sg = coefficient(&rels[su], g);
            if sg == 0 {
                continue;
            }
            // c = +-1, so c^{-1} = c
            let k = sg.checked_mul(c).and_then(i64::checked_neg).ok_or(Error::Overflow)?;
            let updated = axpy(&rels[su], k, &r)?;
            for &(j, _) in &r {
                if j != g {
                    cols[j as usize].push(s);
                }
            }
            if queued_len[su] != usize::MAX {
                queue.remove(&(queued_len[su], s));
            }
            parked.remove(&s);
            if updated.is_empty() {
                alive[su] = false;
                queued_len[su] = usize::MAX;
                rels[su] = updated;
            } else {
                queued_len[su] = updated.len();
                queue.insert((updated.len(), s));
                rels[su] = updated;
            }
        }
        let expr: SparseVec = r
            .iter()
            .filter(|&&(j, _)| j != g)
            .map(|&(j, e)| Ok((j, e.checked_mul(-c).ok_or(Error::Overflow)?)))
            .collect::<Result<_>>()?;
        elim_order[g as usize] = subs.len() as u32;
        subs.push((g, expr));
    }

    let remaining: Vec<&SparseVec> = parked
        .iter()
        .filter(|&&id| alive[id as usize])
        .map(|&id| &rels[id as usize])
        .collect();
    let mut involved = BTreeSet::new();
    for r in &remaining {
        for &(g, _) in r.iter() {
            debug_assert_eq!(elim_order[g as usize], NONE);
            involved.insert(g);
        }
    }
    let dense_gens: Vec<u32> = involved.into_iter().collect();
    let dense_pos: BTreeMap<u32, usize> = dense_gens.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let mut mat = IntMatrix::zeros(dense_gens.len(), remaining.len());
    for (j, r) in remaining.iter().enumerate() {
        for &(g, c) in r.iter() {
            mat[(dense_pos[&g], j)] = BigInt::from(c);
        }
    }
    let passthrough: Vec<u32> = (0..n as u32)
        .filter(|&g| elim_order[g as usize] == NONE && !dense_pos.contains_key(&g))
        .collect();
    Ok(assemble(n, subs, elim_order, dense_gens, dense_pos, &mat, passthrough))
}

fn assemble(
    ambient: usize,
    subs: Vec<(u32, SparseVec)>,
    elim_order: Vec<u32>,
    dense_gens: Vec<u32>,
    dense_pos: BTreeMap<u32, usize>,
    mat: &IntMatrix,
    passthrough: Vec<u32>,
) -> Quotient {
    let k = dense_gens.len();
    let snf = smith_normal_form_with(
        mat,
        Transforms {
            u: true,
            u_inv: true,
            ..Transforms::NONE
        },
    );
    let u = snf.u.expect("requested");
    let u_inv = snf.u_inv.expect("requested");
    let mut invariants = Vec::new();
    let mut coords = Vec::new();
    for i in 0..k {
        let d = if i < snf.diagonal.len() {
            snf.diagonal[i].clone()
        } else {
            BigInt::zero()
        };
        if d.is_one() {
            continue;
        }
        invariants.push(d);
        coords.push(Coordinate::Dense {
            row: u.row(i).to_vec(),
            lift: u_inv.column(i),
        });
    }
    for &g in &passthrough {
        invariants.push(BigInt::zero());
        coords.push(Coordinate::Passthrough(g));
    }
    Quotient {
        group: AbGroup::from_sorted_invariants(invariants),
        ambient,
        relation_rank: subs.len() + snf.rank,
        subs,
        elim_order,
        dense_gens,
        dense_pos,
        coords,
    }
}

pub(crate) fn dense_from_matrix(n: usize, mat: &IntMatrix) -> Quotient {
    let dense_gens: Vec<u32> = (0..n as u32).collect();
    let dense_pos = dense_gens.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    assemble(n, Vec::new(), vec![NONE; n], dense_gens, dense_pos, mat, Vec::new())
}

fn dense_quotient(p: &Presentation) -> Quotient {
    let n = p.generators;
    let mut mat = IntMatrix::zeros(n, p.relations.len());
    for (j, r) in p.relations.iter().enumerate() {
        for &(g, c) in r {
            mat[(g as usize, j)] += BigInt::from(c);
        }
    }
    let dense_gens: Vec<u32> = (0..n as u32).collect();
    let dense_pos = dense_gens.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    assemble(n, Vec::new(), vec![NONE; n], dense_gens, dense_pos, &mat, Vec::new())
}

/// Integer kernel of a sparse matrix with a basis that is systematic on the
/// non-pivot columns: the coordinates of a kernel vector are read off from
/// those columns, with a small dense correction if some rows had no unit pivot.
#[derive(Clone, Debug)]
pub struct SparseKernel {
    ncols: usize,
    basis: Vec<SparseVec>,
    /// coordinate index of each easy free column, NONE otherwise
    easy_pos: Vec<u32>,
    easy_count: usize,
    hard_cols: Vec<u32>,
    /// rows `rank..` of the inverse right transform of the hard block
    hard_coord_rows: Vec<Vec<BigInt>>,
}

impl SparseKernel {
    /// Kernel of the matrix with `nrows` rows whose columns are `columns`.
    pub fn new(nrows: usize, columns: &[SparseVec]) -> Result<Self> {
        let ncols = columns.len();
        let mut rows: Vec<SparseVec> = vec![Vec::new(); nrows];
        for (j, col) in columns.iter().enumerate() {
            for &(i, c) in col {
                rows[i as usize].push((j as u32, c));
            }
        }
        let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
        for (i, r) in rows.iter().enumerate() {
            for &(j, _) in r {
                col_rows[j as usize].push(i as u32);
            }
        }
        let mut queue: BTreeSet<(usize, u32)> = BTreeSet::new();
        let mut queued_len = vec![usize::MAX; nrows];
        for (i, r) in rows.iter().enumerate() {
            if !r.is_empty() {
                queue.insert((r.len(), i as u32));
                queued_len[i] = r.len();
            }
        }
        let mut parked: BTreeSet<u32> = BTreeSet::new();
        let mut pivot_col_of_row = vec![NONE; nrows];
        let mut is_pivot_col = vec![false; ncols];

        while let Some((_, ri)) = queue.pop_first() {
            let riu = ri as usize;
            queued_len[riu] = usize::MAX;
            let choice = rows[riu]
                .iter()
                .filter(|&&(j, c)| c.abs() == 1 && !is_pivot_col[j as usize])
                .min_by_key(|&&(j, _)| (col_rows[j as usize].len(), j))
                .copied();
            let Some((pc, pv)) = choice else {
                parked.insert(ri);
                continue;
            };
            is_pivot_col[pc as usize] = true;
            pivot_col_of_row[riu] = pc;
            let r = rows[riu].clone();
            let mut users = std::mem::take(&mut col_rows[pc as usize]);
            users.sort_unstable();
            users.dedup();
            for s in users {
                let su = s as usize;
                if s == ri {
                    continue;
                }
                let sc = coefficient(&rows[su], pc);
                if sc == 0 {
                    continue;
                }
                let k = sc.checked_mul(pv).and_then(i64::checked_neg).ok_or(Error::Overflow)?;
                let updated = axpy(&rows[su], k, &r)?;
                for &(j, _) in &r {
                    if j != pc {
                        col_rows[j as usize].push(s);
                    }
                }
                if queued_len[su] != usize::MAX {
                    queue.remove(&(queued_len[su], s));
                    queued_len[su] = usize::MAX;
                }
                parked.remove(&s);
                rows[su] = updated;
                let is_pivot_row = pivot_col_of_row[su] != NONE;
                if !is_pivot_row && !rows[su].is_empty() {
                    queued_len[su] = rows[su].len();
                    queue.insert((rows[su].len(), s));
                }
            }
            col_rows[pc as usize] = vec![ri];
        }

        let hard_rows: Vec<usize> = parked
            .iter()
            .map(|&r| r as usize)
            .filter(|&r| !rows[r].is_empty())
            .collect();
        let mut hard_set = BTreeSet::new();
        for &r in &hard_rows {
            for &(j, _) in &rows[r] {
                debug_assert!(!is_pivot_col[j as usize]);
                hard_set.insert(j);
            }
        }
        let hard_cols: Vec<u32> = hard_set.into_iter().collect();
        let pivot_rows: Vec<usize> = (0..nrows).filter(|&i| pivot_col_of_row[i] != NONE).collect();

        // x_p = -s_p * sum_{f free} row_p[f] x_f
        let lift = |free: &[(u32, BigInt)]| -> Result<SparseVec> {
            let mut out: Vec<(u32, i64)> = Vec::new();
            let fv: BTreeMap<u32, &BigInt> = free.iter().map(|(j, x)| (*j, x)).collect();
            for (j, x) in free {
                out.push((*j, x.to_i64().ok_or(Error::Overflow)?));
            }
            for &p in &pivot_rows {
                let pc = pivot_col_of_row[p];
                let sp = coefficient(&rows[p], pc);
                let mut acc = BigInt::zero();
                for &(j, c) in &rows[p] {
                    if j == pc {
                        continue;
                    }
                    if let Some(x) = fv.get(&j) {
                        acc += *x * c;
                    }
                }
                if !acc.is_zero() {
                    let v = -(acc * sp);
                    out.push((pc, v.to_i64().ok_or(Error::Overflow)?));
                }
            }
            normalize(out)
        };

        let mut easy_pos = vec![NONE; ncols];
        let mut basis = Vec::new();
        let mut easy_count = 0;
        let hard_lookup: BTreeSet<u32> = hard_cols.iter().copied().collect();
        for j in 0..ncols as u32 {
            if is_pivot_col[j as usize] || hard_lookup.contains(&j) {
                continue;
            }
            easy_pos[j as usize] = easy_count as u32;
            easy_count += 1;
            basis.push(lift(&[(j, BigInt::one())])?);
        }
        let mut hard_coord_rows = Vec::new();
        if !hard_cols.is_empty() {
            let pos: BTreeMap<u32, usize> = hard_cols.iter().enumerate().map(|(i, &j)| (j, i)).collect();
            let mut h = IntMatrix::zeros(hard_rows.len(), hard_cols.len());
            for (a, &r) in hard_rows.iter().enumerate() {
                for &(j, c) in &rows[r] {
                    h[(a, pos[&j])] = BigInt::from(c);
                }
            }
            let snf = smith_normal_form_with(
                &h,
                Transforms {
                    v: true,
                    v_inv: true,
                    ..Transforms::NONE
                },
            );
            let v = snf.v.expect("requested");
            let v_inv = snf.v_inv.expect("requested");
            for k in snf.rank..hard_cols.len() {
                let free: Vec<(u32, BigInt)> = hard_cols
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !v[(*i, k)].is_zero())
                    .map(|(i, &j)| (j, v[(i, k)].clone()))
                    .collect();
                basis.push(lift(&free)?);
                hard_coord_rows.push(v_inv.row(k).to_vec());
            }
        }
        Ok(SparseKernel {
            ncols,
            basis,
            easy_pos,
            easy_count,
            hard_cols,
            hard_coord_rows,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ncols
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    /// Coordinates of a vector known to lie in the kernel.
    pub fn coordinates(&self, z: &SparseVec) -> Result<SparseVec> {
        let mut out: Vec<(u32, i64)> = Vec::new();
        for &(j, c) in z {
            let p = self.easy_pos[j as usize];
            if p != NONE {
                out.push((p, c));
            }
        }
        if !self.hard_cols.is_empty() {
            let x: Vec<BigInt> = self
                .hard_cols
                .iter()
                .map(|&j| BigInt::from(coefficient(z, j)))
                .collect();
            for (k, row) in self.hard_coord_rows.iter().enumerate() {
                let mut s = BigInt::zero();
                for (a, b) in row.iter().zip(&x) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                if !s.is_zero() {
                    out.push(((self.easy_count + k) as u32, s.to_i64().ok_or(Error::Overflow)?));
                }
            }
        }
        normalize(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_group(q: &Quotient) -> Vec<i64> {
        q.group().invariants().iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn cyclic_and_free() {
        let mut p = Presentation::new(1);
        p.push(vec![(0, 3)]).unwrap();
        assert_eq!(small_group(&p.reduce()), vec![3]);

        let mut p = Presentation::new(2);
        p.push(vec![(0, 2)]).unwrap();
        let q = p.reduce();
        assert_eq!(small_group(&q), vec![2, 0]);
        assert_eq!(q.relation_rank(), 1);
    }

    #[test]
    fn projection_and_lift_agree() {
        // Z^3 / <(1,1,0), (0,2,2), (0,0,4)>  = Z/8? compute: x0=-x1, relations 2x1+2x2, 4x2
        let mut p = Presentation::new(3);
        p.push(vec![(0, 1), (1, 1)]).unwrap();
        p.push(vec![(1, 2), (2, 2)]).unwrap();
        p.push(vec![(2, 4)]).unwrap();
        let q = p.reduce();
        let order: i64 = small_group(&q).iter().product();
        assert_eq!(order, 8);
        for k in 0..q.group().invariants().len() {
            let l = q.lift(k);
            let c = q.project(&l);
            for (i, x) in c.iter().enumerate() {
                assert_eq!(x, &BigInt::from((i == k) as i64));
            }
        }
        // relations project to zero
        for r in &p.relations {
            assert!(q.is_zero_class(r));
        }
    }

    #[test]
    fn kernel_of_cycle_graph() {
        // directed triangle 0->1->2->0 incidence: columns are edges
        let cols = vec![vec![(0, -1), (1, 1)], vec![(1, -1), (2, 1)], vec![(0, 1), (2, -1)]];
        let k = SparseKernel::new(3, &cols).unwrap();
        assert_eq!(k.rank(), 1);
        let z = &k.basis()[0];
        assert_eq!(z.len(), 3);
        assert_eq!(k.coordinates(z).unwrap(), vec![(0, 1)]);
    }

    #[test]
    fn kernel_with_hard_block() {
        // single row (2, 4, 6): no unit pivot
        let cols = vec![vec![(0, 2)], vec![(0, 4)], vec![(0, 6)]];
        let k = SparseKernel::new(1, &cols).unwrap();
        assert_eq!(k.rank(), 2);
        for b in k.basis() {
            let s: i64 = b.iter().map(|&(j, c)| c * [2, 4, 6][j as usize]).sum();
            assert_eq!(s, 0);
        }
        let z = normalize(vec![(0, 1), (1, 1), (2, -1)]).unwrap();
        let c = k.coordinates(&z).unwrap();
        let mut rebuilt: Vec<(u32, i64)> = Vec::new();
        for (idx, coef) in c {
            for &(j, v) in &k.basis()[idx as usize] {
                rebuilt.push((j, v * coef));
            }
        }
        assert_eq!(normalize(rebuilt).unwrap(), z);
    }
}
