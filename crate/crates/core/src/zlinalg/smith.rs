use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Which unimodular transforms to accumulate while diagonalizing.
#[derive(Clone, Copy, Debug, Default)]
pub struct Transforms {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
    pub v_inv: bool,
}

impl Transforms {
    pub const NONE: Transforms = Transforms {
        u: false,
        u_inv: false,
        v: false,
        v_inv: false,
    };
    pub const ALL: Transforms = Transforms {
        u: true,
        u_inv: true,
        v: true,
        v_inv: true,
    };
}

/// `u * m * v = d` with `d` diagonal, entries `d_1 | d_2 | ...`, all nonnegative.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    /// Diagonal entries, `min(rows, cols)` of them; zeros trail.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

impl SmithForm {
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }

    /// Invariant factors of the matrix (the diagonal, including trailing zeros).
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.diagonal
    }

    /// Recomputes `u * m * v` and compares with the diagonal.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let (Some(u), Some(v)) = (&self.u, &self.v) else {
            return false;
        };
        u.mul(m).mul(v) == self.diagonal_matrix()
    }
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, x: usize, y: usize) {
        if x == y {
            return;
        }
        self.a.swap_rows(x, y);
        if let Some(u) = &mut self.u {
            u.swap_rows(x, y);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(x, y);
        }
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        if x == y {
            return;
        }
        self.a.swap_cols(x, y);
        if let Some(v) = &mut self.v {
            v.swap_cols(x, y);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(x, y);
        }
    }

    /// row[dst] += k row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, k);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.add_col_multiple(src, dst, &-k);
        }
    }

    /// col[dst] += k col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, k);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.add_row_multiple(src, dst, &-k);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i);
        }
    }
}

/// Minimal nonzero |entry| in the lower-right block starting at `t`; ties go to the lowest (row, col).
fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(b, _, _)| ax < *b) {
                let is_one = ax.is_one();
                best = Some((ax, i, j));
                if is_one {
                    return best.map(|(_, i, j)| (i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    smith_normal_form_with(m, Transforms::ALL)
}

pub fn smith_normal_form_with(m: &IntMatrix, want: Transforms) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: want.u.then(|| IntMatrix::identity(rows)),
        u_inv: want.u_inv.then(|| IntMatrix::identity(rows)),
        v: want.v.then(|| IntMatrix::identity(cols)),
        v_inv: want.v_inv.then(|| IntMatrix::identity(cols)),
    };
    let steps = rows.min(cols);
    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = find_pivot(&w.a, t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = &w.a[(i, t)] / &w.a[(t, t)];
                w.add_row(i, t, &-q);
                if !w.a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = &w.a[(t, j)] / &w.a[(t, t)];
                w.add_col(j, t, &-q);
                if !w.a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row t / column t onto the diagonal
                let mut best = (w.a[(t, t)].abs(), t, t);
                for i in t + 1..rows {
                    let x = w.a[(i, t)].abs();
                    if !x.is_zero() && x < best.0 {
                        best = (x, i, t);
                    }
                }
                for j in t + 1..cols {
                    let x = w.a[(t, j)].abs();
                    if !x.is_zero() && x < best.0 {
                        best = (x, t, j);
                    }
                }
                w.swap_rows(t, best.1);
                w.swap_cols(t, best.2);
                continue;
            }
            let pivot = w.a[(t, t)].clone();
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    let x = &w.a[(i, j)];
                    if !x.is_zero() && !(x % &pivot).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let diagonal: Vec<BigInt> = (0..steps).map(|i| w.a[(i, i)].clone()).collect();
    let rank = diagonal.iter().take_while(|x| !x.is_zero()).count();
    SmithForm {
        rows,
        cols,
        diagonal,
        rank,
        u: w.u,
        u_inv: w.u_inv,
        v: w.v,
        v_inv: w.v_inv,
    }
}

/// Columns spanning the integer kernel of `m` (a basis of a pure sublattice).
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form_with(
        m,
        Transforms {
            v: true,
            ..Transforms::NONE
        },
    );
    let v = snf.v.expect("requested");
    let free: Vec<usize> = (snf.rank..m.cols()).collect();
    v.select_columns(&free)
}

/// Integer coordinates `c` with `basis * c = target`, if the target lies in the column span.
/// The columns of `basis` must be linearly independent.
pub fn solve_in_lattice(basis: &IntMatrix, target: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.rows(), target.len(), "target length mismatch");
    let snf = smith_normal_form_with(
        basis,
        Transforms {
            u: true,
            v: true,
            ..Transforms::NONE
        },
    );
    assert_eq!(snf.rank, basis.cols(), "basis columns are dependent");
    let y = snf.u.as_ref().expect("requested").mul_vec(target);
    let mut z = vec![BigInt::zero(); basis.cols()];
    for (i, yi) in y.iter().enumerate() {
        if i < snf.rank {
            let d = &snf.diagonal[i];
            if !(yi % d).is_zero() {
                return None;
            }
            z[i] = yi / d;
        } else if !yi.is_zero() {
            return None;
        }
    }
    let c = snf.v.as_ref().expect("requested").mul_vec(&z);
    debug_assert_eq!(basis.mul_vec(&c), target);
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlinalg::matrix::to_bigints;

    fn factors(m: &IntMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .diagonal
            .iter()
            .map(|x| i64::try_from(x.clone()).unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(factors(&m), vec![2, 4]);
        assert_eq!(factors(&IntMatrix::identity(3)), vec![1, 1, 1]);
        assert_eq!(factors(&IntMatrix::zeros(2, 3)), vec![0, 0]);
    }

    #[test]
    fn transforms_are_consistent() {
        let m = IntMatrix::from_rows(&[vec![3, 6, -9, 1], vec![0, 4, 8, 2], vec![6, 0, 2, 2]]);
        let snf = smith_normal_form(&m);
        assert!(snf.verify(&m));
        let u = snf.u.as_ref().unwrap();
        let v = snf.v.as_ref().unwrap();
        assert_eq!(u.mul(snf.u_inv.as_ref().unwrap()), IntMatrix::identity(3));
        assert_eq!(v.mul(snf.v_inv.as_ref().unwrap()), IntMatrix::identity(4));
        assert!(u.determinant().abs().is_one());
        assert!(v.determinant().abs().is_one());
    }

    #[test]
    fn kernel_of_augmentation_row() {
        let m = IntMatrix::from_rows(&[vec![1, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        // purity: (1,-1,0) must be an integer combination
        assert!(solve_in_lattice(&k, &to_bigints(&[1, -1, 0])).is_some());
        let inv = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(kernel_basis(&inv).cols(), 0);
    }

    #[test]
    fn lattice_membership() {
        let b = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(
            solve_in_lattice(&b, &to_bigints(&[4, 3])),
            Some(to_bigints(&[2, 1]))
        );
        let b = IntMatrix::from_rows(&[vec![1], vec![1]]);
        assert_eq!(solve_in_lattice(&b, &to_bigints(&[1, 0])), None);
    }
}
