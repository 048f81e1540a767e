use e2homlab::zlinalg::{
    kernel_basis, quotient_structure, smith_normal_form, solve_in_lattice, AbGroup, IntMatrix,
    Presentation, SparseKernel,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Invariant factors of the cokernel from gcds of k-by-k minors.
fn determinantal_oracle(rows: &[Vec<i64>]) -> AbGroup {
    let m = IntMatrix::from_rows(rows);
    let (r, c) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut factors = Vec::new();
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rs in combinations(r, k) {
            for cs in combinations(c, k) {
                g = g.gcd(&m.select_rows(&rs).select_columns(&cs).determinant());
            }
        }
        if g.is_zero() {
            break;
        }
        factors.push(&g / &prev);
        prev = g;
    }
    let rank = factors.len();
    factors.extend(std::iter::repeat_n(BigInt::zero(), r - rank));
    AbGroup::from_invariants(factors)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn quotient_matches_minor_oracle(rows in matrix_strategy()) {
        let m = IntMatrix::from_rows(&rows);
        let q = quotient_structure(m.rows(), &m);
        prop_assert_eq!(q.group(), &determinantal_oracle(&rows));
        for j in 0..m.cols() {
            let col = m.column(j);
            prop_assert!(q.project_dense(&col).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn smith_transforms_verify(rows in matrix_strategy()) {
        let m = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        prop_assert!(snf.verify(&m));
        prop_assert!(snf.u.as_ref().unwrap().determinant().abs().is_one());
        prop_assert!(snf.v.as_ref().unwrap().determinant().abs().is_one());
        let nz: Vec<&BigInt> = snf.diagonal.iter().filter(|d| !d.is_zero()).collect();
        for w in nz.windows(2) {
            prop_assert!((w[1] % w[0]).is_zero());
        }
    }

    #[test]
    fn kernel_is_pure(rows in matrix_strategy(), coeffs in prop::collection::vec(-5i64..=5, 6)) {
        let m = IntMatrix::from_rows(&rows);
        let k = kernel_basis(&m);
        prop_assert!(m.mul(&k).is_zero());
        // any kernel vector built from a rational basis scaled to be integral is an integer combination
        let c: Vec<BigInt> = coeffs.iter().take(k.cols()).map(|&x| BigInt::from(x)).collect();
        if k.cols() > 0 {
            let v = k.mul_vec(&c);
            let g = v.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
            if !g.is_zero() {
                let prim: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
                prop_assert!(m.mul_vec(&prim).iter().all(Zero::is_zero));
                prop_assert!(solve_in_lattice(&k, &prim).is_some());
            }
        }
    }

    #[test]
    fn sparse_kernel_matches_dense(rows in matrix_strategy()) {
        let m = IntMatrix::from_rows(&rows);
        let cols: Vec<Vec<(u32, i64)>> = (0..m.cols())
            .map(|j| rows.iter().enumerate().filter(|(_, r)| r[j] != 0).map(|(i, r)| (i as u32, r[j])).collect())
            .collect();
        let sk = SparseKernel::new(m.rows(), &cols).unwrap();
        let dense = kernel_basis(&m);
        prop_assert_eq!(sk.rank(), dense.cols());
        // coordinates rebuild every dense kernel vector
        for j in 0..dense.cols() {
            let z: Vec<(u32, i64)> = dense.column(j).iter().enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i as u32, i64::try_from(x.clone()).unwrap()))
                .collect();
            let c = sk.coordinates(&z).unwrap();
            let mut acc = vec![0i64; m.cols()];
            for (idx, coef) in c {
                for &(i, v) in &sk.basis()[idx as usize] {
                    acc[i as usize] += v * coef;
                }
            }
            let expect: Vec<i64> = dense.column(j).iter().map(|x| i64::try_from(x.clone()).unwrap()).collect();
            prop_assert_eq!(acc, expect);
        }
    }

    #[test]
    fn lifts_project_to_unit_vectors(rows in matrix_strategy()) {
        let mut p = Presentation::new(rows.len());
        let ncols = rows[0].len();
        for j in 0..ncols {
            p.push(rows.iter().enumerate().map(|(i, r)| (i as u32, r[j])).collect()).unwrap();
        }
        let q = p.reduce();
        for k in 0..q.group().ngens() {
            let c = q.project(&q.lift(k));
            for (i, x) in c.iter().enumerate() {
                prop_assert_eq!(x, &BigInt::from((i == k) as i64));
            }
        }
    }
}

#[test]
fn documented_quotients() {
    let q = quotient_structure(1, &IntMatrix::from_rows(&[vec![3]]));
    assert_eq!(q.group().to_small(), vec![3]);
    let q = quotient_structure(2, &IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]]));
    assert_eq!(q.group().to_small(), vec![2, 0]);
}
