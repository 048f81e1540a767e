mod common;

use common::elem;
use e2homlab::bloch::*;
use e2homlab::zlinalg::AbGroup;
use e2homlab::Lab;
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::OnceLock;

fn lab(spec: &str) -> Lab {
    Lab::from_spec_default(spec).unwrap()
}

struct Pipeline {
    rp_bar: RpBar,
    lb: LambdaBar,
    geom: RpGeom,
    eta: Eta,
    sym: SymSq,
}

fn pipeline(l: &Lab) -> Pipeline {
    let sym = SymSq::new(l).unwrap();
    let rp_bar = rp_bar_presentation(l).unwrap();
    let lb = lambda_bar_maps(l, &sym);
    let geom = rp_geometric(l).unwrap();
    let eta = eta_map(l, &rp_bar, &geom, &lb).unwrap();
    Pipeline {
        rp_bar,
        lb,
        geom,
        eta,
        sym,
    }
}

#[test]
fn presentation_sizes() {
    let l = lab("GF(5)");
    let rp = rp_bar_presentation(&l).unwrap();
    assert_eq!(rp.symbols, 6);
    assert_eq!(rp.skipped, 0);
    assert!(rp.group().free_rank() <= 6);

    let rp = rp_bar_presentation(&lab("GF(2)")).unwrap();
    assert_eq!(rp.symbols, 0);
    assert!(rp.group().is_trivial());

    let l = lab("GF(4)");
    assert_eq!(l.w.len(), 2);
    assert_eq!(rp_bar_presentation(&l).unwrap().symbols, 2);
}

#[test]
fn five_term_vectors() {
    let l = lab("GF(7)");
    let (a, b) = (elem(&l.ring, "3"), elem(&l.ring, "5"));
    let v = five_term_element(&l, a, b).unwrap();
    // [3] - [5] + <3>[4] - <4>[2] + <5>[4], and <3> = <5> is the non-square class
    let (sq, ns) = (l.units.class_of(1), l.units.class_of(a));
    let sym = |g: usize, x: &str| symbol_index(&l, g, elem(&l.ring, x)).unwrap();
    let mut want = vec![(sym(sq, "3"), 1), (sym(sq, "5"), -1), (sym(ns, "4"), 2), (sym(sq, "2"), -1)];
    want.sort();
    assert_eq!(v, want);
    let rp = rp_bar_presentation(&l).unwrap();
    let big: Vec<(u32, BigInt)> = v.iter().map(|&(i, c)| (i, c.into())).collect();
    assert!(rp.group().is_zero_element(&rp.quotient.project(&big)));

    assert!(five_term_element(&l, a, a).is_err());
    assert!(five_term_element(&l, l.ring.one(), b).is_err());
}

#[test]
fn lambda_bar_kills_relations() {
    for spec in ["GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)", "Z/25", "GF(4)xGF(5)"] {
        let l = lab(spec);
        let sym = SymSq::new(&l).unwrap();
        let rp = rp_bar_presentation(&l).unwrap();
        let chk = check_lambda_bar(&l, &rp, &lambda_bar_maps(&l, &sym)).unwrap();
        assert!(chk.lambda1_kills && chk.lambda2_kills, "{spec}");
        assert_eq!(chk.relations, rp.relations.len() * l.units.class_count());
    }
}

/// `<<2>><<4>>` over GF(5), with the square classes read off by Euler's criterion.
#[test]
fn lambda_bar_one_unfolds() {
    let l = lab("GF(5)");
    let sym = SymSq::new(&l).unwrap();
    let lb = lambda_bar_maps(&l, &sym);
    let two = elem(&l.ring, "2");
    let s = symbol_index(&l, 0, two).unwrap();
    let legendre = |x: u64| x.pow(2) % 5 == 1;
    let mut want = [0i64; 2];
    for (x, c) in [(8u64, 1), (2, -1), (4, -1), (1, 1)] {
        want[usize::from(!legendre(x % 5))] += c;
    }
    let square = l.units.class_of(l.ring.one());
    let got: Vec<i64> = lb.lambda1[s as usize].iter().map(|c| c.try_into().unwrap()).collect();
    assert_eq!(got[square], want[0]);
    assert_eq!(got[1 - square], want[1]);
}

#[test]
fn eta_on_fields() {
    for q in [4u64, 5, 7, 8, 9] {
        let l = lab(&format!("GF({q})"));
        let p = pipeline(&l);
        let rep = &p.eta.report;
        assert!(rep.well_defined && rep.lambda_compatible && rep.surjective, "GF({q})");
        assert!(rep.iso && rep.bijective, "GF({q})");
        assert!(p.geom.boundaries_in_i2, "GF({q})");
    }
}

#[test]
fn eta_degenerate_cases() {
    let l = lab("GF(2)");
    let p = pipeline(&l);
    assert!(p.rp_bar.group().is_trivial());
    assert!(!p.eta.report.surjective && !p.eta.report.iso);
    assert!(refined_bloch(&l, &p.rp_bar, &p.geom, &p.lb, &p.eta, &p.sym).is_err());

    // no symbols at all when W is empty
    let l = lab("Z/4");
    let p = pipeline(&l);
    assert_eq!(p.rp_bar.symbols, 0);
    assert!(p.eta.report.lambda_compatible);
}

#[test]
fn lambda_bar_factors_through_eta() {
    for spec in ["GF(3)", "GF(5)", "Z/9", "GF(4)xGF(5)"] {
        let l = lab(spec);
        let p = pipeline(&l);
        assert!(p.eta.report.lambda_compatible, "{spec}");
        assert_eq!(p.eta.report.boundary_sign, -1);
        for (s, img) in p.eta.images.iter().enumerate() {
            let mut lifted = vec![BigInt::from(0); l.units.class_count()];
            for (k, c) in img.iter().enumerate() {
                for (a, x) in lifted.iter_mut().zip(&p.geom.lambda1[k]) {
                    *a += c * x;
                }
            }
            assert_eq!(lifted, p.lb.lambda1[s], "{spec} symbol {s}");
        }
    }
}

/// Orders of the Bloch groups of finite fields: `q + 1` in characteristic 2, `(q + 1)/2` otherwise.
#[test]
fn refined_bloch_of_fields() {
    for q in [4u64, 5, 7, 8, 9] {
        let l = lab(&format!("GF({q})"));
        let p = pipeline(&l);
        let rb = refined_bloch(&l, &p.rp_bar, &p.geom, &p.lb, &p.eta, &p.sym).unwrap();
        let order = if q % 2 == 0 { q + 1 } else { (q + 1) / 2 };
        assert_eq!(rb.rb, AbGroup::cyclic(order), "GF({q})");
        assert_eq!(rb.rb_bar, rb.rb);
        assert!(rb.rb.is_finite() && rb.comparison_surjective && rb.lambda2_well_defined);
        assert!(rb.alpha_compatible && rb.alpha_well_defined);
    }
}

#[test]
fn refined_bloch_beyond_fields() {
    let l = lab("Z/25");
    let p = pipeline(&l);
    let rb = refined_bloch(&l, &p.rp_bar, &p.geom, &p.lb, &p.eta, &p.sym).unwrap();
    assert!(rb.rb.is_finite() && rb.comparison_surjective && rb.alpha_compatible);

    // without five-term relations the presented side stays free
    let l = lab("GF(3)");
    let p = pipeline(&l);
    let rb = refined_bloch(&l, &p.rp_bar, &p.geom, &p.lb, &p.eta, &p.sym).unwrap();
    assert_eq!(rb.rb_bar, AbGroup::free(1));
    assert!(rb.rb.is_finite());
}

fn cached(which: usize) -> &'static (Lab, SymSq) {
    static LABS: OnceLock<Vec<(Lab, SymSq)>> = OnceLock::new();
    &LABS.get_or_init(|| {
        ["GF(9)", "Z/8", "Z/12", "GF(4)xGF(5)"]
            .map(|s| {
                let l = lab(s);
                let sym = SymSq::new(&l).unwrap();
                (l, sym)
            })
            .into()
    })[which]
}

proptest! {
    #[test]
    fn symmetric_square_is_bilinear(i in 0usize..1000, j in 0usize..1000, k in 0usize..1000, which in 0usize..4) {
        let (l, sym) = cached(which);
        let u = &l.units.units;
        let (a, b, c) = (u[i % u.len()], u[j % u.len()], u[k % u.len()]);
        let lhs = sym.tensor(l, l.ring.mul(a, b), c);
        let rhs: Vec<BigInt> = sym.tensor(l, a, c).iter().zip(sym.tensor(l, b, c)).map(|(x, y)| x + y).collect();
        let diff: Vec<BigInt> = lhs.iter().zip(&rhs).map(|(x, y)| x - y).collect();
        prop_assert!(sym.s2_group().is_zero_element(&diff));
        let swapped: Vec<BigInt> = sym.tensor(l, a, b).iter().zip(sym.tensor(l, b, a)).map(|(x, y)| x + y).collect();
        prop_assert!(sym.s2_group().is_zero_element(&swapped));
    }
}
