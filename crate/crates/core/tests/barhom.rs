mod common;

use common::elem;
use e2homlab::barhom::*;
use e2homlab::invariants::{grothendieck_witt, pontryagin};
use e2homlab::matgroup::Mat2;
use e2homlab::Lab;
use proptest::prelude::*;
use std::sync::OnceLock;

fn lab(spec: &str) -> Lab {
    Lab::from_spec_default(spec).unwrap()
}

#[test]
fn degree_one_chains_are_cycles() {
    let l = lab("GF(5)");
    let g = l.e2().unwrap();
    for x in g.elements() {
        assert!(verify_cycle(&l.ring, g, &BarChain::single(vec![x])));
    }
}

#[test]
fn generic_two_chain_is_not_a_cycle() {
    let l = lab("GF(5)");
    let g = l.e2().unwrap();
    let found = g.elements().any(|x| {
        g.elements()
            .take(20)
            .any(|y| !verify_cycle(&l.ring, g, &BarChain::single(vec![x, y])))
    });
    assert!(found);
}

#[test]
fn standard_cycles_close() {
    for spec in ["GF(5)", "GF(7)", "Z/9"] {
        let l = lab(spec);
        let (r, g) = (&l.ring, l.e2().unwrap());
        for &a in &l.units.units {
            for &b in &l.units.units {
                assert!(verify_cycle(r, g, &f_cycle(&l, a, b).unwrap()), "{spec} F({a},{b})");
                assert!(verify_cycle(r, g, &h_cycle(&l, a, b).unwrap()), "{spec} H({a},{b})");
            }
        }
        for x in r.elements() {
            for y in r.elements() {
                assert!(verify_cycle(r, g, &g_cycle(&l, x, y).unwrap()), "{spec} G({x},{y})");
            }
        }
    }
}

#[test]
fn r_chain_needs_two_invertible() {
    let l = lab("Z/8");
    assert!(r_chain(&l, l.ring.one()).is_err());
    assert_eq!(r_chain(&lab("GF(5)"), 1).unwrap().k, 2);
}

#[test]
fn shuffles_with_minus_one() {
    let l = lab("GF(5)");
    let (r, g) = (&l.ring, l.e2().unwrap());
    let m1 = l.e2_elem(&Mat2::minus_identity(r)).unwrap();
    let two = elem(r, "2");
    let s = shuffle_product(&l, m1, &f_cycle(&l, two, two).unwrap()).unwrap();
    assert!(!s.is_zero() && verify_cycle(r, g, &s));
    let s = shuffle_product(&l, g.identity(), &f_cycle(&l, two, two).unwrap()).unwrap();
    assert!(s.is_zero());

    let l = lab("GF(7)");
    let (r, g) = (&l.ring, l.e2().unwrap());
    let m1 = l.e2_elem(&Mat2::minus_identity(r)).unwrap();
    let h = h_cycle(&l, elem(r, "3"), elem(r, "5")).unwrap();
    assert!(verify_cycle(r, g, &shuffle_product(&l, m1, &h).unwrap()));

    let e12 = l.e2_elem(&Mat2::e12(r, 1)).unwrap();
    assert!(shuffle_product(&l, e12, &h).is_err());
}

/// `[gh] (x) inf - [g] (x) inf - [h] (x) inf` is the boundary of `-[g|h] (x) inf` for `g, h` in `B(A)`.
#[test]
fn borel_classes_add() {
    let l = lab("GF(5)");
    let (r, g) = (&l.ring, l.e2().unwrap());
    let y = l.complex_to(2).unwrap();
    let inf = y.points.infinity(r);
    let b: Vec<_> = g.elements().filter(|&x| g.matrix(x).0[2] == r.zero()).collect();
    assert_eq!(b.len(), 20);
    for &x in &b {
        for &z in &b {
            let mut want = TensorChain::zero(1, 0);
            want.add_term(vec![g.mul(r, x, z)], vec![inf], 1);
            want.add_term(vec![x], vec![inf], -1);
            want.add_term(vec![z], vec![inf], -1);
            let mut w = TensorChain::zero(2, 0);
            w.add_term(vec![x, z], vec![inf], -1);
            assert_eq!(w.bar_boundary(r, g, &y.points), want.normalized(g));
        }
    }
}

#[test]
fn connecting_examples() {
    let l = lab("GF(5)");
    let gw = grothendieck_witt(&l).unwrap();
    let two = elem(&l.ring, "2");
    let rep = connecting_replay(&l, &gw, two, two).unwrap();
    assert!(rep.ok());
    for &b in &l.units.units {
        let rep = connecting_replay(&l, &gw, 1, b).unwrap();
        assert!(rep.ok() && gw.group.is_zero_element(&rep.class));
    }

    let l = lab("GF(7)");
    let gw = grothendieck_witt(&l).unwrap();
    let (a, b) = (elem(&l.ring, "3"), elem(&l.ring, "5"));
    let rep = connecting_replay(&l, &gw, a, b).unwrap();
    assert!(rep.ok());
    assert_eq!(rep.class, pontryagin(&l, &gw, a, b).unwrap().class);
}

#[test]
fn connecting_agrees_on_all_pairs() {
    for spec in ["GF(3)", "GF(9)", "Z/9"] {
        let l = lab(spec);
        let gw = grothendieck_witt(&l).unwrap();
        for &a in &l.units.units {
            for &b in &l.units.units {
                assert!(connecting_replay(&l, &gw, a, b).unwrap().ok(), "{spec} {a} {b}");
            }
        }
    }
    let l = lab("Z/4");
    let gw = grothendieck_witt(&l).unwrap();
    assert!(connecting_replay(&l, &gw, 1, 1).is_err());
}

fn cached(which: usize) -> &'static Lab {
    static LABS: OnceLock<Vec<Lab>> = OnceLock::new();
    &LABS.get_or_init(|| ["GF(5)", "GF(7)", "Z/9"].map(lab).into())[which]
}

fn square_zero(l: &Lab, x: usize, y: usize, p: usize, q: usize) {
    let (r, g) = (&l.ring, l.e2().unwrap());
    let pts = &l.complex_to(2).unwrap().points;
    let n = g.len();
    let (x, y) = ((x % n) as u32, (y % n) as u32);
    let p = (p % pts.len()) as u32;
    let mut q = (q % pts.len()) as u32;
    while !pts.in_general_position(p, q) {
        q = (q + 1) % pts.len() as u32;
    }
    let mut c = TensorChain::zero(2, 1);
    c.add_term(vec![x, y], vec![p, q], 1);
    let bb = c.bar_boundary(r, g, pts).bar_boundary(r, g, pts);
    assert!(bb.is_zero());
    let a = c.bar_boundary(r, g, pts).simplex_boundary();
    let b = c.simplex_boundary().bar_boundary(r, g, pts);
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]
    #[test]
    fn tensor_differential_squares_to_zero(x in 0usize..10_000, y in 0usize..10_000, p in 0usize..100, q in 0usize..100, which in 0usize..3) {
        square_zero(cached(which), x, y, p, q);
    }
}
