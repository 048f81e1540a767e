mod common;

use common::elem;
use e2homlab::invariants::*;
use e2homlab::zlinalg::AbGroup;
use e2homlab::Lab;
use num_bigint::BigInt;
use num_traits::Zero;

fn lab(spec: &str) -> Lab {
    Lab::from_spec_default(spec).unwrap()
}

fn is_zero(lab: &Lab, v: &[BigInt]) -> bool {
    target_group(lab).is_zero_element(v)
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[test]
fn d1_kernels() {
    let l = lab("GF(5)");
    let d = d1_differentials(&l).unwrap();
    assert_eq!(d.kernel, vec!["1", "4"]);
    assert!(d.ok());

    let d = d1_differentials(&lab("Z/8")).unwrap();
    assert_eq!(d.kernel.len(), 4);
    assert!(d.ok());

    let d = d1_differentials(&lab("GF(4)")).unwrap();
    assert_eq!(d.kernel.len(), 1);
    assert!(d.ok());
}

#[test]
fn d1_cokernel_over_products() {
    for spec in ["Z/12", "Z/2xZ/2", "F2[t]/t^2", "Z/9"] {
        assert!(d1_differentials(&lab(spec)).unwrap().ok(), "{spec}");
    }
}

#[test]
fn d2_closed_form_examples() {
    let l = lab("GF(7)");
    let v = d2_differential(&l, elem(&l.ring, "3")).unwrap();
    let want = target_coords(&l, l.units.class_of(elem(&l.ring, "3")), l.ring.zero());
    assert!(is_zero(&l, &sub(&v.coords(&l), &want)));
    assert!(l.a_lower().group.is_trivial());

    let one = d2_differential(&l, l.ring.one()).unwrap();
    assert!(is_zero(&l, &one.coords(&l)));

    let l = lab("Z/8");
    assert_eq!(l.a_lower().group, AbGroup::cyclic(8));
    let three = elem(&l.ring, "3");
    let v = d2_differential(&l, three).unwrap();
    let want = target_coords(&l, l.units.class_of(three), elem(&l.ring, "2"));
    assert!(is_zero(&l, &sub(&v.coords(&l), &want)));

    assert!(d2_differential(&l, elem(&l.ring, "2")).is_err());
}

#[test]
fn d2_depends_on_square_class_only() {
    for spec in ["GF(5)", "Z/9", "Z/8", "Z/12", "GF(9)"] {
        let l = lab(spec);
        let r = &l.ring;
        for &a in &l.units.units {
            let base = d2_differential(&l, a).unwrap();
            for &s in &l.units.units {
                let moved = d2_differential(&l, r.mul(a, r.mul(s, s))).unwrap();
                assert_eq!(base.class, moved.class, "{spec}");
                // the second slot changes by 3a(1 - s^2), a relation of A_{A^x}
                let diff = sub(l.a_lower().coords(base.x), l.a_lower().coords(moved.x));
                assert!(l.a_lower().group.is_zero_element(&diff), "{spec} a={a} s={s}");
            }
        }
    }
}

#[test]
fn replay_matches_closed_form() {
    for spec in ["GF(5)", "GF(7)", "Z/9", "Z/8", "F2[t]/t^2", "Z/6"] {
        let l = lab(spec);
        for &a in &l.units.units {
            let rep = replay_d2_proof(&l, a).unwrap();
            assert!(rep.ok(), "{spec}: {rep:?}");
        }
    }
    let l = lab("GF(5)");
    let rep = replay_d2_proof(&l, elem(&l.ring, "2")).unwrap();
    assert_eq!(rep.value, "(<2>, 0)");
    assert_eq!(rep.null_elements, [true; 3]);
}

#[test]
fn gw_examples() {
    let l = lab("GF(5)");
    let gw = grothendieck_witt(&l).unwrap();
    assert!(gw.eps_surjective());
    let p = gw.pfister(&l, elem(&l.ring, "2")).unwrap();
    assert!(gw.eps(&p).is_zero());
    assert!(!gw.group.is_zero_element(&p));
    // GW of a finite field of odd order is Z + Z/2
    assert_eq!(gw.group, AbGroup::from_small(&[2, 0]));

    let l = lab("GF(4)");
    let gw = grothendieck_witt(&l).unwrap();
    assert!(gw.i_group().is_trivial());
    assert_eq!(gw.group, AbGroup::free(1));

    let l = lab("GF(7)");
    let gw = grothendieck_witt(&l).unwrap();
    assert_eq!(bar_witt_suite(&l, &gw).unwrap().gw_bar, gw.group);
}

#[test]
fn symbols_have_augmentation_one() {
    for spec in ["GF(9)", "Z/8", "Z/12"] {
        let l = lab(spec);
        let gw = grothendieck_witt(&l).unwrap();
        for &a in &l.units.units {
            assert_eq!(gw.eps(&gw.symbol_of_unit(&l, a).unwrap()), BigInt::from(1), "{spec}");
            assert!(gw.eps(&gw.pfister(&l, a).unwrap()).is_zero());
        }
    }
}

#[test]
fn i_squared_examples() {
    for spec in ["GF(4)", "GF(5)", "GF(9)", "Z/9"] {
        let l = lab(spec);
        let gw = grothendieck_witt(&l).unwrap();
        let i2 = i_squared(&l, &gw).unwrap();
        assert!(i2.consistent, "{spec}");
        assert!(i2.group.is_trivial(), "{spec}");
    }
    let l = lab("Z/8");
    let gw = grothendieck_witt(&l).unwrap();
    assert!(i_squared(&l, &gw).unwrap().consistent);

    let l = lab("Z/6");
    let gw = grothendieck_witt(&l).unwrap();
    assert!(i_squared(&l, &gw).is_err());
}

#[test]
fn pontryagin_has_zero_augmentation() {
    for spec in ["GF(5)", "GF(7)", "Z/8", "Z/12", "F2[t]/t^2"] {
        let l = lab(spec);
        let gw = grothendieck_witt(&l).unwrap();
        for &a in &l.units.units {
            for &b in &l.units.units {
                assert!(pontryagin(&l, &gw, a, b).unwrap().eps.is_zero(), "{spec}");
            }
        }
        let one = l.ring.one();
        let p = pontryagin(&l, &gw, one, one).unwrap();
        assert!(gw.group.is_zero_element(&p.class));
    }
}

#[test]
fn pontryagin_lies_in_i_squared_for_fields() {
    for spec in ["GF(5)", "GF(7)", "GF(9)"] {
        let l = lab(spec);
        let gw = grothendieck_witt(&l).unwrap();
        let i2 = i_squared(&l, &gw).unwrap();
        for &a in &l.units.units {
            for &b in &l.units.units {
                let p = pontryagin(&l, &gw, a, b).unwrap();
                assert!(p.d2_vanishes && i2.contains(&gw, &p.class), "{spec}");
            }
        }
    }
}

#[test]
fn h1_golden_values() {
    for (spec, h1) in [
        ("Z/4", AbGroup::cyclic(4)),
        ("Z/8", AbGroup::cyclic(4)),
        ("GF(3)", AbGroup::cyclic(3)),
        ("GF(4)", AbGroup::trivial()),
        ("GF(9)", AbGroup::trivial()),
        ("Z/9", AbGroup::cyclic(3)),
    ] {
        let rep = h1_compare(&lab(spec)).unwrap();
        assert!(rep.universal, "{spec}");
        assert_eq!(rep.h1, h1, "{spec}");
        assert!(rep.isomorphic && rep.ok(), "{spec}");
    }
    let rep = h1_compare(&lab("Z/6")).unwrap();
    assert!(!rep.universal);
    assert!(rep.surjection && rep.explicit_iso);
}

/// `SL2(F2[t]/t^2)` by brute force on pairs `a + b t`, and the abelianization
/// distinguished by whether some square escapes the commutator subgroup.
#[test]
fn h1_dual_numbers_oracle() {
    type E = (u8, u8);
    let mul = |x: E, y: E| ((x.0 & y.0), (x.0 & y.1) ^ (x.1 & y.0));
    let add = |x: E, y: E| (x.0 ^ y.0, x.1 ^ y.1);
    type M = [E; 4];
    let mm = |p: M, q: M| -> M {
        [
            add(mul(p[0], q[0]), mul(p[1], q[2])),
            add(mul(p[0], q[1]), mul(p[1], q[3])),
            add(mul(p[2], q[0]), mul(p[3], q[2])),
            add(mul(p[2], q[1]), mul(p[3], q[3])),
        ]
    };
    let elems: Vec<E> = vec![(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut sl2: Vec<M> = Vec::new();
    for &a in &elems {
        for &b in &elems {
            for &c in &elems {
                for &d in &elems {
                    if add(mul(a, d), mul(b, c)) == (1, 0) {
                        sl2.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    assert_eq!(sl2.len(), 48);
    let inv = |p: M| -> M { [p[3], p[1], p[2], p[0]] };
    let mut comm: Vec<M> = vec![[(1, 0), (0, 0), (0, 0), (1, 0)]];
    for &g in &sl2 {
        for &h in &sl2 {
            let c = mm(mm(g, h), mm(inv(g), inv(h)));
            if !comm.contains(&c) {
                comm.push(c);
            }
        }
    }
    loop {
        let mut grew = false;
        for i in 0..comm.len() {
            for j in 0..comm.len() {
                let c = mm(comm[i], comm[j]);
                if !comm.contains(&c) {
                    comm.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let order = 48 / comm.len();
    let cyclic = sl2.iter().any(|&g| !comm.contains(&mm(g, g)));
    let oracle = match (order, cyclic) {
        (4, true) => AbGroup::cyclic(4),
        (4, false) => AbGroup::from_small(&[2, 2]),
        _ => panic!("unexpected abelianization order {order}"),
    };
    let rep = h1_compare(&lab("F2[t]/t^2")).unwrap();
    assert_eq!(rep.h1, oracle);
    assert_eq!(rep.h1, AbGroup::from_small(&[2, 2]));
    assert!(rep.ok());
}

#[test]
fn bar_witt_examples() {
    let l = lab("Z/12");
    let gw = grothendieck_witt(&l).unwrap();
    let bw = bar_witt_suite(&l, &gw).unwrap();
    assert_eq!(bw.i_bar_mod_sq, AbGroup::from_small(&[2, 2]));
    assert!(bw.ok());

    let l = lab("GF(5)");
    let gw = grothendieck_witt(&l).unwrap();
    let bw = bar_witt_suite(&l, &gw).unwrap();
    assert!(bw.comparison_surjective && bw.gw_bar == gw.group);

    let l = lab("GF(4)");
    let gw = grothendieck_witt(&l).unwrap();
    assert_eq!(bar_witt_suite(&l, &gw).unwrap().gw_bar, AbGroup::free(1));
}

#[test]
fn exact_sequence_end() {
    for spec in ["GF(3)", "Z/4", "Z/8", "Z/6", "Z/2xZ/2", "F2[t]/t^2"] {
        let l = lab(spec);
        let gw = grothendieck_witt(&l).unwrap();
        let bw = bar_witt_suite(&l, &gw).unwrap();
        assert!(bw.exact_end, "{spec}: {:?} vs {:?}", bw.i_cokernel, bw.h1_y_coinvariants);
        assert!(bw.i_bar_mod_sq_is_g, "{spec}");
    }
}
