mod common;

use std::collections::BTreeSet;

use common::ring_units;
use e2homlab::matgroup::{elementary_group, DEFAULT_GROUP_CAP};
use e2homlab::ringkit::{w_set, FiniteRing, UnitData};
use e2homlab::unimod::*;
use e2homlab::zlinalg::AbGroup;

fn complex(spec: &str, deg: usize) -> (FiniteRing, UnitData, ChainComplexY) {
    let (r, u) = ring_units(spec);
    let y = ChainComplexY::build(&r, &u, deg, DEFAULT_BASIS_CAP).unwrap();
    (r, u, y)
}

// brute force: unimodular vectors divided by the number of units
fn point_count_oracle(r: &FiniteRing, u: &UnitData) -> usize {
    let mut count = 0;
    for x in r.elements() {
        for y in r.elements() {
            let unimodular = r
                .elements()
                .any(|a| r.elements().any(|b| r.add(r.mul(a, x), r.mul(b, y)) == r.one()));
            if unimodular {
                count += 1;
            }
        }
    }
    count / u.units.len()
}

#[test]
fn projective_line_sizes() {
    for (spec, expected) in [("GF(2)", 3), ("GF(3)", 4), ("GF(4)", 5), ("Z/4", 6), ("Z/8", 12), ("Z/9", 12), ("Z/6", 12)] {
        let (r, u) = ring_units(spec);
        let p = proj_points(&r, &u);
        assert_eq!(p.len(), expected, "{spec}");
        assert_eq!(p.len(), point_count_oracle(&r, &u), "{spec}");
    }
}

#[test]
fn basis_sizes_over_fields() {
    // ordered tuples of distinct points of a (q+1)-point line
    for q in [2usize, 3, 4, 5] {
        let (_, _, y) = complex(&format!("GF({q})"), 4);
        let mut expected = vec![];
        let mut acc = 1;
        for k in 0..=4 {
            acc *= (q + 1).saturating_sub(k);
            expected.push(acc);
        }
        assert_eq!(y.sizes(), expected, "GF({q})");
    }
    let (_, _, y) = complex("GF(3)", 1);
    assert_eq!(y.rank(1), 12);
    let (_, _, y) = complex("GF(5)", 4);
    assert_eq!(y.rank(4), 720);
}

#[test]
fn boundary_squares_to_zero() {
    for spec in ["GF(3)", "Z/4", "Z/6"] {
        let (_, _, y) = complex(spec, 3);
        for k in 2..=3 {
            for c in y.boundary(k) {
                let mut acc = std::collections::BTreeMap::<u32, i64>::new();
                for &(i, x) in c {
                    for &(j, z) in &y.boundary(k - 1)[i as usize] {
                        *acc.entry(j).or_default() += x * z;
                    }
                }
                assert!(acc.values().all(|&v| v == 0), "{spec} degree {k}");
            }
        }
        for c in y.boundary(1) {
            assert_eq!(y.augmentation(c), 0);
        }
    }
}

#[test]
fn low_homology() {
    for spec in ["GF(2)", "GF(3)", "GF(5)", "Z/4", "Z/8", "Z/6"] {
        let (_, _, y) = complex(spec, 2);
        assert_eq!(y.homology(0).unwrap(), AbGroup::free(1), "{spec}");
    }
    // distinct points on a line with at least five points: acyclic in low degrees
    let (_, _, y) = complex("GF(5)", 4);
    for k in 1..=3 {
        assert!(y.homology(k).unwrap().is_trivial(), "GF(5) H_{k}");
    }
    assert!(y.homology(4).is_err());
}

#[test]
fn coinvariant_ranks() {
    for spec in ["GF(3)", "GF(5)", "GF(7)", "Z/4", "Z/8", "Z/9", "Z/6", "F2[t]/t^2"] {
        let (r, u, y) = complex(spec, 3);
        let w = w_set(&r);
        assert_eq!(y_coinvariants(&r, &y, 0).orbit_count(), 1, "{spec}");
        assert_eq!(y_coinvariants(&r, &y, 1).orbit_count(), 1, "{spec}");
        assert_eq!(y_coinvariants(&r, &y, 2).orbit_count(), u.class_count(), "{spec}");
        assert_eq!(y_coinvariants(&r, &y, 3).orbit_count(), u.class_count() * w.len(), "{spec}");
    }
}

#[test]
fn normal_forms_label_orbits() {
    for spec in ["GF(5)", "Z/8", "Z/9", "Z/6"] {
        let (r, u, y) = complex(spec, 3);
        let e2 = elementary_group(&r, &u, DEFAULT_GROUP_CAP).unwrap();
        let inf = y.points.infinity(&r);
        let zero = y.points.zero_point(&r);
        for k in 2..=3 {
            let co = y_coinvariants(&r, &y, k);
            let mut forms = vec![None; co.orbit_count()];
            let mut seen = BTreeSet::new();
            for (i, t) in y.basis(k).iter().enumerate() {
                let c = canonicalize_tuple(&r, &u, &y, t);
                assert!(e2.contains(&r, &c.transporter), "{spec}");
                let rep = u.class_reps[c.class];
                let mut nf = vec![inf, zero, y.points.affine(&r, rep)];
                if let Some(x) = c.x {
                    nf.push(y.points.affine(&r, r.mul(rep, x)));
                }
                assert_eq!(y.act_tuple(&r, &c.transporter, t), nf, "{spec}");
                let key = (c.class, c.x);
                let slot = &mut forms[co.orbit_of[i] as usize];
                assert_eq!(*slot.get_or_insert(key), key, "{spec}: normal form varies on an orbit");
                seen.insert(key);
            }
            assert_eq!(seen.len(), co.orbit_count(), "{spec}: distinct orbits share a normal form");
        }
    }
}
