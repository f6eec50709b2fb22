//! Sweeps over the bundled transitive groups.

use tori_core::catalog::{catalog, catalog_get};
use tori_core::cohom::{h1, hn_trivial_z};
use tori_core::flabby::flabby_class_h1;
use tori_core::glat::norm1_lattice;
use tori_core::hnp::{Obstruction, ObstructionPart};
use tori_core::intlat::IntMat;
use tori_core::permgrp::{coset_action, FinAbStructure, PermGroup};
use tori_core::Budget;

/// Catalog groups with `degree ≤ max_degree` and `order ≤ max_order`.
fn corpus(max_degree: usize, max_order: u128) -> Vec<(String, PermGroup)> {
    let cat = catalog();
    cat.labels()
        .filter_map(|l| cat.entry(l).ok())
        .filter(|e| e.degree <= max_degree && e.order <= max_order)
        .map(|e| {
            let g = e.group(&Budget::default()).unwrap();
            (e.label, g)
        })
        .collect()
}

fn regular(g: &PermGroup) -> PermGroup {
    coset_action(g, &PermGroup::trivial(g.degree())).unwrap().image
}

#[test]
fn subgroup_counts() {
    let b = Budget::default();
    for (label, count) in [("6T12", 59), ("8T31", 225), ("8T38", 351)] {
        assert_eq!(catalog_get(label).unwrap().all_subgroups(&b).unwrap().len(), count, "{label}");
    }
    let g = catalog_get("10T32").unwrap();
    assert!(g.all_subgroups(&b).is_err());
    assert_eq!(g.all_subgroups(&b.scaled(2)).unwrap().len(), 1455);
}

#[test]
fn coset_action_on_point_stabilizer_recovers_group() {
    for (label, g) in corpus(10, 720) {
        let a = coset_action(&g, &g.stabilizer(1).unwrap()).unwrap();
        assert_eq!(a.image.order(), g.order(), "{label}");
        assert!(a.hom.kernel().is_trivial(), "{label}");
        assert_eq!(a.image.degree(), g.degree(), "{label}");
    }
}

#[test]
fn galois_case_is_abelianization() {
    for (label, g) in corpus(12, 24) {
        let r = regular(&g);
        let j = norm1_lattice(&r).unwrap();
        let ab = FinAbStructure::new(&r).invariants().clone();
        assert_eq!(h1(&r, &j).unwrap().invariants, ab, "{label}");
    }
}

#[test]
fn third_cohomology_examples() {
    let b = Budget::default();
    for (label, want) in [("A4", vec![2u64]), ("9T2", vec![3]), ("8T3", vec![2, 2, 2]), ("4T3", vec![2])] {
        let g = catalog_get(label).unwrap();
        assert_eq!(hn_trivial_z(&g, 3, &b).unwrap().invariants, want, "{label}");
    }
}

#[test]
fn galois_flabby_class_is_third_cohomology() {
    let b = Budget::default();
    for (label, g) in corpus(16, 12) {
        let r = regular(&g);
        let j = norm1_lattice(&r).unwrap();
        for k in r.subgroup_class_reps(&b).unwrap() {
            let fl = flabby_class_h1(&j, Some(&k), &b).unwrap();
            let h3 = hn_trivial_z(&k, 3, &b).unwrap().invariants;
            assert_eq!(fl, h3, "{label} at |K| = {}", k.order());
        }
    }
}

#[test]
fn unramified_part_lies_in_numerator() {
    for (label, g) in corpus(12, 2000) {
        let ob = Obstruction::new(&g, None).unwrap();
        assert!(ob.dnr().is_subgroup_of(&ob.n().ker), "{label}");
    }
}

#[test]
fn unramified_part_is_join_over_cyclic_subgroups() {
    let b = Budget::default();
    for (label, g) in corpus(12, 24) {
        let ob = Obstruction::new(&g, None).unwrap();
        let empty = IntMat::zeros(0, ob.ambient().len());
        let mut join = ObstructionPart::from_generators(ob.ambient(), &empty);
        for s in g.all_subgroups(&b).unwrap() {
            if s.is_cyclic() {
                join = join.join(&ob.dr(&s));
            }
        }
        assert_eq!(join, ob.dnr(), "{label}");
    }
}

#[test]
fn dr_is_monotone() {
    let b = Budget::default();
    for (label, g) in corpus(8, 64) {
        let ob = Obstruction::new(&g, None).unwrap();
        let subs = g.all_subgroups(&b).unwrap();
        let drs: Vec<ObstructionPart> = subs.iter().map(|s| ob.dr(s)).collect();
        assert_eq!(ob.dr(&g), ob.n().ker, "{label}");
        for (i, s) in subs.iter().enumerate() {
            for (j, t) in subs.iter().enumerate() {
                if s.order() < t.order() && t.order() % s.order() == 0 && s.is_subgroup_of(t) {
                    assert!(drs[i].is_subgroup_of(&drs[j]), "{label}");
                }
            }
        }
    }
}
