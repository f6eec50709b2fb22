use std::collections::BTreeMap;

use tori_core::catalog::{catalog, catalog_get};
use tori_core::hnp::{
    first_obstruction_dnr, first_obstruction_dr, first_obstruction_n, hnp_survey, Obstruction,
    ObstructionPart,
};
use tori_core::permgrp::PermGroup;
use tori_core::Budget;

fn collected(names: impl IntoIterator<Item = String>) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for n in names {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

fn pairs(p: &[(&str, usize)]) -> BTreeMap<String, usize> {
    p.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[test]
fn a4_on_six_points_dr_list() {
    let g = catalog_get("6T4").unwrap();
    let subs = g.all_subgroups(&Budget::default()).unwrap();
    assert_eq!(subs.len(), 10);
    let nonzero: Vec<String> = subs
        .iter()
        .filter(|s| !first_obstruction_dr(&g, s, None).unwrap().is_trivial())
        .map(|s| s.structure_name())
        .collect();
    assert_eq!(nonzero, ["C2 x C2", "A4"]);
    assert_eq!(first_obstruction_n(&g, None).unwrap().ker.invariants, [2u64]);
    assert!(first_obstruction_dnr(&g, None).unwrap().is_trivial());
}

#[test]
fn a5_on_six_points_survey() {
    let g = catalog_get("6T12").unwrap();
    let s = hnp_survey(&g, None, &Budget::default()).unwrap();
    assert_eq!((s.false_set.len(), s.true_set.len()), (48, 11));
    assert_eq!(
        s.collect_structures(&s.false_set),
        pairs(&[("1", 1), ("C2", 15), ("C3", 10), ("C5", 6), ("D10", 6), ("S3", 10)])
    );
    let minimal = s.collect_structures(&s.minimal_true);
    assert_eq!(minimal, pairs(&[("C2 x C2", 5)]));
}

#[test]
fn unramified_part_can_equal_numerator() {
    let g = catalog_get("8T31").unwrap();
    let h = g.stabilizer(1).unwrap();
    assert_eq!(h.structure_name(), "C2 x C2 x C2");
    let ob = Obstruction::new(&g, Some(&h)).unwrap();
    assert_eq!(ob.ambient(), &[2u64, 2, 2]);
    let n = ob.n().ker;
    assert_eq!(n.invariants, [2u64, 2]);
    assert_eq!(ob.dnr(), n);
}

#[test]
fn numerator_coordinates_for_8t21() {
    let g = catalog_get("8T21").unwrap();
    let ob = Obstruction::new(&g, None).unwrap();
    let n = ob.n();
    assert_eq!(ob.ambient(), &[2u64, 2]);
    assert_eq!(n.ker.coords.rows(), 1);
    assert_eq!(n.psi1.rows(), 2);
    // The kernel is generated by a single nonzero row, reduced mod 2.
    let row = n.ker.coords.to_i64_rows().unwrap().remove(0);
    assert!(row.iter().all(|&x| x == 0 || x == 1) && row.contains(&1));
}

#[test]
fn cover_of_elementary_abelian_eight() {
    let b = Budget::default();
    let r = catalog().cover("8T3", &b).unwrap().unwrap();
    let c = r.cover.unwrap();
    assert_eq!(c.group.order(), 64);
    let th = c.preimage(&r.group.stabilizer(1).unwrap());
    assert_eq!(th.structure_name(), "C2 x C2 x C2");
    let ob = Obstruction::new(&c.group, Some(&th)).unwrap();
    assert_eq!(ob.n().ker.invariants, [2u64, 2, 2]);
    assert!(ob.dnr().is_trivial());

    let lat = c.group.subgroup_lattice(&b).unwrap();
    assert_eq!(lat.len(), 317);
    let mut dr_classes: Vec<(ObstructionPart, usize)> = Vec::new();
    for s in &lat.subgroups {
        let dr = ob.dr(s);
        match dr_classes.iter_mut().find(|(d, _)| *d == dr) {
            Some(e) => e.1 += 1,
            None => dr_classes.push((dr, 1)),
        }
    }
    let mut sizes: Vec<(usize, usize)> = dr_classes
        .iter()
        .map(|(d, n)| (d.invariants.len(), *n))
        .collect();
    sizes.sort();
    assert_eq!(
        sizes,
        [(0, 213), (1, 1), (1, 5), (1, 5), (1, 5), (1, 29), (1, 29), (1, 29), (3, 1)]
    );
    // The only decomposition group killing the obstruction maps onto G.
    let full: Vec<&PermGroup> = lat
        .subgroups
        .iter()
        .filter(|s| ob.dr(s).invariants.len() == 3)
        .collect();
    assert_eq!(full.len(), 1);
    assert_eq!(c.epi.image(full[0]).order(), 8);
    let images = collected(
        lat.subgroups
            .iter()
            .filter(|s| ob.dr(s).is_trivial())
            .map(|s| c.epi.image(s).structure_name()),
    );
    assert_eq!(images, pairs(&[("1", 16), ("C2", 197)]));
}

#[test]
fn psl_2_13_parts() {
    let g = catalog_get("14T30").unwrap();
    assert_eq!(g.order(), 1092);
    let ob = Obstruction::new(&g, None).unwrap();
    assert_eq!(ob.ambient(), &[6u64]);
    assert_eq!(ob.n().ker.invariants, [6u64]);
    let d = ob.dnr();
    assert_eq!(d.invariants, [3u64]);
    assert!(d.is_subgroup_of(&ob.n().ker));
}
