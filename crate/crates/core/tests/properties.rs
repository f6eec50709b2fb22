//! Randomized invariants across the integer-lattice, group, cohomology and
//! obstruction layers.

use proptest::prelude::*;

use tori_core::catalog::catalog_get;
use tori_core::cohom::{
    coboundary, h1_with, restrict_cochain, tate_hminus1, H1Method,
};
use tori_core::flabby::{flabby_resolution_with, FlabbyOptions};
use tori_core::glat::{norm1_lattice, permutation_lattice, GLattice};
use tori_core::hnp::Obstruction;
use tori_core::intlat::{
    hnf, lattice_contains, lattice_intersection, quotient_invariants, snf, AbInvariants, Int,
    IntMat,
};
use tori_core::permgrp::{double_coset_elements, double_cosets, FinAbStructure, PermGroup};
use tori_core::Budget;

/// Transitive groups of order at most 24 and degree at most 8.
const SMALL: &[&str] = &[
    "2T1", "3T1", "3T2", "4T1", "4T2", "4T3", "4T4", "4T5", "5T1", "5T2", "5T3", "6T1", "6T2",
    "6T3", "6T4", "6T5", "6T6", "6T7", "6T8", "7T1", "7T2", "7T3", "8T1", "8T2", "8T3", "8T4",
    "8T5", "8T6", "8T7", "8T8", "8T12", "8T13", "8T14",
];

fn group(label: &str) -> PermGroup {
    catalog_get(label).unwrap()
}

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMat> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(|x| x.to_vec()).collect();
            IntMat::from_rows(&rows)
        })
    })
}

fn square(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMat> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(n).map(|x| x.to_vec()).collect();
            IntMat::from_rows(&rows)
        })
    })
}

/// A unimodular matrix from a word in elementary operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMat {
    let mut u = IntMat::identity(n);
    for &(a, b, q) in ops {
        let (a, b) = (a % n, b % n);
        if a != b {
            u.add_row_multiple(a, b, &Int::from(q));
        } else {
            u.negate_row(a);
        }
    }
    u
}

fn conjugate_lattice(m: &GLattice, u: &IntMat) -> GLattice {
    let ui = u.unimodular_inverse().unwrap();
    let mats = m.generator_matrices().iter().map(|a| u.mul(a).mul(&ui)).collect();
    GLattice::new(m.group().clone(), mats).unwrap()
}

/// A lattice built from `J`, permutation lattices, duals and sums.
fn lattice_from(g: &PermGroup, choice: u8, sub: usize) -> GLattice {
    let b = Budget::default();
    let subs = g.all_subgroups(&b).unwrap();
    let h = &subs[sub % subs.len()];
    let j = norm1_lattice(g).unwrap();
    match choice % 5 {
        0 => j,
        1 => j.dual(),
        2 => permutation_lattice(g, h).unwrap(),
        3 => j.direct_sum(&GLattice::trivial(g, 1)).unwrap(),
        _ => {
            let p = permutation_lattice(g, h).unwrap();
            if p.rank() + j.rank() <= 12 {
                j.dual().direct_sum(&p).unwrap()
            } else {
                j.dual()
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_reconstructs(a in matrix(5, 9)) {
        let d = snf(&a);
        prop_assert_eq!(d.u.mul(&a).mul(&d.v), d.s.clone());
        prop_assert!(d.u.is_unimodular() && d.v.is_unimodular());
        let diag = d.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                prop_assert!(w[0].divides(&w[1]));
            }
        }
    }

    #[test]
    fn snf_product_is_determinant(a in square(4, 6)) {
        let det = a.det();
        let prod = snf(&a).diagonal().iter().fold(Int::ONE, |acc, x| &acc * x);
        if det.is_zero() {
            prop_assert!(snf(&a).rank() < a.rows());
        } else {
            prop_assert_eq!(prod.abs(), det.abs());
        }
    }

    #[test]
    fn hnf_is_idempotent(a in matrix(5, 9)) {
        let h = hnf(&a);
        prop_assert_eq!(hnf(&h.h).h, h.h.clone());
        let ua = h.u.mul(&a);
        prop_assert_eq!(ua.select_rows(&(0..h.rank).collect::<Vec<_>>()), h.h.clone());
        prop_assert!((h.rank..ua.rows()).all(|i| ua.row(i).iter().all(Int::is_zero)));
        prop_assert!(h.u.is_unimodular());
    }

    #[test]
    fn quotient_order_is_determinant(a in square(4, 5)) {
        let det = a.det();
        prop_assume!(!det.is_zero());
        let (inv, free) = quotient_invariants(a.rows(), &a);
        prop_assert_eq!(free, 0);
        prop_assert_eq!(Int::from(inv.order() as i64), det.abs());
    }

    #[test]
    fn intersection_matches_enumeration(
        a in prop::collection::vec(-3i64..=3, 6),
        b in prop::collection::vec(-3i64..=3, 6),
    ) {
        let l1 = IntMat::from_rows(&[&a[..3], &a[3..]]);
        let l2 = IntMat::from_rows(&[&b[..3], &b[3..]]);
        let meet = lattice_intersection(&l1, &l2).unwrap();
        for x in -5i64..=5 {
            for y in -5i64..=5 {
                for z in -5i64..=5 {
                    let v = IntMat::from_rows(&[[x, y, z]]);
                    let both = lattice_contains(&l1, &v) && lattice_contains(&l2, &v);
                    prop_assert_eq!(both, lattice_contains(&meet, &v));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn orbit_stabilizer(label in prop::sample::select(SMALL), p in 0usize..8) {
        let g = group(label);
        let p = p % g.degree();
        let orbit = g.orbit(p).len();
        prop_assert_eq!(g.order(), orbit * g.stabilizer(p + 1).unwrap().order());
    }

    #[test]
    fn double_cosets_partition(label in prop::sample::select(SMALL), i in 0usize..100, j in 0usize..100) {
        let g = group(label);
        let subs = g.all_subgroups(&Budget::default()).unwrap();
        let h = &subs[i % subs.len()];
        let k = &subs[j % subs.len()];
        let mut all = Vec::new();
        for x in double_cosets(&g, h, k) {
            all.extend(double_coset_elements(h, &x, k));
        }
        let total = all.len();
        all.sort();
        all.dedup();
        prop_assert_eq!(total, g.order());
        prop_assert_eq!(all.len(), g.order());
    }

    #[test]
    fn abelianization_is_a_homomorphism(label in prop::sample::select(SMALL), pairs in prop::collection::vec((0usize..1000, 0usize..1000), 100)) {
        let g = group(label);
        let ab = FinAbStructure::new(&g);
        prop_assert_eq!(ab.invariants().order() as usize * ab.derived().order(), g.order());
        let inv = ab.invariants().clone();
        for (a, b) in pairs {
            let x = g.element(a % g.order());
            let y = g.element(b % g.order());
            let lhs = ab.project(&(x * y));
            let rhs: Vec<Int> = ab.project(x).iter().zip(ab.project(y)).zip(inv.as_slice())
                .map(|((p, q), &d)| (p + &q).rem_euclid(&Int::from(d as i64)))
                .collect();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lattice_action_is_a_homomorphism(label in prop::sample::select(SMALL), choice in 0u8..5, sub in 0usize..100, a in 0usize..1000, b in 0usize..1000) {
        let g = group(label);
        let m = lattice_from(&g, choice, sub);
        let (x, y) = (g.element(a % g.order()), g.element(b % g.order()));
        prop_assert_eq!(m.matrix(x).mul(&m.matrix(y)), m.matrix(&(x * y)));
        let dd = m.dual().dual();
        prop_assert_eq!(dd.generator_matrices(), m.generator_matrices());
    }

    #[test]
    fn fixed_rank_counts_orbits(label in prop::sample::select(SMALL), i in 0usize..100, j in 0usize..100) {
        let g = group(label);
        let subs = g.all_subgroups(&Budget::default()).unwrap();
        let (h, k) = (&subs[i % subs.len()], &subs[j % subs.len()]);
        let p = permutation_lattice(&g, h).unwrap();
        let reps = h.right_coset_reps(&g);
        // K-orbits on right cosets Hg, counted directly.
        let mut seen = vec![false; reps.len()];
        let mut orbits = 0;
        let coset_of = |x: &tori_core::permgrp::Perm| reps.iter().position(|r| h.contains(&(x * &r.inverse()))).unwrap();
        for start in 0..reps.len() {
            if seen[start] {
                continue;
            }
            orbits += 1;
            for y in k.elements() {
                seen[coset_of(&(&reps[start] * y))] = true;
            }
        }
        prop_assert_eq!(p.fixed_sublattice(k).rows(), orbits);
    }

    #[test]
    fn h1_methods_agree(label in prop::sample::select(SMALL), choice in 0u8..5, sub in 0usize..100, ops in prop::collection::vec((0usize..12, 0usize..12, -2i64..=2), 0..12)) {
        let g = group(label);
        let m = lattice_from(&g, choice, sub);
        prop_assume!(m.rank() <= 12);
        let m = conjugate_lattice(&m, &unimodular(m.rank(), &ops));
        let a = h1_with(&g, &m, H1Method::CayleyPropagation).unwrap().invariants;
        let b = h1_with(&g, &m, H1Method::AllPairs).unwrap().invariants;
        let c = h1_with(&g, &m, H1Method::Saturation).unwrap().invariants;
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
    }

    #[test]
    fn tate_minus_one_ignores_permutation_summands(label in prop::sample::select(SMALL), sub in 0usize..100, k in 0usize..100) {
        let g = group(label);
        let subs = g.all_subgroups(&Budget::default()).unwrap();
        let j = norm1_lattice(&g).unwrap();
        let p = permutation_lattice(&g, &subs[sub % subs.len()]).unwrap();
        let k = &subs[k % subs.len()];
        let with = tate_hminus1(k, &j.direct_sum(&p).unwrap()).unwrap().invariants;
        prop_assert_eq!(with, tate_hminus1(k, &j).unwrap().invariants);
    }

    #[test]
    fn restriction_commutes_with_coboundary(label in prop::sample::select(&SMALL[..15]), n in 0usize..3, k in 0usize..100, seed in prop::collection::vec(-3i64..=3, 16)) {
        let g = group(label);
        let subs = g.all_subgroups(&Budget::default()).unwrap();
        let k = &subs[k % subs.len()];
        let m = norm1_lattice(&g).unwrap();
        let r = m.rank();
        let len = (g.order() - 1).pow(n as u32) * r;
        let f: Vec<Int> = (0..len).map(|i| Int::from(seed[i % seed.len()] * (i as i64 % 3 - 1))).collect();
        let df = coboundary(&m, n, &f);
        let lhs = restrict_cochain(&g, k, n + 1, r, &df);
        let mk = m.restrict(k).unwrap();
        let rhs = coboundary(&mk, n, &restrict_cochain(&g, k, n, r, &f));
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn flabby_class_is_resolution_independent(label in prop::sample::select(SMALL), seed in any::<u64>(), reverse in any::<bool>(), reduce in any::<bool>()) {
        let g = group(label);
        prop_assume!(g.degree() >= 2);
        let j = norm1_lattice(&g).unwrap();
        let b = Budget::default();
        let base = flabby_resolution_with(&j, &b, &FlabbyOptions::default()).unwrap();
        let other = flabby_resolution_with(&j, &b, &FlabbyOptions {
            reverse_classes: reverse,
            perturb_seed: Some(seed),
            reduce_rank: reduce,
        }).unwrap();
        for k in g.subgroup_class_reps(&b).unwrap() {
            let x = h1_with(&k, &base.flabby_part, H1Method::Saturation).unwrap().invariants;
            let y = h1_with(&k, &other.flabby_part, H1Method::Saturation).unwrap().invariants;
            prop_assert_eq!(x, y);
        }
        prop_assert_eq!(
            other.p_rank(),
            j.rank() + other.flabby_part.rank()
        );
    }

    #[test]
    fn dr_is_conjugation_invariant(label in prop::sample::select(SMALL), sub in 0usize..200, x in 0usize..1000) {
        let g = group(label);
        let subs = g.all_subgroups(&Budget::default()).unwrap();
        let gv = &subs[sub % subs.len()];
        let x = g.element(x % g.order());
        let ob = Obstruction::new(&g, None).unwrap();
        prop_assert_eq!(ob.dr(gv), ob.dr(&gv.conjugate(x)));
    }

    #[test]
    fn obstruction_coords_are_reduced(label in prop::sample::select(SMALL), sub in 0usize..200) {
        let g = group(label);
        let subs = g.all_subgroups(&Budget::default()).unwrap();
        let ob = Obstruction::new(&g, None).unwrap();
        for part in [ob.n().ker, ob.dnr(), ob.dr(&subs[sub % subs.len()])] {
            let amb: &AbInvariants = &part.ambient;
            for i in 0..part.coords.rows() {
                for (x, &d) in part.coords.row(i).iter().zip(amb.as_slice()) {
                    prop_assert!(!x.is_negative() && x < &Int::from(d as i64));
                }
            }
            let again = tori_core::hnp::ObstructionPart::from_generators(amb, &part.coords);
            prop_assert_eq!(&again.invariants, &part.invariants);
        }
    }
}
