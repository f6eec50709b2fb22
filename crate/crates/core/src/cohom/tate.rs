//! Tate cohomology in degrees −1 and 0, and the flabby/coflabby predicates.

use super::{h1_with, CohomologyGroup, H1Method};
use crate::budget::Budget;
use crate::error::Result;
use crate::glat::GLattice;
use crate::intlat::{integer_kernel, solve_left, quotient_invariants, IntMat};
use crate::permgrp::PermGroup;

fn restricted(k: &PermGroup, m: &GLattice) -> Result<GLattice> {
    if k == m.group() && k.generators() == m.group().generators() {
        Ok(m.clone())
    } else {
        m.restrict(k)
    }
}

/// `N_K = Σ_{k∈K} ρ(k)`
fn norm_matrix(m: &GLattice) -> IntMat {
    let r = m.rank();
    let mut n = IntMat::zeros(r, r);
    for i in 0..m.group().order() {
        n = n.add(&m.matrix_idx(i));
    }
    n
}

/// `L / S` for sublattices `S ⊆ L` given by row bases (`L` a basis).
fn sublattice_quotient(l: &IntMat, s: &IntMat, ambient: &str) -> CohomologyGroup {
    if l.rows() == 0 {
        return CohomologyGroup::new(Default::default(), ambient, l.cols());
    }
    let x = if s.rows() == 0 {
        IntMat::zeros(0, l.rows())
    } else {
        solve_left(l, s).expect("sublattice")
    };
    let (inv, free) = quotient_invariants(l.rows(), &x);
    debug_assert_eq!(free, 0, "Tate groups are finite");
    CohomologyGroup::new(inv, ambient, l.cols())
}

/// `Ĥ⁻¹(K, M) = ker N_K / I_K·M`.
pub fn tate_hminus1(k: &PermGroup, m: &GLattice) -> Result<CohomologyGroup> {
    let mk = restricted(k, m)?;
    let r = mk.rank();
    let ker = integer_kernel(&norm_matrix(&mk));
    let id = IntMat::identity(r);
    let mut im = IntMat::zeros(0, r);
    for a in mk.generator_matrices() {
        im = im.stack(&a.sub(&id));
    }
    Ok(sublattice_quotient(&ker, &im, "kernel of the norm"))
}

/// `Ĥ⁰(K, M) = M^K / N_K·M`.
pub fn tate_h0(k: &PermGroup, m: &GLattice) -> Result<CohomologyGroup> {
    let mk = restricted(k, m)?;
    let fixed = mk.fixed_sublattice(k);
    let norms = norm_matrix(&mk);
    Ok(sublattice_quotient(&fixed, &norms, "fixed sublattice"))
}

/// `Ĥ⁻¹(K, M) = 0` for every subgroup `K` (class representatives suffice).
pub fn is_flabby(m: &GLattice, budget: &Budget) -> Result<bool> {
    for k in m.group().subgroup_class_reps(budget)? {
        if !tate_hminus1(&k, m)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `H¹(K, M) = 0` for every subgroup `K` (class representatives suffice).
pub fn is_coflabby(m: &GLattice, budget: &Budget) -> Result<bool> {
    for k in m.group().subgroup_class_reps(budget)? {
        if !h1_with(&k, m, H1Method::Saturation)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::permutation_lattice;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_strings(n, gens).unwrap()
    }

    #[test]
    fn sign_and_trivial() {
        let c2 = grp(2, &["(1,2)"]);
        let sign = GLattice::new(c2.clone(), vec![IntMat::from_rows(&[[-1]])]).unwrap();
        assert_eq!(tate_hminus1(&c2, &sign).unwrap().invariants, [2u64]);
        let triv = GLattice::trivial(&c2, 1);
        assert_eq!(tate_h0(&c2, &triv).unwrap().invariants, [2u64]);
        assert!(!is_flabby(&sign, &Budget::default()).unwrap());
    }

    #[test]
    fn permutation_lattices_are_flabby_and_coflabby() {
        let s3 = grp(3, &["(1,2)", "(1,2,3)"]);
        let b = Budget::default();
        for h in s3.all_subgroups(&b).unwrap() {
            let p = permutation_lattice(&s3, &h).unwrap();
            assert!(is_flabby(&p, &b).unwrap());
            assert!(is_coflabby(&p, &b).unwrap());
        }
    }
}
